//! Fox p-colorings and determinants of knot diagrams, symmetric unions built
//! from marked partial-knot diagrams, and the coloring-interval obstruction
//! to two knots arising as partial knots of a common symmetric union.

pub mod arith;
pub mod codes;
pub mod coloring;
pub mod obstruct;
pub mod regression;
pub mod symunion;
pub mod table;
pub mod zplinalg;
