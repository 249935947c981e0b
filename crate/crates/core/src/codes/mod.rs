//! Combinatorial knot diagram codes.
//!
//! A diagram is stored as a [`GaussCode`]: the cyclic sequence of passes met
//! while walking once around the knot, each tagged over or under. Crossing
//! signs and the planar embedding are not recorded. Every invariant computed
//! here only needs incidence data, and inputs are trusted to describe a
//! realizable classical diagram; nothing in this crate checks planarity.

mod coloring_code;
mod format;
mod ops;
mod pd;

use std::fmt;

use thiserror::Error;

pub use coloring_code::{ColoringCode, CrossingRecord, StrandId, StrandSpan, StrandTable};
pub use format::{CodeFormat, FormatRegistry, GaussFormat, PdFormat};
pub use ops::{connected_sum, insert_kink, mirror, splice, torus_two_bridge, Handedness};
pub use pd::parse_pd;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("crossing {0} must appear exactly once over and once under")]
    BadMultiplicity(usize),
    #[error("empty code")]
    Empty,
    #[error("malformed PD code: {0}")]
    MalformedPd(String),
    #[error("PD edge labels are not exactly 1..{expected}: {detail}")]
    EdgeLabelGap { expected: usize, detail: String },
    #[error("PD edges do not chain into a single cycle: {0}")]
    InconsistentTraversal(String),
    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

/// One visit of the traversal to a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pass {
    pub crossing: usize,
    pub role: Role,
}

impl Pass {
    pub fn over(crossing: usize) -> Self {
        Pass { crossing, role: Role::Over }
    }

    pub fn under(crossing: usize) -> Self {
        Pass { crossing, role: Role::Under }
    }

    pub fn is_under(&self) -> bool {
        self.role == Role::Under
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.role {
            Role::Over => write!(f, "O{}", self.crossing),
            Role::Under => write!(f, "U{}", self.crossing),
        }
    }
}

/// Cyclic over/under pass sequence of a one-component diagram.
///
/// Stored linearly with the basepoint before index 0. Crossing ids run over
/// `1..=r` and each id appears once over and once under. The 0-crossing
/// unknot is not representable; use the kink `O1U1`.
///
/// Gaps (edges between consecutive passes) are indexed so that gap `g` sits
/// immediately before pass `g`; gap 0 is the basepoint edge from the last pass
/// back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussCode {
    passes: Vec<Pass>,
}

impl GaussCode {
    /// Validates a pass sequence. Crossing ids must already be `1..=r`.
    pub fn new(passes: Vec<Pass>) -> Result<Self, CodeError> {
        if passes.is_empty() {
            return Err(CodeError::Empty);
        }
        let r = passes.len() / 2;
        let mut seen = vec![(0u8, 0u8); r + 1];
        for p in &passes {
            if p.crossing == 0 || p.crossing > r || !passes.len().is_multiple_of(2) {
                return Err(CodeError::BadMultiplicity(p.crossing));
            }
            match p.role {
                Role::Over => seen[p.crossing].0 += 1,
                Role::Under => seen[p.crossing].1 += 1,
            }
        }
        if let Some(c) = (1..=r).find(|&c| seen[c] != (1, 1)) {
            return Err(CodeError::BadMultiplicity(c));
        }
        Ok(GaussCode { passes })
    }

    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    pub fn crossing_count(&self) -> usize {
        self.passes.len() / 2
    }

    /// Number of passes, equal to the number of gaps.
    pub fn len(&self) -> usize {
        self.passes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passes.is_empty()
    }

    /// The standard unknot representative, a single kink.
    pub fn kink_unknot() -> Self {
        GaussCode { passes: vec![Pass::over(1), Pass::under(1)] }
    }

    /// Renumbers crossing ids to `1..=r` in first-appearance order.
    pub fn canonical_numbering(&self) -> GaussCode {
        GaussCode { passes: renumber(&self.passes) }
    }

    pub fn to_coloring_code(&self) -> (ColoringCode, StrandTable) {
        coloring_code::to_coloring_code(self)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.passes {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for GaussCode {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gauss(s)
    }
}

fn renumber(passes: &[Pass]) -> Vec<Pass> {
    let mut ids = std::collections::HashMap::new();
    passes
        .iter()
        .map(|p| {
            let next = ids.len() + 1;
            let id = *ids.entry(p.crossing).or_insert(next);
            Pass { crossing: id, role: p.role }
        })
        .collect()
}

/// Parses `O<k>`/`U<k>` tokens (case-insensitive). Tokens may be separated by
/// whitespace and/or commas, or written back to back as in `O1U2O3U1O2U3`.
/// Crossing ids are renumbered to `1..=r` in first-appearance order.
pub fn parse_gauss(text: &str) -> Result<GaussCode, CodeError> {
    let mut raw = Vec::new();
    for chunk in text.split(|c: char| c.is_whitespace() || c == ',') {
        if chunk.is_empty() {
            continue;
        }
        let mut rest = chunk;
        while !rest.is_empty() {
            let role = match rest.as_bytes()[0].to_ascii_uppercase() {
                b'O' => Role::Over,
                b'U' => Role::Under,
                _ => return Err(CodeError::MalformedToken(chunk.to_string())),
            };
            let digits = rest[1..].bytes().take_while(u8::is_ascii_digit).count();
            if digits == 0 {
                return Err(CodeError::MalformedToken(chunk.to_string()));
            }
            let crossing: usize =
                rest[1..1 + digits].parse().map_err(|_| CodeError::MalformedToken(chunk.to_string()))?;
            raw.push(Pass { crossing, role });
            rest = &rest[1 + digits..];
        }
    }
    if raw.is_empty() {
        return Err(CodeError::Empty);
    }
    // multiplicity is checked on the original labels so errors name them
    let mut counts: std::collections::BTreeMap<usize, (u32, u32)> = Default::default();
    for p in &raw {
        let e = counts.entry(p.crossing).or_default();
        match p.role {
            Role::Over => e.0 += 1,
            Role::Under => e.1 += 1,
        }
    }
    if let Some((&c, _)) = counts.iter().find(|(_, &v)| v != (1, 1)) {
        return Err(CodeError::BadMultiplicity(c));
    }
    GaussCode::new(renumber(&raw))
}
