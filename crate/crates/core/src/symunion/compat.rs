use num_bigint::BigUint;

use super::{build_symmetric_union, Disk, MarkedDiagram, Marking, SymUnionDiagram, SymUnionError};
use crate::codes::GaussCode;
use crate::coloring::{check_coloring, coloring_basis, count_colorings, determinant, ColoringError, ColoringVector};

/// Colors each union strand like the base strand it descends from.
pub fn lift_into(u: &SymUnionDiagram, c: &ColoringVector) -> Result<ColoringVector, SymUnionError> {
    let colors = u
        .ancestors
        .iter()
        .map(|a| {
            let s = u.origin[a.0];
            c.colors.get(s.0).copied().ok_or_else(|| ColoringError::InvalidColoring {
                p: c.p,
                detail: format!("no color for base strand {s}"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let lifted = ColoringVector { p: c.p, colors };
    check_coloring(&u.code, &lifted)?;
    Ok(lifted)
}

/// Lifts a coloring of `m`'s base diagram to the union built from `m`.
pub fn lift_coloring(m: &MarkedDiagram, c: &ColoringVector) -> Result<ColoringVector, SymUnionError> {
    let (base, _) = m.base().to_coloring_code();
    check_coloring(&base, c)?;
    lift_into(&build_symmetric_union(m)?, c)
}

fn compatible_unchecked(u: &SymUnionDiagram, colors: &[u64]) -> bool {
    u.axis_crossings.iter().flatten().all(|&id| {
        let rec = u.code.crossings()[id - 1];
        let x = colors[rec.over.0];
        colors[rec.under_in.0] == x && colors[rec.under_out.0] == x
    })
}

/// Whether every axis crossing of `u` is monochromatic under `c`.
pub fn is_symmetrically_compatible(u: &SymUnionDiagram, c: &ColoringVector) -> Result<bool, SymUnionError> {
    check_coloring(&u.code, c)?;
    Ok(compatible_unchecked(u, &c.colors))
}

/// Checks every p-coloring of `u` for symmetric compatibility.
///
/// Colorings are generated from a null-space basis, so the budget bounds
/// `p^nullity` rather than `p^strands`. Returns the lexicographically
/// smallest incompatible coloring when one exists.
pub fn all_colorings_compatible(
    u: &SymUnionDiagram,
    p: u64,
    limit: u64,
) -> Result<(bool, Option<ColoringVector>), SymUnionError> {
    let basis = coloring_basis(&u.code, p)?;
    let needed = BigUint::from(p).pow(basis.len() as u32);
    if needed > BigUint::from(limit) {
        return Err(ColoringError::BudgetExceeded { needed, limit }.into());
    }
    let len = u.code.strand_count();
    let mut coeffs = vec![0u64; basis.len()];
    let mut witness: Option<Vec<u64>> = None;
    loop {
        let mut v = vec![0u64; len];
        for (c, b) in coeffs.iter().zip(&basis) {
            if *c != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x + c * y) % p;
                }
            }
        }
        if !compatible_unchecked(u, &v) && witness.as_ref().is_none_or(|w| v < *w) {
            witness = Some(v);
        }
        let Some(i) = coeffs.iter().position(|&c| c + 1 < p) else {
            break;
        };
        coeffs[i] += 1;
        coeffs[..i].iter_mut().for_each(|c| *c = 0);
    }
    Ok(match witness {
        Some(colors) => (false, Some(ColoringVector { p, colors })),
        None => (true, None),
    })
}

/// A marked diagram whose union carries an incompatible coloring.
#[derive(Debug, Clone)]
pub struct IncompatibleHit {
    pub diagram: MarkedDiagram,
    pub determinant: BigUint,
    pub col: BigUint,
    pub witness: ColoringVector,
}

/// Tries the ∞-disk at every gap of `base` with one twist disk of each value
/// in `twists` at every other gap, and reports the unions that have an
/// incompatible p-coloring.
pub fn search_incompatible(
    base: &GaussCode,
    p: u64,
    twists: &[i64],
    limit: u64,
) -> Result<Vec<IncompatibleHit>, SymUnionError> {
    let n = base.len();
    let mut hits = Vec::new();
    for g0 in 0..n {
        for g1 in (0..n).filter(|&g| g != g0) {
            for &t in twists {
                let diagram = MarkedDiagram::new(base.clone(), vec![Marking::infinity(g0), Marking::twist(t, g1)])?;
                let u = match build_symmetric_union(&diagram) {
                    Ok(u) => u,
                    Err(SymUnionError::NotAKnot { .. }) => continue,
                    Err(e) => return Err(e),
                };
                if let (false, Some(witness)) = all_colorings_compatible(&u, p, limit)? {
                    hits.push(IncompatibleHit {
                        determinant: determinant(&u.code),
                        col: count_colorings(&u.code, p)?,
                        diagram,
                        witness,
                    });
                }
            }
        }
    }
    debug_assert!(hits.iter().all(|h| h.diagram.markings().iter().any(|m| m.disk == Disk::Infinity)));
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{enumerate_colorings, DEFAULT_LIMIT};

    fn md(text: &str) -> MarkedDiagram {
        text.parse().unwrap()
    }

    #[test]
    fn lifts_are_valid_and_injective() {
        let m = md("O1U2O3U1O2U3; inf@0; twist(1)@2");
        let (base, _) = m.base().to_coloring_code();
        let u = build_symmetric_union(&m).unwrap();
        let mut lifted: Vec<ColoringVector> = enumerate_colorings(&base, 3, DEFAULT_LIMIT)
            .unwrap()
            .iter()
            .map(|c| lift_coloring(&m, c).unwrap())
            .collect();
        assert!(lifted.iter().all(|c| is_symmetrically_compatible(&u, c).unwrap()));
        lifted.sort();
        lifted.dedup();
        assert_eq!(lifted.len(), 9);
    }

    #[test]
    fn rejects_invalid_input() {
        let m = md("O1U2O3U1O2U3; inf@0; twist(1)@2");
        let bad = ColoringVector { p: 3, colors: vec![0, 1, 1] };
        assert!(lift_coloring(&m, &bad).is_err());
        let u = build_symmetric_union(&m).unwrap();
        let short = ColoringVector { p: 3, colors: vec![0; 3] };
        assert!(is_symmetrically_compatible(&u, &short).is_err());
    }

    #[test]
    fn six_one_is_compatible() {
        let u = build_symmetric_union(&md("O1U2O3U1O2U3; inf@0; twist(1)@2")).unwrap();
        assert_eq!(all_colorings_compatible(&u, 3, DEFAULT_LIMIT).unwrap(), (true, None));
        assert_eq!(all_colorings_compatible(&u, 5, DEFAULT_LIMIT).unwrap(), (true, None));
        assert!(all_colorings_compatible(&u, 3, 8).is_err());
    }

    #[test]
    fn normalized_lift_maps_back_to_input_strands() {
        let m = md("O1U2O3U1O2U3; inf@0; twist(3)@2");
        let (base, _) = m.base().to_coloring_code();
        for c in enumerate_colorings(&base, 3, DEFAULT_LIMIT).unwrap() {
            assert!(lift_coloring(&m, &c).is_ok());
        }
    }
}
