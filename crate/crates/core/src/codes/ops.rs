use super::{CodeError, GaussCode, Pass, Role};

/// Pass order of an inserted Reidemeister I kink.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Handedness {
    /// Over then under.
    Positive,
    /// Under then over.
    Negative,
}

impl Handedness {
    pub fn from_sign(sign: i64) -> Self {
        if sign < 0 {
            Handedness::Negative
        } else {
            Handedness::Positive
        }
    }

    pub fn passes(self, crossing: usize) -> [Pass; 2] {
        match self {
            Handedness::Positive => [Pass::over(crossing), Pass::under(crossing)],
            Handedness::Negative => [Pass::under(crossing), Pass::over(crossing)],
        }
    }
}

/// Code of the mirror image.
///
/// Signs are not stored, so this is the identity on the pass sequence; it
/// exists so call sites that mean `-D` say so.
pub fn mirror(code: &GaussCode) -> GaussCode {
    code.clone()
}

fn check_gap(code: &GaussCode, gap: usize) -> Result<(), CodeError> {
    if gap >= code.len() {
        return Err(CodeError::IndexOutOfRange { index: gap, len: code.len() });
    }
    Ok(())
}

/// Connected sum cut at `gap1` of `c1` and `gap2` of `c2`.
///
/// Each code is rotated to start right after its cut and the two are
/// concatenated; `c2`'s crossing ids are shifted past `c1`'s.
pub fn connected_sum(c1: &GaussCode, c2: &GaussCode, gap1: usize, gap2: usize) -> Result<GaussCode, CodeError> {
    check_gap(c1, gap1)?;
    check_gap(c2, gap2)?;
    let shift = c1.crossing_count();
    let first = c1.passes().iter().cycle().skip(gap1).take(c1.len()).copied();
    let second = c2
        .passes()
        .iter()
        .cycle()
        .skip(gap2)
        .take(c2.len())
        .map(|p| Pass { crossing: p.crossing + shift, role: p.role });
    GaussCode::new(first.chain(second).collect())
}

/// Inserts a fresh crossing `r + 1` as two consecutive passes at `gap`.
pub fn insert_kink(code: &GaussCode, gap: usize, handedness: Handedness) -> Result<GaussCode, CodeError> {
    check_gap(code, gap)?;
    Ok(splice(code, &[(gap, handedness.passes(code.crossing_count() + 1).to_vec())])?.code)
}

/// Closed 2-braid diagram with `q` crossings: the `(q, 2)` torus knot.
pub fn torus_two_bridge(q: usize) -> Result<GaussCode, CodeError> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(CodeError::BadParameter(format!("torus_two_bridge needs odd q >= 3, got {q}")));
    }
    let passes = (0..2 * q)
        .map(|t| Pass { crossing: t % q + 1, role: if t % 2 == 0 { Role::Over } else { Role::Under } })
        .collect();
    GaussCode::new(passes)
}

/// Result of [`splice`]: the new code and, for each of its gaps, the gap of
/// the original code whose edge it subdivides.
#[derive(Debug, Clone)]
pub struct Spliced {
    pub code: GaussCode,
    pub gap_origin: Vec<usize>,
}

/// Inserts pass runs at gaps of `code`. Several runs at one gap are emitted in
/// the order given. Inserted crossing ids must continue `r + 1, r + 2, ...`.
pub fn splice(code: &GaussCode, insertions: &[(usize, Vec<Pass>)]) -> Result<Spliced, CodeError> {
    for (gap, _) in insertions {
        check_gap(code, *gap)?;
    }
    let mut passes = Vec::new();
    let mut gap_origin = Vec::new();
    for (q, pass) in code.passes().iter().enumerate() {
        for (_, run) in insertions.iter().filter(|(g, _)| *g == q) {
            for p in run {
                passes.push(*p);
                gap_origin.push(q);
            }
        }
        passes.push(*pass);
        gap_origin.push(q);
    }
    Ok(Spliced { code: GaussCode::new(passes)?, gap_origin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_gauss;

    fn trefoil() -> GaussCode {
        parse_gauss("O1U2O3U1O2U3").unwrap()
    }

    #[test]
    fn mirror_is_identity() {
        assert_eq!(mirror(&trefoil()), trefoil());
        assert_eq!(mirror(&GaussCode::kink_unknot()).to_string(), "O1U1");
    }

    #[test]
    fn connected_sum_shape() {
        let s = connected_sum(&trefoil(), &trefoil(), 0, 0).unwrap();
        assert_eq!(s.to_string(), "O1U2O3U1O2U3O4U5O6U4O5U6");
        let s = connected_sum(&trefoil(), &GaussCode::kink_unknot(), 2, 1).unwrap();
        assert_eq!(s.to_string(), "O3U1O2U3O1U2U4O4");
        let (cc, _) = s.to_coloring_code();
        assert_eq!(cc.component_count(), 1);
        assert!(matches!(
            connected_sum(&trefoil(), &trefoil(), 6, 0),
            Err(CodeError::IndexOutOfRange { index: 6, len: 6 })
        ));
    }

    #[test]
    fn kink_insertion() {
        let k = insert_kink(&trefoil(), 0, Handedness::Positive).unwrap();
        assert_eq!(k.to_string(), "O4U4O1U2O3U1O2U3");
        let k = insert_kink(&GaussCode::kink_unknot(), 0, Handedness::Negative).unwrap();
        assert_eq!(k.to_string(), "U2O2O1U1");
        assert!(insert_kink(&trefoil(), 7, Handedness::Positive).is_err());
    }

    #[test]
    fn torus_codes() {
        assert_eq!(torus_two_bridge(3).unwrap(), trefoil());
        assert_eq!(torus_two_bridge(5).unwrap().crossing_count(), 5);
        assert!(torus_two_bridge(4).is_err());
        assert!(torus_two_bridge(1).is_err());
    }

    #[test]
    fn splice_origins() {
        let s = splice(&trefoil(), &[(2, vec![Pass::over(4), Pass::under(4)])]).unwrap();
        assert_eq!(s.code.to_string(), "O1U2O4U4O3U1O2U3");
        assert_eq!(s.gap_origin, vec![0, 1, 2, 2, 2, 3, 4, 5]);
    }
}
