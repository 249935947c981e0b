//! Planar-diagram (PD) notation.
//!
//! `PD[X[a,b,c,d],...]` with edges numbered `1..=2r` along the orientation.
//! In `X[a,b,c,d]` the under-strand enters on `a` and leaves on `c`. The
//! over-strand enters on `b` when `d ≡ b + 1 (mod 2r)` and on `d` otherwise,
//! which covers the wrap-around pair `(2r, 1)`. With a single crossing both
//! orientations satisfy that rule, so the over-strand is oriented to enter on
//! the edge the under-strand does not already enter on.

use std::collections::HashMap;

use super::{parse_gauss, CodeError, GaussCode, Pass, Role};

#[derive(Debug, Clone, Copy)]
struct Leg {
    crossing: usize,
    role: Role,
    outgoing: usize,
}

fn parse_quads(text: &str) -> Result<Vec<[usize; 4]>, CodeError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let malformed = || CodeError::MalformedPd(text.trim().to_string());
    let body = s.strip_prefix("PD[").and_then(|b| b.strip_suffix(']')).ok_or_else(malformed)?;
    let mut quads = Vec::new();
    let mut rest = body;
    while !rest.is_empty() {
        let inner = rest.strip_prefix("X[").ok_or_else(malformed)?;
        let close = inner.find(']').ok_or_else(malformed)?;
        let nums: Vec<usize> =
            inner[..close].split(',').map(|t| t.parse::<usize>().map_err(|_| malformed())).collect::<Result<_, _>>()?;
        let quad: [usize; 4] = nums.try_into().map_err(|_| malformed())?;
        quads.push(quad);
        rest = &inner[close + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            if r.is_empty() {
                return Err(malformed());
            }
            rest = r;
        }
    }
    if quads.is_empty() {
        return Err(CodeError::Empty);
    }
    Ok(quads)
}

pub fn parse_pd(text: &str) -> Result<GaussCode, CodeError> {
    let quads = parse_quads(text)?;
    let r = quads.len();
    let n = 2 * r;

    let mut uses = vec![0u32; n + 1];
    let mut stray = Vec::new();
    for q in &quads {
        for &e in q {
            if e == 0 || e > n {
                stray.push(e);
            } else {
                uses[e] += 1;
            }
        }
    }
    let missing: Vec<usize> = (1..=n).filter(|&e| uses[e] != 2).collect();
    if !stray.is_empty() || !missing.is_empty() {
        return Err(CodeError::EdgeLabelGap {
            expected: n,
            detail: format!("out of range {stray:?}, not used exactly twice {missing:?}"),
        });
    }

    let succ = |e: usize| e % n + 1;
    let mut legs: HashMap<usize, Vec<Leg>> = HashMap::new();
    for (i, &[a, b, c, d]) in quads.iter().enumerate() {
        legs.entry(a).or_default().push(Leg { crossing: i + 1, role: Role::Under, outgoing: c });
        let (inc, out) = if n == 2 {
            if a == b {
                (d, b)
            } else {
                (b, d)
            }
        } else if d == succ(b) {
            (b, d)
        } else {
            (d, b)
        };
        legs.entry(inc).or_default().push(Leg { crossing: i + 1, role: Role::Over, outgoing: out });
    }
    if let Some((e, _)) = legs.iter().find(|(_, v)| v.len() != 1) {
        return Err(CodeError::InconsistentTraversal(format!("edge {e} enters more than one crossing")));
    }

    let mut passes = Vec::with_capacity(n);
    let mut edge = 1;
    for _ in 0..n {
        let leg = legs
            .get(&edge)
            .map(|v| v[0])
            .ok_or_else(|| CodeError::InconsistentTraversal(format!("no crossing entered by edge {edge}")))?;
        passes.push(Pass { crossing: leg.crossing, role: leg.role });
        edge = leg.outgoing;
    }
    if edge != 1 {
        return Err(CodeError::InconsistentTraversal("edges do not close into one cycle".into()));
    }
    // round-trip through the text parser to get first-appearance numbering
    // and the multiplicity check in one place
    let text: String = passes.iter().map(|p| p.to_string()).collect();
    parse_gauss(&text).map_err(|_| CodeError::InconsistentTraversal("traversal skips a crossing".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let g = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(g.crossing_count(), 3);
        assert_eq!(g.to_string(), "U1O2U3O1U2O3");
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_pd(" PD[ X[1, 4, 2, 5], X[3,6,4,1] ,X[5,2,6,3] ]\n").unwrap();
        let b = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn single_kink() {
        let g = parse_pd("PD[X[1,1,2,2]]").unwrap();
        assert!(g.to_string() == "U1O1" || g.to_string() == "O1U1");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_pd("PD[X[1,4,2,5],X[3,6,4,1]]"), Err(CodeError::EdgeLabelGap { expected: 4, .. })));
        assert!(matches!(parse_pd("PD[X[1,4,2]]"), Err(CodeError::MalformedPd(_))));
        assert!(matches!(parse_pd("X[1,1,2,2]"), Err(CodeError::MalformedPd(_))));
        assert!(matches!(parse_pd("PD[]"), Err(CodeError::Empty)));
        // two disjoint kinks: labels fine, traversal splits
        assert!(matches!(parse_pd("PD[X[1,2,2,1],X[3,4,4,3]]"), Err(CodeError::InconsistentTraversal(_))));
    }
}
