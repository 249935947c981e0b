//! The coloring-interval obstruction to two knots being symmetrically
//! related, the bound check for a single symmetric union, and the infinite
//! family of pairwise unrelated knots with a common determinant.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{is_prime, prime_factors};
use crate::codes::{connected_sum, torus_two_bridge, CodeError, ColoringCode, GaussCode};
use crate::coloring::{count_colorings, determinant, ColoringError};
use crate::symunion::{build_symmetric_union, MarkedDiagram, SymUnionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    SymUnion(#[from] SymUnionError),
    #[error("bound violated: {0}")]
    TheoremViolation(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Range `[col_p(J), col_p(J)^2 / p]` that `col_p(K)` must fall in for any
/// symmetric union `K` with partial knot `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringInterval {
    pub p: u64,
    pub lo: BigUint,
    pub hi: BigUint,
}

impl ColoringInterval {
    /// `lo` is a power of `p`, at least `p`, so `hi` is exact.
    pub fn from_count(p: u64, lo: BigUint) -> Self {
        let hi = &lo * &lo / p;
        ColoringInterval { p, lo, hi }
    }

    pub fn contains(&self, x: &BigUint) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_disjoint(&self, other: &ColoringInterval) -> bool {
        self.lo.clone().max(other.lo.clone()) > self.hi.clone().min(other.hi.clone())
    }
}

pub fn coloring_interval(code: &ColoringCode, p: u64) -> Result<ColoringInterval, ObstructError> {
    Ok(ColoringInterval::from_count(p, count_colorings(code, p)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub p: u64,
    pub col_partial: BigUint,
    pub col_union: BigUint,
    pub interval: ColoringInterval,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub det_partial: BigUint,
    pub det_union: BigUint,
    pub union_crossings: usize,
    pub rows: Vec<BoundRow>,
}

/// Builds the union of `partial` and checks `col_p(J) <= col_p(K) <= col_p(J)^2/p`
/// at each prime, together with `det(K) = det(J)^2`.
pub fn check_main_theorem(partial: &MarkedDiagram, primes: &[u64]) -> Result<TheoremReport, ObstructError> {
    let (base, _) = partial.base().to_coloring_code();
    let union = build_symmetric_union(partial)?;
    let det_partial = determinant(&base);
    let det_union = determinant(&union.code);
    if det_union != &det_partial * &det_partial {
        return Err(ObstructError::TheoremViolation(format!(
            "det(K) = {det_union} but det(J)^2 = {}",
            &det_partial * &det_partial
        )));
    }
    let mut rows = Vec::with_capacity(primes.len());
    for &p in primes {
        let interval = coloring_interval(&base, p)?;
        let col_union = count_colorings(&union.code, p)?;
        if !interval.contains(&col_union) {
            return Err(ObstructError::TheoremViolation(format!(
                "col_{p}(K) = {col_union} outside [{}, {}]",
                interval.lo, interval.hi
            )));
        }
        rows.push(BoundRow { p, col_partial: interval.lo.clone(), col_union, interval });
    }
    Ok(TheoremReport { det_partial, det_union, union_crossings: union.crossing_count(), rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    DetMismatch { d1: BigUint, d2: BigUint },
    IntervalDisjoint { p: u64, i1: ColoringInterval, i2: ColoringInterval },
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub outcome: Outcome,
    pub checked_primes: Vec<u64>,
}

impl ObstructionVerdict {
    pub fn is_conclusive(&self) -> bool {
        self.outcome != Outcome::Inconclusive
    }
}

/// Determinant and coloring counts of one knot, computed once and reused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotInvariants {
    pub det: BigUint,
    pub cols: BTreeMap<u64, BigUint>,
}

impl KnotInvariants {
    pub fn compute(code: &ColoringCode, primes: &[u64]) -> Result<Self, ObstructError> {
        let mut cols = BTreeMap::new();
        for &p in primes {
            cols.insert(p, count_colorings(code, p)?);
        }
        Ok(KnotInvariants { det: determinant(code), cols })
    }
}

/// Prime divisors of a determinant. Primes not dividing the determinant give
/// `col_p = p` for both knots, so their intervals both collapse to `[p, p]`
/// and can never separate.
pub fn default_primes(det: &BigUint) -> Vec<u64> {
    if det.is_zero() {
        return Vec::new();
    }
    prime_factors(det).0.into_iter().filter(|&p| p <= u32::MAX as u64).collect()
}

fn verdict_from(i1: &KnotInvariants, i2: &KnotInvariants, primes: &[u64]) -> ObstructionVerdict {
    if i1.det != i2.det {
        return ObstructionVerdict {
            outcome: Outcome::DetMismatch { d1: i1.det.clone(), d2: i2.det.clone() },
            checked_primes: Vec::new(),
        };
    }
    let mut checked = Vec::new();
    for &p in primes {
        checked.push(p);
        let a = ColoringInterval::from_count(p, i1.cols[&p].clone());
        let b = ColoringInterval::from_count(p, i2.cols[&p].clone());
        if a.is_disjoint(&b) {
            return ObstructionVerdict {
                outcome: Outcome::IntervalDisjoint { p, i1: a, i2: b },
                checked_primes: checked,
            };
        }
    }
    ObstructionVerdict { outcome: Outcome::Inconclusive, checked_primes: checked }
}

/// Tries to prove that no knot has symmetric union presentations with both
/// `j1` and `j2` as partial knots.
///
/// Different determinants settle it at once. Otherwise each prime is tried in
/// turn (by default the prime factors of the common determinant) and the
/// first one with disjoint coloring intervals is reported.
pub fn not_symmetrically_related(
    j1: &ColoringCode,
    j2: &ColoringCode,
    primes: Option<&[u64]>,
) -> Result<ObstructionVerdict, ObstructError> {
    let d1 = determinant(j1);
    let d2 = determinant(j2);
    if d1 != d2 {
        return Ok(ObstructionVerdict { outcome: Outcome::DetMismatch { d1, d2 }, checked_primes: Vec::new() });
    }
    let primes = match primes {
        Some(ps) => ps.to_vec(),
        None => default_primes(&d1),
    };
    let i1 = KnotInvariants::compute(j1, &primes)?;
    let i2 = KnotInvariants::compute(j2, &primes)?;
    Ok(verdict_from(&i1, &i2, &primes))
}

/// `T(p^4, 2)`.
pub fn family_j(p: u64) -> Result<GaussCode, ObstructError> {
    Ok(torus_two_bridge(p.pow(4) as usize)?)
}

/// Four copies of `T(p, 2)` summed.
pub fn family_k(p: u64) -> Result<GaussCode, ObstructError> {
    let t = torus_two_bridge(p as usize)?;
    let mut acc = t.clone();
    for _ in 1..4 {
        acc = connected_sum(&acc, &t, 0, 0)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    /// `x_i = 0` picks `J_{p_i}`, `x_i = 1` picks `K_{p_i}`.
    pub bits: Vec<u8>,
    pub crossings: usize,
    pub det: BigUint,
    pub cols: BTreeMap<u64, BigUint>,
}

#[derive(Debug, Clone)]
pub struct FamilyCertificate {
    pub primes: Vec<u64>,
    pub members: Vec<FamilyMember>,
    pub common_det: BigUint,
    /// Verdicts for member index pairs `(i, j)`, `i < j`, in lexicographic order.
    pub pairwise_verdicts: Vec<((usize, usize), ObstructionVerdict)>,
}

/// The `2^m` knots `#_i C_i` with `C_i` either `J_{p_i}` or `K_{p_i}`: all
/// share the determinant `∏ p_i^4`, and every pair is separated by a
/// coloring interval.
///
/// Each member is built as an explicit diagram and its determinant and
/// coloring counts are computed from it. The count at `p_i` is checked
/// against that of the summand `C_i` alone.
pub fn corollary_family(primes: &[u64]) -> Result<FamilyCertificate, ObstructError> {
    if primes.is_empty() {
        return Err(ObstructError::BadParameter("need at least one prime".into()));
    }
    if let Some(&p) = primes.iter().find(|&&p| p == 2 || !is_prime(p)) {
        return Err(ObstructError::BadParameter(format!("{p} is not an odd prime")));
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != primes.len() {
        return Err(ObstructError::BadParameter("primes must be distinct".into()));
    }
    let m = primes.len();
    if m > 16 {
        return Err(ObstructError::BadParameter("at most 16 primes".into()));
    }

    let mut summands = Vec::with_capacity(m);
    for &p in primes {
        let j = family_j(p)?;
        let k = family_k(p)?;
        let col_j = count_colorings(&j.to_coloring_code().0, p)?;
        let col_k = count_colorings(&k.to_coloring_code().0, p)?;
        summands.push([(j, col_j), (k, col_k)]);
    }

    let bit_tuples: Vec<Vec<u8>> =
        (0..1usize << m).map(|x| (0..m).map(|i| ((x >> (m - 1 - i)) & 1) as u8).collect()).collect();
    let build = |bits: &Vec<u8>| -> Result<FamilyMember, ObstructError> {
        let mut code = summands[0][bits[0] as usize].0.clone();
        for i in 1..m {
            code = connected_sum(&code, &summands[i][bits[i] as usize].0, 0, 0)?;
        }
        let (cc, _) = code.to_coloring_code();
        let inv = KnotInvariants::compute(&cc, primes)?;
        for (i, &p) in primes.iter().enumerate() {
            let expect = &summands[i][bits[i] as usize].1;
            if &inv.cols[&p] != expect {
                return Err(ObstructError::InternalInconsistency(format!(
                    "member {bits:?}: col_{p} = {} but its summand has {expect}",
                    inv.cols[&p]
                )));
            }
        }
        Ok(FamilyMember { bits: bits.clone(), crossings: cc.crossing_count(), det: inv.det, cols: inv.cols })
    };
    let members: Vec<FamilyMember> = std::thread::scope(|scope| {
        let handles: Vec<_> = bit_tuples.iter().map(|bits| scope.spawn(move || build(bits))).collect();
        handles.into_iter().map(|h| h.join().expect("member thread panicked")).collect::<Result<_, _>>()
    })?;

    let common_det = primes.iter().fold(BigUint::from(1u32), |acc, &p| acc * BigUint::from(p).pow(4));
    if let Some(bad) = members.iter().find(|mb| mb.det != common_det) {
        return Err(ObstructError::InternalInconsistency(format!(
            "member {:?} has determinant {}, expected {common_det}",
            bad.bits, bad.det
        )));
    }
    let check_primes = default_primes(&common_det);
    let mut pairwise_verdicts = Vec::new();
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            let ia = KnotInvariants { det: members[a].det.clone(), cols: members[a].cols.clone() };
            let ib = KnotInvariants { det: members[b].det.clone(), cols: members[b].cols.clone() };
            let verdict = verdict_from(&ia, &ib, &check_primes);
            if !verdict.is_conclusive() {
                return Err(ObstructError::InternalInconsistency(format!(
                    "members {:?} and {:?} are not separated",
                    members[a].bits, members[b].bits
                )));
            }
            pairwise_verdicts.push(((a, b), verdict));
        }
    }
    Ok(FamilyCertificate { primes: primes.to_vec(), members, common_det, pairwise_verdicts })
}
