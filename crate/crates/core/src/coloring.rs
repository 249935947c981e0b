//! Fox p-colorings, coloring matrices and knot determinants.

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::codes::ColoringCode;
use crate::zplinalg::{elim_mod_p, rank_mod_p, IntMatrix, LinAlgError};

/// Default cap on the number of candidate vectors a brute-force scan may visit.
pub const DEFAULT_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("brute force needs {needed} candidates, budget is {limit}")]
    BudgetExceeded { needed: BigUint, limit: u64 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("vector is not a valid {p}-coloring: {detail}")]
    InvalidColoring { p: u64, detail: String },
}

impl From<LinAlgError> for ColoringError {
    fn from(e: LinAlgError) -> Self {
        match e {
            LinAlgError::NotPrime(p) => ColoringError::NotPrime(p),
            other => ColoringError::InternalInconsistency(other.to_string()),
        }
    }
}

/// Colors in `Z_p`, one per strand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoringVector {
    pub p: u64,
    pub colors: Vec<u64>,
}

impl ColoringVector {
    pub fn constant(p: u64, len: usize, color: u64) -> Self {
        ColoringVector { p, colors: vec![color % p; len] }
    }

    pub fn is_trivial(&self) -> bool {
        self.colors.windows(2).all(|w| w[0] == w[1])
    }
}

/// Row per crossing, column per strand: +1 for each under-incidence and -2
/// for the over-incidence, summed where they coincide.
pub fn coloring_matrix(code: &ColoringCode) -> IntMatrix {
    let r = code.crossing_count();
    let mut m = IntMatrix::zeros(r, r);
    for (i, c) in code.crossings().iter().enumerate() {
        m[(i, c.under_in.0)] += 1;
        m[(i, c.under_out.0)] += 1;
        m[(i, c.over.0)] -= 2;
    }
    m
}

/// Mod-`p` nullity of the coloring matrix.
pub fn coloring_nullity(code: &ColoringCode, p: u64) -> Result<usize, ColoringError> {
    let m = coloring_matrix(code);
    Ok(m.cols() - rank_mod_p(&m, p)?)
}

fn pow(p: u64, e: usize) -> BigUint {
    BigUint::from(p).pow(e as u32)
}

/// `col_p`: the number of p-colorings, `p^nullity`.
pub fn count_colorings(code: &ColoringCode, p: u64) -> Result<BigUint, ColoringError> {
    Ok(pow(p, coloring_nullity(code, p)?))
}

/// Whether `v` satisfies every crossing relation of `code`.
pub fn check_coloring(code: &ColoringCode, v: &ColoringVector) -> Result<(), ColoringError> {
    let p = v.p;
    if v.colors.len() != code.strand_count() {
        return Err(ColoringError::InvalidColoring {
            p,
            detail: format!("{} colors for {} strands", v.colors.len(), code.strand_count()),
        });
    }
    for (i, c) in code.crossings().iter().enumerate() {
        let a = |s: crate::codes::StrandId| v.colors[s.0] % p;
        if (a(c.under_in) + a(c.under_out)) % p != 2 * a(c.over) % p {
            return Err(ColoringError::InvalidColoring { p, detail: format!("relation fails at crossing {}", i + 1) });
        }
    }
    Ok(())
}

/// Every p-coloring by exhaustive search, in lexicographic order.
///
/// Strands are assigned in index order and each crossing is checked as soon
/// as its last strand is set. Fails if `p^r` exceeds `limit`.
pub fn enumerate_colorings(code: &ColoringCode, p: u64, limit: u64) -> Result<Vec<ColoringVector>, ColoringError> {
    crate::zplinalg::check_prime(p)?;
    let r = code.strand_count();
    let needed = pow(p, r);
    if needed > BigUint::from(limit) {
        return Err(ColoringError::BudgetExceeded { needed, limit });
    }
    let mut checks: Vec<Vec<[usize; 3]>> = vec![Vec::new(); r];
    for c in code.crossings() {
        let ids = [c.over.0, c.under_in.0, c.under_out.0];
        checks[*ids.iter().max().expect("three ids")].push(ids);
    }
    let mut out = Vec::new();
    let mut colors = vec![0u64; r];
    fn dfs(k: usize, p: u64, colors: &mut Vec<u64>, checks: &[Vec<[usize; 3]>], out: &mut Vec<ColoringVector>) {
        if k == colors.len() {
            out.push(ColoringVector { p, colors: colors.clone() });
            return;
        }
        for x in 0..p {
            colors[k] = x;
            let ok = checks[k].iter().all(|&[o, i, u]| (colors[i] + colors[u]) % p == 2 * colors[o] % p);
            if ok {
                dfs(k + 1, p, colors, checks, out);
            }
        }
    }
    dfs(0, p, &mut colors, &checks, &mut out);
    Ok(out)
}

/// Knot determinant: `|det|` of the coloring matrix with its last row and
/// column removed. A 1-crossing code has the empty minor, determinant 1.
pub fn determinant(code: &ColoringCode) -> BigUint {
    let m = coloring_matrix(code);
    let r = m.rows();
    crate::zplinalg::det::abs_det(&m.minor(r - 1, r - 1)).expect("minor is square")
}

/// `col_p > p`, cross-checked against `p | det`.
pub fn is_p_colorable(code: &ColoringCode, p: u64) -> Result<bool, ColoringError> {
    let by_count = coloring_nullity(code, p)? > 1;
    let by_det = (determinant(code) % p).is_zero();
    if by_count != by_det {
        return Err(ColoringError::InternalInconsistency(format!(
            "col_{p} > {p} is {by_count} but {p} | det is {by_det}"
        )));
    }
    Ok(by_count)
}

/// A way of counting p-colorings.
pub trait ColoringCounter: Send + Sync {
    fn name(&self) -> &'static str;
    fn count(&self, code: &ColoringCode, p: u64) -> Result<BigUint, ColoringError>;
}

/// Counts through the mod-p nullity.
pub struct NullityCounter;

impl ColoringCounter for NullityCounter {
    fn name(&self) -> &'static str {
        "nullity"
    }

    fn count(&self, code: &ColoringCode, p: u64) -> Result<BigUint, ColoringError> {
        count_colorings(code, p)
    }
}

/// Counts by exhaustive search under a candidate budget.
pub struct EnumerateCounter {
    pub limit: u64,
}

impl Default for EnumerateCounter {
    fn default() -> Self {
        EnumerateCounter { limit: DEFAULT_LIMIT }
    }
}

impl ColoringCounter for EnumerateCounter {
    fn name(&self) -> &'static str {
        "enumerate"
    }

    fn count(&self, code: &ColoringCode, p: u64) -> Result<BigUint, ColoringError> {
        Ok(BigUint::from(enumerate_colorings(code, p, self.limit)?.len()))
    }
}

pub struct CounterRegistry {
    counters: Vec<Box<dyn ColoringCounter>>,
}

impl Default for CounterRegistry {
    fn default() -> Self {
        CounterRegistry { counters: vec![Box::new(NullityCounter), Box::new(EnumerateCounter::default())] }
    }
}

impl CounterRegistry {
    pub fn register(&mut self, counter: Box<dyn ColoringCounter>) {
        if let Some(slot) = self.counters.iter_mut().find(|c| c.name() == counter.name()) {
            *slot = counter;
        } else {
            self.counters.push(counter);
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.counters.iter().map(|c| c.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn ColoringCounter> {
        self.counters.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }
}

/// Null-space basis of the coloring matrix mod `p`.
pub fn coloring_basis(code: &ColoringCode, p: u64) -> Result<Vec<Vec<u64>>, ColoringError> {
    Ok(elim_mod_p(&coloring_matrix(code), p)?.nullspace_basis)
}
