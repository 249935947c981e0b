use super::{IntMatrix, LinAlgError};
use crate::arith::{inv_mod, is_prime};

/// Outcome of row reduction over `Z_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationResult {
    pub p: u64,
    pub rank: usize,
    pub nullity: usize,
    /// One vector per free column, entries in `[0, p)`.
    pub nullspace_basis: Vec<Vec<u64>>,
}

pub(crate) fn check_prime(p: u64) -> Result<(), LinAlgError> {
    if p > u32::MAX as u64 || !is_prime(p) {
        return Err(LinAlgError::NotPrime(p));
    }
    Ok(())
}

pub(crate) fn reduce(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    let pi = p as i64;
    (0..m.rows()).map(|i| m.row(i).iter().map(|&x| x.rem_euclid(pi) as u64).collect()).collect()
}

/// Forward elimination in place. Columns are scanned left to right and the
/// pivot is the topmost nonzero entry among the rows not yet used. With
/// `full`, entries above each pivot are cleared too, leaving reduced echelon
/// form. Returns the pivot column of each pivot row.
fn echelon(a: &mut [Vec<u64>], cols: usize, p: u64, full: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        if top == a.len() {
            break;
        }
        let Some(r) = (top..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(top, r);
        let inv = inv_mod(a[top][c], p);
        for x in &mut a[top][c..] {
            *x = *x * inv % p;
        }
        let (head, tail) = a.split_at_mut(top);
        let (pivot_row, below) = tail.split_first_mut().expect("pivot row exists");
        let clear = |row: &mut Vec<u64>| {
            let f = row[c];
            if f == 0 {
                return;
            }
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if y != 0 {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        };
        below.iter_mut().for_each(clear);
        if full {
            head.iter_mut().for_each(clear);
        }
        pivots.push(c);
        top += 1;
    }
    pivots
}

/// Rank, nullity and a null-space basis of `m` over `Z_p`.
///
/// `p = 2` is accepted. Knot determinants are odd, so a knot's coloring
/// matrix only ever has the trivial 2-colorings.
pub fn elim_mod_p(m: &IntMatrix, p: u64) -> Result<EliminationResult, LinAlgError> {
    check_prime(p)?;
    let cols = m.cols();
    let mut a = reduce(m, p);
    let pivots = echelon(&mut a, cols, p, true);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let nullspace_basis = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = (p - a[row][f]) % p;
            }
            v
        })
        .collect::<Vec<_>>();
    Ok(EliminationResult { p, rank: pivots.len(), nullity: nullspace_basis.len(), nullspace_basis })
}

/// Rank over `Z_p` without back-substitution or a basis.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize, LinAlgError> {
    check_prime(p)?;
    let mut a = reduce(m, p);
    Ok(echelon(&mut a, m.cols(), p, false).len())
}
