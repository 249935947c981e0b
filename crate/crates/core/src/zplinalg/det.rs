use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::elim::{check_prime, reduce};
use super::{IntMatrix, LinAlgError};
use crate::arith::{inv_mod, is_prime};

fn check_square(m: &IntMatrix) -> Result<(), LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    Ok(())
}

/// Determinant of `m` reduced into `[0, p)`.
pub fn det_mod_p(m: &IntMatrix, p: u64) -> Result<u64, LinAlgError> {
    check_square(m)?;
    check_prime(p)?;
    let n = m.rows();
    let mut a = reduce(m, p);
    let mut det = 1u64;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| a[r][c] != 0) else {
            return Ok(0);
        };
        if r != c {
            a.swap(r, c);
            det = (p - det) % p;
        }
        let pivot = a[c][c];
        det = det * pivot % p;
        let inv = inv_mod(pivot, p);
        let (head, tail) = a.split_at_mut(c + 1);
        let pivot_row = &head[c];
        for row in tail.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = row[c] * inv % p;
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if y != 0 {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
    }
    Ok(det)
}

/// Descending primes below 2^31.
fn word_primes() -> impl Iterator<Item = u64> {
    (3..(1u64 << 31)).rev().step_by(2).filter(|&q| is_prime(q))
}

/// Exact determinant from residues modulo word-size primes.
///
/// Enough primes are taken that their product exceeds twice the Hadamard
/// bound, so the symmetric residue is the determinant itself.
pub fn det_integer(m: &IntMatrix) -> Result<BigInt, LinAlgError> {
    check_square(m)?;
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut log2_bound = 0.0f64;
    for i in 0..n {
        let ss: f64 = m.row(i).iter().map(|&x| (x as f64) * (x as f64)).sum();
        if ss == 0.0 {
            return Ok(BigInt::zero());
        }
        log2_bound += 0.5 * ss.log2();
    }
    // one bit for the sign, a few more to absorb float rounding
    let needed_bits = log2_bound.ceil() as u64 + 4;

    let mut residue = BigUint::zero();
    let mut modulus = BigUint::one();
    let mut bits = 0.0f64;
    for p in word_primes() {
        let r = det_mod_p(m, p)?;
        let m_mod_p = (&modulus % p).iter_u64_digits().next().unwrap_or(0);
        let x_mod_p = (&residue % p).iter_u64_digits().next().unwrap_or(0);
        let t = (r + p - x_mod_p) % p * inv_mod(m_mod_p, p) % p;
        residue += &modulus * t;
        modulus *= p;
        bits += (p as f64).log2();
        if bits >= needed_bits as f64 {
            break;
        }
    }
    let half = &modulus >> 1;
    let det = if residue > half { BigInt::from(residue) - BigInt::from(modulus) } else { BigInt::from(residue) };
    Ok(det)
}

fn det_bareiss(m: &IntMatrix) -> Result<BigInt, LinAlgError> {
    check_square(m)?;
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = m.to_rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// A way of computing exact integer determinants.
pub trait DeterminantStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn determinant(&self, m: &IntMatrix) -> Result<BigInt, LinAlgError>;
}

/// Multi-modular evaluation; see [`det_integer`].
pub struct CrtDeterminant;

impl DeterminantStrategy for CrtDeterminant {
    fn name(&self) -> &'static str {
        "crt"
    }

    fn determinant(&self, m: &IntMatrix) -> Result<BigInt, LinAlgError> {
        det_integer(m)
    }
}

/// Fraction-free elimination over big integers. Cubic in big-number
/// operations, so only practical for small matrices.
pub struct BareissDeterminant;

impl DeterminantStrategy for BareissDeterminant {
    fn name(&self) -> &'static str {
        "bareiss"
    }

    fn determinant(&self, m: &IntMatrix) -> Result<BigInt, LinAlgError> {
        det_bareiss(m)
    }
}

/// Named determinant strategies. The first registered one is the default.
pub struct DeterminantRegistry {
    strategies: Vec<Box<dyn DeterminantStrategy>>,
}

impl Default for DeterminantRegistry {
    fn default() -> Self {
        DeterminantRegistry { strategies: vec![Box::new(CrtDeterminant), Box::new(BareissDeterminant)] }
    }
}

impl DeterminantRegistry {
    pub fn register(&mut self, strategy: Box<dyn DeterminantStrategy>) {
        if let Some(slot) = self.strategies.iter_mut().find(|s| s.name() == strategy.name()) {
            *slot = strategy;
        } else {
            self.strategies.push(strategy);
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn DeterminantStrategy> {
        self.strategies.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn default_strategy(&self) -> &dyn DeterminantStrategy {
        self.strategies[0].as_ref()
    }
}

/// `|det|` as an unsigned integer.
pub(crate) fn abs_det(m: &IntMatrix) -> Result<BigUint, LinAlgError> {
    Ok(det_integer(m)?.abs().to_biguint().expect("absolute value is non-negative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn small_cases() {
        assert_eq!(det_integer(&m(vec![vec![1, -2], vec![-2, 1]])).unwrap(), BigInt::from(-3));
        assert_eq!(det_integer(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::one());
        assert_eq!(det_integer(&IntMatrix::zeros(3, 3)).unwrap(), BigInt::zero());
        assert_eq!(det_integer(&IntMatrix::zeros(2, 3)), Err(LinAlgError::NotSquare { rows: 2, cols: 3 }));
        let singular = m(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(det_integer(&singular).unwrap(), BigInt::zero());
    }

    #[test]
    fn strategies_agree() {
        let reg = DeterminantRegistry::default();
        assert_eq!(reg.names(), vec!["crt", "bareiss"]);
        let a = m(vec![vec![0, 3, -1, 2], vec![5, 0, 2, 2], vec![-4, 1, 0, 7], vec![2, 2, 2, 0]]);
        let expect = reg.get("bareiss").unwrap().determinant(&a).unwrap();
        assert_eq!(reg.default_strategy().determinant(&a).unwrap(), expect);
        assert_eq!(expect, BigInt::from(284));
    }

    #[test]
    fn huge_entries() {
        // entries near 2^40 force several primes and a large result
        let big = 1i64 << 40;
        let a = m(vec![vec![big, 1, 0], vec![3, big, 5], vec![0, 7, big]]);
        let via_bareiss = det_bareiss(&a).unwrap();
        assert_eq!(det_integer(&a).unwrap(), via_bareiss);
        assert!(via_bareiss.bits() > 100);
    }

    #[test]
    fn abs_det_is_unsigned() {
        assert_eq!(abs_det(&m(vec![vec![1, -2], vec![-2, 1]])).unwrap(), BigUint::from(3u32));
    }
}
