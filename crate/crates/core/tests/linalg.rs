use knotcolor::zplinalg::{det_integer, det_mod_p, rank_mod_p, DeterminantRegistry, IntMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Cofactor expansion along the first row, in i128.
fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut acc = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let sub: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let term = m[0][j] as i128 * cofactor_det(&sub);
        acc += if j % 2 == 0 { term } else { -term };
    }
    acc
}

fn square_of(n: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-range..=range, n), n)
}

fn square(max_n: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(move |n| square_of(n, range))
}

fn rect() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=7usize, 1..=7usize).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

proptest! {
    #[test]
    fn mod_p_matches_cofactor(rows in square(6, 20)) {
        let d = cofactor_det(&rows);
        let m = IntMatrix::from_rows(rows);
        for p in PRIMES {
            prop_assert_eq!(det_mod_p(&m, p).unwrap() as i128, d.rem_euclid(p as i128));
        }
    }

    #[test]
    fn every_strategy_matches_cofactor(rows in square(6, 1000)) {
        let d = BigInt::from(cofactor_det(&rows));
        let m = IntMatrix::from_rows(rows);
        let reg = DeterminantRegistry::default();
        for name in reg.names() {
            prop_assert_eq!(reg.get(name).unwrap().determinant(&m).unwrap(), d.clone(), "{}", name);
        }
        prop_assert_eq!(det_integer(&m).unwrap(), d);
    }

    #[test]
    fn rank_ignores_permutations(rows in rect(), seed in any::<u64>()) {
        let m = IntMatrix::from_rows(rows);
        let (r, c) = (m.rows(), m.cols());
        let rp: Vec<usize> = (0..r).map(|i| (i + seed as usize) % r).rev().collect();
        let cp: Vec<usize> = (0..c).map(|j| (j + (seed >> 8) as usize) % c).collect();
        let shuffled = m.permute_rows(&rp).permute_cols(&cp);
        for p in PRIMES {
            prop_assert_eq!(rank_mod_p(&m, p).unwrap(), rank_mod_p(&shuffled, p).unwrap());
            prop_assert_eq!(rank_mod_p(&m, p).unwrap(), rank_mod_p(&m.transpose(), p).unwrap());
        }
    }

    #[test]
    fn determinant_up_to_sign_under_permutation(
        (rows, rp, cp) in (1..=6usize).prop_flat_map(|n| (square_of(n, 9), perm(n), perm(n)))
    ) {
        let m = IntMatrix::from_rows(rows);
        let moved = m.permute_rows(&rp).permute_cols(&cp);
        let a = det_integer(&m).unwrap();
        let b = det_integer(&moved).unwrap();
        prop_assert!(a == b || a == -b);
    }
}

#[test]
fn rank_of_singular_examples() {
    let m = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
    assert_eq!(rank_mod_p(&m, 7).unwrap(), 2);
    // the rows agree mod 3
    let m = IntMatrix::from_rows(vec![vec![1, 1], vec![4, 7]]);
    assert_eq!(rank_mod_p(&m, 3).unwrap(), 1);
    assert_eq!(rank_mod_p(&m, 5).unwrap(), 2);
}
