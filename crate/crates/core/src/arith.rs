//! Word-size prime utilities.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Modular inverse for prime `p` via Fermat.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

/// Distinct prime factors in increasing order.
///
/// Trial division handles small factors; a cofactor that fits in a `u64` is
/// split with Pollard rho. A cofactor wider than 64 bits that survives trial
/// division up to 2^20 is returned unfactored.
pub fn prime_factors(n: &BigUint) -> (Vec<u64>, Option<BigUint>) {
    let mut rest = n.clone();
    let mut found = Vec::new();
    if rest.is_zero() {
        return (found, None);
    }
    let mut d = 2u64;
    while rest.to_u64().is_none() && d < (1 << 20) {
        let big = BigUint::from(d);
        if (&rest % &big).is_zero() {
            found.push(d);
            while (&rest % &big).is_zero() {
                rest /= &big;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut leftover = None;
    match rest.to_u64() {
        Some(v) => factor_u64(v, &mut found),
        None if !rest.is_one() => leftover = Some(rest),
        None => {}
    }
    found.sort_unstable();
    found.dedup();
    (found, leftover)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(&BigUint::from(50625u32)).0, vec![3, 5]);
        assert_eq!(prime_factors(&BigUint::from(1u32)).0, Vec::<u64>::new());
        assert_eq!(prime_factors(&BigUint::from(27u32)).0, vec![3]);
        let big = BigUint::from(1_000_003u64) * BigUint::from(998_244_353u64);
        assert_eq!(prime_factors(&big).0, vec![1_000_003, 998_244_353]);
        let wide = BigUint::from(3u32).pow(50) * BigUint::from(7u32);
        assert_eq!(prime_factors(&wide), (vec![3, 7], None));
    }

    #[test]
    fn inverse() {
        for a in 1..13 {
            assert_eq!(a * inv_mod(a, 13) % 13, 1);
        }
    }
}
