//! Binomial coefficients modulo a prime and the classification of characteristics `p`
//! for which every binomial coefficient `C(n, i)` is a unit.

use crate::exactla::is_prime;

/// Why a characteristic is or is not good for `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoodCase {
    CharZero,
    PGreaterN,
    /// `n + 1 = p^s · u` with `s ≥ 1` and `2 ≤ u ≤ p`.
    Exceptional {
        s: u32,
        u: u64,
    },
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoodPrimeVerdict {
    pub n: u64,
    pub p: u64,
    pub good: bool,
    pub case: GoodCase,
}

/// `C(n, i) mod p` by Lucas' congruence: the product of digitwise binomials in base `p`.
pub fn binom_mod(n: u64, i: u64, p: u64) -> u64 {
    debug_assert!(is_prime(p));
    if i > n {
        return 0;
    }
    let (mut n, mut i) = (n, i);
    let mut acc = 1u64;
    while n > 0 || i > 0 {
        let (nd, id) = (n % p, i % p);
        if id > nd {
            return 0;
        }
        acc = acc * small_binom_mod(nd, id, p) % p;
        n /= p;
        i /= p;
    }
    acc
}

/// `C(n, k) mod p` for `n < p` from the multiplicative formula.
fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for j in 0..k {
        num = num * ((n - j) % p) % p;
        den = den * ((j + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Classifies `p` (0 or prime) for `n`: good means `C(n, i) ≢ 0 (mod p)` for all `i`.
pub fn is_good(p: u64, n: u64) -> GoodPrimeVerdict {
    let verdict = |good, case| GoodPrimeVerdict { n, p, good, case };
    if p == 0 {
        return verdict(true, GoodCase::CharZero);
    }
    if p > n {
        return verdict(true, GoodCase::PGreaterN);
    }
    let m = n + 1;
    let mut ps = p;
    let mut s = 1;
    while ps <= m / 2 {
        if m.is_multiple_of(ps) {
            let u = m / ps;
            if (2..=p).contains(&u) {
                return verdict(true, GoodCase::Exceptional { s, u });
            }
        }
        ps *= p;
        s += 1;
    }
    verdict(false, GoodCase::None)
}

/// Direct check via Lucas over every `i`.
pub fn brute_is_good(p: u64, n: u64) -> bool {
    p == 0 || (0..=n).all(|i| binom_mod(n, i, p) != 0)
}

/// The unique prime `p ≤ n` that is good for `n`, if one exists.
pub fn exceptional_prime(n: u64) -> Option<u64> {
    (2..=n)
        .filter(|&p| is_prime(p))
        .find(|&p| is_good(p, n).good)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use std::vec;
    use std::vec::Vec;

    /// Exact binomials from Pascal's triangle, reduced at the end.
    fn pascal_rows(n_max: usize) -> Vec<Vec<BigUint>> {
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u32)]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = vec![BigUint::from(1u32); n + 1];
            for i in 1..n {
                row[i] = &prev[i - 1] + &prev[i];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(binom_mod(5, 2, 3), 1);
        assert_eq!(binom_mod(17, 0, 5), 1);
        assert_eq!(binom_mod(2, 1, 2), 0);
    }

    #[test]
    fn lucas_matches_exact_binomials() {
        let rows = pascal_rows(120);
        for p in [2u64, 3, 5, 7, 11, 13, 31] {
            for (n, row) in rows.iter().enumerate() {
                for (i, c) in row.iter().enumerate() {
                    let exact = (c % BigUint::from(p)).to_u64().unwrap();
                    assert_eq!(
                        binom_mod(n as u64, i as u64, p),
                        exact,
                        "C({n},{i}) mod {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(is_good(3, 5).case, GoodCase::Exceptional { s: 1, u: 2 });
        assert!(is_good(2, 7).good);
        assert!(!is_good(2, 2).good);
        assert_eq!(exceptional_prime(8), Some(3));
        assert_eq!(exceptional_prime(9), Some(5));
        assert_eq!(exceptional_prime(6), None);
        assert!(is_good(0, 100).good && is_good(101, 100).good);
    }

    #[test]
    fn classification_matches_exact_binomials() {
        let rows = pascal_rows(300);
        for p in (2u64..=47).filter(|&p| is_prime(p)) {
            for (n, row) in rows.iter().enumerate() {
                let oracle = row
                    .iter()
                    .all(|c| (c % BigUint::from(p)).to_u64().unwrap() != 0);
                assert_eq!(is_good(p, n as u64).good, oracle, "p={p} n={n}");
                assert_eq!(brute_is_good(p, n as u64), oracle);
            }
        }
    }
}
