//! Small exact-integer helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by i + 1 here.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient over signed arguments; zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    binomial(n as u64, k as u64)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `base^exp` with `0^0 = 1`.
pub fn ipow(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `(-1)^e` as a small integer.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Divides `numerator` by `denominator`, failing unless the division is exact.
pub fn exact_div(numerator: BigInt, denominator: &BigInt, context: &'static str) -> Result<BigInt> {
    if denominator.is_zero() {
        return Err(Error::InexactDivision {
            context,
            numerator,
            denominator: denominator.clone(),
        });
    }
    let (q, r) = numerator.div_rem(denominator);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            context,
            numerator,
            denominator: denominator.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal_row(n: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for j in 1..row.len() {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        row
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        for n in 0..40u64 {
            let row = pascal_row(n as usize);
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize], "C({n},{k})");
            }
            assert!(binomial(n, n + 1).is_zero());
        }
    }

    #[test]
    fn signed_binomial_is_zero_off_range() {
        assert!(binom(-1, 0).is_zero());
        assert!(binom(4, -1).is_zero());
        assert!(binom(4, 5).is_zero());
        assert_eq!(binom(6, 2), BigInt::from(15));
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(ipow(0, 0), BigInt::one());
        assert!(ipow(0, 3).is_zero());
        assert_eq!(ipow(-2, 3), BigInt::from(-8));
    }

    #[test]
    fn exact_div_rejects_remainders() {
        assert_eq!(
            exact_div(BigInt::from(12), &BigInt::from(4), "t").unwrap(),
            BigInt::from(3)
        );
        assert!(matches!(
            exact_div(BigInt::from(13), &BigInt::from(4), "t"),
            Err(Error::InexactDivision { .. })
        ));
        assert!(exact_div(BigInt::from(1), &BigInt::zero(), "t").is_err());
    }
}
