//! Truncated power series with big-integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::sequence::Sequence;

/// Coefficients `c(0), ..., c(N)` of a power series truncated after `x^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPoly {
    coeffs: Vec<BigInt>,
}

impl SeriesPoly {
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    /// `sum_{i=1}^{order} f(i) x^i`; terms beyond the end of `f` are zero.
    pub fn from_sequence(f: &Sequence, order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, c) in coeffs.iter_mut().enumerate().skip(1) {
            if let Some(v) = f.get(i) {
                *c = v.clone();
            }
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul(&self, rhs: &SeriesPoly) -> SeriesPoly {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        SeriesPoly { coeffs: out }
    }

    /// `self^k` by binary exponentiation.
    pub fn pow(&self, mut k: u32) -> SeriesPoly {
        let mut acc = SeriesPoly::one(self.order());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// `[x^n] (sum_{i>=1} f(i) x^i)^k`.
pub fn series_power_coefficient(f: &Sequence, k: usize, n: usize) -> Result<BigInt> {
    if k < 1 || k > n || n > f.len() {
        return Err(domain(format!(
            "series_power_coefficient needs 1 <= k <= n <= {}, got k = {k}, n = {n}",
            f.len()
        )));
    }
    let series = SeriesPoly::from_sequence(f, n);
    Ok(series.pow(k as u32).coefficient(n).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::catalan_prefix;

    #[test]
    fn catalan_square_coefficient() {
        let c = catalan_prefix(6, 0);
        assert_eq!(series_power_coefficient(&c, 2, 3).unwrap(), BigInt::from(2));
        assert_eq!(series_power_coefficient(&c, 1, 5).unwrap(), c[5]);
        assert_eq!(series_power_coefficient(&c, 4, 4).unwrap(), BigInt::one());
    }

    #[test]
    fn out_of_range_rejected() {
        let c = catalan_prefix(4, 0);
        assert!(series_power_coefficient(&c, 0, 2).is_err());
        assert!(series_power_coefficient(&c, 3, 2).is_err());
        assert!(series_power_coefficient(&c, 1, 5).is_err());
    }

    #[test]
    fn geometric_series_square() {
        // (x + x^2 + ...)^2 has coefficient n - 1 at x^n.
        let ones = Sequence::from_fn("1", 10, |_| BigInt::one());
        let sq = SeriesPoly::from_sequence(&ones, 10).pow(2);
        for n in 2..=10 {
            assert_eq!(sq.coefficient(n), &BigInt::from(n - 1));
        }
        assert!(sq.coefficient(0).is_zero());
    }
}
