//! Explicit formulas for the coloured-hill triangles `g_1..g_4`, `f_3`, the
//! mirror triangle `A`, Euler's Catalan formula, double factorials and
//! partial Bell polynomials.
//!
//! Every `(k / m) * ...` style prefactor is evaluated numerator first and
//! divided with [`exact_div`]; a remainder means the formula is wrong for
//! that cell and surfaces as [`crate::Error::InexactDivision`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binom, binomial, exact_div, factorial, ipow, sign};
use crate::error::{domain, Result};

fn check_cell(name: &str, n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n {
        return Err(domain(format!("{name} needs 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

/// `m!! = m (m-2) (m-4) ...`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(m: i64) -> Result<BigInt> {
    if m < -1 {
        return Err(domain(format!("double factorial of {m} is undefined")));
    }
    let mut acc = BigInt::one();
    let mut t = m;
    while t > 1 {
        acc *= t;
        t -= 2;
    }
    Ok(acc)
}

/// `g_2(n, k)` as the double-factorial sum
/// `2^(n-k)/n! * sum_j (-1)^(j-1) C(k, 2j-1) (2j-1)!! (2n-2j-1)!!`.
pub fn g2_dfact(n: usize, k: usize) -> Result<BigInt> {
    check_cell("g2_dfact", n, k)?;
    let (n_, k_) = (n as i64, k as i64);
    let mut sum = BigInt::zero();
    for j in 1..=(k_ + 1) / 2 {
        let term = binom(k_, 2 * j - 1) * double_factorial(2 * j - 1)? * double_factorial(2 * n_ - 2 * j - 1)?;
        sum += sign(j - 1) * term;
    }
    exact_div(ipow(2, (n - k) as u32) * sum, &factorial(n as u64), "g2_dfact")
}

/// `g_2(n, k) = k/(n-k) * C(2n-k-1, n)` for `k < n`, and `1` on the diagonal.
pub fn g2_closed(n: usize, k: usize) -> Result<BigInt> {
    check_cell("g2_closed", n, k)?;
    if k == n {
        return Ok(BigInt::one());
    }
    let num = BigInt::from(k) * binomial((2 * n - k - 1) as u64, n as u64);
    exact_div(num, &BigInt::from(n - k), "g2_closed")
}

/// Mirror of the `g_2` triangle: `A(n, k) = g_2(n, n-k+1)`.
pub fn mirror_a(n: usize, k: usize) -> Result<BigInt> {
    check_cell("mirror_a", n, k)?;
    g2_closed(n, n - k + 1)
}

/// `g_3(n, k) = k/n * C(2n, n-k)`.
pub fn g3_closed(n: usize, k: usize) -> Result<BigInt> {
    check_cell("g3_closed", n, k)?;
    let num = BigInt::from(k) * binomial(2 * n as u64, (n - k) as u64);
    exact_div(num, &BigInt::from(n), "g3_closed")
}

/// `f_3(n) = C(2n-1, n)`.
pub fn f3_closed(n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(domain("f3_closed needs n >= 1"));
    }
    Ok(binomial(2 * n as u64 - 1, n as u64))
}

/// `i (i+2) (i+4) ... (i+2n-2)`.
pub(crate) fn step_two_rising(i: i64, n: usize) -> BigInt {
    (0..n as i64).fold(BigInt::one(), |acc, j| acc * (i + 2 * j))
}

/// `g_4(n, k) = 2^(n-k)/n! * sum_{i=1}^{k} (-1)^(k-i) C(k, i) prod_{j<n} (i + 2j)`.
pub fn g4_explicit(n: usize, k: usize) -> Result<BigInt> {
    check_cell("g4_explicit", n, k)?;
    let k_ = k as i64;
    let sum: BigInt = (1..=k_)
        .map(|i| sign(k_ - i) * binom(k_, i) * step_two_rising(i, n))
        .sum();
    exact_div(ipow(2, (n - k) as u32) * sum, &factorial(n as u64), "g4_explicit")
}

/// `k/n * sum_{i=k}^{n} base^(i-k) C(i, k) C(2n, n-i)`.
fn shapiro_alternating(n: usize, k: usize, base: i64, context: &'static str) -> Result<BigInt> {
    let (n_, k_) = (n as i64, k as i64);
    let sum: BigInt = (k_..=n_)
        .map(|i| ipow(base, (i - k_) as u32) * binom(i, k_) * binom(2 * n_, n_ - i))
        .sum();
    exact_div(BigInt::from(k) * sum, &BigInt::from(n), context)
}

/// `g_1(n, k) = k/n * sum_{i=k}^{n} (-2)^(i-k) C(i, k) C(2n, n-i)`.
pub fn g1_explicit(n: usize, k: usize) -> Result<BigInt> {
    check_cell("g1_explicit", n, k)?;
    shapiro_alternating(n, k, -2, "g1_explicit")
}

/// `g_2(n, k) = k/n * sum_{i=k}^{n} (-1)^(i-k) C(i, k) C(2n, n-i)`.
pub fn g2_alternating(n: usize, k: usize) -> Result<BigInt> {
    check_cell("g2_alternating", n, k)?;
    shapiro_alternating(n, k, -1, "g2_alternating")
}

/// Euler's formula `C_{n-1} = 2^(n-1) (2n-3)!! / n!`, for `n > 1`.
pub fn euler_catalan(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(domain(format!("euler_catalan needs n > 1, got {n}")));
    }
    let num = ipow(2, (n - 1) as u32) * double_factorial(2 * n as i64 - 3)?;
    exact_div(num, &factorial(n as u64), "euler_catalan")
}

/// `g_2(n, k) = sum_{i=0}^{k-1} C(k, i) g_3(n-k, k-i)` for `k < n`; terms with
/// `k - i > n - k` vanish and are skipped.
pub fn g2_from_g3(n: usize, k: usize) -> Result<BigInt> {
    if k < 1 || k >= n {
        return Err(domain(format!("g2_from_g3 needs 1 <= k < n, got n = {n}, k = {k}")));
    }
    let rest = n - k;
    let mut sum = BigInt::zero();
    for i in 0..k {
        let parts = k - i;
        if parts > rest {
            continue;
        }
        sum += binomial(k as u64, i as u64) * g3_closed(rest, parts)?;
    }
    Ok(sum)
}

/// Arguments `x_1, x_2, ...` of a partial Bell polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellInput(Vec<BigInt>);

impl BellInput {
    pub fn new(x: Vec<BigInt>) -> Self {
        Self(x)
    }

    /// `(1! a(1), 2! a(2), ..., len! a(len))`.
    pub fn factorial_weighted(len: usize, mut a: impl FnMut(usize) -> BigInt) -> Self {
        let mut fact = BigInt::one();
        let mut x = Vec::with_capacity(len);
        for i in 1..=len {
            fact *= i;
            x.push(&fact * a(i));
        }
        Self(x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x_i`, one-based.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i - 1]
    }
}

/// All partial Bell polynomial values `B_{a,b}(x)` for `0 <= b <= a <= n`.
#[derive(Debug, Clone)]
pub struct BellTable {
    table: Vec<Vec<BigInt>>,
}

impl BellTable {
    /// Block recurrence `B_{a,b} = sum_{i=1}^{a-b+1} C(a-1, i-1) x_i B_{a-i,b-1}`,
    /// `B_{0,0} = 1`, `B_{a,0} = 0` for `a > 0`.
    pub fn new(n: usize, x: &BellInput) -> Result<Self> {
        if x.len() < n {
            return Err(domain(format!(
                "Bell table of size {n} needs {n} arguments, got {}",
                x.len()
            )));
        }
        let mut table = vec![vec![BigInt::zero(); n + 1]; n + 1];
        table[0][0] = BigInt::one();
        for a in 1..=n {
            for b in 1..=a {
                let v: BigInt = (1..=a - b + 1)
                    .map(|i| binomial(a as u64 - 1, i as u64 - 1) * x.get(i) * &table[a - i][b - 1])
                    .sum();
                table[a][b] = v;
            }
        }
        Ok(Self { table })
    }

    pub fn size(&self) -> usize {
        self.table.len() - 1
    }

    /// `B_{n,k}`; zero for `k > n`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.table[n][k].clone()
    }
}

/// The partial Bell polynomial `B_{n,k}(x_1, ..., x_{n-k+1})`.
pub fn partial_bell(n: usize, k: usize, x: &BellInput) -> Result<BigInt> {
    check_cell("partial_bell", n, k)?;
    let needed = n - k + 1;
    if x.len() < needed {
        return Err(domain(format!(
            "B_{{{n},{k}}} needs {needed} arguments, got {}",
            x.len()
        )));
    }
    // Only x_1..x_{n-k+1} can appear; pad so the table is well defined.
    let mut padded: Vec<BigInt> = (1..=needed).map(|i| x.get(i).clone()).collect();
    padded.resize(n, BigInt::zero());
    Ok(BellTable::new(n, &BellInput(padded))?.get(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1).unwrap(), int(1));
        assert_eq!(double_factorial(0).unwrap(), int(1));
        assert_eq!(double_factorial(5).unwrap(), int(15));
        assert_eq!(double_factorial(6).unwrap(), int(48));
        assert!(double_factorial(-2).is_err());
    }

    #[test]
    fn g2_cells() {
        for f in [g2_dfact, g2_closed, g2_alternating] {
            assert_eq!(f(3, 1).unwrap(), int(2));
            assert_eq!(f(3, 3).unwrap(), int(1));
            assert_eq!(f(4, 2).unwrap(), int(5));
            assert_eq!(f(9, 9).unwrap(), int(1));
        }
        assert_eq!(g2_from_g3(4, 2).unwrap(), int(5));
        assert_eq!(g2_from_g3(3, 1).unwrap(), int(2));
        assert_eq!(g2_from_g3(3, 2).unwrap(), int(2));
        assert!(g2_from_g3(3, 3).is_err());
    }

    #[test]
    fn mirror_cells() {
        assert_eq!(mirror_a(4, 3).unwrap(), int(5));
        assert_eq!(mirror_a(7, 1).unwrap(), int(1));
        assert_eq!(mirror_a(6, 6).unwrap(), int(42));
    }

    #[test]
    fn g3_and_f3() {
        assert_eq!(g3_closed(2, 1).unwrap(), int(2));
        assert_eq!(g3_closed(3, 1).unwrap(), int(5));
        assert_eq!(g3_closed(8, 8).unwrap(), int(1));
        assert_eq!(f3_closed(1).unwrap(), int(1));
        assert_eq!(f3_closed(2).unwrap(), int(3));
        assert_eq!(f3_closed(3).unwrap(), int(10));
        assert!(f3_closed(0).is_err());
    }

    #[test]
    fn g4_and_g1() {
        assert_eq!(g4_explicit(2, 1).unwrap(), int(3));
        assert_eq!(g4_explicit(2, 2).unwrap(), int(1));
        assert_eq!(g4_explicit(7, 7).unwrap(), int(1));
        assert_eq!(g1_explicit(3, 1).unwrap(), int(1));
        assert_eq!(g1_explicit(3, 2).unwrap(), int(0));
        assert_eq!(g1_explicit(3, 3).unwrap(), int(1));
    }

    #[test]
    fn euler() {
        assert_eq!(euler_catalan(2).unwrap(), int(1));
        assert_eq!(euler_catalan(3).unwrap(), int(2));
        assert_eq!(euler_catalan(6).unwrap(), int(42));
        assert!(euler_catalan(1).is_err());
    }

    #[test]
    fn out_of_domain_cells_rejected() {
        for f in [
            g1_explicit,
            g2_dfact,
            g2_closed,
            g2_alternating,
            g3_closed,
            g4_explicit,
            mirror_a,
        ] {
            assert!(f(3, 0).is_err());
            assert!(f(3, 4).is_err());
        }
    }

    #[test]
    fn bell_small_cases() {
        let x = BellInput::new(vec![int(2), int(3), int(5), int(7)]);
        assert_eq!(partial_bell(4, 4, &x).unwrap(), int(16));
        assert_eq!(partial_bell(4, 1, &x).unwrap(), int(7));
        assert_eq!(partial_bell(3, 2, &x).unwrap(), int(3 * 2 * 3));
        let short = BellInput::new(vec![int(1)]);
        assert!(partial_bell(3, 1, &short).is_err());
        // B_{3,3} only needs x_1.
        assert_eq!(partial_bell(3, 3, &short).unwrap(), int(1));
    }
}
