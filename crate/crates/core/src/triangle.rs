//! Lower-triangular arrays: convolution triangles and powers of the Pascal matrix.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, ipow};
use crate::error::{domain, Result};
use crate::sequence::{Sequence, Tower};

/// A lower-triangular array `t(n, k)`, `1 <= k <= n <= order`, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    /// Builds a triangle from its rows; row `n` (1-based) must have exactly `n` entries.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(domain(format!(
                    "row {} of a triangle must have {} entries, got {}",
                    i + 1,
                    i + 1,
                    row.len()
                )));
            }
        }
        Ok(Self { rows })
    }

    pub fn try_from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Result<BigInt>) -> Result<Self> {
        let mut rows = Vec::with_capacity(order);
        for n in 1..=order {
            let row = (1..=n).map(|k| f(n, k)).collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(Self { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// `t(n, k)`, or `None` outside `1 <= k <= n <= order`.
    pub fn get(&self, n: usize, k: usize) -> Option<&BigInt> {
        if k == 0 || k > n {
            return None;
        }
        self.rows.get(n - 1).map(|row| &row[k - 1])
    }

    /// Row `n` as the slice `t(n, 1), ..., t(n, n)`.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row_sums(&self, label: impl Into<String>) -> Sequence {
        Sequence::from_fn(label, self.order(), |n| self.row(n).iter().sum())
    }

    pub fn column(&self, k: usize, label: impl Into<String>) -> Sequence {
        Sequence::new(
            label,
            self.rows
                .iter()
                .skip(k.saturating_sub(1))
                .map(|r| r[k - 1].clone())
                .collect(),
        )
    }

    /// Lower-triangular matrix product `(self * rhs)(n, k) = sum_{i=k}^{n} self(n, i) rhs(i, k)`.
    /// Both operands are truncated to the smaller order.
    pub fn mul(&self, rhs: &Triangle) -> Triangle {
        let order = self.order().min(rhs.order());
        let rows = (1..=order)
            .map(|n| {
                (1..=n)
                    .map(|k| (k..=n).map(|i| &self[(n, i)] * &rhs[(i, k)]).sum())
                    .collect()
            })
            .collect();
        Triangle { rows }
    }

    pub fn identity(order: usize) -> Triangle {
        let rows = (1..=order)
            .map(|n| {
                (1..=n)
                    .map(|k| if k == n { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        Triangle { rows }
    }
}

impl Index<(usize, usize)> for Triangle {
    type Output = BigInt;

    fn index(&self, (n, k): (usize, usize)) -> &BigInt {
        assert!(k >= 1 && k <= n, "triangle index ({n}, {k}) outside 1 <= k <= n");
        &self.rows[n - 1][k - 1]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The `k`-fold convolution triangle of `f`:
/// `t(n, k) = sum over compositions i_1 + ... + i_k = n of f(i_1) ... f(i_k)`.
pub fn convolution_triangle(f: &Sequence, order: usize) -> Result<Triangle> {
    f.check_transform_input(order)?;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(order);
    for n in 1..=order {
        let mut row = Vec::with_capacity(n);
        row.push(f[n].clone());
        for k in 2..=n {
            // t(n, k) = sum_i f(i) t(n - i, k - 1), with n - i >= k - 1.
            let v: BigInt = (1..=n - k + 1).map(|i| &f[i] * &rows[n - i - 1][k - 2]).sum();
            row.push(v);
        }
        rows.push(row);
    }
    Ok(Triangle { rows })
}

/// `L^p` for the order-`N` Pascal matrix `L`: entry `(i, j) = p^(i-j) C(i-1, j-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PascalPower {
    order: usize,
    exponent: i64,
}

impl PascalPower {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// Entry `(i, j)`, zero above the diagonal; `0^0 = 1` so `p = 0` gives the identity.
    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        if j == 0 || j > i {
            return BigInt::zero();
        }
        ipow(self.exponent, (i - j) as u32) * binomial(i as u64 - 1, j as u64 - 1)
    }

    pub fn to_triangle(&self) -> Triangle {
        let rows = (1..=self.order)
            .map(|i| (1..=i).map(|j| self.entry(i, j)).collect())
            .collect();
        Triangle { rows }
    }
}

pub fn pascal_power(order: usize, exponent: i64) -> Result<PascalPower> {
    if order < 1 {
        return Err(domain("pascal_power needs N >= 1"));
    }
    Ok(PascalPower { order, exponent })
}

/// `T * L^p`, computed from the closed form of `L^p` (negative `p` included).
pub fn triangle_times_pascal_power(t: &Triangle, p: i64) -> Triangle {
    if t.order() == 0 {
        return t.clone();
    }
    t.mul(
        &PascalPower {
            order: t.order(),
            exponent: p,
        }
        .to_triangle(),
    )
}

impl Tower {
    /// `G_m` for `1 <= m <= 4`, the convolution triangle of `f_{m-1}`.
    pub fn triangle(&self, m: usize) -> Result<Triangle> {
        if !(1..=Tower::DEPTH).contains(&m) {
            return Err(domain(format!("triangle index m = {m} outside 1..=4")));
        }
        convolution_triangle(self.level(m - 1)?, self.len())
    }
}
