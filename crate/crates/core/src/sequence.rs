//! One-indexed big-integer sequences and the invert transform.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{domain, Error, Result};

/// A finite prefix `f(1), ..., f(N)` of an arithmetic function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    label: String,
    values: Vec<BigInt>,
}

impl Sequence {
    pub fn new(label: impl Into<String>, values: Vec<BigInt>) -> Self {
        Self {
            label: label.into(),
            values,
        }
    }

    pub fn from_fn(label: impl Into<String>, len: usize, mut f: impl FnMut(usize) -> BigInt) -> Self {
        Self::new(label, (1..=len).map(&mut f).collect())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `f(n)` for `1 <= n <= len`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Returns a copy truncated to the first `len` terms.
    pub fn prefix(&self, len: usize) -> Sequence {
        Sequence::new(self.label.clone(), self.values[..len.min(self.len())].to_vec())
    }

    /// Checks the `f(1) = 1` and length preconditions shared by the transforms.
    pub(crate) fn check_transform_input(&self, needed: usize) -> Result<()> {
        if self.len() < needed {
            return Err(Error::TooShort {
                label: self.label.clone(),
                len: self.len(),
                needed,
            });
        }
        match self.values.first() {
            Some(head) if head.is_one() => Ok(()),
            Some(head) => Err(Error::BadHead {
                label: self.label.clone(),
                found: head.clone(),
            }),
            // Empty and nothing needed: vacuously fine.
            None => Ok(()),
        }
    }
}

impl Index<usize> for Sequence {
    type Output = BigInt;

    /// One-based indexing; panics on `0` or past the end.
    fn index(&self, n: usize) -> &BigInt {
        assert!(n >= 1, "sequences are 1-indexed");
        &self.values[n - 1]
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.label)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The Catalan number `C_n`, via `C_{i+1} = C_i * 2(2i+1) / (i+2)`.
pub fn catalan(n: u64) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..n {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c
}

/// `(C_shift, C_{shift+1}, ..., C_{shift+len-1})` as a one-indexed sequence.
pub fn catalan_prefix(len: usize, shift: u64) -> Sequence {
    let mut values = Vec::with_capacity(len);
    let mut c = catalan(shift);
    for i in shift..shift + len as u64 {
        values.push(c.clone());
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    Sequence::new(format!("C(n-1+{shift})"), values)
}

/// The Fine numbers `F_1, ..., F_N` (with `F_1 = 1`), recovered by inverting
/// the invert transform that carries them onto `C_0, C_1, ...`.
pub fn fine_sequence(len: usize) -> Result<Sequence> {
    if len < 1 {
        return Err(domain("fine_sequence needs N >= 1"));
    }
    let catalan = catalan_prefix(len, 0);
    let mut fine: Vec<BigInt> = Vec::with_capacity(len);
    for n in 1..=len {
        let mut v = catalan[n].clone();
        for i in 1..n {
            v -= &fine[i - 1] * &catalan[n - i];
        }
        fine.push(v);
    }
    Ok(Sequence::new("Fine", fine))
}

/// The invert transform `g(n) = f(n) + sum_{i<n} f(i) g(n-i)` of the first
/// `len` terms of `f`.
pub fn invert_transform(f: &Sequence, len: usize) -> Result<Sequence> {
    f.check_transform_input(len)?;
    let mut g: Vec<BigInt> = Vec::with_capacity(len);
    for n in 1..=len {
        let mut v = f[n].clone();
        for i in 1..n {
            v += &f[i] * &g[n - i - 1];
        }
        g.push(v);
    }
    Ok(Sequence::new(format!("invert({})", f.label()), g))
}

/// The Fine-to-Catalan invert-transform tower `f_0, ..., f_4`.
#[derive(Debug, Clone)]
pub struct Tower {
    levels: Vec<Sequence>,
}

impl Tower {
    pub const DEPTH: usize = 4;

    /// Builds `f_0 = Fine` and its first four invert transforms, each of length `len`.
    pub fn fine(len: usize) -> Result<Tower> {
        let mut levels = vec![fine_sequence(len)?];
        for m in 1..=Self::DEPTH {
            let mut next = invert_transform(&levels[m - 1], len)?;
            next.label = format!("f{m}");
            levels.push(next);
        }
        levels[0].label = "f0".into();
        Ok(Tower { levels })
    }

    pub fn len(&self) -> usize {
        self.levels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `f_m` for `0 <= m <= 4`.
    pub fn level(&self, m: usize) -> Result<&Sequence> {
        self.levels
            .get(m)
            .ok_or_else(|| domain(format!("tower level m = {m} outside 0..=4")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn all_nonnegative(s: &Sequence) -> bool {
        s.values().iter().all(|v| !v.is_negative())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn catalan_small_values() {
        assert_eq!(catalan(0), BigInt::from(1));
        assert_eq!(catalan(3), BigInt::from(5));
        assert_eq!(catalan(5), BigInt::from(42));
        assert_eq!(catalan_prefix(5, 1).values(), ints(&[1, 2, 5, 14, 42]).as_slice());
    }

    #[test]
    fn fine_prefix() {
        let f = fine_sequence(6).unwrap();
        assert_eq!(f.values(), ints(&[1, 0, 1, 2, 6, 18]).as_slice());
        assert!(fine_sequence(0).is_err());
    }

    #[test]
    fn invert_of_unit_impulse_is_all_ones() {
        let f = Sequence::new("e", ints(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(invert_transform(&f, 6).unwrap().values(), ints(&[1; 6]).as_slice());
    }

    #[test]
    fn invert_rejects_bad_head_and_short_input() {
        let f = Sequence::new("bad", ints(&[2, 1, 1]));
        assert!(matches!(invert_transform(&f, 3), Err(Error::BadHead { .. })));
        let f = Sequence::new("short", ints(&[1, 1]));
        assert!(matches!(invert_transform(&f, 3), Err(Error::TooShort { .. })));
    }

    #[test]
    fn fine_inverts_to_catalan_and_segner_shift() {
        let n = 20;
        let fine = fine_sequence(n).unwrap();
        assert_eq!(
            invert_transform(&fine, n).unwrap().values(),
            catalan_prefix(n, 0).values()
        );
        assert_eq!(
            invert_transform(&catalan_prefix(n, 0), n).unwrap().values(),
            catalan_prefix(n, 1).values()
        );
    }

    #[test]
    fn tower_levels() {
        let t = Tower::fine(6).unwrap();
        assert_eq!(t.level(3).unwrap().values(), ints(&[1, 3, 10, 35, 126, 462]).as_slice());
        assert_eq!(
            t.level(4).unwrap().values(),
            ints(&[1, 4, 17, 74, 326, 1446]).as_slice()
        );
        assert!(t.level(5).is_err());
        assert!((0..=4).all(|m| all_nonnegative(t.level(m).unwrap())));
    }
}
