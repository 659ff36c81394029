use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{domain, Error, Result};

/// Longest ternary word the exhaustive counter accepts (`3^15` candidates).
pub const MAX_TERNARY_LEN: usize = 15;

/// A word over `{0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryWord(Vec<u8>);

impl TernaryWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.iter().any(|&c| c > 2) {
            return Err(Error::InvalidWord(format!("{letters:?}")));
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn is_g4_valid(&self) -> bool {
        valid_letters(&self.0)
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for TernaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                '0'..='2' => Ok(c as u8 - b'0'),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self(letters))
    }
}

fn valid_letters(w: &[u8]) -> bool {
    if w.first() == Some(&2) || w.last() == Some(&2) {
        return false;
    }
    // Each maximal {0,1} block needs one more 1 than 0; since the balance of
    // a block is then exactly 1, empty blocks (adjacent 2s) fail too.
    w.split(|&c| c == 2).all(|block| {
        let ones = block.iter().filter(|&&c| c == 1).count();
        ones == block.len() - ones + 1
    })
}

/// Every 2 sits between non-empty binary blocks and every maximal binary block
/// has one more `1` than `0`.
pub fn validate_ternary_g4(w: &TernaryWord) -> bool {
    w.is_g4_valid()
}

/// Counts valid words of length `2n-1` by their number of 2s, by trying all
/// `3^(2n-1)` words.
pub fn ternary_histogram(n: usize) -> Result<Vec<u64>> {
    if n < 1 {
        return Err(domain("ternary words need n >= 1"));
    }
    let len = 2 * n - 1;
    if len > MAX_TERNARY_LEN {
        return Err(Error::ResourceBound {
            what: "ternary word length",
            requested: len,
            limit: MAX_TERNARY_LEN,
        });
    }
    let mut counts = vec![0u64; n];
    let mut word = vec![0u8; len];
    loop {
        if valid_letters(&word) {
            let twos = word.iter().filter(|&&c| c == 2).count();
            counts[twos] += 1;
        }
        let mut i = 0;
        while i < len && word[i] == 2 {
            word[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
        word[i] += 1;
    }
    Ok(counts)
}

/// Valid ternary words of length `2n-1` with exactly `k-1` letters equal to 2.
pub fn count_ternary_g4(n: usize, k: usize) -> Result<BigInt> {
    if k < 1 || k > n {
        return Err(domain(format!(
            "count_ternary_g4 needs 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(BigInt::from(ternary_histogram(n)?[k - 1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn valid(s: &str) -> bool {
        validate_ternary_g4(&s.parse().unwrap())
    }

    #[test]
    fn validation_examples() {
        assert!(valid("110"));
        assert!(valid("121"));
        assert!(valid("1"));
        assert!(!valid("211"));
        assert!(!valid("112"));
        assert!(!valid("11221"));
        assert!(!valid("100"));
        assert!(!valid("0"));
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_ternary_g4(2, 1).unwrap(), BigInt::from(3));
        assert_eq!(count_ternary_g4(2, 2).unwrap(), BigInt::from(1));
        assert_eq!(count_ternary_g4(1, 1).unwrap(), BigInt::from(1));
        assert!(matches!(ternary_histogram(9), Err(Error::ResourceBound { .. })));
        assert!("13".parse::<TernaryWord>().is_err());
        assert!(TernaryWord::new(vec![3]).is_err());
    }
}
