use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::dyck::{dyck_paths, ColoredDyckPath, DyckPath, Step};
use crate::error::{domain, Error, Result};

/// Longest ballot word the exhaustive enumerators accept.
pub const MAX_BALLOT_LEN: usize = 24;

/// A binary word in which no prefix has more zeros than ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BallotWord {
    bits: Vec<bool>,
}

impl BallotWord {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        let mut height = 0i64;
        for &b in &bits {
            height += if b { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidWord(render(&bits)));
            }
        }
        Ok(Self { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }
}

fn render(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl fmt::Display for BallotWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return f.write_str("ε");
        }
        f.write_str(&render(&self.bits))
    }
}

impl FromStr for BallotWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "ε" {
            return Ok(Self { bits: Vec::new() });
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        BallotWord::new(bits)
    }
}

fn check_ballot_args(n: usize, k: usize) -> Result<usize> {
    if n < 1 || k < 1 || k > n {
        return Err(domain(format!("ballot words need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    let len = n + k - 2;
    if len > MAX_BALLOT_LEN {
        return Err(Error::ResourceBound {
            what: "ballot word length",
            requested: len,
            limit: MAX_BALLOT_LEN,
        });
    }
    Ok(len)
}

/// Depth-first walk over every ballot word with the given letter counts.
fn walk_ballot(ones: usize, zeros: usize, prefix: &mut Vec<bool>, visit: &mut impl FnMut(&[bool])) {
    let used_ones = prefix.iter().filter(|&&b| b).count();
    let used_zeros = prefix.len() - used_ones;
    if used_ones == ones && used_zeros == zeros {
        visit(prefix);
        return;
    }
    if used_ones < ones {
        prefix.push(true);
        walk_ballot(ones, zeros, prefix, visit);
        prefix.pop();
    }
    if used_zeros < zeros && used_zeros < used_ones {
        prefix.push(false);
        walk_ballot(ones, zeros, prefix, visit);
        prefix.pop();
    }
}

/// Every ballot word with `n-1` ones and `k-1` zeros, lexicographic with `1 < 0`.
pub fn ballot_words(n: usize, k: usize) -> Result<Vec<BallotWord>> {
    let len = check_ballot_args(n, k)?;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    walk_ballot(n - 1, k - 1, &mut prefix, &mut |w| {
        out.push(BallotWord { bits: w.to_vec() })
    });
    Ok(out)
}

/// Exhaustive count of ballot words with `n-1` ones and `k-1` zeros.
pub fn count_ballot(n: usize, k: usize) -> Result<BigInt> {
    let len = check_ballot_args(n, k)?;
    let mut count = 0u64;
    let mut prefix = Vec::with_capacity(len);
    walk_ballot(n - 1, k - 1, &mut prefix, &mut |_| count += 1);
    Ok(BigInt::from(count))
}

/// Every Dyck path of semilength `n-1` with hills in colours `{1, 2}` and
/// exactly `n-k` hills of colour 2.
pub fn two_colored_paths(n: usize, k: usize) -> Result<Vec<ColoredDyckPath>> {
    if n < 1 || k < 1 || k > n {
        return Err(domain(format!(
            "two_colored_paths needs 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let marked = n - k;
    let mut out = Vec::new();
    for path in dyck_paths(n - 1)? {
        let hills = path.hill_count();
        if hills < marked {
            continue;
        }
        for mask in 0u32..(1 << hills) {
            if mask.count_ones() as usize != marked {
                continue;
            }
            let colors = (0..hills).map(|h| if mask >> h & 1 == 1 { 2 } else { 1 }).collect();
            out.push(ColoredDyckPath::new(path.clone(), colors)?);
        }
    }
    Ok(out)
}

/// Replaces every colour-2 hill by a single `1` and transcribes everything
/// else (`U -> 1`, `D -> 0`).
pub fn dyck_to_ballot(p: &ColoredDyckPath) -> Result<BallotWord> {
    if let Some(&c) = p.colors().iter().find(|&&c| c != 1 && c != 2) {
        return Err(Error::InvalidColor(c));
    }
    let hills = p.path().hill_positions();
    let steps = p.path().steps();
    let mut bits = Vec::with_capacity(steps.len());
    let mut i = 0;
    let mut hill = 0;
    while i < steps.len() {
        if hills.get(hill) == Some(&i) {
            let color = p.colors()[hill];
            hill += 1;
            if color == 2 {
                bits.push(true);
                i += 2;
                continue;
            }
        }
        bits.push(steps[i] == Step::Up);
        i += 1;
    }
    BallotWord::new(bits)
}

/// Inverse of [`dyck_to_ballot`]. Each `0` is matched with the nearest
/// unmatched `1` to its left; matched letters are transcribed back into Dyck
/// factors (their hills keep colour 1) and each unmatched `1` becomes a
/// colour-2 hill.
pub fn ballot_to_dyck(w: &BallotWord) -> ColoredDyckPath {
    let bits = w.bits();
    let mut matched = vec![false; bits.len()];
    let mut open = Vec::new();
    for (i, &b) in bits.iter().enumerate() {
        if b {
            open.push(i);
        } else {
            // Ballot condition: a 1 is always available.
            let j = open.pop().expect("ballot word");
            matched[i] = true;
            matched[j] = true;
        }
    }
    let mut steps = Vec::with_capacity(2 * bits.len());
    let mut replaced = Vec::new();
    for (i, &b) in bits.iter().enumerate() {
        if matched[i] {
            steps.push(if b { Step::Up } else { Step::Down });
        } else {
            replaced.push(steps.len());
            steps.push(Step::Up);
            steps.push(Step::Down);
        }
    }
    let path = DyckPath::new(steps).expect("transcription of a ballot word is a Dyck path");
    let colors = path
        .hill_positions()
        .into_iter()
        .map(|h| if replaced.binary_search(&h).is_ok() { 2 } else { 1 })
        .collect();
    ColoredDyckPath::new(path, colors).expect("one colour per hill")
}
