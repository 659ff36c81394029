use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arith::{binomial, ipow};
use crate::error::{domain, Error, Result};

/// Largest semilength the exhaustive enumerators accept (`C_14 = 2674440` paths).
pub const MAX_SEMILENGTH: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck path: equal numbers of up and down steps, never below the axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for &s in &steps {
            height += if s == Step::Up { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidWord(render_steps(&steps)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidWord(render_steps(&steps)));
        }
        Ok(Self { steps })
    }

    pub fn empty() -> Self {
        Self { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Indices of the up step of every hill, left to right.
    pub fn hill_positions(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut height = 0usize;
        for (i, &s) in self.steps.iter().enumerate() {
            if s == Step::Up {
                if height == 0 && self.steps.get(i + 1) == Some(&Step::Down) {
                    out.push(i);
                }
                height += 1;
            } else {
                height -= 1;
            }
        }
        out
    }

    pub fn hill_count(&self) -> usize {
        hill_count(self)
    }

    /// Splits the path at its returns to the axis, as index ranges.
    pub fn ground_factors(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut height = 0usize;
        for (i, &s) in self.steps.iter().enumerate() {
            if s == Step::Up {
                height += 1;
            } else {
                height -= 1;
                if height == 0 {
                    out.push(start..i + 1);
                    start = i + 1;
                }
            }
        }
        out
    }
}

fn render_steps(steps: &[Step]) -> String {
    steps.iter().map(|s| if *s == Step::Up { 'U' } else { 'D' }).collect()
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_steps(&self.steps))
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// Number of hills: up steps leaving the axis that are immediately followed by a down step.
pub fn hill_count(p: &DyckPath) -> usize {
    let steps = &p.steps;
    let mut count = 0;
    let mut height = 0usize;
    for i in 0..steps.len() {
        if steps[i] == Step::Up {
            if height == 0 && steps[i + 1] == Step::Down {
                count += 1;
            }
            height += 1;
        } else {
            height -= 1;
        }
    }
    count
}

fn check_semilength(s: usize) -> Result<()> {
    if s > MAX_SEMILENGTH {
        return Err(Error::ResourceBound {
            what: "Dyck semilength",
            requested: s,
            limit: MAX_SEMILENGTH,
        });
    }
    Ok(())
}

/// Lexicographic (`U < D`) enumeration of the Dyck paths of one semilength.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    semilength: usize,
    next: Option<Vec<Step>>,
}

impl DyckPaths {
    fn new(semilength: usize) -> Self {
        let mut first = vec![Step::Up; semilength];
        first.extend(std::iter::repeat_n(Step::Down, semilength));
        Self {
            semilength,
            next: Some(first),
        }
    }

    /// Smallest Dyck word strictly greater than `w`, if any.
    fn successor(&self, w: &[Step]) -> Option<Vec<Step>> {
        let s = self.semilength;
        // Height and number of ups before each position.
        let mut heights = Vec::with_capacity(w.len());
        let mut ups = Vec::with_capacity(w.len());
        let (mut h, mut u) = (0usize, 0usize);
        for &step in w {
            heights.push(h);
            ups.push(u);
            if step == Step::Up {
                h += 1;
                u += 1;
            } else {
                h -= 1;
            }
        }
        let i = (0..w.len()).rev().find(|&i| w[i] == Step::Up && heights[i] >= 1)?;
        let remaining_ups = s - ups[i];
        let mut out = w[..i].to_vec();
        out.push(Step::Down);
        out.extend(std::iter::repeat_n(Step::Up, remaining_ups));
        out.resize(2 * s, Step::Down);
        Some(out)
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let current = self.next.take()?;
        self.next = self.successor(&current);
        Some(DyckPath { steps: current })
    }
}

/// Lazily enumerates all Dyck paths of semilength `s`.
pub fn dyck_paths(s: usize) -> Result<DyckPaths> {
    check_semilength(s)?;
    Ok(DyckPaths::new(s))
}

/// All `C_s` Dyck paths of semilength `s`, in lexicographic order.
pub fn enumerate_dyck(s: usize) -> Result<Vec<DyckPath>> {
    Ok(dyck_paths(s)?.collect())
}

/// How many Dyck paths of a fixed semilength have exactly `h` hills, for each `h`.
///
/// Built by one pass over the exhaustive enumeration; the coloured counts
/// below are weighted sums over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HillHistogram {
    semilength: usize,
    counts: Vec<u64>,
}

impl HillHistogram {
    pub fn new(semilength: usize) -> Result<Self> {
        let mut counts = vec![0u64; semilength + 1];
        for p in dyck_paths(semilength)? {
            counts[hill_count(&p)] += 1;
        }
        Ok(Self { semilength, counts })
    }

    pub fn semilength(&self) -> usize {
        self.semilength
    }

    /// Number of paths with exactly `h` hills.
    pub fn paths_with_hills(&self, h: usize) -> u64 {
        self.counts.get(h).copied().unwrap_or(0)
    }

    /// Paths with hills coloured from `1..=m` and exactly `marked` hills of colour `m`:
    /// `sum_h #paths(h) C(h, marked) (m-1)^(h-marked)`.
    pub fn colored(&self, marked: usize, m: u32) -> BigInt {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(h, _)| h >= marked)
            .map(|(h, &c)| {
                BigInt::from(c) * binomial(h as u64, marked as u64) * ipow(m as i64 - 1, (h - marked) as u32)
            })
            .sum()
    }

    /// Paths with hills coloured from `1..=m`: `sum_h #paths(h) m^h`.
    pub fn total(&self, m: u32) -> BigInt {
        self.counts
            .iter()
            .enumerate()
            .map(|(h, &c)| BigInt::from(c) * ipow(m as i64, h as u32))
            .sum()
    }
}

fn check_colored_args(n: usize, m: u32) -> Result<()> {
    if n < 1 {
        return Err(domain("coloured counts need n >= 1"));
    }
    if m < 1 {
        return Err(domain("coloured counts need m >= 1"));
    }
    check_semilength(n - 1)
}

/// Dyck paths of semilength `n-1` with hills in `m` colours, exactly `k-1` of colour `m`.
pub fn count_colored(n: usize, k: usize, m: u32) -> Result<BigInt> {
    check_colored_args(n, m)?;
    if k < 1 || k > n {
        return Err(domain(format!("count_colored needs 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(HillHistogram::new(n - 1)?.colored(k - 1, m))
}

/// Dyck paths of semilength `n-1` with hills in `m` colours.
pub fn count_total(n: usize, m: u32) -> Result<BigInt> {
    check_colored_args(n, m)?;
    Ok(HillHistogram::new(n - 1)?.total(m))
}

/// A Dyck path together with a colour for each of its hills.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredDyckPath {
    path: DyckPath,
    colors: Vec<u8>,
}

impl ColoredDyckPath {
    pub fn new(path: DyckPath, colors: Vec<u8>) -> Result<Self> {
        let hills = path.hill_count();
        if colors.len() != hills {
            return Err(domain(format!(
                "path {path} has {hills} hills but {} colours were given",
                colors.len()
            )));
        }
        if colors.contains(&0) {
            return Err(domain("hill colours start at 1"));
        }
        Ok(Self { path, colors })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn count_color(&self, c: u8) -> usize {
        self.colors.iter().filter(|&&x| x == c).count()
    }
}

impl fmt::Display for ColoredDyckPath {
    /// Ground-level factors separated by spaces; a hill prints as `UD<colour>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.steps.is_empty() {
            return f.write_str("ε");
        }
        let mut hill = 0;
        for (i, r) in self.path.ground_factors().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if r.len() == 2 {
                write!(f, "UD{}", self.colors[hill])?;
                hill += 1;
            } else {
                f.write_str(&render_steps(&self.path.steps[r]))?;
            }
        }
        Ok(())
    }
}

/// Every colouring of the hills of `path` with colours `1..=m`.
pub fn colorings(path: &DyckPath, m: u8) -> Vec<ColoredDyckPath> {
    let hills = path.hill_count();
    let mut out = Vec::new();
    let mut colors = vec![1u8; hills];
    loop {
        out.push(ColoredDyckPath {
            path: path.clone(),
            colors: colors.clone(),
        });
        // Odometer increment.
        let mut i = 0;
        while i < hills && colors[i] == m {
            colors[i] = 1;
            i += 1;
        }
        if i == hills {
            break;
        }
        colors[i] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_dyck(0).unwrap(), vec![DyckPath::empty()]);
        assert_eq!(enumerate_dyck(2).unwrap(), vec![p("UUDD"), p("UDUD")]);
        assert_eq!(enumerate_dyck(4).unwrap().len(), 14);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let paths = enumerate_dyck(6).unwrap();
        assert_eq!(paths.len(), 132);
        assert!(paths.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn enumeration_bound_is_hard() {
        assert!(matches!(dyck_paths(15), Err(Error::ResourceBound { .. })));
    }

    #[test]
    fn hills() {
        assert_eq!(hill_count(&p("UUDD")), 0);
        assert_eq!(hill_count(&p("UDUD")), 2);
        assert_eq!(hill_count(&p("UUDDUD")), 1);
        assert_eq!(p("UDUUDD").hill_positions(), vec![0]);
    }

    #[test]
    fn invalid_paths_rejected() {
        assert!("DU".parse::<DyckPath>().is_err());
        assert!("UUD".parse::<DyckPath>().is_err());
        assert!("UXD".parse::<DyckPath>().is_err());
    }

    #[test]
    fn colored_counts() {
        assert_eq!(count_colored(3, 2, 2).unwrap(), BigInt::from(2));
        assert_eq!(count_colored(2, 1, 4).unwrap(), BigInt::from(3));
        assert_eq!(count_colored(5, 1, 1).unwrap(), BigInt::from(6));
        assert_eq!(count_total(3, 3).unwrap(), BigInt::from(10));
        assert!(count_colored(3, 4, 2).is_err());
        assert!(count_colored(16, 1, 2).is_err());
    }

    #[test]
    fn histogram_semilength_four() {
        let h = HillHistogram::new(4).unwrap();
        let counts: Vec<u64> = (0..=4).map(|i| h.paths_with_hills(i)).collect();
        assert_eq!(counts, vec![6, 4, 3, 0, 1]);
        assert!(h.colored(5, 2).is_zero());
    }

    #[test]
    fn colored_display() {
        let c = ColoredDyckPath::new(p("UDUUDD"), vec![2]).unwrap();
        assert_eq!(c.to_string(), "UD2 UUDD");
        let e = ColoredDyckPath::new(DyckPath::empty(), vec![]).unwrap();
        assert_eq!(e.to_string(), "ε");
        assert!(ColoredDyckPath::new(p("UDUD"), vec![1]).is_err());
    }

    #[test]
    fn coloring_count() {
        assert_eq!(colorings(&p("UDUDUUDD"), 3).len(), 9);
        assert_eq!(colorings(&p("UUDD"), 3).len(), 1);
    }
}
