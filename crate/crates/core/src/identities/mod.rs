//! A registry of named identities, each evaluated exactly over a range of
//! `(n, k)` cells and summarised in a [`VerdictReport`].
//!
//! Identities whose printed form is numerically wrong are registered twice:
//! an `as_printed` record expected to fail and a `corrected` record expected
//! to pass. A run succeeds when every record matches its expectation.

mod registry;

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::closedforms;
use crate::error::{Error, Result};

pub use registry::standard_records;

/// Counterexamples kept per report; the total is still counted.
pub const MAX_COUNTEREXAMPLES: usize = 20;

/// Oracle-backed identities never run past this `n` by default.
pub const DEFAULT_ORACLE_MAX_N: usize = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    AsPrinted,
    Corrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Pass,
    FailAsPrinted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Falsified,
}

/// Whether an identity is indexed by `n` alone or by a pair `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Single,
    Pair,
}

/// Evaluates both sides of an identity at `(n, k)`; `k` is `None` for [`Shape::Single`].
pub type Evaluator = Box<dyn Fn(usize, Option<usize>) -> Result<(BigInt, BigInt)> + Send + Sync>;

/// The closed forms an identity run draws on. Swapping one out (e.g. for a
/// deliberately wrong version) is how the harness is mutation-tested.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub g1: fn(usize, usize) -> Result<BigInt>,
    pub g2: fn(usize, usize) -> Result<BigInt>,
    pub g2_dfact: fn(usize, usize) -> Result<BigInt>,
    pub g2_alternating: fn(usize, usize) -> Result<BigInt>,
    pub g2_from_g3: fn(usize, usize) -> Result<BigInt>,
    pub g3: fn(usize, usize) -> Result<BigInt>,
    pub g4: fn(usize, usize) -> Result<BigInt>,
    pub f3: fn(usize) -> Result<BigInt>,
    pub euler_catalan: fn(usize) -> Result<BigInt>,
}

impl Formulas {
    /// `A(n, k) = g_2(n, n-k+1)` through whichever `g_2` is installed.
    pub fn mirror_a(&self, n: usize, k: usize) -> Result<BigInt> {
        if k < 1 || k > n {
            return Err(Error::Domain(format!(
                "mirror_a needs 1 <= k <= n, got n = {n}, k = {k}"
            )));
        }
        (self.g2)(n, n - k + 1)
    }

    /// The closed form for `g_m`, `1 <= m <= 4`.
    pub fn g(&self, m: usize) -> fn(usize, usize) -> Result<BigInt> {
        match m {
            1 => self.g1,
            2 => self.g2,
            3 => self.g3,
            4 => self.g4,
            _ => panic!("no closed form for g_{m}"),
        }
    }
}

impl Default for Formulas {
    fn default() -> Self {
        Self {
            g1: closedforms::g1_explicit,
            g2: closedforms::g2_closed,
            g2_dfact: closedforms::g2_dfact,
            g2_alternating: closedforms::g2_alternating,
            g2_from_g3: closedforms::g2_from_g3,
            g3: closedforms::g3_closed,
            g4: closedforms::g4_explicit,
            f3: closedforms::f3_closed,
            euler_catalan: closedforms::euler_catalan,
        }
    }
}

impl fmt::Debug for Formulas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Formulas { .. }")
    }
}

/// A named identity: a domain of cells and an exact evaluator for both sides.
pub struct IdentityRecord {
    pub id: &'static str,
    pub description: &'static str,
    pub variant: Variant,
    pub expected: Expectation,
    pub shape: Shape,
    /// Cell predicate; `k` is ignored for [`Shape::Single`].
    pub domain: fn(usize, usize) -> bool,
    /// Hard `n` ceiling for identities backed by exhaustive enumeration.
    pub oracle_bound: Option<usize>,
    /// Builds the evaluator for cells with `n <= max_n`, precomputing what it needs.
    pub prepare: fn(Formulas, usize) -> Result<Evaluator>,
}

impl IdentityRecord {
    /// The id with any `.as_printed` / `.corrected` suffix removed.
    pub fn base_id(&self) -> &'static str {
        self.id.split('.').next().unwrap_or(self.id)
    }

    pub fn is_oracle_backed(&self) -> bool {
        self.oracle_bound.is_some()
    }

    fn effective_max_n(&self, cfg: &RunConfig) -> usize {
        match self.oracle_bound {
            Some(bound) => cfg.max_n.min(cfg.oracle_max_n).min(bound),
            None => cfg.max_n,
        }
    }

    fn cells(&self, max_n: usize) -> Vec<(usize, Option<usize>)> {
        match self.shape {
            Shape::Single => (0..=max_n)
                .filter(|&n| (self.domain)(n, 0))
                .map(|n| (n, None))
                .collect(),
            Shape::Pair => (0..=max_n)
                .flat_map(|n| (0..=max_n).map(move |k| (n, k)))
                .filter(|&(n, k)| (self.domain)(n, k))
                .map(|(n, k)| (n, Some(k)))
                .collect(),
        }
    }
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("variant", &self.variant)
            .field("expected", &self.expected)
            .finish_non_exhaustive()
    }
}

/// Range limits for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub max_n: usize,
    /// Separate (smaller) ceiling for identities that enumerate objects.
    pub oracle_max_n: usize,
}

impl RunConfig {
    pub fn new(max_n: usize) -> Self {
        Self {
            max_n,
            oracle_max_n: max_n.min(DEFAULT_ORACLE_MAX_N),
        }
    }

    pub fn with_oracle_max_n(mut self, oracle_max_n: usize) -> Self {
        self.oracle_max_n = oracle_max_n;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub k: Option<usize>,
    /// Decimal value of the left side, or `None` if it could not be evaluated.
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub error: Option<String>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "(n={},k={})", self.n, k)?,
            None => write!(f, "(n={})", self.n)?,
        }
        match (&self.lhs, &self.rhs, &self.error) {
            (Some(l), Some(r), _) => write!(f, ": lhs {l}, rhs {r}"),
            (_, _, Some(e)) => write!(f, ": {e}"),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictReport {
    pub id: String,
    pub description: String,
    pub variant: Variant,
    pub expected: Expectation,
    pub status: Status,
    /// Largest `n` actually tested.
    pub max_n: usize,
    pub cases: usize,
    /// No cell fell in the domain at this range.
    pub vacuous: bool,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerdictReport {
    pub fn matches_expectation(&self) -> bool {
        matches!(
            (self.expected, self.status),
            (Expectation::Pass, Status::Verified) | (Expectation::FailAsPrinted, Status::Falsified)
        )
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Verified => "verified",
            Status::Falsified => "falsified",
        };
        let expected = match self.expected {
            Expectation::Pass => "pass",
            Expectation::FailAsPrinted => "fail",
        };
        let verdict = if self.matches_expectation() { "ok" } else { "MISMATCH" };
        write!(
            f,
            "{:<8} {:<28} {:<9} expected {:<4} n<={:<3} cases {}",
            verdict, self.id, status, expected, self.max_n, self.cases
        )?;
        if self.vacuous {
            f.write_str(" (vacuous)")?;
        }
        if let Some(first) = self.counterexamples.first() {
            write!(f, " failures {} first {}", self.failures, first)?;
        }
        Ok(())
    }
}

/// Runs one record over every in-domain cell up to the configured range.
pub fn run_record(record: &IdentityRecord, formulas: Formulas, cfg: &RunConfig) -> Result<VerdictReport> {
    let start = Instant::now();
    let max_n = record.effective_max_n(cfg);
    let cells = record.cells(max_n);
    let eval = (record.prepare)(formulas, max_n)?;
    let mut counterexamples = Vec::new();
    let mut failures = 0;
    for &(n, k) in &cells {
        let bad = match eval(n, k) {
            Ok((lhs, rhs)) if lhs == rhs => None,
            Ok((lhs, rhs)) => Some(Counterexample {
                n,
                k,
                lhs: Some(lhs.to_string()),
                rhs: Some(rhs.to_string()),
                error: None,
            }),
            Err(e) => Some(Counterexample {
                n,
                k,
                lhs: None,
                rhs: None,
                error: Some(e.to_string()),
            }),
        };
        if let Some(c) = bad {
            failures += 1;
            if counterexamples.len() < MAX_COUNTEREXAMPLES {
                counterexamples.push(c);
            }
        }
    }
    Ok(VerdictReport {
        id: record.id.to_string(),
        description: record.description.to_string(),
        variant: record.variant,
        expected: record.expected,
        status: if failures == 0 {
            Status::Verified
        } else {
            Status::Falsified
        },
        max_n,
        cases: cells.len(),
        vacuous: cells.is_empty(),
        failures,
        counterexamples,
        wall_time: start.elapsed(),
    })
}

/// The identity registry together with the formulas it evaluates.
pub struct Registry {
    records: Vec<IdentityRecord>,
    formulas: Formulas,
}

impl Registry {
    pub fn new(formulas: Formulas) -> Self {
        Self {
            records: standard_records(),
            formulas,
        }
    }

    pub fn records(&self) -> &[IdentityRecord] {
        &self.records
    }

    pub fn get(&self, id: &str) -> Option<&IdentityRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// Records whose full id or base id equals `id`.
    pub fn resolve(&self, id: &str) -> Vec<&IdentityRecord> {
        self.records
            .iter()
            .filter(|r| r.id == id || r.base_id() == id)
            .collect()
    }

    pub fn run(&self, id: &str, cfg: &RunConfig) -> Result<VerdictReport> {
        let record = self.get(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
        run_record(record, self.formulas, cfg)
    }

    /// Runs every record (in parallel); reports come back in registry order.
    pub fn run_all(&self, cfg: &RunConfig) -> Result<Vec<VerdictReport>> {
        self.records
            .par_iter()
            .map(|r| run_record(r, self.formulas, cfg))
            .collect()
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::new(Formulas::default())
    }
}

/// Runs the registered identity `id` for every in-domain cell with `n <= max_n`.
pub fn run_identity(id: &str, max_n: usize) -> Result<VerdictReport> {
    Registry::default().run(id, &RunConfig::new(max_n))
}

/// Runs the whole registry with `n <= max_n` (oracle-backed records capped as in [`RunConfig::new`]).
pub fn run_all(max_n: usize) -> Result<Vec<VerdictReport>> {
    Registry::default().run_all(&RunConfig::new(max_n))
}

/// True when every report matches its record's expectation.
pub fn all_as_expected(reports: &[VerdictReport]) -> bool {
    reports.iter().all(VerdictReport::matches_expectation)
}
