//! `finecat`: sequences, triangles, oracles and identity checks from the command line.
//!
//! Exit codes: 0 success (including expected failures), 1 verification
//! mismatch, 2 usage error, 3 enumeration bound exceeded.

mod render;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use finecat_core::closedforms::{g1_explicit, g2_closed, g3_closed, g4_explicit};
use finecat_core::identities::{Formulas, Registry, RunConfig};
use finecat_core::oracle::{
    ballot_to_dyck, ballot_words, count_ballot, count_colored, count_ternary_g4, count_total, dyck_to_ballot,
    two_colored_paths, MAX_SEMILENGTH,
};
use finecat_core::{triangle_times_pascal_power, Tower, Triangle};

use render::Format;

/// Largest `n` for the exhaustive bijection modes.
const BIJECTION_MAX_N: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "finecat",
    version,
    about = "Fine/Catalan invert-transform tower and coloured-hill triangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print f_m(1..N) for the tower level m (0 = Fine numbers).
    Seq {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=4))]
        m: u8,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Print rows 1..ROWS of the triangle G_m.
    Triangle {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        m: u8,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
        #[arg(long, value_enum, default_value_t = Method::Conv)]
        method: Method,
        #[command(flatten)]
        out: Output,
    },
    /// Check registered identities; exit 1 if any verdict differs from its expectation.
    Verify {
        /// A full id (`I-exotic-8.as_printed`) or a base id covering all variants.
        #[arg(long, conflicts_with = "all")]
        id: Option<String>,
        /// Run every record (the default when no id is given).
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Count objects by exhaustive enumeration.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Number of hill colours.
        #[arg(long)]
        m: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Two-coloured Dyck paths versus ballot words.
    Bijection {
        #[arg(long)]
        n: usize,
        /// Restrict to one k; all 1..=n otherwise.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::List)]
        mode: Mode,
    },
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// k-fold convolution of f_{m-1}.
    Conv,
    /// G_1 times a power of the Pascal matrix.
    Matrix,
    /// Explicit formulas.
    Closed,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Conv => "conv",
            Method::Matrix => "matrix",
            Method::Closed => "closed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    /// Paths with m hill colours, k-1 hills of colour m (needs --k, --m).
    Colored,
    /// Paths with m hill colours (needs --m).
    Total,
    /// Ballot words with n-1 ones and k-1 zeros (needs --k).
    Ballot,
    /// Ternary words of length 2n-1 with k-1 twos (needs --k).
    Ternary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    List,
    Roundtrip,
}

/// Bad arguments that clap cannot catch on its own.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// Whether every check the command ran came out as expected.
enum Outcome {
    Done,
    Mismatch,
}

fn run(cli: Cli, out: &mut impl Write) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Seq { m, n, out: o } => {
            let tower = Tower::fine(n as usize)?;
            render::sequence(out, m as usize, tower.level(m as usize)?, o.format)?;
        }
        Command::Triangle {
            m,
            rows,
            method,
            out: o,
        } => {
            let t = build_triangle(m as usize, rows as usize, method)?;
            render::triangle(out, m as usize, method.name(), &t, o.format)?;
        }
        Command::Verify {
            id,
            all: _,
            max_n,
            out: o,
        } => {
            if o.format == Format::Bfile {
                return Err(usage("verify does not support --format bfile"));
            }
            let registry = Registry::new(Formulas::default());
            let cfg = RunConfig::new(max_n as usize);
            let reports = match id {
                Some(id) => {
                    let records = registry.resolve(&id);
                    if records.is_empty() {
                        return Err(usage(format!("unknown identity `{id}`")));
                    }
                    records
                        .iter()
                        .map(|r| registry.run(r.id, &cfg))
                        .collect::<Result<Vec<_>, _>>()?
                }
                None => registry.run_all(&cfg)?,
            };
            render::reports(out, &reports, o.format)?;
            if !reports.iter().all(|r| r.matches_expectation()) {
                return Ok(Outcome::Mismatch);
            }
        }
        Command::Oracle { kind, n, k, m, out: o } => {
            if o.format == Format::Bfile {
                return Err(usage("oracle does not support --format bfile"));
            }
            // Report an out-of-range size before complaining about missing flags.
            if matches!(kind, OracleKind::Colored | OracleKind::Total) && n > MAX_SEMILENGTH + 1 {
                return Err(finecat_core::Error::ResourceBound {
                    what: "Dyck semilength",
                    requested: n - 1,
                    limit: MAX_SEMILENGTH,
                }
                .into());
            }
            let need_k = || k.ok_or_else(|| usage("this oracle needs --k"));
            let need_m = || m.ok_or_else(|| usage("this oracle needs --m"));
            let (name, k, m, value) = match kind {
                OracleKind::Colored => {
                    let (k, m) = (need_k()?, need_m()?);
                    ("colored", Some(k), Some(m), count_colored(n, k, m)?)
                }
                OracleKind::Total => {
                    let m = need_m()?;
                    ("total", None, Some(m), count_total(n, m)?)
                }
                OracleKind::Ballot => {
                    let k = need_k()?;
                    ("ballot", Some(k), None, count_ballot(n, k)?)
                }
                OracleKind::Ternary => {
                    let k = need_k()?;
                    ("ternary", Some(k), None, count_ternary_g4(n, k)?)
                }
            };
            let c = render::Count {
                kind: name,
                n,
                k,
                m,
                value: value.to_string(),
            };
            render::count(out, &c, o.format)?;
        }
        Command::Bijection { n, k, mode } => return bijection(out, n, k, mode),
    }
    Ok(Outcome::Done)
}

fn build_triangle(m: usize, rows: usize, method: Method) -> anyhow::Result<Triangle> {
    Ok(match method {
        Method::Conv => Tower::fine(rows)?.triangle(m)?,
        Method::Matrix => triangle_times_pascal_power(&Tower::fine(rows)?.triangle(1)?, m as i64 - 1),
        Method::Closed => {
            let g = [g1_explicit, g2_closed, g3_closed, g4_explicit][m - 1];
            Triangle::try_from_fn(rows, g)?
        }
    })
}

fn bijection(out: &mut impl Write, n: usize, k: Option<usize>, mode: Mode) -> anyhow::Result<Outcome> {
    if n < 1 {
        return Err(usage("--n must be at least 1"));
    }
    if n > BIJECTION_MAX_N {
        return Err(finecat_core::Error::ResourceBound {
            what: "bijection n",
            requested: n,
            limit: BIJECTION_MAX_N,
        }
        .into());
    }
    let ks = match k {
        Some(k) if (1..=n).contains(&k) => k..=k,
        Some(k) => return Err(usage(format!("--k must lie in 1..={n}, got {k}"))),
        None => 1..=n,
    };
    let mut pairs = 0usize;
    for k in ks {
        let paths = two_colored_paths(n, k)?;
        match mode {
            Mode::List => {
                for p in &paths {
                    writeln!(out, "{p} ↔ {}", dyck_to_ballot(p)?)?;
                }
            }
            Mode::Roundtrip => {
                for p in &paths {
                    let w = dyck_to_ballot(p)?;
                    if &ballot_to_dyck(&w) != p {
                        writeln!(out, "mismatch: {p} -> {w} does not return")?;
                        return Ok(Outcome::Mismatch);
                    }
                }
                let words = ballot_words(n, k)?;
                for w in &words {
                    let p = ballot_to_dyck(w);
                    if &dyck_to_ballot(&p)? != w {
                        writeln!(out, "mismatch: {w} -> {p} does not return")?;
                        return Ok(Outcome::Mismatch);
                    }
                }
                if words.len() != paths.len() {
                    writeln!(
                        out,
                        "mismatch: {} paths but {} words at k = {k}",
                        paths.len(),
                        words.len()
                    )?;
                    return Ok(Outcome::Mismatch);
                }
            }
        }
        pairs += paths.len();
    }
    if mode == Mode::Roundtrip {
        writeln!(out, "ok, {pairs} pairs")?;
    }
    Ok(Outcome::Done)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<finecat_core::Error>() {
        Some(finecat_core::Error::ResourceBound { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|o| {
        out.flush().context("writing output")?;
        Ok(o)
    });
    match result {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("finecat: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
