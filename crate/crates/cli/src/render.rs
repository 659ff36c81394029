//! Output formats. Every renderer writes the same numbers in a different shape.

use std::io::{self, Write};

use clap::ValueEnum;
use finecat_core::identities::VerdictReport;
use finecat_core::{BigInt, Sequence, Triangle};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    /// `n value` per line, n from 1.
    Bfile,
}

fn decimal(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

pub fn sequence(out: &mut impl Write, m: usize, seq: &Sequence, format: Format) -> io::Result<()> {
    match format {
        Format::Table => {
            let width = seq.len().to_string().len();
            for (i, v) in seq.values().iter().enumerate() {
                writeln!(out, "{:>width$}  {v}", i + 1)?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,value")?;
            for (i, v) in seq.values().iter().enumerate() {
                writeln!(out, "{},{v}", i + 1)?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                m: usize,
                values: Vec<String>,
            }
            json_line(
                out,
                &Doc {
                    m,
                    values: decimal(seq.values()),
                },
            )?;
        }
        Format::Bfile => {
            for (i, v) in seq.values().iter().enumerate() {
                writeln!(out, "{} {v}", i + 1)?;
            }
        }
    }
    Ok(())
}

pub fn triangle(out: &mut impl Write, m: usize, method: &str, t: &Triangle, format: Format) -> io::Result<()> {
    match format {
        Format::Table => {
            for row in t.rows() {
                writeln!(out, "{}", decimal(row).join(" "))?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,k,value")?;
            for (n, row) in t.rows().iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    writeln!(out, "{},{},{v}", n + 1, k + 1)?;
                }
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                m: usize,
                rows: Vec<Vec<String>>,
                method: &'a str,
            }
            let rows = t.rows().iter().map(|r| decimal(r)).collect();
            json_line(out, &Doc { m, rows, method })?;
        }
        // Read by rows, as OEIS does for triangles.
        Format::Bfile => {
            for (i, v) in t.rows().iter().flatten().enumerate() {
                writeln!(out, "{} {v}", i + 1)?;
            }
        }
    }
    Ok(())
}

pub fn reports(out: &mut impl Write, reports: &[VerdictReport], format: Format) -> io::Result<()> {
    match format {
        Format::Table | Format::Bfile => {
            for r in reports {
                writeln!(out, "{r}")?;
                for c in r.counterexamples.iter().skip(1) {
                    writeln!(out, "         {c}")?;
                }
            }
        }
        Format::Csv => {
            writeln!(
                out,
                "id,variant,expected,status,max_n,cases,failures,vacuous,first_counterexample"
            )?;
            for r in reports {
                let first = r.counterexamples.first().map(|c| c.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},\"{}\"",
                    r.id,
                    serde_plain(&r.variant),
                    serde_plain(&r.expected),
                    serde_plain(&r.status),
                    r.max_n,
                    r.cases,
                    r.failures,
                    r.vacuous,
                    first.replace('"', "\"\"")
                )?;
            }
        }
        Format::Json => json_line(out, &reports)?,
    }
    Ok(())
}

/// The serde name of a unit enum variant, e.g. `fail_as_printed`.
fn serde_plain(v: &impl Serialize) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

#[derive(Serialize)]
pub struct Count<'a> {
    pub kind: &'a str,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub value: String,
}

pub fn count(out: &mut impl Write, c: &Count<'_>, format: Format) -> io::Result<()> {
    match format {
        Format::Table | Format::Bfile => writeln!(out, "{}", c.value),
        Format::Csv => {
            writeln!(out, "kind,n,k,m,value")?;
            let opt = |v: Option<String>| v.unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{}",
                c.kind,
                c.n,
                opt(c.k.map(|k| k.to_string())),
                opt(c.m.map(|m| m.to_string())),
                c.value
            )
        }
        Format::Json => json_line(out, c),
    }
}
