use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde_json::Value;

use super::output::{bracket_form, BRecord, SpinRecord};
use crate::combinatorics::{Partition, StrictPartition};
use crate::engine::SpinKostkaEngine;
use crate::error::Error;
use crate::schur::SchurExpansion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableMode {
    Spin,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Md,
    Csv,
    Json,
}

/// How polynomials are printed in text and markdown output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Display {
    #[default]
    Plain,
    Bracket,
}

fn run_cells<T, F>(cells: &[(StrictPartition, Partition)], threads: Option<usize>, f: F) -> Result<Vec<T>, Error>
where
    T: Send,
    F: Fn(&StrictPartition, &Partition) -> T + Sync,
{
    let work = || cells.par_iter().map(|(xi, p)| f(xi, p)).collect();
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(work))
            .map_err(|e| Error::ContractViolation(format!("cannot start {n} threads: {e}"))),
        None => Ok(work()),
    }
}

/// Cells in row-major order: rows are partitions, columns strict partitions.
fn cells(n: u32) -> Vec<(StrictPartition, Partition)> {
    let cols = StrictPartition::all(n);
    Partition::all(n)
        .into_iter()
        .flat_map(|mu| cols.iter().map(move |xi| (xi.clone(), mu.clone())))
        .collect()
}

pub fn spin_table(engine: &SpinKostkaEngine, n: u32, threads: Option<usize>) -> Result<Vec<SpinRecord>, Error> {
    run_cells(&cells(n), threads, |xi, mu| SpinRecord {
        xi: xi.clone(),
        mu: mu.clone(),
        poly: engine.spin_kostka(xi, mu),
    })
}

pub fn b_table(schur: &SchurExpansion, n: u32, threads: Option<usize>) -> Result<Vec<BRecord>, Error> {
    run_cells(&cells(n), threads, |xi, lambda| BRecord {
        xi: xi.clone(),
        lambda: lambda.clone(),
        b: schur.b_coeff(xi, lambda),
    })
}

fn markdown(n: u32, row_label: &str, values: &[String]) -> String {
    let cols = StrictPartition::all(n);
    let rows = Partition::all(n);
    let mut out = format!("| {row_label} \\ ξ |");
    for xi in &cols {
        out.push_str(&format!(" {xi:?} |"));
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(cols.len()));
    out.push('\n');
    for (i, mu) in rows.iter().enumerate() {
        out.push_str(&format!("| {mu:?} |"));
        for v in &values[i * cols.len()..(i + 1) * cols.len()] {
            out.push_str(&format!(" {v} |"));
        }
        out.push('\n');
    }
    out
}

fn csv_text(header: [&str; 3], rows: impl Iterator<Item = [String; 3]>) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render_spin(n: u32, records: &[SpinRecord], format: TableFormat, display: Display) -> Result<String, Error> {
    let show = |r: &SpinRecord| match display {
        Display::Plain => r.poly.to_string(),
        Display::Bracket => bracket_form(&r.poly),
    };
    Ok(match format {
        TableFormat::Md => markdown(n, "μ", &records.iter().map(show).collect::<Vec<_>>()),
        TableFormat::Csv => csv_text(
            ["xi", "mu", "poly"],
            records
                .iter()
                .map(|r| [r.xi.to_string(), r.mu.to_string(), r.poly.to_string()]),
        )?,
        TableFormat::Json => {
            let arr: Vec<Value> = records.iter().map(SpinRecord::to_json).collect();
            serde_json::to_string_pretty(&arr).expect("json values serialize") + "\n"
        }
    })
}

pub fn render_b(n: u32, records: &[BRecord], format: TableFormat) -> Result<String, Error> {
    Ok(match format {
        TableFormat::Md => markdown(n, "λ", &records.iter().map(|r| r.b.to_string()).collect::<Vec<_>>()),
        TableFormat::Csv => csv_text(
            ["xi", "lambda", "b"],
            records
                .iter()
                .map(|r| [r.xi.to_string(), r.lambda.to_string(), r.b.to_string()]),
        )?,
        TableFormat::Json => serde_json::to_string_pretty(records).expect("records serialize") + "\n",
    })
}

/// Loads a memo file written by [`save_cache`]; a missing file is an empty
/// cache.
pub fn load_cache(engine: &SpinKostkaEngine, path: &Path) -> Result<(), Error> {
    if !path.exists() {
        return Ok(());
    }
    let text = fs::read_to_string(path)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Error::ContractViolation(format!("cache {}: {e}", path.display())))?;
    let arr = v
        .as_array()
        .ok_or_else(|| Error::ContractViolation(format!("cache {} is not a JSON array", path.display())))?;
    let mut entries = Vec::with_capacity(arr.len());
    for item in arr {
        let r = SpinRecord::from_json(item)?;
        entries.push((crate::engine::SpinKostkaKey { xi: r.xi, mu: r.mu }, r.poly));
    }
    engine.preload(entries);
    Ok(())
}

pub fn save_cache(engine: &SpinKostkaEngine, path: &Path) -> Result<(), Error> {
    let arr: Vec<Value> = engine
        .cache_entries()
        .into_iter()
        .map(|(k, poly)| {
            SpinRecord {
                xi: k.xi,
                mu: k.mu,
                poly,
            }
            .to_json()
        })
        .collect();
    fs::write(path, serde_json::to_string(&arr).expect("json values serialize"))?;
    Ok(())
}
