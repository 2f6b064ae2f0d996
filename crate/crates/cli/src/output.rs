use std::io::Write;

use anyhow::Result;
use grundy_core::verify::SuiteReport;

use crate::compute::RunReport;
use crate::sweep::SweepReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

fn compact(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

pub fn run_report(out: &mut impl Write, r: &RunReport, format: Format) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(r)?)?,
        Format::Table => {
            let mut rows = vec![("input", r.input.clone()), ("invariant", r.invariant.to_string())];
            if let Some(k) = r.k {
                rows.push(("k", k.to_string()));
            }
            rows.push(("value", r.value.to_string()));
            if let Some(w) = &r.witness {
                rows.push(("witness", compact(w)));
            }
            rows.push(("exact", r.exact.to_string()));
            if let Some(route) = &r.route {
                rows.push(("route", route.clone()));
            }
            rows.push(("elapsed", format!("{:.3}s", r.elapsed_s)));
            for (key, val) in rows {
                writeln!(out, "{key:<10} {val}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["input", "invariant", "k", "value", "exact", "route", "elapsed_s", "witness"])?;
            w.write_record([
                r.input.clone(),
                r.invariant.to_string(),
                r.k.map(|k| k.to_string()).unwrap_or_default(),
                r.value.to_string(),
                r.exact.to_string(),
                r.route.clone().unwrap_or_default(),
                r.elapsed_s.to_string(),
                r.witness.as_ref().map(compact).unwrap_or_default(),
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}

pub fn suite_report(out: &mut impl Write, r: &SuiteReport, format: Format) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(r)?)?,
        Format::Table => {
            for c in &r.cases {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{tag}  {}  ({})", c.name, c.detail)?;
            }
            if let Some(s) = &r.sampler {
                writeln!(out, "sampler: {}", compact(s))?;
            }
            writeln!(out, "{}: {} passed, {} failed", r.suite, r.passed, r.failed)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["suite", "case", "pass", "detail"])?;
            for c in &r.cases {
                w.write_record([r.suite.name(), &c.name, &c.pass.to_string(), &c.detail])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn sweep_report(out: &mut impl Write, r: &SweepReport, format: Format) -> Result<()> {
    let names: Vec<&String> = r.rows.first().map(|row| row.params.keys().collect()).unwrap_or_default();
    let cells = |row: &crate::sweep::SweepRow| -> Vec<String> {
        let mut v: Vec<String> = row.params.values().map(|x| x.to_string()).collect();
        v.push(row.input.clone());
        v.push(row.value.to_string());
        v.push(row.predicted.map(|p| p.to_string()).unwrap_or_default());
        v.push(row.formula.clone().unwrap_or_default());
        v.push(match row.matches {
            Some(m) => m.to_string(),
            None => "n/a".into(),
        });
        v
    };
    let mut header: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    header.extend(["input", "value", "predicted", "formula", "match"].map(String::from));
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(r)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for row in &r.rows {
                w.write_record(cells(row))?;
            }
            w.flush()?;
        }
        Format::Table => {
            let body: Vec<Vec<String>> = r.rows.iter().map(cells).collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|i| body.iter().map(|row| row[i].len()).chain([header[i].len()]).max().unwrap_or(0))
                .collect();
            for line in std::iter::once(&header).chain(&body) {
                let padded: Vec<String> = line.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                writeln!(out, "{}", padded.join("  ").trim_end())?;
            }
        }
    }
    Ok(())
}
