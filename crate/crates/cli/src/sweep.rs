use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use grundy_core::{predict, Error, ExprTemplate, Invariant, Result};
use serde::Serialize;

use crate::compute::{compute, ComputeOptions, Input};

/// `name=lo..hi` (inclusive), `name=a,b,c`, or `name=v`.
pub fn parse_param(text: &str) -> Result<(String, Vec<usize>)> {
    let bad = || Error::Input(format!("bad parameter range {text:?}; expected name=lo..hi"));
    let (name, range) = text.split_once('=').ok_or_else(bad)?;
    let name = name.trim();
    if name.is_empty() {
        return Err(bad());
    }
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let values = if let Some((lo, hi)) = range.split_once("..") {
        let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
        if lo > hi {
            return Err(bad());
        }
        (lo..=hi).collect()
    } else {
        range.split(',').map(num).collect::<Result<Vec<_>>>()?
    };
    Ok((name.to_string(), values))
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub params: BTreeMap<String, usize>,
    pub input: String,
    pub value: usize,
    pub predicted: Option<usize>,
    pub formula: Option<String>,
    pub matches: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct SweepReport {
    pub template: String,
    pub invariant: Invariant,
    pub rows: Vec<SweepRow>,
    pub skipped: Vec<String>,
}

impl SweepReport {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().filter(|r| r.matches == Some(false)).count()
    }
}

/// Cells run on `threads` workers; rows come back in parameter order.
pub fn sweep(
    template: &str,
    inv: Invariant,
    params: &[(String, Vec<usize>)],
    opts: &ComputeOptions,
    threads: usize,
) -> Result<SweepReport> {
    let tmpl = ExprTemplate::parse(template)?;
    let vars = tmpl.variables();
    for v in &vars {
        if !params.iter().any(|(n, _)| n == v) {
            return Err(Error::Input(format!("no --param given for variable {v:?}")));
        }
    }
    if let Some((n, _)) = params.iter().find(|(n, _)| !vars.contains(n)) {
        return Err(Error::Input(format!("template has no variable {n:?}")));
    }

    let mut cells: Vec<BTreeMap<String, usize>> = vec![BTreeMap::new()];
    for (name, values) in params {
        cells = cells
            .into_iter()
            .flat_map(|c| {
                values.iter().map(move |&v| {
                    let mut c = c.clone();
                    c.insert(name.clone(), v);
                    c
                })
            })
            .collect();
    }

    let results: Vec<Mutex<Option<std::result::Result<SweepRow, String>>>> =
        cells.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let run_cell = |cell: &BTreeMap<String, usize>| -> std::result::Result<SweepRow, String> {
        let expr = tmpl.instantiate(cell).map_err(|e| e.to_string())?;
        let label = expr.to_string();
        let skip = |e: Error| format!("{label}: {e}");
        let g = expr.build().map_err(skip)?;
        let report = compute(&label, &Input::Graph(g), inv, opts).map_err(skip)?;
        let p = predict(&expr, inv);
        Ok(SweepRow {
            params: cell.clone(),
            input: label,
            value: report.value,
            matches: p.as_ref().map(|p| p.value == report.value),
            predicted: p.as_ref().map(|p| p.value),
            formula: p.map(|p| p.formula),
        })
    };
    std::thread::scope(|s| {
        for _ in 0..threads.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(cell) = cells.get(i) else { break };
                *results[i].lock().unwrap() = Some(run_cell(cell));
            });
        }
    });

    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for r in results {
        match r.into_inner().unwrap().expect("every cell ran") {
            Ok(row) => rows.push(row),
            Err(msg) => skipped.push(msg),
        }
    }
    Ok(SweepReport {
        template: template.to_string(),
        invariant: inv,
        rows,
        skipped,
    })
}
