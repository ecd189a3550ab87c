use partition_snf::qcatalan::{check_staircase, expected_snf_exponents, QCatalanTable};
use partition_snf::snf::{snf_inductive_with, snf_recurrence_with, verify_snf};
use partition_snf::sweep;
use partition_snf::weight::{rect_weight_matrix_with, WeightCache};
use partition_snf::{
    leading_monomial, Algorithm, Cell, Exec, Naming, Partition, PolyMatrix, Polynomial, SnfError, SnfResult, TauFamily,
};
use serde_json::{json, Value};

use crate::{AlgorithmArg, Format, NamingArg};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Rendered output and whether every check in it held.
pub struct Output {
    text: String,
    ok: bool,
}

impl Output {
    pub fn into_parts(self) -> (String, u8) {
        (self.text, if self.ok { 0 } else { 2 })
    }
}

fn parse(text: &str) -> Result<Partition, CliError> {
    text.parse::<Partition>().map_err(|e| CliError::Usage(format!("partition {text:?}: {e}")))
}

fn naming(lambda: &Partition, arg: NamingArg) -> Result<Naming, CliError> {
    match arg {
        NamingArg::Coords => Ok(Naming::Coords),
        NamingArg::Letters => Ok(Naming::letters(lambda)?),
    }
}

fn naming_name(arg: NamingArg) -> &'static str {
    match arg {
        NamingArg::Letters => "letters",
        NamingArg::Coords => "coords",
    }
}

fn envelope(command: &str, input: Value, result: Value, verified: Option<bool>) -> String {
    let mut env = json!({ "command": command, "input": input, "result": result });
    if let Some(v) = verified {
        env["verified"] = json!(v);
    }
    serde_json::to_string_pretty(&env).expect("JSON values always serialize")
}

fn render(p: &Polynomial, names: &Naming) -> Result<String, CliError> {
    Ok(p.render(names)?)
}

fn render_list(ps: &[Polynomial], names: &Naming) -> Result<String, CliError> {
    let items: Result<Vec<String>, CliError> = ps.iter().map(|p| render(p, names)).collect();
    Ok(items?.join(", "))
}

fn render_matrix(m: &PolyMatrix, names: &Naming) -> Result<String, CliError> {
    let rows = m.render(names)?;
    Ok(rows.iter().map(|r| format!("  [{}]", r.join(", "))).collect::<Vec<_>>().join("\n"))
}

pub fn weights(partition: &str, naming_arg: NamingArg, format: Format) -> Result<Output, CliError> {
    let lambda = parse(partition)?;
    let names = naming(&lambda, naming_arg)?;
    let cache = WeightCache::new();
    let ext = lambda.extended();
    let mut lines = Vec::new();
    let mut cells = Vec::new();
    for &c in ext.cells() {
        let p = cache.weight(&lambda, c)?;
        let text = render(&p, &names)?;
        lines.push(format!("P{c} = {text}"));
        cells.push(json!({
            "cell": [c.row, c.col],
            "border": ext.is_border(c),
            "weight": p,
            "text": text,
        }));
    }
    let text = match format {
        Format::Text => lines.join("\n"),
        Format::Json => envelope(
            "weights",
            json!({ "partition": lambda.parts(), "naming": naming_name(naming_arg) }),
            json!({ "rows": ext.row_lengths(), "cells": cells }),
            None,
        ),
    };
    Ok(Output { text, ok: true })
}

pub fn snf(
    partition: &str,
    algorithm: AlgorithmArg,
    rect: Option<(usize, usize)>,
    naming_arg: NamingArg,
    format: Format,
) -> Result<Output, CliError> {
    let lambda = parse(partition)?;
    let names = naming(&lambda, naming_arg)?;
    if rect.is_some() && algorithm != AlgorithmArg::Inductive {
        return Err(CliError::Usage("--rect requires --algorithm inductive".to_string()));
    }
    let side = lambda.rank() + 1;
    let (rows, cols) = rect.unwrap_or((side, side));
    let cache = WeightCache::new();
    let w = rect_weight_matrix_with(&cache, &lambda, rows, cols)?;

    let algorithms: &[Algorithm] = match algorithm {
        AlgorithmArg::Recurrence => &[Algorithm::Recurrence],
        AlgorithmArg::Inductive => &[Algorithm::Inductive],
        AlgorithmArg::Both => &[Algorithm::Recurrence, Algorithm::Inductive],
    };

    let mut results: Vec<SnfResult> = Vec::new();
    let mut failures: Vec<String> = Vec::new();
    for &alg in algorithms {
        let r = match alg {
            Algorithm::Recurrence => snf_recurrence_with(&cache, &lambda),
            Algorithm::Inductive => snf_inductive_with(&cache, &lambda, rows, cols),
        };
        match r {
            Ok(r) => {
                if !verify_snf(&w, &r)?.ok {
                    failures.push(format!("{}: certificate does not verify", alg.name()));
                }
                results.push(r);
            }
            Err(e @ (SnfError::VerificationFailed { .. } | SnfError::Geometry(_))) => {
                failures.push(format!("{}: {e}", alg.name()));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let agree = (results.len() == algorithms.len())
        .then(|| results.windows(2).all(|w| w[0].diagonal == w[1].diagonal));
    let ok = failures.is_empty() && agree != Some(false);

    let text = match format {
        Format::Text => {
            let mut out = vec![
                format!("partition: {lambda}"),
                format!("matrix: {rows}x{cols} rectangle at (1,1)"),
            ];
            for r in &results {
                out.push(format!("[{}]", r.algorithm.name()));
                out.push(format!("diagonal: {}", render_list(&r.diagonal, &names)?));
                out.push("verified: true".to_string());
                out.push("P:".to_string());
                out.push(render_matrix(&r.p, &names)?);
                out.push("Q:".to_string());
                out.push(render_matrix(&r.q, &names)?);
            }
            out.extend(failures.iter().map(|f| format!("FAILED {f}")));
            if algorithms.len() > 1 {
                out.push(format!("agree: {}", agree == Some(true)));
            }
            out.join("\n")
        }
        Format::Json => {
            let rendered: Result<Vec<String>, CliError> = results
                .first()
                .map(|r| r.diagonal.iter().map(|p| render(p, &names)).collect())
                .unwrap_or_else(|| Ok(Vec::new()));
            envelope(
                "snf",
                json!({
                    "partition": lambda.parts(),
                    "algorithm": format!("{algorithm:?}").to_lowercase(),
                    "rect": [rows, cols],
                    "naming": naming_name(naming_arg),
                }),
                json!({
                    "results": results,
                    "diagonal_text": rendered?,
                    "agree": agree,
                    "failures": failures,
                }),
                Some(ok),
            )
        }
    };
    Ok(Output { text, ok })
}

pub fn recurrence(partition: &str, j: &str, naming_arg: NamingArg, format: Format) -> Result<Output, CliError> {
    let lambda = parse(partition)?;
    let names = naming(&lambda, naming_arg)?;
    let rank = lambda.rank();
    let columns: Vec<usize> = if j == "all" {
        (1..=rank + 1).collect()
    } else {
        let k: usize = j.parse().map_err(|_| CliError::Usage(format!("--j expects \"all\" or an index, got {j:?}")))?;
        if k == 0 || k > rank + 1 {
            return Err(CliError::Usage(format!("--j must lie in 1..={}", rank + 1)));
        }
        vec![k]
    };
    let cache = WeightCache::new();
    let family = TauFamily::new(&lambda);
    let a11 = leading_monomial(&lambda, Cell::new(1, 1))?;

    let mut ok = true;
    let mut lines = vec![format!("partition: {lambda}"), format!("rank: {rank}")];
    for (i, t) in family.taus.iter().enumerate() {
        lines.push(format!("tau_{i} = {}", render(t, &names)?));
    }
    let mut residuals = Vec::new();
    for &col in &columns {
        let residual = partition_snf::recurrence::check_recurrence_with(&cache, &family, col)?;
        let expected = if col == 1 { a11.clone() } else { Polynomial::zero() };
        let good = residual == expected;
        ok &= good;
        lines.push(format!(
            "j={col}: residual {}, expected {}, {}",
            render(&residual, &names)?,
            render(&expected, &names)?,
            if good { "ok" } else { "MISMATCH" }
        ));
        residuals.push(json!({ "j": col, "residual": residual, "expected": expected, "ok": good }));
    }
    let text = match format {
        Format::Text => lines.join("\n"),
        Format::Json => {
            let s_sets: Vec<Vec<[usize; 2]>> =
                family.s_sets.iter().map(|s| s.iter().map(|c| [c.row, c.col]).collect()).collect();
            envelope(
                "recurrence",
                json!({ "partition": lambda.parts(), "j": j }),
                json!({
                    "rank": rank,
                    "taus": family.taus,
                    "omegas": family.omegas,
                    "s_sets": s_sets,
                    "residuals": residuals,
                }),
                Some(ok),
            )
        }
    };
    Ok(Output { text, ok })
}

pub fn qcatalan(n_max: usize, format: Format) -> Result<Output, CliError> {
    let table = QCatalanTable::new(n_max);
    let cache = WeightCache::new();
    let mut ok = true;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for (n, c) in table.values().iter().enumerate() {
        if n == 0 {
            lines.push(format!("0, {c}"));
            rows.push(json!({ "n": 0, "q_catalan": c.to_string(), "snf_exponents": null, "ok": true }));
            continue;
        }
        let check = check_staircase(&cache, n, Algorithm::Inductive)?;
        ok &= check.ok();
        let exps: Vec<String> = expected_snf_exponents(n).iter().map(|e| e.to_string()).collect();
        lines.push(format!("{n}, {c}, ({}), {}", exps.join(","), if check.ok() { "ok" } else { "MISMATCH" }));
        rows.push(json!({
            "n": n,
            "q_catalan": c.to_string(),
            "snf_exponents": check.expected,
            "found_exponents": check.found,
            "ok": check.ok(),
        }));
    }
    let text = match format {
        Format::Text => lines.join("\n"),
        Format::Json => envelope("qcatalan", json!({ "n_max": n_max }), json!({ "rows": rows }), Some(ok)),
    };
    Ok(Output { text, ok })
}

pub fn selftest(max_size: usize, sequential: bool, format: Format) -> Result<Output, CliError> {
    if max_size == 0 {
        return Err(CliError::Usage("max_size must be at least 1".to_string()));
    }
    let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
    let report = sweep::run(max_size, exec);
    let ok = report.ok();
    let text = match format {
        Format::Text => report.to_string(),
        Format::Json => {
            let tallies: Vec<Value> = report
                .tallies
                .iter()
                .map(|(c, t)| {
                    json!({
                        "check": c.name(),
                        "passed": t.passed,
                        "failed": t.failed,
                        "skipped": t.skipped,
                        "failures": t.failures.iter().map(|(l, m)| json!({"partition": l.parts(), "message": m})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            envelope(
                "selftest",
                json!({ "max_size": max_size, "sequential": sequential }),
                json!({ "partitions": report.partitions, "checks": tallies }),
                Some(ok),
            )
        }
    };
    Ok(Output { text, ok })
}
