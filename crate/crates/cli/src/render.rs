//! Output formats. Numbers are plain ASCII decimals with a leading `-` for
//! negatives; JSON numbers are emitted at full precision.

use std::io::{self, Write};

use serde_json::{json, Map, Number, Value};
use tanseq::{
    CrossCheckReport, DerivativePolynomial, ExactInt, MethodTag, TriangleKind, ValidationReport,
};

use crate::bench::BenchResult;
use crate::{Failure, Format};

fn number(v: &ExactInt) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("integer literal"))
}

fn float(v: f64) -> Value {
    Number::from_f64(v).map_or(Value::Null, Value::Number)
}

fn write_json(out: &mut impl Write, value: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

pub fn table(
    out: &mut impl Write,
    kind: TriangleKind,
    rows: &[Vec<ExactInt>],
    format: Format,
    offset: i64,
) -> io::Result<()> {
    match format {
        Format::Pretty => pretty_table(out, rows),
        Format::Csv => {
            for row in rows {
                let line: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", line.join(","))?;
            }
            Ok(())
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|row| Value::Array(row.iter().map(number).collect()))
                .collect();
            write_json(
                out,
                &json!({ "kind": kind.short_name(), "n_max": rows.len() - 1, "rows": rows }),
            )
        }
        Format::Bfile => {
            for (i, v) in rows.iter().flatten().enumerate() {
                writeln!(out, "{} {}", offset + i as i64, v)?;
            }
            Ok(())
        }
    }
}

/// Right-aligned columns under an `n\k` header; cells with `k > n` are blank.
fn pretty_table(out: &mut impl Write, rows: &[Vec<ExactInt>]) -> io::Result<()> {
    let n_max = rows.len() - 1;
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    let label_width = n_max.to_string().len().max(3);
    let widths: Vec<usize> = (0..=n_max)
        .map(|k| {
            cells
                .iter()
                .filter_map(|row| row.get(k).map(String::len))
                .max()
                .unwrap_or(0)
                .max(k.to_string().len())
        })
        .collect();
    write!(out, "{:>label_width$} |", "n\\k")?;
    for (k, w) in widths.iter().enumerate() {
        write!(out, " {k:>w$}")?;
    }
    writeln!(out)?;
    let total = label_width + 2 + widths.iter().map(|w| w + 1).sum::<usize>();
    writeln!(out, "{}", "-".repeat(total))?;
    for (n, row) in cells.iter().enumerate() {
        write!(out, "{n:>label_width$} |")?;
        for (v, w) in row.iter().zip(&widths) {
            write!(out, " {v:>w$}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn value(
    out: &mut impl Write,
    kind: TriangleKind,
    method: MethodTag,
    n: usize,
    k: usize,
    v: &ExactInt,
    format: Format,
    offset: i64,
) -> io::Result<()> {
    match format {
        Format::Pretty | Format::Csv => writeln!(out, "{v}"),
        Format::Bfile => writeln!(out, "{offset} {v}"),
        Format::Json => write_json(
            out,
            &json!({
                "kind": kind.short_name(),
                "method": method.name(),
                "n": n,
                "k": k,
                "value": number(v),
            }),
        ),
    }
}

pub fn crosscheck(
    out: &mut impl Write,
    report: &CrossCheckReport,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Pretty => {
            let width = report
                .counts
                .iter()
                .map(|c| c.check.to_string().len())
                .max()
                .unwrap_or(0);
            writeln!(out, "crosscheck n_max = {}", report.n_max)?;
            for c in &report.counts {
                let status = if c.passed == c.checked { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "{:<width$}  {:>6} checked  {:>6} passed  {status}",
                    c.check.to_string(),
                    c.checked,
                    c.passed
                )?;
            }
            let verdict = if report.passed() { "PASS" } else { "FAIL" };
            writeln!(out, "total {} checked: {verdict}", report.total_checked())
        }
        Format::Csv | Format::Bfile => {
            writeln!(out, "check,checked,passed")?;
            for c in &report.counts {
                writeln!(out, "{},{},{}", c.check, c.checked, c.passed)?;
            }
            Ok(())
        }
        Format::Json => {
            let counts: Vec<Value> = report
                .counts
                .iter()
                .map(|c| json!({ "check": c.check.to_string(), "checked": c.checked, "passed": c.passed }))
                .collect();
            let first = report.first_mismatch().map(|m| {
                json!({
                    "check": m.check.to_string(),
                    "n": m.n,
                    "k": m.k,
                    "expected": m.expected,
                    "got": m.got,
                })
            });
            write_json(
                out,
                &json!({
                    "n_max": report.n_max,
                    "passed": report.passed(),
                    "total_checked": report.total_checked(),
                    "counts": counts,
                    "first_mismatch": first,
                }),
            )
        }
    }
}

fn polynomial_json(poly: &DerivativePolynomial) -> Value {
    let terms: Map<String, Value> = poly
        .terms
        .iter()
        .map(|(k, c)| (k.to_string(), number(c)))
        .collect();
    json!({
        "func": poly.func.name(),
        "n": poly.n,
        "prefactor": poly.prefactor.name(),
        "base": poly.base.name(),
        "constant": number(&poly.constant),
        "terms": terms,
    })
}

pub fn polynomial(
    out: &mut impl Write,
    poly: &DerivativePolynomial,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Pretty | Format::Bfile => writeln!(out, "D^{} {}(x) = {}", poly.n, poly.func, poly),
        Format::Csv => {
            writeln!(out, "power,coefficient")?;
            writeln!(out, "constant,{}", poly.constant)?;
            for (k, c) in &poly.terms {
                writeln!(out, "{k},{c}")?;
            }
            Ok(())
        }
        Format::Json => write_json(out, &polynomial_json(poly)),
    }
}

fn status_name(report: &ValidationReport) -> &'static str {
    match report.status {
        tanseq::ValidationStatus::Pass => "pass",
        tanseq::ValidationStatus::Fail => "fail",
        tanseq::ValidationStatus::Inconclusive => "inconclusive",
    }
}

pub fn derivative_value(
    out: &mut impl Write,
    poly: &DerivativePolynomial,
    x: f64,
    value: f64,
    report: Option<&ValidationReport>,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Pretty | Format::Bfile => {
            writeln!(out, "{value:?}")?;
            if let Some(r) = report {
                writeln!(
                    out,
                    "oracle {:?} (order {}), relative error {:e}, tol {:e}: {}",
                    r.oracle,
                    r.order,
                    r.relative_error,
                    r.tol,
                    status_name(r)
                )?;
            }
            Ok(())
        }
        Format::Csv => {
            write!(out, "func,n,x,value")?;
            if report.is_some() {
                write!(out, ",oracle,relative_error,tol,order,status")?;
            }
            writeln!(out)?;
            write!(out, "{},{},{x:?},{value:?}", poly.func, poly.n)?;
            if let Some(r) = report {
                write!(
                    out,
                    ",{:?},{:e},{:e},{},{}",
                    r.oracle,
                    r.relative_error,
                    r.tol,
                    r.order,
                    status_name(r)
                )?;
            }
            writeln!(out)
        }
        Format::Json => {
            let mut obj = json!({
                "func": poly.func.name(),
                "n": poly.n,
                "x": float(x),
                "value": float(value),
            });
            if let Some(r) = report {
                obj["validation"] = json!({
                    "oracle": float(r.oracle),
                    "relative_error": float(r.relative_error),
                    "tol": float(r.tol),
                    "order": r.order,
                    "status": status_name(r),
                });
            }
            write_json(out, &obj)
        }
    }
}

pub fn bench(out: &mut impl Write, result: &BenchResult, format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let rows: Vec<Value> = result
                .rows
                .iter()
                .map(|(m, d)| json!({ "method": m.name(), "n_max": result.n_max, "median_ns": d.as_nanos() as u64 }))
                .collect();
            write_json(
                out,
                &json!({
                    "n_max": result.n_max,
                    "prerequisites_ns": result.prerequisites.as_nanos() as u64,
                    "methods": rows,
                }),
            )?;
        }
        _ => {
            writeln!(out, "method,n_max,median_ns")?;
            for (m, d) in &result.rows {
                writeln!(out, "{},{},{}", m.name(), result.n_max, d.as_nanos())?;
            }
            writeln!(
                out,
                "prerequisites,{},{}",
                result.n_max,
                result.prerequisites.as_nanos()
            )?;
        }
    }
    Ok(())
}
