//! Runs every alternative method against the triangle recurrences and the
//! series oracle, together with the row-sum identities and the `tan^n`
//! expansion.

use std::fmt;
use std::thread;

use crate::formulas::{self, MethodTag, Tables};
use crate::number::ExactInt;
use crate::series;
use crate::triangle::TriangleKind;
use crate::Result;

/// Extra truncation order used when checking the `tan^n` expansion.
pub const TAN_POWER_EXTRA_ORDER: usize = 15;

/// One kind of check performed by [`crosscheck`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// A method computing the tangent numbers of order k.
    Tangent(MethodTag),
    /// A method computing the secant numbers of order k.
    Secant(MethodTag),
    /// Arctangent triangle against the series oracle.
    Arctangent(MethodTag),
    RowIdentityA,
    RowIdentityB,
    TanPowerExpansion,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Tangent(m) => write!(f, "T:{m}"),
            Check::Secant(m) => write!(f, "S:{m}"),
            Check::Arctangent(m) => write!(f, "Tstar:{m}"),
            Check::RowIdentityA => f.write_str("row-identity-a"),
            Check::RowIdentityB => f.write_str("row-identity-b"),
            Check::TanPowerExpansion => f.write_str("tan-power-expansion"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckCount {
    pub check: Check,
    pub checked: usize,
    pub passed: usize,
}

/// A disagreement. For identity checks `k` is 0 and the values are rendered
/// as `true`/`false`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub check: Check,
    pub n: usize,
    pub k: usize,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheckReport {
    pub n_max: usize,
    pub counts: Vec<CheckCount>,
    pub failures: Vec<Mismatch>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_checked(&self) -> usize {
        self.counts.iter().map(|c| c.checked).sum()
    }

    pub fn first_mismatch(&self) -> Option<&Mismatch> {
        self.failures.first()
    }
}

struct Tally {
    count: CheckCount,
    failures: Vec<Mismatch>,
}

impl Tally {
    fn new(check: Check) -> Self {
        Tally {
            count: CheckCount {
                check,
                checked: 0,
                passed: 0,
            },
            failures: Vec::new(),
        }
    }

    fn record(&mut self, n: usize, k: usize, expected: &ExactInt, got: Result<ExactInt>) {
        self.count.checked += 1;
        match got {
            Ok(v) if &v == expected => self.count.passed += 1,
            Ok(v) => self.fail(n, k, expected.to_string(), v.to_string()),
            Err(e) => self.fail(n, k, expected.to_string(), format!("error: {e}")),
        }
    }

    fn record_identity(&mut self, n: usize, outcome: Result<bool>) {
        self.count.checked += 1;
        match outcome {
            Ok(true) => self.count.passed += 1,
            Ok(false) => self.fail(n, 0, "true".into(), "false".into()),
            Err(e) => self.fail(n, 0, "true".into(), format!("error: {e}")),
        }
    }

    fn fail(&mut self, n: usize, k: usize, expected: String, got: String) {
        self.failures.push(Mismatch {
            check: self.count.check,
            n,
            k,
            expected,
            got,
        });
    }
}

fn parity_cells(n_max: usize, k_min: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n_max).flat_map(move |n| {
        (k_min..=n)
            .filter(move |k| (n + k) % 2 == 0)
            .map(move |k| (n, k))
    })
}

fn run_check(check: Check, tables: &Tables, n_max: usize) -> Tally {
    let mut tally = Tally::new(check);
    match check {
        Check::Tangent(MethodTag::Oracle) => {
            compare_oracle(&mut tally, tables, TriangleKind::TangentHigher, n_max)
        }
        Check::Secant(MethodTag::Oracle) => {
            compare_oracle(&mut tally, tables, TriangleKind::SecantHigher, n_max)
        }
        Check::Arctangent(_) => {
            compare_oracle(&mut tally, tables, TriangleKind::ArctangentHigher, n_max)
        }
        Check::Tangent(method) => {
            for (n, k) in parity_cells(n_max, 1) {
                let expected = tables.tangent.cell(n, k).expect("tables cover n_max");
                tally.record(n, k, expected, formulas::tangent(method, tables, n, k));
            }
        }
        Check::Secant(method) => {
            for (n, k) in parity_cells(n_max, 0) {
                let expected = tables.secant.cell(n, k).expect("tables cover n_max");
                tally.record(n, k, expected, formulas::secant(method, tables, n, k));
            }
        }
        Check::RowIdentityA => {
            for n in 1..=n_max {
                tally.record_identity(n, formulas::check_row_identity_a(tables, n));
            }
        }
        Check::RowIdentityB => {
            for n in 1..=n_max {
                tally.record_identity(n, formulas::check_row_identity_b(tables, n));
            }
        }
        Check::TanPowerExpansion => {
            for n in 1..=n_max {
                let order = n + TAN_POWER_EXTRA_ORDER;
                tally.record_identity(n, formulas::check_tan_power_expansion(tables, n, order));
            }
        }
    }
    tally
}

/// Oracle comparison over every cell `0 <= k <= n <= n_max`, zeros included.
fn compare_oracle(tally: &mut Tally, tables: &Tables, kind: TriangleKind, n_max: usize) {
    let rows = match series::definitional_triangle(kind, n_max) {
        Ok(rows) => rows,
        Err(e) => {
            tally.count.checked += 1;
            tally.fail(0, 0, "oracle triangle".into(), format!("error: {e}"));
            return;
        }
    };
    let tri = tables.triangle(kind);
    for (n, row) in rows.into_iter().enumerate() {
        for (k, v) in row.into_iter().enumerate() {
            tally.record(n, k, tri.cell(n, k).expect("tables cover n_max"), Ok(v));
        }
    }
}

/// The checks run for a method selection. The triangle recurrence is the
/// reference and is not checked against itself.
pub fn checks_for(methods: &[MethodTag]) -> Vec<Check> {
    let mut checks = Vec::new();
    for &m in methods {
        match m {
            MethodTag::Recurrence => {}
            MethodTag::CauchyProduct => checks.push(Check::Secant(m)),
            MethodTag::Oracle => {
                checks.push(Check::Tangent(m));
                checks.push(Check::Secant(m));
                checks.push(Check::Arctangent(m));
            }
            _ => checks.push(Check::Tangent(m)),
        }
    }
    checks.extend([
        Check::RowIdentityA,
        Check::RowIdentityB,
        Check::TanPowerExpansion,
    ]);
    checks.sort();
    checks.dedup();
    checks
}

/// Runs the selected methods and the identity checks for all rows up to
/// `n_max`, one thread per check.
pub fn crosscheck(n_max: usize, methods: &[MethodTag]) -> CrossCheckReport {
    let tables = Tables::new(n_max);
    let checks = checks_for(methods);
    let tallies: Vec<Tally> = thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|&check| {
                let tables = &tables;
                scope.spawn(move || run_check(check, tables, n_max))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });
    let mut report = CrossCheckReport {
        n_max,
        counts: Vec::with_capacity(tallies.len()),
        failures: Vec::new(),
    };
    for tally in tallies {
        report.counts.push(tally.count);
        report.failures.extend(tally.failures);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = crosscheck(1, &MethodTag::ALL);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn nine_rows_count_parity_valid_cells() {
        let report = crosscheck(9, &MethodTag::ALL);
        assert!(report.passed(), "{:?}", report.failures);
        // rows 1..=9 hold 1,1,2,2,3,3,4,4,5 parity-valid cells with k >= 1
        for c in &report.counts {
            if let Check::Tangent(m) = c.check {
                if m != MethodTag::Oracle {
                    assert_eq!(c.checked, 25, "{m}");
                }
            }
        }
        let alternatives = report
            .counts
            .iter()
            .filter(|c| matches!(c.check, Check::Tangent(m) if m != MethodTag::Oracle))
            .count();
        assert_eq!(alternatives, 8);
        assert_eq!(
            report.total_checked(),
            report.counts.iter().map(|c| c.passed).sum::<usize>()
        );
    }

    #[test]
    fn selection_controls_checks() {
        let checks = checks_for(&[MethodTag::Lah]);
        assert!(checks.contains(&Check::Tangent(MethodTag::Lah)));
        assert!(!checks.contains(&Check::Tangent(MethodTag::Stirling)));
        assert!(checks.contains(&Check::RowIdentityA));
    }
}
