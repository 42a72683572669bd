//! Workloads shared by the criterion benchmarks under `benches/`.

use tanseq::formulas::{self, Tables};
use tanseq::{DerivativeOracle, FunctionTag, MethodTag, Result};

/// Builds every parity-valid cell of the triangle a method produces: the
/// secant triangle for the Cauchy product, the tangent triangle otherwise.
/// Returns the number of rows.
pub fn full_triangle(method: MethodTag, tables: &Tables, n_max: usize) -> Result<usize> {
    if method == MethodTag::CauchyProduct {
        for n in 0..=n_max {
            for k in (0..=n).filter(|k| (n + k) % 2 == 0) {
                formulas::secant_via_cauchy(tables, n, k)?;
            }
        }
        return Ok(n_max + 1);
    }
    Ok(formulas::tangent_triangle_via(method, tables, n_max)?.len())
}

/// Validates every function at one point for derivative orders `0..=n_max`.
pub fn validation_sweep(n_max: usize, x: f64) -> Result<usize> {
    let mut oracle = DerivativeOracle::new();
    let mut passed = 0;
    for func in FunctionTag::ALL {
        for n in 0..=n_max {
            let report = oracle.validate(func, n, x, 1e-9)?;
            passed += usize::from(report.status == tanseq::ValidationStatus::Pass);
        }
    }
    Ok(passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_run() {
        let tables = Tables::new(10);
        for method in MethodTag::ALL {
            assert_eq!(full_triangle(method, &tables, 10).unwrap(), 11, "{method}");
        }
        assert_eq!(validation_sweep(4, 0.2).unwrap(), 40);
    }
}
