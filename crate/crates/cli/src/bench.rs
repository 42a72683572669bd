//! Wall-clock timing of the methods on the full parity-valid triangle.

use std::hint::black_box;
use std::time::{Duration, Instant};

use tanseq::formulas::{self, Tables};
use tanseq::{MethodTag, Result};

pub const DEFAULT_METHODS: [MethodTag; 10] = [
    MethodTag::Recurrence,
    MethodTag::PowerSeriesRecurrence,
    MethodTag::CauchyProduct,
    MethodTag::BellRecurrenceA,
    MethodTag::BellRecurrenceB,
    MethodTag::ArctanBasis,
    MethodTag::SchwattDoubleSum,
    MethodTag::Stirling,
    MethodTag::Lah,
    MethodTag::CentralFactorial,
];

pub struct BenchResult {
    pub n_max: usize,
    /// Time to build the shared triangles and classical sequences, which is
    /// not charged to any method.
    pub prerequisites: Duration,
    pub rows: Vec<(MethodTag, Duration)>,
}

/// Computes every parity-valid cell of the triangle a method produces: the
/// secant triangle for the Cauchy product, the tangent triangle otherwise.
pub fn full_triangle(method: MethodTag, tables: &Tables, n_max: usize) -> Result<usize> {
    if method == MethodTag::CauchyProduct {
        let mut cells = 0;
        for n in 0..=n_max {
            for k in (0..=n).filter(|k| (n + k) % 2 == 0) {
                black_box(formulas::secant_via_cauchy(tables, n, k)?);
                cells += 1;
            }
        }
        return Ok(cells);
    }
    let rows = formulas::tangent_triangle_via(method, tables, n_max)?;
    Ok(black_box(rows).len())
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

pub fn run(n_max: usize, methods: &[MethodTag], reps: usize) -> Result<BenchResult> {
    let start = Instant::now();
    let tables = Tables::new(n_max);
    let prerequisites = start.elapsed();
    let mut rows = Vec::with_capacity(methods.len());
    for &method in methods {
        let mut samples = Vec::with_capacity(reps);
        for _ in 0..reps {
            let start = Instant::now();
            full_triangle(method, &tables, n_max)?;
            samples.push(start.elapsed());
        }
        rows.push((method, median(samples)));
    }
    Ok(BenchResult {
        n_max,
        prerequisites,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_single_sample() {
        let d = Duration::from_nanos(42);
        assert_eq!(median(vec![d]), d);
        assert_eq!(
            median(vec![
                Duration::from_nanos(4),
                Duration::from_nanos(1),
                Duration::from_nanos(2)
            ]),
            Duration::from_nanos(2)
        );
    }
}
