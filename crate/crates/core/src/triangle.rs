//! The three number triangles generated by their row recurrences.
//!
//! * tangent: `T(n+1,k) = T(n,k-1) + k(k+1) T(n,k+1)`, `T(0,0) = 1`, `T(n,0) = 0`.
//! * secant: `S(n+1,k) = S(n,k-1) + (k+1)^2 S(n,k+1)`, extended to `k = 0`
//!   with `S(n,-1) = 0` so the column of secant numbers seeds itself.
//! * arctangent: `A(n+1,k) = A(n,k-1) - n(n-1) A(n-1,k)`, `A(0,0) = 1`,
//!   `A(n,0) = 0`, with row `-1` taken as all zeros.
//!
//! Rows are stored densely (parity zeros included) and only ever appended.

use std::fmt;

use num_traits::{One, Zero};

use crate::number::ExactInt;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    TangentHigher,
    SecantHigher,
    ArctangentHigher,
}

impl TriangleKind {
    pub const ALL: [TriangleKind; 3] = [
        TriangleKind::TangentHigher,
        TriangleKind::SecantHigher,
        TriangleKind::ArctangentHigher,
    ];

    /// Short name used on the command line and in serialized output.
    pub fn short_name(self) -> &'static str {
        match self {
            TriangleKind::TangentHigher => "T",
            TriangleKind::SecantHigher => "S",
            TriangleKind::ArctangentHigher => "Tstar",
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// Lower-triangular table `(n, k) -> ExactInt` with `k <= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangle {
    kind: TriangleKind,
    rows: Vec<Vec<ExactInt>>,
}

impl Triangle {
    /// Builds rows `0..=n_max` of the given triangle.
    pub fn new(kind: TriangleKind, n_max: usize) -> Self {
        let mut tri = Triangle {
            kind,
            rows: vec![vec![ExactInt::one()]],
        };
        tri.extend_to(n_max);
        tri
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Largest row index currently materialized.
    pub fn generated_up_to(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<ExactInt>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Result<&[ExactInt]> {
        self.check_row(n)?;
        Ok(&self.rows[n])
    }

    /// Entry `(n, k)`; zero when `k > n`. Fails when row `n` has not been
    /// generated yet.
    pub fn cell(&self, n: usize, k: usize) -> Result<&ExactInt> {
        self.check_row(n)?;
        Ok(self.rows[n].get(k).unwrap_or(&ExactInt::ZERO))
    }

    /// Appends rows until row `n_max` exists. Existing rows are left untouched.
    pub fn extend_to(&mut self, n_max: usize) {
        while self.generated_up_to() < n_max {
            let next = self.next_row();
            self.rows.push(next);
        }
    }

    fn check_row(&self, n: usize) -> Result<()> {
        if n > self.generated_up_to() {
            return Err(Error::OutOfRange {
                n,
                generated_up_to: self.generated_up_to(),
            });
        }
        Ok(())
    }

    fn next_row(&self) -> Vec<ExactInt> {
        let n = self.generated_up_to();
        let prev = &self.rows[n];
        let at = |row: &[ExactInt], k: usize| row.get(k).cloned().unwrap_or_default();
        let mut next = Vec::with_capacity(n + 2);
        match self.kind {
            TriangleKind::TangentHigher => {
                next.push(ExactInt::zero());
                for k in 1..=n + 1 {
                    let coeff = (k * (k + 1)) as u64;
                    next.push(at(prev, k - 1) + at(prev, k + 1) * coeff);
                }
            }
            TriangleKind::SecantHigher => {
                for k in 0..=n + 1 {
                    let lower = if k == 0 {
                        ExactInt::zero()
                    } else {
                        at(prev, k - 1)
                    };
                    let coeff = ((k + 1) * (k + 1)) as u64;
                    next.push(lower + at(prev, k + 1) * coeff);
                }
            }
            TriangleKind::ArctangentHigher => {
                let empty = Vec::new();
                let before = if n == 0 { &empty } else { &self.rows[n - 1] };
                let coeff = (n * n.saturating_sub(1)) as u64;
                next.push(ExactInt::zero());
                for k in 1..=n + 1 {
                    next.push(at(prev, k - 1) - at(before, k) * coeff);
                }
            }
        }
        next
    }
}

pub fn tangent_triangle(n_max: usize) -> Triangle {
    Triangle::new(TriangleKind::TangentHigher, n_max)
}

pub fn secant_triangle(n_max: usize) -> Triangle {
    Triangle::new(TriangleKind::SecantHigher, n_max)
}

pub fn arctangent_triangle(n_max: usize) -> Triangle {
    Triangle::new(TriangleKind::ArctangentHigher, n_max)
}

/// Tangent numbers `[T_1, ..., T_{n_max}]`, column 1 of the tangent triangle.
pub fn tangent_numbers(n_max: usize) -> Vec<ExactInt> {
    let tri = tangent_triangle(n_max);
    (1..=n_max).map(|n| tri.rows[n][1].clone()).collect()
}

/// Secant numbers `[S_0, ..., S_{n_max}]`, column 0 of the secant triangle.
pub fn secant_numbers(n_max: usize) -> Vec<ExactInt> {
    let tri = secant_triangle(n_max);
    tri.rows.iter().map(|row| row[0].clone()).collect()
}
