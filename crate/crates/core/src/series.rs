//! Truncated Maclaurin series with exact rational coefficients.
//!
//! This is the independent ground truth for the triangles: `tan` and `sec` are
//! obtained by dividing the series of `sin` and `cos`, never from the tangent
//! or secant numbers, and the triangle entries are read off as scaled
//! coefficients of powers of these series.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::formulas::MethodTag;
use crate::number::{factorial, int_to_rational, rational, to_integer, ExactInt, ExactRational};
use crate::triangle::TriangleKind;
use crate::{Error, Result};

/// Coefficients `c_0..=c_N` of a power series known through `t^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<ExactRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn constant(c: ExactRational, order: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ExactRational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, or `None` past the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&ExactRational> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `self / other` through the common order. Fails if `other` has a zero
    /// constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order().min(other.order());
        if let Some(q) = self.truncate(order).div_scaled(&other.truncate(order)) {
            return Ok(q);
        }
        let mut q: Vec<ExactRational> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                let b = &other.coeffs[j];
                if !b.is_zero() && !q[i - j].is_zero() {
                    acc -= b * &q[i - j];
                }
            }
            q.push(acc / b0);
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// `c_i i!` for every coefficient, when all of them are integers.
    fn scaled_integers(&self) -> Option<Vec<ExactInt>> {
        let mut fact = ExactInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                fact *= i;
            }
            let scaled = c * int_to_rational(&fact);
            if !scaled.is_integer() {
                return None;
            }
            out.push(scaled.to_integer());
        }
        Some(out)
    }

    /// Division in integer arithmetic for equal-order series whose
    /// coefficients times `i!` are integers and whose divisor has constant
    /// term +-1: with `A_i = a_i i!` etc., `A_i = sum_j C(i,j) B_j Q_{i-j}`.
    fn div_scaled(&self, other: &Self) -> Option<Self> {
        let b0 = other.coeffs[0].to_integer();
        if !other.coeffs[0].is_integer() || (b0 != ExactInt::one() && b0 != -ExactInt::one()) {
            return None;
        }
        let a = self.scaled_integers()?;
        let b = other.scaled_integers()?;
        let mut q: Vec<ExactInt> = Vec::with_capacity(a.len());
        let mut binom_row = vec![ExactInt::one()];
        for i in 0..a.len() {
            if i > 0 {
                let mut next = vec![ExactInt::one(); i + 1];
                for j in 1..i {
                    next[j] = &binom_row[j - 1] + &binom_row[j];
                }
                binom_row = next;
            }
            let mut acc = a[i].clone();
            for j in 1..=i {
                if !b[j].is_zero() && !q[i - j].is_zero() {
                    acc -= &binom_row[j] * &b[j] * &q[i - j];
                }
            }
            q.push(acc * &b0);
        }
        let mut fact = ExactInt::one();
        let coeffs = q
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                if i > 0 {
                    fact *= i;
                }
                ExactRational::new(v, fact.clone())
            })
            .collect();
        Some(TruncatedSeries { coeffs })
    }

    /// `self^k` by repeated squaring; `self^0` is the unit series.
    pub fn pow(&self, k: usize) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Termwise derivative; the order drops by one (an order-0 series
    /// differentiates to the zero series of order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::constant(ExactRational::zero(), 0);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * ExactRational::from_integer(ExactInt::from(i + 1)))
            .collect();
        TruncatedSeries { coeffs }
    }

    #[cfg(test)]
    /// Divides by `t`; requires `c_0 = 0` and order >= 1.
    pub(crate) fn shift_down(&self) -> Self {
        debug_assert!(self.coeffs[0].is_zero() && self.order() >= 1);
        TruncatedSeries {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Horner evaluation of the truncated polynomial at `x`.
    pub fn evaluate(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    fn from_fn(order: usize, f: impl Fn(usize) -> ExactRational) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    fn trig_like(order: usize, odd: bool, alternating: bool) -> Self {
        Self::from_fn(order, |i| {
            if (i % 2 == 1) != odd {
                return ExactRational::zero();
            }
            let c = ExactRational::new(ExactInt::one(), factorial(i));
            if alternating && (i / 2) % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }

    pub fn sin(order: usize) -> Self {
        Self::trig_like(order, true, true)
    }

    pub fn cos(order: usize) -> Self {
        Self::trig_like(order, false, true)
    }

    pub fn sinh(order: usize) -> Self {
        Self::trig_like(order, true, false)
    }

    pub fn cosh(order: usize) -> Self {
        Self::trig_like(order, false, false)
    }

    /// `t - t^3/3 + t^5/5 - ...`
    pub fn arctan(order: usize) -> Self {
        Self::from_fn(order, |i| {
            if i % 2 == 0 {
                ExactRational::zero()
            } else if (i / 2) % 2 == 0 {
                rational(1, i as i64)
            } else {
                rational(-1, i as i64)
            }
        })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_fn(order, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_fn(order, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }
}

/// Cauchy product truncated to the smaller of the two orders.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![ExactRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

pub fn tan_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::sin(order)
        .div(&TruncatedSeries::cos(order))
        .expect("cos has constant term 1")
}

pub fn sec_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::one(order)
        .div(&TruncatedSeries::cos(order))
        .expect("cos has constant term 1")
}

/// `n! [t^n] s / k!`, checked to be an integer.
fn scaled_coefficient(s: &TruncatedSeries, n: usize, k: usize) -> Result<ExactInt> {
    let c = s.coeffs[n].clone() * int_to_rational(&factorial(n)) / int_to_rational(&factorial(k));
    let text = c.to_string();
    to_integer(c).ok_or(Error::NonIntegral {
        method: MethodTag::Oracle,
        n,
        k,
        value: text,
    })
}

/// `n! [t^n] tan^k t / k!`
pub fn definitional_t(n: usize, k: usize) -> Result<ExactInt> {
    scaled_coefficient(&tan_series(n).pow(k), n, k)
}

/// `n! [t^n] sec t tan^k t / k!`
pub fn definitional_s(n: usize, k: usize) -> Result<ExactInt> {
    scaled_coefficient(&(&sec_series(n) * &tan_series(n).pow(k)), n, k)
}

/// `n! [t^n] arctan^k t / k!`
pub fn definitional_tstar(n: usize, k: usize) -> Result<ExactInt> {
    scaled_coefficient(&TruncatedSeries::arctan(n).pow(k), n, k)
}

/// Rows `0..=n_max` of a triangle read off successive powers of its base
/// series.
pub fn definitional_triangle(kind: TriangleKind, n_max: usize) -> Result<Vec<Vec<ExactInt>>> {
    let (base, mut power) = match kind {
        TriangleKind::TangentHigher => (tan_series(n_max), TruncatedSeries::one(n_max)),
        TriangleKind::SecantHigher => (tan_series(n_max), sec_series(n_max)),
        TriangleKind::ArctangentHigher => {
            (TruncatedSeries::arctan(n_max), TruncatedSeries::one(n_max))
        }
    };
    let mut rows: Vec<Vec<ExactInt>> = (0..=n_max).map(|n| Vec::with_capacity(n + 1)).collect();
    for k in 0..=n_max {
        for (n, row) in rows.iter_mut().enumerate().skip(k) {
            row.push(scaled_coefficient(&power, n, k)?);
        }
        power = &power * &base;
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> ExactRational {
        rational(n, d)
    }

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn sin_cos_coefficients() {
        assert_eq!(
            TruncatedSeries::sin(3).coeffs(),
            &[r(0, 1), r(1, 1), r(0, 1), r(-1, 6)]
        );
        assert_eq!(
            TruncatedSeries::cos(2).coeffs(),
            &[r(1, 1), r(0, 1), r(-1, 2)]
        );
        assert_eq!(TruncatedSeries::cos(0).coeffs(), &[r(1, 1)]);
    }

    #[test]
    fn division_examples() {
        // T_1/1!, T_3/3!, T_5/5! = 1, 2/6, 16/120
        assert_eq!(
            tan_series(5).coeffs(),
            &[r(0, 1), r(1, 1), r(0, 1), r(1, 3), r(0, 1), r(2, 15)]
        );
        // S_2/2!, S_4/4! = 1/2, 5/24
        assert_eq!(
            sec_series(4).coeffs(),
            &[r(1, 1), r(0, 1), r(1, 2), r(0, 1), r(5, 24)]
        );
        let s = TruncatedSeries::cos(6);
        assert_eq!(s.div(&s).unwrap(), TruncatedSeries::one(6));
        assert_eq!(
            s.div(&TruncatedSeries::sin(6)),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn product_and_power_examples() {
        let tan = tan_series(8);
        assert_eq!(tan.pow(0), TruncatedSeries::one(8));
        // tan^2 = sec^2 - 1 = t^2 + (2/3) t^4 + ...
        assert_eq!(
            &tan.pow(2).coeffs()[..5],
            &[r(0, 1), r(0, 1), r(1, 1), r(0, 1), r(2, 3)]
        );
        let sec_tan = &sec_series(8) * &tan;
        assert_eq!(sec_tan.coeff(1), Some(&r(1, 1)));
    }

    #[test]
    fn arctan_coefficients() {
        let a = TruncatedSeries::arctan(5);
        assert_eq!(a.coeff(3), Some(&r(-1, 3)));
        assert_eq!(a.coeff(2), Some(&r(0, 1)));
        assert_eq!(a.coeff(5), Some(&r(1, 5)));
        assert_eq!(a.coeff(6), None);
    }

    #[test]
    fn definitional_examples() {
        assert_eq!(definitional_t(7, 3).unwrap(), int(616));
        assert_eq!(definitional_t(4, 4).unwrap(), int(1));
        assert_eq!(definitional_t(5, 2).unwrap(), int(0));
        assert_eq!(definitional_s(8, 2).unwrap(), int(12284));
        assert_eq!(definitional_s(0, 0).unwrap(), int(1));
        assert_eq!(definitional_s(3, 2).unwrap(), int(0));
        assert_eq!(definitional_tstar(7, 1).unwrap(), int(-720));
        assert_eq!(definitional_tstar(6, 2).unwrap(), int(184));
        assert_eq!(definitional_tstar(9, 9).unwrap(), int(1));
    }

    #[test]
    fn batch_matches_single_cells() {
        for kind in TriangleKind::ALL {
            let rows = definitional_triangle(kind, 8).unwrap();
            for n in 0..=8 {
                for k in 0..=n {
                    let single = match kind {
                        TriangleKind::TangentHigher => definitional_t(n, k),
                        TriangleKind::SecantHigher => definitional_s(n, k),
                        TriangleKind::ArctangentHigher => definitional_tstar(n, k),
                    };
                    assert_eq!(rows[n][k], single.unwrap());
                }
            }
        }
    }

    #[test]
    fn derivative_and_shift() {
        let s = TruncatedSeries::sin(7);
        assert_eq!(s.derivative(), TruncatedSeries::cos(6));
        let sin_over_t = s.shift_down();
        assert_eq!(sin_over_t.coeff(0), Some(&r(1, 1)));
        assert_eq!(sin_over_t.coeff(2), Some(&r(-1, 6)));
    }

    fn small_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((-9i64..10, 1i64..6), order + 1).prop_map(|v| {
            TruncatedSeries::from_coeffs(v.into_iter().map(|(n, d)| r(n, d)).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mul_commutes_and_associates(
            a in small_series(6), b in small_series(6), c in small_series(6)
        ) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn div_undoes_mul(a in small_series(20), b in small_series(20)) {
            prop_assume!(!b.coeffs()[0].is_zero());
            prop_assert_eq!((&a * &b).div(&b).unwrap(), a);
        }
    }
}
