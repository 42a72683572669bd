//! Closed-form nth derivatives of tan, sec, cot, csc and their hyperbolic
//! counterparts as polynomials in tan/cot/tanh/coth, optionally multiplied by
//! sec/csc/sech/csch.
//!
//! With `T(n,k)` the tangent numbers of order `k` and `S(n,k)` the secant
//! numbers of order `k`:
//!
//! ```text
//! D^n tan x  = T(n,1) + sum_{k=1}^{n+1} (k-1)! T(n+1,k) tan^k x
//! D^n sec x  = sec x sum_{k=0}^{n} k! S(n,k) tan^k x
//! D^n cot x  = (-1)^n [T(n,1) + sum_{k=1}^{n+1} (k-1)! T(n+1,k) cot^k x]
//! D^n csc x  = (-1)^n csc x sum_{k=0}^{n} k! S(n,k) cot^k x
//! D^n tanh x = (-1)^((n-1)/2) T(n,1) + sum_k (-1)^((n+k-1)/2) (k-1)! T(n+1,k) tanh^k x
//! D^n sech x = sech x sum_k (-1)^((n+k)/2) k! S(n,k) tanh^k x
//! ```
//!
//! and coth/csch as tanh/sech with coth substituted. Sign exponents are only
//! evaluated on terms that survive the parity rule, where they are integral.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::number::{factorial, int_to_rational, sign, ExactInt, ExactRational};
use crate::series::TruncatedSeries;
use crate::triangle::{secant_triangle, tangent_triangle, Triangle};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionTag {
    Tan,
    Sec,
    Cot,
    Csc,
    Tanh,
    Sech,
    Coth,
    Csch,
}

impl FunctionTag {
    pub const ALL: [FunctionTag; 8] = [
        FunctionTag::Tan,
        FunctionTag::Sec,
        FunctionTag::Cot,
        FunctionTag::Csc,
        FunctionTag::Tanh,
        FunctionTag::Sech,
        FunctionTag::Coth,
        FunctionTag::Csch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionTag::Tan => "tan",
            FunctionTag::Sec => "sec",
            FunctionTag::Cot => "cot",
            FunctionTag::Csc => "csc",
            FunctionTag::Tanh => "tanh",
            FunctionTag::Sech => "sech",
            FunctionTag::Coth => "coth",
            FunctionTag::Csch => "csch",
        }
    }

    pub fn is_hyperbolic(self) -> bool {
        matches!(
            self,
            FunctionTag::Tanh | FunctionTag::Sech | FunctionTag::Coth | FunctionTag::Csch
        )
    }

    /// Whether the derivative is written with a sec/csc/sech/csch prefactor.
    fn is_secant_family(self) -> bool {
        matches!(
            self,
            FunctionTag::Sec | FunctionTag::Csc | FunctionTag::Sech | FunctionTag::Csch
        )
    }

    pub fn prefactor(self) -> Prefactor {
        match self {
            FunctionTag::Sec => Prefactor::SecX,
            FunctionTag::Csc => Prefactor::CscX,
            FunctionTag::Sech => Prefactor::SechX,
            FunctionTag::Csch => Prefactor::CschX,
            _ => Prefactor::None,
        }
    }

    pub fn base_variable(self) -> BaseVariable {
        match self {
            FunctionTag::Tan | FunctionTag::Sec => BaseVariable::TanX,
            FunctionTag::Cot | FunctionTag::Csc => BaseVariable::CotX,
            FunctionTag::Tanh | FunctionTag::Sech => BaseVariable::TanhX,
            FunctionTag::Coth | FunctionTag::Csch => BaseVariable::CothX,
        }
    }

    /// The function value at `x` in double precision.
    pub fn eval(self, x: f64) -> f64 {
        match self {
            FunctionTag::Tan => x.tan(),
            FunctionTag::Sec => x.cos().recip(),
            FunctionTag::Cot => x.cos() / x.sin(),
            FunctionTag::Csc => x.sin().recip(),
            FunctionTag::Tanh => x.tanh(),
            FunctionTag::Sech => x.cosh().recip(),
            FunctionTag::Coth => x.tanh().recip(),
            FunctionTag::Csch => x.sinh().recip(),
        }
    }

    /// The quantity that vanishes at the poles, and the nearest pole to `x`.
    fn pole_guard(self, x: f64) -> Option<(f64, f64)> {
        match self {
            FunctionTag::Tan | FunctionTag::Sec => {
                let m = ((x - FRAC_PI_2) / PI).round();
                Some((x.cos(), FRAC_PI_2 + m * PI))
            }
            FunctionTag::Cot | FunctionTag::Csc => Some((x.sin(), (x / PI).round() * PI)),
            FunctionTag::Coth | FunctionTag::Csch => Some((x.sinh(), 0.0)),
            FunctionTag::Tanh | FunctionTag::Sech => None,
        }
    }
}

impl fmt::Display for FunctionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunctionTag::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown function `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Prefactor {
    None,
    SecX,
    CscX,
    SechX,
    CschX,
}

impl Prefactor {
    pub fn name(self) -> Option<&'static str> {
        match self {
            Prefactor::None => None,
            Prefactor::SecX => Some("sec"),
            Prefactor::CscX => Some("csc"),
            Prefactor::SechX => Some("sech"),
            Prefactor::CschX => Some("csch"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseVariable {
    TanX,
    CotX,
    TanhX,
    CothX,
}

impl BaseVariable {
    pub fn name(self) -> &'static str {
        match self {
            BaseVariable::TanX => "tan",
            BaseVariable::CotX => "cot",
            BaseVariable::TanhX => "tanh",
            BaseVariable::CothX => "coth",
        }
    }
}

/// `D^n f(x) = prefactor(x) * (constant + sum_k terms[k] * base(x)^k)`.
///
/// Only nonzero coefficients are stored in `terms`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativePolynomial {
    pub func: FunctionTag,
    pub n: usize,
    pub prefactor: Prefactor,
    pub base: BaseVariable,
    pub constant: ExactInt,
    pub terms: BTreeMap<usize, ExactInt>,
}

impl DerivativePolynomial {
    /// Builds the closed form from pre-generated triangles. The tangent
    /// triangle must reach row `n + 1` and the secant triangle row `n`.
    pub fn from_triangles(
        func: FunctionTag,
        n: usize,
        tangent: &Triangle,
        secant: &Triangle,
    ) -> Result<Self> {
        let mut constant = ExactInt::zero();
        let mut terms = BTreeMap::new();
        let mut insert = |k: usize, value: ExactInt| {
            if !value.is_zero() {
                terms.insert(k, value);
            }
        };
        let flip = |value: ExactInt, s: i32| if s < 0 { -value } else { value };

        if func.is_secant_family() {
            for k in (0..=n).filter(|k| (n + k) % 2 == 0) {
                let magnitude = factorial(k) * secant.cell(n, k)?;
                let s = match func {
                    FunctionTag::Sec => 1,
                    FunctionTag::Csc => sign(n),
                    _ => sign((n + k) / 2),
                };
                insert(k, flip(magnitude, s));
            }
        } else {
            let t_n1 = tangent.cell(n, 1)?.clone();
            constant = match func {
                FunctionTag::Tan => t_n1,
                FunctionTag::Cot => flip(t_n1, sign(n)),
                _ if n % 2 == 1 => flip(t_n1, sign((n - 1) / 2)),
                _ => ExactInt::zero(),
            };
            for k in (1..=n + 1).filter(|k| (n + 1 + k) % 2 == 0) {
                let magnitude = factorial(k - 1) * tangent.cell(n + 1, k)?;
                let s = match func {
                    FunctionTag::Tan => 1,
                    FunctionTag::Cot => sign(n),
                    _ => sign((n + k - 1) / 2),
                };
                insert(k, flip(magnitude, s));
            }
        }

        Ok(DerivativePolynomial {
            func,
            n,
            prefactor: func.prefactor(),
            base: func.base_variable(),
            constant,
            terms,
        })
    }

    /// Double-precision value at `x`: Horner over ascending powers, then the
    /// prefactor.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let func = self.func;
        if let Some((guard, pole)) = func.pole_guard(x) {
            if !guard.is_finite() || guard.abs() < 1e-15 * x.abs().max(1.0) {
                return Err(Error::Pole { func, x, pole });
            }
        }
        let base = match self.base {
            BaseVariable::TanX => x.tan(),
            BaseVariable::CotX => x.cos() / x.sin(),
            BaseVariable::TanhX => x.tanh(),
            BaseVariable::CothX => x.tanh().recip(),
        };
        let degree = self.terms.keys().next_back().copied().unwrap_or(0);
        let mut acc = 0.0;
        for k in (0..=degree).rev() {
            let c = self.terms.get(&k).map_or(0.0, to_f64);
            acc = acc * base + c;
        }
        acc += to_f64(&self.constant);
        let value = match self.prefactor {
            Prefactor::None => acc,
            Prefactor::SecX => acc / x.cos(),
            Prefactor::CscX => acc / x.sin(),
            Prefactor::SechX => acc / x.cosh(),
            Prefactor::CschX => acc / x.sinh(),
        };
        if !value.is_finite() {
            let pole = func.pole_guard(x).map_or(x, |(_, p)| p);
            return Err(Error::Pole { func, x, pole });
        }
        Ok(value)
    }
}

impl fmt::Display for DerivativePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = self.base.name();
        let mut parts: Vec<String> = Vec::new();
        if !self.constant.is_zero() {
            parts.push(self.constant.to_string());
        }
        for (k, c) in &self.terms {
            let var = match k {
                0 => String::new(),
                1 => format!("{base}(x)"),
                _ => format!("{base}(x)^{k}"),
            };
            let part = match (c.to_string().as_str(), var.is_empty()) {
                (s, true) => s.to_string(),
                ("1", false) => var,
                ("-1", false) => format!("-{var}"),
                (s, false) => format!("{s}*{var}"),
            };
            parts.push(part);
        }
        let body = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        };
        match self.prefactor.name() {
            Some(p) => write!(f, "{p}(x) * ({body})"),
            None => f.write_str(&body),
        }
    }
}

fn to_f64(v: &ExactInt) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

pub fn derivative_poly(func: FunctionTag, n: usize) -> DerivativePolynomial {
    let tangent = tangent_triangle(n + 1);
    let secant = secant_triangle(n);
    DerivativePolynomial::from_triangles(func, n, &tangent, &secant)
        .expect("triangles are generated to the required rows")
}

pub fn eval_derivative(func: FunctionTag, n: usize, x: f64) -> Result<f64> {
    derivative_poly(func, n).eval(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationStatus {
    Pass,
    Fail,
    /// The series oracle did not converge at the largest order tried.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub func: FunctionTag,
    pub n: usize,
    pub x: f64,
    pub tol: f64,
    pub closed_form: f64,
    pub oracle: f64,
    pub relative_error: f64,
    /// Truncation order of the base series the oracle value came from.
    pub order: usize,
    pub status: ValidationStatus,
}

/// `f(x) = residue / x + regular(x)`; the residue is zero for functions
/// analytic at the origin. `numerators[m] / denominator` is the coefficient of
/// `x^m` of the regular part, over a common denominator.
#[derive(Debug, Clone)]
struct BaseSeries {
    residue: ExactRational,
    regular: TruncatedSeries,
    numerators: Vec<ExactInt>,
    denominator: ExactInt,
}

impl BaseSeries {
    fn build(func: FunctionTag, order: usize) -> Self {
        let (odd, even) = if func.is_hyperbolic() {
            (
                TruncatedSeries::sinh(order + 1),
                TruncatedSeries::cosh(order + 1),
            )
        } else {
            (
                TruncatedSeries::sin(order + 1),
                TruncatedSeries::cos(order + 1),
            )
        };
        let quotient = |a: &TruncatedSeries, b: &TruncatedSeries| {
            a.div(b).expect("denominator has constant term 1")
        };
        let (residue, regular) = match func {
            FunctionTag::Tan | FunctionTag::Tanh => (ExactRational::zero(), quotient(&odd, &even)),
            FunctionTag::Sec | FunctionTag::Sech => {
                let one = TruncatedSeries::one(order + 1);
                (ExactRational::zero(), quotient(&one, &even))
            }
            FunctionTag::Cot | FunctionTag::Coth | FunctionTag::Csc | FunctionTag::Csch => {
                let cot = cot_from_tan(&quotient(&odd, &even), func.is_hyperbolic());
                let regular = if matches!(func, FunctionTag::Csc | FunctionTag::Csch) {
                    // csc x = cot(x/2) - cot x, and the 1/x parts give residue 1
                    let coeffs = cot
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(m, c)| {
                            c * (ExactRational::new(ExactInt::one(), ExactInt::one() << m)
                                - ExactRational::one())
                        })
                        .collect();
                    TruncatedSeries::from_coeffs(coeffs)
                } else {
                    cot
                };
                (ExactRational::one(), regular)
            }
        };
        let regular = regular.truncate(order);
        let denominator = regular
            .coeffs()
            .iter()
            .fold(ExactInt::one(), |acc, c| acc.lcm(c.denom()));
        let numerators = regular
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&denominator / c.denom()))
            .collect();
        BaseSeries {
            residue,
            regular,
            numerators,
            denominator,
        }
    }

    fn order(&self) -> usize {
        self.regular.order()
    }

    /// Exact `D^n regular(x)` using the series through `x^order`, by integer
    /// Horner evaluation at the dyadic `x = p / 2^e`.
    fn regular_derivative_at(
        &self,
        n: usize,
        p: &ExactInt,
        e: usize,
        order: usize,
    ) -> ExactRational {
        if order < n {
            return ExactRational::zero();
        }
        let top = order - n;
        // coefficient j of D^n is numerators[j + n] (j+n)!/j! / denominator
        let falling =
            |j: usize| -> ExactInt { (j + 1..=j + n).fold(ExactInt::one(), |acc, i| acc * i) };
        let mut acc = &self.numerators[top + n] * falling(top);
        for j in (0..top).rev() {
            let a = &self.numerators[j + n];
            acc *= p;
            if !a.is_zero() {
                acc += (a * falling(j)) << (e * (top - j));
            }
        }
        ExactRational::new(acc, &self.denominator << (e * top))
    }
}

/// Regular part of `cot x` (or `coth x`) from the series of `tan x` (or
/// `tanh x`), using `cot x - 2 cot 2x = tan x` (and `coth x - 2 coth 2x =
/// -tanh x`): writing `x cot x = sum g_m x^m` gives `g_m (1 - 2^m) =
/// [x^(m-1)] tan x` for `m >= 1`. The result has the order of `tan`.
fn cot_from_tan(tan: &TruncatedSeries, hyperbolic: bool) -> TruncatedSeries {
    let coeffs = (1..=tan.order() + 1)
        .map(|m| {
            let t = tan.coeff(m - 1).cloned().unwrap_or_default();
            let g = t / ExactRational::from_integer(ExactInt::one() - (ExactInt::one() << m));
            if hyperbolic {
                -g
            } else {
                g
            }
        })
        .collect();
    TruncatedSeries::from_coeffs(coeffs)
}

/// Writes a finite double as `p / 2^e` with `e >= 0`.
fn dyadic(x: f64) -> Option<(ExactInt, usize)> {
    let exact = ExactRational::from_float(x)?;
    let den = exact.denom();
    let e = den.bits() as usize - 1;
    if *den != ExactInt::one() << e {
        return None;
    }
    Some((exact.numer().clone(), e))
}

/// Termwise-differentiated Maclaurin (or Laurent, for the functions with a
/// simple pole at the origin) series oracle for the derivative closed forms.
///
/// Base series are cached per function and regrown on demand.
#[derive(Debug, Default)]
pub struct DerivativeOracle {
    cache: HashMap<FunctionTag, BaseSeries>,
}

/// Orders tried before the oracle gives up.
const MAX_ORDER: usize = 320;
/// Number of trailing terms inspected for the convergence test.
const TAIL_TERMS: usize = 8;

impl DerivativeOracle {
    pub fn new() -> Self {
        Self::default()
    }

    fn base(&mut self, func: FunctionTag, order: usize) -> &BaseSeries {
        let stale = self.cache.get(&func).is_none_or(|b| b.order() < order);
        if stale {
            self.cache.insert(func, BaseSeries::build(func, order));
        }
        &self.cache[&func]
    }

    /// `D^n f(x)` from the base series truncated at `order`. Returns the value
    /// and whether the trailing terms are small enough relative to `tol`.
    fn value_at_order(
        &mut self,
        func: FunctionTag,
        n: usize,
        x: f64,
        order: usize,
        tol: f64,
    ) -> (ExactRational, bool) {
        let (p, e) = dyadic(x).expect("finite doubles are dyadic rationals");
        let base = self.base(func, order);
        let mut value = base.regular_derivative_at(n, &p, e, order);
        if !base.residue.is_zero() {
            // D^n (r / x) = r (-1)^n n! / x^(n+1)
            let x_exact = ExactRational::new(p.clone(), ExactInt::one() << e);
            let pole_part =
                &base.residue * int_to_rational(&factorial(n)) / num_traits::pow(x_exact, n + 1);
            if n % 2 == 0 {
                value += pole_part;
            } else {
                value -= pole_part;
            }
        }

        let magnitude = value.abs().to_f64().unwrap_or(f64::INFINITY);
        let m = order.saturating_sub(n);
        let tail = (m.saturating_sub(TAIL_TERMS - 1)..=m)
            .map(|j| {
                let c = base.regular.coeffs()[j + n]
                    .abs()
                    .to_f64()
                    .unwrap_or(f64::INFINITY);
                let falling: f64 = (j + 1..=j + n).map(|i| i as f64).product();
                c * falling * x.abs().powi(j as i32)
            })
            .fold(0.0, f64::max);
        let converged = m >= TAIL_TERMS && tail <= 1e-3 * tol * magnitude.max(f64::MIN_POSITIVE);
        (value, converged)
    }

    pub fn validate(
        &mut self,
        func: FunctionTag,
        n: usize,
        x: f64,
        tol: f64,
    ) -> Result<ValidationReport> {
        if !(tol > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        if !x.is_finite() {
            return Err(Error::InvalidArgument(format!("x must be finite, got {x}")));
        }
        let closed_form = derivative_poly(func, n).eval(x)?;

        let mut order = n + 40;
        let (value, converged) = loop {
            let (value, converged) = self.value_at_order(func, n, x, order, tol);
            if converged || order >= MAX_ORDER {
                break (value, converged);
            }
            order = (2 * order).min(MAX_ORDER);
        };
        let oracle = value.to_f64().unwrap_or(f64::NAN);
        let scale = closed_form.abs().max(oracle.abs());
        let relative_error = if scale == 0.0 {
            0.0
        } else {
            (closed_form - oracle).abs() / scale
        };
        let status = if !converged {
            ValidationStatus::Inconclusive
        } else if relative_error <= tol {
            ValidationStatus::Pass
        } else {
            ValidationStatus::Fail
        };
        Ok(ValidationReport {
            func,
            n,
            x,
            tol,
            closed_form,
            oracle,
            relative_error,
            order,
            status,
        })
    }
}

/// One-shot validation of `D^n f(x)` against the series oracle.
pub fn validate_derivative(
    func: FunctionTag,
    n: usize,
    x: f64,
    tol: f64,
) -> Result<ValidationReport> {
    DerivativeOracle::new().validate(func, n, x, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    fn terms(pairs: &[(usize, i64)]) -> BTreeMap<usize, ExactInt> {
        pairs.iter().map(|&(k, c)| (k, int(c))).collect()
    }

    #[test]
    fn symbolic_examples() {
        let tan1 = derivative_poly(FunctionTag::Tan, 1);
        assert_eq!(tan1.constant, int(1));
        assert_eq!(tan1.terms, terms(&[(2, 1)]));
        assert_eq!(tan1.prefactor, Prefactor::None);

        let sec1 = derivative_poly(FunctionTag::Sec, 1);
        assert_eq!(sec1.prefactor, Prefactor::SecX);
        assert_eq!(sec1.constant, int(0));
        assert_eq!(sec1.terms, terms(&[(1, 1)]));

        let tanh2 = derivative_poly(FunctionTag::Tanh, 2);
        assert_eq!(tanh2.constant, int(0));
        assert_eq!(tanh2.terms, terms(&[(1, -2), (3, 2)]));
    }

    #[test]
    fn zeroth_derivative_is_the_function() {
        for func in FunctionTag::ALL {
            let p = derivative_poly(func, 0);
            assert_eq!(p.constant, int(0), "{func}");
            let expected = if func.is_secant_family() {
                (0, 1)
            } else {
                (1, 1)
            };
            assert_eq!(p.terms, terms(&[expected]), "{func}");
        }
    }

    #[test]
    fn small_derivatives_by_hand() {
        // D cot = -1 - cot^2, D csc = -csc cot, D^2 sech = sech (2 tanh^2 - 1),
        // D^2 csch = csch (2 coth^2 - 1), D coth = 1 - coth^2
        let cot1 = derivative_poly(FunctionTag::Cot, 1);
        assert_eq!(
            (cot1.constant.clone(), cot1.terms.clone()),
            (int(-1), terms(&[(2, -1)]))
        );
        assert_eq!(
            derivative_poly(FunctionTag::Csc, 1).terms,
            terms(&[(1, -1)])
        );
        assert_eq!(
            derivative_poly(FunctionTag::Sech, 2).terms,
            terms(&[(0, -1), (2, 2)])
        );
        assert_eq!(
            derivative_poly(FunctionTag::Csch, 2).terms,
            terms(&[(0, -1), (2, 2)])
        );
        let coth1 = derivative_poly(FunctionTag::Coth, 1);
        assert_eq!(
            (coth1.constant.clone(), coth1.terms.clone()),
            (int(1), terms(&[(2, -1)]))
        );
    }

    #[test]
    fn tan_coefficients_recover_the_triangle() {
        let tri = tangent_triangle(16);
        for n in 0..=15 {
            let p = derivative_poly(FunctionTag::Tan, n);
            for k in 1..=n + 1 {
                let c = p.terms.get(&k).cloned().unwrap_or_default();
                assert_eq!(c / factorial(k - 1), *tri.cell(n + 1, k).unwrap());
            }
            assert_eq!(p.constant, *tri.cell(n, 1).unwrap());
        }
    }

    #[test]
    fn cot_is_signed_tan() {
        for n in 0..=12 {
            let tan = derivative_poly(FunctionTag::Tan, n);
            let cot = derivative_poly(FunctionTag::Cot, n);
            let s = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(cot.constant, &tan.constant * s);
            assert_eq!(cot.terms.len(), tan.terms.len());
            for (k, c) in &tan.terms {
                assert_eq!(cot.terms[k], c * s);
            }
        }
    }

    #[test]
    fn stored_coefficients_are_nonzero() {
        for func in FunctionTag::ALL {
            for n in 0..=10 {
                assert!(derivative_poly(func, n)
                    .terms
                    .values()
                    .all(|c| !c.is_zero()));
            }
        }
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(eval_derivative(FunctionTag::Tan, 1, 0.0).unwrap(), 1.0);
        assert_eq!(eval_derivative(FunctionTag::Sec, 2, 0.0).unwrap(), 1.0);
        assert_eq!(eval_derivative(FunctionTag::Tanh, 1, 0.0).unwrap(), 1.0);
        let t = crate::triangle::tangent_numbers(12);
        let s = crate::triangle::secant_numbers(12);
        for n in 1..=12 {
            assert_eq!(
                eval_derivative(FunctionTag::Tan, n, 0.0).unwrap(),
                to_f64(&t[n - 1])
            );
            assert_eq!(
                eval_derivative(FunctionTag::Sec, n, 0.0).unwrap(),
                to_f64(&s[n])
            );
        }
    }

    #[test]
    fn poles_are_reported() {
        for func in [
            FunctionTag::Cot,
            FunctionTag::Csc,
            FunctionTag::Coth,
            FunctionTag::Csch,
        ] {
            assert!(matches!(
                eval_derivative(func, 3, 0.0),
                Err(Error::Pole { pole, .. }) if pole == 0.0
            ));
        }
        let err = eval_derivative(FunctionTag::Tan, 2, FRAC_PI_2).unwrap_err();
        assert!(matches!(err, Error::Pole { pole, .. } if (pole - FRAC_PI_2).abs() < 1e-12));
        let err = eval_derivative(FunctionTag::Sec, 0, -FRAC_PI_2).unwrap_err();
        assert!(matches!(err, Error::Pole { pole, .. } if (pole + FRAC_PI_2).abs() < 1e-12));
        assert!(eval_derivative(FunctionTag::Tanh, 3, 0.0).is_ok());
    }

    #[test]
    fn validation_examples() {
        let r = validate_derivative(FunctionTag::Tan, 5, 0.3, 1e-9).unwrap();
        assert_eq!(r.status, ValidationStatus::Pass, "{r:?}");
        let r = validate_derivative(FunctionTag::Sech, 4, 0.2, 1e-9).unwrap();
        assert_eq!(r.status, ValidationStatus::Pass, "{r:?}");
        let r = validate_derivative(FunctionTag::Tan, 0, 0.3, 1e-12).unwrap();
        assert_eq!(r.status, ValidationStatus::Pass, "{r:?}");
        let r = validate_derivative(FunctionTag::Cot, 3, 0.25, 1e-9).unwrap();
        assert_eq!(r.status, ValidationStatus::Pass, "{r:?}");
    }

    #[test]
    fn validation_outside_radius_is_inconclusive() {
        // tan's series converges only for |x| < pi/2
        let r = validate_derivative(FunctionTag::Tan, 2, 1.7, 1e-9).unwrap();
        assert_eq!(r.status, ValidationStatus::Inconclusive);
    }

    #[test]
    fn validation_rejects_bad_tolerance() {
        assert!(validate_derivative(FunctionTag::Tan, 1, 0.1, 0.0).is_err());
    }
}
