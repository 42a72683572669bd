//! Alternative routes to the higher-order tangent and secant numbers.
//!
//! Every route is exact. Routes whose intermediate quantities are rational
//! (the power-series recurrence, the arctangent basis, the double sum, the
//! Stirling and central-factorial sums) are evaluated in [`ExactRational`] and
//! the final value is checked for integrality rather than assumed integral.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::number::{
    binomial, binomial_int, central_factorial, factorial, int_to_rational, pow2, rational, sign,
    stirling2, to_integer, ExactInt, ExactRational,
};
use crate::series;
use crate::triangle::{Triangle, TriangleKind};
use crate::{Error, Result};

/// Identifies one way of computing a triangle entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodTag {
    Recurrence,
    PowerSeriesRecurrence,
    CauchyProduct,
    BellRecurrenceA,
    BellRecurrenceB,
    ArctanBasis,
    SchwattDoubleSum,
    Stirling,
    Lah,
    CentralFactorial,
    Oracle,
}

impl MethodTag {
    pub const ALL: [MethodTag; 11] = [
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
        MethodTag::Oracle,
    ];

    /// The alternatives to the triangle recurrence for the tangent numbers of
    /// order `k`.
    pub const TANGENT_ALTERNATIVES: [MethodTag; 8] = [
        MethodTag::PowerSeriesRecurrence,
        MethodTag::BellRecurrenceA,
        MethodTag::BellRecurrenceB,
        MethodTag::ArctanBasis,
        MethodTag::SchwattDoubleSum,
        MethodTag::Stirling,
        MethodTag::Lah,
        MethodTag::CentralFactorial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodTag::Recurrence => "recurrence",
            MethodTag::PowerSeriesRecurrence => "power-series-recurrence",
            MethodTag::CauchyProduct => "cauchy-product",
            MethodTag::BellRecurrenceA => "bell-a",
            MethodTag::BellRecurrenceB => "bell-b",
            MethodTag::ArctanBasis => "arctan-basis",
            MethodTag::SchwattDoubleSum => "schwatt-double-sum",
            MethodTag::Stirling => "stirling",
            MethodTag::Lah => "lah",
            MethodTag::CentralFactorial => "central-factorial",
            MethodTag::Oracle => "oracle",
        }
    }

    pub fn computes(self, kind: TriangleKind) -> bool {
        match kind {
            TriangleKind::TangentHigher => self != MethodTag::CauchyProduct,
            TriangleKind::SecantHigher => matches!(
                self,
                MethodTag::Recurrence | MethodTag::CauchyProduct | MethodTag::Oracle
            ),
            TriangleKind::ArctangentHigher => {
                matches!(self, MethodTag::Recurrence | MethodTag::Oracle)
            }
        }
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        let tag = match key.as_str() {
            "recurrence" | "triangle" => MethodTag::Recurrence,
            "powerseriesrecurrence" | "power" | "gould" => MethodTag::PowerSeriesRecurrence,
            "cauchyproduct" | "cauchy" => MethodTag::CauchyProduct,
            "bella" | "bellrecurrencea" => MethodTag::BellRecurrenceA,
            "bellb" | "bellrecurrenceb" => MethodTag::BellRecurrenceB,
            "arctanbasis" | "arctan" => MethodTag::ArctanBasis,
            "schwattdoublesum" | "schwatt" | "doublesum" => MethodTag::SchwattDoubleSum,
            "stirling" => MethodTag::Stirling,
            "lah" => MethodTag::Lah,
            "centralfactorial" | "central" => MethodTag::CentralFactorial,
            "oracle" | "series" => MethodTag::Oracle,
            _ => return Err(Error::InvalidArgument(format!("unknown method `{s}`"))),
        };
        Ok(tag)
    }
}

impl FromStr for TriangleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "t" | "tangent" => Ok(TriangleKind::TangentHigher),
            "S" | "s" | "secant" => Ok(TriangleKind::SecantHigher),
            "Tstar" | "tstar" | "T*" | "arctangent" => Ok(TriangleKind::ArctangentHigher),
            _ => Err(Error::InvalidArgument(format!(
                "unknown triangle kind `{s}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellVariant {
    /// `T(n+1,k+1) = sum_r C(n,r) T_{r+1} T(n-r,k)`
    A,
    /// `T(n+1,k+1) = 1/(k+1) sum_r C(n+1,r+1) T_{r+1} T(n-r,k)`
    B,
}

/// Triangles and classical sequences shared (read-only) by the formulas.
///
/// For a requested `n_max` the tangent triangle is generated to row
/// `2 n_max + 1` so the arctangent basis (which reads `T_{n+k-1}`) and the
/// derivative polynomials (which read row `n + 1`) are always covered.
#[derive(Debug, Clone)]
pub struct Tables {
    n_max: usize,
    pub tangent: Triangle,
    pub secant: Triangle,
    pub arctangent: Triangle,
    tangent_numbers: Vec<ExactInt>,
    secant_numbers: Vec<ExactInt>,
}

impl Tables {
    pub fn new(n_max: usize) -> Self {
        let tangent = Triangle::new(TriangleKind::TangentHigher, 2 * n_max + 1);
        let secant = Triangle::new(TriangleKind::SecantHigher, n_max + 1);
        let arctangent = Triangle::new(TriangleKind::ArctangentHigher, n_max + 1);
        let tangent_numbers = tangent
            .rows()
            .iter()
            .map(|row| row.get(1).cloned().unwrap_or_default())
            .collect();
        let secant_numbers = secant.rows().iter().map(|row| row[0].clone()).collect();
        Tables {
            n_max,
            tangent,
            secant,
            arctangent,
            tangent_numbers,
            secant_numbers,
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn triangle(&self, kind: TriangleKind) -> &Triangle {
        match kind {
            TriangleKind::TangentHigher => &self.tangent,
            TriangleKind::SecantHigher => &self.secant,
            TriangleKind::ArctangentHigher => &self.arctangent,
        }
    }

    /// `T_i`, with `T_0 = 0`.
    pub fn tangent_number(&self, i: usize) -> Result<&ExactInt> {
        self.tangent_numbers.get(i).ok_or(Error::OutOfRange {
            n: i,
            generated_up_to: self.tangent_numbers.len() - 1,
        })
    }

    pub fn secant_number(&self, i: usize) -> Result<&ExactInt> {
        self.secant_numbers.get(i).ok_or(Error::OutOfRange {
            n: i,
            generated_up_to: self.secant_numbers.len() - 1,
        })
    }
}

fn parity_zero(n: usize, k: usize) -> bool {
    k > n || (n + k) % 2 == 1
}

fn delta(n: usize, k: usize) -> ExactInt {
    if n == 0 && k == 0 {
        ExactInt::one()
    } else {
        ExactInt::zero()
    }
}

fn integral(value: ExactRational, method: MethodTag, n: usize, k: usize) -> Result<ExactInt> {
    let text = value.to_string();
    to_integer(value).ok_or(Error::NonIntegral {
        method,
        n,
        k,
        value: text,
    })
}

/// Column `k` of the tangent triangle, rows `k..=n`, from the recurrence for
/// the coefficients of a power of a series. Entry `i` of the result is row
/// `k + i`.
pub fn power_recurrence_column(tables: &Tables, n: usize, k: usize) -> Result<Vec<ExactInt>> {
    let t1 = int_to_rational(tables.tangent_number(1)?);
    let mut column = vec![num_traits::pow(tables.tangent_number(1)?.clone(), k)];
    for m in k + 1..=n {
        let mut sum = ExactRational::zero();
        for r in 1..=m - k {
            let t_next = tables.tangent_number(r + 1)?;
            let prev = &column[m - r - k];
            if t_next.is_zero() || prev.is_zero() {
                continue;
            }
            let weight = rational((k + 1) as i64, (m + 1) as i64) - rational(1, (r + 1) as i64);
            sum += weight * int_to_rational(&(binomial_int(m as i64, r as i64) * t_next * prev));
        }
        let value = sum * rational((m + 1) as i64, (m - k) as i64) / &t1;
        column.push(integral(value, MethodTag::PowerSeriesRecurrence, m, k)?);
    }
    Ok(column)
}

pub fn tangent_via_power_recurrence(tables: &Tables, n: usize, k: usize) -> Result<ExactInt> {
    if parity_zero(n, k) {
        return Ok(ExactInt::zero());
    }
    if k == 0 {
        return Ok(delta(n, k));
    }
    Ok(power_recurrence_column(tables, n, k)?.pop().unwrap())
}

/// Secant number of order `k` as the Cauchy product of the tangent column
/// `k` with the secant numbers.
pub fn secant_via_cauchy(tables: &Tables, n: usize, k: usize) -> Result<ExactInt> {
    let mut sum = ExactInt::zero();
    for m in 0..=n {
        let t = tables.tangent.cell(m, k)?;
        if t.is_zero() {
            continue;
        }
        sum += binomial_int(n as i64, m as i64) * t * tables.secant_number(n - m)?;
    }
    Ok(sum)
}

/// Rows `0..=n`, columns `0..=k` of the tangent triangle built from scratch
/// with one of the partial Bell polynomial recurrences.
pub fn bell_triangle(
    tables: &Tables,
    n: usize,
    k: usize,
    variant: BellVariant,
) -> Result<Vec<Vec<ExactInt>>> {
    let method = match variant {
        BellVariant::A => MethodTag::BellRecurrenceA,
        BellVariant::B => MethodTag::BellRecurrenceB,
    };
    let mut rows: Vec<Vec<ExactInt>> = (0..=n)
        .map(|m| vec![ExactInt::zero(); m.min(k) + 1])
        .collect();
    rows[0][0] = ExactInt::one();
    for j in 0..k.min(n) {
        for m in j..n {
            // entry (m + 1, j + 1) from column j
            let mut sum = ExactInt::zero();
            for r in 0..=m - j {
                let prev = &rows[m - r][j];
                if prev.is_zero() {
                    continue;
                }
                let t = tables.tangent_number(r + 1)?;
                let c = match variant {
                    BellVariant::A => binomial_int(m as i64, r as i64),
                    BellVariant::B => binomial_int(m as i64 + 1, r as i64 + 1),
                };
                sum += c * t * prev;
            }
            if variant == BellVariant::B {
                let (q, rem) = sum.div_rem(&ExactInt::from(j + 1));
                if !rem.is_zero() {
                    return Err(Error::NonIntegral {
                        method,
                        n: m + 1,
                        k: j + 1,
                        value: format!("{sum}/{}", j + 1),
                    });
                }
                sum = q;
            }
            rows[m + 1][j + 1] = sum;
        }
    }
    Ok(rows)
}

pub fn tangent_via_bell_recurrence(
    tables: &Tables,
    n: usize,
    k: usize,
    variant: BellVariant,
) -> Result<ExactInt> {
    if k > n {
        return Ok(ExactInt::zero());
    }
    let mut rows = bell_triangle(tables, n, k, variant)?;
    Ok(std::mem::take(&mut rows[n][k]))
}

/// Coefficients `c_r` with `T(n,k) = sum_{r<k} c_r T_{n+r}` for every `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct TBasisCoefficients {
    pub k: usize,
    pub coeffs: Vec<ExactRational>,
}

impl TBasisCoefficients {
    /// Evaluates `sum_r c_r T_{n+r}`.
    pub fn evaluate(&self, tables: &Tables, n: usize) -> Result<ExactRational> {
        let mut sum = ExactRational::zero();
        for (r, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            sum += c * int_to_rational(tables.tangent_number(n + r)?);
        }
        Ok(sum)
    }
}

pub fn tangent_coeffs_on_t(tables: &Tables, k: usize) -> Result<TBasisCoefficients> {
    if k == 0 {
        return Err(Error::InvalidArgument("order k must be at least 1".into()));
    }
    let scale = int_to_rational(&(factorial(k) * factorial(k - 1)));
    let coeffs = (0..k)
        .map(|r| Ok(int_to_rational(tables.arctangent.cell(k, r + 1)?) / &scale))
        .collect::<Result<_>>()?;
    Ok(TBasisCoefficients { k, coeffs })
}

pub fn tangent_via_arctangent(tables: &Tables, n: usize, k: usize) -> Result<ExactInt> {
    if n == 0 || k == 0 {
        return Ok(delta(n, k));
    }
    let basis = tangent_coeffs_on_t(tables, k)?;
    integral(basis.evaluate(tables, n)?, MethodTag::ArctanBasis, n, k)
}

/// `(-1)^((n-k)/2) (-1)^n` on the parity-matched branch.
fn outer_sign(n: usize, k: usize) -> i32 {
    sign((n - k) / 2 + n)
}

fn signed(value: ExactRational, s: i32) -> ExactRational {
    if s < 0 {
        -value
    } else {
        value
    }
}

pub fn tangent_via_double_sum(n: usize, k: usize) -> Result<ExactInt> {
    if parity_zero(n, k) {
        return Ok(ExactInt::zero());
    }
    if n == 0 {
        return Ok(delta(n, k));
    }
    let mut outer = ExactRational::zero();
    for alpha in k..=n {
        let c = binomial_int(alpha as i64 - 1, k as i64 - 1);
        if c.is_zero() {
            continue;
        }
        let mut inner = ExactInt::zero();
        for beta in 1..=alpha {
            let term =
                binomial_int(alpha as i64, beta as i64) * num_traits::pow(ExactInt::from(beta), n);
            if beta % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        outer += ExactRational::new(c * inner, pow2(alpha));
    }
    let prefactor = ExactRational::new(pow2(n), factorial(k));
    let value = signed(prefactor * outer, outer_sign(n, k));
    integral(value, MethodTag::SchwattDoubleSum, n, k)
}

pub fn tangent_via_stirling(n: usize, k: usize) -> Result<ExactInt> {
    if parity_zero(n, k) {
        return Ok(ExactInt::zero());
    }
    if n == 0 {
        return Ok(delta(n, k));
    }
    let k_fact = factorial(k);
    let mut sum = ExactRational::zero();
    for alpha in k..=n {
        let c = binomial_int(alpha as i64 - 1, k as i64 - 1);
        if c.is_zero() {
            continue;
        }
        let ratio = ExactRational::new(factorial(alpha), k_fact.clone());
        let term = ratio * int_to_rational(&(pow2(n - alpha) * stirling2(n, alpha) * c));
        sum += signed(term, sign(alpha));
    }
    integral(signed(sum, outer_sign(n, k)), MethodTag::Stirling, n, k)
}

pub fn tangent_via_lah(n: usize, k: usize) -> Result<ExactInt> {
    if parity_zero(n, k) {
        return Ok(ExactInt::zero());
    }
    if n == 0 {
        return Ok(delta(n, k));
    }
    let sum: ExactInt = (k..=n)
        .map(|alpha| pow2(n - alpha) * crate::number::lah(alpha, k) * stirling2(n, alpha))
        .sum();
    Ok(if outer_sign(n, k) < 0 { -sum } else { sum })
}

/// Dispatches on parity: `(2a, 2b)` uses the even-index sum, `(2a+1, 2b+1)`
/// the odd-index sum with the half-integer binomial `C(alpha - 1/2, alpha - b)`.
pub fn tangent_via_central_factorial(n: usize, k: usize) -> Result<ExactInt> {
    if parity_zero(n, k) {
        return Ok(ExactInt::zero());
    }
    if n == 0 || k == 0 {
        return Ok(delta(n, k));
    }
    let odd = n % 2 == 1;
    let (a, b) = (n / 2, k / 2);
    let base = if odd { 1 } else { 0 };
    let denom = factorial(2 * b + base);
    let mut sum = ExactRational::zero();
    for alpha in b..=a {
        let binom = if odd {
            binomial(&rational(2 * alpha as i64 - 1, 2), alpha - b)
        } else {
            int_to_rational(&binomial_int(alpha as i64 - 1, (alpha - b) as i64))
        };
        if binom.is_zero() {
            continue;
        }
        let ratio = ExactRational::new(factorial(2 * alpha + base), denom.clone());
        let term = ratio
            * binom
            * int_to_rational(&pow2(2 * (a - alpha)))
            * central_factorial(n, 2 * alpha + base);
        sum += signed(term, sign(a - alpha));
    }
    integral(sum, MethodTag::CentralFactorial, n, k)
}

/// `sum_{k=1}^{n+1} (k-1)! T(n+1,k)` equals `(2^n - 1) T_n` for odd `n` and
/// `2^n S_n` for even `n`.
pub fn check_row_identity_a(tables: &Tables, n: usize) -> Result<bool> {
    let mut lhs = ExactInt::zero();
    for k in 1..=n + 1 {
        lhs += factorial(k - 1) * tables.tangent.cell(n + 1, k)?;
    }
    let rhs = if n % 2 == 1 {
        (pow2(n) - 1) * tables.tangent_number(n)?
    } else {
        pow2(n) * tables.secant_number(n)?
    };
    Ok(lhs == rhs)
}

/// `sum_{k=0}^{n} k! T(n,k)` equals `2^(n-1) T_n` for odd `n` and
/// `2^(n-1) S_n` for even `n`.
pub fn check_row_identity_b(tables: &Tables, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("row identity needs n >= 1".into()));
    }
    let mut lhs = ExactInt::zero();
    for k in 0..=n {
        lhs += factorial(k) * tables.tangent.cell(n, k)?;
    }
    let classical = if n % 2 == 1 {
        tables.tangent_number(n)?
    } else {
        tables.secant_number(n)?
    };
    Ok(lhs == pow2(n - 1) * classical)
}

/// `tan^n t` written as `sum_{r<n} coeffs[r] D^r tan t + constant`.
#[derive(Debug, Clone, PartialEq)]
pub struct TanPowerExpansion {
    pub coeffs: Vec<ExactRational>,
    pub constant: ExactRational,
}

pub fn tan_power_expansion(tables: &Tables, n: usize) -> Result<TanPowerExpansion> {
    if n == 0 {
        return Err(Error::InvalidArgument("power n must be at least 1".into()));
    }
    let scale = int_to_rational(&factorial(n - 1));
    let coeffs = (0..n)
        .map(|r| Ok(int_to_rational(tables.arctangent.cell(n, r + 1)?) / &scale))
        .collect::<Result<_>>()?;
    let constant = if n % 2 == 1 {
        ExactRational::zero()
    } else {
        ExactRational::from_integer(ExactInt::from(sign(n / 2)))
    };
    Ok(TanPowerExpansion { coeffs, constant })
}

/// Checks the expansion of `tan^n` against the power series of `tan` and its
/// derivatives through t^`order`.
pub fn check_tan_power_expansion(tables: &Tables, n: usize, order: usize) -> Result<bool> {
    let expansion = tan_power_expansion(tables, n)?;
    let tan = series::tan_series(order + n);
    let mut combined = series::TruncatedSeries::constant(expansion.constant.clone(), order);
    let mut derivative = tan.clone();
    for c in &expansion.coeffs {
        combined = &combined + &derivative.truncate(order).scale(c);
        derivative = derivative.derivative();
    }
    Ok(combined == tan.truncate(order).pow(n))
}

/// Entry `(n, k)` of the tangent triangle by the given method.
pub fn tangent(method: MethodTag, tables: &Tables, n: usize, k: usize) -> Result<ExactInt> {
    match method {
        MethodTag::Recurrence => Ok(tables.tangent.cell(n, k)?.clone()),
        MethodTag::PowerSeriesRecurrence => tangent_via_power_recurrence(tables, n, k),
        MethodTag::BellRecurrenceA => tangent_via_bell_recurrence(tables, n, k, BellVariant::A),
        MethodTag::BellRecurrenceB => tangent_via_bell_recurrence(tables, n, k, BellVariant::B),
        MethodTag::ArctanBasis => tangent_via_arctangent(tables, n, k),
        MethodTag::SchwattDoubleSum => tangent_via_double_sum(n, k),
        MethodTag::Stirling => tangent_via_stirling(n, k),
        MethodTag::Lah => tangent_via_lah(n, k),
        MethodTag::CentralFactorial => tangent_via_central_factorial(n, k),
        MethodTag::Oracle => series::definitional_t(n, k),
        MethodTag::CauchyProduct => Err(Error::Unsupported {
            method,
            what: "tangent numbers",
        }),
    }
}

/// Entry `(n, k)` of the secant triangle by the given method.
pub fn secant(method: MethodTag, tables: &Tables, n: usize, k: usize) -> Result<ExactInt> {
    match method {
        MethodTag::Recurrence => Ok(tables.secant.cell(n, k)?.clone()),
        MethodTag::CauchyProduct => secant_via_cauchy(tables, n, k),
        MethodTag::Oracle => series::definitional_s(n, k),
        _ => Err(Error::Unsupported {
            method,
            what: "secant numbers",
        }),
    }
}

/// Entry `(n, k)` of any triangle by the given method.
pub fn value(
    kind: TriangleKind,
    method: MethodTag,
    tables: &Tables,
    n: usize,
    k: usize,
) -> Result<ExactInt> {
    match kind {
        TriangleKind::TangentHigher => tangent(method, tables, n, k),
        TriangleKind::SecantHigher => secant(method, tables, n, k),
        TriangleKind::ArctangentHigher => match method {
            MethodTag::Recurrence => Ok(tables.arctangent.cell(n, k)?.clone()),
            MethodTag::Oracle => series::definitional_tstar(n, k),
            _ => Err(Error::Unsupported {
                method,
                what: "arctangent numbers",
            }),
        },
    }
}

/// Rows `0..=n_max` of the tangent triangle by one method, computing only the
/// parity-valid cells (the rest are left at zero). Methods with a natural
/// bulk form (triangle recurrence, Bell recurrences, the power recurrence
/// columns, the series oracle) use it.
pub fn tangent_triangle_via(
    method: MethodTag,
    tables: &Tables,
    n_max: usize,
) -> Result<Vec<Vec<ExactInt>>> {
    let mut rows: Vec<Vec<ExactInt>> = (0..=n_max).map(|n| vec![ExactInt::zero(); n + 1]).collect();
    rows[0][0] = ExactInt::one();
    match method {
        MethodTag::Recurrence => {
            return Ok(crate::triangle::tangent_triangle(n_max).rows().to_vec());
        }
        MethodTag::BellRecurrenceA | MethodTag::BellRecurrenceB => {
            let variant = if method == MethodTag::BellRecurrenceA {
                BellVariant::A
            } else {
                BellVariant::B
            };
            return bell_triangle(tables, n_max, n_max, variant);
        }
        MethodTag::PowerSeriesRecurrence => {
            for k in 1..=n_max {
                let column = power_recurrence_column(tables, n_max, k)?;
                for (i, v) in column.into_iter().enumerate() {
                    rows[k + i][k] = v;
                }
            }
        }
        MethodTag::Oracle => {
            return series::definitional_triangle(TriangleKind::TangentHigher, n_max);
        }
        _ => {
            for n in 1..=n_max {
                for k in (1..=n).filter(|k| (n + k) % 2 == 0) {
                    rows[n][k] = tangent(method, tables, n, k)?;
                }
            }
        }
    }
    Ok(rows)
}
