//! Exact integer and rational helpers plus the auxiliary combinatorial numbers:
//! factorials, binomials (integer and half-integer upper argument), Stirling
//! numbers of the second kind, signed Lah numbers and central factorial
//! numbers of the second kind.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

pub fn factorial(n: usize) -> ExactInt {
    (2..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

/// `base^exp` for a small base.
pub fn pow_int(base: i64, exp: usize) -> ExactInt {
    num_traits::pow(ExactInt::from(base), exp)
}

/// `2^exp` as an exact integer.
pub fn pow2(exp: usize) -> ExactInt {
    ExactInt::one() << exp
}

/// `(-1)^exp` as `+1` or `-1`.
pub fn sign(exp: usize) -> i32 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Generalized binomial coefficient `upper (upper-1) ... (upper-k+1) / k!`.
///
/// `upper` may be any rational; for a non-negative integer `upper < k` the
/// falling factorial passes through zero and the result is 0.
pub fn binomial(upper: &ExactRational, k: usize) -> ExactRational {
    let mut num = ExactRational::one();
    for i in 0..k {
        num *= upper - ExactRational::from_integer(ExactInt::from(i));
        if num.is_zero() {
            return num;
        }
    }
    num / ExactRational::from_integer(factorial(k))
}

/// Integer binomial coefficient with the usual conventions: `C(n, k) = 0` for
/// `k < 0`, and for `0 <= n < k`. Negative `n` uses the generalized
/// definition `C(n, k) = (-1)^k C(k - n - 1, k)`.
pub fn binomial_int(n: i64, k: i64) -> ExactInt {
    if k < 0 {
        return ExactInt::zero();
    }
    if n < 0 {
        let c = binomial_int(k - n - 1, k);
        return if k % 2 == 0 { c } else { -c };
    }
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Stirling number of the second kind by the explicit alternating sum
/// `S(n,k) = (1/k!) sum_{j=1}^{k} (-1)^{k-j} C(k,j) j^n`, with `S(0,0) = 1`.
pub fn stirling2(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    if k == 0 {
        return if n == 0 {
            ExactInt::one()
        } else {
            ExactInt::zero()
        };
    }
    let mut sum = ExactInt::zero();
    for j in 1..=k {
        let term = binomial_int(k as i64, j as i64) * pow_int(j as i64, n);
        if (k - j) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / factorial(k)
}

/// Signed Lah number `L(n,k) = (-1)^n C(n-1, k-1) n!/k!`.
///
/// Returns 0 for `k > n` and, through `C(n-1, -1) = 0`, for `k = 0 < n`.
pub fn lah(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    if k == 0 {
        return if n == 0 {
            ExactInt::one()
        } else {
            ExactInt::zero()
        };
    }
    let magnitude = binomial_int(n as i64 - 1, k as i64 - 1) * factorial(n) / factorial(k);
    if n % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// Central factorial number of the second kind,
/// `(1/k!) sum_{a=0}^{k} (-1)^a C(k,a) (k/2 - a)^n`, with `0^0 = 1`.
pub fn central_factorial(n: usize, k: usize) -> ExactRational {
    let half_k = ExactRational::new(ExactInt::from(k), ExactInt::from(2));
    let mut sum = ExactRational::zero();
    for a in 0..=k {
        let base = &half_k - ExactRational::from_integer(ExactInt::from(a));
        // num_traits::pow treats a zero exponent as 1, which covers 0^0.
        let term = num_traits::pow(base, n)
            * ExactRational::from_integer(binomial_int(k as i64, a as i64));
        if a % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / ExactRational::from_integer(factorial(k))
}

/// Converts a rational known to be integral into an integer.
pub(crate) fn to_integer(value: ExactRational) -> Option<ExactInt> {
    value.is_integer().then(|| value.to_integer())
}

pub(crate) fn rational(n: i64, d: i64) -> ExactRational {
    ExactRational::new(ExactInt::from(n), ExactInt::from(d))
}

pub(crate) fn int_to_rational(value: &ExactInt) -> ExactRational {
    ExactRational::from_integer(value.clone())
}

#[cfg(test)]
pub(crate) fn is_nonnegative(value: &ExactInt) -> bool {
    value >= &ExactInt::ZERO
}
