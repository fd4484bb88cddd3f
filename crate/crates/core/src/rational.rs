//! Exact rational scalars and small combinatorial helpers.
//!
//! Every quantity in this crate is an arbitrary-precision rational
//! (`num_rational::BigRational`); nothing is ever rounded.  This module fixes
//! the scalar type used throughout and collects the handful of integer
//! helpers (binomials, falling factorials, integer powers) that the
//! summation and table code need.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Scalar type used across the crate: a reduced fraction of big integers
/// with a positive denominator.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`.  Panics when `d = 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational written as `p/q` or `p`, e.g. `-3/4`, `12`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| format!("invalid rational literal `{s}`"))
}

/// Binomial coefficient `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient as a rational scalar.
pub fn binomial_rat(n: usize, k: usize) -> Rat {
    Rat::from_integer(binomial(n, k))
}

/// Falling factorial `x (x-1) (x-2) ... (x-m+1)` with `m` factors.
pub fn falling_factorial(x: &Rat, m: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..m {
        acc *= x - rat_int(i as i64);
    }
    acc
}

/// `x^e` for a (possibly negative) integer exponent.  Panics on `0^e`
/// with `e < 0`.
pub fn pow_rat(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow::pow(x.clone(), e as usize)
    } else {
        assert!(!x.is_zero(), "zero raised to a negative power");
        num_traits::pow::pow(x.clone(), (-e) as usize).recip()
    }
}

/// Factorial `n!` as a rational scalar.
pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}

/// True when `x` is an integer `<= 0`; several term families exclude such
/// parameters because they put a zero into a denominator.
pub fn is_nonpositive_integer(x: &Rat) -> bool {
    x.is_integer() && !x.is_positive()
}
