//! Truncated power series with exact rational coefficients.
//!
//! Everything here works with ordinary coefficients `c_0 + c_1 x + ...`
//! truncated at a fixed order; exponential-generating-function coefficients
//! are recovered on demand as `d! * c_d`.  The only nontrivial construction
//! is `exp_of`, which exponentiates a series with zero constant term through
//! the differential equation `v' = u' v`, keeping all arithmetic exact.

use num_traits::{One, Zero};

use crate::rational::{factorial, rat_int, Rat};

/// Power series truncated after `x^order`, coefficients in ascending order.
/// All binary operations require both operands to share the same order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    /// Series with the given ascending coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    ///
    /// # Panics
    ///
    /// Panics when `coeffs` is empty.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "power series needs at least the constant term");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn constant(value: Rat, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// The single term `value * x^degree`.
    pub fn monomial(value: Rat, degree: usize, order: usize) -> Self {
        assert!(degree <= order, "monomial degree exceeds truncation order");
        let mut s = PowerSeries::zero(order);
        s.coeffs[degree] = value;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient read as an exponential generating function: `d! * c_d`.
    pub fn egf_coeff(&self, d: usize) -> Rat {
        self.coeff(d) * factorial(d)
    }

    fn assert_same_order(&self, other: &PowerSeries) {
        assert_eq!(
            self.order(),
            other.order(),
            "power series truncation orders differ"
        );
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        PowerSeries { coeffs }
    }

    pub fn scale(&self, factor: &Rat) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        self.assert_same_order(other);
        let order = self.order();
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// Panics when the constant term is zero.
    pub fn inverse(&self) -> PowerSeries {
        assert!(
            !self.coeffs[0].is_zero(),
            "power series with zero constant term has no inverse"
        );
        let order = self.order();
        let lead = self.coeffs[0].clone().recip();
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = lead.clone();
        for d in 1..=order {
            let mut acc = Rat::zero();
            for i in 1..=d {
                acc += &self.coeffs[i] * &coeffs[d - i];
            }
            coeffs[d] = -acc * &lead;
        }
        PowerSeries { coeffs }
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, exponent: i64) -> PowerSeries {
        if exponent < 0 {
            return self.inverse().pow(-exponent);
        }
        let mut result = PowerSeries::constant(Rat::one(), self.order());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Substitute `x -> -x`, flipping the sign of odd coefficients.
    pub fn compose_neg(&self) -> PowerSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| if d % 2 == 1 { -c } else { c.clone() })
            .collect();
        PowerSeries { coeffs }
    }

    /// `exp(u)` for a series `u` with zero constant term, via the exact
    /// recurrence `(d+1) v_{d+1} = sum_{i=0}^{d} (i+1) u_{i+1} v_{d-i}`
    /// obtained from `v' = u' v`.
    ///
    /// # Panics
    ///
    /// Panics when `u` has a nonzero constant term.
    pub fn exp_of(u: &PowerSeries) -> PowerSeries {
        assert!(
            u.coeffs[0].is_zero(),
            "exp of a power series with nonzero constant term"
        );
        let order = u.order();
        let mut v = vec![Rat::one()];
        for d in 0..order {
            let mut acc = Rat::zero();
            for i in 0..=d {
                if i < order {
                    acc += rat_int(i as i64 + 1) * &u.coeffs[i + 1] * &v[d - i];
                }
            }
            v.push(acc / rat_int(d as i64 + 1));
        }
        PowerSeries { coeffs: v }
    }
}

/// `exp(c x)` truncated at the given order.
pub fn exp_cx(c: &Rat, order: usize) -> PowerSeries {
    PowerSeries::exp_of(&PowerSeries::monomial(c.clone(), 1, order))
}

/// `e^x - 1` truncated at the given order.
pub fn exp_minus_one(order: usize) -> PowerSeries {
    let mut s = exp_cx(&Rat::one(), order);
    s.coeffs[0] = Rat::zero();
    s
}

/// The Bell number generating function `exp(e^x - 1)`.
pub fn bell_series(order: usize) -> PowerSeries {
    PowerSeries::exp_of(&exp_minus_one(order))
}
