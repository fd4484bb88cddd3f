//! Dense univariate polynomials over the rationals, and the reduced
//! rational functions built from them.
//!
//! Provides:
//! * `Poly`: arithmetic, division with remainder, argument shifts `p(k+j)`,
//!   monic gcd, Sylvester resultants, nonnegative integer roots, and exact
//!   interpolation;
//! * `RationalFunction`: a quotient of polynomials kept in lowest terms with
//!   a monic denominator.
//!
//! The zero polynomial has no degree (`degree()` returns `None`); every
//! other polynomial stores its coefficients in ascending order with a
//! nonzero leading coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{rat_int, Rat};

/// Iteration budget for the two divisor scans in `nonneg_integer_roots`.
/// Candidate roots up to `ROOT_SCAN_LIMIT` are always examined directly;
/// larger roots are found through divisor pairs of the constant term as long
/// as its smaller factor stays below the limit.  Inputs at this crate's
/// operating scale sit far inside both budgets.
const ROOT_SCAN_LIMIT: u64 = 100_000;

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over `Rat`, coefficients ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::new(vec![c])
    }

    /// The variable itself, `k`.
    pub fn var() -> Poly {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `c * k^d`.
    pub fn monomial(c: Rat, d: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `k^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Ascending coefficient slice.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient.  Panics on the zero polynomial.
    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().expect("leading coefficient of zero polynomial")
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&rat_int(x))
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divide by the leading coefficient.  Panics on the zero polynomial.
    pub fn monic(&self) -> Poly {
        let lc = self.leading_coeff();
        self.scale(&lc.recip())
    }

    /// Quotient and remainder of `self / d` with `deg r < deg d`.
    ///
    /// # Panics
    ///
    /// Panics when `d` is the zero polynomial.
    pub fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let dlc = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &dlc;
            for i in 0..=dd {
                let t = &d.coeffs[i] * &factor;
                rem[shift + i] -= t;
            }
            // The leading entry cancels exactly; drop it and any new zeros.
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            quot[shift] = factor;
        }
        (Poly::new(quot), Poly { coeffs: rem })
    }

    /// Exact quotient; `None` when the remainder is nonzero.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divmod(d);
        r.is_zero().then_some(q)
    }

    /// Argument shift `p(k + j)` for an integer `j`.
    pub fn shift(&self, j: i64) -> Poly {
        // Horner in (k + j): fold from the top coefficient down.
        let mut acc = Poly::zero();
        let shift_root = Poly::new(vec![rat_int(j), Rat::one()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &shift_root) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Monic greatest common divisor; `gcd(0, 0)` is the zero polynomial.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            // Normalizing each remainder keeps coefficient growth in check
            // and makes the result monic by construction.
            let r = x.divmod(&y).1;
            x = y;
            y = if r.is_zero() { r } else { r.monic() };
        }
        if x.is_zero() {
            x
        } else {
            x.monic()
        }
    }

    /// Resultant of `p` and `q`: the determinant of their Sylvester matrix,
    /// with `p`'s coefficient rows on top.  With this layout
    /// `res(p, q) = lc(p)^deg(q) * prod q(alpha)` over the roots `alpha` of
    /// `p`, so e.g. `res(k, k-1) = -1`.  Degree-zero polynomials give
    /// `res(p, q) = p^deg(q)` (and `1` when both are constants).
    ///
    /// Computed fraction-free: denominators are cleared with positive
    /// integers (leaving the sign untouched), a Bareiss elimination runs
    /// over big integers, and the scaling is divided back out exactly.
    ///
    /// # Panics
    ///
    /// Panics when either polynomial is zero.
    pub fn resultant(p: &Poly, q: &Poly) -> Rat {
        assert!(!p.is_zero() && !q.is_zero(), "resultant of zero polynomial");
        let m = p.degree().unwrap();
        let n = q.degree().unwrap();
        if m == 0 && n == 0 {
            return Rat::one();
        }
        if m == 0 {
            return crate::rational::pow_rat(&p.coeff(0), n as i64);
        }
        if n == 0 {
            return crate::rational::pow_rat(&q.coeff(0), m as i64);
        }

        let (pi, pl) = clear_denominators(p);
        let (qi, ql) = clear_denominators(q);
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        // Row i (0 <= i < n): coefficients of k^(n-1-i) * p, descending.
        for i in 0..n {
            for (jj, c) in pi.iter().rev().enumerate() {
                mat[i][i + jj] = c.clone();
            }
        }
        // Row n + i (0 <= i < m): coefficients of k^(m-1-i) * q, descending.
        for i in 0..m {
            for (jj, c) in qi.iter().rev().enumerate() {
                mat[n + i][i + jj] = c.clone();
            }
        }
        let det = bareiss_determinant(mat);
        // res(Lp*p, Lq*q) = Lp^n * Lq^m * res(p, q); undo the clearing.
        let scale = num_traits::pow::pow(pl, n) * num_traits::pow::pow(ql, m);
        Rat::new(det, scale)
    }

    /// All nonnegative integer roots, ascending.
    ///
    /// Denominators are cleared, a factor `k^m` is split off (contributing
    /// the root `0`), and the remaining candidates are read off the rational
    /// root theorem: an integer root divides the constant term.  Candidates
    /// are scanned up to a root bound derived from the coefficients.
    ///
    /// # Panics
    ///
    /// Panics on the zero polynomial.
    pub fn nonneg_integer_roots(&self) -> Vec<BigInt> {
        assert!(!self.is_zero(), "roots of zero polynomial");
        let (ints, _) = clear_denominators(self);
        let m = ints.iter().position(|c| !c.is_zero()).unwrap();
        let mut roots = Vec::new();
        if m > 0 {
            roots.push(BigInt::zero());
        }
        let reduced: Vec<BigInt> = ints[m..].to_vec();
        if reduced.len() == 1 {
            return roots; // nonzero constant: no further roots
        }
        let a0 = reduced[0].abs();
        let bound = integer_root_bound(&reduced);
        let eval_int = |r: &BigInt| -> bool {
            let mut acc = BigInt::zero();
            for c in reduced.iter().rev() {
                acc = acc * r + c;
            }
            acc.is_zero()
        };

        // Direct scan over small candidates.
        let direct_limit = bound.to_u64().unwrap_or(ROOT_SCAN_LIMIT).min(ROOT_SCAN_LIMIT);
        for r in 1..=direct_limit {
            let rb = BigInt::from(r);
            if (&a0 % &rb).is_zero() && eval_int(&rb) {
                roots.push(rb);
            }
        }

        // Large candidates: walk divisor pairs of the constant term.
        if bound > BigInt::from(ROOT_SCAN_LIMIT) {
            let mut big: Vec<BigInt> = Vec::new();
            let small_limit = a0.sqrt().to_u64().unwrap_or(ROOT_SCAN_LIMIT).min(ROOT_SCAN_LIMIT);
            for d in 1..=small_limit {
                let db = BigInt::from(d);
                if (&a0 % &db).is_zero() {
                    for cand in [db.clone(), &a0 / &db] {
                        if cand > BigInt::from(ROOT_SCAN_LIMIT) && cand <= bound && eval_int(&cand) {
                            big.push(cand);
                        }
                    }
                }
            }
            big.sort();
            big.dedup();
            roots.extend(big);
        }
        roots
    }

    /// Unique polynomial of degree `< points.len()` through the given
    /// points (Newton divided differences, exact).
    ///
    /// # Panics
    ///
    /// Panics when two abscissas coincide.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Poly {
        let n = points.len();
        // Divided-difference table, built in place.
        let mut dd: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                assert!(!dx.is_zero(), "interpolation points must be distinct");
                dd[i] = (&dd[i] - &dd[i - 1]) / dx;
            }
        }
        // Horner over the Newton form.
        let mut acc = Poly::zero();
        for i in (0..n).rev() {
            let root = Poly::new(vec![-points[i].0.clone(), Rat::one()]);
            acc = &(&acc * &root) + &Poly::constant(dd[i].clone());
        }
        acc
    }

    /// Render with a custom variable name, descending powers.
    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && i > 0 { None } else { Some(mag.to_string()) };
            let var_part = match i {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{i}")),
            };
            match (coeff_part, var_part) {
                (Some(c), Some(v)) => {
                    out.push_str(&c);
                    out.push('*');
                    out.push_str(&v);
                }
                (Some(c), None) => out.push_str(&c),
                (None, Some(v)) => out.push_str(&v),
                (None, None) => unreachable!(),
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("k"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

/// Scale a rational-coefficient polynomial to integer coefficients; returns
/// the integer coefficients and the (positive) multiplier used.
fn clear_denominators(p: &Poly) -> (Vec<BigInt>, BigInt) {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let ints = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    (ints, l)
}

/// Determinant by fraction-free Bareiss elimination with row pivoting.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by the Bareiss identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// A bound `B >= 1` such that every integer root `r` of the integer
/// polynomial satisfies `|r| <= B` (Fujiwara's bound, rounded up).
fn integer_root_bound(coeffs: &[BigInt]) -> BigInt {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].abs();
    let mut best = BigInt::one();
    for i in 1..=n {
        let t = coeffs[n - i].abs();
        if t.is_zero() {
            continue;
        }
        // ceil((|a_{n-i}| / |a_n|)^(1/i)), overshooting is fine.
        let q = t.div_ceil(&lead);
        let mut root = q.nth_root(i as u32);
        if num_traits::pow::pow(root.clone(), i) < q {
            root += 1;
        }
        best = best.max(root);
    }
    best * 2
}

// ---------------------------------------------------------------------------
// RationalFunction
// ---------------------------------------------------------------------------

/// Quotient of polynomials in lowest terms with a monic denominator; any
/// constant factor lives in the numerator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numer: Poly,
    denom: Poly,
}

impl RationalFunction {
    /// Reduce `n / d` to canonical form.
    ///
    /// # Panics
    ///
    /// Panics when `d` is the zero polynomial.
    pub fn new(n: Poly, d: Poly) -> RationalFunction {
        assert!(!d.is_zero(), "rational function with zero denominator");
        if n.is_zero() {
            return RationalFunction { numer: Poly::zero(), denom: Poly::one() };
        }
        let g = Poly::gcd(&n, &d);
        let mut numer = n.exact_div(&g).unwrap();
        let mut denom = d.exact_div(&g).unwrap();
        let lc = denom.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip();
            numer = numer.scale(&inv);
            denom = denom.scale(&inv);
        }
        RationalFunction { numer, denom }
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        RationalFunction { numer: p, denom: Poly::one() }
    }

    pub fn constant(c: Rat) -> RationalFunction {
        RationalFunction::from_poly(Poly::constant(c))
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn denom(&self) -> &Poly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer == Poly::one() && self.denom == Poly::one()
    }

    /// Argument shift `r(k + j)`.
    pub fn shift(&self, j: i64) -> RationalFunction {
        RationalFunction::new(self.numer.shift(j), self.denom.shift(j))
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.numer * &other.numer, &self.denom * &other.denom)
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.numer * &other.denom) - &(&other.numer * &self.denom),
            &self.denom * &other.denom,
        )
    }

    /// Evaluate at an integer point; `None` at a pole.
    pub fn eval_int(&self, x: i64) -> Option<Rat> {
        let d = self.denom.eval_int(x);
        if d.is_zero() {
            None
        } else {
            Some(self.numer.eval_int(x) / d)
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.numer.to_string_with("k");
        if self.denom == Poly::one() {
            return write!(f, "{n}");
        }
        let needs_parens = self.numer.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if needs_parens {
            write!(f, "({n})/({})", self.denom)
        } else {
            write!(f, "{n}/({})", self.denom)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    /// Polynomial from ascending integer coefficients.
    fn p(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    // ========================================
    // construction and arithmetic
    // ========================================

    #[test]
    fn normalization_trims_trailing_zeros() {
        let q = Poly::new(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(q.degree(), Some(0));
        assert!(Poly::new(vec![rat_int(0)]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2]); // 2k + 1
        let b = p(&[-1, 1]); // k - 1
        assert_eq!(&a + &b, p(&[0, 3]));
        assert_eq!(&a - &b, p(&[2, 1]));
        assert_eq!(&a * &b, p(&[-1, -1, 2])); // 2k^2 - k - 1
        assert_eq!((&a * &Poly::zero()), Poly::zero());
    }

    #[test]
    fn divmod_cubic_by_quadratic() {
        // k^3 = k * (k^2 + 1) + (-k)
        let (q, r) = p(&[0, 0, 0, 1]).divmod(&p(&[1, 0, 1]));
        assert_eq!(q, p(&[0, 1]));
        assert_eq!(r, p(&[0, -1]));
    }

    #[test]
    fn divmod_reconstructs_input() {
        let a = p(&[3, -2, 0, 7, 1]);
        let d = p(&[1, 5, 2]);
        let (q, r) = a.divmod(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    #[should_panic(expected = "division by zero polynomial")]
    fn divmod_by_zero_panics() {
        p(&[1, 1]).divmod(&Poly::zero());
    }

    #[test]
    fn shift_square_by_one() {
        // (k+1)^2 = k^2 + 2k + 1
        assert_eq!(p(&[0, 0, 1]).shift(1), p(&[1, 2, 1]));
        // shifts compose: p(k+2) then back by -2
        let a = p(&[5, -1, 3, 1]);
        assert_eq!(a.shift(2).shift(-2), a);
        assert_eq!(a.shift(0), a);
    }

    #[test]
    fn eval_points() {
        let a = p(&[-1, 0, 1]); // k^2 - 1
        assert_eq!(a.eval_int(3), rat_int(8));
        assert_eq!(a.eval(&rat(1, 2)), rat(-3, 4));
    }

    // ========================================
    // gcd
    // ========================================

    #[test]
    fn gcd_is_monic_common_factor() {
        // gcd(6k^2 - 6, 4k - 4) = k - 1
        let g = Poly::gcd(&p(&[-6, 0, 6]), &p(&[-4, 4]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        assert_eq!(Poly::gcd(&p(&[1, 0, 1]), &p(&[-1, 1])), Poly::one());
    }

    #[test]
    fn gcd_with_zero() {
        assert_eq!(Poly::gcd(&p(&[0, 2]), &Poly::zero()), p(&[0, 1]));
        assert!(Poly::gcd(&Poly::zero(), &Poly::zero()).is_zero());
    }

    // ========================================
    // resultant
    // ========================================

    #[test]
    fn resultant_detects_common_root() {
        assert_eq!(Poly::resultant(&p(&[-1, 1]), &p(&[-1, 1])), rat_int(0));
    }

    #[test]
    fn resultant_sign_convention() {
        // res(k, k-1) = lc(k)^1 * (k-1 at 0) = -1
        assert_eq!(Poly::resultant(&p(&[0, 1]), &p(&[-1, 1])), rat_int(-1));
        // res(k^2+1, k) = product of k over the roots of k^2+1 = 1
        assert_eq!(Poly::resultant(&p(&[1, 0, 1]), &p(&[0, 1])), rat_int(1));
    }

    #[test]
    fn resultant_with_constants() {
        assert_eq!(Poly::resultant(&p(&[3]), &p(&[1, 0, 1])), rat_int(9));
        assert_eq!(Poly::resultant(&p(&[1, 0, 1]), &p(&[3])), rat_int(9));
        assert_eq!(Poly::resultant(&p(&[5]), &p(&[7])), rat_int(1));
    }

    #[test]
    fn resultant_matches_root_product() {
        // p = (k-1)(k-2), q = (k-4)(k+3): res = q(1) * q(2)
        let pp = p(&[2, -3, 1]);
        let qq = p(&[-12, -1, 1]);
        let expected = qq.eval_int(1) * qq.eval_int(2);
        assert_eq!(Poly::resultant(&pp, &qq), expected);
    }

    #[test]
    fn resultant_with_rational_coefficients() {
        // res(k - 1/2, 2k - 1) = 0: shared root 1/2
        let a = Poly::new(vec![rat(-1, 2), rat_int(1)]);
        assert_eq!(Poly::resultant(&a, &p(&[-1, 2])), rat_int(0));
        // res(k - 1/2, k + 1) = 3/2
        assert_eq!(Poly::resultant(&a, &p(&[1, 1])), rat(3, 2));
    }

    // ========================================
    // integer roots
    // ========================================

    #[test]
    fn roots_of_quadratic() {
        // (k-1)(k-2)
        let roots = p(&[2, -3, 1]).nonneg_integer_roots();
        assert_eq!(roots, vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn root_zero_from_monomial_factor() {
        // k^2 (k - 5)
        let roots = p(&[0, 0, -5, 1]).nonneg_integer_roots();
        assert_eq!(roots, vec![BigInt::from(0), BigInt::from(5)]);
    }

    #[test]
    fn negative_and_fractional_roots_are_skipped() {
        // (k+1)(2k-1): roots -1 and 1/2
        assert!(p(&[-1, 1, 2]).nonneg_integer_roots().is_empty());
    }

    #[test]
    fn rational_coefficients_are_cleared_first() {
        // (k - 3)(k/2 + 1/6): integer root 3 only
        let a = Poly::new(vec![rat(-1, 2), rat(-4, 3), rat(1, 2)]);
        assert_eq!(a.nonneg_integer_roots(), vec![BigInt::from(3)]);
    }

    #[test]
    fn large_root_found_through_divisor_pairs() {
        // (k - 2000000)(k + 1): root beyond the direct scan limit
        let big = 2_000_000i64;
        let a = &p(&[-big, 1]) * &p(&[1, 1]);
        assert_eq!(a.nonneg_integer_roots(), vec![BigInt::from(big)]);
    }

    #[test]
    fn constant_polynomial_has_no_roots() {
        assert!(p(&[4]).nonneg_integer_roots().is_empty());
    }

    // ========================================
    // interpolation
    // ========================================

    #[test]
    fn interpolation_reproduces_polynomial() {
        let a = p(&[2, -7, 0, 3]);
        let pts: Vec<(Rat, Rat)> = (0..4).map(|x| (rat_int(x), a.eval_int(x))).collect();
        assert_eq!(Poly::interpolate(&pts), a);
    }

    #[test]
    fn interpolation_constant() {
        let pts = vec![(rat_int(0), rat(5, 3))];
        assert_eq!(Poly::interpolate(&pts), Poly::constant(rat(5, 3)));
    }

    // ========================================
    // rational functions
    // ========================================

    #[test]
    fn rational_function_reduces_to_lowest_terms() {
        // (k^2 - 1)/(k - 1) = (k + 1)/1
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[-1, 1]));
        assert_eq!(r.numer(), &p(&[1, 1]));
        assert_eq!(r.denom(), &Poly::one());
    }

    #[test]
    fn rational_function_denominator_is_monic() {
        // (2k)/(2k - 2) = k/(k - 1)
        let r = RationalFunction::new(p(&[0, 2]), p(&[-2, 2]));
        assert_eq!(r.numer(), &p(&[0, 1]));
        assert_eq!(r.denom(), &p(&[-1, 1]));
        // 1/(3k + 6): constant moves to the numerator
        let s = RationalFunction::new(Poly::one(), p(&[6, 3]));
        assert_eq!(s.numer(), &Poly::constant(rat(1, 3)));
        assert_eq!(s.denom(), &p(&[2, 1]));
    }

    #[test]
    fn rational_function_arithmetic() {
        let r = RationalFunction::new(p(&[0, 1]), p(&[-1, 1])); // k/(k-1)
        let s = r.mul(&r.shift(1)); // k/(k-1) * (k+1)/k = (k+1)/(k-1)
        assert_eq!(s.numer(), &p(&[1, 1]));
        assert_eq!(s.denom(), &p(&[-1, 1]));
        let one = RationalFunction::constant(rat_int(1));
        assert!(s.sub(&s).is_zero());
        assert!(one.is_one());
    }

    #[test]
    fn rational_function_eval_and_poles() {
        let r = RationalFunction::new(p(&[0, 1]), p(&[-1, 1]));
        assert_eq!(r.eval_int(3), Some(rat(3, 2)));
        assert_eq!(r.eval_int(1), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[-6, 0, 1]).to_string(), "k^2 - 6");
        assert_eq!(p(&[0, -1]).to_string(), "-k");
        assert_eq!(Poly::new(vec![rat(3, 2), rat_int(0), rat(1, 2)]).to_string(), "1/2*k^2 + 3/2");
        assert_eq!(Poly::zero().to_string(), "0");
        let r = RationalFunction::new(p(&[0, -1]), p(&[-1, 1]));
        assert_eq!(r.to_string(), "-k/(k - 1)");
    }
}
