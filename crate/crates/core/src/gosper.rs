//! Gosper's algorithm: decide whether a simple hypergeometric term has a
//! hypergeometric antidifference, and when it does, produce a telescoping
//! certificate and exact definite sums.
//!
//! The pipeline for a term `f(k)` with ratio `r(k) = f(k+1)/f(k)`:
//!
//! 1. `normal_form` factors `r = z * (a(k)/b(k)) * (c(k+1)/c(k))` with
//!    `a`, `b`, `c` monic and `gcd(a(k), b(k+i)) = 1` for every `i >= 0`;
//! 2. `degree_bound` bounds the degree of a polynomial solution `x(k)` of
//!    `x(k+1) a(k) - x(k) b(k-1) = c(k)` (the constant `z` folded into `a`);
//! 3. `solve_gosper` finds `x` by exact linear algebra, or proves there is
//!    none, settling summability;
//! 4. the certificate multiplier `R(k) = x(k) b(k-1) / c(k)` satisfies
//!    `R(k+1) r(k) - R(k) = 1`, so `R(k) f(k)` is an antidifference of `f`.
//!
//! Definite sums evaluate the antidifference without ever dividing by
//! `c(k)`: the term values factor through the kernel product
//! `z^k * prod_{j<k} a(j)/b(j)`, which has no poles at nonnegative
//! integers, so terms that vanish inside the summation range are handled
//! exactly.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{Poly, RationalFunction};
use crate::rational::{is_nonpositive_integer, rat_int, Rat};
use crate::term::TermSpec;

// ---------------------------------------------------------------------------
// Normal form
// ---------------------------------------------------------------------------

/// Gosper normal form of a rational function:
/// `r(k) = z * (a(k)/b(k)) * (c(k+1)/c(k))` with `a`, `b`, `c` monic and
/// `gcd(a(k), b(k+i)) = 1` for all integers `i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub z: Rat,
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
}

impl NormalForm {
    /// Rebuild `z * (a/b) * (c(k+1)/c(k))`; used to cross-check the
    /// factorization.
    pub fn reconstruct(&self) -> RationalFunction {
        let num = &self.a.scale(&self.z) * &self.c.shift(1);
        let den = &self.b * &self.c;
        RationalFunction::new(num, den)
    }
}

/// Compute the Gosper normal form of a nonzero rational function.
///
/// The dispersion set (shifts `j >= 0` where `b(k+j)` shares a factor with
/// `a(k)`) is read off the nonnegative integer roots of
/// `res_k(p(k), q(k+j))`, a polynomial in `j` recovered by exact
/// interpolation.  Each `j` then peels `g = gcd(p(k), q(k+j))` off both
/// sides and deposits `g(k-1) ... g(k-j)` into the shell `c`.
///
/// # Panics
///
/// Panics when `r` is zero.
pub fn normal_form(r: &RationalFunction) -> NormalForm {
    assert!(!r.is_zero(), "normal form of the zero rational function");
    let z = r.numer().leading_coeff();
    let mut p = r.numer().monic();
    let mut q = r.denom().clone();
    let mut c = Poly::one();

    let dp = p.degree().unwrap();
    let dq = q.degree().unwrap();
    if dp > 0 && dq > 0 {
        let points: Vec<(Rat, Rat)> = (0..=(dp * dq) as i64)
            .map(|j| (rat_int(j), Poly::resultant(&p, &q.shift(j))))
            .collect();
        let dispersal = Poly::interpolate(&points);
        for root in dispersal.nonneg_integer_roots() {
            let j = root.to_i64().expect("dispersion shift exceeds i64");
            let g = Poly::gcd(&p, &q.shift(j));
            if g.degree() == Some(0) {
                continue;
            }
            p = p.exact_div(&g).unwrap();
            q = q.exact_div(&g.shift(-j)).unwrap();
            for i in 1..=j {
                c = &c * &g.shift(-i);
            }
        }
    }
    NormalForm { z, a: p, b: q, c }
}

// ---------------------------------------------------------------------------
// Degree bound and polynomial solver
// ---------------------------------------------------------------------------

/// Degree of `p` as an `i64`, with the zero polynomial mapped far below
/// every real degree.
fn deg_i(p: &Poly) -> i64 {
    p.degree().map_or(i64::MIN / 2, |d| d as i64)
}

/// Upper bound for the degree of a polynomial solution `x(k)` of
/// `x(k+1) a(k) - x(k) b(k-1) = c(k)`, or `None` when no nonnegative degree
/// is possible.  Any constant factor of the kernel must already be folded
/// into `a`.
///
/// Writing `A = a(k)`, `B = b(k-1)`, `s+ = A + B`, `s- = A - B`, the
/// classical case analysis applies: if `deg s- >= deg s+` the bound is
/// `deg c - deg s-`; if `deg s- < deg s+ - 1` it is `deg c - deg s+ + 1`;
/// in the boundary case `deg s- = deg s+ - 1` the candidate
/// `-2 lc(s-) / lc(s+)` joins `deg c - deg s+ + 1` when it is a nonnegative
/// integer.  One more candidate is always admitted: degree `0` whenever
/// `deg c = deg s-`, since for constant `x` the `s+` half of the equation
/// vanishes identically and the classical leading-term argument does not
/// apply.
pub fn degree_bound(a: &Poly, b: &Poly, c: &Poly) -> Option<usize> {
    let bm = b.shift(-1);
    let sp = a + &bm;
    let sm = a - &bm;
    let dc = deg_i(c);
    let mut candidates: Vec<i64> = Vec::new();
    if deg_i(&sm) == dc {
        candidates.push(0);
    }
    if deg_i(&sm) >= deg_i(&sp) {
        candidates.push(dc - deg_i(&sm));
    } else {
        // sp is nonzero here: sm < sp rules out both being zero.
        let dsp = deg_i(&sp);
        candidates.push(dc - dsp + 1);
        if deg_i(&sm) == dsp - 1 {
            let r = rat_int(-2) * sm.leading_coeff() / sp.leading_coeff();
            if r.is_integer() && !r.is_negative() {
                candidates.push(r.to_integer().to_i64().expect("degree bound exceeds i64"));
            }
        }
    }
    let best = candidates.into_iter().max().unwrap();
    (best >= 0).then_some(best as usize)
}

/// Solve `x(k+1) a(k) - x(k) b(k-1) = c(k)` for a polynomial `x`, or return
/// `None` when no polynomial solution exists.  Any constant factor of the
/// kernel must already be folded into `a`.
pub fn solve_gosper(a: &Poly, b: &Poly, c: &Poly) -> Option<Poly> {
    let e = degree_bound(a, b, c)?;
    let bm = b.shift(-1);

    // Column i holds the coefficients of (k+1)^i * a(k) - k^i * b(k-1),
    // the contribution of the unknown coefficient of k^i.
    let one_plus_k = Poly::new(vec![Rat::one(), Rat::one()]);
    let mut shifted_power = Poly::one(); // (k+1)^i
    let mut columns: Vec<Poly> = Vec::with_capacity(e + 1);
    for i in 0..=e {
        if i > 0 {
            shifted_power = &shifted_power * &one_plus_k;
        }
        let direct = Poly::monomial(Rat::one(), i);
        columns.push(&(&shifted_power * a) - &(&direct * &bm));
    }

    let rows = columns
        .iter()
        .map(deg_i)
        .chain(std::iter::once(deg_i(c)))
        .max()
        .unwrap()
        .max(0) as usize
        + 1;
    let mut matrix: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = columns.iter().map(|col| col.coeff(r)).collect();
            row.push(c.coeff(r));
            row
        })
        .collect();

    // Exact Gauss-Jordan elimination, pivoting on the first nonzero entry.
    let ncols = e + 1;
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(pr) = (next_row..rows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(next_row, pr);
        let inv = matrix[next_row][col].clone().recip();
        for v in &mut matrix[next_row] {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != next_row && !matrix[r][col].is_zero() {
                let f = matrix[r][col].clone();
                for jj in 0..=ncols {
                    let t = &matrix[next_row][jj] * &f;
                    matrix[r][jj] -= t;
                }
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
        if next_row == rows {
            break;
        }
    }
    // Inconsistent leftover rows mean there is no solution of degree <= e,
    // hence no polynomial solution at all.
    for r in next_row..rows {
        if !matrix[r][ncols].is_zero() {
            return None;
        }
    }
    let coeffs: Vec<Rat> = (0..ncols)
        .map(|col| pivot_of_col[col].map_or_else(Rat::zero, |r| matrix[r][ncols].clone()))
        .collect();
    Some(Poly::new(coeffs))
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// Telescoping certificate for a summable term: the Gosper equation
/// solution `x` and the multiplier `R(k) = x(k) b(k-1) / c(k)` with
/// `R(k+1) r(k) - R(k) = 1`, so `R(k) f(k)` is an antidifference of `f(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub x: Poly,
    pub multiplier: RationalFunction,
}

/// Check the telescoping identity `R(k+1) r(k) - R(k) = 1` exactly, where
/// `R` is the certificate multiplier and `r` the term ratio.
pub fn verify_certificate(r: &RationalFunction, cert: &Certificate) -> bool {
    let lhs = cert.multiplier.shift(1).mul(r).sub(&cert.multiplier);
    lhs.is_one()
}

/// Decide summability of a nonzero term and produce a verified certificate.
///
/// Returns `None` exactly when the term has no hypergeometric
/// antidifference.  Produced certificates are re-verified against the
/// telescoping identity before being returned, so a solver defect surfaces
/// as a loud panic rather than a wrong sum.
///
/// # Panics
///
/// Panics when the polynomial part of `t` is zero.
pub fn antidifference(t: &TermSpec) -> Option<Certificate> {
    let ratio = t.ratio();
    let (_, cert) = certificate_from_ratio(&ratio)?;
    Some(cert)
}

fn certificate_from_ratio(ratio: &RationalFunction) -> Option<(NormalForm, Certificate)> {
    let nf = normal_form(ratio);
    let folded = nf.a.scale(&nf.z);
    let x = solve_gosper(&folded, &nf.b, &nf.c)?;
    let multiplier = RationalFunction::new(&x * &nf.b.shift(-1), nf.c.clone());
    let cert = Certificate { x, multiplier };
    assert!(
        verify_certificate(ratio, &cert),
        "internal error: certificate failed the telescoping identity"
    );
    Some((nf, cert))
}

/// Express the antidifference `R(k) f(k)` as a term in canonical form:
/// the polynomial part becomes `x(k) b(k-1) p(k) / c(k)` while the pure
/// factors of `f` carry over.  Returns `None` when that quotient is not a
/// polynomial (possible when rising factors contribute to the shell `c`).
pub fn antidifference_term(t: &TermSpec, cert: &Certificate) -> Option<TermSpec> {
    let scaled = &(cert.multiplier.numer() * &t.polynomial_part);
    let q = scaled.exact_div(cert.multiplier.denom())?;
    Some(t.with_polynomial(q))
}

// ---------------------------------------------------------------------------
// Definite summation
// ---------------------------------------------------------------------------

/// Error returned by `definite_sum` when the term has no hypergeometric
/// antidifference; callers wanting a value anyway should use `brute_sum`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotSummable;

impl fmt::Display for NotSummable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "term has no hypergeometric antidifference")
    }
}

impl std::error::Error for NotSummable {}

/// Term-by-term reference sum `f(0) + f(1) + ... + f(n)`.
pub fn brute_sum(t: &TermSpec, n: u64) -> Rat {
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += t.eval(k);
    }
    acc
}

/// Exact `sum_{k=0}^{n} f(k)` through the telescoping certificate.
///
/// The antidifference is evaluated as `S(k) = x(k) b(k-1) h(k)` where
/// `h(k) = z0 * z^k * prod_{j<k} a(j)/b(j)` is the value of `f(k)/c(k)`
/// continued through the zeros of `c`; the sum is `S(n+1) - S(0)`.  No
/// division by `c(k)` or by a term value ever happens, so polynomial parts
/// that vanish inside the range are safe.
pub fn definite_sum(t: &TermSpec, n: u64) -> Result<Rat, NotSummable> {
    if t.is_zero() {
        return Ok(Rat::zero());
    }
    // A rising factor with nonpositive integer base makes the term
    // identically zero from some index on and the kernel representation
    // degenerate; the sum has only finitely many nonzero terms, so decide
    // summability formally but evaluate directly.
    let has_dead_factor = t
        .rising_factors
        .iter()
        .any(|(base, exp)| *exp > 0 && is_nonpositive_integer(base));
    let ratio = t.ratio();
    let (nf, cert) = certificate_from_ratio(&ratio).ok_or(NotSummable)?;
    if has_dead_factor {
        return Ok(brute_sum(t, n));
    }

    // Anchor the constant z0 at the first index where the shell c is
    // nonzero; the kernel product has no poles at nonnegative integers.
    let mut k0 = 0i64;
    while nf.c.eval_int(k0).is_zero() {
        k0 += 1;
    }
    let top = (n as i64 + 1).max(k0);
    let mut kernel = Vec::with_capacity(top as usize + 1);
    kernel.push(Rat::one());
    for j in 0..top {
        let bj = nf.b.eval_int(j);
        assert!(!bj.is_zero(), "internal error: kernel denominator vanished at k = {j}");
        let next = kernel.last().unwrap() * &nf.z * nf.a.eval_int(j) / bj;
        kernel.push(next);
    }
    let anchor = &kernel[k0 as usize];
    let z0 = if anchor.is_zero() {
        // The kernel died before the anchor, which forces the term values
        // to be zero wherever the representation is used.
        Rat::zero()
    } else {
        t.eval(k0 as u64) / (nf.c.eval_int(k0) * anchor)
    };
    let bm = nf.b.shift(-1);
    let s_at = |k: i64| -> Rat {
        cert.x.eval_int(k) * bm.eval_int(k) * &z0 * &kernel[k as usize]
    };
    Ok(s_at(n as i64 + 1) - s_at(0))
}
