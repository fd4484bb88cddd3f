//! Correction constants for three families of summable terms.
//!
//! For each family there is a sequence `values[d]` (with `values[0] = 1`)
//! such that the term with polynomial part `k^d - values[d]` and the
//! family's pure factors telescopes:
//!
//! * `bell`: `(k^d - values[d]) / k!`, where `values[d]` is the `d`-th Bell
//!   number;
//! * `f`: `(k^d - values[d]) z^k / rf(a, k)`;
//! * `g`: `(k^d - values[d]) z^k rf(a, k)`.
//!
//! The constants are computed by three independent routes that must agree
//! exactly: a binomial recurrence, coefficients of a truncated exponential
//! generating function, and triangular reduction against the family's basis
//! polynomials `p_d(k)` of degree `d + 1`.  `correction_constants` runs all
//! three and panics loudly on any disagreement.
//!
//! Internally the recurrences carry constants `c(d)` normalized by
//! `c(0) = -1`, so that `k^j + c(j)` is a summable polynomial part; the
//! public sequences are the negated, statement-level values.

use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::rational::{binomial_rat, is_nonpositive_integer, Rat};
use crate::series::{exp_minus_one, PowerSeries};
use crate::term::TermSpec;

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// A family of hypergeometric terms with a correction-constant sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Terms `p(k)/k!`.
    Bell,
    /// Terms `p(k) z^k / rf(a, k)`.
    F { a: Rat, z: Rat },
    /// Terms `p(k) z^k rf(a, k)`.
    G { a: Rat, z: Rat },
}

fn validate_parameters(a: &Rat, z: &Rat) -> Result<(), String> {
    if z.is_zero() {
        return Err("parameter z must be nonzero".to_string());
    }
    if is_nonpositive_integer(a) {
        return Err(format!(
            "parameter a = {a} is a nonpositive integer, so rf(a, k) has a zero factor"
        ));
    }
    Ok(())
}

impl Family {
    /// The `z^k / rf(a, k)` family; rejects `z = 0` and nonpositive integer
    /// `a`.
    pub fn f(a: Rat, z: Rat) -> Result<Family, String> {
        validate_parameters(&a, &z)?;
        Ok(Family::F { a, z })
    }

    /// The `z^k rf(a, k)` family; same parameter validation as `f`.
    pub fn g(a: Rat, z: Rat) -> Result<Family, String> {
        validate_parameters(&a, &z)?;
        Ok(Family::G { a, z })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Bell => "bell",
            Family::F { .. } => "f",
            Family::G { .. } => "g",
        }
    }

    /// Parameter `a`; the bell family is `f` with `a = z = 1`.
    pub fn a(&self) -> Rat {
        match self {
            Family::Bell => Rat::one(),
            Family::F { a, .. } | Family::G { a, .. } => a.clone(),
        }
    }

    /// Parameter `z`; the bell family is `f` with `a = z = 1`.
    pub fn z(&self) -> Rat {
        match self {
            Family::Bell => Rat::one(),
            Family::F { z, .. } | Family::G { z, .. } => z.clone(),
        }
    }

    /// Basis polynomial `p_d(k)`, of degree exactly `d + 1`, whose span
    /// (over `d >= 0`) is the space of summable polynomial parts for the
    /// family:
    ///
    /// * bell: `k^(d+1) - (k+1)^d`;
    /// * `f`: `k^d (k + a - 1) - z (k+1)^d`;
    /// * `g`: `z (k+1)^d (k + a) - k^d`.
    pub fn basis_poly(&self, d: usize) -> Poly {
        let kd = Poly::monomial(Rat::one(), d);
        let shifted = kd.shift(1); // (k+1)^d
        match self {
            Family::Bell => &Poly::monomial(Rat::one(), d + 1) - &shifted,
            Family::F { a, z } => {
                let linear = Poly::new(vec![a - Rat::one(), Rat::one()]);
                &(&kd * &linear) - &shifted.scale(z)
            }
            Family::G { a, z } => {
                let linear = Poly::new(vec![a.clone(), Rat::one()]);
                &(&shifted * &linear).scale(z) - &kd
            }
        }
    }
}

/// Statement-level correction constants for one family: the summable term
/// at degree `d` has polynomial part `k^d - values[d]`, and `values[0] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectionSequence {
    pub family: Family,
    pub values: Vec<Rat>,
}

// ---------------------------------------------------------------------------
// Route 1: binomial recurrences
// ---------------------------------------------------------------------------

/// Proof-level constants `c(0..=dmax)` with `c(0) = -1`:
///
/// * bell: `c(d+1) = sum_j C(d,j) c(j)`;
/// * `f`: `c(d+1) = (1-a) c(d) + z sum_j C(d,j) c(j)`;
/// * `g`: `z c(d+1) = c(d) - z sum_j (a C(d,j) + C(d,j-1)) c(j)`.
fn proof_constants(family: &Family, dmax: usize) -> Vec<Rat> {
    let mut c = vec![-Rat::one()];
    for d in 0..dmax {
        let next = match family {
            Family::Bell => (0..=d).map(|j| binomial_rat(d, j) * &c[j]).sum(),
            Family::F { a, z } => {
                let conv: Rat = (0..=d).map(|j| binomial_rat(d, j) * &c[j]).sum();
                (Rat::one() - a) * &c[d] + z * conv
            }
            Family::G { a, z } => {
                let conv: Rat = (0..=d)
                    .map(|j| {
                        let mut w = a * binomial_rat(d, j);
                        if j > 0 {
                            w += binomial_rat(d, j - 1);
                        }
                        w * &c[j]
                    })
                    .sum();
                (&c[d] - z * conv) / z
            }
        };
        c.push(next);
    }
    c
}

/// Statement-level constants by the binomial recurrence route.
pub fn recurrence_values(family: &Family, dmax: usize) -> Vec<Rat> {
    proof_constants(family, dmax).iter().map(|v| -v).collect()
}

/// Bell numbers `1, 1, 2, 5, 15, 52, ...` through index `dmax`.
pub fn bell_numbers(dmax: usize) -> CorrectionSequence {
    CorrectionSequence {
        family: Family::Bell,
        values: recurrence_values(&Family::Bell, dmax),
    }
}

/// Correction constants for the `z^k / rf(a, k)` family, triple-checked
/// across all three routes.
pub fn f_correction(a: Rat, z: Rat, dmax: usize) -> Result<CorrectionSequence, String> {
    Ok(correction_constants(&Family::f(a, z)?, dmax))
}

/// Correction constants for the `z^k rf(a, k)` family, triple-checked
/// across all three routes.
pub fn g_correction(a: Rat, z: Rat, dmax: usize) -> Result<CorrectionSequence, String> {
    Ok(correction_constants(&Family::g(a, z)?, dmax))
}

// ---------------------------------------------------------------------------
// Route 2: truncated exponential generating functions
// ---------------------------------------------------------------------------

/// Generating function `exp((1-a) x + z (e^x - 1))` of the `f` family,
/// truncated at the given order; `values[d] = d! * coefficient(d)`.
pub fn egf_f(a: &Rat, z: &Rat, order: usize) -> Result<PowerSeries, String> {
    validate_parameters(a, z)?;
    let mut u = exp_minus_one(order).scale(z);
    u = u.add(&PowerSeries::monomial(Rat::one() - a, 1.min(order), order));
    Ok(PowerSeries::exp_of(&u))
}

/// Generating function `exp(-a x + (1/z)(1 - e^{-x}))` of the `g` family,
/// truncated at the given order; `values[d] = d! * coefficient(d)`.
pub fn egf_g(a: &Rat, z: &Rat, order: usize) -> Result<PowerSeries, String> {
    validate_parameters(a, z)?;
    let mut u = exp_minus_one(order).compose_neg().scale(&-z.clone().recip());
    u = u.add(&PowerSeries::monomial(-a.clone(), 1.min(order), order));
    Ok(PowerSeries::exp_of(&u))
}

/// Statement-level constants by the generating-function route.
pub fn egf_values(family: &Family, dmax: usize) -> Vec<Rat> {
    let series = match family {
        Family::Bell => egf_f(&Rat::one(), &Rat::one(), dmax),
        Family::F { a, z } => egf_f(a, z, dmax),
        Family::G { a, z } => egf_g(a, z, dmax),
    }
    .expect("family parameters were validated at construction");
    (0..=dmax).map(|d| series.egf_coeff(d)).collect()
}

// ---------------------------------------------------------------------------
// Route 3: triangular basis reduction
// ---------------------------------------------------------------------------

/// Statement-level constants by reducing each basis polynomial `p_d`
/// against the already-built summable binomials `k^j + c(j)`: eliminating
/// the powers `k^d, ..., k^1` from the monic normalization of `p_d` leaves
/// `k^(d+1) + c(d+1)`, from which the next constant is read off.
pub fn basis_reduction(family: &Family, dmax: usize) -> CorrectionSequence {
    let mut proof = vec![-Rat::one()];
    for d in 0..dmax {
        let mut q = family.basis_poly(d).monic();
        for j in (1..=d).rev() {
            let alpha = q.coeff(j);
            if alpha.is_zero() {
                continue;
            }
            let elem = &Poly::monomial(alpha.clone(), j) + &Poly::constant(alpha * &proof[j]);
            q = &q - &elem;
        }
        assert_eq!(q.coeff(d + 1), Rat::one(), "basis polynomial lost its leading term");
        assert!(
            (1..=d).all(|j| q.coeff(j).is_zero()),
            "basis reduction left a middle power behind"
        );
        proof.push(q.coeff(0));
    }
    CorrectionSequence {
        family: family.clone(),
        values: proof.iter().map(|v| -v).collect(),
    }
}

// ---------------------------------------------------------------------------
// Cross-checked front door
// ---------------------------------------------------------------------------

/// Correction constants through degree `dmax`, computed by all three routes
/// and returned only when they agree exactly.
///
/// # Panics
///
/// Panics when any two routes disagree; that always indicates an internal
/// defect, never bad input.
pub fn correction_constants(family: &Family, dmax: usize) -> CorrectionSequence {
    let recurrence = recurrence_values(family, dmax);
    let egf = egf_values(family, dmax);
    let basis = basis_reduction(family, dmax).values;
    assert_eq!(
        recurrence, egf,
        "recurrence and generating-function routes disagree for family {}",
        family.name()
    );
    assert_eq!(
        recurrence, basis,
        "recurrence and basis-reduction routes disagree for family {}",
        family.name()
    );
    CorrectionSequence { family: family.clone(), values: recurrence }
}

/// The summable term of degree `d`: polynomial part `k^d - values[d]`
/// combined with the family's pure factors.  For `d = 0` this is the zero
/// term, since `values[0] = 1`.
pub fn summable_term(family: &Family, d: usize) -> TermSpec {
    let values = recurrence_values(family, d);
    let poly = &Poly::monomial(Rat::one(), d) - &Poly::constant(values[d].clone());
    match family {
        Family::Bell => TermSpec::new(poly, Rat::one(), vec![], -1),
        Family::F { a, z } => TermSpec::new(poly, z.clone(), vec![(a.clone(), -1)], 0),
        Family::G { a, z } => TermSpec::new(poly, z.clone(), vec![(a.clone(), 1)], 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gosper::{antidifference, brute_sum, definite_sum};
    use crate::rational::{rat, rat_int};

    fn ints(values: &[i64]) -> Vec<Rat> {
        values.iter().map(|&v| rat_int(v)).collect()
    }

    /// Second, unrelated Bell construction: the Bell triangle, where each
    /// row starts with the previous row's last entry and accumulates to the
    /// left neighbor plus the entry above it.
    fn bell_triangle(dmax: usize) -> Vec<Rat> {
        let mut row = vec![Rat::one()];
        let mut bells = vec![Rat::one()];
        for _ in 0..dmax {
            let mut next = vec![row.last().unwrap().clone()];
            for v in &row {
                let left = next.last().unwrap().clone();
                next.push(left + v);
            }
            bells.push(next[0].clone());
            row = next;
        }
        bells
    }

    // ========================================
    // recurrence route
    // ========================================

    #[test]
    fn bell_numbers_prefix() {
        let seq = bell_numbers(10);
        assert_eq!(
            seq.values,
            ints(&[1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975])
        );
    }

    #[test]
    fn bell_numbers_match_triangle_construction() {
        assert_eq!(bell_numbers(16).values, bell_triangle(16));
    }

    #[test]
    fn f_family_reduces_to_bell_at_unit_parameters() {
        let seq = f_correction(Rat::one(), Rat::one(), 10).unwrap();
        assert_eq!(seq.values, bell_numbers(10).values);
    }

    #[test]
    fn f_family_doubled_geometric_base() {
        let seq = f_correction(Rat::one(), rat_int(2), 4).unwrap();
        assert_eq!(seq.values, ints(&[1, 2, 6, 22, 94]));
    }

    #[test]
    fn f_family_half_parameter_matches_weighted_bell_sum() {
        // values[d] = sum_j C(d,j) b(j) / 2^(d-j)
        let seq = f_correction(rat(1, 2), Rat::one(), 6).unwrap();
        assert_eq!(seq.values[1], rat(3, 2));
        assert_eq!(seq.values[2], rat(13, 4));
        let bells = bell_numbers(6).values;
        for d in 0..=6 {
            let direct: Rat = (0..=d)
                .map(|j| binomial_rat(d, j) * &bells[j] / rat_int(2).pow((d - j) as i32))
                .sum();
            assert_eq!(seq.values[d], direct, "weighted Bell sum fails at d = {d}");
        }
    }

    #[test]
    fn g_family_alternating_bell_shift() {
        // values[d] = (-1)^d b(d+1)
        let seq = g_correction(Rat::one(), rat_int(-1), 8).unwrap();
        let bells = bell_numbers(9).values;
        for d in 0..=8 {
            let sign = if d % 2 == 0 { Rat::one() } else { -Rat::one() };
            assert_eq!(seq.values[d], sign * &bells[d + 1]);
        }
    }

    #[test]
    fn g_family_half_parameter_matches_bell_convolution() {
        // values[d] = (-1)^d sum_j C(d,j) b(j+1) b(d-j)
        let seq = g_correction(Rat::one(), rat(-1, 2), 6).unwrap();
        assert_eq!(seq.values[1], rat_int(-3));
        assert_eq!(seq.values[2], rat_int(11));
        let bells = bell_numbers(7).values;
        for d in 0..=6 {
            let sign = if d % 2 == 0 { Rat::one() } else { -Rat::one() };
            let direct: Rat = (0..=d)
                .map(|j| binomial_rat(d, j) * &bells[j + 1] * &bells[d - j])
                .sum();
            assert_eq!(seq.values[d], sign * direct, "Bell convolution fails at d = {d}");
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(Family::f(Rat::zero(), Rat::one()).is_err());
        assert!(Family::f(rat_int(-3), Rat::one()).is_err());
        assert!(Family::f(Rat::one(), Rat::zero()).is_err());
        assert!(Family::g(rat_int(-1), rat_int(2)).is_err());
        assert!(Family::g(rat(-1, 2), rat_int(2)).is_ok()); // non-integer is fine
    }

    // ========================================
    // route agreement
    // ========================================

    #[test]
    fn three_routes_agree_on_a_parameter_grid() {
        let a_grid = [rat_int(1), rat(1, 2), rat(3, 2), rat_int(2), rat(5, 3)];
        let z_grid = [rat_int(1), rat_int(-1), rat(1, 2), rat(-1, 2), rat_int(2), rat_int(3), rat_int(-2)];
        correction_constants(&Family::Bell, 15);
        for a in &a_grid {
            for z in &z_grid {
                // correction_constants panics internally on any mismatch
                correction_constants(&Family::f(a.clone(), z.clone()).unwrap(), 15);
                correction_constants(&Family::g(a.clone(), z.clone()).unwrap(), 15);
            }
        }
    }

    #[test]
    fn egf_route_standalone_values() {
        let f11 = egf_f(&Rat::one(), &Rat::one(), 4).unwrap();
        let coeffs: Vec<Rat> = (0..=4).map(|d| f11.egf_coeff(d)).collect();
        assert_eq!(coeffs, ints(&[1, 1, 2, 5, 15]));
        let g = egf_g(&Rat::one(), &rat_int(-1), 3).unwrap();
        let coeffs: Vec<Rat> = (0..=3).map(|d| g.egf_coeff(d)).collect();
        assert_eq!(coeffs, ints(&[1, -2, 5, -15]));
    }

    #[test]
    fn basis_route_standalone_values() {
        assert_eq!(
            basis_reduction(&Family::Bell, 4).values,
            ints(&[1, 1, 2, 5, 15])
        );
        let f = Family::f(Rat::one(), rat_int(2)).unwrap();
        assert_eq!(basis_reduction(&f, 4).values, ints(&[1, 2, 6, 22, 94]));
        let g = Family::g(Rat::one(), rat_int(-1)).unwrap();
        assert_eq!(basis_reduction(&g, 3).values, ints(&[1, -2, 5, -15]));
    }

    // ========================================
    // basis polynomials and summable terms
    // ========================================

    #[test]
    fn basis_polynomials_have_full_degree() {
        let families = [
            Family::Bell,
            Family::f(rat(1, 2), rat_int(3)).unwrap(),
            Family::g(rat(5, 3), rat(-1, 2)).unwrap(),
        ];
        for fam in &families {
            for d in 0..=8 {
                assert_eq!(fam.basis_poly(d).degree(), Some(d + 1));
            }
        }
    }

    #[test]
    fn bell_basis_poly_small_cases() {
        // p_2 = k^3 - (k+1)^2
        assert_eq!(
            Family::Bell.basis_poly(2),
            Poly::new(vec![rat_int(-1), rat_int(-2), rat_int(-1), rat_int(1)])
        );
    }

    #[test]
    fn basis_polynomials_are_summable_shells() {
        let families = [
            Family::Bell,
            Family::f(Rat::one(), rat_int(2)).unwrap(),
            Family::g(Rat::one(), rat(-1, 2)).unwrap(),
        ];
        for fam in &families {
            for d in 0..=5 {
                let t = summable_term(fam, 1).with_polynomial(fam.basis_poly(d));
                assert!(
                    antidifference(&t).is_some(),
                    "basis polynomial d = {d} of family {} is not summable",
                    fam.name()
                );
            }
        }
    }

    #[test]
    fn summable_terms_telescope_and_neighbors_do_not() {
        let families = [
            Family::Bell,
            Family::f(Rat::one(), rat_int(2)).unwrap(),
            Family::f(rat(1, 2), Rat::one()).unwrap(),
            Family::g(Rat::one(), rat_int(-1)).unwrap(),
            Family::g(Rat::one(), rat(-1, 2)).unwrap(),
        ];
        for fam in &families {
            for d in 1..=8 {
                let t = summable_term(fam, d);
                assert!(
                    antidifference(&t).is_some(),
                    "family {} degree {d} should telescope",
                    fam.name()
                );
                let off = t.with_polynomial(
                    &t.polynomial_part + &Poly::constant(Rat::one()),
                );
                assert!(
                    antidifference(&off).is_none(),
                    "family {} degree {d} with shifted constant should not telescope",
                    fam.name()
                );
            }
        }
    }

    #[test]
    fn summable_term_examples() {
        let bell3 = summable_term(&Family::Bell, 3);
        assert_eq!(crate::term::pretty(&bell3), "(k^3 - 5)/fact(k)");
        let f = Family::f(Rat::one(), rat_int(2)).unwrap();
        assert_eq!(crate::term::pretty(&summable_term(&f, 1)), "(k - 2)*pow(2,k)/fact(k)");
        let g = Family::g(Rat::one(), rat_int(-1)).unwrap();
        assert!(summable_term(&g, 0).is_zero());
    }

    #[test]
    fn summable_terms_sum_to_brute_force() {
        let g = Family::g(Rat::one(), rat(-1, 2)).unwrap();
        let f = Family::f(rat(1, 2), Rat::one()).unwrap();
        for fam in [&Family::Bell, &f, &g] {
            for d in 1..=4 {
                let t = summable_term(fam, d);
                for n in [0u64, 1, 5, 12] {
                    assert_eq!(
                        definite_sum(&t, n).unwrap(),
                        brute_sum(&t, n),
                        "family {} d = {d} n = {n}",
                        fam.name()
                    );
                }
            }
        }
    }
}
