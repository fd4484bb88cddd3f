//! Randomized property tests for the polynomial layer, the term parser, and
//! the summation engine.  Everything is exact, so properties are equalities,
//! not approximations.

use bellsum_core::gosper::{antidifference, brute_sum, definite_sum, verify_certificate};
use bellsum_core::poly::Poly;
use bellsum_core::rational::{rat, rat_int, Rat};
use bellsum_core::term::{parse_term, pretty, TermSpec};
use proptest::prelude::*;

fn rat_values() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn polys(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat_values(), 1..=max_deg + 1).prop_map(Poly::new)
}

fn nonzero_polys(max_deg: usize) -> impl Strategy<Value = Poly> {
    polys(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Simple hypergeometric terms drawn from the grammar: a small polynomial
/// part, a geometric base, up to two rising-factorial shells, and an optional
/// factorial power.
fn terms() -> impl Strategy<Value = TermSpec> {
    let poly = prop::collection::vec(rat_values(), 1..=4)
        .prop_map(Poly::new)
        .prop_filter("nonzero polynomial part", |p| !p.is_zero());
    let base = prop::sample::select(vec![
        rat_int(1),
        rat_int(-1),
        rat_int(2),
        rat(1, 2),
        rat(-1, 2),
        rat_int(3),
    ]);
    let rising = prop::collection::vec(
        (
            prop::sample::select(vec![
                rat(1, 2),
                rat(3, 2),
                rat_int(2),
                rat_int(3),
                rat(5, 2),
                rat(-3, 2),
            ]),
            prop::sample::select(vec![1i64, -1]),
        ),
        0..=2,
    );
    (poly, base, rising, -1i64..=1).prop_map(|(p, z, rf, fe)| TermSpec::new(p, z, rf, fe))
}

proptest! {
    // ========================================
    // polynomial division and gcd
    // ========================================

    #[test]
    fn divmod_reconstructs(a in polys(6), b in nonzero_polys(4)) {
        let (q, r) = a.divmod(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        if !r.is_zero() {
            prop_assert!(r.degree().unwrap() < b.degree().unwrap());
        }
    }

    #[test]
    fn gcd_divides_both_and_is_monic(a in nonzero_polys(5), b in nonzero_polys(5)) {
        let g = Poly::gcd(&a, &b);
        prop_assert_eq!(g.leading_coeff(), rat_int(1));
        prop_assert!(a.exact_div(&g).is_some());
        prop_assert!(b.exact_div(&g).is_some());
    }

    #[test]
    fn gcd_absorbs_common_factors(p in nonzero_polys(3), q in nonzero_polys(3), m in nonzero_polys(2)) {
        let g = Poly::gcd(&(&p * &m), &(&q * &m));
        let expected = (&Poly::gcd(&p, &q) * &m).monic();
        prop_assert_eq!(g, expected);
    }

    // ========================================
    // resultants
    // ========================================

    #[test]
    fn resultant_is_multiplicative(p in nonzero_polys(3), q in nonzero_polys(2), r in nonzero_polys(2)) {
        let combined = Poly::resultant(&p, &(&q * &r));
        let split = Poly::resultant(&p, &q) * Poly::resultant(&p, &r);
        prop_assert_eq!(combined, split);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(p in nonzero_polys(4), q in nonzero_polys(4)) {
        let shared = Poly::gcd(&p, &q).degree().unwrap_or(0) > 0;
        let vanishes = Poly::resultant(&p, &q) == rat_int(0);
        prop_assert_eq!(vanishes, shared);
    }

    // ========================================
    // shifting, roots, interpolation
    // ========================================

    #[test]
    fn shift_roundtrips_and_translates(p in polys(5), s in -6i64..=6, x in -10i64..=10) {
        prop_assert_eq!(p.shift(s).shift(-s), p.clone());
        prop_assert_eq!(p.shift(s).eval_int(x), p.eval_int(x + s));
    }

    #[test]
    fn integer_roots_are_sound_and_complete(p in nonzero_polys(4)) {
        let roots = p.nonneg_integer_roots();
        for root in &roots {
            let at: i64 = root.try_into().expect("small root");
            prop_assert_eq!(p.eval_int(at), rat_int(0));
        }
        for x in 0..=50i64 {
            if p.eval_int(x) == rat_int(0) {
                prop_assert!(roots.contains(&x.into()), "missed root {}", x);
            }
        }
    }

    #[test]
    fn interpolation_recovers_polynomial(p in polys(5)) {
        let points: Vec<(Rat, Rat)> = (0..=p.degree().unwrap_or(0) as i64)
            .map(|x| (rat_int(x), p.eval_int(x)))
            .collect();
        prop_assert_eq!(Poly::interpolate(&points), p);
    }

    // ========================================
    // term grammar
    // ========================================

    #[test]
    fn parse_inverts_pretty(t in terms()) {
        let printed = pretty(&t);
        let reparsed = parse_term(&printed);
        prop_assert!(reparsed.is_ok(), "pretty form {:?} fails to reparse", printed);
        prop_assert_eq!(reparsed.unwrap(), t);
    }

    #[test]
    fn ratio_matches_consecutive_values(t in terms()) {
        let ratio = t.ratio();
        for k in 0..8u64 {
            let here = t.eval(k);
            if here == rat_int(0) {
                continue;
            }
            if let Some(expected) = ratio.eval_int(k as i64) {
                prop_assert_eq!(t.eval(k + 1) / here, expected);
            }
        }
    }
}

proptest! {
    // The summation pipeline runs Gosper end to end, so give it fewer but
    // heavier cases.
    #![proptest_config(ProptestConfig::with_cases(48))]

    // ========================================
    // summation engine
    // ========================================

    #[test]
    fn certificates_are_sound_and_sums_match(t in terms()) {
        if let Some(cert) = antidifference(&t) {
            prop_assert!(verify_certificate(&t.ratio(), &cert));
            prop_assert_eq!(definite_sum(&t, 12).unwrap(), brute_sum(&t, 12));
        }
    }
}
