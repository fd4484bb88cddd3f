//! Identity catalog and rendering helpers behind the `bellsum` binary.
//!
//! The catalog bundles every displayed identity the engine is expected to
//! reproduce: the shifted-power sums over `1/k!`, the `2^k` and `(-2)^k`
//! closed forms, the correction-constant sequences with their three-route
//! agreement, the generating-function convolutions, and the change-of-basis
//! tables with the closed forms and the Bell partial-sum identity they
//! imply.  Every check compares exact rationals; there are no tolerances.

use bellsum_core::corrections::{
    basis_reduction, bell_numbers, egf_f, egf_g, egf_values, f_correction, g_correction,
    recurrence_values, Family,
};
use bellsum_core::gosper::{antidifference, brute_sum, definite_sum};
use bellsum_core::poly::Poly;
use bellsum_core::rational::{binomial_rat, factorial, pow_rat, rat, rat_int, Rat};
use bellsum_core::series::{bell_series, exp_cx, PowerSeries};
use bellsum_core::tables::{
    build_a, build_b, closed_form_power_sum, gould_numbers, power_sum_closed_form_holds,
    verify_bell_identity,
};
use bellsum_core::term::parse_term;

/// Outcome of one identity check: machine-comparable verdict plus rendered
/// left- and right-hand values for reporting.
pub struct CheckResult {
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

/// A named identity check; `run` is pure and cheap enough to call eagerly.
pub struct IdentityCheck {
    pub id: &'static str,
    pub run: Box<dyn Fn() -> CheckResult>,
}

fn check(id: &'static str, run: impl Fn() -> CheckResult + 'static) -> IdentityCheck {
    IdentityCheck { id, run: Box::new(run) }
}

/// Render a rational list as `[a, b, c]`.
pub fn rat_list(values: &[Rat]) -> String {
    let items: Vec<String> = values.iter().map(Rat::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// Ascending coefficient strings of a polynomial, the wire format for JSON
/// output.
pub fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(Rat::to_string).collect()
}

/// Check `sum_{k=0}^{n} term = closed(n)` for every `n <= nmax`, with the
/// term-by-term sum as a second witness.
fn sum_matches_closed_form(
    term_src: &str,
    nmax: u64,
    closed: impl Fn(u64) -> Rat,
) -> CheckResult {
    let t = parse_term(term_src).expect("catalog term parses");
    let mut pass = true;
    for n in 0..=nmax {
        let want = closed(n);
        match definite_sum(&t, n) {
            Ok(got) => {
                if got != want || got != brute_sum(&t, n) {
                    pass = false;
                    break;
                }
            }
            Err(_) => {
                pass = false;
                break;
            }
        }
    }
    let lhs = definite_sum(&t, nmax)
        .map(|v| v.to_string())
        .unwrap_or_else(|e| e.to_string());
    CheckResult { pass, lhs, rhs: closed(nmax).to_string() }
}

fn sequences_match(actual: Vec<Rat>, expected: Vec<Rat>) -> CheckResult {
    CheckResult {
        pass: actual == expected,
        lhs: rat_list(&actual),
        rhs: rat_list(&expected),
    }
}

fn egf_digest(series: &PowerSeries, upto: usize) -> String {
    let values: Vec<Rat> = (0..=upto).map(|d| series.egf_coeff(d)).collect();
    rat_list(&values)
}

/// The full identity catalog run by `bellsum verify-paper`.
pub fn catalog() -> Vec<IdentityCheck> {
    vec![
        check("intro-sum-degree-1", || {
            sum_matches_closed_form("(k-1)/fact(k)", 25, |n| -factorial(n as usize).recip())
        }),
        check("intro-sum-degree-2", || {
            sum_matches_closed_form("(k^2-2)/fact(k)", 25, |n| {
                -(rat_int(n as i64 + 2)) / factorial(n as usize)
            })
        }),
        check("intro-sum-degree-3", || {
            sum_matches_closed_form("(k^3-5)/fact(k)", 25, |n| {
                let m = rat_int(n as i64);
                -(&m * &m + rat_int(3) * &m + rat_int(5)) / factorial(n as usize)
            })
        }),
        check("intro-sum-degree-4", || {
            sum_matches_closed_form("(k^4-15)/fact(k)", 25, |n| {
                let m = rat_int(n as i64);
                let poly = pow_rat(&m, 3) + rat_int(4) * &m * &m + rat_int(9) * &m + rat_int(15);
                -poly / factorial(n as usize)
            })
        }),
        check("telescoping-multiplier", || {
            let t = parse_term("(k-1)/fact(k)").unwrap();
            let cert = antidifference(&t).expect("summable");
            CheckResult {
                pass: cert.multiplier.numer() == &Poly::new(vec![rat_int(0), rat_int(-1)])
                    && cert.multiplier.denom() == &Poly::new(vec![rat_int(-1), rat_int(1)]),
                lhs: format!("{}", cert.multiplier),
                rhs: "-k/(k - 1)".to_string(),
            }
        }),
        check("inverse-factorial-rejected", || {
            let t = parse_term("1/fact(k)").unwrap();
            let verdict = antidifference(&t).is_none();
            CheckResult {
                pass: verdict,
                lhs: if verdict { "no antidifference" } else { "antidifference found" }.to_string(),
                rhs: "no antidifference".to_string(),
            }
        }),
        check("bell-prefix", || {
            sequences_match(
                bell_numbers(4).values,
                [1, 1, 2, 5, 15].map(rat_int).to_vec(),
            )
        }),
        check("bell-route-agreement", || {
            let rec = recurrence_values(&Family::Bell, 15);
            let egf = egf_values(&Family::Bell, 15);
            let basis = basis_reduction(&Family::Bell, 15).values;
            CheckResult {
                pass: rec == egf && rec == basis,
                lhs: rat_list(&rec[..=8]),
                rhs: rat_list(&egf[..=8]),
            }
        }),
        check("doubled-base-constants", || {
            sequences_match(
                f_correction(rat_int(1), rat_int(2), 4).unwrap().values,
                [1, 2, 6, 22, 94].map(rat_int).to_vec(),
            )
        }),
        check("doubled-base-sum-degree-1", || {
            sum_matches_closed_form("(k-2)*pow(2,k)/fact(k)", 25, |n| {
                -pow_rat(&rat_int(2), n as i64 + 1) / factorial(n as usize)
            })
        }),
        check("doubled-base-sum-degree-2", || {
            sum_matches_closed_form("(k^2-6)*pow(2,k)/fact(k)", 25, |n| {
                -rat_int(n as i64 + 3) * pow_rat(&rat_int(2), n as i64 + 1)
                    / factorial(n as usize)
            })
        }),
        check("doubled-base-sum-degree-3", || {
            sum_matches_closed_form("(k^3-22)*pow(2,k)/fact(k)", 25, |n| {
                let m = rat_int(n as i64);
                -(&m * &m + rat_int(4) * &m + rat_int(11))
                    * pow_rat(&rat_int(2), n as i64 + 1)
                    / factorial(n as usize)
            })
        }),
        check("doubled-base-sum-degree-4", || {
            sum_matches_closed_form("(k^4-94)*pow(2,k)/fact(k)", 25, |n| {
                let m = rat_int(n as i64);
                let poly = pow_rat(&m, 3) + rat_int(5) * &m * &m + rat_int(17) * &m + rat_int(47);
                -poly * pow_rat(&rat_int(2), n as i64 + 1) / factorial(n as usize)
            })
        }),
        check("alternating-factorial-sum", || {
            sum_matches_closed_form("(k^2-11)*fact(k)/pow(-2,k)", 20, |n| {
                rat_int(n as i64 - 3) * factorial(n as usize + 1)
                    / pow_rat(&rat_int(-2), n as i64)
                    - rat_int(8)
            })
        }),
        check("half-parameter-constants", || {
            // values[d] = sum_j C(d,j) b(j) / 2^(d-j)
            let seq = f_correction(rat(1, 2), rat_int(1), 6).unwrap().values;
            let bells = bell_numbers(6).values;
            let direct: Vec<Rat> = (0..=6)
                .map(|d| {
                    (0..=d)
                        .map(|j| {
                            binomial_rat(d, j) * &bells[j]
                                / pow_rat(&rat_int(2), (d - j) as i64)
                        })
                        .sum()
                })
                .collect();
            let anchors = seq[1] == rat(3, 2) && seq[2] == rat(13, 4);
            CheckResult {
                pass: anchors && seq == direct,
                lhs: rat_list(&seq),
                rhs: rat_list(&direct),
            }
        }),
        check("negated-base-constants", || {
            // values[d] = (-1)^d b(d+1)
            let seq = g_correction(rat_int(1), rat_int(-1), 8).unwrap().values;
            let bells = bell_numbers(9).values;
            let direct: Vec<Rat> = (0..=8)
                .map(|d| {
                    let sign = if d % 2 == 0 { rat_int(1) } else { rat_int(-1) };
                    sign * &bells[d + 1]
                })
                .collect();
            sequences_match(seq, direct)
        }),
        check("bell-convolution-constants", || {
            // values[d] = (-1)^d sum_j C(d,j) b(j+1) b(d-j), with values[2] = 11
            let seq = g_correction(rat_int(1), rat(-1, 2), 6).unwrap().values;
            let bells = bell_numbers(7).values;
            let direct: Vec<Rat> = (0..=6)
                .map(|d| {
                    let sign = if d % 2 == 0 { rat_int(1) } else { rat_int(-1) };
                    let conv: Rat = (0..=d)
                        .map(|j| binomial_rat(d, j) * &bells[j + 1] * &bells[d - j])
                        .sum();
                    sign * conv
                })
                .collect();
            CheckResult {
                pass: seq[2] == rat_int(11) && seq == direct,
                lhs: rat_list(&seq),
                rhs: rat_list(&direct),
            }
        }),
        check("f-generating-function-convolution", || {
            // f_{a,z}(x) = e^{(1-a)x} B(x)^z
            let order = 15;
            let mut pass = true;
            let mut last = (String::new(), String::new());
            for z in [1i64, 2, 3] {
                for a in [rat_int(1), rat(1, 2), rat_int(2)] {
                    let lhs = egf_f(&a, &rat_int(z), order).unwrap();
                    let rhs = exp_cx(&(rat_int(1) - &a), order)
                        .mul(&bell_series(order).pow(z));
                    pass &= lhs == rhs;
                    last = (egf_digest(&lhs, 6), egf_digest(&rhs, 6));
                }
            }
            CheckResult { pass, lhs: last.0, rhs: last.1 }
        }),
        check("g-generating-function-convolution", || {
            // g_{a,1/z}(x) = e^{-ax} B(-x)^{-z}
            let order = 15;
            let mut pass = true;
            let mut last = (String::new(), String::new());
            for z in [-1i64, -2] {
                for a in [rat_int(1), rat(1, 2), rat_int(2)] {
                    let lhs = egf_g(&a, &(rat_int(1) / rat_int(z)), order).unwrap();
                    let rhs = exp_cx(&-a.clone(), order)
                        .mul(&bell_series(order).compose_neg().pow(-z));
                    pass &= lhs == rhs;
                    last = (egf_digest(&lhs, 6), egf_digest(&rhs, 6));
                }
            }
            CheckResult { pass, lhs: last.0, rhs: last.1 }
        }),
        check("basis-change-matrix-rows", || {
            let a = build_a(4);
            let expected = vec![
                vec![rat_int(1)],
                vec![rat_int(-1), rat_int(1)],
                vec![rat_int(-2), rat_int(-1), rat_int(1)],
                vec![rat_int(-3), rat_int(-3), rat_int(-1), rat_int(1)],
            ];
            CheckResult {
                pass: a.rows() == expected.as_slice(),
                lhs: format!("{:?}", a.rows().iter().map(|r| rat_list(r)).collect::<Vec<_>>()),
                rhs: format!("{:?}", expected.iter().map(|r| rat_list(r)).collect::<Vec<_>>()),
            }
        }),
        check("inverse-matrix-rows", || {
            let b = build_b(5);
            let expected: Vec<Vec<Rat>> = vec![
                vec![1].into_iter().map(rat_int).collect(),
                vec![1, 1].into_iter().map(rat_int).collect(),
                vec![3, 1, 1].into_iter().map(rat_int).collect(),
                vec![9, 4, 1, 1].into_iter().map(rat_int).collect(),
                vec![31, 14, 5, 1, 1].into_iter().map(rat_int).collect(),
            ];
            CheckResult {
                pass: b.rows() == expected.as_slice(),
                lhs: format!("{:?}", b.rows().iter().map(|r| rat_list(r)).collect::<Vec<_>>()),
                rhs: format!("{:?}", expected.iter().map(|r| rat_list(r)).collect::<Vec<_>>()),
            }
        }),
        check("matrix-product-identity", || {
            let dmax = 20;
            let a = build_a(dmax);
            let b = build_b(dmax);
            let mut pass = true;
            for d in 1..=dmax {
                for j in 1..=d {
                    let prod: Rat = (j..=d).map(|m| a.entry(d, m) * b.entry(m, j)).sum();
                    let expected = if d == j { rat_int(1) } else { rat_int(0) };
                    pass &= prod == expected;
                }
            }
            CheckResult {
                pass,
                lhs: format!("A*B through dmax = {dmax}"),
                rhs: "identity".to_string(),
            }
        }),
        check("gould-column", || {
            sequences_match(
                gould_numbers(8),
                [1, 1, 3, 9, 31, 121, 523, 2469].map(rat_int).to_vec(),
            )
        }),
        check("power-sum-closed-forms", || {
            let mut pass = true;
            for d in 0..=10 {
                for n in 0..=25 {
                    pass &= power_sum_closed_form_holds(d, n);
                }
            }
            CheckResult {
                pass,
                lhs: format!("P_3 = {}", closed_form_power_sum(3).to_string_with("n")),
                rhs: "n^3 + n^2 + 3*n".to_string(),
            }
        }),
        check("bell-partial-sum-identity", || {
            let mut pass = true;
            for d in 0..=8 {
                for n in 1..=10 {
                    pass &= verify_bell_identity(d, n);
                }
            }
            CheckResult {
                pass,
                lhs: "identity over d <= 8, n <= 10".to_string(),
                rhs: "exact equality".to_string(),
            }
        }),
        check("basis-bridge", || {
            // rows of A map {k^j - b(j)} onto the summable basis polynomials
            let dmax = 12;
            let a = build_a(dmax);
            let bells = bell_numbers(dmax).values;
            let mut pass = true;
            let mut last = (String::new(), String::new());
            for d in 1..=dmax {
                let mut acc = Poly::zero();
                for j in 1..=d {
                    let shifted =
                        &Poly::monomial(rat_int(1), j) - &Poly::constant(bells[j].clone());
                    acc = &acc + &shifted.scale(a.entry(d, j));
                }
                let expected = Family::Bell.basis_poly(d - 1);
                pass &= acc == expected;
                last = (acc.to_string_with("k"), expected.to_string_with("k"));
            }
            CheckResult { pass, lhs: last.0, rhs: last.1 }
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    // ========================================
    // catalog health
    // ========================================

    #[test]
    fn catalog_has_at_least_twenty_identities() {
        assert!(catalog().len() >= 20, "catalog shrank below the contract");
    }

    #[test]
    fn catalog_ids_are_unique() {
        let mut ids: Vec<&str> = catalog().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
    }

    #[test]
    fn every_identity_passes() {
        for item in catalog() {
            let result = (item.run)();
            assert!(
                result.pass,
                "identity {} failed: lhs = {}, rhs = {}",
                item.id, result.lhs, result.rhs
            );
        }
    }
}
