//! Change-of-basis tables between the power-minus-Bell basis and the
//! telescoping basis, with the closed forms they produce.
//!
//! The matrix `A` (unit diagonal, `A_{dj} = -C(d-1, j)` below it) rewrites
//! the shifted powers `{k^j - b(j)}` into the summable basis polynomials
//! `k^d - (k+1)^(d-1)`; its inverse `B` yields explicit closed forms
//!
//! `sum_{k=0}^{n-1} (k^d - b(d)) / k! = -P_d(n) / n!`,
//!
//! where `P_d(n) = sum_{j>=1} B_{dj} n^j`, plus the cross-multiplied Bell
//! identity relating `b(d)`, the partial sums of `n!/k!`, and `P_d`.  Row
//! and column indices follow the `1..=dmax` convention throughout; only
//! `a121207_table` exposes the zero-based OEIS labeling.

use num_traits::{One, Zero};

use crate::corrections::bell_numbers;
use crate::poly::Poly;
use crate::rational::{binomial_rat, factorial, pow_rat, rat_int, Rat};

/// Lower-triangular matrix with rows `1..=dmax`; row `d` holds columns
/// `1..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerTriangularTable {
    rows: Vec<Vec<Rat>>,
}

impl LowerTriangularTable {
    pub fn dmax(&self) -> usize {
        self.rows.len()
    }

    /// Row `d` (1-based), as the entries for columns `1..=d`.
    pub fn row(&self, d: usize) -> &[Rat] {
        &self.rows[d - 1]
    }

    /// Entry at row `d`, column `j`, both 1-based with `j <= d`.
    pub fn entry(&self, d: usize, j: usize) -> &Rat {
        &self.rows[d - 1][j - 1]
    }

    /// Column `j` read downward from row `j`.
    pub fn column(&self, j: usize) -> Vec<Rat> {
        (j..=self.dmax()).map(|d| self.entry(d, j).clone()).collect()
    }

    /// All rows, for rendering and serialization.
    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }
}

/// The change-of-basis matrix: unit diagonal and `A_{dj} = -C(d-1, j)` for
/// `j < d`.
pub fn build_a(dmax: usize) -> LowerTriangularTable {
    let rows = (1..=dmax)
        .map(|d| {
            (1..=d)
                .map(|j| if j == d { Rat::one() } else { -binomial_rat(d - 1, j) })
                .collect()
        })
        .collect();
    LowerTriangularTable { rows }
}

/// The inverse table, built by its own recurrence
/// `B_{(d+1)j} = sum_{k=j}^{d} C(d, k) B_{kj}` with unit diagonal, then
/// checked: every entry is an integer and `A * B` is exactly the identity.
pub fn build_b(dmax: usize) -> LowerTriangularTable {
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(dmax);
    for d in 1..=dmax {
        let row = (1..=d)
            .map(|j| {
                if j == d {
                    Rat::one()
                } else {
                    (j..d).map(|k| binomial_rat(d - 1, k) * &rows[k - 1][j - 1]).sum()
                }
            })
            .collect();
        rows.push(row);
    }
    let table = LowerTriangularTable { rows };
    let a = build_a(dmax);
    for d in 1..=dmax {
        for j in 1..=d {
            assert!(
                table.entry(d, j).is_integer(),
                "inverse table entry ({d}, {j}) is not an integer"
            );
            let prod: Rat = (j..=d).map(|m| a.entry(d, m) * table.entry(m, j)).sum();
            let expected = if d == j { Rat::one() } else { Rat::zero() };
            assert_eq!(prod, expected, "A * B deviates from the identity at ({d}, {j})");
        }
    }
    table
}

/// Gould numbers `1, 1, 3, 9, 31, 121, ...`: the first column of `B`, for
/// `d = 1..=dmax`.
pub fn gould_numbers(dmax: usize) -> Vec<Rat> {
    build_b(dmax).column(1)
}

/// The OEIS-oriented view of `B`: same rows, with the column index starting
/// at 0, so that column `j` of `B` is diagonal `j - 1` of this table.
pub fn a121207_table(dmax: usize) -> Vec<Vec<Rat>> {
    build_b(dmax).rows().to_vec()
}

/// The polynomial `P_d(n) = sum_{j=1}^{d} B_{dj} n^j` satisfying
/// `sum_{k=0}^{n-1} (k^d - b(d)) / k! = -P_d(n) / n!` for every `n >= 0`;
/// `P_0 = 0`.
pub fn closed_form_power_sum(d: usize) -> Poly {
    if d == 0 {
        return Poly::zero();
    }
    let b = build_b(d);
    let mut coeffs = vec![Rat::zero(); d + 1];
    for j in 1..=d {
        coeffs[j] = b.entry(d, j).clone();
    }
    Poly::new(coeffs)
}

/// Evaluate both sides of the closed form above at one point, term by term
/// on the left.
pub fn power_sum_closed_form_holds(d: usize, n: u64) -> bool {
    let bell_d = bell_numbers(d).values[d].clone();
    let lhs: Rat = (0..n)
        .map(|k| (pow_rat(&rat_int(k as i64), d as i64) - &bell_d) / factorial(k as usize))
        .sum();
    let rhs = -closed_form_power_sum(d).eval_int(n as i64) / factorial(n as usize);
    lhs == rhs
}

/// Check `b(d) * sum_{k<n} n!/k! = sum_{k<n} k^d n!/k! + P_d(n)` exactly;
/// the identity holds for all `n >= 1`, `d >= 0`.
pub fn verify_bell_identity(d: usize, n: u64) -> bool {
    assert!(n >= 1, "the identity is stated for n >= 1");
    let n_us = n as usize;
    // ratios[k] = n!/k!, built downward from n!/n! = 1
    let mut ratios = vec![Rat::one(); n_us + 1];
    for k in (0..n_us).rev() {
        ratios[k] = &ratios[k + 1] * rat_int(k as i64 + 1);
    }
    let bell_d = bell_numbers(d).values[d].clone();
    let lhs: Rat = bell_d * (0..n_us).map(|k| &ratios[k]).sum::<Rat>();
    let power_side: Rat = (0..n_us)
        .map(|k| pow_rat(&rat_int(k as i64), d as i64) * &ratios[k])
        .sum();
    lhs == power_side + closed_form_power_sum(d).eval_int(n as i64)
}
