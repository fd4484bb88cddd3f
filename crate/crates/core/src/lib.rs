//! Exact summation engine: Gosper's algorithm for simple hypergeometric
//! terms, the Bell-number correction constants that make power-times-shell
//! terms telescope, and the change-of-basis tables connecting the two.
//!
//! All arithmetic is exact (big rationals); the crate never touches
//! floating point.

pub mod corrections;
pub mod gosper;
pub mod poly;
pub mod series;
pub mod tables;
pub mod term;
pub mod rational;

pub use corrections::{
    basis_reduction, bell_numbers, correction_constants, egf_f, egf_g, f_correction, g_correction,
    summable_term, CorrectionSequence, Family,
};
pub use gosper::{
    antidifference, antidifference_term, brute_sum, definite_sum, normal_form, verify_certificate,
    Certificate, NormalForm, NotSummable,
};
pub use poly::{Poly, RationalFunction};
pub use tables::{
    a121207_table, build_a, build_b, closed_form_power_sum, gould_numbers,
    power_sum_closed_form_holds, verify_bell_identity, LowerTriangularTable,
};
pub use rational::Rat;
pub use term::{parse_term, ParseError, TermSpec};
