//! Exact arithmetic and square detection in the concrete base fields used by
//! the tower harness: Q, multiquadratic extensions Q(sqrt a_1, ..., sqrt a_d)
//! with d <= 3, and odd finite fields F_q with q <= 10^4.

pub mod finite;
pub mod multiquad;
pub mod rational;

pub use finite::{FiniteField, FiniteFieldElement};
pub use multiquad::{MultiquadElement, MultiquadField};
pub use rational::{
    is_square_rational, is_sum_of_two_squares, power2_irreducible, rat, rat_int, rational_text,
    sqrt_rational, squarefree_part, Rational,
};
