//! Exact-arithmetic toolkit for quadratic extension towers: square-class
//! groups over F2, multiquadratic and finite fields, function-field square
//! classes, Hilbert symbols and embedding predicates, a finite 2-group
//! engine, and a verification harness over concrete field fragments.

pub mod error;
pub mod exactfield;
pub mod funcfield;
pub mod sqclass;
pub mod symbols;
pub mod tower;
pub mod twogroup;

pub use error::{Error, Result};
