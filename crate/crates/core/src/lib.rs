//! Exact Groebner-basis engine and the chart ideals of splitting models for
//! ramified unitary groups of signature (n-1, 1), together with the checks
//! that certify their flatness, special fibers and blow-ups.

pub mod chart;
pub mod error;
pub mod ideal;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
