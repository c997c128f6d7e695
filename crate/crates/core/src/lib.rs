//! Exact arithmetic for integer partitions counted by the size of their
//! Durfee triangle.
//!
//! The crate builds the generating functions `F_k(q) = phi_k(q) / (q;q)_k`
//! from scratch over `Z[q]`, cross-checks them against brute-force
//! enumeration and an independent convolution, and derives linear
//! recurrences, quasi-polynomial closed forms and congruence data.

pub mod cfinite;
pub mod codec;
pub mod durfee;
pub mod error;
pub mod partitions;
pub mod polyring;
pub mod qseries;

pub use cfinite::{
    extend_sequence, quasipoly_fit, recurrence_from_ratfn, rk_quasipolynomial, rk_sequence, CFiniteRecurrence,
    PeriodReport, QuasiPolynomial, ShiftReport,
};
pub use durfee::{curly_fk_ratfn, dk_ratfn, fk_ratfn, phi_poly, DurfeeGF};
pub use error::{Error, Result};
pub use partitions::{durfee_square_size, durfee_triangle_size, Partition};
pub use polyring::{IntPolynomial, PowerSeries, RationalFunction};
pub use qseries::{alpha_poly, AdResult, AlphaReport};
