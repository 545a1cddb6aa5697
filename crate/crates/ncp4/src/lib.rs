//! Noncommutative Painleve IV laboratory over truncated matrix series.
//!
//! The crate realizes every object as a power series in a central
//! variable t with d-by-d matrix coefficients, truncated at a chosen
//! order. On that ring it builds Hankel quasideterminants, a Toda
//! lattice, the symmetric Painleve IV flow with its Backlund group, Lax
//! pairs, a word-polynomial Hamiltonian layer, and Hirota-form bilinear
//! identities — each with residual checkers so that every claimed
//! identity is verified numerically (exactly, in rational mode).

pub mod bilinear;
pub mod coeff;
pub mod error;
pub mod ham;
pub mod lax;
pub mod mat;
pub mod painleve;
pub mod qdet;
pub mod report;
pub mod scenario;
pub mod series;
pub mod suites;
pub mod sylvester;
pub mod toda;

pub use coeff::{Coefficient, Rat};
pub use error::{NcError, Result};
pub use mat::Mat;
pub use series::Series;
