//! Exact character tables of the rook monoid `R_n`, the symplectic Renner monoid
//! `RSp_2n` and their generic Hecke algebras.
//!
//! The ordinary tables come from the decomposition `M = A·Y = Y·B`; the Hecke tables
//! from `M_q = Y_q·B`. Every value is exact: integers, rationals, or rational functions
//! of `q`.

pub mod error;
pub mod group_tables;
pub mod hecke;
pub mod io;
pub mod matrix;
pub mod monoid;
pub mod partition;
pub mod qpoly;
pub mod solomon;

pub use error::{Error, Result};
