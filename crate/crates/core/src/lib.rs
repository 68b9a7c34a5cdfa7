//! Zeta functions, normalized weight enumerators and rank-generating
//! polynomials for linear codes over small finite fields, computed in exact
//! rational arithmetic.

pub mod bounds;
pub mod cli;
pub mod code;
pub mod zeta;
pub mod enumerator;
pub mod error;
pub mod exactmath;
pub mod extremal;
pub mod fixtures;
pub mod gf;
pub mod matroid;

pub use error::{Error, Result};
