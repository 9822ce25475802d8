//! Exact verification toolkit for the real subalgebras of su(2,1).
//!
//! All arithmetic is carried out in ℚ(ζ₈) (see [`field`]), so every witness
//! equation, span comparison and signature computation is decided exactly.

pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod exec;
pub mod field;
pub mod invariants;
pub mod liealg;
pub mod linalg;
pub mod verifier;

pub use error::{Error, Result};
pub use exec::Execution;
pub use field::{FieldElement, Rational, Sign};
pub use linalg::Matrix3;
