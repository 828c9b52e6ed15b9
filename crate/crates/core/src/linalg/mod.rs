//! Exact linear algebra over pluggable scalar domains.

pub mod combo;
pub mod gf2;
mod laurent;
pub mod matrix;
pub mod rep;
pub mod scalar;
pub mod sparse;

pub use combo::LinearCombo;
pub use gf2::{BitVec, Gf2Span};
pub use laurent::Laurent;
pub use matrix::Matrix;
pub use rep::{hom_dim, hom_space, MatrixRep, Quotient};
pub use scalar::{Field, Gf2, GaussianRational, Rational, Ring};
