//! Braids acting through the Hecke algebra on generic standard modules,
//! and the Jones polynomial of their closures.

pub mod braid;
pub mod checks;
pub mod jones;

pub use braid::BraidWord;
pub use jones::{braid_matrix, character, jones_polynomial, HeckeFamily, HeckeRep, JonesResult};
