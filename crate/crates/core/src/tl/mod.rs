//! Modules over the diagram algebra at loop value zero.

pub mod checks;
pub mod gram;
pub mod maps;
pub mod projective;
pub mod standard;

pub use gram::{gram_matrix, irreducible_dim, pairing};
pub use maps::{alternating_cup_map, append_throughline_map};
pub use projective::ProjectiveModule;
pub use standard::StandardModule;
