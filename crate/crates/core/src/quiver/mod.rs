//! The straight-line quiver with its quotient path algebra, and the
//! functor comparing its representations with modules at loop value zero.

pub mod checks;
pub mod functor;
pub mod path;
pub mod rep;

pub use functor::AdjacentMaps;
pub use path::{enumerate_path_basis, Arrow, Path, QuiverAlgebra};
pub use rep::QuiverRep;
