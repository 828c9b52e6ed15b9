//! Two-row Specht modules over GF(2) inside the squarefree quotient of the
//! polynomial ring, compared with the standard modules.

pub mod checks;
pub mod poly;
pub mod resolve;
pub mod tableau;

pub use poly::MultilinearPoly;
pub use resolve::{g_map, resolve, resolve_to_noncrossing, ChordDiagram, Resolution};
pub use tableau::TwoRowTableau;
