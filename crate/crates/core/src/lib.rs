pub mod campaign;
pub mod diagram;
pub mod error;
pub mod hecke;
pub mod hw;
pub mod linalg;
pub mod quiver;
pub mod report;
pub mod specht;
pub mod tl;

pub use error::{Error, Result};
