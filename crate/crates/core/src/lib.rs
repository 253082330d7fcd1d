pub mod cli;
pub mod cone;
pub mod ehrhart;
pub mod error;
pub mod hypersurface;
pub mod lattice;
pub mod mirror;
pub mod poly;
pub mod poset;
pub mod stanley;

pub use error::{Error, Result};
