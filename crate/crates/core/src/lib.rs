pub mod bij;
pub mod convert;
pub mod counting;
pub mod error;
pub mod paths;
pub mod perm;
pub mod polyomino;
pub mod render;
pub mod verify;

pub use error::{AtlasError, Result};
pub use perm::Permutation;

/// Version tag written at the top level of every JSON document.
pub const SCHEMA: &str = "bijection-atlas/1";
