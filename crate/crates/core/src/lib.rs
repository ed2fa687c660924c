pub mod analysis;
pub mod bipoly;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod families;
pub mod filling;
pub mod geom;
pub mod gf;
pub mod proj;
pub mod search;

pub use error::{Error, Result};
