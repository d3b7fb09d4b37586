pub mod cli;
pub mod e510;
pub mod error;
pub mod json;
pub mod koszul;
pub mod liecore;
pub mod linalg;
pub mod pscohomology;
pub mod repring;
pub mod repseries;

pub use error::{Error, Result};
