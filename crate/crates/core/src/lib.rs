pub mod center;
pub mod cli;
pub mod error;
pub mod freealg;
pub mod geometry;
pub mod graded;
pub mod linalg;
pub mod presentations;
pub mod scalars;
pub mod selftest;
pub mod symmetry;

pub use error::{Error, Result};
