pub mod cli;
pub mod error;
pub mod graph;
pub mod pfaffian;
pub mod polyhex;
pub mod structure;

pub use error::{Error, Result};
