pub mod arithmetic;
pub mod certificate;
pub mod cli;
pub mod coverage;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod oracle;
pub mod product;
pub mod translation;

pub use error::{Error, Result};
