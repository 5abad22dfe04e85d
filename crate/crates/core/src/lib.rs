pub mod config;
pub mod dd;
pub mod error;
pub mod figure;
pub mod halfspace;
pub mod lineups;
pub mod lp;
pub mod oracle;
pub mod polytope;
pub mod rational;
pub mod spectrum;
pub mod weights;

pub use error::{Error, Result};
