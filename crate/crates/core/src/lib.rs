//! Exact counting oracles, counting reductions, and weight-shift pipelines
//! for the multivariate Tutte polynomial.

pub mod error;
pub mod exactmath;
pub mod inflate;
pub mod isetred;
pub mod oracles;
pub mod permred;
pub mod pipelines;
pub mod satchain;
pub mod structures;

pub use error::{Error, Result};
