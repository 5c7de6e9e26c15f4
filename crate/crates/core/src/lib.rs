pub mod cli;
pub mod convolution;
pub mod error;
pub mod evolution;
pub mod functional;
pub mod multivariate;
pub mod oracle;
pub mod random;
pub mod report;
pub mod series;
pub mod transforms;

pub use error::{Error, Result};
