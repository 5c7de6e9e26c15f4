//! Truncated formal power series over exact coefficient rings.

pub mod coeff;
pub mod laurent;
pub mod trunc;

pub use coeff::{int, rat, Coeff, Poly, Rational};
pub use laurent::InfLaurent;
pub use trunc::Series;
