//! The dual side: the Borel subalgebra as a series algebra, the RLL
//! relations, the functional ansatz solving them, and the deformed coproducts.

pub mod ansatz;
pub mod coproduct;
pub mod rll;
pub mod series;

pub use series::{BorelSeries, Mono};

/// Default truncation order on the weight `ε + 2n`.
pub const DEFAULT_TRUNCATION: u32 = 16;
