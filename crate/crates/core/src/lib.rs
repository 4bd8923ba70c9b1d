//! Truncated multiple zeta values, their zeta-star and interpolated variants, and
//! the Stirling and zeta-star series built from them.
//!
//! * [`index`]: index words, star/plain conversion, stuffle products.
//! * [`exact`]: exact rational values and their redundant representations.

pub mod cli;
pub mod closed;
pub mod error;
pub mod exact;
pub mod identities;
pub mod index;
pub mod numeric;

pub use error::{Error, Result};
pub use exact::Rat;
pub use index::{IndexWord, SignedCombo};
