//! High-precision numerics: fixed-point arithmetic, single zeta values, limit
//! extrapolation of slowly convergent series and evaluation of zeta polynomials.

pub mod constants;
pub mod extrapolate;
pub mod fixed;
pub mod precreal;
pub mod reductions;
pub mod sums;
pub mod zeta_single;
pub mod zetapoly;

pub use extrapolate::{extrapolate, ExtrapolationConfig, Extrapolated, PartialSums, TermSums};
pub use fixed::{bits_for_digits, Fixed};
pub use precreal::{working_bits, PrecReal};
pub use sums::{mzv_numeric, series_s_direct, shifted_pair_numeric, tstar_numeric, xi_numeric};
pub use zeta_single::zeta_single;
pub use reductions::{granville_star, height_one_mzv, kaneko_sakata};
pub use zetapoly::{eval_zeta_poly, Monomial, Symbol, ZetaPoly};
