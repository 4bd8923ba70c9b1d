//! Closed-form evaluations of the Stirling and zeta-star series, the tail series `T*`,
//! the Arakawa–Kaneko relations, and reduction to single zeta values.

mod arakawa;
mod reduce;
mod stirling;
mod zetastar;

use serde::Serialize;

pub use arakawa::{arakawa_relation, general_s1, ArakawaCheck, GeneralS1, S1Piece, S1Term, XiSpec};
pub use reduce::{reduce_to_single, star_three_one, Reduced};
pub use stirling::{
    e_n, k_constant, r_nested, stirling_series_closed, stirling_series_trunc, stirling_series_trunc_pieces,
    StirlingPieces,
};
pub use zetastar::{tstar_closed, zetastar_series_closed, zetastar_series_closed_via, BinomRoute};

use crate::error::Result;
use crate::numeric::{eval_zeta_poly, PrecReal, Symbol, ZetaPoly};

/// A closed form together with its value and its single-zeta reduction.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormOutput {
    pub poly: ZetaPoly,
    pub numeric: PrecReal,
    pub reduced: ZetaPoly,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flagged: Vec<Symbol>,
}

impl ClosedFormOutput {
    pub fn new(poly: ZetaPoly, digits: u32) -> Result<Self> {
        let numeric = eval_zeta_poly(&poly, digits)?;
        let Reduced { poly: reduced, flagged } = reduce_to_single(&poly);
        Ok(ClosedFormOutput { poly, numeric, reduced, flagged })
    }
}
