//! Exact rational computation of truncated multiple zeta, zeta-star and interpolated
//! values, together with the redundant representations (Stirling numbers, Bell and
//! MacDonald polynomials, Hessenberg determinants, binomial sums) that cross-check them.

pub mod combinatorics;
pub mod duality;
pub mod harmonic;
pub mod hessenberg;
pub mod interp;
pub mod ring;
pub mod series;
pub mod symmetric;
pub mod zeta;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use combinatorics::{binomial, factorial, stirling_first, FactorialTable, StirlingTriangle};
pub use duality::{alt_binom_star, duality_image, shifted_binom_sum_as_star, StarCombo};
pub use harmonic::{harmonic, harmonic_column, HarmonicTable};
pub use hessenberg::{hessenberg_det, hessenberg_expand, plain_ones_superdiag, star_ones_superdiag};
pub use interp::{interp_at, interp_trunc};
pub use series::series_partial_sum;
pub use ring::{QuadExt, Ring, TPoly};
pub use symmetric::{complete_bell, macdonald_p, macdonald_q};
pub use zeta::{zt_sequence, zt_trunc, zt_trunc_oracle, zts_trunc, OracleMode};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rat = BigRational;

/// `p/q` as a reduced rational. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// `1/n^s`.
pub fn inv_pow(n: u64, s: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::from(n).pow(s))
}

/// `(-1)^e` as a rational.
pub(crate) fn sign(e: i64) -> Rat {
    if e.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Renders `p/q`, or `p` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p` (optionally signed).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Best-effort `f64` view of a rational, for diagnostics only.
pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // scale both down to keep the quotient in range
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
    let n = (r.numer().abs() >> shift).to_f64().unwrap_or(f64::INFINITY);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::INFINITY);
    let v = n / d;
    if r.is_negative() {
        -v
    } else {
        v
    }
}

pub(crate) mod serde_rat {
    use super::{format_rat, Rat};

    pub fn serialize<S: serde::Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_form() {
        assert_eq!(format_rat(&rat(35, 24)), "35/24");
        assert_eq!(format_rat(&rat(4, 2)), "2");
        assert_eq!(format_rat(&rat(-1, 3)), "-1/3");
        assert_eq!(parse_rat("35/24").unwrap(), rat(35, 24));
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
    }

    #[test]
    fn rat_to_f64_handles_huge_parts() {
        let big = Rat::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(400) * 4);
        assert!((rat_to_f64(&big) - 0.75).abs() < 1e-15);
    }
}
