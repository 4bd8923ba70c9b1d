//! Series with `r1 = 0` and the first half of the general series through Arakawa–Kaneko values.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, inv_pow, sign, zts_trunc, Rat};
use crate::index::IndexWord;
use crate::numeric::{mzv_numeric, series_s_direct, shifted_pair_numeric, xi_numeric, PrecReal};

/// `ξ_{word}(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiSpec {
    pub word: IndexWord,
    pub s: u32,
}

impl XiSpec {
    /// `ξ_{i, {1}_{l2}}(s)`.
    pub fn head_ones(i: u32, l2: usize, s: u32) -> Self {
        XiSpec { word: IndexWord::ones(l2).prepend(i), s }
    }

    pub fn eval(&self, digits: u32) -> Result<PrecReal> {
        xi_numeric(&self.word, self.s, digits)
    }
}

impl fmt::Display for XiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi_({})({})", self.word, self.s)
    }
}

impl Serialize for XiSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `S(l1, l2, 0, r2) = ξ_{r2−1,{1}_{l2}}(l1+1) − ξ_{r2,{1}_{l2}}(l1)`, both sides evaluated.
#[derive(Clone, Debug, Serialize)]
pub struct ArakawaCheck {
    pub plus: XiSpec,
    pub minus: XiSpec,
    pub xi_value: PrecReal,
    pub direct: PrecReal,
    pub discrepancy: f64,
}

impl ArakawaCheck {
    pub fn agrees_within(&self, tol: f64) -> bool {
        self.discrepancy <= tol
    }
}

pub fn arakawa_relation(l1: usize, l2: usize, r2: u32, digits: u32) -> Result<ArakawaCheck> {
    if r2 < 2 || l1 < 1 {
        return Err(Error::Precondition(format!("need l1 >= 1 and r2 >= 2, got l1={l1}, r2={r2}")));
    }
    let plus = XiSpec::head_ones(r2 - 1, l2, l1 as u32 + 1);
    let minus = XiSpec::head_ones(r2, l2, l1 as u32);
    let xi_value = plus.eval(digits)?.sub(&minus.eval(digits)?);
    let direct = series_s_direct(l1, l2, 0, r2, digits)?;
    let discrepancy = xi_value.distance(&direct);
    Ok(ArakawaCheck { plus, minus, xi_value, direct, discrepancy })
}

/// One summand of `S1`: a difference of two ξ values, or `ζ(m, {1}_{l2})` when `l1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum S1Piece {
    XiDiff { plus: XiSpec, minus: XiSpec },
    Zeta { word: IndexWord },
}

impl S1Piece {
    fn eval(&self, digits: u32) -> Result<PrecReal> {
        match self {
            S1Piece::XiDiff { plus, minus } => Ok(plus.eval(digits)?.sub(&minus.eval(digits)?)),
            S1Piece::Zeta { word } => mzv_numeric(word, digits),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct S1Term {
    #[serde(with = "crate::exact::serde_rat")]
    pub coeff: Rat,
    pub piece: S1Piece,
}

/// `S = S1 + S2` for the general series, with `S1` written over ξ values and `S2` summed directly.
#[derive(Clone, Debug, Serialize)]
pub struct GeneralS1 {
    pub terms: Vec<S1Term>,
    pub s1: PrecReal,
    pub s2: PrecReal,
    pub direct: PrecReal,
    pub discrepancy: f64,
}

/// `S1 = Σ_{m=2}^{r2} (−1)^{r2−m} (ξ_{m−1,{1}_{l2}}(l1+1) − ξ_{m,{1}_{l2}}(l1)) ζ*_{r1}({1}_{r2−m})`
/// and `S2 = (−1)^{r2+1} Σ_k binom(r1,k)(−1)^{k+1} k^{1−r2} Σ_n ζ*_{n−1}({1}_{l1}) ζ_{n−1}({1}_{l2})(1/n − 1/(n+k))`.
pub fn general_s1(l1: usize, l2: usize, r1: u32, r2: u32, digits: u32) -> Result<GeneralS1> {
    if r1 < 1 || r2 < 1 {
        return Err(Error::Precondition(format!("need r1, r2 >= 1, got r1={r1}, r2={r2}")));
    }
    let inner = digits + 2;
    let mut terms = Vec::new();
    let mut s1 = PrecReal::zero(inner);
    for m in 2..=r2 {
        let coeff = sign((r2 - m) as i64) * zts_trunc(r1 as u64, &IndexWord::ones((r2 - m) as usize));
        let piece = if l1 == 0 {
            S1Piece::Zeta { word: IndexWord::ones(l2).prepend(m) }
        } else {
            S1Piece::XiDiff {
                plus: XiSpec::head_ones(m - 1, l2, l1 as u32 + 1),
                minus: XiSpec::head_ones(m, l2, l1 as u32),
            }
        };
        s1 = s1.add(&piece.eval(inner)?.scale(&coeff));
        terms.push(S1Term { coeff, piece });
    }
    let mut s2 = PrecReal::zero(inner);
    for k in 1..=r1 as u64 {
        let c = Rat::from_integer(binomial(r1 as u64, k)) * sign(k as i64 + 1) * inv_pow(k, r2 - 1);
        s2 = s2.add(&shifted_pair_numeric(l1, l2, k, inner)?.scale(&c));
    }
    s2 = s2.scale(&sign(r2 as i64 + 1));
    let direct = series_s_direct(l1, l2, r1, r2, digits)?;
    let discrepancy = s1.add(&s2).distance(&direct);
    Ok(GeneralS1 { terms, s1, s2, direct, discrepancy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::zeta_single;

    #[test]
    fn relation_examples() {
        let c = arakawa_relation(1, 0, 2, 12).unwrap();
        assert_eq!(c.plus.to_string(), "xi_(1)(2)");
        assert_eq!(c.minus.to_string(), "xi_(2)(1)");
        let z3 = zeta_single(3, 12).unwrap();
        assert!(c.direct.distance(&z3) < 1e-10);
        for (l1, l2, r2) in [(1, 1, 2), (2, 0, 3), (2, 1, 2)] {
            let c = arakawa_relation(l1, l2, r2, 10).unwrap();
            assert!(c.agrees_within(1e-8), "({l1},{l2},{r2}): {}", c.discrepancy);
        }
        assert!(arakawa_relation(0, 0, 2, 10).is_err());
        assert!(arakawa_relation(1, 0, 1, 10).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let g = general_s1(1, 1, 1, 2, 10).unwrap();
        assert!(g.discrepancy < 1e-7, "{}", g.discrepancy);
        let g = general_s1(1, 0, 1, 2, 10).unwrap();
        let expect = zeta_single(3, 10).unwrap().sub(&PrecReal::exact(&Rat::from_integer(1.into()), 10));
        assert!(g.s1.add(&g.s2).distance(&expect) < 1e-8);
        let g = general_s1(0, 1, 2, 3, 10).unwrap();
        assert!(matches!(g.terms[0].piece, S1Piece::Zeta { .. }));
        assert!(g.discrepancy < 1e-8);
    }
}
