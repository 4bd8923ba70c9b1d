//! The Stirling series `S(0, ℓ2, r1, r2)`, truncated and in the limit.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, harmonic, inv_pow, sign, zt_trunc, zts_trunc, Rat};
use crate::index::IndexWord;
use crate::numeric::ZetaPoly;

/// The three closed-form pieces of the truncated Stirling series.
#[derive(Clone, Debug, PartialEq)]
pub struct StirlingPieces {
    pub m_sum: Rat,
    pub k: Rat,
    pub e_n: Rat,
}

impl StirlingPieces {
    pub fn total(&self) -> Rat {
        &self.m_sum + &self.k + &self.e_n
    }
}

fn check(r1: u32, r2: u32) -> Result<()> {
    if r1 < 1 || r2 < 1 {
        return Err(Error::Precondition(format!("need r1, r2 >= 1, got r1={r1}, r2={r2}")));
    }
    Ok(())
}

/// `(m, {1}_ℓ)`.
fn head_ones(m: u32, ell: usize) -> IndexWord {
    IndexWord::ones(ell).prepend(m)
}

/// `K(r1, r2, ℓ2)`: `1/r1^{ℓ2+1}` for `r2 = 1`, else `(−1)^{r2+1} ζ*_{r1}({1}_{r2−2}, ℓ2+2)`.
pub fn k_constant(r1: u32, r2: u32, ell2: usize) -> Result<Rat> {
    check(r1, r2)?;
    if r2 == 1 {
        return Ok(inv_pow(r1 as u64, ell2 as u32 + 1));
    }
    let w = IndexWord::ones(r2 as usize - 2).concat(&IndexWord::from_parts_unchecked(vec![ell2 as u32 + 2]));
    Ok(sign(r2 as i64 + 1) * zts_trunc(r1 as u64, &w))
}

/// `ζ_n(w)` extended by `ζ_{-1}(∅) = 1` and `ζ_{-1}(w) = 0` otherwise.
fn zt_signed(n: i64, w: &IndexWord) -> Rat {
    if n >= 0 {
        zt_trunc(n as u64, w)
    } else if w.is_empty() {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// `R_N(ℓ, k0) = Σ_{j=0}^{ℓ} Σ_{k0 ≥ k1 ≥ … ≥ kj ≥ 1} (1/(k1⋯kj)) ζ_{N−1−j}({1}_{ℓ−j}) (H_{N−j} − H_{N−j+kj})`.
///
/// The nested sums are carried as a weight vector over the innermost index `kj`.
pub fn r_nested(n: u64, ell: usize, k0: u64) -> Rat {
    let mut weights = vec![Rat::zero(); k0 as usize + 1];
    weights[k0 as usize] = Rat::one();
    let mut total = Rat::zero();
    for j in 0..=ell {
        if j > 0 {
            // W_j[k] = (1/k) Σ_{k' ≥ k} W_{j−1}[k']
            let mut tail = Rat::zero();
            for k in (1..=k0 as usize).rev() {
                tail += &weights[k];
                weights[k] = &tail / Rat::from_integer(k.into());
            }
        }
        if n < j as u64 {
            break;
        }
        let z = zt_signed(n as i64 - 1 - j as i64, &IndexWord::ones(ell - j));
        if z.is_zero() {
            continue;
        }
        let base = n - j as u64;
        let h = harmonic(base, 1);
        for (kj, w) in weights.iter().enumerate().skip(1) {
            if !w.is_zero() {
                total += w * &z * (&h - harmonic(base + kj as u64, 1));
            }
        }
    }
    total
}

/// `E_N(r1, r2, ℓ2) = (−1)^{r2+1} Σ_{k0=1}^{r1} binom(r1,k0) (−1)^{k0+1}/k0^{r2−1} R_N(ℓ2, k0)`.
pub fn e_n(n: u64, ell2: usize, r1: u32, r2: u32) -> Result<Rat> {
    check(r1, r2)?;
    let mut acc = Rat::zero();
    for k0 in 1..=r1 as u64 {
        let c = Rat::from_integer(binomial(r1 as u64, k0)) * sign(k0 as i64 + 1) * inv_pow(k0, r2 - 1);
        acc += c * r_nested(n, ell2, k0);
    }
    Ok(sign(r2 as i64 + 1) * acc)
}

/// The truncated Stirling series `S_N(0, ℓ2, r1, r2)` assembled from its closed-form
/// pieces, each computed without reference to the literal partial sum.
pub fn stirling_series_trunc_pieces(n: u64, ell2: usize, r1: u32, r2: u32) -> Result<StirlingPieces> {
    check(r1, r2)?;
    if (n as usize) < ell2 {
        return Err(Error::Precondition(format!("need N >= l2, got N={n}, l2={ell2}")));
    }
    let mut m_sum = Rat::zero();
    for m in 2..=r2 {
        let c = zts_trunc(r1 as u64, &IndexWord::ones((r2 - m) as usize));
        m_sum += sign((r2 - m) as i64) * zt_trunc(n, &head_ones(m, ell2)) * c;
    }
    Ok(StirlingPieces { m_sum, k: k_constant(r1, r2, ell2)?, e_n: e_n(n, ell2, r1, r2)? })
}

pub fn stirling_series_trunc(n: u64, ell2: usize, r1: u32, r2: u32) -> Result<Rat> {
    Ok(stirling_series_trunc_pieces(n, ell2, r1, r2)?.total())
}

/// `S(0, ℓ2, r1, r2)` in the limit: the `m`-sum over `ζ(m, {1}_{ℓ2})` with the truncated
/// star factors folded into coefficients, plus `K`.
pub fn stirling_series_closed(ell2: usize, r1: u32, r2: u32) -> Result<ZetaPoly> {
    check(r1, r2)?;
    let mut p = ZetaPoly::constant(k_constant(r1, r2, ell2)?);
    for m in 2..=r2 {
        let c = sign((r2 - m) as i64) * zts_trunc(r1 as u64, &IndexWord::ones((r2 - m) as usize));
        p = p.add(&ZetaPoly::zeta(head_ones(m, ell2)).scale(&c));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, series_partial_sum};

    #[test]
    fn worked_examples() {
        let p = stirling_series_trunc_pieces(2, 0, 1, 1).unwrap();
        assert_eq!(p, StirlingPieces { m_sum: rat(0, 1), k: rat(1, 1), e_n: rat(-1, 3) });
        assert_eq!(p.total(), rat(2, 3));
        assert_eq!(stirling_series_trunc(1, 0, 2, 2).unwrap(), rat(1, 3));
        assert_eq!(k_constant(3, 1, 2).unwrap(), rat(1, 27));
        assert!(stirling_series_trunc(1, 2, 1, 1).is_err());
    }

    #[test]
    fn matches_partial_sums_small_grid() {
        for n in 0..=9u64 {
            for ell2 in 0..=(n.min(3) as usize) {
                for r1 in 1..=3 {
                    for r2 in 1..=3 {
                        assert_eq!(
                            stirling_series_trunc(n, ell2, r1, r2).unwrap(),
                            series_partial_sum(n, 0, ell2, r1, r2),
                            "N={n} l2={ell2} r1={r1} r2={r2}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_shapes() {
        let z = |s: &str| ZetaPoly::zeta(s.parse().unwrap());
        let one = ZetaPoly::constant(rat(1, 1));
        assert_eq!(stirling_series_closed(0, 1, 2).unwrap(), z("2").sub(&one));
        assert_eq!(stirling_series_closed(1, 2, 1).unwrap(), ZetaPoly::constant(rat(1, 4)));
        assert_eq!(stirling_series_closed(0, 1, 3).unwrap(), z("3").sub(&z("2")).add(&one));
    }
}
