//! The zeta-star series `S(ℓ1, 0, r1, r2)` and the tail series `T*(ℓ, k)`.

use crate::error::{Error, Result};
use crate::exact::duality::{eval_star_combo, shifted_binom_sum_direct};
use crate::exact::{harmonic, shifted_binom_sum_as_star, sign, zt_trunc, zts_trunc, Rat};
use crate::index::IndexWord;
use crate::numeric::{granville_star, ZetaPoly};

fn two_ones(ell: usize) -> IndexWord {
    IndexWord::ones(ell).prepend(2)
}

/// `ζ*(2, {1}_ℓ)` reduced by Granville's formula to `(ℓ+1) ζ(ℓ+2)`.
fn star_two_ones(ell: usize) -> ZetaPoly {
    granville_star(ell as u32 + 2).expect("ell + 2 >= 2")
}

/// `T*(ℓ, k)`: `H_k` for `ℓ = 0`, otherwise
/// `Σ_{j<ℓ} ζ*(2,{1}_{ℓ−1−j}) ζ_{k−1}({1}_j) + ζ_{k−1}({1}_{ℓ+1}) + ζ_{k−1}({1}_{ℓ−1}, 2)`,
/// with the star values written as single zetas.
pub fn tstar_closed(ell: usize, k: u64) -> Result<ZetaPoly> {
    if k < 1 {
        return Err(Error::Precondition("T* needs k >= 1".into()));
    }
    if ell == 0 {
        return Ok(ZetaPoly::constant(harmonic(k, 1)));
    }
    let mut p = ZetaPoly::constant(
        zt_trunc(k - 1, &IndexWord::ones(ell + 1))
            + zt_trunc(k - 1, &IndexWord::ones(ell - 1).concat(&IndexWord::from_parts_unchecked(vec![2]))),
    );
    for j in 0..ell {
        p = p.add(&star_two_ones(ell - 1 - j).scale(&zt_trunc(k - 1, &IndexWord::ones(j))));
    }
    Ok(p)
}

/// Which evaluation to use for `B(e, a) = Σ_{k=1}^{r1} binom(r1,k)(−1)^{k+1} k^{−e} ζ_{k−1}(a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomRoute {
    /// Conversion to star values followed by Hoffman duality.
    Duality,
    /// Literal summation over `k`.
    Direct,
}

fn binom_sum(route: BinomRoute, r1: u32, e: u32, a: &IndexWord) -> Result<Rat> {
    match route {
        BinomRoute::Duality => Ok(eval_star_combo(r1 as u64, &shifted_binom_sum_as_star(r1 as u64, e, a)?)),
        BinomRoute::Direct => shifted_binom_sum_direct(r1 as u64, e, a),
    }
}

/// `Σ_k binom(r1,k)(−1)^{k+1} k^{−e} T*(ℓ, k)`.
fn tstar_binom(route: BinomRoute, ell: usize, r1: u32, e: u32) -> Result<ZetaPoly> {
    if ell == 0 {
        // H_k = ζ_{k−1}(1) + 1/k
        let v = binom_sum(route, r1, e, &IndexWord::ones(1))? + binom_sum(route, r1, e + 1, &IndexWord::empty())?;
        return Ok(ZetaPoly::constant(v));
    }
    let tail = IndexWord::ones(ell - 1).concat(&IndexWord::from_parts_unchecked(vec![2]));
    let mut p = ZetaPoly::constant(
        binom_sum(route, r1, e, &IndexWord::ones(ell + 1))? + binom_sum(route, r1, e, &tail)?,
    );
    for j in 0..ell {
        let c = binom_sum(route, r1, e, &IndexWord::ones(j))?;
        p = p.add(&ZetaPoly::zeta_star(two_ones(ell - 1 - j)).scale(&c));
    }
    Ok(p)
}

/// `S(ℓ1, 0, r1, r2) = Σ_n ζ*_{n−1}({1}_{ℓ1}) / (binom(n+r1, r1) n^{r2})` in closed form.
///
/// The binomial sums over `ζ_{k−1}(…)` coming from `T*` are evaluated through duality.
/// Star symbols `ζ*(m, {1}_ℓ)` are kept; see [`super::reduce_to_single`].
pub fn zetastar_series_closed(ell1: usize, r1: u32, r2: u32) -> Result<ZetaPoly> {
    zetastar_series_closed_via(BinomRoute::Duality, ell1, r1, r2)
}

pub fn zetastar_series_closed_via(route: BinomRoute, ell1: usize, r1: u32, r2: u32) -> Result<ZetaPoly> {
    if r1 < 1 || r2 < 1 {
        return Err(Error::Precondition(format!("need r1, r2 >= 1, got r1={r1}, r2={r2}")));
    }
    let c = |j: u32| zts_trunc(r1 as u64, &IndexWord::ones(j as usize));
    let e = r2 - 1;
    let outer = sign(r2 as i64 + 1);
    let mut p = ZetaPoly::zero();
    for m in 2..=r2 {
        let coeff = sign((r2 - m) as i64) * c(r2 - m);
        let term = if ell1 == 0 {
            ZetaPoly::zeta(IndexWord::from_parts_unchecked(vec![m]))
        } else {
            ZetaPoly::zeta_star(IndexWord::ones(ell1).prepend(m))
                .sub(&ZetaPoly::zeta_star(IndexWord::ones(ell1 - 1).prepend(m + 1)))
        };
        p = p.add(&term.scale(&coeff));
    }
    if ell1 == 0 {
        return Ok(p.add(&tstar_binom(route, 0, r1, e)?.scale(&outer)));
    }
    let bracket = tstar_binom(route, ell1, r1, e)?.add(&tstar_binom(route, ell1 - 1, r1, e + 1)?);
    p = p.add(&bracket.scale(&outer));
    let last = ZetaPoly::zeta_star(two_ones(ell1 - 1)).scale(&(sign(r2 as i64) * c(r2 - 1)));
    Ok(p.add(&last))
}
