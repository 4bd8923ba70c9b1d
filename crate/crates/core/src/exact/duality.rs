//! Alternating binomial sums of truncated star values and Hoffman's duality.

use num_traits::{One, Zero};

use super::combinatorics::FactorialTable;
use super::zeta::{zt_sequence, zts_trunc};
use super::{inv_pow, sign, Rat};
use crate::error::{Error, Result};
use crate::index::{plain_from_star, IndexWord};

/// `A*_N(a_1, …, a_r) = Σ_{n=1..N} binom(N,n) (-1)^{n-1} n^{-a_1} ζ*_n(a_2, …, a_r)`.
pub fn alt_binom_star(n: u64, w: &IndexWord) -> Result<Rat> {
    let a1 = w.first().ok_or(Error::EmptyWord)?;
    alt_binom_star_exp(n, a1, &w.tail())
}

/// `Σ_{k=1..N} binom(N,k) (-1)^{k-1} k^{-e} ζ*_k(rest)`; `e = 0` is allowed.
fn alt_binom_star_exp(n: u64, e: u32, rest: &IndexWord) -> Result<Rat> {
    let facts = FactorialTable::up_to(n as usize)?;
    let seq = zt_sequence(n, rest, true);
    let mut total = Rat::zero();
    for k in 1..=n {
        let c = Rat::from_integer(facts.binomial(n as usize, k as usize)) * sign(k as i64 - 1);
        total += c * inv_pow(k, e) * &seq[k as usize];
    }
    Ok(total)
}

/// Splits a nonempty word into duality blocks `(a_i, b_i)`: the word is
/// `(a_1, {1}_{b_1-1}, a_2+1, {1}_{b_2-1}, …, a_r+1, {1}_{b_r-1})`.
pub fn duality_blocks(w: &IndexWord) -> Result<Vec<(u32, u32)>> {
    let parts = w.parts();
    let (&first, rest) = parts.split_first().ok_or(Error::EmptyWord)?;
    let mut blocks = vec![(first, 1u32)];
    for &p in rest {
        if p == 1 {
            blocks.last_mut().expect("nonempty").1 += 1;
        } else {
            blocks.push((p - 1, 1));
        }
    }
    Ok(blocks)
}

/// Inverse of [`duality_blocks`].
pub fn word_from_blocks(blocks: &[(u32, u32)]) -> IndexWord {
    let mut parts = Vec::new();
    for (i, &(a, b)) in blocks.iter().enumerate() {
        parts.push(if i == 0 { a } else { a + 1 });
        parts.extend(std::iter::repeat_n(1, b as usize - 1));
    }
    IndexWord::from_parts_unchecked(parts)
}

/// The star word `v` with `A*_N(w) = ζ*_N(v)` for all `N`:
/// `v = (∪_{i<r} {{1}_{a_i-1}, b_i+1}, {1}_{a_r-1}, b_r)`.
pub fn duality_image(w: &IndexWord) -> Result<IndexWord> {
    let blocks = duality_blocks(w)?;
    let r = blocks.len();
    let mut parts = Vec::new();
    for (i, &(a, b)) in blocks.iter().enumerate() {
        parts.extend(std::iter::repeat_n(1, a as usize - 1));
        parts.push(if i + 1 < r { b + 1 } else { b });
    }
    Ok(IndexWord::from_parts_unchecked(parts))
}

/// A rational combination `Σ c_j ζ*_N(v_j)` of truncated star values at a fixed `N`.
pub type StarCombo = Vec<(Rat, IndexWord)>;

pub fn eval_star_combo(n: u64, combo: &StarCombo) -> Rat {
    combo
        .iter()
        .fold(Rat::zero(), |acc, (c, v)| acc + c * zts_trunc(n, v))
}

/// `G_N(c) = Σ_k binom(N,k)(-1)^{k-1} ζ*_k(c)` as star values at `N`.
///
/// `G_N(∅) = 1`, `G_N(1, rest) = G_N(rest)/N`, and `G_N(c_1, rest) = A*_N(c_1-1, rest)/N`
/// for `c_1 ≥ 2`, which duality turns into a single star value.
fn g_as_star(n: u64, c: &IndexWord, scale: Rat, out: &mut StarCombo) -> Result<()> {
    match c.first() {
        None => out.push((scale, IndexWord::empty())),
        Some(1) => g_as_star(n, &c.tail(), scale * inv_pow(n, 1), out)?,
        Some(c1) => {
            let w = c.tail().prepend(c1 - 1);
            out.push((scale * inv_pow(n, 1), duality_image(&w)?));
        }
    }
    Ok(())
}

/// `Σ_k binom(N,k)(-1)^{k-1} k^{-e} ζ*_k(c)` as star values at `N`.
fn binom_star_as_star(n: u64, e: u32, c: &IndexWord, scale: Rat, out: &mut StarCombo) -> Result<()> {
    if e == 0 {
        g_as_star(n, c, scale, out)
    } else {
        out.push((scale, duality_image(&c.prepend(e))?));
        Ok(())
    }
}

/// The finite sum `Σ_{k=1..N} binom(N,k)(-1)^{k-1} k^{-e} ζ_{k-1}(a)` rewritten as a
/// combination of truncated star values at `N`.
///
/// Steps: `ζ_{k-1}(a)` becomes signed star values by the conversion formula, each
/// `ζ*_{k-1}(c) = ζ*_k(c) - ζ*_k(c_2, …)/k^{c_1}`, and each resulting binomial sum is a
/// single star value by duality.
pub fn shifted_binom_sum_as_star(n: u64, e: u32, a: &IndexWord) -> Result<StarCombo> {
    let mut out = StarCombo::new();
    if n == 0 {
        return Ok(out);
    }
    if a.is_empty() {
        binom_star_as_star(n, e, a, Rat::one(), &mut out)?;
        return Ok(out);
    }
    for (c, s) in plain_from_star(a)?.iter() {
        let s = Rat::from_integer(s.into());
        binom_star_as_star(n, e, c, s.clone(), &mut out)?;
        let c1 = c.first().expect("nonempty");
        binom_star_as_star(n, e + c1, &c.tail(), -s, &mut out)?;
    }
    Ok(merge(out))
}

fn merge(combo: StarCombo) -> StarCombo {
    let mut map: std::collections::BTreeMap<IndexWord, Rat> = Default::default();
    for (c, v) in combo {
        *map.entry(v).or_insert_with(Rat::zero) += c;
    }
    map.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(v, c)| (c, v))
        .collect()
}

/// Direct evaluation of `Σ_{k=1..N} binom(N,k)(-1)^{k-1} k^{-e} ζ_{k-1}(a)`.
pub fn shifted_binom_sum_direct(n: u64, e: u32, a: &IndexWord) -> Result<Rat> {
    let facts = FactorialTable::up_to(n as usize)?;
    let seq = zt_sequence(n, a, false);
    let mut total = Rat::zero();
    for k in 1..=n {
        let c = Rat::from_integer(facts.binomial(n as usize, k as usize)) * sign(k as i64 - 1);
        total += c * inv_pow(k, e) * &seq[k as usize - 1];
    }
    Ok(total)
}

/// `Σ_k binom(N,k)(-1)^{k-1} ζ*_k(c)` by direct summation (used to check `g_as_star`).
pub fn alt_binom_star_unweighted(n: u64, c: &IndexWord) -> Result<Rat> {
    alt_binom_star_exp(n, 0, c)
}
