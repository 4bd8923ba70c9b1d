//! Truncated multiple zeta and zeta-star values.
//!
//! Conventions: `ζ_N(∅) = ζ*_N(∅) = 1` for every `N ≥ 0`, a nonempty word at
//! `N = 0` gives 0, and `ζ_N(w) = 0` whenever `depth(w) > N`.

use num_traits::{One, Zero};

use super::{inv_pow, Rat};
use crate::error::{Error, Result};
use crate::index::IndexWord;

/// Largest `N` accepted by [`zt_trunc_oracle`].
pub const ORACLE_MAX_N: u64 = 14;
/// Largest depth accepted by [`zt_trunc_oracle`].
pub const ORACLE_MAX_DEPTH: usize = 5;

/// `[ζ_0(w), ζ_1(w), …, ζ_N(w)]` (or the star values when `star` is set).
///
/// Runs the depth recursion `ζ_n(i1, rest) = ζ_{n-1}(i1, rest) + ζ_{n-1}(rest)/n^{i1}`
/// (with `ζ_n(rest)` on the right for star values) simultaneously over every suffix.
pub fn zt_sequence(n_max: u64, w: &IndexWord, star: bool) -> Vec<Rat> {
    let parts = w.parts();
    let k = parts.len();
    // suffix[j] = value of the word parts[j..] at the current n; suffix[k] is the empty word
    let mut suffix = vec![Rat::zero(); k + 1];
    suffix[k] = Rat::one();
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(suffix[0].clone());
    for n in 1..=n_max {
        if star {
            for j in (0..k).rev() {
                let add = &suffix[j + 1] * inv_pow(n, parts[j]);
                suffix[j] += add;
            }
        } else {
            for j in 0..k {
                let add = &suffix[j + 1] * inv_pow(n, parts[j]);
                suffix[j] += add;
            }
        }
        out.push(suffix[0].clone());
    }
    out
}

/// Truncated multiple zeta value `ζ_N(w)`.
pub fn zt_trunc(n: u64, w: &IndexWord) -> Rat {
    if w.depth() as u64 > n {
        return Rat::zero();
    }
    zt_sequence(n, w, false).pop().expect("nonempty")
}

/// Truncated multiple zeta star value `ζ*_N(w)`.
pub fn zts_trunc(n: u64, w: &IndexWord) -> Rat {
    zt_sequence(n, w, true).pop().expect("nonempty")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    /// Strictly decreasing summation indices.
    Plain,
    /// Weakly decreasing summation indices.
    Star,
}

/// Literal enumeration of all index tuples; an independent check on [`zt_trunc`] and
/// [`zts_trunc`]. Refuses `N > 14` or depth above 5.
pub fn zt_trunc_oracle(n: u64, w: &IndexWord, mode: OracleMode) -> Result<Rat> {
    if n > ORACLE_MAX_N || w.depth() > ORACLE_MAX_DEPTH {
        return Err(Error::Guard(format!(
            "oracle limited to N <= {ORACLE_MAX_N} and depth <= {ORACLE_MAX_DEPTH}, got N = {n}, depth = {}",
            w.depth()
        )));
    }
    fn go(parts: &[u32], upper: u64, mode: OracleMode, acc: &Rat, total: &mut Rat) {
        let Some((&e, rest)) = parts.split_first() else {
            *total += acc;
            return;
        };
        for m in 1..=upper {
            let next_upper = match mode {
                OracleMode::Plain => m - 1,
                OracleMode::Star => m,
            };
            let term = acc * inv_pow(m, e);
            go(rest, next_upper, mode, &term, total);
        }
    }
    let mut total = Rat::zero();
    go(w.parts(), n, mode, &Rat::one(), &mut total);
    Ok(total)
}
