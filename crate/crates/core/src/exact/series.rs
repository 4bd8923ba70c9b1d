//! Literal partial sums of the series
//! `S(ℓ1, ℓ2, r1, r2) = Σ_n ζ*_{n-1}({1}_{ℓ1}) ζ_{n-1}({1}_{ℓ2}) / (binom(n+r1, r1) n^{r2})`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::zeta::zt_sequence;
use super::{binomial, Rat};
use crate::index::IndexWord;

/// Summand of `S` at index `n ≥ 1`, given `ζ*_{n-1}({1}_{ℓ1})` and `ζ_{n-1}({1}_{ℓ2})`.
pub fn series_term(n: u64, star: &Rat, plain: &Rat, r1: u32, r2: u32) -> Rat {
    let denom = binomial(n + r1 as u64, r1 as u64) * BigInt::from(n).pow(r2);
    star * plain / Rat::from_integer(denom)
}

/// `S_N(ℓ1, ℓ2, r1, r2)` by direct summation of `N` terms.
pub fn series_partial_sum(n_max: u64, l1: usize, l2: usize, r1: u32, r2: u32) -> Rat {
    let star = zt_sequence(n_max, &IndexWord::ones(l1), true);
    let plain = zt_sequence(n_max, &IndexWord::ones(l2), false);
    (1..=n_max).fold(Rat::zero(), |acc, n| {
        let i = n as usize - 1;
        acc + series_term(n, &star[i], &plain[i], r1, r2)
    })
}
