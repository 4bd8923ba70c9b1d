//! Truncated interpolated values `ζ^t_N({1}_k)` as polynomials in `t`.

use num_traits::Zero;

use super::ring::TPoly;
use super::zeta::zt_trunc;
use super::Rat;
use crate::index::ordered_partitions;

/// `ζ^t_N({1}_k) = Σ_{p ∈ compositions(k)} t^{k-ℓ(p)} ζ_N(p)`; `k = 0` gives 1.
pub fn interp_trunc(n: u64, k: u32) -> TPoly {
    if k == 0 {
        return TPoly::constant(Rat::from_integer(1.into()));
    }
    let mut coeffs = vec![Rat::zero(); k as usize];
    for p in ordered_partitions(k).expect("k >= 1") {
        coeffs[k as usize - p.depth()] += zt_trunc(n, &p);
    }
    TPoly::new(coeffs)
}

/// `ζ^t_N({1}_k)` at a rational `t`.
pub fn interp_at(n: u64, k: u32, t: &Rat) -> Rat {
    interp_trunc(n, k).eval(t)
}
