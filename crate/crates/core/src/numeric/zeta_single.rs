use num_bigint::BigInt;

use super::constants::bernoulli_numbers;
use super::fixed::Fixed;
use super::precreal::{working_bits, PrecReal};
use crate::error::{Error, Result};
use crate::exact::{factorial, rat_to_f64, Rat};

/// Largest summation cutoff `zeta_single` accepts before giving up.
pub const ZETA_CUTOFF_BOUND: u64 = 5_000_000;

/// `k (k+1) ⋯ (k+m-1)`.
fn rising(k: u32, m: u32) -> BigInt {
    (0..m).fold(BigInt::from(1), |acc, i| acc * (k + i))
}

/// Magnitude of the Euler–Maclaurin term with `B_{2j}` at cutoff `n` for `Σ n^{-k}`.
fn em_term_size(k: u32, j: u32, n: f64, b2j: &Rat) -> f64 {
    let c = rat_to_f64(b2j).abs() / rat_to_f64(&Rat::from_integer(factorial(2 * j as u64)));
    let r = rat_to_f64(&Rat::from_integer(rising(k, 2 * j - 1)));
    c * r * n.powf(-(k as f64) - 2.0 * j as f64 + 1.0)
}

/// `ζ(k)` for `k ≥ 2` by direct summation below a cutoff `N` plus Euler–Maclaurin tail
/// correction through the `B_10` term:
///
/// `ζ(k) ≈ Σ_{n<N} n^{-k} + N^{1-k}/(k-1) + N^{-k}/2 + Σ_{j=1..5} B_{2j}/(2j)! · k^{(2j-1)} N^{1-k-2j}`.
///
/// The remainder is bounded by the first omitted (`B_12`) term; the radius is twice that
/// plus accumulated rounding.
pub fn zeta_single(k: u32, digits: u32) -> Result<PrecReal> {
    if k < 2 {
        return Err(Error::Precondition(format!("zeta_single needs k >= 2, got {k}")));
    }
    let prec = working_bits(digits);
    let b = bernoulli_numbers(12);
    let target = 10f64.powi(-(digits as i32)) / 8.0;
    // smallest N whose omitted term is below target
    let c12 = em_term_size(k, 6, 1.0, &b[12]);
    let log_n = ((c12.ln() - target.ln()) / (k as f64 + 11.0)).max(0.0);
    let n_f = log_n.exp().ceil().max(k as f64 + 2.0).max(8.0);
    if n_f > ZETA_CUTOFF_BOUND as f64 {
        return Err(Error::PrecisionUnreachable(format!(
            "zeta({k}) to {digits} digits needs cutoff {n_f:.3e} > {ZETA_CUTOFF_BOUND}"
        )));
    }
    let n = n_f as u64;
    let mut sum = Fixed::zero(prec);
    for m in 1..n {
        sum.add_assign(&Fixed::recip_int(&BigInt::from(m).pow(k), prec));
    }
    let nb = BigInt::from(n);
    let mut tail = Rat::new(BigInt::from(1), nb.pow(k - 1) * (k - 1))
        + Rat::new(BigInt::from(1), nb.pow(k) * 2);
    for j in 1..=5u32 {
        let coeff = &b[2 * j as usize] / Rat::from_integer(factorial(2 * j as u64));
        tail += coeff * Rat::from_integer(rising(k, 2 * j - 1)) / Rat::from_integer(nb.pow(k + 2 * j - 1));
    }
    let value = sum.add(&Fixed::from_rat(&tail, prec));
    let omitted = em_term_size(k, 6, n as f64, &b[12]);
    let radius = 2.0 * omitted + (n as f64 + 4.0) * value.ulp();
    Ok(PrecReal::new(value, radius, true, digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        use crate::numeric::fixed::parse_decimal_rat;
        let refs = [
            (2, "1.6449340668482264364724151666460251892189"),
            (3, "1.2020569031595942853997381615114499907650"),
            (10, "1.0009945751278180853371459589003190170060"),
        ];
        for (k, r) in refs {
            let x = parse_decimal_rat(r).unwrap();
            for digits in [12, 20, 30] {
                let z = zeta_single(k, digits).unwrap();
                assert!(z.radius < 10f64.powi(-(digits as i32)), "{k} {digits} {z}");
                assert!(z.contains_within(&x, 1e-40), "{k} {digits} {z}");
            }
        }
    }

    #[test]
    fn matches_pi_squared_over_six() {
        // π²/6 to 40 digits
        let pi2_6 = crate::numeric::fixed::parse_decimal_rat("1.644934066848226436472415166646025189219").unwrap();
        let z2 = zeta_single(2, 30).unwrap();
        assert!(z2.contains_within(&pi2_6, 1e-39));
        assert!(zeta_single(1, 10).is_err());
        assert!(matches!(zeta_single(2, 200), Err(Error::PrecisionUnreachable(_))));
    }
}
