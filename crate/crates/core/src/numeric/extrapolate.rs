//! Limit extrapolation for slowly convergent partial sums.
//!
//! Partial sums `s_N` are sampled on a geometric ladder `N_i = ⌊N0·2^{i/4}⌋` and fitted
//! to `c0 + Σ_{p=1..P} Σ_{q=0..Q} c_{pq} ln^q(N)/N^p`. The limit estimate is `c0`. The error
//! estimate is the largest movement of `c0` when the fitting window is shifted back by two
//! or four ladder points; this is a heuristic, not a proof.

use std::collections::HashMap;

use super::constants::ln_int;
use super::fixed::Fixed;
use crate::error::{Error, Result};

/// A sequence of partial sums that can only move forward.
pub trait PartialSums {
    fn prec(&self) -> u32;
    /// Returns `s_n`; `n` never decreases between calls.
    fn advance_to(&mut self, n: u64) -> Fixed;
}

#[derive(Clone, Debug)]
pub struct ExtrapolationConfig {
    pub n0: u64,
    /// Ladder budget: no partial sum beyond this index is computed.
    pub max_n: u64,
    pub p_max: usize,
    /// Highest power of `ln N` in the model.
    pub q: usize,
    pub steps_per_octave: u32,
}

impl ExtrapolationConfig {
    pub fn with_log_power(q: usize) -> Self {
        ExtrapolationConfig { q, ..Default::default() }
    }
}

impl Default for ExtrapolationConfig {
    fn default() -> Self {
        ExtrapolationConfig { n0: 64, max_n: 1 << 20, p_max: 8, q: 0, steps_per_octave: 4 }
    }
}

#[derive(Clone, Debug)]
pub struct Extrapolated {
    pub value: Fixed,
    pub estimate: f64,
    pub n_max: u64,
    pub order_p: usize,
    /// The raw partial sum at `n_max`.
    pub last_partial: Fixed,
}

pub fn ladder_point(cfg: &ExtrapolationConfig, i: usize) -> u64 {
    let x = cfg.n0 as f64 * 2f64.powf(i as f64 / cfg.steps_per_octave as f64);
    x.floor() as u64
}

struct Fitter {
    prec: u32,
    q: usize,
    logs: HashMap<u64, Fixed>,
}

impl Fitter {
    fn ln(&mut self, n: u64) -> Fixed {
        let prec = self.prec;
        self.logs.entry(n).or_insert_with(|| ln_int(n, prec)).clone()
    }

    /// `c0` of the model with order `p` fitted exactly through the given points.
    ///
    /// Uses the equivalent basis `u^p L^q` with `u = N_min/N`, `L = ln(N/N_min)` to keep the
    /// linear system well scaled.
    fn fit(&mut self, ns: &[u64], vals: &[Fixed], p: usize) -> Option<Fixed> {
        let prec = self.prec;
        let m = 1 + p * (self.q + 1);
        debug_assert_eq!(ns.len(), m);
        let n_min = ns[0];
        let ln_min = self.ln(n_min);
        let mut a: Vec<Vec<Fixed>> = Vec::with_capacity(m);
        for (&n, v) in ns.iter().zip(vals) {
            let u = Fixed::from_int(n_min as i64, prec).div_int(n);
            let l = self.ln(n).sub(&ln_min);
            let mut row = Vec::with_capacity(m + 1);
            row.push(Fixed::one(prec));
            let mut up = Fixed::one(prec);
            for _ in 1..=p {
                up = up.mul(&u);
                let mut term = up.clone();
                for _ in 0..=self.q {
                    row.push(term.clone());
                    term = term.mul(&l);
                }
            }
            row.push(v.clone());
            a.push(row);
        }
        // Gaussian elimination with partial pivoting; c0 is the first unknown
        for c in 0..m {
            let piv = (c..m).max_by(|&x, &y| {
                a[x][c].abs().mantissa().cmp(a[y][c].abs().mantissa())
            })?;
            if a[piv][c].is_zero() {
                return None;
            }
            a.swap(c, piv);
            let pr = a[c].clone();
            for row in a.iter_mut().skip(c + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let f = row[c].div(&pr[c]).ok()?;
                for (x, y) in row.iter_mut().zip(&pr).skip(c) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        let mut sol = vec![Fixed::zero(prec); m];
        for c in (0..m).rev() {
            let mut rhs = a[c][m].clone();
            for j in c + 1..m {
                rhs = rhs.sub(&a[c][j].mul(&sol[j]));
            }
            sol[c] = rhs.div(&a[c][c]).ok()?;
        }
        Some(sol.swap_remove(0))
    }
}

/// Runs the adaptive ladder until the error estimate falls below `target` or the budget
/// is exhausted. The model order `P` grows with the number of available points.
pub fn extrapolate<S: PartialSums>(src: &mut S, cfg: &ExtrapolationConfig, target: f64) -> Result<Extrapolated> {
    let prec = src.prec();
    let mut fitter = Fitter { prec, q: cfg.q, logs: HashMap::new() };
    let mut ns: Vec<u64> = Vec::new();
    let mut vals: Vec<Fixed> = Vec::new();
    let mut best: Option<Extrapolated> = None;
    let min_n = 8 * cfg.n0;
    let floor = 2f64.powi(-(prec as i32) + 40);
    for i in 0.. {
        let n = ladder_point(cfg, i);
        if n > cfg.max_n {
            break;
        }
        if ns.last() == Some(&n) {
            continue;
        }
        vals.push(src.advance_to(n));
        ns.push(n);
        let count = ns.len();
        if !count.is_multiple_of(2) || n < min_n {
            continue;
        }
        // largest P whose window still fits after a shift of four points
        let p_hi = ((count.saturating_sub(5)) / (cfg.q + 1)).min(cfg.p_max);
        for p in (p_hi.saturating_sub(1).max(1)..=p_hi).rev() {
            let m = 1 + p * (cfg.q + 1);
            if m + 4 > count {
                continue;
            }
            let window = |shift: usize| (count - shift - m, count - shift);
            let mut fits = Vec::with_capacity(3);
            for shift in [0, 2, 4] {
                let (lo, hi) = window(shift);
                match fitter.fit(&ns[lo..hi], &vals[lo..hi], p) {
                    Some(f) => fits.push(f),
                    None => break,
                }
            }
            if fits.len() < 3 {
                continue;
            }
            let est = fits[1..]
                .iter()
                .map(|f| f.sub(&fits[0]).abs().to_f64())
                .fold(floor, f64::max);
            let better = best.as_ref().is_none_or(|b| est < b.estimate);
            if better {
                best = Some(Extrapolated {
                    value: fits[0].clone(),
                    estimate: est,
                    n_max: n,
                    order_p: p,
                    last_partial: vals[count - 1].clone(),
                });
            }
        }
        if best.as_ref().is_some_and(|b| b.estimate <= target) {
            break;
        }
    }
    match best {
        Some(b) if b.estimate <= target => Ok(b),
        Some(b) => Err(Error::PrecisionUnreachable(format!(
            "extrapolation reached estimate {:.3e} > target {:.3e} at N = {} (budget {})",
            b.estimate, target, b.n_max, cfg.max_n
        ))),
        None => Err(Error::PrecisionUnreachable(format!(
            "ladder budget {} too small for a log-power model with Q = {}",
            cfg.max_n, cfg.q
        ))),
    }
}

/// Partial sums `Σ_{n ≤ N} f(n)` for a term function evaluated one index at a time.
pub struct TermSums<F: FnMut(u64) -> Fixed> {
    prec: u32,
    n: u64,
    acc: Fixed,
    term: F,
}

impl<F: FnMut(u64) -> Fixed> TermSums<F> {
    pub fn new(prec: u32, term: F) -> Self {
        TermSums { prec, n: 0, acc: Fixed::zero(prec), term }
    }
}

impl<F: FnMut(u64) -> Fixed> PartialSums for TermSums<F> {
    fn prec(&self) -> u32 {
        self.prec
    }

    fn advance_to(&mut self, n: u64) -> Fixed {
        while self.n < n {
            self.n += 1;
            let t = (self.term)(self.n);
            self.acc.add_assign(&t);
        }
        self.acc.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::fixed::bits_for_digits;
    use num_bigint::BigInt;

    #[test]
    fn basel_problem() {
        let prec = bits_for_digits(50);
        let mut src = TermSums::new(prec, |n| Fixed::recip_int(&(BigInt::from(n) * n), prec));
        let cfg = ExtrapolationConfig::default();
        let r = extrapolate(&mut src, &cfg, 1e-15).unwrap();
        let exact = 1.6449340668482264_f64;
        assert!((r.value.to_f64() - exact).abs() < 1e-15, "{:?}", r);
        assert!(r.n_max < 10_000);
    }

    #[test]
    fn logarithmic_tail() {
        // Σ H_n/n^2 = 2ζ(3) has a ln(N)/N tail
        let prec = bits_for_digits(50);
        let mut h = Fixed::zero(prec);
        let mut src = TermSums::new(prec, move |n| {
            h.add_assign(&Fixed::one(prec).div_int(n));
            h.div_int(n * n)
        });
        let cfg = ExtrapolationConfig::with_log_power(1);
        let r = extrapolate(&mut src, &cfg, 1e-13).unwrap();
        let exact = 2.0 * 1.2020569031595942_f64;
        assert!((r.value.to_f64() - exact).abs() < 1e-13);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let prec = bits_for_digits(30);
        let mut src = TermSums::new(prec, |n| Fixed::one(prec).div_int(n * n));
        let cfg = ExtrapolationConfig { max_n: 600, ..Default::default() };
        assert!(matches!(extrapolate(&mut src, &cfg, 1e-40), Err(Error::PrecisionUnreachable(_))));
    }
}
