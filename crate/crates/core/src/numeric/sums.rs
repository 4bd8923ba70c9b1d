//! Numeric evaluation of the infinite objects: multiple zeta values, the series `S`,
//! Arakawa–Kaneko values `ξ` and the tail series `T*`.

use num_bigint::BigInt;

use super::extrapolate::{extrapolate, ExtrapolationConfig, PartialSums, TermSums};
use super::fixed::Fixed;
use super::precreal::{working_bits, PrecReal};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial};
use crate::index::IndexWord;

/// Safety factor between the extrapolation estimate and the reported radius.
pub const RADIUS_FACTOR: f64 = 4.0;

/// Largest cutoff used for a directly summed series with a certified tail.
pub const DIRECT_CUTOFF_BOUND: u64 = 1 << 16;

/// Running value of `ζ_n(w)` or `ζ*_n(w)` in fixed point, stepped one `n` at a time.
#[derive(Clone, Debug)]
pub struct WordState {
    parts: Vec<u32>,
    suffix: Vec<Fixed>,
    star: bool,
    n: u64,
}

impl WordState {
    pub fn new(w: &IndexWord, star: bool, prec: u32) -> Self {
        let k = w.depth();
        let mut suffix = vec![Fixed::zero(prec); k + 1];
        suffix[k] = Fixed::one(prec);
        WordState { parts: w.parts().to_vec(), suffix, star, n: 0 }
    }

    /// Current `n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn value(&self) -> &Fixed {
        &self.suffix[0]
    }

    pub fn step(&mut self) {
        self.n += 1;
        let n = self.n;
        let k = self.parts.len();
        let update = |suffix: &mut [Fixed], j: usize| {
            let mut add = suffix[j + 1].clone();
            for _ in 0..self.parts[j] {
                add = add.div_int(n);
            }
            suffix[j].add_assign(&add);
        };
        if self.star {
            for j in (0..k).rev() {
                update(&mut self.suffix, j);
            }
        } else {
            for j in 0..k {
                update(&mut self.suffix, j);
            }
        }
    }
}

impl PartialSums for WordState {
    fn prec(&self) -> u32 {
        self.suffix[0].prec()
    }

    fn advance_to(&mut self, n: u64) -> Fixed {
        while self.n < n {
            self.step();
        }
        self.value().clone()
    }
}

fn target_for(digits: u32) -> f64 {
    10f64.powi(-(digits as i32))
}

/// Extrapolates a sequential source and turns the estimate into a heuristic radius.
fn extrapolated_value<S: PartialSums>(src: &mut S, q: usize, digits: u32, what: &str) -> Result<PrecReal> {
    let cfg = ExtrapolationConfig::with_log_power(q);
    let r = extrapolate(src, &cfg, target_for(digits) / RADIUS_FACTOR)
        .map_err(|e| Error::PrecisionUnreachable(format!("{what}: {e}")))?;
    Ok(PrecReal::new(r.value, RADIUS_FACTOR * r.estimate, false, digits))
}

/// `ζ(w)` for an admissible word, as the extrapolated limit of `ζ_N(w)`. The tail of
/// `ζ_N(w)` carries powers of `ln N` up to `depth - 1`.
pub fn mzv_numeric(w: &IndexWord, digits: u32) -> Result<PrecReal> {
    if w.is_empty() {
        return Ok(PrecReal::exact(&crate::exact::rat_int(1), digits));
    }
    if !w.is_admissible() {
        return Err(Error::NotAdmissible(w.to_string()));
    }
    let mut src = WordState::new(w, false, working_bits(digits));
    extrapolated_value(&mut src, w.depth() - 1, digits, &format!("zeta({w})"))
}

/// Terms `ζ*_{n-1}({1}_{ℓ1}) ζ_{n-1}({1}_{ℓ2}) / (binom(n+r1, r1) n^{r2})` of `S`.
fn series_terms(l1: usize, l2: usize, r1: u32, r2: u32, prec: u32) -> TermSums<impl FnMut(u64) -> Fixed> {
    let mut star = WordState::new(&IndexWord::ones(l1), true, prec);
    let mut plain = WordState::new(&IndexWord::ones(l2), false, prec);
    TermSums::new(prec, move |n| {
        let t = star.value().mul(plain.value());
        star.step();
        plain.step();
        let d = binomial(n + r1 as u64, r1 as u64) * BigInt::from(n).pow(r2);
        t.div_bigint(&d)
    })
}

/// Upper bound on `Σ_{n>N} r1!·(ln n + 1)^L / n^s`, valid when the summand decreases
/// beyond `N`, i.e. `ln N + 1 > L/s`.
pub fn series_tail_bound(n: u64, l: u32, r1: u32, s: u32) -> Option<f64> {
    let ln1 = (n as f64).ln() + 1.0;
    if s < 2 || ln1 <= l as f64 / s as f64 {
        return None;
    }
    let sm1 = (s - 1) as f64;
    let mut acc = 0.0;
    let mut falling = 1.0;
    for j in 0..=l {
        acc += falling * ln1.powi((l - j) as i32) / sm1.powi(j as i32 + 1);
        falling *= (l - j) as f64;
    }
    let r1f = factorial(r1 as u64).to_string().parse::<f64>().unwrap_or(f64::INFINITY);
    Some(r1f * acc * (n as f64).powf(1.0 - s as f64))
}

/// Smallest power-of-two cutoff whose certified tail is below `target`, if any within
/// [`DIRECT_CUTOFF_BOUND`].
fn certified_cutoff(l: u32, r1: u32, s: u32, target: f64) -> Option<(u64, f64)> {
    let mut n = 16u64;
    while n <= DIRECT_CUTOFF_BOUND {
        if let Some(b) = series_tail_bound(n, l, r1, s) {
            if b <= target {
                return Some((n, b));
            }
        }
        n *= 2;
    }
    None
}

/// `S(ℓ1, ℓ2, r1, r2) = Σ_{n≥1} ζ*_{n-1}({1}_{ℓ1}) ζ_{n-1}({1}_{ℓ2}) / (binom(n+r1, r1) n^{r2})`.
///
/// Uses a direct partial sum with the certified tail bound
/// `|term| ≤ r1!·(ln n + 1)^{ℓ1+ℓ2}/n^{r1+r2}` when a cutoff within budget reaches the
/// target; otherwise extrapolates, and the result is flagged uncertified.
pub fn series_s_direct(l1: usize, l2: usize, r1: u32, r2: u32, digits: u32) -> Result<PrecReal> {
    let s = r1 + r2;
    if s < 2 {
        return Err(Error::Precondition(format!("S needs r1 + r2 >= 2, got r1={r1}, r2={r2}")));
    }
    let prec = working_bits(digits);
    let target = target_for(digits);
    let l = (l1 + l2) as u32;
    let mut src = series_terms(l1, l2, r1, r2, prec);
    if let Some((n, tail)) = certified_cutoff(l, r1, s, target / 2.0) {
        let v = src.advance_to(n);
        let rounding = 4.0 * (n as f64) * (l as f64 + r2 as f64 + 2.0) * v.ulp();
        return Ok(PrecReal::new(v, tail + rounding, true, digits));
    }
    extrapolated_value(&mut src, l1 + l2, digits, &format!("S({l1},{l2},{r1},{r2})"))
}

/// `ξ_{i1,…,ik}(s) = Σ_n ζ*_n({1}_{s-1}) ζ_{n-1}(i2,…,ik) / n^{i1+1}` for `s, i1 ≥ 1`.
pub fn xi_numeric(w: &IndexWord, s: u32, digits: u32) -> Result<PrecReal> {
    let i1 = match w.first() {
        Some(i) => i,
        None => return Err(Error::EmptyWord),
    };
    if s < 1 {
        return Err(Error::Precondition("xi needs s >= 1".into()));
    }
    let prec = working_bits(digits);
    let mut star = WordState::new(&IndexWord::ones(s as usize - 1), true, prec);
    let mut plain = WordState::new(&w.tail(), false, prec);
    let mut src = TermSums::new(prec, move |n| {
        star.step();
        let mut t = star.value().mul(plain.value());
        plain.step();
        for _ in 0..=i1 {
            t = t.div_int(n);
        }
        t
    });
    let q = (s as usize - 1) + (w.depth() - 1);
    extrapolated_value(&mut src, q, digits, &format!("xi_{w}({s})"))
}

/// `Σ_{n≥1} a_n·(1/n − 1/(n+k)) = Σ a_n·k/(n(n+k))` for a sequence given by `a`.
fn shifted_difference_sum<A>(k: u64, prec: u32, mut a: A) -> TermSums<impl FnMut(u64) -> Fixed>
where
    A: FnMut(u64) -> Fixed,
{
    TermSums::new(prec, move |n| a(n).mul_int(k as i64).div_bigint(&(BigInt::from(n) * (n + k))))
}

/// `T*(ℓ, k) = Σ_n ζ*_n({1}_ℓ)(1/n − 1/(n+k))`.
pub fn tstar_numeric(ell: usize, k: u64, digits: u32) -> Result<PrecReal> {
    if k < 1 {
        return Err(Error::Precondition("T* needs k >= 1".into()));
    }
    let prec = working_bits(digits);
    let mut star = WordState::new(&IndexWord::ones(ell), true, prec);
    let mut src = shifted_difference_sum(k, prec, move |_| {
        star.step();
        star.value().clone()
    });
    extrapolated_value(&mut src, ell, digits, &format!("T*({ell},{k})"))
}

/// `Σ_n ζ*_{n-1}({1}_{ℓ1}) ζ_{n-1}({1}_{ℓ2}) (1/n − 1/(n+k))`, the inner series of the
/// second part of the stuffle decomposition of `S`.
pub fn shifted_pair_numeric(l1: usize, l2: usize, k: u64, digits: u32) -> Result<PrecReal> {
    let prec = working_bits(digits);
    let mut star = WordState::new(&IndexWord::ones(l1), true, prec);
    let mut plain = WordState::new(&IndexWord::ones(l2), false, prec);
    let mut src = shifted_difference_sum(k, prec, move |_| {
        let t = star.value().mul(plain.value());
        star.step();
        plain.step();
        t
    });
    extrapolated_value(&mut src, l1 + l2, digits, &format!("pair({l1},{l2};{k})"))
}
