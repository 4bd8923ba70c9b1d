//! Bernoulli numbers, logarithms and Euler's constant in fixed point.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::fixed::Fixed;
use crate::exact::{binomial, Rat};

/// `B_0, …, B_m` from `Σ_{k=0}^{j} binom(j+1, k) B_k = 0`, with `B_1 = -1/2`.
pub fn bernoulli_numbers(m: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(m + 1);
    b.push(Rat::one());
    for j in 1..=m {
        let mut s = Rat::zero();
        for (k, bk) in b.iter().enumerate() {
            s += Rat::from_integer(binomial(j as u64 + 1, k as u64)) * bk;
        }
        b.push(-s / Rat::from_integer(BigInt::from(j + 1)));
    }
    b
}

const GUARD: u32 = 32;

/// `atanh(x) = Σ x^{2j+1}/(2j+1)` for `|x| ≤ 1/3`.
fn atanh_small(x: &Fixed) -> Fixed {
    let prec = x.prec();
    let x2 = x.mul(x);
    let mut pow = x.clone();
    let mut acc = Fixed::zero(prec);
    let mut j = 0u64;
    while !pow.is_zero() {
        acc.add_assign(&pow.div_int(2 * j + 1));
        pow = pow.mul(&x2);
        j += 1;
    }
    acc
}

/// `ln 2 = 2·atanh(1/3)`.
pub fn ln2(prec: u32) -> Fixed {
    let p = prec + GUARD;
    let third = Fixed::one(p).div_int(3);
    atanh_small(&third).mul_int(2).with_prec(prec)
}

/// Natural logarithm of a positive integer: `n = 2^e·y` with `y ∈ [1, 2)`, then
/// `ln n = e·ln 2 + 2·atanh((y-1)/(y+1))`.
pub fn ln_int(n: u64, prec: u32) -> Fixed {
    assert!(n >= 1, "ln of zero");
    let p = prec + GUARD;
    let e = 63 - n.leading_zeros();
    let y = Fixed::from_rat(&Rat::new(BigInt::from(n), BigInt::one() << e), p);
    let one = Fixed::one(p);
    let x = y.sub(&one).div(&y.add(&one)).expect("positive");
    let l2 = ln2(p);
    l2.mul_int(e as i64).add(&atanh_small(&x).mul_int(2)).with_prec(prec)
}

/// Euler's constant from `γ = H_N - ln N - 1/(2N) + Σ_{j=1..5} B_{2j}/(2j N^{2j})`.
/// The neglected term is below `|B_12|/(12 N^12)`.
pub fn euler_gamma(prec: u32) -> Fixed {
    let p = prec + GUARD;
    let n: u64 = 2f64.powf((p as f64 + 8.0) / 12.0).ceil().max(16.0) as u64;
    let mut h = Fixed::zero(p);
    for k in 1..=n {
        h.add_assign(&Fixed::one(p).div_int(k));
    }
    let b = bernoulli_numbers(10);
    let mut g = h.sub(&ln_int(n, p)).sub(&Fixed::one(p).div_int(2 * n));
    for j in 1..=5usize {
        let c = &b[2 * j] / Rat::from_integer(BigInt::from(2 * j) * BigInt::from(n).pow(2 * j as u32));
        g = g.add(&Fixed::from_rat(&c, p));
    }
    g.with_prec(prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[10], rat(5, 66));
        assert_eq!(b[12], rat(-691, 2730));
        assert_eq!(b[7], rat(0, 1));
    }

    #[test]
    fn logarithms() {
        let p = 200;
        assert_eq!(ln2(p).to_decimal(30), "0.693147180559945309417232121458");
        assert_eq!(ln_int(10, p).to_decimal(30), "2.302585092994045684017991454684");
        assert_eq!(ln_int(1, p).to_decimal(10), "0.0000000000");
        let sum = ln_int(6, p).sub(&ln_int(2, p)).sub(&ln_int(3, p));
        assert!(sum.to_f64().abs() < 1e-55);
    }

    #[test]
    fn gamma_digits() {
        assert_eq!(euler_gamma(200).to_decimal(30), "0.577215664901532860606512090082");
    }
}
