use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::Rat;

/// Binary fixed-point number `m · 2^{-prec}`. All operands of one computation share `prec`;
/// every multiplication or division rounds to nearest, an error of at most one unit in the
/// last place.
#[derive(Clone, PartialEq, Eq)]
pub struct Fixed {
    m: BigInt,
    prec: u32,
}

/// Bits needed to carry `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8
}

fn round_shift(x: BigInt, s: u32) -> BigInt {
    if s == 0 {
        return x;
    }
    let half = BigInt::one() << (s - 1);
    if x.is_negative() {
        -((-x + half) >> s)
    } else {
        (x + half) >> s
    }
}

fn round_div(a: BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if (r * 2i32).abs() >= b.abs() {
        q + 1
    } else {
        q
    }
}

impl Fixed {
    pub fn zero(prec: u32) -> Self {
        Fixed { m: BigInt::zero(), prec }
    }

    pub fn one(prec: u32) -> Self {
        Fixed { m: BigInt::one() << prec, prec }
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        Fixed { m: BigInt::from(n) << prec, prec }
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        Fixed { m: n << prec, prec }
    }

    pub fn from_rat(r: &Rat, prec: u32) -> Self {
        Fixed { m: round_div(r.numer() << prec, r.denom()), prec }
    }

    /// `1/d` for a positive integer `d`.
    pub fn recip_int(d: &BigInt, prec: u32) -> Self {
        Fixed { m: round_div(BigInt::one() << prec, d), prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.m
    }

    /// Size of one unit in the last place.
    pub fn ulp(&self) -> f64 {
        2f64.powi(-(self.prec as i32))
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    pub fn abs(&self) -> Self {
        Fixed { m: self.m.abs(), prec: self.prec }
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        let m = if prec >= self.prec {
            &self.m << (prec - self.prec)
        } else {
            round_shift(self.m.clone(), self.prec - prec)
        };
        Fixed { m, prec }
    }

    fn check(&self, o: &Fixed) {
        debug_assert_eq!(self.prec, o.prec, "mixed fixed-point precisions");
    }

    pub fn add(&self, o: &Fixed) -> Fixed {
        self.check(o);
        Fixed { m: &self.m + &o.m, prec: self.prec }
    }

    pub fn sub(&self, o: &Fixed) -> Fixed {
        self.check(o);
        Fixed { m: &self.m - &o.m, prec: self.prec }
    }

    pub fn add_assign(&mut self, o: &Fixed) {
        self.check(o);
        self.m += &o.m;
    }

    pub fn neg(&self) -> Fixed {
        Fixed { m: -&self.m, prec: self.prec }
    }

    pub fn mul(&self, o: &Fixed) -> Fixed {
        self.check(o);
        Fixed { m: round_shift(&self.m * &o.m, self.prec), prec: self.prec }
    }

    pub fn div(&self, o: &Fixed) -> Result<Fixed> {
        self.check(o);
        if o.m.is_zero() {
            return Err(Error::Precondition("fixed-point division by zero".into()));
        }
        Ok(Fixed { m: round_div(&self.m << self.prec, &o.m), prec: self.prec })
    }

    pub fn mul_int(&self, k: i64) -> Fixed {
        Fixed { m: &self.m * k, prec: self.prec }
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Fixed {
        Fixed { m: &self.m * k, prec: self.prec }
    }

    pub fn div_int(&self, d: u64) -> Fixed {
        Fixed { m: round_div(self.m.clone(), &BigInt::from(d)), prec: self.prec }
    }

    pub fn div_bigint(&self, d: &BigInt) -> Fixed {
        Fixed { m: round_div(self.m.clone(), d), prec: self.prec }
    }

    pub fn mul_rat(&self, r: &Rat) -> Fixed {
        Fixed { m: round_div(&self.m * r.numer(), r.denom()), prec: self.prec }
    }

    pub fn powi(&self, k: u32) -> Fixed {
        let mut acc = Fixed::one(self.prec);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact rational value of the representation.
    pub fn to_rat(&self) -> Rat {
        Rat::new(self.m.clone(), BigInt::one() << self.prec)
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.m.bits() as i64;
        let shift = (bits - 60).max(0) as u32;
        let top = (&self.m >> shift).to_f64().unwrap_or(0.0);
        top * 2f64.powi(shift as i32 - self.prec as i32)
    }

    /// Decimal rendering rounded to `places` digits after the point.
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = BigInt::from(10).pow(places);
        let scaled = round_div(&self.m * &scale, &(BigInt::one() << self.prec));
        let neg = scaled.sign() == Sign::Minus;
        let digits = scaled.abs().to_string();
        let places = places as usize;
        let padded = if digits.len() <= places {
            format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int, frac) = padded.split_at(padded.len() - places);
        let sign = if neg { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// Parses a plain decimal such as `-1.25` or `3`.
    pub fn parse_decimal(s: &str, prec: u32) -> Result<Fixed> {
        Ok(Fixed::from_rat(&parse_decimal_rat(s)?, prec))
    }
}

/// Exact rational value of a decimal string, with optional exponent (`1.5e-3`).
pub fn parse_decimal_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("bad decimal `{s}`"));
    let t = s.trim();
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match mant.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}0").parse::<BigInt>().map_err(|_| bad())? / 10;
    let e = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if e >= 0 {
        Rat::from_integer(digits * ten.pow(e as u32))
    } else {
        Rat::new(digits, ten.pow((-e) as u32))
    };
    if neg {
        r = -r;
    }
    Ok(r)
}

impl fmt::Debug for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fixed({})", self.to_decimal(20))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn arithmetic_and_rounding() {
        let p = 100;
        let third = Fixed::from_rat(&rat(1, 3), p);
        let sum = third.add(&third).add(&third);
        assert!((sum.to_f64() - 1.0).abs() < 1e-29);
        let q = Fixed::one(p).div(&Fixed::from_int(7, p)).unwrap();
        assert_eq!(q.to_decimal(10), "0.1428571429");
        assert_eq!(q.mul_int(7).to_decimal(20), "1.00000000000000000000");
        assert_eq!(Fixed::from_rat(&rat(-5, 4), p).to_decimal(3), "-1.250");
        assert_eq!(Fixed::from_rat(&rat(1, 200), p).to_decimal(2), "0.01");
        assert_eq!(Fixed::from_int(3, p).to_decimal(0), "3");
    }

    #[test]
    fn decimal_round_trip() {
        let p = 200;
        let x = Fixed::one(p).div(&Fixed::from_int(3, p)).unwrap().neg();
        let s = x.to_decimal(30);
        let y = Fixed::parse_decimal(&s, p).unwrap();
        assert_eq!(y.to_decimal(30), s);
        assert_eq!(parse_decimal_rat("1.5e-3").unwrap(), rat(3, 2000));
        assert_eq!(parse_decimal_rat("-2").unwrap(), rat(-2, 1));
        assert!(parse_decimal_rat("1.2.3").is_err());
        assert!(parse_decimal_rat("").is_err());
    }

    #[test]
    fn to_f64_large_and_small() {
        let p = 300;
        let big = Fixed::from_int(1 << 40, p);
        assert_eq!(big.to_f64(), (1u64 << 40) as f64);
        let tiny = Fixed::from_rat(&rat(1, 1 << 50), p);
        assert_eq!(tiny.to_f64(), 2f64.powi(-50));
        assert_eq!(Fixed::from_int(1, 64).with_prec(128), Fixed::one(128));
    }
}
