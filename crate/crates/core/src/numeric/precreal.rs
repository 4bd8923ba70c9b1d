use std::fmt;

use serde::{Deserialize, Serialize};

use super::fixed::{bits_for_digits, parse_decimal_rat, Fixed};
use crate::error::{Error, Result};
use crate::exact::Rat;

/// Extra decimal places printed beyond the requested digits.
const SHOWN_EXTRA: u32 = 5;

/// A real number known to lie in `[value - radius, value + radius]`.
///
/// `certified` is false when the radius comes from an extrapolation residual rather than
/// a proven bound.
#[derive(Clone, Debug)]
pub struct PrecReal {
    pub value: Fixed,
    pub radius: f64,
    pub certified: bool,
    /// Decimal places shown when rendering.
    pub places: u32,
}

impl PrecReal {
    pub fn new(value: Fixed, radius: f64, certified: bool, digits: u32) -> Self {
        PrecReal { value, radius, certified, places: digits + SHOWN_EXTRA }
    }

    pub fn exact(r: &Rat, digits: u32) -> Self {
        let prec = working_bits(digits);
        let value = Fixed::from_rat(r, prec);
        PrecReal::new(value, 2f64.powi(-(prec as i32)), true, digits)
    }

    pub fn zero(digits: u32) -> Self {
        let prec = working_bits(digits);
        PrecReal { value: Fixed::zero(prec), radius: 0.0, certified: true, places: digits + SHOWN_EXTRA }
    }

    pub fn prec(&self) -> u32 {
        self.value.prec()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// True when `|self - x| ≤ radius + tol`.
    pub fn contains_within(&self, x: &Rat, tol: f64) -> bool {
        let d = self.value.sub(&Fixed::from_rat(x, self.prec())).abs().to_f64();
        d <= self.radius + tol
    }

    /// `|self - other|` as an f64.
    pub fn distance(&self, other: &PrecReal) -> f64 {
        let p = self.prec().max(other.prec());
        self.value.with_prec(p).sub(&other.value.with_prec(p)).abs().to_f64()
    }

    fn align(&self, o: &PrecReal) -> (Fixed, Fixed, u32) {
        let p = self.prec().max(o.prec());
        (self.value.with_prec(p), o.value.with_prec(p), p)
    }

    pub fn add(&self, o: &PrecReal) -> PrecReal {
        let (a, b, _) = self.align(o);
        PrecReal {
            value: a.add(&b),
            radius: self.radius + o.radius,
            certified: self.certified && o.certified,
            places: self.places.min(o.places),
        }
    }

    pub fn sub(&self, o: &PrecReal) -> PrecReal {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> PrecReal {
        PrecReal { value: self.value.neg(), ..self.clone() }
    }

    pub fn mul(&self, o: &PrecReal) -> PrecReal {
        let (a, b, p) = self.align(o);
        let fa = a.abs().to_f64();
        let fb = b.abs().to_f64();
        let radius = fa * o.radius + fb * self.radius + self.radius * o.radius + 2f64.powi(-(p as i32));
        PrecReal {
            value: a.mul(&b),
            radius: radius * (1.0 + 1e-12),
            certified: self.certified && o.certified,
            places: self.places.min(o.places),
        }
    }

    pub fn scale(&self, r: &Rat) -> PrecReal {
        let f = crate::exact::rat_to_f64(r).abs();
        PrecReal {
            value: self.value.mul_rat(r),
            radius: (self.radius * f + self.value.ulp()) * (1.0 + 1e-12),
            ..self.clone()
        }
    }

    pub fn value_string(&self) -> String {
        self.value.to_decimal(self.places)
    }

    pub fn radius_string(&self) -> String {
        format!("{:.3e}", self.radius)
    }
}

/// Working precision in bits for a requested number of decimal digits.
pub fn working_bits(digits: u32) -> u32 {
    bits_for_digits(digits + 40)
}

impl fmt::Display for PrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {}", self.value_string(), self.radius_string())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    value: String,
    radius: String,
}

impl Serialize for PrecReal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { value: self.value_string(), radius: self.radius_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PrecReal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        PrecReal::from_strings(&w.value, &w.radius).map_err(serde::de::Error::custom)
    }
}

impl PrecReal {
    /// Rebuilds a value from its serialized decimal strings.
    pub fn from_strings(value: &str, radius: &str) -> Result<PrecReal> {
        let places = value.split_once('.').map(|(_, f)| f.len() as u32).unwrap_or(0);
        let digits = places.saturating_sub(SHOWN_EXTRA);
        let prec = working_bits(digits);
        let v = Fixed::from_rat(&parse_decimal_rat(value)?, prec);
        let r: f64 = radius
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad radius `{radius}`")))?;
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::Parse(format!("radius must be finite and nonnegative, got `{radius}`")));
        }
        Ok(PrecReal { value: v, radius: r, certified: true, places })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn interval_arithmetic() {
        let a = PrecReal::exact(&rat(1, 3), 12);
        let b = PrecReal::exact(&rat(2, 3), 12);
        let s = a.add(&b);
        assert!(s.contains_within(&rat(1, 1), 0.0));
        let p = a.mul(&b);
        assert!(p.contains_within(&rat(2, 9), 0.0));
        let q = b.scale(&rat(-3, 2));
        assert!(q.contains_within(&rat(-1, 1), 0.0));
        assert!(PrecReal::zero(12).radius == 0.0);
    }

    #[test]
    fn serialization_round_trip() {
        let mut x = PrecReal::exact(&rat(22, 7), 12);
        x.radius = 3.25e-14;
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"value":"3.14285714285714286","radius":"3.250e-14"}"#);
        let y: PrecReal = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&y).unwrap(), json);
    }
}
