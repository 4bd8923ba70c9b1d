//! Small commutative rings used by the determinant machinery: rationals,
//! quadratic extensions `a + b·√d`, and polynomials in the interpolation parameter `t`.

use std::fmt;

use num_traits::{One, Zero};

use super::{format_rat, Rat};
use crate::error::{Error, Result};

/// Commutative ring with unit. Methods take references so big values are not cloned needlessly.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    fn scaled(&self, r: &Rat) -> Self {
        self.times(&Self::from_rat(r))
    }
}

impl Ring for Rat {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// `a + b·√d` over a base ring. With `b = 0` the radicand is irrelevant; `d = 0`
/// collapses the value to `a`.
#[derive(Clone, Debug)]
pub struct QuadExt<R: Ring = Rat> {
    pub a: R,
    pub b: R,
    pub d: R,
}

impl<R: Ring> QuadExt<R> {
    pub fn new(a: R, b: R, d: R) -> Self {
        if d.is_nil() || b.is_nil() {
            QuadExt { a, b: R::nil(), d: R::nil() }
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn base(a: R) -> Self {
        QuadExt { a, b: R::nil(), d: R::nil() }
    }

    /// `b·√d`.
    pub fn radical(b: R, d: R) -> Self {
        Self::new(R::nil(), b, d)
    }

    pub fn is_base(&self) -> bool {
        self.b.is_nil()
    }

    /// The radicand in use, or `None` when the value lies in the base ring.
    pub fn radicand(&self) -> Option<&R> {
        (!self.b.is_nil()).then_some(&self.d)
    }

    fn common_d(&self, o: &Self) -> R {
        match (self.radicand(), o.radicand()) {
            (Some(x), Some(y)) => {
                assert!(x == y, "mixing radicands {x:?} and {y:?}");
                x.clone()
            }
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => R::nil(),
        }
    }

    /// Fails unless all the given values share one radicand.
    pub fn check_consistent<'a, I>(items: I) -> Result<Option<R>>
    where
        I: IntoIterator<Item = &'a QuadExt<R>>,
        R: 'a,
    {
        let mut seen: Option<R> = None;
        for q in items {
            if let Some(d) = q.radicand() {
                match &seen {
                    Some(s) if s != d => {
                        return Err(Error::InconsistentRadicand(format!("{s:?}"), format!("{d:?}")));
                    }
                    Some(_) => {}
                    None => seen = Some(d.clone()),
                }
            }
        }
        Ok(seen)
    }
}

impl<R: Ring> PartialEq for QuadExt<R> {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (self.b.is_nil() || self.d == o.d)
    }
}

impl<R: Ring> Ring for QuadExt<R> {
    fn nil() -> Self {
        Self::base(R::nil())
    }
    fn unit() -> Self {
        Self::base(R::unit())
    }
    fn is_nil(&self) -> bool {
        self.a.is_nil() && self.b.is_nil()
    }
    fn plus(&self, o: &Self) -> Self {
        let d = self.common_d(o);
        Self::new(self.a.plus(&o.a), self.b.plus(&o.b), d)
    }
    fn minus(&self, o: &Self) -> Self {
        let d = self.common_d(o);
        Self::new(self.a.minus(&o.a), self.b.minus(&o.b), d)
    }
    fn times(&self, o: &Self) -> Self {
        let d = self.common_d(o);
        let a = self.a.times(&o.a).plus(&self.b.times(&o.b).times(&d));
        let b = self.a.times(&o.b).plus(&self.b.times(&o.a));
        Self::new(a, b, d)
    }
    fn negated(&self) -> Self {
        Self::new(self.a.negated(), self.b.negated(), self.d.clone())
    }
    fn from_rat(r: &Rat) -> Self {
        Self::base(R::from_rat(r))
    }
}

impl fmt::Display for QuadExt<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_nil() {
            write!(f, "{}", format_rat(&self.a))
        } else {
            write!(
                f,
                "{} + {}*sqrt({})",
                format_rat(&self.a),
                format_rat(&self.b),
                format_rat(&self.d)
            )
        }
    }
}

/// Polynomial in `t` with rational coefficients, lowest degree first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TPoly {
    coeffs: Vec<Rat>,
}

impl TPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * t + c)
    }
}

impl Ring for TPoly {
    fn nil() -> Self {
        TPoly::default()
    }
    fn unit() -> Self {
        TPoly::constant(Rat::one())
    }
    fn is_nil(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        TPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_nil() || o.is_nil() {
            return TPoly::nil();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        TPoly::new(v)
    }
    fn negated(&self) -> Self {
        TPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
    fn from_rat(r: &Rat) -> Self {
        TPoly::constant(r.clone())
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rat(c))?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly{self}")
    }
}

impl std::str::FromStr for TPoly {
    type Err = Error;

    /// Parses `[c0, c1, …]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad polynomial `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(TPoly::nil());
        }
        inner
            .split(',')
            .map(super::parse_rat)
            .collect::<Result<Vec<_>>>()
            .map(TPoly::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    #[test]
    fn quad_ext_arithmetic() {
        // (i√2)(-i√2) = 2 with d = -2: (√-2)(-√-2) = -(-2) = 2
        let c2 = QuadExt::radical(rat_int(1), rat_int(-2));
        let c3 = QuadExt::radical(rat_int(-1), rat_int(-2));
        assert_eq!(c2.times(&c3), QuadExt::base(rat_int(2)));
        assert_eq!(c2.plus(&c3), QuadExt::nil());
        // (1/2)√-2 = i/√2; squared is -1/2
        let h = QuadExt::radical(rat(1, 2), rat_int(-2));
        assert_eq!(h.times(&h), QuadExt::base(rat(-1, 2)));
    }

    #[test]
    fn quad_ext_collapses() {
        let q = QuadExt::new(rat_int(3), rat_int(5), rat_int(0));
        assert!(q.is_base());
        assert_eq!(q, QuadExt::base(rat_int(3)));
        assert_eq!(q.to_string(), "3");
        let r = QuadExt::new(rat(1, 2), rat_int(1), rat_int(-2));
        assert_eq!(r.to_string(), "1/2 + 1*sqrt(-2)");
    }

    #[test]
    fn consistency_check() {
        let a = QuadExt::radical(rat_int(1), rat_int(2));
        let b = QuadExt::radical(rat_int(1), rat_int(3));
        let c = QuadExt::base(rat_int(7));
        assert!(QuadExt::check_consistent([&a, &c]).is_ok());
        assert!(matches!(
            QuadExt::check_consistent([&a, &b]),
            Err(Error::InconsistentRadicand(_, _))
        ));
    }

    #[test]
    fn tpoly_ops() {
        let p = TPoly::new(vec![rat_int(2), rat_int(5)]).scaled(&rat(1, 4));
        assert_eq!(p.to_string(), "[1/2, 5/4]");
        assert_eq!(p.eval(&rat_int(1)), rat(7, 4));
        assert_eq!(p.eval(&rat_int(0)), rat(1, 2));
        let sq = TPoly::t().times(&TPoly::t());
        assert_eq!(sq.degree(), Some(2));
        assert_eq!(TPoly::new(vec![rat_int(0), rat_int(0)]), TPoly::nil());
        assert_eq!("[1/2, 5/4]".parse::<TPoly>().unwrap(), p);
        assert_eq!("[]".parse::<TPoly>().unwrap(), TPoly::nil());
    }
}
