//! Formal polynomials with rational coefficients in multiple zeta and zeta-star symbols.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::precreal::PrecReal;
use super::sums::mzv_numeric;
use super::zeta_single::zeta_single;
use crate::error::{Error, Result};
use crate::exact::{format_rat, parse_rat, Rat};
use crate::index::{star_expansion, IndexWord};

/// `ζ(w)` or `ζ*(w)` for a nonempty word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub word: IndexWord,
    pub star: bool,
}

impl Symbol {
    pub fn zeta(word: IndexWord) -> Self {
        Symbol { word, star: false }
    }

    pub fn zeta_star(word: IndexWord) -> Self {
        Symbol { word, star: true }
    }

    /// A depth-one star symbol is the same number as the plain one.
    fn normalized(self) -> Self {
        if self.word.depth() == 1 {
            Symbol { star: false, ..self }
        } else {
            self
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.star { "zeta*" } else { "zeta" };
        write!(f, "{name}({})", self.word)
    }
}

impl Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A commutative product of symbols, kept sorted.
pub type Monomial = Vec<Symbol>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZetaPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl ZetaPoly {
    pub fn zero() -> Self {
        ZetaPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = ZetaPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    /// The symbol as a polynomial; the empty word gives the constant 1.
    pub fn symbol(s: Symbol) -> Self {
        if s.word.is_empty() {
            return ZetaPoly::constant(Rat::one());
        }
        let mut p = ZetaPoly::zero();
        p.add_term(vec![s.normalized()], Rat::one());
        p
    }

    pub fn zeta(w: IndexWord) -> Self {
        ZetaPoly::symbol(Symbol::zeta(w))
    }

    pub fn zeta_star(w: IndexWord) -> Self {
        ZetaPoly::symbol(Symbol::zeta_star(w))
    }

    /// Adds `c · m`; `m` need not be sorted.
    pub fn add_term(&mut self, mut m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        m.sort();
        let e = self.terms.entry(m).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(Rat::zero)
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = self.terms.keys().flatten().cloned().collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn add(&self, o: &ZetaPoly) -> ZetaPoly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &ZetaPoly) -> ZetaPoly {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn scale(&self, r: &Rat) -> ZetaPoly {
        if r.is_zero() {
            return ZetaPoly::zero();
        }
        ZetaPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect() }
    }

    pub fn mul(&self, o: &ZetaPoly) -> ZetaPoly {
        let mut p = ZetaPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let mut m = m1.clone();
                m.extend(m2.iter().cloned());
                p.add_term(m, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> ZetaPoly {
        (0..k).fold(ZetaPoly::constant(Rat::one()), |acc, _| acc.mul(self))
    }

    /// Replaces every symbol for which `f` returns a polynomial.
    pub fn substitute<F>(&self, mut f: F) -> ZetaPoly
    where
        F: FnMut(&Symbol) -> Option<ZetaPoly>,
    {
        let mut cache: HashMap<Symbol, ZetaPoly> = HashMap::new();
        let mut out = ZetaPoly::zero();
        for (m, c) in &self.terms {
            let mut prod = ZetaPoly::constant(c.clone());
            for s in m {
                let image = cache
                    .entry(s.clone())
                    .or_insert_with(|| f(s).unwrap_or_else(|| ZetaPoly::symbol(s.clone())))
                    .clone();
                prod = prod.mul(&image);
            }
            out = out.add(&prod);
        }
        out
    }

    /// Rewrites every star symbol as a sum of plain ones.
    pub fn expand_stars(&self) -> ZetaPoly {
        self.substitute(|s| {
            if !s.star {
                return None;
            }
            let combo = star_expansion(&s.word).expect("symbols are nonempty");
            let mut p = ZetaPoly::zero();
            for (w, c) in combo.iter() {
                p.add_term(vec![Symbol::zeta(w.clone())], Rat::from_integer(c.into()));
            }
            Some(p)
        })
    }
}

impl fmt::Display for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let syms: Vec<String> = m.iter().map(|s| s.to_string()).collect();
            if m.is_empty() {
                write!(f, "{}", format_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{}", syms.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rat(&a), syms.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    coeff: String,
    monomial: Vec<Vec<String>>,
}

impl Serialize for ZetaPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<WireTerm> = self
            .terms
            .iter()
            .map(|(m, c)| WireTerm {
                coeff: format_rat(c),
                monomial: m
                    .iter()
                    .map(|sym| {
                        let mut v = vec![sym.word.to_string()];
                        if sym.star {
                            v.push("*".to_string());
                        }
                        v
                    })
                    .collect(),
            })
            .collect();
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZetaPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = Vec::<WireTerm>::deserialize(d)?;
        let mut p = ZetaPoly::zero();
        for t in wire {
            let c = parse_rat(&t.coeff).map_err(D::Error::custom)?;
            let mut m = Vec::new();
            for sym in t.monomial {
                let (word, star) = match sym.as_slice() {
                    [w] => (w, false),
                    [w, s] if s == "*" => (w, true),
                    _ => return Err(D::Error::custom(format!("bad symbol {sym:?}"))),
                };
                let word: IndexWord = word.parse().map_err(D::Error::custom)?;
                if word.is_empty() {
                    return Err(D::Error::custom("empty symbol word"));
                }
                m.push(Symbol { word, star }.normalized());
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}

/// Numeric value of a zeta polynomial. Depth-one symbols use [`zeta_single`]; the
/// others use [`mzv_numeric`], star symbols after expansion into plain ones.
pub fn eval_zeta_poly(p: &ZetaPoly, digits: u32) -> Result<PrecReal> {
    let mut cache: HashMap<IndexWord, PrecReal> = HashMap::new();
    let mut plain = |w: &IndexWord| -> Result<PrecReal> {
        if let Some(v) = cache.get(w) {
            return Ok(v.clone());
        }
        if !w.is_admissible() {
            return Err(Error::NotAdmissible(w.to_string()));
        }
        let v = match w.parts() {
            [k] => zeta_single(*k, digits + 2)?,
            _ => mzv_numeric(w, digits + 2)?,
        };
        cache.insert(w.clone(), v.clone());
        Ok(v)
    };
    let mut total = PrecReal::zero(digits);
    for (m, c) in &p.terms {
        let mut prod = PrecReal::exact(&Rat::one(), digits);
        for s in m {
            let v = if s.star {
                let mut acc = PrecReal::zero(digits);
                for (w, _) in star_expansion(&s.word)?.iter() {
                    acc = acc.add(&plain(w)?);
                }
                acc
            } else {
                plain(&s.word)?
            };
            prod = prod.mul(&v);
        }
        total = total.add(&prod.scale(c));
    }
    total.places = digits + 5;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn w(s: &str) -> IndexWord {
        s.parse().unwrap()
    }

    #[test]
    fn algebra_and_normal_form() {
        let z3 = ZetaPoly::zeta(w("3"));
        let p = z3.sub(&ZetaPoly::constant(rat(1, 1)));
        assert_eq!(p.to_string(), "-1 + zeta(3)");
        let q = p.mul(&p);
        assert_eq!(q.len(), 3);
        assert!(q.sub(&q).is_zero());
        assert_eq!(ZetaPoly::zeta_star(w("4")), ZetaPoly::zeta(w("4")));
        assert_eq!(ZetaPoly::zeta(IndexWord::empty()), ZetaPoly::constant(rat(1, 1)));
        let e = ZetaPoly::zeta_star(w("2,1")).expand_stars();
        assert_eq!(e, ZetaPoly::zeta(w("2,1")).add(&z3));
    }

    #[test]
    fn json_round_trip() {
        let p = ZetaPoly::zeta(w("2,1"))
            .mul(&ZetaPoly::zeta_star(w("3,1")))
            .scale(&rat(-2, 3))
            .add(&ZetaPoly::constant(rat(1, 4)));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"coeff":"1/4","monomial":[]},{"coeff":"-2/3","monomial":[["2,1"],["3,1","*"]]}]"#
        );
        let back: ZetaPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<ZetaPoly>(r#"[{"coeff":"1","monomial":[["2","x"]]}]"#).is_err());
    }

    #[test]
    fn evaluation() {
        let z3 = ZetaPoly::zeta(w("3"));
        let a = eval_zeta_poly(&z3.sub(&ZetaPoly::constant(rat(1, 1))), 12).unwrap();
        assert!((a.to_f64() - 0.2020569031595942).abs() < 1e-12);
        let b = eval_zeta_poly(&z3.scale(&rat(2, 1)), 12).unwrap();
        assert!((b.to_f64() - 2.4041138063191885).abs() < 1e-12);
        let z = eval_zeta_poly(&ZetaPoly::zero(), 12).unwrap();
        assert_eq!(z.radius, 0.0);
        assert!(z.to_f64() == 0.0);
        // ζ*(2,1) = ζ(2,1) + ζ(3) = 2ζ(3)
        let c = eval_zeta_poly(&ZetaPoly::zeta_star(w("2,1")), 12).unwrap();
        assert!(c.distance(&b) <= c.radius + b.radius);
    }
}
