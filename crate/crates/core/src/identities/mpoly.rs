//! Sparse multivariate polynomials over the rationals, just enough for the
//! determinant-coefficient elimination.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{format_rat, Rat, Ring};

/// Exponent vector with trailing zeros removed.
type Exps = Vec<u32>;

fn trim(mut e: Exps) -> Exps {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn exp_of(e: &Exps, i: usize) -> u32 {
    e.get(i).copied().unwrap_or(0)
}

fn with_exp(e: &Exps, i: usize, v: u32) -> Exps {
    let mut e = e.clone();
    if e.len() <= i {
        e.resize(i + 1, 0);
    }
    e[i] = v;
    trim(e)
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Exps, Rat>,
}

impl MPoly {
    pub fn constant(c: Rat) -> Self {
        let mut p = MPoly::default();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut p = MPoly::default();
        p.add_term(with_exp(&Vec::new(), i, 1), Rat::one());
        p
    }

    fn add_term(&mut self, e: Exps, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        let slot = self.terms.entry(e.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| exp_of(e, i)).max().unwrap_or(0)
    }

    /// Replaces variable `i` by `q`.
    pub fn substitute(&self, i: usize, q: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        let mut powers = vec![MPoly::constant(Rat::one())];
        for (e, c) in &self.terms {
            let k = exp_of(e, i) as usize;
            while powers.len() <= k {
                let next = powers.last().expect("nonempty").times(q);
                powers.push(next);
            }
            let mut rest = MPoly::default();
            rest.add_term(with_exp(e, i, 0), c.clone());
            out = out.plus(&rest.times(&powers[k]));
        }
        out
    }

    /// `self / x_i` when every term contains `x_i`.
    pub fn div_var(&self, i: usize) -> Option<MPoly> {
        let mut out = MPoly::default();
        for (e, c) in &self.terms {
            let k = exp_of(e, i);
            if k == 0 {
                return None;
            }
            out.add_term(with_exp(e, i, k - 1), c.clone());
        }
        Some(out)
    }

    /// For `self = a·x_i + b` with rational `a ≠ 0` and `b` free of `x_i`, the root `−b/a`.
    pub fn solve_linear(&self, i: usize) -> Option<MPoly> {
        let mut a = Rat::zero();
        let mut b = MPoly::default();
        for (e, c) in &self.terms {
            match exp_of(e, i) {
                0 => b.add_term(e.clone(), c.clone()),
                1 if with_exp(e, i, 0).is_empty() => a += c,
                _ => return None,
            }
        }
        if a.is_zero() {
            return None;
        }
        Some(b.scaled(&-a.recip()))
    }

    /// For `self = a·x_i² + b` with rationals `a ≠ 0`, `b`: the value `x_i² = −b/a`.
    pub fn solve_square(&self, i: usize) -> Option<Rat> {
        let mut a = Rat::zero();
        let mut b = Rat::zero();
        for (e, c) in &self.terms {
            if e.is_empty() {
                b += c;
            } else if *e == with_exp(&Vec::new(), i, 2) {
                a += c;
            } else {
                return None;
            }
        }
        (!a.is_zero()).then(|| -b / a)
    }

    /// Rewrites `x_i² = v` throughout.
    pub fn reduce_square(&self, i: usize, v: &Rat) -> MPoly {
        let mut out = MPoly::default();
        for (e, c) in &self.terms {
            let k = exp_of(e, i);
            out.add_term(with_exp(e, i, k % 2), c * num_traits::pow(v.clone(), (k / 2) as usize));
        }
        out
    }

    /// Splits off the variables `i ≥ first`: returns, for each exponent pattern of those
    /// variables, the coefficient as a polynomial in the variables below `first`.
    pub fn split_at(&self, first: usize) -> BTreeMap<Exps, MPoly> {
        let mut out: BTreeMap<Exps, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let (lo, hi) = if e.len() > first { e.split_at(first) } else { (&e[..], &[][..]) };
            out.entry(trim(hi.to_vec())).or_default().add_term(lo.to_vec(), c.clone());
        }
        out
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rat::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            s.push_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { names[v].to_string() } else { format!("{}^{k}", names[v]) })
                .collect();
            match (mono.is_empty(), a.is_one()) {
                (true, _) => s.push_str(&format_rat(&a)),
                (false, true) => s.push_str(&mono.join("*")),
                (false, false) => s.push_str(&format!("{}*{}", format_rat(&a), mono.join("*"))),
            }
        }
        s
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..16).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.display_with(&refs))
    }
}

impl Ring for MPoly {
    fn nil() -> Self {
        MPoly::default()
    }
    fn unit() -> Self {
        MPoly::constant(Rat::one())
    }
    fn is_nil(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = MPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let n = ea.len().max(eb.len());
                let e: Exps = (0..n).map(|i| exp_of(ea, i) + exp_of(eb, i)).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
    fn negated(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
    fn from_rat(r: &Rat) -> Self {
        MPoly::constant(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn x(i: usize) -> MPoly {
        MPoly::var(i)
    }

    #[test]
    fn algebra_and_elimination() {
        // (x0 + x1)^2 − x0^2 − x1^2 = 2 x0 x1
        let s = x(0).plus(&x(1));
        let p = s.times(&s).minus(&x(0).times(&x(0))).minus(&x(1).times(&x(1)));
        assert_eq!(p, x(0).times(&x(1)).scaled(&rat(2, 1)));
        assert_eq!(p.div_var(0).unwrap(), x(1).scaled(&rat(2, 1)));
        assert!(p.div_var(2).is_none());
        // 3 x2 + x0 − 6 = 0 → x2 = 2 − x0/3
        let l = x(2).scaled(&rat(3, 1)).plus(&x(0)).minus(&MPoly::constant(rat(6, 1)));
        assert_eq!(l.solve_linear(2).unwrap(), MPoly::constant(rat(2, 1)).minus(&x(0).scaled(&rat(1, 3))));
        let q = x(1).times(&x(1)).scaled(&rat(-5, 1)).minus(&MPoly::constant(rat(5, 1)));
        assert_eq!(q.solve_square(1), Some(rat(-1, 1)));
        let quartic = x(1).times(&x(1)).times(&x(1)).times(&x(1));
        assert_eq!(quartic.reduce_square(1, &rat(-1, 1)).as_constant(), Some(rat(1, 1)));
        assert_eq!(p.substitute(1, &MPoly::constant(rat(0, 1))), MPoly::default());
        assert_eq!(p.display_with(&["a", "b"]), "2*a*b");
    }
}
