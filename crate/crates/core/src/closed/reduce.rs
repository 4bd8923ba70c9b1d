//! Rewriting zeta polynomials into polynomials in single zeta values.

use serde::Serialize;

use crate::exact::rat;
use crate::index::IndexWord;
use crate::numeric::{granville_star, height_one_mzv, Symbol, ZetaPoly};

/// Outcome of [`reduce_to_single`]: the rewritten polynomial and the symbols left alone.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Reduced {
    pub poly: ZetaPoly,
    pub flagged: Vec<Symbol>,
}

impl Reduced {
    pub fn is_complete(&self) -> bool {
        self.flagged.is_empty()
    }
}

/// `ζ*(3,1) = (5/4) ζ(4)`.
///
/// The alternative `(ζ(3) + ζ(4))/2` is ruled out numerically by the evaluation of
/// `ζ(3,1) + ζ(4)`; the acceptance tests repeat that comparison.
pub fn star_three_one() -> ZetaPoly {
    ZetaPoly::zeta(IndexWord::from_parts_unchecked(vec![4])).scale(&rat(5, 4))
}

fn plain_rule(w: &IndexWord) -> Option<ZetaPoly> {
    match w.as_height_one() {
        Some((m, _)) if w.depth() == 1 => Some(ZetaPoly::zeta(IndexWord::from_parts_unchecked(vec![m]))),
        Some((m, ell)) if m >= 2 => Some(height_one_mzv(m - 2, ell as u32)),
        _ => None,
    }
}

fn star_rule(w: &IndexWord) -> Option<ZetaPoly> {
    if w.parts() == [3, 1] {
        return Some(star_three_one());
    }
    if let Some((2, ell)) = w.as_height_one() {
        return granville_star(ell as u32 + 2).ok();
    }
    // fall back to the plain expansion when every piece is height one
    let combo = crate::index::star_expansion(w).ok()?;
    let mut p = ZetaPoly::zero();
    for (v, c) in combo.iter() {
        p = p.add(&plain_rule(v)?.scale(&crate::exact::rat_int(c)));
    }
    Some(p)
}

/// Rewrites `ζ(m, {1}_ℓ)` by the height-one generating function, `ζ*(2, {1}_ℓ)` by
/// Granville's formula, `ζ*(3,1)` by [`star_three_one`], and other star symbols through
/// their plain expansion when each piece is height one. Anything else is left in place
/// and reported in `flagged`.
pub fn reduce_to_single(p: &ZetaPoly) -> Reduced {
    let mut flagged = Vec::new();
    let poly = p.substitute(|s| {
        let r = if s.star { star_rule(&s.word) } else { plain_rule(&s.word) };
        if r.is_none() {
            flagged.push(s.clone());
        }
        r
    });
    flagged.sort();
    flagged.dedup();
    Reduced { poly, flagged }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::eval_zeta_poly;

    fn z(s: &str) -> ZetaPoly {
        ZetaPoly::zeta(s.parse().unwrap())
    }

    fn zs(s: &str) -> ZetaPoly {
        ZetaPoly::zeta_star(s.parse().unwrap())
    }

    #[test]
    fn documented_rewrites() {
        assert_eq!(reduce_to_single(&z("2,1")).poly, z("3"));
        assert_eq!(reduce_to_single(&zs("2,1")).poly, z("3").scale(&rat(2, 1)));
        assert_eq!(reduce_to_single(&zs("3,1")).poly, z("4").scale(&rat(5, 4)));
        let r = reduce_to_single(&z("2,2").add(&zs("3,1")));
        assert_eq!(r.flagged, vec![Symbol::zeta("2,2".parse().unwrap())]);
        assert!(!r.is_complete());
    }

    #[test]
    fn idempotent_and_value_preserving() {
        let inputs = [
            z("3,1,1").mul(&zs("2,1,1")),
            zs("4,1").sub(&z("2")),
            zs("3,1,1").add(&z("2,2")),
        ];
        for p in inputs {
            let once = reduce_to_single(&p);
            let twice = reduce_to_single(&once.poly);
            assert_eq!(once.poly, twice.poly);
            let a = eval_zeta_poly(&p, 12).unwrap();
            let b = eval_zeta_poly(&once.poly, 12).unwrap();
            assert!(a.distance(&b) <= a.radius + b.radius + 1e-12, "{p}: {a} vs {b}");
        }
    }
}
