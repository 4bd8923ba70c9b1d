//! Symbolic evaluations of special families of multiple zeta values.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::zetapoly::ZetaPoly;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, rat_int, Rat};
use crate::index::{compositions_of_depth, IndexWord};

type Bivariate = BTreeMap<(u32, u32), ZetaPoly>;

fn bivariate_mul(a: &Bivariate, b: &Bivariate, max_x: u32, max_y: u32) -> Bivariate {
    let mut out = Bivariate::new();
    for (&(ax, ay), pa) in a {
        for (&(bx, by), pb) in b {
            let (x, y) = (ax + bx, ay + by);
            if x > max_x || y > max_y {
                continue;
            }
            let e = out.entry((x, y)).or_default();
            *e = e.add(&pa.mul(pb));
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// `ζ(m+2, {1}_n)` as a polynomial in single zeta values, read off from
///
/// `Σ_{m,n≥0} ζ(m+2,{1}_n) x^{m+1} y^{n+1} = 1 − exp(Σ_{k≥2} (x^k + y^k − (x+y)^k) ζ(k)/k)`.
pub fn height_one_mzv(m: u32, n: u32) -> ZetaPoly {
    let (mx, my) = (m + 1, n + 1);
    // the exponent: only mixed monomials x^a y^b with a, b ≥ 1 survive
    let mut a = Bivariate::new();
    for k in 2..=mx + my {
        let z = ZetaPoly::zeta(IndexWord::from_parts_unchecked(vec![k]));
        for i in 1..k {
            if i > mx || k - i > my {
                continue;
            }
            let c = -Rat::new(binomial(k as u64, i as u64), BigInt::from(k));
            a.insert((i, k - i), z.scale(&c));
        }
    }
    // exp(A) − 1 up to A^J, J = min(mx, my)
    let mut power = a.clone();
    let mut total = Bivariate::new();
    for j in 1..=mx.min(my) {
        let inv = Rat::new(BigInt::one(), factorial(j as u64));
        for (k, p) in &power {
            let e = total.entry(*k).or_default();
            *e = e.add(&p.scale(&inv));
        }
        power = bivariate_mul(&power, &a, mx, my);
    }
    total.get(&(mx, my)).map(|p| p.scale(&-Rat::one())).unwrap_or_default()
}

/// `ζ(m+1, {1}_{n-1}) = Σ_{i=1}^{min(m,n)} (−1)^{i−1} Σ ζ(𝐦 + 𝐧)` over pairs of
/// compositions of `m` and `n` of the same depth `i`, added componentwise.
pub fn kaneko_sakata(m: u32, n: u32) -> Result<ZetaPoly> {
    if m < 1 || n < 1 {
        return Err(Error::Precondition(format!("kaneko_sakata needs m, n >= 1, got ({m}, {n})")));
    }
    let mut p = ZetaPoly::zero();
    for i in 1..=m.min(n) as usize {
        let sign = if i % 2 == 1 { Rat::one() } else { -Rat::one() };
        for a in compositions_of_depth(m, i) {
            for b in compositions_of_depth(n, i) {
                let parts: Vec<u32> = a.parts().iter().zip(b.parts()).map(|(x, y)| x + y).collect();
                p.add_term(vec![super::zetapoly::Symbol::zeta(IndexWord::from_parts_unchecked(parts))], sign.clone());
            }
        }
    }
    Ok(p)
}

/// `ζ*(2, {1}_{ℓ−2}) = (ℓ − 1) ζ(ℓ)`.
pub fn granville_star(ell: u32) -> Result<ZetaPoly> {
    if ell < 2 {
        return Err(Error::Precondition(format!("granville_star needs ell >= 2, got {ell}")));
    }
    Ok(ZetaPoly::zeta(IndexWord::from_parts_unchecked(vec![ell])).scale(&rat_int(ell as i64 - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::numeric::zetapoly::eval_zeta_poly;
    use crate::numeric::{mzv_numeric, zeta_single};

    fn z(k: u32) -> ZetaPoly {
        ZetaPoly::zeta(IndexWord::from_parts_unchecked(vec![k]))
    }

    #[test]
    fn small_height_one_values() {
        assert_eq!(height_one_mzv(0, 0), z(2));
        assert_eq!(height_one_mzv(0, 1), z(3));
        assert_eq!(height_one_mzv(1, 0), z(3));
        // ζ(3,1) = (3/2)ζ(4) − ζ(2)²/2 and ζ(2,1,1) = ζ(4)
        assert_eq!(height_one_mzv(1, 1), z(4).scale(&rat(3, 2)).sub(&z(2).pow(2).scale(&rat(1, 2))));
        assert_eq!(height_one_mzv(0, 2), z(4));
        // ζ(4,1) = 2ζ(5) − ζ(2)ζ(3)
        assert_eq!(height_one_mzv(2, 1), z(5).scale(&rat(2, 1)).sub(&z(2).mul(&z(3))));
    }

    #[test]
    fn duality_symmetry() {
        // ζ(m+2,{1}_n) = ζ(n+2,{1}_m)
        for m in 0..4 {
            for n in 0..4 {
                assert_eq!(height_one_mzv(m, n), height_one_mzv(n, m));
            }
        }
    }

    #[test]
    fn kaneko_sakata_examples() {
        assert_eq!(kaneko_sakata(1, 1).unwrap(), z(2));
        assert_eq!(kaneko_sakata(2, 1).unwrap(), z(3));
        let k22 = kaneko_sakata(2, 2).unwrap();
        assert_eq!(k22, z(4).sub(&ZetaPoly::zeta("2,2".parse().unwrap())));
        let v = eval_zeta_poly(&k22, 12).unwrap();
        let direct = mzv_numeric(&"3,1".parse().unwrap(), 12).unwrap();
        assert!(v.distance(&direct) < 1e-10);
        assert!(kaneko_sakata(0, 1).is_err());
    }

    #[test]
    fn height_one_agrees_with_kaneko_sakata() {
        for m in 1..=4u32 {
            for n in 1..=(5 - m) {
                let a = eval_zeta_poly(&height_one_mzv(m - 1, n - 1), 12).unwrap();
                let b = eval_zeta_poly(&kaneko_sakata(m, n).unwrap(), 12).unwrap();
                assert!(a.distance(&b) < 1e-9, "m={m} n={n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn granville_values() {
        assert_eq!(granville_star(2).unwrap(), z(2));
        assert_eq!(granville_star(3).unwrap(), z(3).scale(&rat(2, 1)));
        assert_eq!(granville_star(4).unwrap(), z(4).scale(&rat(3, 1)));
        let lhs = eval_zeta_poly(&ZetaPoly::zeta_star("2,1,1".parse().unwrap()), 12).unwrap();
        let rhs = zeta_single(4, 12).unwrap().scale(&rat(3, 1));
        assert!(lhs.distance(&rhs) < 1e-10);
        assert!(granville_star(1).is_err());
    }
}
