//! The identity catalogue: one case generator per entry.

use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::grid::{guard, Grid};
use super::interp_det::{interp_det_solvable_k4, interp_det_unsolvable_k5_half};
use super::{Case, Check, Identity};
use crate::closed::{e_n, stirling_series_trunc_pieces};
use crate::error::{Error, Result};
use crate::exact::symmetric::{
    harmonic_product_poly, hoffman_ihara_half_bell, hoffman_ihara_half_partition, plain_ones_bell, plain_ones_det,
    plain_ones_macdonald, plain_ones_stirling, star_ones_bell, star_ones_binomial, star_ones_det,
    star_ones_macdonald, star_ones_recurrence,
};
use crate::exact::{
    binomial, factorial, harmonic, harmonic_column, hessenberg_det, hessenberg_expand, interp_at, interp_trunc, inv_pow,
    macdonald_p, macdonald_q, rat, rat_to_f64, series_partial_sum, zt_sequence, zt_trunc, zts_trunc, QuadExt, Rat,
    Ring, TPoly,
};
use crate::index::{stuffle, words_up_to_weight, IndexWord};

fn p(name: &'static str, v: impl ToString) -> (&'static str, String) {
    (name, v.to_string())
}

fn bin(n: u64, k: u64) -> Rat {
    Rat::from_integer(binomial(n, k))
}

fn alt(j: u64) -> Rat {
    if j.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}


/// Nonempty words of weight at most `w`.
fn words(w: i64) -> Result<Vec<IndexWord>> {
    if w > 16 {
        return Err(Error::Guard(format!("word weight {w} too large")));
    }
    Ok(words_up_to_weight(w.max(0) as u32).into_iter().filter(|v| !v.is_empty()).collect())
}

fn summand_forms(g: &Grid) -> Result<Vec<Case>> {
    let (ns, l1s, l2s) = (g.ints("n", 1)?, g.ints("l1", 0)?, g.ints("l2", 0)?);
    guard(&[ns.len(), l1s.len(), l2s.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &l1 in &l1s {
            for &l2 in &l2s {
                out.push(Case::new(vec![p("n", n), p("l1", l1), p("l2", l2)], move || {
                    let m = (n - 1) as u64;
                    let (l1, l2) = (l1 as usize, l2 as usize);
                    let star = zts_trunc(m, &IndexWord::ones(l1));
                    let plain = zt_trunc(m, &IndexWord::ones(l2));
                    let q = macdonald_q(l1, &harmonic_column(m, l1));
                    let pp = macdonald_p(l2, &harmonic_column(m, l2));
                    let holds = star == q && plain == pp;
                    Ok(Check { lhs: format!("{} * {}", star, plain), rhs: format!("{} * {}", q, pp), holds })
                }));
            }
        }
    }
    Ok(out)
}

fn stirling_truncation(g: &Grid) -> Result<Vec<Case>> {
    let (ns, l2s, r1s, r2s) = (g.ints("N", 0)?, g.ints("l2", 0)?, g.ints("r1", 1)?, g.ints("r2", 1)?);
    guard(&[ns.len(), l2s.len(), r1s.len(), r2s.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &l2 in l2s.iter().filter(|&&l| l <= n) {
            for &r1 in &r1s {
                for &r2 in &r2s {
                    let params = vec![p("N", n), p("l2", l2), p("r1", r1), p("r2", r2)];
                    out.push(Case::new(params, move || {
                        let (n, l2, r1, r2) = (n as u64, l2 as usize, r1 as u32, r2 as u32);
                        let pieces = stirling_series_trunc_pieces(n, l2, r1, r2)?;
                        Ok(Check::eq(series_partial_sum(n, 0, l2, r1, r2), pieces.total()))
                    }));
                }
            }
        }
    }
    Ok(out)
}

fn finite_difference(g: &Grid) -> Result<Vec<Case>> {
    let (ms, xs) = (g.ints("m", 0)?, g.rats("x")?);
    guard(&[ms.len(), xs.len()])?;
    let mut out = Vec::new();
    for &m in &ms {
        for x in &xs {
            // the identity needs x ∉ {0, −1, …, −m}
            if x.is_integer() && !x.is_positive() && -x.to_integer() <= m.into() {
                continue;
            }
            let x = x.clone();
            out.push(Case::new(vec![p("m", m), p("x", &x)], move || {
                let m = m as u64;
                // binom(x+m, m) = Π_{j=1..m} (x+j)/j
                let b = (1..=m).fold(Rat::one(), |acc, j| acc * (&x + Rat::from_integer(j.into())) / Rat::from_integer(j.into()));
                let lhs = (&x * b).recip();
                let rhs = (0..=m).fold(Rat::zero(), |acc, k| acc + bin(m, k) * alt(k) / (&x + Rat::from_integer(k.into())));
                Ok(Check::eq(lhs, rhs))
            }));
        }
    }
    Ok(out)
}

fn nested_binomial(g: &Grid) -> Result<Vec<Case>> {
    let (ns, ks, ls) = (g.ints("n", 1)?, g.ints("k", 0)?, g.ints("l", 0)?);
    guard(&[ns.len(), ks.len(), ls.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &k in &ks {
            for &l in &ls {
                out.push(Case::new(vec![p("n", n), p("k", k), p("l", l)], move || {
                    let (n, k, l) = (n as u64, k as u32, l as usize);
                    let seq = zt_sequence(n, &IndexWord::ones(l), true);
                    let lhs = (1..=n).fold(Rat::zero(), |acc, j| acc + bin(n, j) * alt(j - 1) * inv_pow(j, k) * &seq[j as usize]);
                    let rhs = if k == 0 {
                        inv_pow(n, l as u32)
                    } else {
                        let mut parts = vec![1u32; k as usize - 1];
                        parts.push(l as u32 + 1);
                        zts_trunc(n, &IndexWord::new(parts)?)
                    };
                    Ok(Check::eq(lhs, rhs))
                }));
            }
        }
    }
    Ok(out)
}

/// `a_j = H_j^(s)`, with `H_j^(0) = j`.
fn test_sequence(j: u64, s: u32) -> Rat {
    if s == 0 {
        Rat::from_integer(j.into())
    } else {
        harmonic(j, s)
    }
}

fn iterated_sum(g: &Grid) -> Result<Vec<Case>> {
    let (ns, ks, ss) = (g.ints("n", 1)?, g.ints("k", 0)?, g.ints("s", 0)?);
    guard(&[ns.len(), ks.len(), ss.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &k in &ks {
            for &s in &ss {
                out.push(Case::new(vec![p("n", n), p("k", k), p("s", s)], move || {
                    let (n, k, s) = (n as u64, k as u32, s as u32);
                    let a: Vec<Rat> = (0..=n).map(|j| test_sequence(j, s)).collect();
                    let lhs = (1..=n).fold(Rat::zero(), |acc, j| acc + bin(n, j) * alt(j - 1) * inv_pow(j, k) * &a[j as usize]);
                    // F_0(i) = Σ_{j≤i} binom(i,j)(−1)^{j−1} a_j, F_m(i) = Σ_{i'≤i} F_{m−1}(i')/i'
                    let mut f: Vec<Rat> = (0..=n)
                        .map(|i| (1..=i).fold(Rat::zero(), |acc, j| acc + bin(i, j) * alt(j - 1) * &a[j as usize]))
                        .collect();
                    for _ in 0..k {
                        let mut run = Rat::zero();
                        for (i, v) in f.iter_mut().enumerate().skip(1) {
                            run += &*v / Rat::from_integer(i.into());
                            *v = run.clone();
                        }
                    }
                    Ok(Check::eq(lhs, f[n as usize].clone()))
                }));
            }
        }
    }
    Ok(out)
}

/// All tuples in `1..=max` of the given length.
fn tuples(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=max).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn binomial_duality(g: &Grid) -> Result<Vec<Case>> {
    let (ns, rs) = (g.ints("N", 1)?, g.ints("r", 1)?);
    let (amax, bmax) = (*g.ints("a", 1)?.last().unwrap_or(&0), *g.ints("b", 1)?.last().unwrap_or(&0));
    let per_n: usize = rs.iter().map(|&r| ((amax * bmax) as usize).saturating_pow(r as u32)).sum();
    guard(&[ns.len(), per_n])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &r in &rs {
            for a in tuples(r as usize, amax as u32) {
                for b in tuples(r as usize, bmax as u32) {
                    let params = vec![p("N", n), p("a", format!("{a:?}")), p("b", format!("{b:?}"))];
                    let (a, b) = (a.clone(), b);
                    out.push(Case::new(params, move || {
                        let r = a.len();
                        // left word (a1, {1}_{b1−1}, a2+1, {1}_{b2−1}, …)
                        let mut left = Vec::new();
                        // right word (∪_{i<r} {{1}_{a_i−1}, b_i+1}, {1}_{a_r−1}, b_r)
                        let mut right = Vec::new();
                        for i in 0..r {
                            left.push(if i == 0 { a[i] } else { a[i] + 1 });
                            left.extend(std::iter::repeat_n(1, b[i] as usize - 1));
                            right.extend(std::iter::repeat_n(1, a[i] as usize - 1));
                            right.push(if i + 1 < r { b[i] + 1 } else { b[i] });
                        }
                        let n = n as u64;
                        let rest = IndexWord::new(left[1..].to_vec())?;
                        let seq = zt_sequence(n, &rest, true);
                        let lhs = (1..=n).fold(Rat::zero(), |acc, m| {
                            acc + bin(n, m) * alt(m - 1) * inv_pow(m, left[0]) * &seq[m as usize]
                        });
                        Ok(Check::eq(lhs, zts_trunc(n, &IndexWord::new(right)?)))
                    }));
                }
            }
        }
    }
    Ok(out)
}

fn conversion(g: &Grid, to_star: bool) -> Result<Vec<Case>> {
    let ns = g.ints("N", 0)?;
    let ws = words(*g.ints("weight", 1)?.last().unwrap_or(&0))?;
    guard(&[ns.len(), ws.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for w in &ws {
            let w = w.clone();
            out.push(Case::new(vec![p("N", n), p("word", &w)], move || {
                let n = n as u64;
                let mut rhs = Rat::zero();
                for (c, plus) in w.contractions()? {
                    if to_star {
                        rhs += zt_trunc(n, &c);
                    } else {
                        rhs += alt(plus as u64) * zts_trunc(n, &c);
                    }
                }
                let lhs = if to_star { zts_trunc(n, &w) } else { zt_trunc(n, &w) };
                Ok(Check::eq(lhs, rhs))
            }));
        }
    }
    Ok(out)
}

fn conv_star(g: &Grid) -> Result<Vec<Case>> {
    conversion(g, true)
}

fn conv_plain(g: &Grid) -> Result<Vec<Case>> {
    conversion(g, false)
}

fn stuffle_cases(g: &Grid) -> Result<Vec<Case>> {
    let ns = g.ints("N", 0)?;
    let ws = words(*g.ints("weight", 1)?.last().unwrap_or(&0))?;
    guard(&[ns.len(), ws.len(), ws.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for a in &ws {
            for b in &ws {
                let (a, b) = (a.clone(), b.clone());
                out.push(Case::new(vec![p("N", n), p("a", &a), p("b", &b)], move || {
                    let n = n as u64;
                    let rhs = stuffle(&a, &b).iter().fold(Rat::zero(), |acc, c| acc + zt_trunc(n, c));
                    Ok(Check::eq(zt_trunc(n, &a) * zt_trunc(n, &b), rhs))
                }));
            }
        }
    }
    Ok(out)
}

fn combination(g: &Grid) -> Result<Vec<Case>> {
    let (ns, l1s, l2s) = (g.ints("n", 0)?, g.ints("l1", 0)?, g.ints("l2", 0)?);
    guard(&[ns.len(), l1s.len(), l2s.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &l1 in &l1s {
            for &l2 in &l2s {
                out.push(Case::new(vec![p("n", n), p("l1", l1), p("l2", l2)], move || {
                    let n = n as u64;
                    let (o1, o2) = (IndexWord::ones(l1 as usize), IndexWord::ones(l2 as usize));
                    let contractions = if l1 == 0 { vec![IndexWord::empty()] } else { o1.contractions()?.into_iter().map(|(c, _)| c).collect() };
                    let mut rhs = Rat::zero();
                    for c in &contractions {
                        for a in stuffle(&o2, c) {
                            rhs += zt_trunc(n, &a);
                        }
                    }
                    Ok(Check::eq(zts_trunc(n, &o1) * zt_trunc(n, &o2), rhs))
                }));
            }
        }
    }
    Ok(out)
}

fn tp(c: &[Rat]) -> TPoly {
    TPoly::new(c.to_vec())
}

/// `ζ^t_n({1}_k)` closed forms valid for all `t`, and the `t = 1/2` determinants.
fn interp_forms(n: u64, k: usize) -> Result<Check> {
    let poly = interp_trunc(n, k as u32);
    let h: Vec<TPoly> = harmonic_column(n, k.max(4)).into_iter().map(TPoly::constant).collect();
    let (h1, h2, h3, h4) = (&h[0], &h[1], &h[2], &h[3]);
    let t = TPoly::t();
    let c = |v: i64| TPoly::constant(rat(v, 1));
    let kfact = Rat::from_integer(factorial(k as u64));
    let mut bad: Vec<String> = Vec::new();
    let closed = match k {
        1 => h1.clone(),
        2 => h1.times(h1).plus(&tp(&[rat(-1, 1), rat(2, 1)]).times(h2)).scaled(&rat(1, 2)),
        3 => h1.times(h1).times(h1)
            .plus(&tp(&[rat(-3, 1), rat(6, 1)]).times(h1).times(h2))
            .plus(&tp(&[rat(2, 1), rat(-6, 1), rat(6, 1)]).times(h3))
            .scaled(&rat(1, 6)),
        4 => {
            let u = t.scaled(&rat(2, 1)).minus(&c(1));
            let q = tp(&[rat(1, 1), rat(-2, 1), rat(2, 1)]);
            h1.times(h1).times(h1).times(h1)
                .plus(&u.scaled(&rat(6, 1)).times(h1).times(h1).times(h2))
                .plus(&tp(&[rat(8, 1), rat(-24, 1), rat(24, 1)]).times(h1).times(h3))
                .plus(&u.times(&u).scaled(&rat(3, 1)).times(h2).times(h2))
                .plus(&u.times(&q).scaled(&rat(6, 1)).times(h4))
                .scaled(&rat(1, 24))
        }
        _ => return Err(Error::Precondition(format!("interp-examples covers k <= 4, got {k}"))),
    };
    if closed != poly {
        bad.push(format!("closed form k={k}: {closed}"));
    }
    // determinants over ℚ[t] (k = 2) and ℚ[t](√(12t²−12t+1)) (k = 3)
    match k {
        2 => {
            let det = hessenberg_expand(&h[..2], &[tp(&[rat(1, 1), rat(-2, 1)])]);
            if det.scaled(&rat(1, 2)) != poly {
                bad.push(format!("determinant k=2: {det}"));
            }
        }
        3 => {
            let d = tp(&[rat(1, 1), rat(-12, 1), rat(12, 1)]);
            let a = tp(&[rat(3, 2), rat(-3, 1)]);
            let half = TPoly::constant(rat(1, 2));
            let sup = [QuadExt::new(a.clone(), half.clone(), d.clone()), QuadExt::new(a, half.negated(), d)];
            let col: Vec<QuadExt<TPoly>> = h[..3].iter().cloned().map(QuadExt::base).collect();
            let det = hessenberg_expand(&col, &sup);
            if det != QuadExt::base(poly.scaled(&kfact)) {
                bad.push(format!("determinant k=3: {det:?}"));
            }
        }
        _ => {}
    }
    // t = 1/2
    let half = rat(1, 2);
    let at_half = interp_at(n, k as u32, &half);
    let hr: Vec<Rat> = harmonic_column(n, k);
    let sqrt_m2 = |b: Rat| QuadExt::radical(b, rat(-2, 1));
    let sup: Vec<QuadExt> = match k {
        1 => vec![],
        2 => vec![QuadExt::base(rat(0, 1))],
        3 => vec![sqrt_m2(rat(1, 2)), sqrt_m2(rat(-1, 2))],
        _ => vec![QuadExt::base(rat(0, 1)), sqrt_m2(rat(1, 1)), sqrt_m2(rat(-1, 1))],
    };
    let det = hessenberg_det(k, &hr, &sup)?;
    if det != QuadExt::base(&kfact * &at_half) {
        bad.push(format!("t=1/2 determinant k={k}: {det}"));
    }
    let hh = |i: usize| hr[i - 1].clone();
    let half_closed = match k {
        1 => hh(1),
        2 => hh(1) * hh(1) / rat(2, 1),
        3 => (hh(1) * hh(1) * hh(1) + hh(3) / rat(2, 1)) / rat(6, 1),
        _ => (num_traits::pow(hh(1), 4) + rat(2, 1) * hh(1) * hh(3)) / rat(24, 1),
    };
    if half_closed != at_half {
        bad.push(format!("t=1/2 closed form k={k}: {half_closed}"));
    }
    Ok(Check { lhs: poly.to_string(), rhs: if bad.is_empty() { poly.to_string() } else { bad.join("; ") }, holds: bad.is_empty() })
}

fn interp_examples(g: &Grid) -> Result<Vec<Case>> {
    let (ns, ks) = (g.ints("n", 0)?, g.ints("k", 1)?);
    guard(&[ns.len(), ks.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &k in &ks {
            out.push(Case::new(vec![p("n", n), p("k", k)], move || interp_forms(n as u64, k as usize)));
        }
    }
    Ok(out)
}

fn hoffman_ihara_half(g: &Grid) -> Result<Vec<Case>> {
    let (ns, ks) = (g.ints("n", 0)?, g.ints("k", 1)?);
    guard(&[ns.len(), ks.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &k in &ks {
            out.push(Case::new(vec![p("n", n), p("k", k)], move || {
                let (n, k) = (n as u64, k as usize);
                let direct = interp_at(n, k as u32, &rat(1, 2));
                let part = hoffman_ihara_half_partition(n, k);
                let bell = hoffman_ihara_half_bell(n, k);
                let holds = direct == part && part == bell;
                Ok(Check { lhs: direct.to_string(), rhs: format!("{part} / {bell}"), holds })
            }));
        }
    }
    Ok(out)
}

/// `|E_N|·N / ln^{max(ℓ2,1)} N`.
pub fn en_decay_ratio(n: u64, l2: usize, r1: u32, r2: u32) -> Result<f64> {
    let e = rat_to_f64(&e_n(n, l2, r1, r2)?).abs();
    Ok(e * n as f64 / (n as f64).ln().powi(l2.max(1) as i32))
}

fn en_decay(g: &Grid) -> Result<Vec<Case>> {
    let (r1s, r2s, l2s, ns) = (g.ints("r1", 1)?, g.ints("r2", 1)?, g.ints("l2", 0)?, g.ints("N", 2)?);
    guard(&[r1s.len(), r2s.len(), l2s.len()])?;
    let mut out = Vec::new();
    for &r1 in &r1s {
        for &r2 in &r2s {
            for &l2 in &l2s {
                let ns = ns.clone();
                out.push(Case::new(vec![p("r1", r1), p("r2", r2), p("l2", l2)], move || {
                    let ratios: Vec<f64> = ns
                        .iter()
                        .map(|&n| en_decay_ratio(n as u64, l2 as usize, r1 as u32, r2 as u32))
                        .collect::<Result<_>>()?;
                    let first = ratios.first().copied().unwrap_or(0.0);
                    let max = ratios.iter().cloned().fold(0.0, f64::max);
                    Ok(Check { lhs: format!("{ratios:?}"), rhs: format!("<= {:e}", 10.0 * first), holds: max <= 10.0 * first })
                }));
            }
        }
    }
    Ok(out)
}

fn representations(g: &Grid) -> Result<Vec<Case>> {
    let (ns, ks) = (g.ints("n", 0)?, g.ints("k", 0)?);
    guard(&[ns.len(), ks.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &k in &ks {
            out.push(Case::new(vec![p("n", n), p("k", k)], move || {
                let (n, k) = (n as u64, k as usize);
                let plain = zt_trunc(n, &IndexWord::ones(k));
                let star = zts_trunc(n, &IndexWord::ones(k));
                let forms: Vec<(&str, Rat, &Rat)> = vec![
                    ("stirling", plain_ones_stirling(n, k), &plain),
                    ("bell", plain_ones_bell(n, k), &plain),
                    ("macdonald-p", plain_ones_macdonald(n, k), &plain),
                    ("det-plain", plain_ones_det(n, k)?, &plain),
                    ("binomial", star_ones_binomial(n, k), &star),
                    ("bell-star", star_ones_bell(n, k), &star),
                    ("macdonald-q", star_ones_macdonald(n, k), &star),
                    ("det-star", star_ones_det(n, k)?, &star),
                ];
                let bad: Vec<String> = forms
                    .iter()
                    .filter(|(_, v, r)| v != *r)
                    .map(|(name, v, _)| format!("{name}={v}"))
                    .collect();
                Ok(Check { lhs: format!("{plain} / {star}"), rhs: bad.join("; "), holds: bad.is_empty() })
            }));
        }
    }
    Ok(out)
}

fn recurrence(g: &Grid) -> Result<Vec<Case>> {
    let (ns, ks) = (g.ints("n", 1)?, g.ints("k", 0)?);
    guard(&[ns.len(), ks.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &k in &ks {
            out.push(Case::new(vec![p("n", n), p("k", k)], move || {
                let (n, k) = (n as u64, k as usize);
                let table = star_ones_recurrence(n, k);
                // unrolled: Σ_{m=0..k} ζ*_{n−1}({1}_{k−m}) / n^m
                let unrolled = (0..=k).fold(Rat::zero(), |acc, m| {
                    acc + zts_trunc(n - 1, &IndexWord::ones(k - m)) * inv_pow(n, m as u32)
                });
                let direct = zts_trunc(n, &IndexWord::ones(k));
                let holds = table[n as usize][k] == direct && unrolled == direct;
                Ok(Check { lhs: direct.to_string(), rhs: format!("{} / {unrolled}", table[n as usize][k]), holds })
            }));
        }
    }
    Ok(out)
}

fn binom_inversion(g: &Grid) -> Result<Vec<Case>> {
    let (ns, ls) = (g.ints("n", 1)?, g.ints("l", 0)?);
    guard(&[ns.len(), ls.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &l in &ls {
            out.push(Case::new(vec![p("n", n), p("l", l)], move || {
                let n = n as u64;
                let b = zt_sequence(n, &IndexWord::ones(l as usize), true);
                let transform = |seq: &[Rat], i: u64| (1..=i).fold(Rat::zero(), |acc, j| acc + bin(i, j) * alt(j) * &seq[j as usize]);
                let a: Vec<Rat> = (0..=n).map(|i| transform(&b, i)).collect();
                let back = transform(&a, n);
                let holds = back == b[n as usize] && a[n as usize] == -inv_pow(n, l as u32);
                Ok(Check { lhs: back.to_string(), rhs: format!("{} (a_n = {})", b[n as usize], a[n as usize]), holds })
            }));
        }
    }
    Ok(out)
}

fn genseries(g: &Grid) -> Result<Vec<Case>> {
    let (ns, ks) = (g.ints("n", 0)?, g.ints("k", 0)?);
    guard(&[ns.len(), ks.len()])?;
    let mut out = Vec::new();
    for &n in &ns {
        for &k in &ks {
            out.push(Case::new(vec![p("n", n), p("k", k)], move || {
                let (n, k) = (n as u64, k as usize);
                let plain_coeffs = harmonic_product_poly(n);
                let plain = plain_coeffs.get(k).cloned().unwrap_or_else(Rat::zero);
                // [q^k] Π_j 1/(1 − q/j), truncated at degree k
                let mut star = vec![Rat::zero(); k + 1];
                star[0] = Rat::one();
                for j in 1..=n {
                    let inv = inv_pow(j, 1);
                    for d in 1..=k {
                        let add = &star[d - 1] * &inv;
                        star[d] += add;
                    }
                }
                let holds = plain == zt_trunc(n, &IndexWord::ones(k)) && star[k] == zts_trunc(n, &IndexWord::ones(k));
                Ok(Check { lhs: format!("{plain} / {}", star[k]), rhs: "coefficients of the products".into(), holds })
            }));
        }
    }
    Ok(out)
}

/// The first `count` rationals `p/q` in lowest terms with `−q ≤ p ≤ 2q`, by increasing `q`.
pub fn rational_sample(count: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(count);
    let mut q: i64 = 1;
    while out.len() < count {
        for p in -q..=2 * q {
            if out.len() < count && p.gcd(&q) == 1 {
                out.push(rat(p, q));
            }
        }
        q += 1;
    }
    out
}

fn interp_det_k4(g: &Grid) -> Result<Vec<Case>> {
    let count = *g.ints("samples", 1)?.last().unwrap_or(&0) as usize;
    guard(&[count])?;
    Ok(rational_sample(count)
        .into_iter()
        .map(|t| {
            Case::new(vec![p("t", &t)], move || {
                let s = interp_det_solvable_k4(&t);
                let special = t.is_zero() || t.is_one() || t == rat(1, 2);
                let witness_ok = match &s.witness {
                    Some(w) => (1..=6).all(|n| {
                        hessenberg_det(4, &harmonic_column(n, 4), w).ok()
                            == Some(QuadExt::base(rat(24, 1) * interp_at(n, 4, &t)))
                    }),
                    None => true,
                };
                Ok(Check {
                    lhs: format!("solvable = {}", s.solvable),
                    rhs: format!("expected {special}"),
                    holds: s.solvable == special && witness_ok,
                })
            })
        })
        .collect())
}

fn interp_det_k5(_: &Grid) -> Result<Vec<Case>> {
    Ok(vec![Case::new(vec![p("t", "1/2")], || {
        let ledger = interp_det_unsolvable_k5_half();
        let open: Vec<&str> = ledger
            .branches
            .iter()
            .filter(|b| b.contradiction.is_none())
            .map(|b| b.assumption.as_str())
            .collect();
        Ok(Check {
            lhs: format!("{} branches", ledger.branches.len()),
            rhs: if open.is_empty() { "all contradictory".into() } else { format!("open: {}", open.join(", ")) },
            holds: ledger.all_contradictory(),
        })
    })])
}

pub fn catalogue() -> &'static [Identity] {
    static CAT: OnceLock<Vec<Identity>> = OnceLock::new();
    CAT.get_or_init(|| {
        let e = |id, anchor, default_grid, cases| Identity { id, anchor, default_grid, cases };
        vec![
            e("thm1-summand", "summand of S via MacDonald polynomials Q and P in harmonic numbers", "n<=20,l1<=5,l2<=5", summand_forms as fn(&Grid) -> Result<Vec<Case>>),
            e("thm2-trunc", "truncated Stirling series = m-sum + K + E_N (nested R_N)", "N<=25,l2<=3,r1<=4,r2<=4", stirling_truncation),
            e("lem7-findiff", "finite differences: 1/(x binom(x+m,m)) = sum binom(m,k)(-1)^k/(x+k)", "m<=6,x=1/2|1|3|7/3", finite_difference),
            e("lem8-nested", "alternating binomial sums of zeta*_j({1}_l)/j^k", "n<=20,k<=4,l<=4", nested_binomial),
            e("eq-nestedsum", "alternating binomial sum as an iterated harmonic sum", "n<=12,k<=4,s<=3", iterated_sum),
            e("lem10-duality", "Hoffman duality for alternating binomial sums of star values", "N<=15,r<=2,a<=3,b<=3", binomial_duality),
            e("conv-star", "zeta*_N as a sum of zeta_N over contractions", "N<=12,weight<=5", conv_star),
            e("conv-plain", "zeta_N as a signed sum of zeta*_N over contractions", "N<=12,weight<=5", conv_plain),
            e("stuffle", "stuffle product of truncated values", "N<=12,weight<=4", stuffle_cases),
            e("combination", "zeta*_n({1}_l1) zeta_n({1}_l2) via contractions and stuffles", "n<=12,l1<=4,l2<=4", combination),
            e("interp-examples", "interpolated zeta^t_n({1}_k) for k <= 4 and the t = 1/2 determinants", "n<=15,k<=4", interp_examples),
            e("hoffman-ihara-half", "zeta^(1/2)_n({1}_k) over odd-part partitions", "n<=12,k<=6", hoffman_ihara_half),
            e("en-decay", "|E_N| N / ln^max(l2,1) N stays within 10x of its N = 10 value", "r1<=3,r2<=3,l2<=2,N=10|20|40|80|160", en_decay),
            e("representations", "Stirling, Bell, MacDonald, determinant and binomial forms of zeta_n({1}_k), zeta*_n({1}_k)", "n<=20,k<=6", representations),
            e("recurrence", "zeta*_n({1}_k) = zeta*_{n-1}({1}_k) + zeta*_n({1}_{k-1})/n and its unrolled form", "n<=20,k<=6", recurrence),
            e("binom-inversion", "binomial inversion with zeta*_n({1}_l) and -1/n^l", "n<=20,l<=4", binom_inversion),
            e("genseries", "zeta_n({1}_k), zeta*_n({1}_k) as coefficients of prod (1 + q/j), prod 1/(1 - q/j)", "n<=20,k<=6", genseries),
            e("interp-det-k4", "k = 4 determinant form exists exactly for t in {0, 1/2, 1}", "samples<=200", interp_det_k4),
            e("interp-det-k5-half", "no k = 5 determinant form at t = 1/2", "", interp_det_k5),
        ]
    })
}
