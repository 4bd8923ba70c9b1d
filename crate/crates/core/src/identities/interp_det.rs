//! When is `k!·ζ^t_n({1}_k)` a Hessenberg determinant with Toeplitz harmonic column
//! and a free superdiagonal `c_1, …, c_{k−1}`?
//!
//! Both sides are written in power-sum coordinates `Π H_n^(λ_i)`; matching coefficients
//! gives polynomial equations in the `c_i`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::mpoly::MPoly;
use crate::error::Result;
use crate::exact::symmetric::power_sum_coordinates;
use crate::exact::{factorial, format_rat, hessenberg_expand, interp_at, rat, QuadExt, Rat, Ring};

/// Coefficients of `k!·ζ^t_n({1}_k)` in power-sum coordinates, keyed by partition
/// (parts in decreasing order).
pub fn interp_power_sum_target(k: usize, t: &Rat) -> Result<BTreeMap<Vec<usize>, Rat>> {
    let scale = Rat::from_integer(factorial(k as u64));
    let n_max = 3 * k as u64 + 6;
    let coords = power_sum_coordinates(k, n_max, |n| &scale * interp_at(n, k as u32, t))?;
    Ok(coords.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// The determinant with symbolic superdiagonal `c_1..c_{k−1}` (variables `0..k−1`),
/// grouped by power-sum monomial: partition ↦ coefficient polynomial in the `c_i`.
pub fn symbolic_det_coefficients(k: usize) -> BTreeMap<Vec<usize>, MPoly> {
    let nc = k - 1;
    let column: Vec<MPoly> = (0..k).map(|i| MPoly::var(nc + i)).collect();
    let sup: Vec<MPoly> = (0..nc).map(MPoly::var).collect();
    let det = hessenberg_expand(&column, &sup);
    det.split_at(nc)
        .into_iter()
        .map(|(h_exps, coeff)| {
            let mut lambda = Vec::new();
            for (i, &m) in h_exps.iter().enumerate().rev() {
                lambda.extend(std::iter::repeat_n(i + 1, m as usize));
            }
            (lambda, coeff)
        })
        .collect()
}

fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd): (BigInt, BigInt) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rat::new(sn, sd))
}

/// The two roots of `x² − s·x + p`, smaller-magnitude first when rational.
fn quadratic_roots(s: &Rat, p: &Rat) -> (QuadExt, QuadExt) {
    let half = s / rat(2, 1);
    let disc = &half * &half - p;
    match rat_sqrt(&disc) {
        Some(r) => {
            let r = if half.is_negative() { -r } else { r };
            (QuadExt::base(&half - &r), QuadExt::base(&half + &r))
        }
        None => (
            QuadExt::new(half.clone(), -Rat::one(), disc.clone()),
            QuadExt::new(half, Rat::one(), disc),
        ),
    }
}

/// Outcome of the `k = 4` elimination at a rational `t`.
#[derive(Clone, Debug, Serialize)]
pub struct K4Solvability {
    #[serde(with = "crate::exact::serde_rat")]
    pub t: Rat,
    pub solvable: bool,
    /// For `t ≠ 1/2`: the quantity that has to vanish, `8t²(t−1)²/((2t−1)(2t²−2t+1))`.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub necessary: Option<Rat>,
    /// A superdiagonal `(c1, c2, c3)` when one exists.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_witness")]
    pub witness: Option<Vec<QuadExt>>,
}

fn ser_opt_rat<S: serde::Serializer>(r: &Option<Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_rat(r)),
        None => s.serialize_none(),
    }
}

fn ser_witness<S: serde::Serializer>(w: &Option<Vec<QuadExt>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let w = w.as_ref().expect("skipped when absent");
    let mut seq = s.serialize_seq(Some(w.len()))?;
    for q in w {
        seq.serialize_element(&q.to_string())?;
    }
    seq.end()
}

impl K4Solvability {
    /// `(c1c2, c2c3, c1c3, c1c2c3)` of the witness.
    pub fn run_products(&self) -> Option<[QuadExt; 4]> {
        let c = self.witness.as_ref()?;
        Some([
            c[0].times(&c[1]),
            c[1].times(&c[2]),
            c[0].times(&c[2]),
            c[0].times(&c[1]).times(&c[2]),
        ])
    }
}

/// Decides whether `ζ^t_n({1}_4)` has a determinant form, following the elimination
/// `c2 = c1c2c3 / c1c3`, then `c2(c1+c3)` against the `H·H^(3)` coefficient.
pub fn interp_det_solvable_k4(t: &Rat) -> K4Solvability {
    let target = interp_power_sum_target(4, t).expect("power-sum system has full rank");
    let get = |l: &[usize]| target.get(l).cloned().unwrap_or_else(Rat::zero);
    // det = H⁴ − e1 H²H2 + q H H3 + p H2² − e3 H4
    let e1 = -get(&[2, 1, 1]);
    let q = get(&[3, 1]);
    let p = get(&[2, 2]);
    let e3 = -get(&[4]);
    let done = |solvable, necessary, witness| K4Solvability { t: t.clone(), solvable, necessary, witness };
    if get(&[1, 1, 1, 1]) != Rat::one() {
        return done(false, None, None);
    }
    if p.is_zero() {
        // c1c3 = 0: by the c1 ↔ c3 symmetry take c1 = 0, then c2 + c3 = e1, c2c3 = q
        if !e3.is_zero() {
            return done(false, None, None);
        }
        let (a, b) = quadratic_roots(&e1, &q);
        let (c2, c3) = if a.is_base() { (a, b) } else { (b, a) };
        return done(true, None, Some(vec![QuadExt::base(Rat::zero()), c2, c3]));
    }
    let c2 = &e3 / &p;
    let s = &e1 - &c2;
    if c2.is_zero() {
        let ok = q.is_zero();
        let w = ok.then(|| {
            let (c1, c3) = quadratic_roots(&s, &p);
            vec![c1, QuadExt::base(c2.clone()), c3]
        });
        return done(ok, None, w);
    }
    let necessary = &s - &q / &c2;
    if !necessary.is_zero() {
        return done(false, Some(necessary), None);
    }
    let (c1, c3) = quadratic_roots(&s, &p);
    done(true, Some(necessary), Some(vec![c1, QuadExt::base(c2), c3]))
}

/// One case of the `k = 5`, `t = 1/2` analysis.
#[derive(Clone, Debug, Serialize)]
pub struct Branch {
    pub assumption: String,
    pub steps: Vec<String>,
    pub contradiction: Option<String>,
}

/// The full case analysis for `k = 5`, `t = 1/2`.
#[derive(Clone, Debug, Serialize)]
pub struct K5Ledger {
    /// `5!·ζ^{1/2}_n({1}_5)` in power-sum coordinates.
    pub target: Vec<(String, String)>,
    /// Coefficient equations `det_λ(c) − target_λ = 0`.
    pub equations: Vec<(String, String)>,
    pub branches: Vec<Branch>,
}

impl K5Ledger {
    pub fn all_contradictory(&self) -> bool {
        !self.branches.is_empty() && self.branches.iter().all(|b| b.contradiction.is_some())
    }
}

const C_NAMES: [&str; 4] = ["c1", "c2", "c3", "c4"];

fn lambda_name(l: &[usize]) -> String {
    let parts: Vec<String> = l.iter().map(|p| p.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn show(p: &MPoly) -> String {
    p.display_with(&C_NAMES)
}

/// First equation that has collapsed to a nonzero constant.
fn find_contradiction(eqs: &BTreeMap<Vec<usize>, MPoly>) -> Option<String> {
    eqs.iter().find_map(|(l, e)| match e.as_constant() {
        Some(c) if !c.is_zero() => Some(format!("equation {} becomes {} = 0", lambda_name(l), format_rat(&c))),
        _ => None,
    })
}

fn subst_all(eqs: &BTreeMap<Vec<usize>, MPoly>, i: usize, q: &MPoly) -> BTreeMap<Vec<usize>, MPoly> {
    eqs.iter().map(|(l, e)| (l.clone(), e.substitute(i, q))).collect()
}

/// In the branch where no `c_i` vanishes: strips the nonzero factors `c_a c_b` from the
/// equation `λ` and solves the remaining linear factor for `c_solve`.
fn strip_and_solve(
    eqs: &BTreeMap<Vec<usize>, MPoly>,
    lambda: &[usize],
    factors: &[usize],
    solve: usize,
    steps: &mut Vec<String>,
) -> Option<MPoly> {
    let mut e = eqs.get(lambda)?.clone();
    let before = show(&e);
    for &f in factors {
        e = e.div_var(f)?;
    }
    let root = e.solve_linear(solve)?;
    let stripped: Vec<&str> = factors.iter().map(|&f| C_NAMES[f]).collect();
    steps.push(format!(
        "{}: {before} = 0, divide by {} ≠ 0: {} = 0, so {} = {}",
        lambda_name(lambda),
        stripped.join("*"),
        show(&e),
        C_NAMES[solve],
        show(&root)
    ));
    Some(root)
}

fn nonzero_branch(eqs: &BTreeMap<Vec<usize>, MPoly>) -> Branch {
    let mut steps = Vec::new();
    let contradiction = (|| {
        let c4 = strip_and_solve(eqs, &[4, 1], &[1, 2], 3, &mut steps)?;
        let c3 = strip_and_solve(eqs, &[3, 2], &[0, 3], 2, &mut steps)?;
        let mut eqs = subst_all(&subst_all(eqs, 3, &c4), 2, &c3);
        let c1 = strip_and_solve(&eqs, &[2, 2, 1], &[0], 0, &mut steps)?;
        eqs = subst_all(&eqs, 0, &c1);
        let sq_eq = eqs.get(&vec![3, 1, 1])?;
        let v = sq_eq.solve_square(1)?;
        steps.push(format!("[3,1,1]: {} = 0, so c2^2 = {}", show(sq_eq), format_rat(&v)));
        let reduced: BTreeMap<_, _> = eqs.iter().map(|(l, e)| (l.clone(), e.reduce_square(1, &v))).collect();
        find_contradiction(&reduced)
    })();
    Branch { assumption: "c1, c2, c3, c4 all nonzero".into(), steps, contradiction }
}

/// Case analysis showing that no superdiagonal `(c1, c2, c3, c4)` turns the Hessenberg
/// determinant into `5!·ζ^{1/2}_n({1}_5)`.
///
/// Branches: some `c_i = 0`, which kills the `H^(5)` coefficient; or all `c_i ≠ 0`, where
/// the two product equations force `c4 = −c1`, `c3 = −c2`, then `c1 = −2c2`, `c2² = −1`,
/// and the `H^(5)` coefficient comes out wrong.
pub fn interp_det_unsolvable_k5_half() -> K5Ledger {
    let target = interp_power_sum_target(5, &rat(1, 2)).expect("power-sum system has full rank");
    let det = symbolic_det_coefficients(5);
    let mut eqs: BTreeMap<Vec<usize>, MPoly> = BTreeMap::new();
    for l in det.keys().chain(target.keys()) {
        let d = det.get(l).cloned().unwrap_or_default();
        let c = target.get(l).cloned().unwrap_or_else(Rat::zero);
        let e = d.minus(&MPoly::constant(c));
        if !e.is_zero() {
            eqs.insert(l.clone(), e);
        }
    }
    let mut branches = Vec::new();
    for i in 0..4 {
        let zeroed = subst_all(&eqs, i, &MPoly::default());
        branches.push(Branch {
            assumption: format!("{} = 0", C_NAMES[i]),
            steps: Vec::new(),
            contradiction: find_contradiction(&zeroed),
        });
    }
    branches.push(nonzero_branch(&eqs));
    K5Ledger {
        target: target.iter().map(|(l, c)| (lambda_name(l), format_rat(c))).collect(),
        equations: eqs.iter().map(|(l, e)| (lambda_name(l), show(e))).collect(),
        branches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::harmonic_column;

    fn det_matches(k: usize, t: &Rat, sup: &[QuadExt]) -> bool {
        (1..=8).all(|n| {
            let col: Vec<QuadExt> = harmonic_column(n, k).into_iter().map(QuadExt::base).collect();
            let lhs = hessenberg_expand(&col, sup);
            lhs == QuadExt::base(Rat::from_integer(factorial(k as u64)) * interp_at(n, k as u32, t))
        })
    }

    #[test]
    fn k4_coefficients_match_laplace_expansion() {
        let det = symbolic_det_coefficients(4);
        let show = |l: &[usize]| det[l].display_with(&C_NAMES);
        assert_eq!(show(&[2, 1, 1]), "-c1 - c2 - c3");
        assert_eq!(show(&[3, 1]), "c1*c2 + c2*c3");
        assert_eq!(show(&[2, 2]), "c1*c3");
        assert_eq!(show(&[4]), "-c1*c2*c3");
        // target at symbolic t reproduces the stated coefficients at a few points
        for t in [rat(0, 1), rat(1, 3), rat(-2, 5), rat(7, 4)] {
            let g = interp_power_sum_target(4, &t).unwrap();
            let u = rat(2, 1) * &t - rat(1, 1);
            let q = rat(2, 1) * &t * &t - rat(2, 1) * &t + rat(1, 1);
            assert_eq!(g[&vec![2, 1, 1]], rat(6, 1) * &u);
            assert_eq!(g[&vec![3, 1]], rat(8, 1) * (rat(3, 1) * &t * &t - rat(3, 1) * &t + rat(1, 1)));
            assert_eq!(g.get(&vec![2, 2]).cloned().unwrap_or_default(), rat(3, 1) * &u * &u);
            assert_eq!(g[&vec![4]], rat(6, 1) * &u * &q);
        }
    }

    #[test]
    fn k4_solvable_points() {
        for t in [rat(0, 1), rat(1, 1), rat(1, 2)] {
            let s = interp_det_solvable_k4(&t);
            assert!(s.solvable, "t = {t}");
            assert!(det_matches(4, &t, s.witness.as_ref().unwrap()), "t = {t}");
        }
        let zero = interp_det_solvable_k4(&rat(0, 1));
        let w: Vec<String> = zero.witness.unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(w, ["1", "2", "3"]);
        let half = interp_det_solvable_k4(&rat(1, 2));
        let prods: Vec<String> = half.run_products().unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(prods, ["0", "2", "0", "0"]);
        assert_eq!(half.witness.unwrap()[1], QuadExt::radical(rat(1, 1), rat(-2, 1)));
    }

    #[test]
    fn k4_necessary_equation() {
        for t in [rat(1, 3), rat(-1, 1), rat(5, 7), rat(3, 1)] {
            let s = interp_det_solvable_k4(&t);
            assert!(!s.solvable);
            let u = rat(2, 1) * &t - rat(1, 1);
            let q = rat(2, 1) * &t * &t - rat(2, 1) * &t + rat(1, 1);
            let tm1 = &t - rat(1, 1);
            let expect = rat(8, 1) * &t * &t * &tm1 * &tm1 / (u * q);
            assert_eq!(s.necessary, Some(expect));
        }
    }

    #[test]
    fn k5_half_has_no_determinant() {
        let ledger = interp_det_unsolvable_k5_half();
        // 5!·(H⁵/120 + H²H3/24 + H5/80)
        let t: BTreeMap<_, _> = ledger.target.iter().cloned().collect();
        assert_eq!(t["[1,1,1,1,1]"], "1");
        assert_eq!(t["[3,1,1]"], "5");
        assert_eq!(t["[5]"], "3/2");
        assert_eq!(t.len(), 3);
        assert_eq!(ledger.branches.len(), 5);
        assert!(ledger.all_contradictory(), "{ledger:#?}");
        let last = &ledger.branches[4];
        assert!(last.steps.iter().any(|s| s.ends_with("c2^2 = -1")), "{:?}", last.steps);
    }
}
