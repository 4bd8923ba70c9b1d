//! The twelve acceptance criteria. Each test prints one `PASS`/`FAIL` line.

use std::time::{Duration, Instant};

use mzvkit::closed::{
    arakawa_relation, general_s1, reduce_to_single, star_three_one, stirling_series_closed, zetastar_series_closed,
    ClosedFormOutput,
};
use mzvkit::exact::{interp_at, rat, zt_trunc, zts_trunc, Rat};
use mzvkit::identities::{
    interp_det_solvable_k4, interp_det_unsolvable_k5_half, rational_sample, verify, VerificationReport,
};
use mzvkit::numeric::{eval_zeta_poly, mzv_numeric, series_s_direct, xi_numeric, zeta_single, ZetaPoly};
use mzvkit::IndexWord;

const DIGITS: u32 = 14;

fn report(n: u32, what: &str, ok: bool, detail: String) {
    println!("criterion {n:>2} {}: {what} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n}: {what}: {detail}");
}

fn run_grids(runs: &[(&str, &str)]) -> (Vec<VerificationReport>, Duration) {
    let start = Instant::now();
    let reports = runs.iter().map(|(id, g)| verify(id, Some(g)).unwrap()).collect();
    (reports, start.elapsed())
}

fn summary(reports: &[VerificationReport]) -> (usize, usize, String) {
    let total = reports.iter().map(|r| r.cases_total).sum();
    let failed = reports.iter().map(|r| r.cases_failed).sum();
    let first = reports
        .iter()
        .find_map(|r| r.first_failure.as_ref().map(|f| format!("; {} first failure {:?}", r.identity, f)))
        .unwrap_or_default();
    (total, failed, first)
}

fn grid_criterion(n: u32, what: &str, runs: &[(&str, &str)], limit: Duration) {
    let (reports, elapsed) = run_grids(runs);
    let (total, failed, first) = summary(&reports);
    let ok = failed == 0 && total > 0 && elapsed < limit;
    report(n, what, ok, format!("{total} cases, {failed} failed, {:.1?} of {limit:?}{first}", elapsed));
}

#[test]
fn c01_stirling_truncation_grid() {
    grid_criterion(
        1,
        "truncated Stirling series equals the literal partial sum",
        &[("thm2-trunc", "N<=25,l2<=3,r1<=4,r2<=4")],
        Duration::from_secs(60),
    );
}

#[test]
fn c02_duality_grid() {
    grid_criterion(
        2,
        "alternating binomial duality",
        &[("lem10-duality", "N<=15,r<=2,a<=3,b<=3")],
        Duration::from_secs(60),
    );
}

#[test]
fn c03_nested_conversion_stuffle_inversion_recurrence() {
    grid_criterion(
        3,
        "nested binomial sums, conversions, stuffle, inversion, recurrence",
        &[
            ("lem8-nested", "n<=12,k<=4,l<=4"),
            ("conv-star", "N<=12,weight<=5"),
            ("conv-plain", "N<=12,weight<=5"),
            ("stuffle", "N<=12,weight<=4"),
            ("binom-inversion", "n<=12,l<=4"),
            ("recurrence", "n<=12,k<=4"),
        ],
        Duration::from_secs(120),
    );
}

#[test]
fn c04_representation_coherence() {
    grid_criterion(
        4,
        "Stirling, Bell, MacDonald, determinant and binomial forms agree",
        &[("representations", "n<=20,k<=6")],
        Duration::from_secs(600),
    );
}

#[test]
fn c05_stirling_series_r2_one() {
    let mut worst = 0.0f64;
    let mut ok = true;
    for r1 in 1..=4u32 {
        for l2 in 0..=3usize {
            let v = series_s_direct(0, l2, r1, 1, DIGITS).unwrap();
            let expected = Rat::from_integer(1.into()) / rat(r1.pow(l2 as u32 + 1) as i64, 1);
            ok &= v.contains_within(&expected, 1e-10);
            worst = worst.max((v.to_f64() - 1.0 / (r1 as f64).powi(l2 as i32 + 1)).abs());
        }
    }
    report(5, "S(0,l2,r1,1) = 1/r1^(l2+1)", ok, format!("worst |diff| {worst:.2e}, tol 1e-10"));
}

#[test]
fn c06_stirling_series_closed_form() {
    let mut worst = 0.0f64;
    for r1 in 1..=3u32 {
        for r2 in 2..=3u32 {
            for l2 in 0..=2usize {
                let closed = eval_zeta_poly(&stirling_series_closed(l2, r1, r2).unwrap(), DIGITS).unwrap();
                let direct = series_s_direct(0, l2, r1, r2, DIGITS).unwrap();
                worst = worst.max(closed.distance(&direct));
            }
        }
    }
    // S(0,0,1,2) = ζ(2) − 1
    let s = series_s_direct(0, 0, 1, 2, DIGITS).unwrap().to_f64();
    let example = (s - (std::f64::consts::PI.powi(2) / 6.0 - 1.0)).abs() < 1e-12;
    report(
        6,
        "Stirling series closed form matches direct summation",
        worst <= 1e-8 && example,
        format!("worst distance {worst:.2e}, tol 1e-8; S(0,0,1,2) = {s:.10}"),
    );
}

#[test]
fn c07_zetastar_series_closed_form() {
    let mut worst = 0.0f64;
    let mut flagged = Vec::new();
    for l1 in 0..=2usize {
        for r1 in 1..=3u32 {
            for r2 in 1..=3u32 {
                if r1 + r2 < 2 {
                    continue;
                }
                let poly = zetastar_series_closed(l1, r1, r2).unwrap();
                let out = ClosedFormOutput::new(poly, DIGITS).unwrap();
                let direct = series_s_direct(l1, 0, r1, r2, DIGITS).unwrap();
                worst = worst.max(out.numeric.distance(&direct));
                if r2 <= 2 && !out.flagged.is_empty() {
                    flagged.push(format!("({l1},{r1},{r2}): {:?}", out.flagged));
                }
            }
        }
    }
    report(
        7,
        "zeta-star series closed form matches direct summation and reduces for r2 <= 2",
        worst <= 1e-8 && flagged.is_empty(),
        format!("worst distance {worst:.2e}, tol 1e-8; flagged {flagged:?}"),
    );
}

#[test]
fn c08_arakawa_kaneko() {
    let mut worst = 0.0f64;
    for l1 in 1..=2usize {
        for l2 in 0..=1usize {
            for r2 in 2..=3u32 {
                worst = worst.max(arakawa_relation(l1, l2, r2, DIGITS).unwrap().discrepancy);
            }
        }
    }
    let mut worst_xi = 0.0f64;
    for r in 1..=4u32 {
        let xi = xi_numeric(&IndexWord::new([r]).unwrap(), 1, DIGITS).unwrap();
        worst_xi = worst_xi.max(xi.distance(&zeta_single(r + 1, DIGITS).unwrap()));
    }
    report(
        8,
        "S(l1,l2,0,r2) as a difference of xi values; xi_r(1) = zeta(r+1)",
        worst <= 1e-8 && worst_xi <= 1e-10,
        format!("worst discrepancy {worst:.2e} (tol 1e-8), worst xi_r(1) gap {worst_xi:.2e} (tol 1e-10)"),
    );
}

#[test]
fn c09_general_split() {
    let mut worst = 0.0f64;
    for (l1, l2) in [(1, 1), (1, 2), (2, 1)] {
        for r1 in 1..=2u32 {
            for r2 in 1..=2u32 {
                worst = worst.max(general_s1(l1, l2, r1, r2, DIGITS).unwrap().discrepancy);
            }
        }
    }
    report(9, "S1 + S2 equals direct summation", worst <= 1e-7, format!("worst discrepancy {worst:.2e}, tol 1e-7"));
}

#[test]
fn c10_interpolated_values() {
    let mut notes = Vec::new();
    let mut endpoints = true;
    for n in 0..=15u64 {
        for k in 0..=5u32 {
            let ones = IndexWord::ones(k as usize);
            endpoints &= interp_at(n, k, &rat(0, 1)) == zt_trunc(n, &ones);
            endpoints &= interp_at(n, k, &rat(1, 1)) == zts_trunc(n, &ones);
        }
    }
    notes.push(format!("endpoints {endpoints}"));

    let (reports, _) = run_grids(&[
        ("interp-examples", "n<=10,k<=4"),
        ("interp-det-k4", "samples<=200"),
        ("interp-det-k5-half", ""),
        ("hoffman-ihara-half", "n<=12,k<=6"),
    ]);
    let (total, failed, first) = summary(&reports);
    notes.push(format!("{total} grid cases, {failed} failed{first}"));

    let sample = rational_sample(200);
    let solvable: Vec<Rat> = sample.iter().filter(|t| interp_det_solvable_k4(t).solvable).cloned().collect();
    let solvable_ok = sample.len() == 200 && solvable == vec![rat(0, 1), rat(1, 1), rat(1, 2)];
    notes.push(format!("k=4 solvable at {:?}", solvable.iter().map(|t| t.to_string()).collect::<Vec<_>>()));

    let ledger = interp_det_unsolvable_k5_half();
    notes.push(format!("k=5 ledger: {} branches, all contradictory {}", ledger.branches.len(), ledger.all_contradictory()));

    let ok = endpoints && failed == 0 && solvable_ok && ledger.all_contradictory();
    report(10, "interpolated values, determinants and solvability", ok, notes.join("; "));
}

#[test]
fn c11_error_term_decay() {
    grid_criterion(
        11,
        "|E_N| N / ln^max(l2,1) N stays within 10x of its N = 10 value",
        &[("en-decay", "r1<=3,r2<=3,l2<=2,N=10|20|40|80|160")],
        Duration::from_secs(600),
    );
}

#[test]
fn c12_zeta_star_three_one() {
    let digits = 30;
    // ζ*(3,1) = ζ(3,1) + ζ(4), each summed numerically
    let word: IndexWord = "3,1".parse().unwrap();
    let value = mzv_numeric(&word, digits).unwrap().add(&zeta_single(4, digits).unwrap());
    let z3 = zeta_single(3, digits).unwrap();
    let z4 = zeta_single(4, digits).unwrap();
    let five_quarters = z4.scale(&rat(5, 4));
    let half_sum = z3.add(&z4).scale(&rat(1, 2));
    let radii = value.radius + five_quarters.radius + half_sum.radius;
    let d_a = value.distance(&five_quarters);
    let d_b = value.distance(&half_sum);
    let decided = d_a <= radii && d_b >= 1e3 * radii;
    let wired = reduce_to_single(&ZetaPoly::zeta_star(word)).poly == star_three_one()
        && star_three_one() == ZetaPoly::zeta("4".parse().unwrap()).scale(&rat(5, 4));
    report(
        12,
        "zeta*(3,1) = (5/4) zeta(4), wired into the reduction",
        decided && wired,
        format!("|x - 5/4 z(4)| = {d_a:.2e}, |x - (z(3)+z(4))/2| = {d_b:.2e}, radii {radii:.2e}, wired {wired}"),
    );
}
