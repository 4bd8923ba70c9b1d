use proptest::prelude::*;

use mzvkit::closed::{reduce_to_single, stirling_series_closed, stirling_series_trunc, zetastar_series_closed};
use mzvkit::exact::{format_rat, parse_rat, rat, zt_trunc, zt_trunc_oracle, zts_trunc, OracleMode, Rat, TPoly};
use mzvkit::identities::verify;
use mzvkit::index::{plain_from_star, star_expansion, stuffle};
use mzvkit::numeric::sums::series_tail_bound;
use mzvkit::numeric::{eval_zeta_poly, mzv_numeric, xi_numeric, zeta_single, PrecReal, ZetaPoly};
use mzvkit::{IndexWord, SignedCombo};

fn word(max_weight: u32) -> impl Strategy<Value = IndexWord> {
    prop::collection::vec(1u32..=4, 1..=max_weight as usize)
        .prop_filter("weight", move |v| v.iter().sum::<u32>() <= max_weight)
        .prop_map(|v| IndexWord::new(v).unwrap())
}

fn sorted(mut v: Vec<IndexWord>) -> Vec<IndexWord> {
    v.sort();
    v
}

proptest! {
    #[test]
    fn star_then_plain_is_identity(w in word(6)) {
        let back = star_expansion(&w).unwrap().map_linear(plain_from_star).unwrap();
        prop_assert_eq!(back, SignedCombo::single(w));
    }

    #[test]
    fn stuffle_commutes_and_associates(a in word(4), b in word(4), c in word(4)) {
        prop_assert_eq!(sorted(stuffle(&a, &b)), sorted(stuffle(&b, &a)));
        let left: Vec<IndexWord> = stuffle(&a, &b).iter().flat_map(|x| stuffle(x, &c)).collect();
        let right: Vec<IndexWord> = stuffle(&b, &c).iter().flat_map(|x| stuffle(&a, x)).collect();
        prop_assert_eq!(sorted(left), sorted(right));
    }

    #[test]
    fn stuffle_multiplies_truncated_values(a in word(4), b in word(4), n in 0u64..=12) {
        let sum = stuffle(&a, &b).iter().fold(Rat::from_integer(0.into()), |acc, c| acc + zt_trunc(n, c));
        prop_assert_eq!(zt_trunc(n, &a) * zt_trunc(n, &b), sum);
    }

    #[test]
    fn recursions_match_enumeration(w in word(5), n in 0u64..=12) {
        prop_assert_eq!(zt_trunc(n, &w), zt_trunc_oracle(n, &w, OracleMode::Plain).unwrap());
        prop_assert_eq!(zts_trunc(n, &w), zt_trunc_oracle(n, &w, OracleMode::Star).unwrap());
    }

    #[test]
    fn text_forms_round_trip(p in -10_000i64..10_000, q in 1i64..10_000, w in word(8), c in prop::collection::vec(-50i64..50, 0..5)) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        prop_assert_eq!(w.to_string().parse::<IndexWord>().unwrap(), w);
        let poly = TPoly::new(c.into_iter().map(|x| rat(x, 7)).collect());
        prop_assert_eq!(poly.to_string().parse::<TPoly>().unwrap(), poly);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn more_digits_stay_inside_the_radius(k in 2u32..=8, digits in 10u32..=30) {
        let coarse = zeta_single(k, digits).unwrap();
        let fine = zeta_single(k, digits + 10).unwrap();
        prop_assert!(coarse.distance(&fine) <= coarse.radius, "{} vs {}", coarse, fine);
    }

    #[test]
    fn precreal_json_round_trips(k in 2u32..=6, digits in 8u32..=24) {
        let v = zeta_single(k, digits).unwrap();
        let back: PrecReal = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        prop_assert!(back.distance(&v) <= v.radius + back.radius);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), serde_json::to_string(&v).unwrap());
    }
}

#[test]
fn multiple_zeta_values_refine_soundly() {
    for w in ["2,1", "3,1", "2,2", "2,1,1", "3,2"] {
        let w: IndexWord = w.parse().unwrap();
        let coarse = mzv_numeric(&w, 12).unwrap();
        let fine = mzv_numeric(&w, 22).unwrap();
        assert!(coarse.distance(&fine) <= coarse.radius, "{w}: {coarse} vs {fine}");
    }
    let euler = mzv_numeric(&"2,1".parse().unwrap(), 20).unwrap();
    let z3 = zeta_single(3, 20).unwrap();
    assert!(euler.distance(&z3) <= euler.radius + z3.radius);
}

#[test]
fn xi_of_depth_one_is_a_star_value() {
    for r in 1..=4u32 {
        for s in 1..=(5 - r) {
            let xi = xi_numeric(&IndexWord::new([r]).unwrap(), s, 12).unwrap();
            let star = ZetaPoly::zeta_star(IndexWord::ones(s as usize - 1).prepend(r + 1)).expand_stars();
            let v = eval_zeta_poly(&star, 12).unwrap();
            assert!(xi.distance(&v) <= 1e-8, "r={r}, s={s}: {xi} vs {v}");
        }
    }
}

#[test]
fn truncation_approaches_the_closed_form() {
    for r1 in 1..=2u32 {
        for r2 in 1..=2u32 {
            for l2 in 0..=1usize {
                let trunc = stirling_series_trunc(400, l2, r1, r2).unwrap();
                let closed = eval_zeta_poly(&stirling_series_closed(l2, r1, r2).unwrap(), 15).unwrap();
                let tail = series_tail_bound(400, l2 as u32, r1, r1 + r2).unwrap();
                assert!(
                    closed.contains_within(&trunc, tail),
                    "l2={l2}, r1={r1}, r2={r2}: {closed} vs {}",
                    mzvkit::exact::rat_to_f64(&trunc)
                );
            }
        }
    }
}

#[test]
fn both_closed_forms_agree_on_the_overlap() {
    for r1 in 1..=3u32 {
        for r2 in 1..=3u32 {
            let a = reduce_to_single(&zetastar_series_closed(0, r1, r2).unwrap());
            let b = reduce_to_single(&stirling_series_closed(0, r1, r2).unwrap());
            assert_eq!(a.poly, b.poly, "r1={r1}, r2={r2}");
        }
    }
}

#[test]
fn reports_are_deterministic() {
    for (id, grid) in [("lem10-duality", "N<=6,r<=2,a<=2,b<=2"), ("stuffle", "N<=4,weight<=3")] {
        let mut a = serde_json::to_value(verify(id, Some(grid)).unwrap()).unwrap();
        let mut b = serde_json::to_value(verify(id, Some(grid)).unwrap()).unwrap();
        a["elapsed_ms"] = 0.into();
        b["elapsed_ms"] = 0.into();
        assert_eq!(a, b);
    }
}
