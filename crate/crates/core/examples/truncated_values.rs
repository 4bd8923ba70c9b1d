//! Exact truncated multiple zeta values, the star/plain conversion and stuffle products.

use mzvkit::exact::{format_rat, zt_trunc, zts_trunc};
use mzvkit::index::{star_expansion, stuffle};
use mzvkit::IndexWord;

fn main() {
    let w: IndexWord = "2,1".parse().unwrap();
    for n in [1, 2, 4, 10] {
        println!(
            "N = {n:>2}: zeta_N({w}) = {:<12} zeta*_N({w}) = {}",
            format_rat(&zt_trunc(n, &w)),
            format_rat(&zts_trunc(n, &w))
        );
    }

    let star = star_expansion(&"2,1,1".parse().unwrap()).unwrap();
    let terms: Vec<String> = star.iter().map(|(v, c)| format!("{c:+} zeta({v})")).collect();
    println!("zeta*(2,1,1) = {}", terms.join(" "));

    let (a, b): (IndexWord, IndexWord) = ("2".parse().unwrap(), "1,1".parse().unwrap());
    let words: Vec<String> = stuffle(&a, &b).iter().map(|c| format!("({c})")).collect();
    println!("({a}) * ({b}) = {}", words.join(" + "));
}
