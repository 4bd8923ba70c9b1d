//! The same value `zeta_n({1}_k)` (and its star version) through every closed representation.

use mzvkit::exact::format_rat;
use mzvkit::exact::symmetric::{
    plain_ones_bell, plain_ones_det, plain_ones_macdonald, plain_ones_stirling, star_ones_bell, star_ones_binomial,
    star_ones_det, star_ones_macdonald,
};

fn main() {
    let (n, k) = (8, 3);
    println!("zeta_{n}({{1}}_{k}):");
    println!("  Stirling     {}", format_rat(&plain_ones_stirling(n, k)));
    println!("  Bell         {}", format_rat(&plain_ones_bell(n, k)));
    println!("  MacDonald P  {}", format_rat(&plain_ones_macdonald(n, k)));
    println!("  determinant  {}", format_rat(&plain_ones_det(n, k).unwrap()));
    println!("zeta*_{n}({{1}}_{k}):");
    println!("  binomial     {}", format_rat(&star_ones_binomial(n, k)));
    println!("  Bell         {}", format_rat(&star_ones_bell(n, k)));
    println!("  MacDonald Q  {}", format_rat(&star_ones_macdonald(n, k)));
    println!("  determinant  {}", format_rat(&star_ones_det(n, k).unwrap()));
}
