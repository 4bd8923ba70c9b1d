//! Interpolated values `zeta^t_n({1}_k)` and which of them admit a determinant form.

use mzvkit::exact::{format_rat, interp_at, interp_trunc, rat};
use mzvkit::identities::{interp_det_solvable_k4, interp_det_unsolvable_k5_half};

fn main() {
    let n = 6;
    for k in 1..=4 {
        println!("zeta^t_{n}({{1}}_{k}) = {}  (t^0, t^1, ...)", interp_trunc(n, k));
        println!("  at t = 1/2: {}", format_rat(&interp_at(n, k, &rat(1, 2))));
    }

    for t in [rat(0, 1), rat(1, 3), rat(1, 2), rat(1, 1)] {
        let s = interp_det_solvable_k4(&t);
        match &s.witness {
            Some(w) => {
                let w: Vec<String> = w.iter().map(|c| c.to_string()).collect();
                println!("k = 4, t = {t}: determinant with superdiagonal [{}]", w.join(", "));
            }
            None => println!("k = 4, t = {t}: no determinant form"),
        }
    }

    let ledger = interp_det_unsolvable_k5_half();
    println!("k = 5, t = 1/2:");
    for b in &ledger.branches {
        println!("  {}: {}", b.assumption, b.contradiction.as_deref().unwrap_or("open"));
    }
}
