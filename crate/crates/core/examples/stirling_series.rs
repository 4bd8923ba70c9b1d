//! `S(0, l2, r1, r2)`: exact truncation pieces, the closed form, and direct summation.

use mzvkit::closed::{stirling_series_closed, stirling_series_trunc_pieces, ClosedFormOutput};
use mzvkit::exact::{format_rat, rat_to_f64};
use mzvkit::numeric::series_s_direct;

fn main() -> mzvkit::Result<()> {
    let (l2, r1, r2) = (1, 2, 2);
    let p = stirling_series_trunc_pieces(20, l2, r1, r2)?;
    println!("N = 20: m-sum {} + K {} + E_N {:.3e}", format_rat(&p.m_sum), format_rat(&p.k), rat_to_f64(&p.e_n));

    let out = ClosedFormOutput::new(stirling_series_closed(l2, r1, r2)?, 20)?;
    println!("closed  {}  =  {}", out.poly, out.reduced);
    println!("        {}", out.numeric);
    println!("direct  {}", series_s_direct(0, l2, r1, r2, 20)?);
    Ok(())
}
