//! High-precision single and multiple zeta values, and the value of zeta*(3,1).

use mzvkit::closed::reduce_to_single;
use mzvkit::exact::rat;
use mzvkit::numeric::{eval_zeta_poly, mzv_numeric, zeta_single, ZetaPoly};

fn main() -> mzvkit::Result<()> {
    println!("zeta(3)     = {}", zeta_single(3, 40)?);
    println!("zeta(2,1)   = {}", mzv_numeric(&"2,1".parse()?, 40)?);

    let w = "3,1".parse()?;
    let star = mzv_numeric(&w, 30)?.add(&zeta_single(4, 30)?);
    println!("zeta*(3,1)  = {star}");
    println!("5/4 zeta(4) = {}", zeta_single(4, 30)?.scale(&rat(5, 4)));
    let r = reduce_to_single(&ZetaPoly::zeta_star(w));
    println!("reduction   : {} ≈ {}", r.poly, eval_zeta_poly(&r.poly, 30)?);
    Ok(())
}
