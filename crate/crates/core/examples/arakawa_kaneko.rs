//! The series as differences of Arakawa–Kaneko type values, and the general split `S = S1 + S2`.

use mzvkit::closed::{arakawa_relation, general_s1};

fn main() -> mzvkit::Result<()> {
    let c = arakawa_relation(1, 1, 2, 15)?;
    println!("S(1,1,0,2) = {} - {}", c.plus, c.minus);
    println!("  xi side {}  direct {}  gap {:.1e}", c.xi_value, c.direct, c.discrepancy);

    let g = general_s1(1, 2, 2, 2, 15)?;
    println!("S(1,2,2,2): S1 {} + S2 {}", g.s1, g.s2);
    println!("  direct {}  gap {:.1e}", g.direct, g.discrepancy);
    Ok(())
}
