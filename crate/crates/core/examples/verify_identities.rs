//! Run the whole identity catalogue on its default grids, then one identity on a custom grid.

use mzvkit::identities::{verify, verify_all};

fn main() -> mzvkit::Result<()> {
    for r in verify_all()? {
        println!("{:<20} {:>5} cases, {} failed, {} ms", r.identity, r.cases_total, r.cases_failed, r.elapsed_ms);
    }
    let r = verify("lem10-duality", Some("N<=8,r<=3,a<=2,b<=2"))?;
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
    Ok(())
}
