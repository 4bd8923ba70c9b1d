//! `S(l1, 0, r1, r2)` in closed form, reduced to single zeta values where possible.

use mzvkit::closed::{zetastar_series_closed, zetastar_series_closed_via, BinomRoute, ClosedFormOutput};
use mzvkit::numeric::series_s_direct;

fn main() -> mzvkit::Result<()> {
    for (l1, r1, r2) in [(1, 1, 2), (2, 1, 2), (1, 2, 1), (2, 3, 3)] {
        let out = ClosedFormOutput::new(zetastar_series_closed(l1, r1, r2)?, 16)?;
        let direct = series_s_direct(l1, 0, r1, r2, 16)?;
        println!("S({l1},0,{r1},{r2}) = {}", out.reduced);
        println!("    closed {}  direct {}", out.numeric, direct);
        if !out.flagged.is_empty() {
            println!("    left unreduced: {:?}", out.flagged.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        }
        let cross = zetastar_series_closed_via(BinomRoute::Direct, l1, r1, r2)?;
        assert_eq!(cross, zetastar_series_closed(l1, r1, r2)?);
    }
    Ok(())
}
