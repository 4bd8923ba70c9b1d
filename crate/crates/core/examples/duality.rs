//! Alternating binomial sums of zeta-star values and their dual words.

use mzvkit::exact::{alt_binom_star, duality_image, format_rat, zts_trunc};
use mzvkit::IndexWord;

fn main() -> mzvkit::Result<()> {
    for w in ["2", "3,1", "2,1,1", "3,2,1"] {
        let w: IndexWord = w.parse()?;
        let dual = duality_image(&w)?;
        let n = 7;
        println!(
            "w = ({w}) -> ({dual}):  sum = {}  zeta*_{n}(dual) = {}",
            format_rat(&alt_binom_star(n, &w)?),
            format_rat(&zts_trunc(n, &dual))
        );
    }
    Ok(())
}
