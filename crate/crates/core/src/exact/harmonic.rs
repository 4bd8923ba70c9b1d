use num_traits::Zero;

use super::{inv_pow, Rat};

/// Generalized harmonic number `H_n^(s) = Σ_{k=1..n} k^{-s}`; `H_0^(s) = 0`.
pub fn harmonic(n: u64, s: u32) -> Rat {
    (1..=n).fold(Rat::zero(), |acc, k| acc + inv_pow(k, s))
}

/// `[H_n^(1), …, H_n^(k)]`.
pub fn harmonic_column(n: u64, k: usize) -> Vec<Rat> {
    (1..=k as u32).map(|s| harmonic(n, s)).collect()
}

/// `H_n^(s)` for every `0 ≤ n ≤ n_max`, `1 ≤ s ≤ s_max`, built by running sums.
#[derive(Clone, Debug)]
pub struct HarmonicTable {
    // rows[s-1][n]
    rows: Vec<Vec<Rat>>,
}

impl HarmonicTable {
    pub fn new(n_max: usize, s_max: u32) -> Self {
        let rows = (1..=s_max)
            .map(|s| {
                let mut row = Vec::with_capacity(n_max + 1);
                row.push(Rat::zero());
                for n in 1..=n_max {
                    let next = &row[n - 1] + inv_pow(n as u64, s);
                    row.push(next);
                }
                row
            })
            .collect();
        HarmonicTable { rows }
    }

    pub fn get(&self, n: usize, s: u32) -> &Rat {
        &self.rows[s as usize - 1][n]
    }

    /// `[H_n^(1), …, H_n^(k)]`.
    pub fn column(&self, n: usize, k: usize) -> Vec<Rat> {
        (1..=k as u32).map(|s| self.get(n, s).clone()).collect()
    }
}
