//! Factorials, binomials, Stirling cycle numbers and integer partitions.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default largest `n` for which [`FactorialTable`] will tabulate `n!`.
pub const DEFAULT_FACTORIAL_BOUND: usize = 10_000;

/// `n!` computed directly.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `binom(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Immutable table of `0!, 1!, …, n!`, refusing sizes beyond a configurable bound.
#[derive(Clone, Debug)]
pub struct FactorialTable {
    facts: Vec<BigInt>,
}

impl FactorialTable {
    pub fn up_to(n: usize) -> Result<Self> {
        Self::up_to_with_bound(n, DEFAULT_FACTORIAL_BOUND)
    }

    pub fn up_to_with_bound(n: usize, bound: usize) -> Result<Self> {
        if n > bound {
            return Err(Error::Guard(format!("factorial table of size {n} exceeds bound {bound}")));
        }
        let mut facts = Vec::with_capacity(n + 1);
        facts.push(BigInt::one());
        for k in 1..=n {
            let next = &facts[k - 1] * k;
            facts.push(next);
        }
        Ok(FactorialTable { facts })
    }

    pub fn max(&self) -> usize {
        self.facts.len() - 1
    }

    pub fn factorial(&self, n: usize) -> &BigInt {
        &self.facts[n]
    }

    pub fn binomial(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        &self.facts[n] / (&self.facts[k] * &self.facts[n - k])
    }
}

/// Unsigned Stirling numbers of the first kind `[n, k]` for `0 ≤ n ≤ n_max`.
#[derive(Clone, Debug)]
pub struct StirlingTriangle {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTriangle {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = vec![BigUint::zero(); n + 1];
            // [n,k] = (n-1)[n-1,k] + [n-1,k-1]
            for k in 1..=n {
                let mut v = prev.get(k - 1).cloned().unwrap_or_default();
                if let Some(p) = prev.get(k) {
                    v += p * (n as u64 - 1);
                }
                row[k] = v;
            }
            rows.push(row);
        }
        StirlingTriangle { rows }
    }

    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_default()
    }
}

/// Unsigned Stirling cycle number `[n, k]`.
pub fn stirling_first(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    StirlingTriangle::new(n).get(n, k)
}

/// Integer partitions of `k` in multiplicity form: entry `i` of each vector is the
/// number of parts equal to `i + 1`.
pub fn partitions_by_multiplicity(k: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max_part: usize, mult: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(mult.clone());
            return;
        }
        for part in (1..=max_part.min(rem)).rev() {
            mult[part - 1] += 1;
            go(rem - part, part, mult, out);
            mult[part - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut vec![0; k], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling_first(4, 3), BigUint::from(6u32));
        assert_eq!(stirling_first(5, 3), BigUint::from(35u32));
        assert_eq!(stirling_first(7, 7), BigUint::one());
        assert_eq!(stirling_first(0, 0), BigUint::one());
        assert_eq!(stirling_first(3, 0), BigUint::zero());
        assert_eq!(stirling_first(3, 4), BigUint::zero());
    }

    #[test]
    fn stirling_rows_sum_to_factorial() {
        let t = StirlingTriangle::new(12);
        for n in 0..=12 {
            let s: BigUint = (0..=n).map(|k| t.get(n, k)).sum();
            assert_eq!(BigInt::from(s), factorial(n as u64));
        }
    }

    #[test]
    fn factorial_table() {
        let t = FactorialTable::up_to(20).unwrap();
        assert_eq!(t.binomial(10, 3), BigInt::from(120));
        assert_eq!(t.binomial(3, 10), BigInt::zero());
        assert_eq!(*t.factorial(5), BigInt::from(120));
        assert!(FactorialTable::up_to_with_bound(50, 40).is_err());
        assert!(FactorialTable::up_to(DEFAULT_FACTORIAL_BOUND + 1).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|k| partitions_by_multiplicity(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        for m in partitions_by_multiplicity(6) {
            let total: usize = m.iter().enumerate().map(|(i, c)| (i + 1) * c).sum();
            assert_eq!(total, 6);
        }
        assert_eq!(partitions_by_multiplicity(0), vec![Vec::<usize>::new()]);
    }
}
