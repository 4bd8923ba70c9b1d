//! Symmetric-function forms of `ζ_n({1}_k)` and `ζ*_n({1}_k)`: complete Bell
//! polynomials, MacDonald's `P_k`/`Q_k`, and the Hessenberg determinants, plus the
//! power-sum coordinates used by the interpolated-determinant analysis.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::combinatorics::{binomial, factorial, partitions_by_multiplicity, StirlingTriangle};
use super::harmonic::harmonic_column;
use super::hessenberg::{hessenberg_det, plain_ones_superdiag, star_ones_superdiag};
use super::{inv_pow, rat_int, sign, Rat};
use crate::error::{Error, Result};

/// Complete Bell polynomial `B_k(x_1, …, x_k)` via
/// `B_m = Σ_{j=1..m} binom(m-1, j-1) x_j B_{m-j}`.
pub fn complete_bell(k: usize, x: &[Rat]) -> Rat {
    assert!(x.len() >= k, "complete_bell needs {k} arguments");
    let mut b: Vec<Rat> = vec![Rat::one()];
    for m in 1..=k {
        let mut acc = Rat::zero();
        for j in 1..=m {
            if x[j - 1].is_zero() {
                continue;
            }
            let c = Rat::from_integer(binomial(m as u64 - 1, j as u64 - 1));
            acc += c * &x[j - 1] * &b[m - j];
        }
        b.push(acc);
    }
    b.pop().expect("nonempty")
}

fn macdonald(k: usize, x: &[Rat], signed: bool) -> Rat {
    assert!(x.len() >= k, "macdonald polynomial needs {k} arguments");
    let mut total = Rat::zero();
    for mult in partitions_by_multiplicity(k) {
        let mut term = Rat::one();
        let mut even_parts = 0usize;
        for (i, &m) in mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let j = i + 1;
            if j % 2 == 0 {
                even_parts += m;
            }
            let base = &x[i] / rat_int(j as i64);
            term *= num_traits::pow(base, m) / Rat::from_integer(factorial(m as u64));
        }
        if signed && even_parts % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    total
}

/// MacDonald's `P_k(x_1,…,x_k) = Σ_{m_1+2m_2+…=k} (-1)^{m_2+m_4+…} Π (x_j/j)^{m_j}/m_j!`.
/// `P_0 = 1`.
pub fn macdonald_p(k: usize, x: &[Rat]) -> Rat {
    macdonald(k, x, true)
}

/// MacDonald's `Q_k`: the same partition sum without signs.
pub fn macdonald_q(k: usize, x: &[Rat]) -> Rat {
    macdonald(k, x, false)
}

/// `ζ_n({1}_k) = [n+1, k+1]/n!`.
pub fn plain_ones_stirling(n: u64, k: usize) -> Rat {
    let tri = StirlingTriangle::new(n as usize + 1);
    Rat::new(BigInt::from(tri.get(n as usize + 1, k + 1)), factorial(n))
}

/// `ζ_n({1}_k) = (-1)^k/k! · B_k(-0!H^(1), -1!H^(2), …, -(k-1)!H^(k))`.
pub fn plain_ones_bell(n: u64, k: usize) -> Rat {
    let x: Vec<Rat> = harmonic_column(n, k)
        .into_iter()
        .enumerate()
        .map(|(i, h)| -h * Rat::from_integer(factorial(i as u64)))
        .collect();
    sign(k as i64) * complete_bell(k, &x) / Rat::from_integer(factorial(k as u64))
}

/// `ζ_n({1}_k) = P_k(H_n^(1), …, H_n^(k))`.
pub fn plain_ones_macdonald(n: u64, k: usize) -> Rat {
    macdonald_p(k, &harmonic_column(n, k))
}

/// `ζ_n({1}_k)` as `1/k!` times the Hessenberg determinant with superdiagonal `(1, …, k-1)`.
pub fn plain_ones_det(n: u64, k: usize) -> Result<Rat> {
    if k == 0 {
        return Ok(Rat::one());
    }
    let det = hessenberg_det(k, &harmonic_column(n, k), &plain_ones_superdiag(k))?;
    Ok(det.a / Rat::from_integer(factorial(k as u64)))
}

/// `ζ*_n({1}_k) = Σ_{j=1..n} binom(n,j) (-1)^{j-1}/j^k` (for `k ≥ 1`).
pub fn star_ones_binomial(n: u64, k: usize) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    (1..=n).fold(Rat::zero(), |acc, j| {
        acc + sign(j as i64 - 1) * Rat::from_integer(binomial(n, j)) * inv_pow(j, k as u32)
    })
}

/// `ζ*_n({1}_k) = 1/k! · B_k(0!H^(1), 1!H^(2), …, (k-1)!H^(k))`.
pub fn star_ones_bell(n: u64, k: usize) -> Rat {
    let x: Vec<Rat> = harmonic_column(n, k)
        .into_iter()
        .enumerate()
        .map(|(i, h)| h * Rat::from_integer(factorial(i as u64)))
        .collect();
    complete_bell(k, &x) / Rat::from_integer(factorial(k as u64))
}

/// `ζ*_n({1}_k) = Q_k(H_n^(1), …, H_n^(k))`.
pub fn star_ones_macdonald(n: u64, k: usize) -> Rat {
    macdonald_q(k, &harmonic_column(n, k))
}

/// `ζ*_n({1}_k)` as `1/k!` times the Hessenberg determinant with superdiagonal `(-1, …, -(k-1))`.
pub fn star_ones_det(n: u64, k: usize) -> Result<Rat> {
    if k == 0 {
        return Ok(Rat::one());
    }
    let det = hessenberg_det(k, &harmonic_column(n, k), &star_ones_superdiag(k))?;
    Ok(det.a / Rat::from_integer(factorial(k as u64)))
}

/// Table `t[n][k] = ζ*_n({1}_k)` for `n ≤ n_max`, `k ≤ k_max`, filled by
/// `ζ*_n({1}_k) = ζ*_{n-1}({1}_k) + ζ*_n({1}_{k-1})/n`.
pub fn star_ones_recurrence(n_max: u64, k_max: usize) -> Vec<Vec<Rat>> {
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(n_max as usize + 1);
    let mut row0 = vec![Rat::zero(); k_max + 1];
    row0[0] = Rat::one();
    t.push(row0);
    for n in 1..=n_max {
        let inv_n = inv_pow(n, 1);
        let mut row = vec![Rat::one(); k_max + 1];
        for k in 1..=k_max {
            row[k] = &t[n as usize - 1][k] + &row[k - 1] * &inv_n;
        }
        t.push(row);
    }
    t
}

/// Coefficients of `Π_{j=1..n} (1 + q/j)`, lowest power first; entry `k` is `ζ_n({1}_k)`.
pub fn harmonic_product_poly(n: u64) -> Vec<Rat> {
    let mut poly = vec![Rat::one()];
    for j in 1..=n {
        let inv = inv_pow(j, 1);
        let mut next = poly.clone();
        next.push(Rat::zero());
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c * &inv;
        }
        poly = next;
    }
    poly
}

/// Partition sum form of `ζ^{1/2}_n({1}_k)`: only odd parts, weight
/// `2^{m_1+m_3+…}/(2^k m_1! m_3! …) Π (H^(j)/j)^{m_j}`.
pub fn hoffman_ihara_half_partition(n: u64, k: usize) -> Rat {
    let h = harmonic_column(n, k);
    let two_k = Rat::from_integer(BigInt::from(2).pow(k as u32));
    let mut total = Rat::zero();
    for mult in partitions_by_multiplicity(k) {
        if mult.iter().enumerate().any(|(i, &m)| (i + 1) % 2 == 0 && m > 0) {
            continue;
        }
        let mut term = Rat::one();
        for (i, &m) in mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let base = rat_int(2) * &h[i] / rat_int(i as i64 + 1);
            term *= num_traits::pow(base, m) / Rat::from_integer(factorial(m as u64));
        }
        total += term;
    }
    total / two_k
}

/// Bell form of `ζ^{1/2}_n({1}_k)`: `1/(2^k k!) · B_k(0!·2H^(1), 0, 2!·2H^(3), 0, …)`.
pub fn hoffman_ihara_half_bell(n: u64, k: usize) -> Rat {
    let x: Vec<Rat> = harmonic_column(n, k)
        .into_iter()
        .enumerate()
        .map(|(i, h)| {
            if i % 2 == 0 {
                rat_int(2) * h * Rat::from_integer(factorial(i as u64))
            } else {
                Rat::zero()
            }
        })
        .collect();
    let denom = Rat::from_integer(BigInt::from(2).pow(k as u32) * factorial(k as u64));
    complete_bell(k, &x) / denom
}

/// Partitions of `k` as weakly decreasing part lists, largest part first within the
/// list and lists ordered from `(k)` down to `(1,…,1)`.
pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    partitions_by_multiplicity(k)
        .into_iter()
        .map(|mult| {
            let mut parts = Vec::new();
            for (i, &m) in mult.iter().enumerate().rev() {
                parts.extend(std::iter::repeat_n(i + 1, m));
            }
            parts
        })
        .collect()
}

/// `p_λ(n) = Π_i H_n^(λ_i)`.
pub fn power_sum_monomial(h: &[Rat], lambda: &[usize]) -> Rat {
    lambda.iter().fold(Rat::one(), |acc, &s| acc * &h[s - 1])
}

/// Writes a symmetric quantity of weight `k` in power-sum coordinates: finds rationals
/// `a_λ` with `value(n) = Σ_λ a_λ Π H_n^(λ_i)` for every `n` in `1..=n_max`.
///
/// Solves the linear system exactly. Rows beyond those needed for full rank act as a
/// consistency check; an inconsistent or rank-deficient system is an error.
pub fn power_sum_coordinates<F>(k: usize, n_max: u64, value: F) -> Result<Vec<(Vec<usize>, Rat)>>
where
    F: Fn(u64) -> Rat,
{
    let lambdas = partitions(k);
    let cols = lambdas.len();
    let mut rows: Vec<Vec<Rat>> = (1..=n_max)
        .map(|n| {
            let h = harmonic_column(n, k.max(1));
            let mut row: Vec<Rat> = lambdas.iter().map(|l| power_sum_monomial(&h, l)).collect();
            row.push(value(n));
            row
        })
        .collect();
    // Gauss-Jordan elimination on the augmented matrix
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for c in 0..cols {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            return Err(Error::Precondition(format!(
                "power-sum system for k = {k} is rank deficient with n <= {n_max}"
            )));
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][c].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pr = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !r[cols].is_zero()) {
        return Err(Error::Precondition(format!(
            "value is not a weight-{k} polynomial in harmonic numbers"
        )));
    }
    Ok(lambdas
        .into_iter()
        .zip(pivots)
        .map(|(l, r)| (l, rows[r][cols].clone()))
        .collect())
}
