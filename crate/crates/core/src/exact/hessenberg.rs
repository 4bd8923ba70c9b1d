//! Lower-Hessenberg determinants with Toeplitz lower part.
//!
//! The `k × k` matrix has `H^(r-s+1)` at row `r`, column `s ≤ r`, a free
//! superdiagonal `c_1, …, c_{k-1}` at `(r, r+1)`, and zeros above it.

use super::ring::{QuadExt, Ring};
use super::{rat_int, Rat};
use crate::error::{Error, Result};

/// Determinant by expansion along the last row:
/// `D_j = Σ_{i=1..j} (-1)^{j-i} H^(j-i+1) (Π_{m=i}^{j-1} c_m) D_{i-1}`, `D_0 = 1`.
///
/// `column[s-1]` holds `H^(s)`; `superdiag[m-1]` holds `c_m`.
pub fn hessenberg_expand<R: Ring>(column: &[R], superdiag: &[R]) -> R {
    let k = column.len();
    assert_eq!(superdiag.len() + 1, k.max(1), "superdiagonal must have k-1 entries");
    let mut d: Vec<R> = Vec::with_capacity(k + 1);
    d.push(R::unit());
    for j in 1..=k {
        let mut acc = R::nil();
        // run = Π_{m=i}^{j-1} c_m, grown as i decreases
        let mut run = R::unit();
        for i in (1..=j).rev() {
            if i < j {
                run = run.times(&superdiag[i - 1]);
            }
            let term = column[j - i].times(&run).times(&d[i - 1]);
            acc = if (j - i) % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
        }
        d.push(acc);
    }
    d.pop().expect("nonempty")
}

/// Determinant for a rational Toeplitz column and a superdiagonal in one quadratic
/// extension `ℚ(√d)`. Mixed radicands are rejected.
pub fn hessenberg_det(k: usize, column: &[Rat], superdiag: &[QuadExt]) -> Result<QuadExt> {
    if k == 0 {
        return Err(Error::Precondition("hessenberg_det needs k >= 1".into()));
    }
    if column.len() < k || superdiag.len() != k - 1 {
        return Err(Error::Precondition(format!(
            "need {k} column entries and {} superdiagonal entries, got {} and {}",
            k - 1,
            column.len(),
            superdiag.len()
        )));
    }
    QuadExt::check_consistent(superdiag)?;
    let col: Vec<QuadExt> = column[..k].iter().map(|h| QuadExt::base(h.clone())).collect();
    Ok(hessenberg_expand(&col, superdiag))
}

/// Superdiagonal `(1, 2, …, k-1)` whose determinant is `k!·ζ_n({1}_k)`.
pub fn plain_ones_superdiag(k: usize) -> Vec<QuadExt> {
    (1..k).map(|m| QuadExt::base(rat_int(m as i64))).collect()
}

/// Superdiagonal `(-1, -2, …, -(k-1))` whose determinant is `k!·ζ*_n({1}_k)`.
pub fn star_ones_superdiag(k: usize) -> Vec<QuadExt> {
    (1..k).map(|m| QuadExt::base(rat_int(-(m as i64)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::harmonic::harmonic_column;
    use crate::exact::{rat, zt_trunc, zts_trunc};
    use crate::index::IndexWord;

    /// Cofactor expansion over all permutations, as an independent check.
    fn leibniz(m: &[Vec<Rat>]) -> Rat {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.len();
        let mut total = Rat::from_integer(0.into());
        for p in perms(n) {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            let mut prod = Rat::from_integer(1.into());
            for (i, &pi) in p.iter().enumerate() {
                prod *= &m[i][pi];
            }
            if inv % 2 == 0 {
                total += prod;
            } else {
                total -= prod;
            }
        }
        total
    }

    #[test]
    fn expansion_matches_leibniz() {
        let col = vec![rat(3, 2), rat(-2, 5), rat(7, 3), rat(1, 9), rat(-4, 1)];
        let sup = vec![rat(2, 1), rat(-1, 3), rat(5, 7), rat(3, 1)];
        let k = col.len();
        let mut m = vec![vec![rat(0, 1); k]; k];
        for r in 0..k {
            for s in 0..=r {
                m[r][s] = col[r - s].clone();
            }
            if r + 1 < k {
                m[r][r + 1] = sup[r].clone();
            }
        }
        assert_eq!(hessenberg_expand(&col, &sup), leibniz(&m));
    }

    #[test]
    fn lemma_superdiagonals_at_n2() {
        let col = harmonic_column(2, 2);
        let det = hessenberg_det(2, &col, &plain_ones_superdiag(2)).unwrap();
        assert_eq!(det, QuadExt::base(rat(1, 1))); // 2!·ζ_2(1,1) = 2·1/2
        assert_eq!(det.a / rat(2, 1), zt_trunc(2, &IndexWord::ones(2)));
        let det = hessenberg_det(2, &col, &star_ones_superdiag(2)).unwrap();
        assert_eq!(det.a / rat(2, 1), zts_trunc(2, &IndexWord::ones(2)));
        assert_eq!(zts_trunc(2, &IndexWord::ones(2)), rat(7, 4));
    }

    #[test]
    fn rejects_bad_shapes() {
        let col = harmonic_column(3, 3);
        assert!(hessenberg_det(3, &col, &plain_ones_superdiag(2)).is_err());
        assert!(hessenberg_det(0, &col, &[]).is_err());
        let mixed = vec![
            QuadExt::radical(rat(1, 1), rat(2, 1)),
            QuadExt::radical(rat(1, 1), rat(-2, 1)),
        ];
        assert!(matches!(
            hessenberg_det(3, &col, &mixed),
            Err(Error::InconsistentRadicand(_, _))
        ));
    }
}
