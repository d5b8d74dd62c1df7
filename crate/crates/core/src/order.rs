//! Monomial orders on `N^m` given by integer weight matrices.
//!
//! `a < b` when the first row `r` with `r·a != r·b` has `r·a < r·b`. Exponents
//! the matrix cannot separate fall back to the lexicographic order in which the
//! last coordinate is compared first. The named orders follow the variable
//! convention `t1 < t2 < ... < tm`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exponent::Exponent;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    rows: Vec<Vec<i64>>,
    dim: usize,
    rank_deficient: bool,
}

impl MonomialOrder {
    /// The named standard order in dimension `m`.
    ///
    /// Lex compares `t_m` first, then `t_{m-1}`, and so on. GrLex compares total degree
    /// and then lex. GrevLex compares total degree and then prefers the smaller
    /// monomial with the larger exponent of `t1`, then `t2`, and so on.
    pub fn standard(kind: OrderKind, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroDimension);
        }
        let basis = |k: usize, v: i64| {
            let mut r = alloc::vec![0i64; m];
            r[k] = v;
            r
        };
        let rows: Vec<Vec<i64>> = match kind {
            OrderKind::Lex => (0..m).rev().map(|k| basis(k, 1)).collect(),
            OrderKind::GrLex => core::iter::once(alloc::vec![1; m])
                .chain((1..m).rev().map(|k| basis(k, 1)))
                .collect(),
            OrderKind::GrevLex => core::iter::once(alloc::vec![1; m])
                .chain((0..m - 1).map(|k| basis(k, -1)))
                .collect(),
        };
        Ok(MonomialOrder {
            rows,
            dim: m,
            rank_deficient: false,
        })
    }

    /// Validates an arbitrary weight matrix.
    ///
    /// Every nonzero `a` in `N^m` must satisfy `0 < a`: for each axis `k`, the
    /// first row with a nonzero entry in column `k` must be positive there. A
    /// matrix of rank below `m` is accepted; ties it leaves are broken by the
    /// lexicographic fallback and [`MonomialOrder::is_rank_deficient`] reports it.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let m = match rows.first() {
            Some(r) if !r.is_empty() => r.len(),
            Some(_) => return Err(Error::ZeroDimension),
            None => return Err(Error::InvalidArgument("weight matrix has no rows")),
        };
        for r in &rows {
            if r.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: r.len(),
                });
            }
        }
        for k in 0..m {
            if let Some(r) = rows.iter().find(|r| r[k] != 0) {
                if r[k] < 0 {
                    return Err(Error::NotAMonomialOrder(
                        "some basis vector would precede 0",
                    ));
                }
            }
        }
        let rank_deficient = rank(&rows) < m;
        Ok(MonomialOrder {
            rows,
            dim: m,
            rank_deficient,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn is_rank_deficient(&self) -> bool {
        self.rank_deficient
    }

    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering> {
        a.check_dim(self.dim)?;
        b.check_dim(self.dim)?;
        Ok(self.cmp_unchecked(a, b))
    }

    pub(crate) fn cmp_unchecked(&self, a: &Exponent, b: &Exponent) -> Ordering {
        for r in &self.rows {
            let wa = dot(r, a);
            let wb = dot(r, b);
            match wa.cmp(&wb) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        a.coords().iter().rev().cmp(b.coords().iter().rev())
    }

    /// The minimum of a finite nonempty set.
    pub fn min<'a, I>(&self, set: I) -> Result<&'a Exponent>
    where
        I: IntoIterator<Item = &'a Exponent>,
    {
        let mut best: Option<&Exponent> = None;
        for e in set {
            e.check_dim(self.dim)?;
            best = match best {
                Some(b) if self.cmp_unchecked(b, e) != Ordering::Greater => Some(b),
                _ => Some(e),
            };
        }
        best.ok_or(Error::EmptySet)
    }
}

fn dot(r: &[i64], a: &Exponent) -> i128 {
    r.iter()
        .zip(a.coords())
        .map(|(&x, &y)| x as i128 * y as i128)
        .sum()
}

/// Rank over the rationals by fraction-free elimination.
fn rank(rows: &[Vec<i64>]) -> usize {
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let cols = mat.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..mat.len()).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(rank, p);
        for i in rank + 1..mat.len() {
            if mat[i][c].is_zero() {
                continue;
            }
            let g = mat[rank][c].gcd(&mat[i][c]);
            let fp = &mat[i][c] / &g;
            let fi = &mat[rank][c] / &g;
            let (top, bottom) = mat.split_at_mut(i);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[rank][c..]) {
                *x = &*x * &fi - y * &fp;
            }
            debug_assert!(mat[i][c].is_zero());
        }
        rank += 1;
    }
    rank
}
