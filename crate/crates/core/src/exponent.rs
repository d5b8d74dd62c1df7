//! Lattice points of `N^m`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use crate::error::{Error, Result};

/// An exponent vector `I` in `N^m`, standing for the monomial `t^I`.
///
/// The derived `Ord` is lexicographic on the coordinates; it is the canonical
/// storage order, not a monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(coords: Vec<u32>) -> Self {
        Exponent(coords)
    }

    pub fn zero(m: usize) -> Self {
        Exponent(alloc::vec![0; m])
    }

    /// The standard basis vector `e_k` (0-based axis).
    pub fn unit(m: usize, k: usize) -> Self {
        let mut v = alloc::vec![0; m];
        v[k] = 1;
        Exponent(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self - other` when it stays in `N^m`.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    pub fn scaled(&self, k: u32) -> Exponent {
        Exponent(self.0.iter().map(|c| c * k).collect())
    }

    pub(crate) fn check_dim(&self, m: usize) -> Result<()> {
        if self.dim() == m {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: m,
                found: self.dim(),
            })
        }
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent(v.to_vec())
    }
}

impl Add for &Exponent {
    type Output = Exponent;

    fn add(self, rhs: &Exponent) -> Exponent {
        debug_assert_eq!(self.dim(), rhs.dim());
        Exponent(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Exponent {
    type Output = Exponent;

    fn add(self, rhs: Exponent) -> Exponent {
        &self + &rhs
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// All exponents of `N^m` with total degree at most `bound`, graded by degree.
///
/// Within one degree the points come in decreasing lexicographic order, so
/// `(1,0)` precedes `(0,1)`.
pub fn exponents_up_to(m: usize, bound: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for d in 0..=bound {
        let mut cur = alloc::vec![0u32; m];
        fill_degree(&mut cur, 0, d, &mut out);
    }
    out
}

fn fill_degree(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Exponent>) {
    let m = cur.len();
    if m == 0 {
        if left == 0 {
            out.push(Exponent(Vec::new()));
        }
        return;
    }
    if pos == m - 1 {
        cur[pos] = left;
        out.push(Exponent(cur.clone()));
        return;
    }
    for c in (0..=left).rev() {
        cur[pos] = c;
        fill_degree(cur, pos + 1, left - c, out);
    }
    cur[pos] = 0;
}
