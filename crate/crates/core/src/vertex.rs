//! The idempotent semiring `VB[t]` of vertex polynomials and its fraction
//! semifield `VB(t)`.
//!
//! A vertex polynomial is a finite subset of `N^m` that equals the vertex set of
//! the Newton polyhedron `conv(S) + R^m_{>=0}` it generates. Addition is union
//! followed by vertex projection, multiplication is Minkowski sum followed by
//! vertex projection. The empty set is the zero element and `{0}` is the one.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::feasibility::convex_dominated;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPoly {
    dim: usize,
    vertices: Vec<Exponent>,
}

/// Projects a finite point set onto the vertices of its Newton polyhedron.
pub fn vertex_extract<I>(m: usize, points: I) -> Result<VertexPoly>
where
    I: IntoIterator<Item = Exponent>,
{
    let mut set = BTreeSet::new();
    for p in points {
        p.check_dim(m)?;
        set.insert(p);
    }
    Ok(VertexPoly {
        dim: m,
        vertices: extract_sorted(set),
    })
}

fn extract_sorted(set: BTreeSet<Exponent>) -> Vec<Exponent> {
    let pts: Vec<Exponent> = set.into_iter().rev().collect();
    if pts.len() <= 1 {
        return pts;
    }
    let undominated: Vec<&Exponent> = pts
        .iter()
        .filter(|p| !pts.iter().any(|q| q != *p && q.divides(p)))
        .collect();
    if undominated.len() <= 2 {
        return undominated.into_iter().cloned().collect();
    }
    let m = undominated[0].dim();
    // Minima of monomial orders are vertices; take the m "axis-first" lex minima.
    let mut certain = alloc::vec![false; undominated.len()];
    for k in 0..m {
        let best = (0..undominated.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (undominated[a].coords(), undominated[b].coords());
                pa[k].cmp(&pb[k]).then_with(|| pa.cmp(pb))
            })
            .expect("nonempty");
        certain[best] = true;
    }
    let mut out = Vec::with_capacity(undominated.len());
    for (i, p) in undominated.iter().enumerate() {
        if certain[i] {
            out.push((*p).clone());
            continue;
        }
        let others: Vec<&Exponent> = undominated
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| *q)
            .collect();
        if !convex_dominated(&others, p) {
            out.push((*p).clone());
        }
    }
    out
}

impl VertexPoly {
    pub fn zero(m: usize) -> Self {
        VertexPoly {
            dim: m,
            vertices: Vec::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        VertexPoly {
            dim: m,
            vertices: alloc::vec![Exponent::zero(m)],
        }
    }

    pub fn monomial(e: Exponent) -> Self {
        VertexPoly {
            dim: e.dim(),
            vertices: alloc::vec![e],
        }
    }

    /// Builds a vertex polynomial from an arbitrary point set.
    pub fn from_points<I: IntoIterator<Item = Exponent>>(m: usize, points: I) -> Result<Self> {
        vertex_extract(m, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The vertices in decreasing lexicographic order.
    pub fn vertices(&self) -> &[Exponent] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.vertices.len() == 1 && self.vertices[0].is_zero()
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.vertices.binary_search_by(|v| e.cmp(v)).is_ok()
    }

    /// Whether the two vertex sets share a point.
    pub fn meets(&self, other: &VertexPoly) -> bool {
        self.vertices.iter().any(|v| other.contains(v))
    }

    fn check(&self, other: &VertexPoly) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    /// Tropical sum: union, then vertex projection.
    pub fn add(&self, other: &VertexPoly) -> Result<VertexPoly> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &VertexPoly) -> VertexPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() || self == other {
            return self.clone();
        }
        let set: BTreeSet<Exponent> = self
            .vertices
            .iter()
            .chain(&other.vertices)
            .cloned()
            .collect();
        VertexPoly {
            dim: self.dim,
            vertices: extract_sorted(set),
        }
    }

    /// Tropical product: Minkowski sum, then vertex projection.
    pub fn mul(&self, other: &VertexPoly) -> Result<VertexPoly> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &VertexPoly) -> VertexPoly {
        if self.is_zero() || other.is_zero() {
            return VertexPoly::zero(self.dim);
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let set: BTreeSet<Exponent> = self
            .vertices
            .iter()
            .flat_map(|p| other.vertices.iter().map(move |q| p + q))
            .collect();
        VertexPoly {
            dim: self.dim,
            vertices: extract_sorted(set),
        }
    }

    pub fn pow(&self, k: u32) -> VertexPoly {
        // The vertices of a k-fold Minkowski sum of a vertex set are its k-dilates.
        if k == 0 {
            return VertexPoly::one(self.dim);
        }
        VertexPoly {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.scaled(k)).collect(),
        }
    }

    /// `a <= b` iff `a ⊕ b = b`.
    pub fn leq(&self, other: &VertexPoly) -> Result<bool> {
        self.check(other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &VertexPoly) -> bool {
        self.is_zero() || &self.add_unchecked(other) == other
    }
}

impl fmt::Debug for VertexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// An element `a/b` of `VB(t)`, stored unreduced.
///
/// Equality is by cross-multiplication, `a/b = c/d` iff `a ⊙ d = b ⊙ c`.
#[derive(Clone)]
pub struct VertexFraction {
    num: VertexPoly,
    den: VertexPoly,
}

impl VertexFraction {
    pub fn new(num: VertexPoly, den: VertexPoly) -> Result<Self> {
        num.check(&den)?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(VertexFraction { num, den })
    }

    pub fn from_poly(a: VertexPoly) -> Self {
        let den = VertexPoly::one(a.dim);
        VertexFraction { num: a, den }
    }

    pub fn zero(m: usize) -> Self {
        Self::from_poly(VertexPoly::zero(m))
    }

    pub fn one(m: usize) -> Self {
        Self::from_poly(VertexPoly::one(m))
    }

    pub fn num(&self) -> &VertexPoly {
        &self.num
    }

    pub fn den(&self) -> &VertexPoly {
        &self.den
    }

    pub fn dim(&self) -> usize {
        self.num.dim
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn check(&self, other: &VertexFraction) -> Result<()> {
        self.num.check(&other.num)
    }

    pub fn add(&self, other: &VertexFraction) -> Result<VertexFraction> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &VertexFraction) -> VertexFraction {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return VertexFraction {
                num: self.num.add_unchecked(&other.num),
                den: self.den.clone(),
            };
        }
        let num = self
            .num
            .mul_unchecked(&other.den)
            .add_unchecked(&self.den.mul_unchecked(&other.num));
        VertexFraction {
            num,
            den: self.den.mul_unchecked(&other.den),
        }
    }

    pub fn mul(&self, other: &VertexFraction) -> Result<VertexFraction> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &VertexFraction) -> VertexFraction {
        VertexFraction {
            num: self.num.mul_unchecked(&other.num),
            den: self.den.mul_unchecked(&other.den),
        }
    }

    /// The inverse `b/a` of a nonzero fraction.
    pub fn recip(&self) -> Result<VertexFraction> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(VertexFraction {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    /// `a/b <= c/d` iff `a ⊙ d <= b ⊙ c`.
    pub fn leq(&self, other: &VertexFraction) -> Result<bool> {
        self.check(other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &VertexFraction) -> bool {
        let (l, r) = self.cross(other);
        l.leq_unchecked(&r)
    }

    fn cross(&self, other: &VertexFraction) -> (VertexPoly, VertexPoly) {
        (
            self.num.mul_unchecked(&other.den),
            self.den.mul_unchecked(&other.num),
        )
    }

    /// Membership in the unit ball `{x : x <= 1}`.
    pub fn in_unit_ball(&self) -> bool {
        self.num.leq_unchecked(&self.den)
    }

    /// `self ≪ other`: `self <= other` and the cross-multiplied vertex sets are
    /// disjoint.
    pub fn irrelevant(&self, other: &VertexFraction) -> Result<bool> {
        self.check(other)?;
        let (l, r) = self.cross(other);
        Ok(l.leq_unchecked(&r) && !l.meets(&r))
    }
}

impl PartialEq for VertexFraction {
    fn eq(&self, other: &Self) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        let (l, r) = self.cross(other);
        l == r
    }
}

impl Eq for VertexFraction {}

impl fmt::Debug for VertexFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The element `(t^{2n+1} + u^{2n+1}) / (t^{2n+1} + t^n u^n + u^{2n+1})` of
/// `VB(t,u)`, whose principal ideals form a strictly increasing chain.
pub fn omega(n: u32) -> Result<VertexFraction> {
    if n < 1 {
        return Err(Error::InvalidArgument("omega index must be at least 1"));
    }
    let k = 2 * n + 1;
    let e = |a: u32, b: u32| Exponent::from([a, b]);
    let num = VertexPoly {
        dim: 2,
        vertices: alloc::vec![e(k, 0), e(0, k)],
    };
    let den = vertex_extract(2, [e(k, 0), e(n, n), e(0, k)])?;
    VertexFraction::new(num, den)
}
