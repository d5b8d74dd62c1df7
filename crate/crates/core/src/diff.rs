//! Differential polynomials over `K((t))`, Boolean weight vectors, the
//! tropical seminorm `trop_w`, `w`-translations and initial forms.
//!
//! A weight `w_i` is a subset of `N^m`, a Boolean power series prescribing the
//! support of a hypothetical solution component. The translation `P_w`
//! substitutes `x_{i,J} -> s(w_i, J)·x_{i,J}` for a polynomial `s(w_i, J)` with
//! support `Vert((w_i - J)_{>=0})` and rescales by `e_K(b)/e_K(a)` where
//! `trop_w(P) = a/b`, which puts every coefficient into the unit ball.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exponent::{exponents_up_to, Exponent};
use crate::order::MonomialOrder;
use crate::poly::{default_names, QPoly};
use crate::series::RationalFunction;
use crate::vertex::{vertex_extract, VertexFraction, VertexPoly};
use crate::Rational;

/// A subset of `N^m` that is full, finite, or cofinite.
#[derive(Clone, Debug, Eq)]
pub enum BooleanWeight {
    Full,
    Finite(BTreeSet<Exponent>),
    /// `N^m` minus the listed points.
    Cofinite(BTreeSet<Exponent>),
}

impl PartialEq for BooleanWeight {
    fn eq(&self, other: &Self) -> bool {
        use BooleanWeight::*;
        match (self, other) {
            (Finite(a), Finite(b)) | (Cofinite(a), Cofinite(b)) => a == b,
            (Full, Full) => true,
            (Full, Cofinite(f)) | (Cofinite(f), Full) => f.is_empty(),
            _ => false,
        }
    }
}

impl BooleanWeight {
    pub fn finite<I: IntoIterator<Item = Exponent>>(points: I) -> Self {
        BooleanWeight::Finite(points.into_iter().collect())
    }

    pub fn cofinite<I: IntoIterator<Item = Exponent>>(excluded: I) -> Self {
        BooleanWeight::Cofinite(excluded.into_iter().collect())
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        match self {
            BooleanWeight::Full => true,
            BooleanWeight::Finite(s) => s.contains(e),
            BooleanWeight::Cofinite(f) => !f.contains(e),
        }
    }

    fn points(&self) -> Option<&BTreeSet<Exponent>> {
        match self {
            BooleanWeight::Full => None,
            BooleanWeight::Finite(s) | BooleanWeight::Cofinite(s) => Some(s),
        }
    }

    pub(crate) fn check_dim(&self, m: usize) -> Result<()> {
        self.points()
            .map_or(Ok(()), |s| s.iter().try_for_each(|e| e.check_dim(m)))
    }

    /// `(w - J)_{>=0} = {I : I + J in w}`.
    pub fn shift(&self, j: &Exponent) -> BooleanWeight {
        let sub = |s: &BTreeSet<Exponent>| s.iter().filter_map(|p| p.checked_sub(j)).collect();
        match self {
            BooleanWeight::Full => BooleanWeight::Full,
            BooleanWeight::Finite(s) => BooleanWeight::Finite(sub(s)),
            BooleanWeight::Cofinite(f) => {
                let rest: BTreeSet<Exponent> = sub(f);
                if rest.is_empty() {
                    BooleanWeight::Full
                } else {
                    BooleanWeight::Cofinite(rest)
                }
            }
        }
    }

    /// The vertex set of the Newton polyhedron of the weight, `V(w)`.
    ///
    /// For a cofinite set only the box `[0, 1 + max F]^m` needs scanning: the
    /// componentwise clamp of any member into that box is again a member.
    pub fn vertices(&self, m: usize) -> Result<VertexPoly> {
        self.check_dim(m)?;
        match self {
            BooleanWeight::Full => Ok(VertexPoly::one(m)),
            BooleanWeight::Finite(s) => vertex_extract(m, s.iter().cloned()),
            BooleanWeight::Cofinite(f) if f.is_empty() || !f.contains(&Exponent::zero(m)) => {
                Ok(VertexPoly::one(m))
            }
            BooleanWeight::Cofinite(f) => {
                let mut bounds = alloc::vec![0u32; m];
                for p in f {
                    for (b, &c) in bounds.iter_mut().zip(p.coords()) {
                        *b = (*b).max(c + 1);
                    }
                }
                let mut candidates = Vec::new();
                box_points(&bounds, &mut alloc::vec![0; m], 0, &mut |p| {
                    if !f.contains(p) {
                        candidates.push(p.clone());
                    }
                });
                vertex_extract(m, candidates)
            }
        }
    }
}

fn box_points(bounds: &[u32], cur: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&Exponent)) {
    if k == bounds.len() {
        f(&Exponent::new(cur.clone()));
        return;
    }
    for c in 0..=bounds[k] {
        cur[k] = c;
        box_points(bounds, cur, k + 1, f);
    }
}

/// The differential indeterminate `x_{i,J}` with `i` counted from 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffVar {
    pub index: usize,
    pub order: Exponent,
}

impl DiffVar {
    pub fn new(index: usize, order: Exponent) -> Self {
        DiffVar { index, order }
    }

    /// `x_{i, J + e_k}`.
    pub fn derive(&self, k: usize) -> DiffVar {
        DiffVar {
            index: self.index,
            order: &self.order + &Exponent::unit(self.order.dim(), k),
        }
    }
}

/// A product of differential indeterminates; the empty product is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffMonomial(BTreeMap<DiffVar, u32>);

impl DiffMonomial {
    pub fn one() -> Self {
        DiffMonomial(BTreeMap::new())
    }

    pub fn var(v: DiffVar) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: DiffVar, k: u32) -> Self {
        let mut m = BTreeMap::new();
        if k > 0 {
            m.insert(v, k);
        }
        DiffMonomial(m)
    }

    pub fn from_factors<I: IntoIterator<Item = (DiffVar, u32)>>(factors: I) -> Self {
        let mut out = DiffMonomial::one();
        for (v, k) in factors {
            if k > 0 {
                *out.0.entry(v).or_insert(0) += k;
            }
        }
        out
    }

    pub fn factors(&self) -> impl Iterator<Item = (&DiffVar, u32)> {
        self.0.iter().map(|(v, &k)| (v, k))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &DiffMonomial) -> DiffMonomial {
        let mut out = self.clone();
        for (v, &k) in &other.0 {
            *out.0.entry(v.clone()).or_insert(0) += k;
        }
        out
    }

    /// Leibniz rule on a monomial: pairs `(multiplicity, monomial)`.
    fn derive(&self, k: usize) -> Vec<(u32, DiffMonomial)> {
        let mut out = Vec::new();
        for (v, &e) in &self.0 {
            let mut rest = self.0.clone();
            if e == 1 {
                rest.remove(v);
            } else {
                rest.insert(v.clone(), e - 1);
            }
            *rest.entry(v.derive(k)).or_insert(0) += 1;
            out.push((e, DiffMonomial(rest)));
        }
        out
    }

    fn display(&self, single: bool, out: &mut String) {
        if self.0.is_empty() {
            out.push('1');
            return;
        }
        for (n, (v, &e)) in self.0.iter().rev().enumerate() {
            if n > 0 {
                out.push('*');
            }
            if single && v.index == 1 {
                out.push('x');
            } else {
                out.push_str(&alloc::format!("x{}", v.index));
            }
            out.push('_');
            out.push_str(&alloc::format!("{}", v.order));
            if e > 1 {
                out.push_str(&alloc::format!("^{e}"));
            }
        }
    }
}

/// A differential polynomial `sum_M a_M E_M` with rational-function coefficients.
#[derive(Clone)]
pub struct DiffPoly {
    dim: usize,
    terms: BTreeMap<DiffMonomial, RationalFunction>,
}

impl DiffPoly {
    pub fn zero(m: usize) -> Self {
        DiffPoly {
            dim: m,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(m: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (RationalFunction, DiffMonomial)>,
    {
        let mut p = DiffPoly::zero(m);
        for (c, e) in terms {
            if c.dim() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: c.dim(),
                });
            }
            for (v, _) in e.factors() {
                v.order.check_dim(m)?;
                if v.index == 0 {
                    return Err(Error::IndexOutOfRange {
                        index: 0,
                        n: usize::MAX,
                    });
                }
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// `c · x_{i,J}`.
    pub fn var_term(c: RationalFunction, v: DiffVar) -> Result<Self> {
        let m = c.dim();
        Self::from_terms(m, [(c, DiffMonomial::var(v))])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&DiffMonomial, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &DiffMonomial) -> Option<&RationalFunction> {
        self.terms.get(e)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &DiffMonomial> {
        self.terms.keys()
    }

    /// The largest indeterminate index that occurs.
    pub fn max_index(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|e| e.0.keys().map(|v| v.index))
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, e: DiffMonomial, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &DiffPoly) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    pub fn checked_add(&self, other: &DiffPoly) -> Result<DiffPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &DiffPoly) -> Result<DiffPoly> {
        self.check(other)?;
        let mut out = DiffPoly::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> DiffPoly {
        DiffPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// The total derivative along the 0-based axis `k`.
    pub fn derivative(&self, k: usize) -> Result<DiffPoly> {
        if k >= self.dim {
            return Err(Error::InvalidArgument("derivation axis out of range"));
        }
        let mut out = DiffPoly::zero(self.dim);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.derivative(k));
            for (mult, de) in e.derive(k) {
                out.add_term(de, c.scale(&Rational::from_integer(mult.into())));
            }
        }
        Ok(out)
    }

    /// Whether every coefficient is a constant.
    pub fn has_constant_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.as_constant().is_some())
    }

    /// Renders with coefficient variables `tnames`; `x_J` is used for the first
    /// indeterminate when `single` is set, `x1_J`, `x2_J`, ... otherwise.
    pub fn display_with(&self, tnames: &[&str], single: bool) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut mono = String::new();
            e.display(single, &mut mono);
            let (neg, coeff) = coefficient_text(c, tnames);
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (coeff, e.is_one()) {
                (None, true) => out.push('1'),
                (None, false) => out.push_str(&mono),
                (Some(s), true) => out.push_str(&s),
                (Some(s), false) => {
                    out.push_str(&s);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }
}

/// Sign and magnitude text of a coefficient; `None` magnitude means one.
fn coefficient_text(c: &RationalFunction, tnames: &[&str]) -> (bool, Option<String>) {
    let neg = c.num().terms().all(|(_, v)| v.is_negative());
    let c = if neg { -c } else { c.clone() };
    if c.as_constant().is_some_and(|v| v.is_one()) {
        return (neg, None);
    }
    let s = c.display_with(tnames);
    let den_trivial = c.den().as_constant().is_some_and(|v| v.is_one());
    if den_trivial && c.num().len() > 1 {
        (neg, Some(alloc::format!("({s})")))
    } else {
        (neg, Some(s))
    }
}

impl PartialEq for DiffPoly {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((a, x), (b, y))| a == b && x == y)
    }
}

impl Eq for DiffPoly {}

impl fmt::Debug for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.dim);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs, false))
    }
}

/// How `x_{i,J}` is rescaled during translation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum SubstitutionKernel {
    /// `T(w_i, J) = e_K(Vert((w_i - J)_{>=0}))`, all coefficients one.
    #[default]
    Indicator,
    /// The vertex restriction of `d^J e_K(w_i)`: the coefficient at `I` is
    /// `prod_k (I_k + J_k)! / I_k!`.
    Factorial,
}

fn check_weights(p: &DiffPoly, w: &[BooleanWeight]) -> Result<()> {
    let idx = p.max_index();
    if idx > w.len() {
        return Err(Error::IndexOutOfRange {
            index: idx,
            n: w.len(),
        });
    }
    w.iter().try_for_each(|wi| wi.check_dim(p.dim))
}

/// The polynomial substituted for `x_{i,J}` under weight `w_i`.
pub fn substitution_poly(
    w: &BooleanWeight,
    j: &Exponent,
    kernel: SubstitutionKernel,
) -> Result<QPoly> {
    let m = j.dim();
    let verts = w.shift(j).vertices(m)?;
    Ok(match kernel {
        SubstitutionKernel::Indicator => QPoly::indicator(m, verts.vertices()),
        SubstitutionKernel::Factorial => {
            let terms = verts.vertices().iter().map(|i| {
                let mut c = num_bigint::BigInt::one();
                for (&ik, &jk) in i.coords().iter().zip(j.coords()) {
                    for f in ik + 1..=ik + jk {
                        c *= f;
                    }
                }
                (i.clone(), Rational::from_integer(c))
            });
            QPoly::from_terms(m, terms)?
        }
    })
}

struct WeightCache<'a> {
    w: &'a [BooleanWeight],
    m: usize,
    vertices: BTreeMap<DiffVar, VertexPoly>,
    substitutions: BTreeMap<DiffVar, QPoly>,
}

impl<'a> WeightCache<'a> {
    fn new(w: &'a [BooleanWeight], m: usize) -> Self {
        WeightCache {
            w,
            m,
            vertices: BTreeMap::new(),
            substitutions: BTreeMap::new(),
        }
    }

    fn var_vertices(&mut self, v: &DiffVar) -> Result<VertexPoly> {
        if let Some(vp) = self.vertices.get(v) {
            return Ok(vp.clone());
        }
        let vp = self.w[v.index - 1].shift(&v.order).vertices(self.m)?;
        self.vertices.insert(v.clone(), vp.clone());
        Ok(vp)
    }

    /// `V(E(w))`.
    fn monomial_value(&mut self, e: &DiffMonomial) -> Result<VertexPoly> {
        let mut acc = VertexPoly::one(self.m);
        for (v, k) in e.factors() {
            acc = acc.mul_unchecked(&self.var_vertices(v)?.pow(k));
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    fn substitution(&mut self, v: &DiffVar, kernel: SubstitutionKernel) -> Result<QPoly> {
        if let Some(p) = self.substitutions.get(v) {
            return Ok(p.clone());
        }
        let p = substitution_poly(&self.w[v.index - 1], &v.order, kernel)?;
        self.substitutions.insert(v.clone(), p.clone());
        Ok(p)
    }

    fn tropw(&mut self, p: &DiffPoly) -> Result<VertexFraction> {
        let mut acc = VertexFraction::zero(self.m);
        for (e, c) in p.terms() {
            let v = self.monomial_value(e)?;
            if v.is_zero() {
                continue;
            }
            let t = c.trop().mul_unchecked(&VertexFraction::from_poly(v));
            acc = acc.add_unchecked(&t);
        }
        Ok(acc)
    }
}

/// `trop_w(P) = ⊕_M trop(a_M) ⊙ V(E_M(w))`.
pub fn tropw(p: &DiffPoly, w: &[BooleanWeight]) -> Result<VertexFraction> {
    check_weights(p, w)?;
    WeightCache::new(w, p.dim).tropw(p)
}

/// `T(a/b)^{-1} = e_K(b) / e_K(a)`.
pub fn normalizer(value: &VertexFraction) -> Result<RationalFunction> {
    if value.is_zero() {
        return Err(Error::ZeroTropicalValue);
    }
    let m = value.dim();
    RationalFunction::new(
        QPoly::indicator(m, value.den().vertices()),
        QPoly::indicator(m, value.num().vertices()),
    )
}

/// The `w`-translation `P_w`; zero when `trop_w(P) = 0`.
pub fn translate(
    p: &DiffPoly,
    w: &[BooleanWeight],
    kernel: SubstitutionKernel,
) -> Result<DiffPoly> {
    check_weights(p, w)?;
    let mut cache = WeightCache::new(w, p.dim);
    translate_with(&mut cache, p, kernel)
}

fn translate_with(
    cache: &mut WeightCache<'_>,
    p: &DiffPoly,
    kernel: SubstitutionKernel,
) -> Result<DiffPoly> {
    let value = cache.tropw(p)?;
    if value.is_zero() {
        return Ok(DiffPoly::zero(p.dim));
    }
    let m = p.dim;
    let scale_num = QPoly::indicator(m, value.den().vertices());
    let scale_den = QPoly::indicator(m, value.num().vertices());
    let mut out = DiffPoly::zero(m);
    for (e, c) in p.terms() {
        let mut s = scale_num.clone();
        for (v, k) in e.factors() {
            s = &s * &cache.substitution(v, kernel)?.pow(k);
        }
        let coeff = RationalFunction::new(&s * c.num(), &scale_den * c.den())?;
        out.add_term(e.clone(), coeff);
    }
    Ok(out)
}

/// The initial form `in_{(w, m_<)}(P)`: residues of the coefficients of `P_w`.
pub fn initial_form(
    p: &DiffPoly,
    w: &[BooleanWeight],
    ord: &MonomialOrder,
    kernel: SubstitutionKernel,
) -> Result<DiffPoly> {
    check_weights(p, w)?;
    let mut cache = WeightCache::new(w, p.dim);
    initial_with(&mut cache, p, ord, kernel)
}

fn initial_with(
    cache: &mut WeightCache<'_>,
    p: &DiffPoly,
    ord: &MonomialOrder,
    kernel: SubstitutionKernel,
) -> Result<DiffPoly> {
    let pw = translate_with(cache, p, kernel)?;
    reduce(&pw, ord)
}

fn reduce(pw: &DiffPoly, ord: &MonomialOrder) -> Result<DiffPoly> {
    let m = pw.dim;
    let mut out = DiffPoly::zero(m);
    for (e, c) in pw.terms() {
        let r = c.residue(ord)?;
        out.add_term(e.clone(), RationalFunction::constant(m, r));
    }
    Ok(out)
}

/// All derivatives `d^J P` with `|J| <= bound`, graded by `|J|`.
pub fn prolong(p: &DiffPoly, bound: u32) -> Vec<DiffPoly> {
    let m = p.dim;
    let mut done: BTreeMap<Exponent, DiffPoly> = BTreeMap::new();
    let mut out = Vec::new();
    for j in exponents_up_to(m, bound) {
        let d = match j.coords().iter().position(|&c| c > 0) {
            None => p.clone(),
            Some(k) => {
                let parent = j
                    .checked_sub(&Exponent::unit(m, k))
                    .expect("positive coordinate");
                done[&parent].derivative(k).expect("axis in range")
            }
        };
        done.insert(j, d.clone());
        out.push(d);
    }
    out
}

fn push_unique(out: &mut Vec<DiffPoly>, p: DiffPoly) {
    if !out.contains(&p) {
        out.push(p);
    }
}

/// Translations of all prolongations up to `bound`, in generator order and
/// without repeats. This is a finite part of the generating set of `G_w`.
pub fn translate_generators(
    gens: &[DiffPoly],
    w: &[BooleanWeight],
    bound: u32,
    kernel: SubstitutionKernel,
) -> Result<Vec<DiffPoly>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    for g in gens {
        check_weights(g, w)?;
        if g.dim != first.dim {
            return Err(Error::DimensionMismatch {
                expected: first.dim,
                found: g.dim,
            });
        }
    }
    let mut cache = WeightCache::new(w, first.dim);
    let mut out = Vec::new();
    for g in gens {
        for d in prolong(g, bound) {
            push_unique(&mut out, translate_with(&mut cache, &d, kernel)?);
        }
    }
    Ok(out)
}

/// Nonzero initial forms of the translated prolongations, without repeats.
pub fn initial_generators(
    gens: &[DiffPoly],
    w: &[BooleanWeight],
    ord: &MonomialOrder,
    bound: u32,
    kernel: SubstitutionKernel,
) -> Result<Vec<DiffPoly>> {
    let mut out = Vec::new();
    for pw in translate_generators(gens, w, bound, kernel)? {
        let r = reduce(&pw, ord)?;
        if !r.is_zero() {
            push_unique(&mut out, r);
        }
    }
    Ok(out)
}
