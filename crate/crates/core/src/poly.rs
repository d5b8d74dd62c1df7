//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::Rational;

/// A polynomial in `t1..tm`, a map from exponents to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    dim: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl QPoly {
    pub fn zero(m: usize) -> Self {
        QPoly {
            dim: m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, Rational::one())
    }

    pub fn constant(m: usize, c: Rational) -> Self {
        Self::term(Exponent::zero(m), c)
    }

    pub fn term(e: Exponent, c: Rational) -> Self {
        let mut p = QPoly::zero(e.dim());
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn monomial(e: Exponent) -> Self {
        Self::term(e, Rational::one())
    }

    /// The variable `t_{k+1}` (0-based axis `k`).
    pub fn var(m: usize, k: usize) -> Self {
        Self::monomial(Exponent::unit(m, k))
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(m: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = QPoly::zero(m);
        for (e, c) in terms {
            e.check_dim(m)?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// `sum over s in set of t^s` with all coefficients one.
    pub fn indicator<'a, I: IntoIterator<Item = &'a Exponent>>(m: usize, set: I) -> Self {
        let mut p = QPoly::zero(m);
        for e in set {
            p.terms.insert(e.clone(), Rational::one());
        }
        p
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    /// The support `Supp(f)` in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    /// The coefficient `f_I`, zero when `I` is outside the support.
    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value when the polynomial has degree zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().expect("one term");
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &QPoly) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    pub fn checked_add(&self, other: &QPoly) -> Result<QPoly> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &QPoly) -> Result<QPoly> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero(self.dim);
        }
        QPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplication by the monomial `t^e`.
    pub fn shift(&self, e: &Exponent) -> QPoly {
        QPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, v)| (k + e, v.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> QPoly {
        let mut acc = QPoly::one(self.dim);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative along the 0-based axis `k`.
    pub fn derivative(&self, k: usize) -> QPoly {
        let mut out = QPoly::zero(self.dim);
        for (e, c) in &self.terms {
            let d = e.coords()[k];
            if d == 0 {
                continue;
            }
            let mut coords = e.coords().to_vec();
            coords[k] -= 1;
            out.terms
                .insert(Exponent::new(coords), c * Rational::from_integer(d.into()));
        }
        out
    }

    /// The greatest monomial `t^g` dividing every term.
    pub fn monomial_content(&self) -> Exponent {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Exponent::zero(self.dim);
        };
        let mut g = first.coords().to_vec();
        for e in it {
            for (a, b) in g.iter_mut().zip(e.coords()) {
                *a = (*a).min(*b);
            }
        }
        Exponent::new(g)
    }

    /// Exact division by a monomial that divides every term.
    pub(crate) fn unshift(&self, e: &Exponent) -> QPoly {
        QPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.checked_sub(e).expect("monomial divides"), v.clone()))
                .collect(),
        }
    }

    /// The quotient `self / d` when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &QPoly) -> Option<QPoly> {
        if self.dim != d.dim {
            return None;
        }
        let (dl, dc) = d.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = QPoly::zero(self.dim);
        while let Some((rl, rc)) = rem.terms.iter().next_back() {
            let e = rl.checked_sub(dl)?;
            let c = rc / dc;
            let t = QPoly::term(e, c);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// The coefficient of the lexicographically greatest term.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.coords()) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Renders with the given variable names, one per axis.
    pub fn display_with(&self, names: &[&str]) -> String {
        let mut s = String::new();
        write_poly(&mut s, self, names).expect("writing to a String");
        s
    }
}

pub(crate) fn default_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| alloc::format!("t{i}")).collect()
}

fn write_poly(out: &mut String, p: &QPoly, names: &[&str]) -> fmt::Result {
    if p.terms.is_empty() {
        return out.write_str("0");
    }
    // Highest terms first reads more naturally.
    for (i, (e, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.write_str("-")?;
            }
        } else {
            out.write_str(if neg { " - " } else { " + " })?;
        }
        let mut factors: Vec<String> = Vec::new();
        for (k, &d) in e.coords().iter().enumerate() {
            match d {
                0 => {}
                1 => factors.push(String::from(names[k])),
                _ => factors.push(alloc::format!("{}^{}", names[k], d)),
            }
        }
        if factors.is_empty() {
            write!(out, "{abs}")?;
        } else {
            if !abs.is_one() {
                write!(out, "{abs}*")?;
            }
            out.write_str(&factors.join("*"))?;
        }
    }
    Ok(())
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.dim);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}

impl core::ops::Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl core::ops::Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl core::ops::Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl core::ops::Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = QPoly::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}
