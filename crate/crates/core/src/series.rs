//! Elements of `K((t))` as fractions of rational polynomials, the tropical
//! valuation, and the maximal ideals of its unit ball.
//!
//! For a monomial order `<` the residue map `c_<(f/g) = f_I / g_I`, with
//! `I = min_<(Supp g)`, is a ring homomorphism from the unit ball onto `Q`.
//! Its kernel is the maximal ideal attached to `<`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::order::MonomialOrder;
use crate::poly::{default_names, QPoly};
use crate::vertex::{vertex_extract, VertexFraction, VertexPoly};
use crate::Rational;

impl QPoly {
    /// `trop(f)`: the vertex set of the Newton polyhedron of `Supp(f)`.
    pub fn trop(&self) -> VertexPoly {
        vertex_extract(self.dim(), self.support().cloned())
            .expect("support has the ambient dimension")
    }
}

/// A fraction `f/g` of polynomials with `g != 0`.
///
/// Equality is `f·g' = f'·g`. Construction strips the common monomial factor
/// and scales so that the lexicographically greatest term of `g` has
/// coefficient one; no polynomial gcd is taken.
#[derive(Clone)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if num.dim() != den.dim() {
            return Err(Error::DimensionMismatch {
                expected: num.dim(),
                found: den.dim(),
            });
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        let m = den.dim();
        if num.is_zero() {
            return RationalFunction {
                num,
                den: QPoly::one(m),
            };
        }
        let (num, den) = {
            let gn = num.monomial_content();
            let gd = den.monomial_content();
            let g = Exponent::new(
                gn.coords()
                    .iter()
                    .zip(gd.coords())
                    .map(|(a, b)| *a.min(b))
                    .collect(),
            );
            if g.is_zero() {
                (num, den)
            } else {
                (num.unshift(&g), den.unshift(&g))
            }
        };
        let (num, den) = if den.len() > 1 && num.len() >= den.len() {
            match num.exact_div(&den) {
                Some(q) => (q, QPoly::one(m)),
                None => (num, den),
            }
        } else if num.len() > 1 && den.len() > num.len() {
            match den.exact_div(&num) {
                Some(q) => (QPoly::one(m), q),
                None => (num, den),
            }
        } else {
            (num, den)
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        let m = p.dim();
        RationalFunction {
            num: p,
            den: QPoly::one(m),
        }
    }

    pub fn constant(m: usize, c: Rational) -> Self {
        Self::from_poly(QPoly::constant(m, c))
    }

    pub fn zero(m: usize) -> Self {
        Self::from_poly(QPoly::zero(m))
    }

    pub fn one(m: usize) -> Self {
        Self::from_poly(QPoly::one(m))
    }

    /// `t^e / 1`.
    pub fn monomial(e: Exponent) -> Self {
        Self::from_poly(QPoly::monomial(e))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value when the fraction is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    fn check(&self, other: &RationalFunction) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            })
        }
    }

    pub fn checked_add(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn scale(&self, c: &Rational) -> RationalFunction {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, k: u32) -> RationalFunction {
        Self::normalized(self.num.pow(k), self.den.pow(k))
    }

    /// Partial derivative along the 0-based axis `k` by the quotient rule.
    pub fn derivative(&self, k: usize) -> RationalFunction {
        let dn = self.num.derivative(k);
        if self.den.as_constant().is_some() {
            return Self::normalized(dn, self.den.clone());
        }
        let dd = self.den.derivative(k);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Self::normalized(num, &self.den * &self.den)
    }

    /// `trop(f/g) = trop(f) / trop(g)`.
    pub fn trop(&self) -> VertexFraction {
        VertexFraction::new(self.num.trop(), self.den.trop()).expect("nonzero denominator")
    }

    /// Membership in the unit ball `K((t))°`.
    pub fn in_unit_ball(&self) -> bool {
        self.num.trop().leq_unchecked(&self.den.trop())
    }

    /// Units of the unit ball are exactly the elements with `trop = 1`.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.num.trop() == self.den.trop()
    }

    /// Whether `other` lies in the principal ideal `(self)` of the unit ball.
    pub fn divides(&self, other: &RationalFunction) -> Result<bool> {
        self.check(other)?;
        if !self.in_unit_ball() || !other.in_unit_ball() {
            return Err(Error::NotInUnitBall);
        }
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        Ok(other.trop().leq_unchecked(&self.trop()))
    }

    /// The smallest integer `M >= 1` with
    /// `trop(self + M·other) = trop(self) ⊕ trop(other)`.
    ///
    /// At most one `M` can cancel each vertex of the right-hand side, so the
    /// scan stops after `1 + #vertices` candidates.
    pub fn bezout_witness(&self, other: &RationalFunction) -> Result<u64> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroInput);
        }
        let target = self.trop().add_unchecked(&other.trop());
        // Work on the common-denominator numerators phi1·psi2 and phi2·psi1.
        let a = &self.num * &other.den;
        let b = &self.den * &other.num;
        let bound = 1 + (a.trop().add_unchecked(&b.trop())).len() as u64;
        let den = &self.den * &other.den;
        for m in 1..=bound {
            let s = &a + &b.scale(&Rational::from_integer(m.into()));
            let cand = VertexFraction::new(s.trop(), den.trop()).expect("nonzero denominator");
            if cand == target {
                return Ok(m);
            }
        }
        Err(Error::BezoutBoundExceeded(bound))
    }

    /// The residue `c_<(f/g) = f_I / g_I` with `I = min_<(Supp g)`.
    pub fn residue(&self, ord: &MonomialOrder) -> Result<Rational> {
        if ord.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: ord.dim(),
                found: self.dim(),
            });
        }
        if !self.in_unit_ball() {
            return Err(Error::NotInUnitBall);
        }
        Ok(self.residue_unchecked(ord))
    }

    pub(crate) fn residue_unchecked(&self, ord: &MonomialOrder) -> Rational {
        let i = ord.min(self.den.support()).expect("nonzero denominator");
        self.num.coeff(i) / self.den.coeff(i)
    }

    /// Membership in the maximal ideal `m_<`, the kernel of the residue map.
    pub fn in_max_ideal(&self, ord: &MonomialOrder) -> Result<bool> {
        Ok(self.residue(ord)?.is_zero())
    }

    /// Constants `alpha_k` with `trop(prod_k (q - alpha_k)) ≪ 1`.
    ///
    /// When `trop(q) ≪ 1` already the single constant `0` is returned. Otherwise
    /// there is one constant per vertex `I_k` of `g`, namely `f_{I_k} / g_{I_k}`,
    /// in decreasing lexicographic order of the vertices.
    pub fn separating_constants(&self) -> Result<Vec<Rational>> {
        if !self.in_unit_ball() {
            return Err(Error::NotInUnitBall);
        }
        let m = self.dim();
        if self.trop().irrelevant(&VertexFraction::one(m))? {
            return Ok(alloc::vec![Rational::zero()]);
        }
        Ok(self
            .den
            .trop()
            .vertices()
            .iter()
            .map(|v| self.num.coeff(v) / self.den.coeff(v))
            .collect())
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        let n = self.num.display_with(names);
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            return n;
        }
        let d = self.den.display_with(names);
        let wrap = |s: String, p: &QPoly, product: bool| {
            if p.len() > 1 || s.starts_with('-') || (product && s.contains('*')) {
                alloc::format!("({s})")
            } else {
                s
            }
        };
        alloc::format!("{}/{}", wrap(n, &self.num, false), wrap(d, &self.den, true))
    }
}

/// The fraction `t^a / (t^a + t^b)` used to read orders off maximal ideals.
pub fn order_probe(a: &Exponent, b: &Exponent) -> RationalFunction {
    let den = &QPoly::monomial(a.clone()) + &QPoly::monomial(b.clone());
    RationalFunction::normalized(QPoly::monomial(a.clone()), den)
}

/// Recovers the comparison of `i` and `j` from a maximal-ideal membership oracle:
/// `i < j` iff `t^j / (t^i + t^j)` lies in the ideal.
pub fn order_from_membership<F>(oracle: F, i: &Exponent, j: &Exponent) -> Result<Ordering>
where
    F: Fn(&RationalFunction) -> bool,
{
    if i.dim() != j.dim() {
        return Err(Error::DimensionMismatch {
            expected: i.dim(),
            found: j.dim(),
        });
    }
    if i == j {
        return Ok(Ordering::Equal);
    }
    let j_in = oracle(&order_probe(j, i));
    let i_in = oracle(&order_probe(i, j));
    match (j_in, i_in) {
        (true, false) => Ok(Ordering::Less),
        (false, true) => Ok(Ordering::Greater),
        (true, true) => Err(Error::InconsistentOracle("both probes lie in the ideal")),
        (false, false) => Err(Error::InconsistentOracle("neither probe lies in the ideal")),
    }
}

/// The membership oracle of `m_<`.
pub fn residue_oracle(ord: &MonomialOrder) -> impl Fn(&RationalFunction) -> bool + '_ {
    move |q| q.in_max_ideal(ord).unwrap_or(false)
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.dim());
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}

impl core::ops::Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::normalized(num, &self.den * &rhs.den)
    }
}

impl core::ops::Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl core::ops::Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl core::ops::Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}
