//! JSON encodings of the library types.
//!
//! Every `*Json` type deserializes the accepted input forms and serializes
//! the canonical output form, so `from_json(to_json(x)) == x`.

use serde::{Deserialize, Serialize};
use tropdiff_core::diff::{BooleanWeight, DiffMonomial, DiffPoly, DiffVar, SubstitutionKernel};
use tropdiff_core::parse::{parse_poly, parse_rational};
use tropdiff_core::{
    Exponent, MonomialOrder, OrderKind, QPoly, Rational, RationalFunction, VertexFraction,
    VertexPoly,
};

use crate::error::CliError;

pub type ExponentJson = Vec<u32>;

pub fn exponent(coords: &[u32], m: usize) -> Result<Exponent, CliError> {
    if coords.len() != m {
        return Err(CliError::Parse(format!(
            "exponent {coords:?} does not have length {m}"
        )));
    }
    Ok(Exponent::new(coords.to_vec()))
}

pub fn exponent_json(e: &Exponent) -> ExponentJson {
    e.coords().to_vec()
}

/// Sorted array of vertices; zero is `[]`.
pub fn vertex_poly_json(v: &VertexPoly) -> Vec<ExponentJson> {
    v.vertices().iter().map(exponent_json).collect()
}

pub fn vertex_poly(points: &[ExponentJson], m: usize) -> Result<VertexPoly, CliError> {
    let pts = points
        .iter()
        .map(|p| exponent(p, m))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VertexPoly::from_points(m, pts)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexFractionJson {
    pub num: Vec<ExponentJson>,
    pub den: Vec<ExponentJson>,
}

impl VertexFractionJson {
    pub fn new(v: &VertexFraction) -> Self {
        VertexFractionJson {
            num: vertex_poly_json(v.num()),
            den: vertex_poly_json(v.den()),
        }
    }

    pub fn decode(&self, m: usize) -> Result<VertexFraction, CliError> {
        Ok(VertexFraction::new(
            vertex_poly(&self.num, m)?,
            vertex_poly(&self.den, m)?,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: ExponentJson,
    /// A rational literal such as `"3"` or `"-2/5"`.
    pub coeff: String,
}

/// A polynomial as explicit terms or as expression text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyJson {
    Text(String),
    Terms { terms: Vec<TermJson> },
}

fn rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| CliError::Parse(format!("bad coefficient `{s}`: {e}")))
}

impl PolyJson {
    pub fn new(p: &QPoly) -> Self {
        PolyJson::Terms {
            terms: p
                .terms()
                .map(|(e, c)| TermJson {
                    exp: exponent_json(e),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn decode(&self, m: usize) -> Result<QPoly, CliError> {
        match self {
            PolyJson::Text(s) => Ok(parse_poly(s, m)?),
            PolyJson::Terms { terms } => {
                let mut out = Vec::with_capacity(terms.len());
                for t in terms {
                    out.push((exponent(&t.exp, m)?, rational(&t.coeff)?));
                }
                Ok(QPoly::from_terms(m, out)?)
            }
        }
    }
}

/// A rational function as `{"num":..,"den":..}`, a bare polynomial, or text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalJson {
    Text(String),
    Fraction { num: PolyJson, den: PolyJson },
    Poly { terms: Vec<TermJson> },
}

impl RationalJson {
    pub fn new(q: &RationalFunction) -> Self {
        RationalJson::Fraction {
            num: PolyJson::new(q.num()),
            den: PolyJson::new(q.den()),
        }
    }

    pub fn decode(&self, m: usize) -> Result<RationalFunction, CliError> {
        match self {
            RationalJson::Text(s) => Ok(parse_rational(s, m)?),
            RationalJson::Fraction { num, den } => {
                let den = den.decode(m)?;
                if den.is_zero() {
                    return Err(tropdiff_core::Error::ZeroDenominator.into());
                }
                Ok(RationalFunction::new(num.decode(m)?, den)?)
            }
            RationalJson::Poly { terms } => Ok(RationalFunction::from_poly(
                PolyJson::Terms {
                    terms: terms.clone(),
                }
                .decode(m)?,
            )),
        }
    }
}

/// `[i, [J...]]`.
pub type DiffVarJson = (usize, ExponentJson);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub var: DiffVarJson,
    pub pow: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffTermJson {
    pub coeff: RationalJson,
    pub monomial: Vec<FactorJson>,
}

pub type DiffPolyJson = Vec<DiffTermJson>;

pub fn diff_poly_json(p: &DiffPoly) -> DiffPolyJson {
    p.terms()
        .map(|(e, c)| DiffTermJson {
            coeff: RationalJson::new(c),
            monomial: e
                .factors()
                .map(|(v, k)| FactorJson {
                    var: (v.index, exponent_json(&v.order)),
                    pow: k,
                })
                .collect(),
        })
        .collect()
}

/// Decodes a differential polynomial in `m` derivations and `n` indeterminates.
pub fn diff_poly(terms: &[DiffTermJson], m: usize, n: usize) -> Result<DiffPoly, CliError> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let mut factors = Vec::with_capacity(t.monomial.len());
        for f in &t.monomial {
            let (i, j) = &f.var;
            if *i == 0 || *i > n {
                return Err(CliError::Parse(format!(
                    "indeterminate index {i} outside 1..={n}"
                )));
            }
            if f.pow == 0 {
                return Err(CliError::Parse("factor with power 0".into()));
            }
            factors.push((DiffVar::new(*i, exponent(j, m)?), f.pow));
        }
        out.push((t.coeff.decode(m)?, DiffMonomial::from_factors(factors)));
    }
    Ok(DiffPoly::from_terms(m, out)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum WeightJson {
    Full,
    Finite { points: Vec<ExponentJson> },
    Cofinite { excluded: Vec<ExponentJson> },
}

impl WeightJson {
    pub fn new(w: &BooleanWeight) -> Self {
        let pts = |s: &std::collections::BTreeSet<Exponent>| s.iter().map(exponent_json).collect();
        match w {
            BooleanWeight::Full => WeightJson::Full,
            BooleanWeight::Finite(s) => WeightJson::Finite { points: pts(s) },
            BooleanWeight::Cofinite(s) => WeightJson::Cofinite { excluded: pts(s) },
        }
    }

    pub fn decode(&self, m: usize) -> Result<BooleanWeight, CliError> {
        let pts = |s: &[ExponentJson]| {
            s.iter()
                .map(|p| exponent(p, m))
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(match self {
            WeightJson::Full => BooleanWeight::Full,
            WeightJson::Finite { points } => BooleanWeight::finite(pts(points)?),
            WeightJson::Cofinite { excluded } => BooleanWeight::cofinite(pts(excluded)?),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum OrderJson {
    Lex,
    Grlex,
    Grevlex,
    Matrix { rows: Vec<Vec<i64>> },
}

impl OrderJson {
    pub fn decode(&self, m: usize) -> Result<MonomialOrder, CliError> {
        let kind = match self {
            OrderJson::Lex => OrderKind::Lex,
            OrderJson::Grlex => OrderKind::GrLex,
            OrderJson::Grevlex => OrderKind::GrevLex,
            OrderJson::Matrix { rows } => {
                if rows.iter().any(|r| r.len() != m) {
                    return Err(CliError::Parse(format!("order rows must have length {m}")));
                }
                return Ok(MonomialOrder::from_rows(rows.clone())?);
            }
        };
        Ok(MonomialOrder::standard(kind, m)?)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum KernelJson {
    #[default]
    Indicator,
    Factorial,
}

impl From<KernelJson> for SubstitutionKernel {
    fn from(k: KernelJson) -> Self {
        match k {
            KernelJson::Indicator => SubstitutionKernel::Indicator,
            KernelJson::Factorial => SubstitutionKernel::Factorial,
        }
    }
}
