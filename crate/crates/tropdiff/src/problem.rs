//! Problem files: named differential polynomials together with a weight
//! vector, a monomial order, a kernel and a prolongation bound.

use serde::{Deserialize, Serialize};
use tropdiff_core::diff::{BooleanWeight, DiffPoly, SubstitutionKernel};
use tropdiff_core::{Exponent, MonomialOrder};

use crate::error::CliError;
use crate::json::{
    diff_poly, exponent, DiffPolyJson, ExponentJson, KernelJson, OrderJson, WeightJson,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPolyJson {
    pub name: String,
    pub poly: DiffPolyJson,
}

/// The on-disk form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub m: usize,
    /// Number of differential indeterminates; defaults to the weight length.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default)]
    pub polynomials: Vec<NamedPolyJson>,
    #[serde(default)]
    pub weight: Vec<WeightJson>,
    #[serde(default = "default_order")]
    pub order: OrderJson,
    #[serde(default)]
    pub kernel: KernelJson,
    #[serde(default)]
    pub prolong_bound: u32,
    /// Exponent pairs for order recovery.
    #[serde(default)]
    pub pairs: Vec<(ExponentJson, ExponentJson)>,
}

fn default_order() -> OrderJson {
    OrderJson::Lex
}

/// A validated problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub m: usize,
    pub n: usize,
    pub polynomials: Vec<(String, DiffPoly)>,
    pub weight: Vec<BooleanWeight>,
    pub order: MonomialOrder,
    pub kernel: SubstitutionKernel,
    pub prolong_bound: u32,
    pub pairs: Vec<(Exponent, Exponent)>,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn validate(&self) -> Result<Problem, CliError> {
        let m = self.m;
        if m == 0 {
            return Err(CliError::Parse("m must be positive".into()));
        }
        let n = self.n.unwrap_or(self.weight.len());
        if self.weight.len() != n {
            return Err(CliError::Parse(format!(
                "weight has {} entries, expected n = {n}",
                self.weight.len()
            )));
        }
        let mut polynomials = Vec::with_capacity(self.polynomials.len());
        for p in &self.polynomials {
            if polynomials.iter().any(|(name, _)| name == &p.name) {
                return Err(CliError::Parse(format!(
                    "duplicate polynomial name `{}`",
                    p.name
                )));
            }
            let d = diff_poly(&p.poly, m, n).map_err(|e| match e {
                CliError::Parse(msg) => CliError::Parse(format!("polynomial `{}`: {msg}", p.name)),
                other => other,
            })?;
            polynomials.push((p.name.clone(), d));
        }
        let weight = self
            .weight
            .iter()
            .map(|w| w.decode(m))
            .collect::<Result<Vec<_>, _>>()?;
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| Ok((exponent(a, m)?, exponent(b, m)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(Problem {
            m,
            n,
            polynomials,
            weight,
            order: self.order.decode(m)?,
            kernel: self.kernel.into(),
            prolong_bound: self.prolong_bound,
            pairs,
        })
    }
}

impl Problem {
    /// The named polynomials in file order, or all of them when `names` is empty.
    pub fn select(&self, names: &[String]) -> Result<Vec<(String, DiffPoly)>, CliError> {
        if names.is_empty() {
            return Ok(self.polynomials.clone());
        }
        names
            .iter()
            .map(|name| {
                self.polynomials
                    .iter()
                    .find(|(n, _)| n == name)
                    .cloned()
                    .ok_or_else(|| CliError::Parse(format!("unknown polynomial `{name}`")))
            })
            .collect()
    }
}
