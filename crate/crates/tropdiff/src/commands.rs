//! The subcommands as pure functions from parsed input to rendered output.

use std::cmp::Ordering;

use serde::Serialize;
use tropdiff_core::diff::{
    initial_generators, prolong, translate, tropw, DiffPoly, SubstitutionKernel,
};
use tropdiff_core::exponent::exponents_up_to;
use tropdiff_core::parse::max_variable_index;
use tropdiff_core::series::{order_from_membership, residue_oracle};
use tropdiff_core::vertex::omega;
use tropdiff_core::{Exponent, MonomialOrder, OrderKind, RationalFunction, VertexFraction};

use crate::error::CliError;
use crate::json::{
    diff_poly_json, exponent_json, DiffPolyJson, ExponentJson, PolyJson, RationalJson,
    VertexFractionJson,
};
use crate::problem::{Problem, ProblemFile};

/// A command result in both output formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub json: String,
    pub pretty: String,
}

impl Output {
    fn new<T: Serialize>(value: &T, pretty: String) -> Self {
        let json = serde_json::to_string(value).expect("output types serialize");
        Output { json, pretty }
    }
}

/// Printing conventions: `t, u` when `m = 2`, `t1..tm` otherwise, and a bare
/// `x` when there is a single indeterminate.
pub struct Names {
    t: Vec<String>,
    single: bool,
}

impl Names {
    pub fn new(m: usize, n: usize) -> Self {
        let t = if m == 2 {
            vec!["t".into(), "u".into()]
        } else {
            (1..=m).map(|k| format!("t{k}")).collect()
        };
        Names { t, single: n == 1 }
    }

    fn refs(&self) -> Vec<&str> {
        self.t.iter().map(String::as_str).collect()
    }

    pub fn diff(&self, p: &DiffPoly) -> String {
        p.display_with(&self.refs(), self.single)
    }

    pub fn rational(&self, q: &RationalFunction) -> String {
        q.display_with(&self.refs())
    }
}

fn infer_dim_poly(p: &PolyJson) -> usize {
    match p {
        PolyJson::Text(s) => max_variable_index(s),
        PolyJson::Terms { terms } => terms.first().map_or(0, |t| t.exp.len()),
    }
}

fn infer_dim(q: &RationalJson) -> usize {
    match q {
        RationalJson::Text(s) => max_variable_index(s),
        RationalJson::Fraction { num, den } => infer_dim_poly(num).max(infer_dim_poly(den)),
        RationalJson::Poly { terms } => terms.first().map_or(0, |t| t.exp.len()),
    }
}

/// Reads a rational function from expression text or its JSON form. Without
/// an explicit `m` the dimension is the largest variable index, at least 2.
pub fn read_rational(input: &str, m: Option<usize>) -> Result<(RationalFunction, usize), CliError> {
    let trimmed = input.trim();
    let parsed: RationalJson = if trimmed.starts_with('{') || trimmed.starts_with('"') {
        serde_json::from_str(trimmed)?
    } else {
        RationalJson::Text(trimmed.to_string())
    };
    let m = match m {
        Some(0) => return Err(CliError::Parse("--vars must be positive".into())),
        Some(m) => m,
        None => infer_dim(&parsed).max(2),
    };
    Ok((parsed.decode(m)?, m))
}

pub fn trop(input: &str, m: Option<usize>) -> Result<Output, CliError> {
    let (q, _) = read_rational(input, m)?;
    let v = q.trop();
    Ok(Output::new(&VertexFractionJson::new(&v), v.to_string()))
}

pub fn read_problem(text: &str) -> Result<Problem, CliError> {
    ProblemFile::from_json(text)?.validate()
}

/// Options shared by the commands that work on a problem file.
#[derive(Debug, Clone, Default)]
pub struct Selection {
    pub names: Vec<String>,
    pub bound: Option<u32>,
    pub kernel: Option<SubstitutionKernel>,
}

impl Selection {
    fn bound(&self, p: &Problem) -> u32 {
        self.bound.unwrap_or(p.prolong_bound)
    }

    fn kernel(&self, p: &Problem) -> SubstitutionKernel {
        self.kernel.unwrap_or(p.kernel)
    }
}

/// Every selected polynomial with its derivatives up to the bound.
fn derivatives(
    p: &Problem,
    sel: &Selection,
) -> Result<Vec<(String, Exponent, DiffPoly)>, CliError> {
    let bound = sel.bound(p);
    let js = exponents_up_to(p.m, bound);
    let mut out = Vec::new();
    for (name, poly) in p.select(&sel.names)? {
        for (j, d) in js.iter().zip(prolong(&poly, bound)) {
            out.push((name.clone(), j.clone(), d));
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct ValueEntry {
    name: String,
    derivative: ExponentJson,
    value: VertexFractionJson,
}

#[derive(Serialize)]
struct PolyEntry {
    name: String,
    derivative: ExponentJson,
    poly: DiffPolyJson,
}

fn label(name: &str, j: &Exponent) -> String {
    if j.is_zero() {
        name.to_string()
    } else {
        format!("{name}_{j}")
    }
}

pub fn tropw_cmd(p: &Problem, sel: &Selection) -> Result<Output, CliError> {
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    for (name, j, d) in derivatives(p, sel)? {
        let v = tropw(&d, &p.weight)?;
        lines.push(format!("trop_w({}) = {v}", label(&name, &j)));
        entries.push(ValueEntry {
            name,
            derivative: exponent_json(&j),
            value: VertexFractionJson::new(&v),
        });
    }
    Ok(Output::new(&entries, lines.join("\n")))
}

fn poly_entries<F>(p: &Problem, sel: &Selection, f: F, tag: &str) -> Result<Output, CliError>
where
    F: Fn(&DiffPoly) -> Result<DiffPoly, CliError>,
{
    let names = Names::new(p.m, p.n);
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    for (name, j, d) in derivatives(p, sel)? {
        let r = f(&d)?;
        lines.push(format!("{}{tag} = {}", label(&name, &j), names.diff(&r)));
        entries.push(PolyEntry {
            name,
            derivative: exponent_json(&j),
            poly: diff_poly_json(&r),
        });
    }
    Ok(Output::new(&entries, lines.join("\n")))
}

pub fn translate_cmd(p: &Problem, sel: &Selection) -> Result<Output, CliError> {
    let kernel = sel.kernel(p);
    poly_entries(p, sel, |d| Ok(translate(d, &p.weight, kernel)?), "_w")
}

pub fn prolong_cmd(p: &Problem, sel: &Selection) -> Result<Output, CliError> {
    poly_entries(p, sel, |d| Ok(d.clone()), "")
}

/// The generator set of the initial ideal: nonzero initial forms of all
/// translated derivatives, in input order and without repeats.
pub fn initial_cmd(p: &Problem, sel: &Selection) -> Result<Output, CliError> {
    let gens: Vec<DiffPoly> = p.select(&sel.names)?.into_iter().map(|(_, d)| d).collect();
    let forms = initial_generators(&gens, &p.weight, &p.order, sel.bound(p), sel.kernel(p))?;
    let names = Names::new(p.m, p.n);
    let json: Vec<DiffPolyJson> = forms.iter().map(diff_poly_json).collect();
    let pretty = forms
        .iter()
        .map(|f| names.diff(f))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(&json, pretty))
}

#[derive(Serialize)]
struct Comparison {
    pair: (ExponentJson, ExponentJson),
    order: &'static str,
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

/// Recovers comparisons from maximal-ideal membership and checks them against
/// the order itself. With `exhaustive = Some(d)` all pairs of degree at most
/// `d` are used in place of the listed pairs.
pub fn order_recover_cmd(p: &Problem, exhaustive: Option<u32>) -> Result<Output, CliError> {
    let pairs: Vec<(Exponent, Exponent)> = match exhaustive {
        Some(d) => {
            let pts = exponents_up_to(p.m, d);
            pts.iter()
                .flat_map(|a| pts.iter().map(move |b| (a.clone(), b.clone())))
                .collect()
        }
        None => p.pairs.clone(),
    };
    let oracle = residue_oracle(&p.order);
    let mut out = Vec::with_capacity(pairs.len());
    let mut lines = Vec::with_capacity(pairs.len());
    for (a, b) in &pairs {
        let got = order_from_membership(&oracle, a, b)?;
        let want = p.order.compare(a, b)?;
        if got != want {
            return Err(CliError::Internal(format!(
                "recovered {a} vs {b} as {got:?}, order says {want:?}"
            )));
        }
        let sym = match got {
            Ordering::Less => "<",
            Ordering::Equal => "=",
            Ordering::Greater => ">",
        };
        lines.push(format!("{a} {sym} {b}"));
        out.push(Comparison {
            pair: (exponent_json(a), exponent_json(b)),
            order: ordering_name(got),
        });
    }
    Ok(Output::new(&out, lines.join("\n")))
}

#[derive(Serialize)]
struct BezoutResult {
    multiplier: u64,
    value: VertexFractionJson,
}

/// The smallest `M >= 1` with `trop(phi + M psi) = trop(phi) ⊕ trop(psi)`.
pub fn bezout_cmd(phi: &str, psi: &str, m: Option<usize>) -> Result<Output, CliError> {
    let m = m.unwrap_or_else(|| max_variable_index(phi).max(max_variable_index(psi)).max(2));
    let (a, _) = read_rational(phi, Some(m))?;
    let (b, _) = read_rational(psi, Some(m))?;
    let k = a.bezout_witness(&b)?;
    let sum = &a + &b.scale(&tropdiff_core::Rational::from_integer(k.into()));
    let v = sum.trop();
    let names = Names::new(m, 1);
    let pretty = format!(
        "M = {k}\nphi + M*psi = {}\ntrop = {v}",
        names.rational(&sum)
    );
    Ok(Output::new(
        &BezoutResult {
            multiplier: k,
            value: VertexFractionJson::new(&v),
        },
        pretty,
    ))
}

#[derive(Serialize)]
struct OmegaEntry {
    n: u32,
    omega: VertexFractionJson,
}

/// `omega_1, ..., omega_n`, verified to lie in the unit ball and to increase strictly.
pub fn omega_chain_cmd(n: u32) -> Result<Output, CliError> {
    let chain: Vec<VertexFraction> = (1..=n.max(1) + 1).map(omega).collect::<Result<_, _>>()?;
    for (k, pair) in chain.windows(2).enumerate().take(n as usize) {
        if !pair[0].in_unit_ball() {
            return Err(CliError::Internal(format!(
                "omega_{} is not in the unit ball",
                k + 1
            )));
        }
        if !pair[0].leq(&pair[1])? || pair[1].leq(&pair[0])? {
            return Err(CliError::Internal(format!(
                "omega_{} < omega_{} fails",
                k + 1,
                k + 2
            )));
        }
    }
    let entries: Vec<OmegaEntry> = chain
        .iter()
        .take(n as usize)
        .zip(1..)
        .map(|(w, k)| OmegaEntry {
            n: k,
            omega: VertexFractionJson::new(w),
        })
        .collect();
    let pretty = entries
        .iter()
        .zip(&chain)
        .map(|(e, w)| format!("omega_{} = {w}", e.n))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(&entries, pretty))
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    pass: bool,
}

const SELFTEST_PROBLEM: &str = r#"{
  "m": 2, "n": 1,
  "polynomials": [{"name": "P", "poly": [
    {"coeff": "1", "monomial": [{"var": [1, [1, 1]], "pow": 1}]},
    {"coeff": "-t1", "monomial": [{"var": [1, [0, 0]], "pow": 1}]}
  ]}],
  "weight": [{"type": "cofinite", "excluded": [[1, 1]]}],
  "order": {"type": "lex"}
}"#;

/// A quick end-to-end check on the worked example and the chain `omega_n`.
pub fn selftest_cmd() -> Result<Output, CliError> {
    let p = read_problem(SELFTEST_PROBLEM)?;
    let names = Names::new(2, 1);
    let sel = Selection::default();
    let (_, poly) = &p.polynomials[0];
    let tw = tropw(poly, &p.weight)?;
    let translated = names.diff(&translate(poly, &p.weight, SubstitutionKernel::Indicator)?);
    let t_first = initial_generators(
        std::slice::from_ref(poly),
        &p.weight,
        &p.order,
        0,
        SubstitutionKernel::Indicator,
    )?;
    let u_first_ord = MonomialOrder::from_rows(vec![vec![1, 0], vec![0, 1]])?;
    let u_first = initial_generators(
        std::slice::from_ref(poly),
        &p.weight,
        &u_first_ord,
        0,
        SubstitutionKernel::Indicator,
    )?;
    let joined = |v: &[DiffPoly]| {
        v.iter()
            .map(|f| names.diff(f))
            .collect::<Vec<_>>()
            .join("; ")
    };
    let mut round_trip = true;
    for kind in [OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex] {
        let ord = MonomialOrder::standard(kind, 2)?;
        let q = Problem {
            order: ord,
            ..p.clone()
        };
        round_trip &= order_recover_cmd(&q, Some(3)).is_ok();
    }
    let checks = vec![
        Check {
            name: "trop_w of the example",
            pass: tw.to_string() == "{(1,0),(0,1)}/{(0,0)}",
        },
        Check {
            name: "translation of the example",
            pass: translated == "x_(1,1) - t/(t + u)*x_(0,0)",
        },
        Check {
            name: "initial form, t first",
            pass: joined(&t_first) == "x_(1,1) - x_(0,0)",
        },
        Check {
            name: "initial form, u first",
            pass: joined(&u_first) == "x_(1,1)",
        },
        Check {
            name: "prolongation count",
            pass: derivatives(
                &Problem {
                    prolong_bound: 2,
                    ..p.clone()
                },
                &sel,
            )?
            .len()
                == 6,
        },
        Check {
            name: "omega chain up to 20",
            pass: omega_chain_cmd(20).is_ok(),
        },
        Check {
            name: "order recovery",
            pass: round_trip,
        },
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
    if !failed.is_empty() {
        return Err(CliError::Internal(format!(
            "selftest failed: {}",
            failed.join(", ")
        )));
    }
    let pretty = checks
        .iter()
        .map(|c| format!("ok  {}", c.name))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(&checks, pretty))
}
