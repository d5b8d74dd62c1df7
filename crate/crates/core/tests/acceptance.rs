//! Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. All sampling is seeded, all comparisons are exact.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use tropdiff_core::diff::{
    initial_form, initial_generators, prolong, translate, tropw, BooleanWeight, DiffMonomial,
    DiffPoly, DiffVar, SubstitutionKernel,
};
use tropdiff_core::exponent::exponents_up_to;
use tropdiff_core::parse::parse_rational;
use tropdiff_core::series::{order_from_membership, residue_oracle};
use tropdiff_core::vertex::{omega, vertex_extract};
use tropdiff_core::{
    Exponent, MonomialOrder, OrderKind, Rational, RationalFunction, VertexFraction, VertexPoly,
};

const SEED: u64 = 0x7d1f_2024;
const TIME_LIMIT: Duration = Duration::from_secs(1);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn x1(j: [u32; 2]) -> DiffMonomial {
    DiffMonomial::var(DiffVar::new(1, Exponent::from(j)))
}

fn univariate(terms: &[(String, [u32; 2])]) -> DiffPoly {
    DiffPoly::from_terms(
        2,
        terms
            .iter()
            .map(|(c, j)| (parse_rational(c, 2).unwrap(), x1(*j))),
    )
    .unwrap()
}

fn example() -> DiffPoly {
    univariate(&[("1".into(), [1, 1]), ("-t1".into(), [0, 0])])
}

fn example_weight() -> Vec<BooleanWeight> {
    vec![BooleanWeight::cofinite([Exponent::from([1, 1])])]
}

fn expected_translation(j: [u32; 2]) -> DiffPoly {
    let [a, b] = j;
    let mut terms = vec![("1".to_string(), [a + 1, b + 1])];
    if j == [0, 0] {
        terms.push(("-t1/(t1+t2)".into(), [0, 0]));
        return univariate(&terms);
    }
    let mid = if j == [1, 1] {
        "-t1*(t1+t2)".to_string()
    } else {
        "-t1".to_string()
    };
    terms.push((mid, j));
    if a > 0 {
        let last = if j == [2, 1] {
            format!("-{a}*(t1+t2)")
        } else {
            format!("-{a}")
        };
        terms.push((last, [a - 1, b]));
    }
    univariate(&terms)
}

fn golden_translations() -> Outcome {
    let start = Instant::now();
    let w = example_weight();
    let p = example();
    let sum = VertexPoly::from_points(2, [Exponent::from([1, 0]), Exponent::from([0, 1])]).unwrap();
    ensure(
        tropw(&p, &w).unwrap() == VertexFraction::from_poly(sum),
        || "trop_w(P)".into(),
    )?;
    let js = exponents_up_to(2, 4);
    for (d, j) in prolong(&p, 4).iter().zip(&js) {
        let j = [j.coords()[0], j.coords()[1]];
        let pw = translate(d, &w, SubstitutionKernel::Indicator).map_err(|e| e.to_string())?;
        ensure(pw == expected_translation(j), || {
            format!("translation at {j:?}: {pw}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{} derivatives, {elapsed:?}", js.len()))
}

fn golden_initial_forms() -> Outcome {
    let w = example_weight();
    let t_first = MonomialOrder::standard(OrderKind::Lex, 2).unwrap();
    let u_first = MonomialOrder::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
    let ind = SubstitutionKernel::Indicator;
    let a = initial_form(&example(), &w, &u_first, ind).unwrap();
    ensure(a == univariate(&[("1".into(), [1, 1])]), || {
        format!("u-first: {a}")
    })?;
    let b = initial_form(&example(), &w, &t_first, ind).unwrap();
    ensure(
        b == univariate(&[("1".into(), [1, 1]), ("-1".into(), [0, 0])]),
        || format!("t-first: {b}"),
    )?;
    let g = initial_generators(&[example()], &w, &u_first, 0, ind).unwrap();
    ensure(g == vec![a.clone()], || "generator list".into())?;
    Ok(format!("u-first {a}; t-first {b}"))
}

fn omega_chain() -> Outcome {
    let start = Instant::now();
    let chain: Vec<VertexFraction> = (1..=20).map(|n| omega(n).unwrap()).collect();
    for (n, w) in chain.iter().enumerate() {
        ensure(w.in_unit_ball(), || {
            format!("omega_{} outside the unit ball", n + 1)
        })?;
    }
    for (n, pair) in chain.windows(2).enumerate() {
        ensure(
            pair[0].leq(&pair[1]).unwrap() && !pair[1].leq(&pair[0]).unwrap(),
            || format!("omega_{} < omega_{} fails", n + 1, n + 2),
        )?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("19 strict steps, {elapsed:?}"))
}

fn order_bijection() -> Outcome {
    let r = &mut rng(SEED ^ 4);
    let mut checked = 0usize;
    let mut orders = 0usize;
    for m in [2, 3] {
        let mut ords = standard_orders(m);
        ords.extend((0..10).map(|_| random_order(r, m)));
        let pts = exponents_up_to(m, 4);
        for ord in &ords {
            orders += 1;
            let oracle = residue_oracle(ord);
            for a in &pts {
                for b in &pts {
                    let got = order_from_membership(&oracle, a, b)
                        .map_err(|e| format!("{e} at {a} {b}"))?;
                    let want = ord.compare(a, b).unwrap();
                    ensure(got == want, || {
                        format!("order {:?}: {a} vs {b}", ord.rows())
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!(
        "{checked} comparisons over {orders} orders, 0 inconsistent"
    ))
}

fn residue_homomorphism() -> Outcome {
    let r = &mut rng(SEED ^ 5);
    let mut nonzero = 0usize;
    let mut total = 0usize;
    for m in [2, 3] {
        for ord in standard_orders(m) {
            for _ in 0..1000 {
                let a = unit_ball_element(r, m);
                let b = unit_ball_element(r, m);
                let ra = a.residue(&ord).unwrap();
                let rb = b.residue(&ord).unwrap();
                ensure((&a + &b).residue(&ord).unwrap() == &ra + &rb, || {
                    format!("additivity: {a}, {b}")
                })?;
                ensure((&a * &b).residue(&ord).unwrap() == &ra * &rb, || {
                    format!("multiplicativity: {a}, {b}")
                })?;
                let h = qpoly(r, m, 3, 2);
                let other = RationalFunction::new(a.num() * &h, a.den() * &h).unwrap();
                ensure(other.residue(&ord).unwrap() == ra, || {
                    format!("representative: {a}, {h}")
                })?;
                if !num_traits::Zero::is_zero(&ra) {
                    nonzero += 1;
                }
                total += 1;
            }
        }
    }
    Ok(format!(
        "{total} pairs over 6 orders, {nonzero} with nonzero residue"
    ))
}

fn bezout() -> Outcome {
    let r = &mut rng(SEED ^ 6);
    let mut max_m = 0;
    for _ in 0..500 {
        let m = r.gen_range(1..=3);
        let phi = coefficient(r, m);
        let mut psi = coefficient(r, m);
        if r.gen_bool(0.4) {
            // Force cancellation at some vertex for M = 1.
            psi = &RationalFunction::from_poly(qpoly(r, m, 1, 2)) - &phi;
            if psi.is_zero() {
                psi = coefficient(r, m);
            }
        }
        let target = phi.trop().add(&psi.trop()).unwrap();
        let w = phi.bezout_witness(&psi).map_err(|e| e.to_string())?;
        let verts = (phi.num() * psi.den())
            .trop()
            .add(&(phi.den() * psi.num()).trop())
            .unwrap()
            .len() as u64;
        ensure(w >= 1 && w <= verts + 1, || {
            format!("M = {w} exceeds bound")
        })?;
        let got = (&phi + &psi.scale(&Rational::from_integer(w.into()))).trop();
        ensure(got == target, || format!("postcondition for {phi}, {psi}"))?;
        max_m = max_m.max(w);
    }
    Ok(format!("500 pairs, largest M = {max_m}"))
}

fn separating_constants() -> Outcome {
    let r = &mut rng(SEED ^ 7);
    let one = |m| VertexFraction::one(m);
    for _ in 0..500 {
        let m = r.gen_range(1..=3);
        let q = unit_ball_element(r, m);
        let alphas = q.separating_constants().map_err(|e| e.to_string())?;
        let mut prod = RationalFunction::one(m);
        for a in &alphas {
            prod = &prod * &(&q - &RationalFunction::constant(m, a.clone()));
        }
        ensure(prod.trop().irrelevant(&one(m)).unwrap(), || {
            format!("product not irrelevant for {q}")
        })?;
    }
    Ok("500 fractions".into())
}

fn initial_multiplicativity() -> Outcome {
    let r = &mut rng(SEED ^ 8);
    let m = 2;
    let ords = [
        MonomialOrder::standard(OrderKind::Lex, m).unwrap(),
        MonomialOrder::standard(OrderKind::GrevLex, m).unwrap(),
        MonomialOrder::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap(),
    ];
    let mut nontrivial = 0usize;
    for _ in 0..300 {
        let n = r.gen_range(1..=2);
        let w: Vec<BooleanWeight> = (0..n).map(|_| any_weight(r, m)).collect();
        let p = diff_poly(r, m, n);
        let q = diff_poly(r, m, n);
        let pq = p.checked_mul(&q).unwrap();
        for kernel in [SubstitutionKernel::Indicator, SubstitutionKernel::Factorial] {
            for ord in &ords {
                let lhs = initial_form(&pq, &w, ord, kernel).map_err(|e| e.to_string())?;
                let a = initial_form(&p, &w, ord, kernel).unwrap();
                let b = initial_form(&q, &w, ord, kernel).unwrap();
                ensure(lhs == a.checked_mul(&b).unwrap(), || {
                    format!("P = {p}, Q = {q}, {kernel:?}")
                })?;
                if !lhs.is_zero() {
                    nontrivial += 1;
                }
            }
        }
    }
    Ok(format!(
        "300 pairs x 2 kernels x 3 orders, {nontrivial} nonzero products"
    ))
}

fn vertex_oracle() -> Outcome {
    let r = &mut rng(SEED ^ 9);
    for _ in 0..1000 {
        let pts = point_set(r, 2, 12, 20);
        let v = vertex_extract(2, pts.iter().cloned()).unwrap();
        ensure(v.vertices() == staircase_hull(&pts).as_slice(), || {
            format!("points {pts:?}")
        })?;
    }
    Ok("1000 point sets".into())
}

fn axiom_suites() -> Outcome {
    let r = &mut rng(SEED ^ 10);
    for _ in 0..500 {
        let m = r.gen_range(1..=3);
        let (a, b, c) = (vertex_poly(r, m), vertex_poly(r, m), vertex_poly(r, m));
        let add = |x: &VertexPoly, y: &VertexPoly| x.add(y).unwrap();
        let mul = |x: &VertexPoly, y: &VertexPoly| x.mul(y).unwrap();
        ensure(
            add(&a, &b) == add(&b, &a) && mul(&a, &b) == mul(&b, &a),
            || "commutativity".into(),
        )?;
        ensure(add(&add(&a, &b), &c) == add(&a, &add(&b, &c)), || {
            "additive associativity".into()
        })?;
        ensure(mul(&mul(&a, &b), &c) == mul(&a, &mul(&b, &c)), || {
            "multiplicative associativity".into()
        })?;
        ensure(add(&a, &a) == a, || "idempotency".into())?;
        ensure(
            mul(&a, &add(&b, &c)) == add(&mul(&a, &b), &mul(&a, &c)),
            || "distributivity".into(),
        )?;
        ensure(
            add(&a, &VertexPoly::zero(m)) == a && mul(&a, &VertexPoly::one(m)) == a,
            || "neutral".into(),
        )?;
        ensure(mul(&a, &VertexPoly::zero(m)).is_zero(), || {
            "annihilation".into()
        })?;
        if !a.is_zero() {
            ensure((mul(&a, &b) == mul(&a, &c)) == (b == c), || {
                "cancellativity".into()
            })?;
        }
    }
    for _ in 0..500 {
        let m = r.gen_range(1..=3);
        let p = coefficient(r, m);
        let q = coefficient(r, m);
        ensure((&p * &q).trop() == p.trop().mul(&q.trop()).unwrap(), || {
            format!("trop multiplicative: {p}, {q}")
        })?;
        let sub = (&p + &q)
            .trop()
            .leq(&p.trop().add(&q.trop()).unwrap())
            .unwrap();
        ensure(sub, || format!("trop subadditive: {p}, {q}"))?;
    }
    for _ in 0..200 {
        let m = r.gen_range(1..=2);
        let n = r.gen_range(1..=2);
        let w: Vec<BooleanWeight> = (0..n).map(|_| finite_weight(r, m)).collect();
        let e = diff_monomial(r, m, n);
        let p = DiffPoly::from_terms(m, [(RationalFunction::one(m), e.clone())]).unwrap();
        let series = VertexFraction::from_poly(evaluate_monomial(&e, &w, m).trop());
        ensure(tropw(&p, &w).unwrap() == series, || {
            format!("monomial value of {p}")
        })?;
    }
    Ok("500 semiring, 500 valuation, 200 monomial-evaluation instances".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "golden translations of x_(1,1) - t*x_(0,0), |J| <= 4",
            golden_translations,
        ),
        (
            "initial forms under t-first and u-first lex",
            golden_initial_forms,
        ),
        (
            "strict chain omega_1 < ... < omega_20 in the unit ball",
            omega_chain,
        ),
        (
            "orders recovered from maximal-ideal membership",
            order_bijection,
        ),
        (
            "residue is an exact ring homomorphism",
            residue_homomorphism,
        ),
        ("Bezout witness bound and postcondition", bezout),
        (
            "separating constants give an irrelevant product",
            separating_constants,
        ),
        ("initial forms are multiplicative", initial_multiplicativity),
        (
            "vertex extraction equals the staircase-hull oracle",
            vertex_oracle,
        ),
        ("semiring and valuation axioms", axiom_suites),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} [{detail}]", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} [{why}]", n + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 10 criteria fail");
        ExitCode::FAILURE
    }
}
