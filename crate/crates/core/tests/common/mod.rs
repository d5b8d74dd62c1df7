//! Random instance generators and brute-force oracles shared by the
//! integration tests and the acceptance runner.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropdiff_core::diff::{BooleanWeight, DiffMonomial, DiffPoly, DiffVar};
use tropdiff_core::{
    Exponent, MonomialOrder, OrderKind, QPoly, Rational, RationalFunction, VertexPoly,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn exponent(r: &mut impl Rng, m: usize, max: u32) -> Exponent {
    Exponent::new((0..m).map(|_| r.gen_range(0..=max)).collect())
}

pub fn point_set(r: &mut impl Rng, m: usize, max_len: usize, max: u32) -> Vec<Exponent> {
    let n = r.gen_range(1..=max_len);
    (0..n).map(|_| exponent(r, m, max)).collect()
}

pub fn vertex_poly(r: &mut impl Rng, m: usize) -> VertexPoly {
    if r.gen_ratio(1, 12) {
        return VertexPoly::zero(m);
    }
    VertexPoly::from_points(m, point_set(r, m, 5, 6)).unwrap()
}

pub fn nonzero_vertex_poly(r: &mut impl Rng, m: usize) -> VertexPoly {
    VertexPoly::from_points(m, point_set(r, m, 5, 6)).unwrap()
}

pub fn small_rational(r: &mut impl Rng) -> Rational {
    loop {
        let n: i64 = r.gen_range(-5..=5);
        let d: i64 = r.gen_range(1..=3);
        if n != 0 {
            return Rational::new(BigInt::from(n), BigInt::from(d));
        }
    }
}

pub fn qpoly(r: &mut impl Rng, m: usize, terms: usize, max: u32) -> QPoly {
    loop {
        let n = r.gen_range(1..=terms);
        let p =
            QPoly::from_terms(m, (0..n).map(|_| (exponent(r, m, max), small_rational(r)))).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random nonzero element of the unit ball. Mixes units, elements of the
/// maximal ideals and elements with `trop ≪ 1`.
pub fn unit_ball_element(r: &mut impl Rng, m: usize) -> RationalFunction {
    let g = qpoly(r, m, 3, 3);
    let f = match r.gen_range(0..4) {
        // Same leading behaviour as the denominator plus higher-order noise.
        0 => {
            &g.scale(&small_rational(r))
                + &qpoly(r, m, 2, 2)
                    .shift(&exponent(r, m, 2))
                    .shift(&Exponent::new(vec![1; m]))
        }
        // A generic fraction, pushed into the ball if necessary.
        1 | 2 => qpoly(r, m, 3, 3),
        _ => QPoly::from_terms(m, [(exponent(r, m, 3), small_rational(r))]).unwrap(),
    };
    let q = RationalFunction::new(f.clone(), g.clone()).unwrap();
    if q.in_unit_ball() {
        return q;
    }
    let lift = Exponent::new(vec![3; m]);
    RationalFunction::new(f.shift(&lift), g).unwrap()
}

pub fn random_order(r: &mut impl Rng, m: usize) -> MonomialOrder {
    loop {
        let rows = (0..m)
            .map(|_| (0..m).map(|_| r.gen_range(-3i64..=3)).collect())
            .collect();
        if let Ok(o) = MonomialOrder::from_rows(rows) {
            if !o.is_rank_deficient() {
                return o;
            }
        }
    }
}

pub fn standard_orders(m: usize) -> Vec<MonomialOrder> {
    [OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex]
        .into_iter()
        .map(|k| MonomialOrder::standard(k, m).unwrap())
        .collect()
}

/// The vertices of `conv(S) + R^2_{>=0}` by staircase filtering followed by a
/// lower convex hull scan.
pub fn staircase_hull(points: &[Exponent]) -> Vec<Exponent> {
    let mut pts: Vec<(i64, i64)> = points
        .iter()
        .map(|p| (p.coords()[0] as i64, p.coords()[1] as i64))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    pts.sort();
    let mut stair: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        if stair.last().is_none_or(|q| p.1 < q.1) {
            stair.push(p);
        }
    }
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in stair {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out: Vec<Exponent> = hull
        .into_iter()
        .map(|(a, b)| Exponent::from([a as u32, b as u32]))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

pub fn finite_weight(r: &mut impl Rng, m: usize) -> BooleanWeight {
    BooleanWeight::finite(point_set(r, m, 5, 3))
}

pub fn any_weight(r: &mut impl Rng, m: usize) -> BooleanWeight {
    match r.gen_range(0..4) {
        0 => BooleanWeight::Full,
        1 => finite_weight(r, m),
        _ => BooleanWeight::cofinite(point_set(r, m, 3, 2)),
    }
}

pub fn diff_monomial(r: &mut impl Rng, m: usize, n: usize) -> DiffMonomial {
    let k = r.gen_range(0..=2);
    DiffMonomial::from_factors((0..k).map(|_| {
        (
            DiffVar::new(r.gen_range(1..=n), exponent(r, m, 2)),
            r.gen_range(1..=2),
        )
    }))
}

pub fn coefficient(r: &mut impl Rng, m: usize) -> RationalFunction {
    if r.gen_bool(0.5) {
        RationalFunction::from_poly(qpoly(r, m, 2, 2))
    } else {
        RationalFunction::new(qpoly(r, m, 2, 2), qpoly(r, m, 2, 2)).unwrap()
    }
}

pub fn diff_poly(r: &mut impl Rng, m: usize, n: usize) -> DiffPoly {
    let k = r.gen_range(1..=3);
    DiffPoly::from_terms(
        m,
        (0..k).map(|_| (coefficient(r, m), diff_monomial(r, m, n))),
    )
    .unwrap()
}

/// `e_K(w) = sum_{I in w} t^I` for a finite weight.
pub fn indicator_series(w: &BooleanWeight, m: usize) -> QPoly {
    match w {
        BooleanWeight::Finite(s) => QPoly::indicator(m, s.iter()),
        _ => panic!("only finite weights have polynomial indicator series"),
    }
}

/// `E(e_K(w))` by explicit differentiation of the indicator polynomials.
pub fn evaluate_monomial(e: &DiffMonomial, w: &[BooleanWeight], m: usize) -> QPoly {
    let mut acc = QPoly::one(m);
    for (v, k) in e.factors() {
        let mut s = indicator_series(&w[v.index - 1], m);
        for (axis, &times) in v.order.coords().iter().enumerate() {
            for _ in 0..times {
                s = s.derivative(axis);
            }
        }
        acc = &acc * &s.pow(k);
    }
    acc
}
