use proptest::prelude::*;
use tropdiff::json::{diff_poly, diff_poly_json, RationalJson, VertexFractionJson, WeightJson};
use tropdiff_core::diff::{BooleanWeight, DiffMonomial, DiffPoly, DiffVar};
use tropdiff_core::{Exponent, QPoly, Rational, RationalFunction, VertexFraction, VertexPoly};

const M: usize = 2;

fn exponent() -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0u32..4, M).prop_map(Exponent::new)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec((exponent(), rational()), 1..4)
        .prop_map(|t| QPoly::from_terms(M, t).unwrap())
}

fn rational_function() -> impl Strategy<Value = RationalFunction> {
    (qpoly(), qpoly()).prop_filter_map("nonzero denominator", |(n, d)| {
        RationalFunction::new(n, d).ok()
    })
}

fn vertex_poly() -> impl Strategy<Value = VertexPoly> {
    prop::collection::vec(exponent(), 0..5).prop_map(|p| VertexPoly::from_points(M, p).unwrap())
}

fn diff_monomial() -> impl Strategy<Value = DiffMonomial> {
    prop::collection::vec(((1usize..=2, exponent()), 1u32..3), 0..3).prop_map(|f| {
        DiffMonomial::from_factors(f.into_iter().map(|((i, j), k)| (DiffVar::new(i, j), k)))
    })
}

fn diff_poly_strategy() -> impl Strategy<Value = DiffPoly> {
    prop::collection::vec((rational_function(), diff_monomial()), 0..4)
        .prop_map(|t| DiffPoly::from_terms(M, t).unwrap())
}

fn weight() -> impl Strategy<Value = BooleanWeight> {
    prop_oneof![
        Just(BooleanWeight::Full),
        prop::collection::vec(exponent(), 0..4).prop_map(BooleanWeight::finite),
        prop::collection::vec(exponent(), 0..4).prop_map(BooleanWeight::cofinite),
    ]
}

proptest! {
    #[test]
    fn rational_functions_round_trip(q in rational_function()) {
        let text = serde_json::to_string(&RationalJson::new(&q)).unwrap();
        let back: RationalJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.decode(M).unwrap(), q.clone());
        // The pretty form is also accepted as input.
        let names = ["t1", "t2"];
        prop_assert_eq!(RationalJson::Text(q.display_with(&names)).decode(M).unwrap(), q);
    }

    #[test]
    fn vertex_fractions_round_trip(a in vertex_poly(), b in vertex_poly()) {
        prop_assume!(!b.is_zero());
        let v = VertexFraction::new(a, b).unwrap();
        let text = serde_json::to_string(&VertexFractionJson::new(&v)).unwrap();
        let back: VertexFractionJson = serde_json::from_str(&text).unwrap();
        let decoded = back.decode(M).unwrap();
        prop_assert_eq!(decoded.num(), v.num());
        prop_assert_eq!(decoded.den(), v.den());
    }

    #[test]
    fn diff_polys_round_trip(p in diff_poly_strategy()) {
        let text = serde_json::to_string(&diff_poly_json(&p)).unwrap();
        let back: tropdiff::json::DiffPolyJson = serde_json::from_str(&text).unwrap();
        let decoded = diff_poly(&back, M, 2).unwrap();
        prop_assert_eq!(&decoded, &p);
        prop_assert_eq!(serde_json::to_string(&diff_poly_json(&decoded)).unwrap(), text);
    }

    #[test]
    fn weights_round_trip(w in weight()) {
        let text = serde_json::to_string(&WeightJson::new(&w)).unwrap();
        let back: WeightJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.decode(M).unwrap(), w);
    }
}
