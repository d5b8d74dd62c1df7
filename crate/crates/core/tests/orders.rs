mod common;

use std::cmp::Ordering;

use common::*;
use proptest::prelude::*;
use tropdiff_core::exponent::exponents_up_to;
use tropdiff_core::series::{order_from_membership, residue_oracle};
use tropdiff_core::vertex::vertex_extract;
use tropdiff_core::{Exponent, MonomialOrder, OrderKind};

fn orders(seed: u64, m: usize) -> Vec<MonomialOrder> {
    let mut out = standard_orders(m);
    out.push(random_order(&mut rng(seed), m));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn totality_and_translation_invariance(seed in any::<u64>(), m in 1usize..=4) {
        let r = &mut rng(seed);
        let (a, b, c) = (exponent(r, m, 6), exponent(r, m, 6), exponent(r, m, 6));
        for ord in orders(seed, m) {
            let ab = ord.compare(&a, &b).unwrap();
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(ord.compare(&b, &a).unwrap(), ab.reverse());
            prop_assert_eq!(ord.compare(&(&a + &c), &(&b + &c)).unwrap(), ab);
            if !a.is_zero() {
                prop_assert_eq!(ord.compare(&Exponent::zero(m), &a).unwrap(), Ordering::Less);
            }
        }
    }

    #[test]
    fn minimum_is_a_vertex(seed in any::<u64>(), m in 1usize..=3) {
        let r = &mut rng(seed);
        let set = point_set(r, m, 8, 6);
        let verts = vertex_extract(m, set.iter().cloned()).unwrap();
        for ord in orders(seed, m) {
            let lo = ord.min(&set).unwrap();
            for s in &set {
                prop_assert_ne!(ord.compare(lo, s).unwrap(), Ordering::Greater);
            }
            prop_assert!(verts.contains(lo));
            prop_assert_eq!(ord.min(verts.vertices()).unwrap(), lo);
        }
    }

    #[test]
    fn membership_recovers_order(seed in any::<u64>(), m in 2usize..=3) {
        let r = &mut rng(seed);
        let ord = random_order(r, m);
        let (a, b) = (exponent(r, m, 4), exponent(r, m, 4));
        let got = order_from_membership(residue_oracle(&ord), &a, &b).unwrap();
        prop_assert_eq!(got, ord.compare(&a, &b).unwrap());
    }
}

type Definition = fn(&Exponent, &Exponent) -> Ordering;

fn brute_grevlex(a: &Exponent, b: &Exponent) -> Ordering {
    // Degree first; on ties the larger exponent in t1 (the smallest variable)
    // makes the monomial smaller, then t2, and so on.
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.coords().iter().zip(b.coords()) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn brute_lex(a: &Exponent, b: &Exponent) -> Ordering {
    // The last variable is the largest, so it is compared first.
    a.coords().iter().rev().cmp(b.coords().iter().rev())
}

fn brute_grlex(a: &Exponent, b: &Exponent) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| brute_lex(a, b))
}

#[test]
fn standard_orders_match_definitions() {
    for m in 1..=3 {
        let pts = exponents_up_to(m, 4);
        let cases: [(OrderKind, Definition); 3] = [
            (OrderKind::Lex, brute_lex),
            (OrderKind::GrLex, brute_grlex),
            (OrderKind::GrevLex, brute_grevlex),
        ];
        for (kind, def) in cases {
            let ord = MonomialOrder::standard(kind, m).unwrap();
            assert!(!ord.is_rank_deficient());
            for a in &pts {
                for b in &pts {
                    assert_eq!(ord.compare(a, b).unwrap(), def(a, b), "{kind:?} {a} {b}");
                }
            }
        }
    }
}

#[test]
fn variables_increase_with_index() {
    for m in 1..=4 {
        for ord in standard_orders(m) {
            for k in 1..m {
                let lo = Exponent::unit(m, k - 1);
                let hi = Exponent::unit(m, k);
                assert_eq!(ord.compare(&lo, &hi).unwrap(), Ordering::Less);
            }
        }
    }
}

#[test]
fn rank_deficient_matrices_are_flagged() {
    let ord = MonomialOrder::from_rows(vec![vec![1, 1]]).unwrap();
    assert!(ord.is_rank_deficient());
    let a = Exponent::from([1, 0]);
    let b = Exponent::from([0, 1]);
    assert_eq!(ord.compare(&a, &b).unwrap(), Ordering::Less);
    assert!(MonomialOrder::from_rows(vec![vec![0, 1], vec![1, 0]]).is_ok());
    assert!(MonomialOrder::from_rows(vec![vec![1, -1], vec![0, 1]]).is_err());
}

#[test]
fn grevlex_round_trip_is_exhaustive() {
    let ord = MonomialOrder::standard(OrderKind::GrevLex, 2).unwrap();
    let pts = exponents_up_to(2, 5);
    for a in &pts {
        for b in &pts {
            let got = order_from_membership(residue_oracle(&ord), a, b).unwrap();
            assert_eq!(got, ord.compare(a, b).unwrap());
        }
    }
}
