mod common;

use std::collections::BTreeMap;

use common::*;
use pfister_core::char2linalg::{
    frob_coords, intersect, member, span, span_of_elements, subset_products, two_independent,
    verify_combination, verify_relation, FrobCoords, Membership, TwoIndependence,
};
use pfister_core::fieldcore::{Monomial, MultiPoly, RatFunc, F2};
use pfister_core::verifier::parse_list;
use pfister_core::Exec;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Coordinates of a polynomial over F^2, computed straight from the terms:
/// each term c*x^a lands in class (a mod 2) with square root c*x^(a div 2).
/// Only the classes are ordered by the integer index of the parity vector.
fn poly_frob_oracle(n: usize, p: &MultiPoly<F2>) -> Vec<RatFunc<F2>> {
    let mut classes: BTreeMap<usize, Vec<(Monomial, F2)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.exponents();
        let idx = e
            .iter()
            .enumerate()
            .map(|(i, a)| ((a % 2) as usize) << i)
            .sum();
        let half: Vec<u32> = e.iter().map(|a| a / 2).collect();
        classes
            .entry(idx)
            .or_default()
            .push((Monomial::from_exponents(&half), *c));
    }
    (0..1usize << n)
        .map(|i| {
            RatFunc::from_poly(MultiPoly::from_terms(
                n,
                classes.remove(&i).unwrap_or_default(),
            ))
        })
        .collect()
}

fn rank_oracle(n: usize, polys: &[RatFunc<F2>]) -> usize {
    let rows: Vec<Vec<RatFunc<F2>>> = polys
        .iter()
        .map(|f| {
            assert!(f.is_polynomial());
            poly_frob_oracle(n, f.numer())
        })
        .collect();
    rank_by_minors(n, &rows)
}

fn elements(n: usize, k: usize) -> impl Strategy<Value = Vec<RatFunc<F2>>> {
    prop::collection::vec(f2_ratfunc(n, 3, 3), 0..=k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn frobenius_roundtrip(f in f2_ratfunc(3, 6, 4)) {
        prop_assert_eq!(frob_coords(&f).reconstruct(), f);
    }

    #[test]
    fn coordinates_are_additive(f in f2_ratfunc(3, 4, 3), g in f2_ratfunc(3, 4, 3)) {
        prop_assert_eq!(frob_coords(&f.add(&g)), frob_coords(&f).add(&frob_coords(&g)));
    }

    #[test]
    fn coordinates_match_the_term_oracle(p in poly(3, 6, 5, f2_coeff())) {
        let got = frob_coords(&RatFunc::from_poly(p.clone()));
        prop_assert_eq!(got.coords(), &poly_frob_oracle(3, &p)[..]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn span_dimension_ignores_order(v in elements(2, 5), seed in any::<u64>()) {
        let mut shuffled = v.clone();
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let a = span_of_elements(2, &v, Exec::Sequential);
        let b = span_of_elements(2, &shuffled, Exec::Sequential);
        prop_assert_eq!(a.dim(), b.dim());
        for e in &v {
            prop_assert!(member(e, &b).is_member());
        }
    }

    #[test]
    fn dimension_formula(u in elements(2, 3), w in elements(2, 3)) {
        let a = span_of_elements(2, &u, Exec::Sequential);
        let b = span_of_elements(2, &w, Exec::Sequential);
        let cap = intersect(&a, &b);
        prop_assert_eq!(a.dim() + b.dim(), a.sum(&b).dim() + cap.dim());
        for e in cap.basis_elements() {
            for s in [&a, &b] {
                match member(&e, s) {
                    Membership::Member { combination } => prop_assert!(verify_combination(&e, s, &combination)),
                    Membership::NotMember => prop_assert!(false, "intersection element outside a factor"),
                }
            }
        }
    }

    #[test]
    fn square_multiples_are_dependent(
        alphas in prop::collection::vec(f2_nonzero(3, 2, 3), 2..=3),
        g in f2_nonzero(3, 2, 3),
        i in 0usize..3,
        j in 0usize..3,
    ) {
        let m = alphas.len();
        let (i, j) = (i % m, j % m);
        prop_assume!(i != j);
        let mut alphas = alphas;
        alphas[i] = g.square().mul(&alphas[j]);
        match two_independent(&alphas, Exec::Sequential).unwrap() {
            TwoIndependence::Independent => prop_assert!(false, "g^2*a and a reported 2-independent"),
            TwoIndependence::Dependent { relation } => prop_assert!(verify_relation(&alphas, &relation)),
        }
    }

    #[test]
    fn independence_matches_the_minor_rank(
        alphas in prop::collection::vec(nonzero_poly(2, 2, 3, f2_coeff()).prop_map(RatFunc::from_poly), 1..=2),
    ) {
        let oracle = rank_oracle(2, &subset_products(&alphas)) == 1 << alphas.len();
        let got = two_independent(&alphas, Exec::Sequential).unwrap().is_independent();
        prop_assert_eq!(got, oracle);
    }
}

#[test]
fn span_dimension_examples() {
    let n = 2;
    let cases = [
        ("x1", 1),
        ("x1^3", 1),
        ("1;x1;x2;x1*x2", 4),
        ("x1;x1*x2^2", 1),
        ("1;x1;x1+1", 2),
    ];
    for (src, expected) in cases {
        let v = parse_list::<F2>(src, n).unwrap();
        assert_eq!(
            span_of_elements(n, &v, Exec::Sequential).dim(),
            expected,
            "{src}"
        );
        assert_eq!(rank_oracle(n, &v), expected, "{src}");
    }
    assert_eq!(span(n, &[FrobCoords::zero(n)]).dim(), 0);
}

#[test]
fn two_independence_examples() {
    let yes = ["x1;x2", "x1;x2^3", "x1;x2+1", "x2;x1*x2+1"];
    let no = ["x1;x1", "x1;x1*x2^2", "x1^3;x1"];
    for (src, expected) in yes
        .iter()
        .map(|s| (s, true))
        .chain(no.iter().map(|s| (s, false)))
    {
        let a = parse_list::<F2>(src, 2).unwrap();
        assert_eq!(
            two_independent(&a, Exec::Sequential)
                .unwrap()
                .is_independent(),
            expected,
            "{src}"
        );
        assert_eq!(rank_oracle(2, &subset_products(&a)) == 4, expected, "{src}");
    }
    let a = parse_list::<F2>("x1;x2;x3", 3).unwrap();
    assert!(two_independent(&a, Exec::Parallel)
        .unwrap()
        .is_independent());
}
