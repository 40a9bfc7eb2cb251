#![allow(dead_code)]

use pfister_core::fieldcore::{Coeff, Monomial, MultiPoly, RatFunc, F2, Q};
use proptest::prelude::*;

pub fn q_coeff() -> impl Strategy<Value = Q> + Clone {
    (-6i64..=6, prop::sample::select(vec![1i64, 1, 1, 2, 3, 4])).prop_map(|(a, b)| Q::new(a, b))
}

/// Integer coefficients with a fixed bias towards odd numbers, so that
/// value-0 elements are common.
pub fn q_int_coeff() -> impl Strategy<Value = Q> + Clone {
    prop::sample::select(vec![-3i64, -2, -1, 1, 1, 2, 3, 4, 5, 6]).prop_map(Q::from_i64)
}

pub fn f2_coeff() -> impl Strategy<Value = F2> + Clone {
    any::<bool>().prop_map(F2)
}

fn exponents(n: usize, max_deg: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_deg, n).prop_map(move |mut e| {
        while e.iter().sum::<u32>() > max_deg {
            let i = e.iter().position(|&x| x > 0).unwrap();
            e[i] -= 1;
        }
        e
    })
}

pub fn poly<C: Coeff, S>(
    n: usize,
    max_deg: u32,
    max_terms: usize,
    coeff: S,
) -> impl Strategy<Value = MultiPoly<C>>
where
    S: Strategy<Value = C> + Clone,
{
    prop::collection::vec((exponents(n, max_deg), coeff), 0..=max_terms).prop_map(move |terms| {
        MultiPoly::from_terms(
            n,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), c)),
        )
    })
}

pub fn nonzero_poly<C: Coeff, S>(
    n: usize,
    max_deg: u32,
    max_terms: usize,
    coeff: S,
) -> impl Strategy<Value = MultiPoly<C>>
where
    S: Strategy<Value = C> + Clone,
{
    poly(n, max_deg, max_terms.max(1), coeff).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfunc<C: Coeff, S>(
    n: usize,
    max_deg: u32,
    max_terms: usize,
    coeff: S,
) -> impl Strategy<Value = RatFunc<C>>
where
    S: Strategy<Value = C> + Clone,
{
    (
        poly(n, max_deg, max_terms, coeff.clone()),
        nonzero_poly(n, max_deg, max_terms, coeff),
    )
        .prop_map(|(a, b)| RatFunc::new(a, b).unwrap())
}

pub fn nonzero_ratfunc<C: Coeff, S>(
    n: usize,
    max_deg: u32,
    max_terms: usize,
    coeff: S,
) -> impl Strategy<Value = RatFunc<C>>
where
    S: Strategy<Value = C> + Clone,
{
    (
        nonzero_poly(n, max_deg, max_terms, coeff.clone()),
        nonzero_poly(n, max_deg, max_terms, coeff),
    )
        .prop_map(|(a, b)| RatFunc::new(a, b).unwrap())
}

pub fn f2_ratfunc(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = RatFunc<F2>> {
    ratfunc(n, max_deg, max_terms, f2_coeff())
}

pub fn f2_nonzero(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = RatFunc<F2>> {
    nonzero_ratfunc(n, max_deg, max_terms, f2_coeff())
}

pub fn q_ratfunc(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = RatFunc<Q>> {
    ratfunc(n, max_deg, max_terms, q_coeff())
}

pub fn x<C: Coeff>(n: usize, i: usize) -> RatFunc<C> {
    RatFunc::var(n, i)
}

pub fn show<C: Coeff>(xs: &[RatFunc<C>]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// Determinant by cofactor expansion along the first row. Shares no code
/// with the library's elimination and is only meant for tiny matrices.
pub fn det<C: Coeff>(n: usize, m: &[Vec<RatFunc<C>>]) -> RatFunc<C> {
    match m.len() {
        0 => RatFunc::one(n),
        1 => m[0][0].clone(),
        k => {
            let mut acc = RatFunc::zero(n);
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<RatFunc<C>>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&det(n, &minor));
                acc = if j % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

fn subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, k, &mut Vec::new(), &mut out);
    out
}

/// Rank as the size of the largest nonvanishing minor.
pub fn rank_by_minors<C: Coeff>(n: usize, m: &[Vec<RatFunc<C>>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for k in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<RatFunc<C>>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                if !det(n, &sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}
