//! Exhaustive isotropy search over F2: an oracle for the rank criterion
//! that shares no code with the elimination path.
//!
//! Coordinates range over polynomials of total degree at most `D`. Because
//! squaring is additive in characteristic 2,
//! `b(v, v) = sum_i sum_{m in v_i} c_i m^2`, so each candidate vector is a
//! subset of the `k * M` products `c_i m^2` (`M` monomials of degree <= D)
//! and the form vanishes exactly when the chosen products XOR to zero.
//! Subsets are walked in Gray-code order, one XOR per step.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bilforms::DiagonalForm;
use crate::fieldcore::{eval_bilinear, poly_gcd, Monomial, MultiPoly, RatFunc, F2};
use crate::par::Exec;

/// Default cap on the number of candidate vectors.
pub const DEFAULT_CEILING: u64 = 1 << 28;

const CHUNK_BITS: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search space of 2^{bits} - 1 vectors exceeds the ceiling of {ceiling}")]
    CeilingExceeded { bits: u32, ceiling: u64 },
    #[error("empty form")]
    EmptyForm,
}

/// Monomials in `n` variables of total degree <= `bound`, ascending.
pub fn monomials_up_to(n: usize, bound: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == n {
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, bound, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

struct SearchSpace {
    /// `vectors[i * M + j]` is `c_i m_j^2` as a bitset over `support`.
    vectors: Vec<Vec<u64>>,
    words: usize,
    bits: u32,
}

impl SearchSpace {
    fn state(&self, step: u64) -> Vec<u64> {
        let gray = step ^ (step >> 1);
        let mut acc = vec![0u64; self.words];
        for j in 0..self.bits {
            if (gray >> j) & 1 == 1 {
                for (a, b) in acc.iter_mut().zip(&self.vectors[j as usize]) {
                    *a ^= b;
                }
            }
        }
        acc
    }

    /// First step in `[start, end)` whose Gray-code subset XORs to zero.
    fn scan(&self, start: u64, end: u64) -> Option<u64> {
        let mut acc = self.state(start - 1);
        for step in start..end {
            let flip = step.trailing_zeros() as usize;
            for (a, b) in acc.iter_mut().zip(&self.vectors[flip]) {
                *a ^= b;
            }
            if acc.iter().all(|&w| w == 0) {
                return Some(step);
            }
        }
        None
    }
}

/// Scales the entries by a common denominator so that they are
/// polynomials; isotropy vectors are unchanged by the scaling.
fn cleared_entries(f: &DiagonalForm<F2>) -> Vec<MultiPoly<F2>> {
    let n = f.entries()[0].nvars();
    let mut lcm = MultiPoly::one(n);
    for e in f.entries() {
        let g = poly_gcd(&lcm, e.denom());
        lcm = lcm.mul(&e.denom().div_exact(&g).expect("gcd divides"));
    }
    f.entries()
        .iter()
        .map(|e| {
            e.numer()
                .mul(&lcm.div_exact(e.denom()).expect("denominator divides lcm"))
        })
        .collect()
}

/// Returns the first nonzero `v` (in Gray-code enumeration order) with
/// polynomial coordinates of total degree <= `degree_bound` and
/// `b(v, v) = 0`. `None` does not prove anisotropy.
pub fn brute_isotropy_search(
    f: &DiagonalForm<F2>,
    degree_bound: u32,
    ceiling: u64,
    exec: Exec,
) -> Result<Option<Vec<RatFunc<F2>>>, OracleError> {
    if f.is_empty() {
        return Err(OracleError::EmptyForm);
    }
    let n = f.entries()[0].nvars();
    let monos = monomials_up_to(n, degree_bound);
    let k = f.len();
    let bits = (monos.len() * k) as u32;
    if bits >= 64 || (1u64 << bits) - 1 > ceiling {
        return Err(OracleError::CeilingExceeded { bits, ceiling });
    }

    let entries = cleared_entries(f);
    let products: Vec<MultiPoly<F2>> = entries
        .iter()
        .flat_map(|c| monos.iter().map(move |m| c.mul_term(&m.pow(2), &F2(true))))
        .collect();
    let mut support: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for p in &products {
        for (m, _) in p.terms() {
            let next = support.len();
            support.entry(m).or_insert(next);
        }
    }
    let words = support.len().div_ceil(64).max(1);
    let vectors = products
        .iter()
        .map(|p| {
            let mut v = vec![0u64; words];
            for (m, _) in p.terms() {
                let idx = support[m];
                v[idx / 64] |= 1 << (idx % 64);
            }
            v
        })
        .collect();
    let space = SearchSpace {
        vectors,
        words,
        bits,
    };

    let total = 1u64 << bits;
    let chunk = 1u64 << CHUNK_BITS.min(bits);
    let nchunks = total.div_ceil(chunk) as usize;
    let hit = exec.find_first(nchunks, |c| {
        let start = (c as u64 * chunk).max(1);
        let end = ((c as u64 + 1) * chunk).min(total);
        space.scan(start, end)
    });
    let Some((_, step)) = hit else {
        return Ok(None);
    };

    let gray = step ^ (step >> 1);
    let m = monos.len();
    let v: Vec<RatFunc<F2>> = (0..k)
        .map(|i| {
            let terms = (0..m)
                .filter(|&j| (gray >> (i * m + j)) & 1 == 1)
                .map(|j| (monos[j].clone(), F2(true)));
            RatFunc::from_poly(MultiPoly::from_terms(n, terms))
        })
        .collect();
    let value = eval_bilinear(f.entries(), &v).expect("lengths agree");
    assert!(value.is_zero(), "oracle witness failed to verify");
    Ok(Some(v))
}
