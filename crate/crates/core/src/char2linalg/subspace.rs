use crate::fieldcore::{RatFunc, F2};
use crate::par::Exec;

use super::bitvec::BitVector;
use super::elim::{rref, rref_of_columns, solve};
use super::frob::{frob_coords, FrobCoords};
use super::LinalgError;

/// An `F^2`-subspace of `F = F2(x1..xn)`, held as the reduced row echelon
/// basis of the square-rooted coordinate vectors of its elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    n: usize,
    rows: Vec<FrobCoords>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[FrobCoords] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as field elements.
    pub fn basis_elements(&self) -> Vec<RatFunc<F2>> {
        self.rows.iter().map(FrobCoords::reconstruct).collect()
    }

    /// `A + B`.
    pub fn sum(&self, rhs: &Subspace) -> Subspace {
        assert_eq!(self.n, rhs.n);
        let all: Vec<FrobCoords> = self.rows.iter().chain(&rhs.rows).cloned().collect();
        span(self.n, &all)
    }
}

/// Reduced row echelon basis of the span of `vectors`.
pub fn span(n: usize, vectors: &[FrobCoords]) -> Subspace {
    let rows: Vec<Vec<RatFunc<F2>>> = vectors
        .iter()
        .map(|v| {
            assert_eq!(v.n(), n, "coordinate vectors of mixed n");
            v.coords().to_vec()
        })
        .collect();
    let r = rref(n, 1 << n, &rows);
    Subspace {
        n,
        rows: r
            .rows
            .into_iter()
            .map(|row| FrobCoords::from_vec(n, row))
            .collect(),
        pivots: r.pivots,
    }
}

/// Span of field elements.
pub fn span_of_elements(n: usize, elements: &[RatFunc<F2>], exec: Exec) -> Subspace {
    span(n, &exec.map(elements, frob_coords))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `f = sum_r mu_r^2 b_r` over the basis `b_r` of the subspace; the
    /// square roots `mu_r` are stored.
    Member {
        combination: Vec<RatFunc<F2>>,
    },
    NotMember,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

pub fn member(f: &RatFunc<F2>, s: &Subspace) -> Membership {
    assert_eq!(f.nvars(), s.n, "element and subspace have different n");
    let target = frob_coords(f);
    let combination: Vec<RatFunc<F2>> = s
        .pivots
        .iter()
        .map(|&p| target.coords()[p].clone())
        .collect();
    let mut residual = target;
    for (mu, row) in combination.iter().zip(&s.rows) {
        if mu.is_zero() {
            continue;
        }
        let scaled = row.coords().iter().map(|c| c.mul(mu)).collect();
        residual = residual.add(&FrobCoords::from_vec(s.n, scaled));
    }
    if residual.is_zero() {
        Membership::Member { combination }
    } else {
        Membership::NotMember
    }
}

/// Replays a membership combination: `sum mu_r^2 b_r == f`.
pub fn verify_combination(f: &RatFunc<F2>, s: &Subspace, combination: &[RatFunc<F2>]) -> bool {
    if combination.len() != s.dim() {
        return false;
    }
    let mut acc = RatFunc::zero(s.n);
    for (mu, b) in combination.iter().zip(s.basis_elements()) {
        acc = acc.add(&mu.square().mul(&b));
    }
    acc == *f
}

/// `A ∩ B` by the kernel of `[A^T | B^T]`.
pub fn intersect(a: &Subspace, b: &Subspace) -> Subspace {
    assert_eq!(a.n, b.n, "subspaces of different n");
    let n = a.n;
    if a.is_zero() || b.is_zero() {
        return Subspace::zero(n);
    }
    if a == b {
        return a.clone();
    }
    let dim = 1usize << n;
    let columns: Vec<Vec<RatFunc<F2>>> = a
        .rows
        .iter()
        .chain(&b.rows)
        .map(|r| r.coords().to_vec())
        .collect();
    let kernel = rref_of_columns(n, dim, &columns).kernel(n);
    let p = a.dim();
    let vectors: Vec<FrobCoords> = kernel
        .iter()
        .map(|lambda| {
            let mut acc = vec![RatFunc::zero(n); dim];
            for (l, row) in lambda[..p].iter().zip(&a.rows) {
                if l.is_zero() {
                    continue;
                }
                for (x, c) in acc.iter_mut().zip(row.coords()) {
                    *x = x.add(&l.mul(c));
                }
            }
            FrobCoords::from_vec(n, acc)
        })
        .collect();
    span(n, &vectors)
}

/// Representation of `target` in the `F^2`-span of `generators`:
/// square roots `t_i` with `sum t_i^2 g_i = target`.
pub fn represent(
    n: usize,
    generators: &[RatFunc<F2>],
    target: &RatFunc<F2>,
    exec: Exec,
) -> Option<Vec<RatFunc<F2>>> {
    let columns: Vec<Vec<RatFunc<F2>>> = exec.map(generators, |g| frob_coords(g).into_vec());
    solve(n, 1 << n, &columns, frob_coords(target).coords())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoIndependence {
    /// All `2^m` subset products are `F^2`-independent.
    Independent,
    /// A nontrivial relation `sum_d lambda_d^2 alpha^d = 0`, listing the
    /// nonzero square roots `lambda_d`.
    Dependent {
        relation: Vec<(BitVector, RatFunc<F2>)>,
    },
}

impl TwoIndependence {
    pub fn is_independent(&self) -> bool {
        matches!(self, TwoIndependence::Independent)
    }
}

/// `alpha^d = prod alpha_i^{d_i}` for every `d` in `{0,1}^m`, in
/// [`BitVector`] order.
pub fn subset_products(alphas: &[RatFunc<F2>]) -> Vec<RatFunc<F2>> {
    let n = alphas[0].nvars();
    let m = alphas.len();
    let mut out: Vec<RatFunc<F2>> = Vec::with_capacity(1 << m);
    out.push(RatFunc::one(n));
    // out[d | 2^i] = out[d] * alpha_{i+1} for d < 2^i
    for a in alphas {
        let prev = out.len();
        for j in 0..prev {
            let next = out[j].mul(a);
            out.push(next);
        }
    }
    out
}

pub fn two_independent(alphas: &[RatFunc<F2>], exec: Exec) -> Result<TwoIndependence, LinalgError> {
    let Some(first) = alphas.first() else {
        return Err(LinalgError::Empty);
    };
    let n = first.nvars();
    if let Some(i) = alphas.iter().position(RatFunc::is_zero) {
        return Err(LinalgError::ZeroElement(i));
    }
    if alphas.iter().any(|a| a.nvars() != n) {
        return Err(LinalgError::ArityMismatch);
    }
    let m = alphas.len();
    let products = subset_products(alphas);
    let columns: Vec<Vec<RatFunc<F2>>> = exec.map(&products, |p| frob_coords(p).into_vec());
    let kernel = rref_of_columns(n, 1 << n, &columns).kernel(n);
    match kernel.into_iter().next() {
        None => Ok(TwoIndependence::Independent),
        Some(v) => {
            let relation = v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (BitVector::new(m, i as u32), c))
                .collect();
            Ok(TwoIndependence::Dependent { relation })
        }
    }
}

/// `sum_d lambda_d^2 alpha^d == 0` with at least one nonzero `lambda_d`.
pub fn verify_relation(alphas: &[RatFunc<F2>], relation: &[(BitVector, RatFunc<F2>)]) -> bool {
    if relation.iter().all(|(_, c)| c.is_zero()) || alphas.is_empty() {
        return false;
    }
    let products = subset_products(alphas);
    let acc = relation
        .iter()
        .fold(RatFunc::zero(alphas[0].nvars()), |acc, (d, l)| {
            acc.add(&l.square().mul(&products[d.index()]))
        });
    acc.is_zero()
}
