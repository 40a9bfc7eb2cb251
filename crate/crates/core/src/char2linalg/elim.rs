//! Exact Gaussian elimination over `K(x1, ..., xn)`.
//!
//! Rows are first cleared of denominators and reduced fraction-free over
//! `K[x1, ..., xn]`, dividing every updated row by its content; only the
//! final back-substitution into reduced row echelon form happens in the
//! fraction field.

use crate::fieldcore::{poly_gcd, poly_gcd_many, Coeff, MultiPoly, RatFunc};

/// Reduced row echelon form: nonzero rows, strictly increasing pivot
/// columns, pivots equal to one, zeros above and below every pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<C: Coeff> {
    pub ncols: usize,
    pub rows: Vec<Vec<RatFunc<C>>>,
    pub pivots: Vec<usize>,
}

impl<C: Coeff> Rref<C> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free
    /// column, in increasing column order.
    pub fn kernel(&self, nvars: usize) -> Vec<Vec<RatFunc<C>>> {
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![RatFunc::zero(nvars); self.ncols];
                v[f] = RatFunc::one(nvars);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = row[f].neg();
                }
                v
            })
            .collect()
    }
}

fn clear_denominators<C: Coeff>(nvars: usize, row: &[RatFunc<C>]) -> Vec<MultiPoly<C>> {
    let mut lcm = MultiPoly::one(nvars);
    for e in row {
        if e.is_zero() || e.denom().is_one() {
            continue;
        }
        let g = poly_gcd(&lcm, e.denom());
        lcm = lcm.mul(&e.denom().div_exact(&g).expect("gcd divides"));
    }
    row.iter()
        .map(|e| {
            if e.is_zero() {
                MultiPoly::zero(nvars)
            } else {
                e.numer()
                    .mul(&lcm.div_exact(e.denom()).expect("denominator divides lcm"))
            }
        })
        .collect()
}

fn make_primitive<C: Coeff>(nvars: usize, row: &mut [MultiPoly<C>]) {
    let content = poly_gcd_many(nvars, row.iter().filter(|p| !p.is_zero()));
    if content.is_zero() || content.is_one() {
        return;
    }
    for p in row.iter_mut() {
        *p = p.div_exact(&content).expect("content divides");
    }
}

fn pivot_cost<C: Coeff>(p: &MultiPoly<C>) -> (u32, usize) {
    (p.total_degree().unwrap_or(0), p.num_terms())
}

/// Row reduction of a `rows.len() x ncols` matrix.
pub fn rref<C: Coeff>(nvars: usize, ncols: usize, rows: &[Vec<RatFunc<C>>]) -> Rref<C> {
    let mut work: Vec<Vec<MultiPoly<C>>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            let mut p = clear_denominators(nvars, r);
            make_primitive(nvars, &mut p);
            p
        })
        .filter(|r| r.iter().any(|p| !p.is_zero()))
        .collect();

    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == work.len() {
            break;
        }
        let best = (top..work.len())
            .filter(|&i| !work[i][col].is_zero())
            .min_by_key(|&i| (pivot_cost(&work[i][col]), i));
        let Some(best) = best else { continue };
        work.swap(top, best);
        let (head, tail) = work.split_at_mut(top + 1);
        let pivot_row = &head[top];
        let a = &pivot_row[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let b = row[col].clone();
            let g = poly_gcd(a, &b);
            let a_g = a.div_exact(&g).expect("gcd divides");
            let b_g = b.div_exact(&g).expect("gcd divides");
            for (x, y) in row.iter_mut().zip(pivot_row) {
                *x = x.mul(&a_g).sub(&y.mul(&b_g));
            }
            debug_assert!(row[col].is_zero());
            make_primitive(nvars, row);
        }
        pivots.push(col);
        top += 1;
        work.retain(|r| r.iter().any(|p| !p.is_zero()));
    }
    work.truncate(pivots.len());

    // Back-substitution in the fraction field.
    let mut out: Vec<Vec<RatFunc<C>>> = work
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let pivot = RatFunc::from_poly(row[p].clone());
            let inv = pivot.inv().expect("pivot nonzero");
            row.into_iter()
                .map(|e| RatFunc::from_poly(e).mul(&inv))
                .collect()
        })
        .collect();
    for i in (0..out.len()).rev() {
        let p = pivots[i];
        let (above, rest) = out.split_at_mut(i);
        let pivot_row = &rest[0];
        for row in above.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, y) in row.iter_mut().zip(pivot_row) {
                if !y.is_zero() {
                    *x = x.sub(&factor.mul(y));
                }
            }
        }
    }
    Rref {
        ncols,
        rows: out,
        pivots,
    }
}

/// Columns-as-vectors convenience: reduces the matrix whose columns are
/// `columns`.
pub fn rref_of_columns<C: Coeff>(nvars: usize, dim: usize, columns: &[Vec<RatFunc<C>>]) -> Rref<C> {
    let rows: Vec<Vec<RatFunc<C>>> = (0..dim)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    rref(nvars, columns.len(), &rows)
}

/// Solves `sum mu_i columns[i] = target`; `None` when inconsistent. Free
/// variables are set to zero.
pub fn solve<C: Coeff>(
    nvars: usize,
    dim: usize,
    columns: &[Vec<RatFunc<C>>],
    target: &[RatFunc<C>],
) -> Option<Vec<RatFunc<C>>> {
    let k = columns.len();
    let mut augmented = columns.to_vec();
    augmented.push(target.to_vec());
    let r = rref_of_columns(nvars, dim, &augmented);
    if r.pivots.contains(&k) {
        return None;
    }
    let mut mu = vec![RatFunc::zero(nvars); k];
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        mu[p] = row[k].clone();
    }
    Some(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::Q;

    fn x(i: usize) -> RatFunc<Q> {
        RatFunc::var(2, i)
    }

    #[test]
    fn rank_and_kernel_of_dependent_rows() {
        let one = RatFunc::<Q>::one(2);
        let rows = vec![
            vec![x(0), one.clone(), x(1)],
            vec![x(0).mul(&x(1)), x(1), x(1).mul(&x(1))],
        ];
        let r = rref(2, 3, &rows);
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots, vec![0]);
        assert!(r.rows[0][0].is_one());
        let ker = r.kernel(2);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &rows {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(RatFunc::zero(2), |acc, (a, b)| acc.add(&a.mul(b)));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let one = RatFunc::<Q>::one(2);
        let zero = RatFunc::<Q>::zero(2);
        let cols = vec![vec![one.clone(), zero.clone()], vec![x(0), zero.clone()]];
        let sol = solve(2, 2, &cols, &[x(1), zero.clone()]).unwrap();
        assert_eq!(sol, vec![x(1), zero.clone()]);
        assert!(solve(2, 2, &cols, &[zero.clone(), one.clone()]).is_none());
    }

    #[test]
    fn rational_entries_full_rank() {
        let one = RatFunc::<Q>::one(2);
        let a = one.div(&x(0)).unwrap();
        let rows = vec![vec![a.clone(), one.clone()], vec![one.clone(), x(1)]];
        let r = rref(2, 2, &rows);
        assert_eq!(r.rank(), 2);
        assert!(r.rows[0][1].is_zero() && r.rows[1][0].is_zero());
    }
}
