use crate::fieldcore::{Monomial, MultiPoly, RatFunc, F2};

use super::bitvec::BitVector;

/// Coordinates of `f` in `F = F2(x1..xn)` over the subfield of squares:
/// the unique `c_e` with `f = sum_e c_e^2 x^e`, `e` ranging over
/// `{0,1}^n` in [`BitVector`] order.
///
/// Storing square roots rather than the coefficients `c_e^2` themselves
/// makes `F^2`-linear algebra on these vectors ordinary `F`-linear algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FrobCoords {
    n: usize,
    coords: Vec<RatFunc<F2>>,
}

impl FrobCoords {
    pub fn from_vec(n: usize, coords: Vec<RatFunc<F2>>) -> Self {
        assert_eq!(coords.len(), 1 << n, "expected 2^n coordinates");
        FrobCoords { n, coords }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_vec(n, vec![RatFunc::zero(n); 1 << n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[RatFunc<F2>] {
        &self.coords
    }

    pub fn into_vec(self) -> Vec<RatFunc<F2>> {
        self.coords
    }

    pub fn get(&self, e: BitVector) -> &RatFunc<F2> {
        &self.coords[e.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RatFunc::is_zero)
    }

    /// `sum_e c_e^2 x^e`.
    pub fn reconstruct(&self) -> RatFunc<F2> {
        let mut acc = RatFunc::zero(self.n);
        for e in BitVector::all(self.n) {
            let c = &self.coords[e.index()];
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&c.square().mul(&basis_monomial(e)));
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        FrobCoords {
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

/// `x^e` as an element of `F`.
pub fn basis_monomial(e: BitVector) -> RatFunc<F2> {
    let exps: Vec<u32> = (0..e.len()).map(|i| u32::from(e.get(i))).collect();
    RatFunc::from_poly(MultiPoly::monomial(
        Monomial::from_exponents(&exps),
        F2(true),
    ))
}

/// Splits `f = p/q` as `p q / q^2`, sorts the terms of `p q` by exponent
/// parity, halves the exponents and divides by `q`.
pub fn frob_coords(f: &RatFunc<F2>) -> FrobCoords {
    let n = f.nvars();
    let q = f.denom();
    let pq = f.numer().mul(q);
    let mut buckets: Vec<Vec<(Monomial, F2)>> = vec![Vec::new(); 1 << n];
    for (m, c) in pq.terms() {
        let exps = m.exponents();
        let parity = exps
            .iter()
            .enumerate()
            .fold(0usize, |acc, (i, &e)| acc | (((e & 1) as usize) << i));
        let halved: Vec<u32> = exps.iter().map(|&e| e >> 1).collect();
        buckets[parity].push((Monomial::from_exponents(&halved), *c));
    }
    let coords = buckets
        .into_iter()
        .map(|terms| {
            let root = MultiPoly::from_terms(n, terms);
            RatFunc::new(root, q.clone()).expect("denominator nonzero")
        })
        .collect();
    FrobCoords { n, coords }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> RatFunc<F2> {
        RatFunc::var(2, i)
    }

    fn show(c: &FrobCoords) -> Vec<String> {
        c.coords().iter().map(|e| e.to_string()).collect()
    }

    #[test]
    fn coordinates_of_small_elements() {
        let one = RatFunc::<F2>::one(2);
        assert_eq!(show(&frob_coords(&x(0))), ["0", "1", "0", "0"]);
        assert_eq!(
            show(&frob_coords(&one.add(&x(0).mul(&x(1))))),
            ["1", "0", "0", "1"]
        );
        assert_eq!(show(&frob_coords(&x(0).pow(3))), ["0", "x1", "0", "0"]);
        let inv = one.div(&x(1)).unwrap();
        assert_eq!(show(&frob_coords(&inv)), ["0", "0", "1/x2", "0"]);
    }

    #[test]
    fn reconstruction_of_a_fraction() {
        let one = RatFunc::<F2>::one(2);
        let f = x(0)
            .add(&one)
            .div(&x(0).mul(&x(1)).add(&x(1).pow(3)))
            .unwrap();
        assert_eq!(frob_coords(&f).reconstruct(), f);
    }
}
