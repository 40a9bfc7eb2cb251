use std::collections::BTreeMap;
use std::fmt;

use super::monomial::Monomial;
use super::scalar::Coeff;

/// Sparse multivariate polynomial in `x1, ..., xn`.
///
/// Terms are kept sorted by descending graded-lex monomial order and no zero
/// coefficient is ever stored, so structural equality is mathematical
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultiPoly<C: Coeff> {
    nvars: usize,
    terms: Vec<(Monomial, C)>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MultiPoly {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        Self::monomial(Monomial::var(nvars, index), C::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            match acc.get_mut(&m) {
                Some(slot) => *slot = slot.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_sorted_map(nvars, acc)
    }

    fn from_sorted_map(nvars: usize, acc: BTreeMap<Monomial, C>) -> Self {
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Constant polynomials, including zero.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> C {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree in `x_{var+1}`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exponents()[var]).max()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    fn check_arity(&self, rhs: &Self) {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        self.check_arity(rhs);
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let rhs_coeff = |c: &C| if negate_rhs { c.neg() } else { c.clone() };
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), rhs_coeff(cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_rhs { ca.sub(cb) } else { ca.add(cb) };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            rhs.terms[j..]
                .iter()
                .map(|(m, c)| (m.clone(), rhs_coeff(c))),
        );
        MultiPoly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_arity(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.nvars);
        }
        if rhs.is_monomial() {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.is_monomial() {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(slot) => *slot = slot.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_sorted_map(self.nvars, acc)
    }

    /// Multiplication by a single term; monomial multiplication preserves
    /// the term order.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, d)| (t.mul(m), d.mul(c)))
                .filter(|(_, d)| !d.is_zero())
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::one(self.nvars), c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multivariate division by a single divisor: `self = q * divisor + r`
    /// where no term of `r` is divisible by the leading monomial of
    /// `divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        self.check_arity(divisor);
        let (lm, lc) = divisor.leading_term()?;
        let lc_inv = lc.inv().expect("nonzero leading coefficient");
        let mut quotient = Vec::new();
        let mut remainder = Vec::new();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            match m.div(lm) {
                Some(qm) => {
                    let qc = c.mul(&lc_inv);
                    p = p.sub(&divisor.mul_term(&qm, &qc));
                    quotient.push((qm, qc));
                }
                None => {
                    p.terms.remove(0);
                    remainder.push((m, c));
                }
            }
        }
        Some((
            MultiPoly {
                nvars: self.nvars,
                terms: quotient,
            },
            MultiPoly {
                nvars: self.nvars,
                terms: remainder,
            },
        ))
    }

    /// `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_one() {
            return Some(self.clone());
        }
        if let Some(c) = divisor.constant_value() {
            return c.inv().map(|ci| self.scale(&ci));
        }
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Canonical associate (see [`Coeff::normalizing_unit`]).
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let u = C::normalizing_unit(self.terms.iter().map(|(_, c)| c));
        if u.is_one() {
            self.clone()
        } else {
            self.scale(&u)
        }
    }

    /// Coefficients with respect to `x_{var+1}`: entry `k` is the
    /// coefficient of `x_{var+1}^k`, with that variable removed.
    pub fn to_univariate(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut stripped = m.clone();
            let e = std::mem::replace(&mut stripped.exps_mut()[var], 0);
            buckets[e as usize].push((stripped, c.clone()));
        }
        buckets
            .into_iter()
            .map(|ts| Self::from_terms(self.nvars, ts))
            .collect()
    }

    pub fn from_univariate(var: usize, nvars: usize, coeffs: &[Self]) -> Self {
        let mut acc = Self::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut m = Monomial::one(nvars);
            m.exps_mut()[var] = k as u32;
            acc = acc.add(&c.mul_term(&m, &C::one()));
        }
        acc
    }

    /// Monomial gcd of all terms (the largest monomial dividing `self`).
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.iter();
        let Some((first, _)) = iter.next() else {
            return Monomial::one(self.nvars);
        };
        iter.fold(first.clone(), |acc, (m, _)| acc.gcd(m))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    /// Variables that occur with positive degree.
    pub fn support_vars(&self) -> Vec<bool> {
        let mut used = vec![false; self.nvars];
        for (m, _) in &self.terms {
            for (u, &e) in used.iter_mut().zip(m.exponents()) {
                *u |= e > 0;
            }
        }
        used
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars);
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// True when the canonical display parses as a single factor: a
    /// nonnegative integer or a power of one variable.
    pub(crate) fn is_atomic_factor(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(m, c)] if m.is_one() => !c.is_negative() && c.is_integral(),
            [(m, c)] => c.is_one() && m.exponents().iter().filter(|&&e| e > 0).count() == 1,
            _ => false,
        }
    }
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::scalar::{F2, Q};

    fn x<C: Coeff>(n: usize, i: usize) -> MultiPoly<C> {
        MultiPoly::var(n, i)
    }

    #[test]
    fn display_is_graded_lex_descending() {
        let x1 = x::<Q>(2, 0);
        let x2 = x::<Q>(2, 1);
        let p = x1.mul(&x1).mul(&x2).add(&MultiPoly::one(2));
        assert_eq!(p.to_string(), "x1^2*x2 + 1");
        let q = x1.scale(&Q::new(1, 2)).sub(&x2.scale(&Q::from_i64(3)));
        assert_eq!(q.to_string(), "1/2*x1 - 3*x2");
        assert_eq!(MultiPoly::<Q>::zero(2).to_string(), "0");
    }

    #[test]
    fn f2_square_is_frobenius() {
        let s = x::<F2>(2, 0).add(&x::<F2>(2, 1));
        let sq = s.mul(&s);
        assert_eq!(sq.to_string(), "x1^2 + x2^2");
    }

    #[test]
    fn exact_division() {
        let x1 = x::<Q>(2, 0);
        let one = MultiPoly::<Q>::one(2);
        let p = x1.mul(&x1).sub(&one);
        let d = x1.add(&one);
        assert_eq!(p.div_exact(&d), Some(x1.sub(&one)));
        assert_eq!(p.div_exact(&x::<Q>(2, 1)), None);
    }

    #[test]
    fn univariate_roundtrip() {
        let x1 = x::<Q>(3, 0);
        let x3 = x::<Q>(3, 2);
        let p = x1.mul(&x3).mul(&x3).add(&x3).add(&x1);
        let coeffs = p.to_univariate(2);
        assert_eq!(coeffs.len(), 3);
        assert_eq!(MultiPoly::from_univariate(2, 3, &coeffs), p);
    }
}
