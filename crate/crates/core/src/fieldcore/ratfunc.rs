use std::fmt;

use super::gcd::poly_gcd;
use super::poly::MultiPoly;
use super::scalar::Coeff;
use super::FieldError;

/// Element of `K(x1, ..., xn)` held in canonical form.
///
/// Numerator and denominator are coprime, the denominator is the canonical
/// associate of its class (monic over F2; primitive integral with positive
/// leading coefficient over Q), and zero is `0/1`. Structural equality is
/// therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RatFunc<C: Coeff> {
    num: MultiPoly<C>,
    den: MultiPoly<C>,
}

impl<C: Coeff> RatFunc<C> {
    pub fn new(num: MultiPoly<C>, den: MultiPoly<C>) -> Result<Self, FieldError> {
        if num.nvars() != den.nvars() {
            return Err(FieldError::ArityMismatch(num.nvars(), den.nvars()));
        }
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: MultiPoly<C>, den: MultiPoly<C>) -> Self {
        let n = num.nvars();
        if num.is_zero() {
            return RatFunc {
                num,
                den: MultiPoly::one(n),
            };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let u = C::normalizing_unit(den.terms().iter().map(|(_, c)| c));
        if u.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.scale(&u),
                den: den.scale(&u),
            }
        }
    }

    pub fn from_poly(p: MultiPoly<C>) -> Self {
        let n = p.nvars();
        RatFunc {
            num: p,
            den: MultiPoly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::one(nvars))
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::from_poly(MultiPoly::var(nvars, index))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numer(&self) -> &MultiPoly<C> {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn check(&self, rhs: &Self) -> Result<(), FieldError> {
        if self.nvars() != rhs.nvars() {
            Err(FieldError::ArityMismatch(self.nvars(), rhs.nvars()))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.check(rhs)?;
        Ok(self.add(rhs))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.check(rhs)?;
        Ok(self.sub(rhs))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.check(rhs)?;
        Ok(self.mul(rhs))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.check(rhs)?;
        self.div(rhs)
    }

    /// Panics on arity mismatch; see [`RatFunc::try_add`].
    pub fn add(&self, rhs: &Self) -> Self {
        self.add_signed(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add_signed(rhs, true)
    }

    fn add_signed(&self, rhs: &Self, negate: bool) -> Self {
        let combine = |a: &MultiPoly<C>, b: &MultiPoly<C>| if negate { a.sub(b) } else { a.add(b) };
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { rhs.neg() } else { rhs.clone() };
        }
        if self.den == rhs.den {
            return Self::normalize(combine(&self.num, &rhs.num), self.den.clone());
        }
        let num = combine(&self.num.mul(&rhs.den), &rhs.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&rhs.den))
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.nvars());
        }
        // Cross-cancel before multiplying; both inputs are already reduced.
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = rhs.den.div_exact(&g1).expect("gcd divides");
        let c = rhs.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        let num = a.mul(&c);
        let den = b.mul(&d);
        let u = C::normalizing_unit(den.terms().iter().map(|(_, c)| c));
        RatFunc {
            num: num.scale(&u),
            den: den.scale(&u),
        }
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn square(&self) -> Self {
        RatFunc {
            num: self.num.mul(&self.num),
            den: self.den.mul(&self.den),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        RatFunc {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone())
    }

    /// Equality by cross-multiplication; agrees with `==` on canonical
    /// values.
    pub fn cross_eq(&self, rhs: &Self) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Result<RatFunc<D>, FieldError> {
        RatFunc::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }

    /// Re-runs canonicalization on an already canonical value.
    pub fn renormalized(&self) -> Self {
        Self::normalize(self.num.clone(), self.den.clone())
    }
}

impl<C: Coeff> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Products and quotients associate to the left, so only a
        // multi-term numerator needs parentheses.
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.is_atomic_factor() {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

/// `b(v, v) = sum c_i v_i^2` for the diagonal form with the given entries.
pub fn eval_bilinear<C: Coeff>(
    entries: &[RatFunc<C>],
    v: &[RatFunc<C>],
) -> Result<RatFunc<C>, FieldError> {
    if entries.len() != v.len() {
        return Err(FieldError::LengthMismatch(entries.len(), v.len()));
    }
    let Some(first) = entries.first() else {
        return Err(FieldError::LengthMismatch(0, 0));
    };
    let mut acc = RatFunc::zero(first.nvars());
    for (c, x) in entries.iter().zip(v) {
        acc = acc.try_add(&c.try_mul(&x.square())?)?;
    }
    Ok(acc)
}
