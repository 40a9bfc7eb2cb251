use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Scalar domain tag, used where the domain has to be named at runtime
/// (certificates, CLI dispatch).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    #[serde(rename = "RAT")]
    Rat,
    #[serde(rename = "F2")]
    F2,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rat => f.write_str("RAT"),
            Domain::F2 => f.write_str("F2"),
        }
    }
}

/// Exact coefficient field underneath polynomials and rational functions.
///
/// Only the rationals and the two-element field are implemented, but every
/// algorithm above this layer is written against the trait.
pub trait Coeff:
    Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const DOMAIN: Domain;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn from_bigint(v: &BigInt) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// The unit `u` such that `u * p` is the canonical associate of the
    /// polynomial whose coefficients are `coeffs`, given leading first.
    fn normalizing_unit<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        Self: 'a;

    /// True when the display form needs no parentheses as a coefficient
    /// prefix (`3*x1` rather than `(1/2)*x1`).
    fn is_integral(&self) -> bool;
    fn is_negative(&self) -> bool;
}

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Q(pub BigRational);

impl Q {
    pub fn new(num: i64, den: i64) -> Self {
        Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_i64(v: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Coeff for Q {
    const DOMAIN: Domain = Domain::Rat;

    fn zero() -> Self {
        Q(BigRational::zero())
    }
    fn one() -> Self {
        Q(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn from_bigint(v: &BigInt) -> Self {
        Q(BigRational::from_integer(v.clone()))
    }
    fn add(&self, rhs: &Self) -> Self {
        Q(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Q(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Q(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Q(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Q(self.0.recip()))
        }
    }

    // Canonical associate: integer coefficients with gcd 1 and positive
    // leading coefficient.
    fn normalizing_unit<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut iter = coeffs.into_iter();
        let Some(lead) = iter.next() else {
            return Q::one();
        };
        let mut num_gcd = lead.numer().abs();
        let mut den_lcm = lead.denom().clone();
        for c in iter {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Q::one();
        }
        let mut unit = BigRational::new(den_lcm, num_gcd);
        if lead.0.is_negative() {
            unit = -unit;
        }
        Q(unit)
    }

    fn is_integral(&self) -> bool {
        self.0.is_integer()
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

/// Element of the two-element field.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct F2(pub bool);

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Coeff for F2 {
    const DOMAIN: Domain = Domain::F2;

    fn zero() -> Self {
        F2(false)
    }
    fn one() -> Self {
        F2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn is_one(&self) -> bool {
        self.0
    }
    fn from_bigint(v: &BigInt) -> Self {
        F2(v.is_odd())
    }
    fn add(&self, rhs: &Self) -> Self {
        F2(self.0 ^ rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        F2(self.0 ^ rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        F2(self.0 & rhs.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn inv(&self) -> Option<Self> {
        self.0.then_some(*self)
    }
    fn normalizing_unit<'a, I>(_coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        F2(true)
    }
    fn is_integral(&self) -> bool {
        true
    }
    fn is_negative(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normalizing_unit() {
        let coeffs = [Q::new(-1, 2), Q::new(3, 4)];
        let u = Q::normalizing_unit(coeffs.iter());
        let scaled: Vec<_> = coeffs.iter().map(|c| c.mul(&u)).collect();
        assert_eq!(scaled, vec![Q::from_i64(2), Q::from_i64(-3)]);
    }

    #[test]
    fn f2_arithmetic() {
        let one = F2::one();
        assert!(one.add(&one).is_zero());
        assert_eq!(F2::from_bigint(&BigInt::from(3)), one);
        assert_eq!(F2::from_bigint(&BigInt::from(-4)), F2::zero());
        assert!(F2::zero().inv().is_none());
    }
}
