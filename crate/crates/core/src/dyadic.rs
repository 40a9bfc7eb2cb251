//! The 2-adic Gauss valuation on `Q(x1..xn)` and its residue map onto
//! `F2(x1..xn)`.
//!
//! `v(p)` for a polynomial is the least 2-adic valuation of its
//! coefficients, `v(p/q) = v(p) - v(q)`, and every `x_i` has value 0 with
//! residue `x_i`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::bilforms::DiagonalForm;
use crate::fieldcore::{Coeff, MultiPoly, RatFunc, F2, Q};

/// A valuation value: an integer, or `+inf` for zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum GaussValue {
    Finite(i64),
    Infinity,
}

impl GaussValue {
    pub fn finite(self) -> Option<i64> {
        match self {
            GaussValue::Finite(v) => Some(v),
            GaussValue::Infinity => None,
        }
    }
}

impl Ord for GaussValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (GaussValue::Finite(a), GaussValue::Finite(b)) => a.cmp(b),
            (GaussValue::Finite(_), GaussValue::Infinity) => Ordering::Less,
            (GaussValue::Infinity, GaussValue::Finite(_)) => Ordering::Greater,
            (GaussValue::Infinity, GaussValue::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for GaussValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for GaussValue {
    type Output = GaussValue;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (GaussValue::Finite(a), GaussValue::Finite(b)) => GaussValue::Finite(a + b),
            _ => GaussValue::Infinity,
        }
    }
}

impl fmt::Display for GaussValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaussValue::Finite(v) => write!(f, "{v}"),
            GaussValue::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("element has value {value}, residue needs value 0")]
    NonzeroValue { value: i64 },
    #[error("entry {index} has value {value}, residue needs value 0")]
    EntryValue { index: usize, value: GaussValue },
    #[error("entry {index} has residue 0 (degenerate residue form)")]
    DegenerateEntry { index: usize },
}

fn v2_int(z: &BigInt) -> Option<i64> {
    if z.is_zero() {
        return None;
    }
    Some(z.trailing_zeros().expect("nonzero") as i64)
}

/// 2-adic valuation of a rational number.
pub fn v2(q: &Q) -> GaussValue {
    match (v2_int(q.numer()), v2_int(q.denom())) {
        (Some(a), Some(b)) => GaussValue::Finite(a - b),
        _ => GaussValue::Infinity,
    }
}

fn poly_value(p: &MultiPoly<Q>) -> GaussValue {
    p.terms()
        .iter()
        .map(|(_, c)| v2(c))
        .min()
        .unwrap_or(GaussValue::Infinity)
}

pub fn gauss_v(f: &RatFunc<Q>) -> GaussValue {
    match (poly_value(f.numer()), poly_value(f.denom())) {
        (GaussValue::Finite(a), GaussValue::Finite(b)) => GaussValue::Finite(a - b),
        _ => GaussValue::Infinity,
    }
}

/// Residue of a rational number of nonnegative value.
fn residue_scalar(q: &Q) -> F2 {
    match v2(q) {
        GaussValue::Finite(0) => F2(true),
        _ => F2(false),
    }
}

/// `p * 2^(-v(p))` reduced modulo 2; never zero for nonzero `p`.
fn unit_part_residue(p: &MultiPoly<Q>) -> MultiPoly<F2> {
    let Some(v) = poly_value(p).finite() else {
        return MultiPoly::zero(p.nvars());
    };
    let shift = if v >= 0 {
        Q(num_rational::BigRational::new(
            BigInt::one(),
            BigInt::one() << v as usize,
        ))
    } else {
        Q::from_bigint(&(BigInt::one() << (-v) as usize))
    };
    p.scale(&shift).map_coeffs(residue_scalar)
}

/// The residue map on elements of value 0 (and on zero).
///
/// Powers of two are pulled out of numerator and denominator separately,
/// so no inverse of an even number is ever needed.
pub fn residue(f: &RatFunc<Q>) -> Result<RatFunc<F2>, ResidueError> {
    let n = f.nvars();
    if f.is_zero() {
        return Ok(RatFunc::zero(n));
    }
    match gauss_v(f) {
        GaussValue::Finite(0) => {}
        GaussValue::Finite(value) => return Err(ResidueError::NonzeroValue { value }),
        GaussValue::Infinity => unreachable!("nonzero element has finite value"),
    }
    let num = unit_part_residue(f.numer());
    let den = unit_part_residue(f.denom());
    Ok(RatFunc::new(num, den).expect("residue of a unit-part denominator is nonzero"))
}

/// The residue of `x_i` is `x_i`: one target variable per source variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueMap {
    pub nvars: usize,
}

impl ResidueMap {
    pub fn new(nvars: usize) -> Self {
        ResidueMap { nvars }
    }

    pub fn apply(&self, f: &RatFunc<Q>) -> Result<RatFunc<F2>, ResidueError> {
        assert_eq!(
            f.nvars(),
            self.nvars,
            "residue map applied across variable counts"
        );
        residue(f)
    }
}

/// Entrywise residue of a diagonal form; every entry must have value 0.
pub fn residue_form(f: &DiagonalForm<Q>) -> Result<DiagonalForm<F2>, ResidueError> {
    let mut out = Vec::with_capacity(f.len());
    for (index, e) in f.entries().iter().enumerate() {
        let value = gauss_v(e);
        if value != GaussValue::Finite(0) {
            return Err(ResidueError::EntryValue { index, value });
        }
        let r = residue(e)?;
        if r.is_zero() {
            return Err(ResidueError::DegenerateEntry { index });
        }
        out.push(r);
    }
    Ok(DiagonalForm::new(out).expect("nonzero entries"))
}

/// Scalars of `Q` whose 2-adic value is 0 are exactly the odd-over-odd
/// fractions.
pub fn is_dyadic_unit(q: &Q) -> bool {
    q.numer().is_odd() && q.denom().is_odd()
}
