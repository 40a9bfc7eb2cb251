//! The `2^n`-member Pfister family indexed by `{0,1}^n` and the four
//! quaternion symbols whose norm forms make up its `n = 2` instance.

use thiserror::Error;

use crate::bilforms::{pfister_expand, FormError, PfisterForm};
use crate::char2linalg::BitVector;
use crate::fieldcore::{Coeff, RatFunc, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("need n >= 2, got {0}")]
    TooFewVariables(usize),
    #[error("expected {expected} slot values, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("slot value {0} is zero")]
    ZeroAlpha(usize),
    #[error("1 + alpha^d vanishes for d = {0}")]
    DegenerateSlot(BitVector),
    #[error(transparent)]
    Form(#[from] FormError),
}

/// `d -> phi_d` for every `d` in `{0,1}^n`, in [`BitVector`] order.
///
/// `phi_0 = <<a1, ..., an>>`; for `d != 0` with first nonzero coordinate
/// `l`, `phi_d = <<a1, ..., a_n without a_l>> ⊗ <<1 + a^d>>`, the new slot
/// placed last.
pub fn pfister_family<C: Coeff>(
    alphas: &[RatFunc<C>],
) -> Result<Vec<(BitVector, PfisterForm<C>)>, FamilyError> {
    let n = alphas.len();
    if n < 2 {
        return Err(FamilyError::TooFewVariables(n));
    }
    if let Some(i) = alphas.iter().position(RatFunc::is_zero) {
        return Err(FamilyError::ZeroAlpha(i));
    }
    let nvars = alphas[0].nvars();
    let one = RatFunc::one(nvars);
    BitVector::all(n)
        .map(|d| {
            let form = match d.min_index() {
                None => PfisterForm::new(alphas.to_vec())?,
                Some(l) => {
                    let power = d.ones().fold(one.clone(), |acc, i| acc.mul(&alphas[i]));
                    let extra = one.add(&power);
                    if extra.is_zero() {
                        return Err(FamilyError::DegenerateSlot(d));
                    }
                    let mut slots: Vec<RatFunc<C>> = alphas
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != l)
                        .map(|(_, a)| a.clone())
                        .collect();
                    slots.push(extra);
                    PfisterForm::new(slots)?
                }
            };
            Ok((d, form))
        })
        .collect()
}

/// Family on the variables themselves: `alpha_i = x_i` in `K(x1..xn)`.
pub fn standard_family<C: Coeff>(
    n: usize,
) -> Result<Vec<(BitVector, PfisterForm<C>)>, FamilyError> {
    let alphas: Vec<RatFunc<C>> = (0..n).map(|i| RatFunc::var(n, i)).collect();
    pfister_family(&alphas)
}

/// The quaternion algebra symbol `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionSymbol<C: Coeff> {
    pub a: RatFunc<C>,
    pub b: RatFunc<C>,
}

impl<C: Coeff> QuaternionSymbol<C> {
    pub fn new(a: RatFunc<C>, b: RatFunc<C>) -> Result<Self, FamilyError> {
        if a.is_zero() {
            return Err(FamilyError::ZeroAlpha(0));
        }
        if b.is_zero() {
            return Err(FamilyError::ZeroAlpha(1));
        }
        Ok(QuaternionSymbol { a, b })
    }
}

impl<C: Coeff> std::fmt::Display for QuaternionSymbol<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// `(a, b) -> <<a, b>> = <1, -a, -b, ab>`.
pub fn norm_form<C: Coeff>(q: &QuaternionSymbol<C>) -> PfisterForm<C> {
    PfisterForm::new(vec![q.a.clone(), q.b.clone()]).expect("symbol entries are nonzero")
}

/// `(x1, x2), (x1, x2 + 1), (x2, x1 + 1), (x2, x1 x2 + 1)` over `Q(x1, x2)`.
pub fn theorem_a_quaternions() -> Vec<QuaternionSymbol<Q>> {
    let x1 = RatFunc::<Q>::var(2, 0);
    let x2 = RatFunc::<Q>::var(2, 1);
    let one = RatFunc::<Q>::one(2);
    [
        (x1.clone(), x2.clone()),
        (x1.clone(), x2.add(&one)),
        (x2.clone(), x1.add(&one)),
        (x2.clone(), x1.mul(&x2).add(&one)),
    ]
    .into_iter()
    .map(|(a, b)| QuaternionSymbol { a, b })
    .collect()
}

/// Family index paired with each entry of [`theorem_a_quaternions`]:
/// `phi_0`, `phi_(0,1)`, `phi_(1,0)`, `phi_(1,1)`. This is not
/// [`BitVector`] order.
pub fn theorem_a_bijection() -> [BitVector; 4] {
    [
        BitVector::from_bits(&[0, 0]),
        BitVector::from_bits(&[0, 1]),
        BitVector::from_bits(&[1, 0]),
        BitVector::from_bits(&[1, 1]),
    ]
}

/// Equality of diagonal expansions as multisets.
pub fn same_expansion<C: Coeff>(p: &PfisterForm<C>, q: &PfisterForm<C>) -> bool {
    pfister_expand(p).sorted_entries() == pfister_expand(q).sorted_entries()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::F2;

    #[test]
    fn n2_family_members() {
        let fam = standard_family::<Q>(2).unwrap();
        assert_eq!(fam.len(), 4);
        assert_eq!(fam[0].1.to_string(), "<<x1, x2>>");
        assert_eq!(fam[1].1.to_string(), "<<x2, x1 + 1>>");
        assert_eq!(fam[2].1.to_string(), "<<x1, x2 + 1>>");
        assert_eq!(fam[3].1.to_string(), "<<x2, x1*x2 + 1>>");
    }

    #[test]
    fn n3_minimal_index_rule() {
        let fam = standard_family::<F2>(3).unwrap();
        let d = BitVector::from_bits(&[0, 1, 1]);
        let (_, form) = fam.iter().find(|(e, _)| *e == d).unwrap();
        assert_eq!(form.to_string(), "<<x1, x3, x2*x3 + 1>>");
        assert!(fam.iter().all(|(_, f)| f.fold() == 3));
    }

    #[test]
    fn degenerate_and_bad_inputs() {
        let x1 = RatFunc::<Q>::var(2, 0);
        let minus_one = RatFunc::<Q>::constant(2, Q::from_i64(-1));
        assert!(matches!(
            pfister_family(&[minus_one, x1.clone()]),
            Err(FamilyError::DegenerateSlot(_))
        ));
        assert_eq!(
            pfister_family(std::slice::from_ref(&x1)).unwrap_err(),
            FamilyError::TooFewVariables(1)
        );
        assert_eq!(
            pfister_family(&[x1.clone(), RatFunc::zero(2)]).unwrap_err(),
            FamilyError::ZeroAlpha(1)
        );
    }

    #[test]
    fn norm_forms() {
        let qs = theorem_a_quaternions();
        assert_eq!(qs[0].to_string(), "(x1, x2)");
        assert_eq!(qs[3].to_string(), "(x2, x1*x2 + 1)");
        assert_eq!(norm_form(&qs[3]).to_string(), "<<x2, x1*x2 + 1>>");

        let a = RatFunc::<Q>::var(2, 0);
        let split = QuaternionSymbol::new(a, RatFunc::one(2)).unwrap();
        assert_eq!(
            pfister_expand(&norm_form(&split)).to_string(),
            "<1, -x1, -1, x1>"
        );
    }

    #[test]
    fn closing_identification() {
        let fam = standard_family::<Q>(2).unwrap();
        for (q, d) in theorem_a_quaternions().iter().zip(theorem_a_bijection()) {
            assert!(same_expansion(&norm_form(q), &fam[d.index()].1));
        }
    }
}
