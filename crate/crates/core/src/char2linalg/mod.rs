//! `F2(x1..xn)` as a `2^n`-dimensional vector space over its subfield of
//! squares, and exact linear algebra on it.

mod bitvec;
pub mod elim;
mod frob;
mod subspace;

use thiserror::Error;

pub use bitvec::BitVector;
pub use frob::{basis_monomial, frob_coords, FrobCoords};
pub use subspace::{
    intersect, member, represent, span, span_of_elements, subset_products, two_independent,
    verify_combination, verify_relation, Membership, Subspace, TwoIndependence,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("element {0} is zero")]
    ZeroElement(usize),
    #[error("empty element list")]
    Empty,
    #[error("elements have different variable counts")]
    ArityMismatch,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::{RatFunc, F2};
    use crate::par::Exec;

    fn x(i: usize) -> RatFunc<F2> {
        RatFunc::var(2, i)
    }

    fn sp(elements: &[RatFunc<F2>]) -> Subspace {
        span_of_elements(2, elements, Exec::Sequential)
    }

    #[test]
    fn span_dimensions() {
        let one = RatFunc::<F2>::one(2);
        assert_eq!(sp(&[one]).dim(), 1);
        assert_eq!(sp(&[x(0), x(0).mul(&x(1)).mul(&x(1))]).dim(), 1);
        assert_eq!(sp(&[x(0), x(1), x(0).mul(&x(1))]).dim(), 3);
        assert_eq!(sp(&[]).dim(), 0);
    }

    #[test]
    fn membership() {
        let s = sp(&[x(0), x(1), x(0).mul(&x(1))]);
        match member(&x(0), &s) {
            Membership::Member { combination } => {
                let shown: Vec<String> = combination.iter().map(|c| c.to_string()).collect();
                assert_eq!(shown, ["1", "0", "0"]);
                assert!(verify_combination(&x(0), &s, &combination));
            }
            Membership::NotMember => panic!("x1 must be a member"),
        }
        let one = RatFunc::<F2>::one(2);
        assert_eq!(member(&one.add(&x(0)), &s), Membership::NotMember);
        assert!(member(&RatFunc::zero(2), &s).is_member());
        assert!(member(&RatFunc::zero(2), &Subspace::zero(2)).is_member());
    }

    #[test]
    fn intersections() {
        let a = sp(&[x(0), x(1)]);
        let b = sp(&[x(1), x(0).mul(&x(1))]);
        let i = intersect(&a, &b);
        assert_eq!(i, sp(&[x(1)]));
        assert_eq!(intersect(&a, &a), a);
        assert!(intersect(&a, &Subspace::zero(2)).is_zero());
    }

    #[test]
    fn two_independence_examples() {
        assert!(two_independent(&[x(0), x(1)], Exec::Sequential)
            .unwrap()
            .is_independent());
        let dep = two_independent(&[x(0), x(0).mul(&x(1)).mul(&x(1))], Exec::Sequential).unwrap();
        let alphas = [x(0), x(0).mul(&x(1)).mul(&x(1))];
        match dep {
            TwoIndependence::Dependent { relation } => assert!(verify_relation(&alphas, &relation)),
            TwoIndependence::Independent => panic!("expected dependence"),
        }
        let three = [x(0).add(&x(1)), x(0), x(1)];
        match two_independent(&three, Exec::Sequential).unwrap() {
            TwoIndependence::Dependent { relation } => assert!(verify_relation(&three, &relation)),
            TwoIndependence::Independent => panic!("expected dependence"),
        }
        assert_eq!(
            two_independent(&[x(0), RatFunc::zero(2)], Exec::Sequential),
            Err(LinalgError::ZeroElement(1))
        );
    }
}
