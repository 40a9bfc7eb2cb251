//! Diagonal symmetric bilinear forms and bilinear Pfister forms.
//!
//! In characteristic 2 the map `v -> b(v, v) = sum c_i v_i^2` is additive
//! and `F^2`-semilinear, so everything here reduces to linear algebra on
//! Frobenius coordinates: a form is isotropic iff its entries are
//! `F^2`-dependent, and its nonzero values are the nonzero elements of the
//! `F^2`-span of its entries.
//!
//! The slot test relies on the standard fact that for an anisotropic
//! bilinear Pfister form `P = <1> ⊥ P'`, a nonzero `beta` is a slot
//! (`P = <<beta>> ⊗ Q` for some Pfister `Q`) exactly when `P'` represents
//! `beta`. Only the direction "represented implies slot" is needed to turn
//! an empty common value space into "no common 1-fold factor"; the converse
//! is used to report witnesses and is not re-derived here.

use std::fmt;

use thiserror::Error;

use crate::char2linalg::elim::rref_of_columns;
use crate::char2linalg::{
    frob_coords, intersect, member, represent, span, FrobCoords, Membership, Subspace,
};
use crate::fieldcore::{eval_bilinear, Coeff, RatFunc, F2};
use crate::par::Exec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("entry {0} is zero")]
    ZeroEntry(usize),
    #[error("a Pfister form needs at least one slot")]
    NoSlots,
    #[error("entries have different variable counts")]
    ArityMismatch,
    #[error("form lacks the unit entry at position 0")]
    MissingUnitEntry,
    #[error("form {index} is isotropic; the slot criterion requires anisotropy")]
    Isotropic { index: usize },
    #[error("beta must be nonzero")]
    ZeroBeta,
    #[error("empty form list")]
    EmptyFamily,
}

/// `<<a1, ..., am>> = <1, -a1> ⊗ ... ⊗ <1, -am>`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PfisterForm<C: Coeff> {
    slots: Vec<RatFunc<C>>,
}

impl<C: Coeff> PfisterForm<C> {
    pub fn new(slots: Vec<RatFunc<C>>) -> Result<Self, FormError> {
        let Some(first) = slots.first() else {
            return Err(FormError::NoSlots);
        };
        let n = first.nvars();
        if let Some(i) = slots.iter().position(RatFunc::is_zero) {
            return Err(FormError::ZeroEntry(i));
        }
        if slots.iter().any(|s| s.nvars() != n) {
            return Err(FormError::ArityMismatch);
        }
        Ok(PfisterForm { slots })
    }

    pub fn slots(&self) -> &[RatFunc<C>] {
        &self.slots
    }

    pub fn fold(&self) -> usize {
        self.slots.len()
    }

    pub fn nvars(&self) -> usize {
        self.slots[0].nvars()
    }

    pub fn map_slots<D: Coeff, E>(
        &self,
        f: impl Fn(&RatFunc<C>) -> Result<RatFunc<D>, E>,
    ) -> Result<Result<PfisterForm<D>, FormError>, E> {
        let slots = self.slots.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(PfisterForm::new(slots))
    }
}

impl<C: Coeff> fmt::Display for PfisterForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<<")?;
        for (i, s) in self.slots.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(">>")
    }
}

/// `<c1, ..., ck>`; entry order is kept for display only.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiagonalForm<C: Coeff> {
    entries: Vec<RatFunc<C>>,
}

impl<C: Coeff> DiagonalForm<C> {
    pub fn new(entries: Vec<RatFunc<C>>) -> Result<Self, FormError> {
        if let Some(i) = entries.iter().position(RatFunc::is_zero) {
            return Err(FormError::ZeroEntry(i));
        }
        if let Some(first) = entries.first() {
            if entries.iter().any(|e| e.nvars() != first.nvars()) {
                return Err(FormError::ArityMismatch);
            }
        }
        Ok(DiagonalForm { entries })
    }

    pub fn entries(&self) -> &[RatFunc<C>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted canonically, for multiset comparison.
    pub fn sorted_entries(&self) -> Vec<RatFunc<C>> {
        let mut e = self.entries.clone();
        e.sort();
        e
    }
}

impl<C: Coeff> fmt::Display for DiagonalForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(">")
    }
}

/// Diagonal expansion; the entry for `S ⊆ {1..m}` sits at the
/// [`BitVector`](crate::char2linalg::BitVector) index of `S` and equals
/// `(-1)^|S| prod_{i in S} a_i`.
pub fn pfister_expand<C: Coeff>(p: &PfisterForm<C>) -> DiagonalForm<C> {
    let mut entries = vec![RatFunc::one(p.nvars())];
    for a in &p.slots {
        let minus_a = a.neg();
        let prev = entries.len();
        for j in 0..prev {
            let next = entries[j].mul(&minus_a);
            entries.push(next);
        }
    }
    DiagonalForm { entries }
}

/// `P'` with `P = <1> ⊥ P'`: drops exactly the entry at position 0.
pub fn pure_part<C: Coeff>(f: &DiagonalForm<C>) -> Result<DiagonalForm<C>, FormError> {
    match f.entries.first() {
        Some(e) if e.is_one() => Ok(DiagonalForm {
            entries: f.entries[1..].to_vec(),
        }),
        _ => Err(FormError::MissingUnitEntry),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isotropy {
    /// `v != 0` with `b(v, v) = 0`.
    Isotropic { witness: Vec<RatFunc<F2>> },
    /// The entries' coordinate matrix has full column rank `rank`.
    Anisotropic { rank: usize },
}

impl Isotropy {
    pub fn is_isotropic(&self) -> bool {
        matches!(self, Isotropy::Isotropic { .. })
    }
}

fn nvars_of(f: &DiagonalForm<F2>) -> Option<usize> {
    f.entries.first().map(RatFunc::nvars)
}

pub fn is_isotropic_char2(f: &DiagonalForm<F2>, exec: Exec) -> Isotropy {
    let Some(n) = nvars_of(f) else {
        return Isotropy::Anisotropic { rank: 0 };
    };
    let columns: Vec<Vec<RatFunc<F2>>> = exec.map(&f.entries, |c| frob_coords(c).into_vec());
    let r = rref_of_columns(n, 1 << n, &columns);
    match r.kernel(n).into_iter().next() {
        None => Isotropy::Anisotropic { rank: r.rank() },
        Some(v) => {
            let value = eval_bilinear(&f.entries, &v).expect("lengths agree");
            assert!(value.is_zero(), "isotropy witness failed to verify");
            Isotropy::Isotropic { witness: v }
        }
    }
}

/// The `F^2`-span of the entries; its nonzero elements are the values of
/// the form.
pub fn value_subspace(f: &DiagonalForm<F2>, exec: Exec) -> Subspace {
    let Some(n) = nvars_of(f) else {
        return Subspace::zero(0);
    };
    let coords: Vec<FrobCoords> = exec.map(&f.entries, frob_coords);
    span(n, &coords)
}

/// `t` with `sum c_i t_i^2 = beta` over the entries of `f`.
pub fn represent_value(
    f: &DiagonalForm<F2>,
    beta: &RatFunc<F2>,
    exec: Exec,
) -> Option<Vec<RatFunc<F2>>> {
    let n = beta.nvars();
    let t = represent(n, &f.entries, beta, exec)?;
    debug_assert_eq!(eval_bilinear(&f.entries, &t).as_ref(), Ok(beta));
    Some(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlotTest {
    /// `beta` is represented by the pure part: `sum c_i t_i^2 = beta`.
    Slot {
        representation: Vec<RatFunc<F2>>,
    },
    NotSlot,
}

impl SlotTest {
    pub fn is_slot(&self) -> bool {
        matches!(self, SlotTest::Slot { .. })
    }
}

pub fn has_slot(
    p: &PfisterForm<F2>,
    beta: &RatFunc<F2>,
    exec: Exec,
) -> Result<SlotTest, FormError> {
    if beta.is_zero() {
        return Err(FormError::ZeroBeta);
    }
    let expanded = pfister_expand(p);
    if is_isotropic_char2(&expanded, exec).is_isotropic() {
        return Err(FormError::Isotropic { index: 0 });
    }
    let pure = pure_part(&expanded)?;
    let space = value_subspace(&pure, exec);
    match member(beta, &space) {
        Membership::NotMember => Ok(SlotTest::NotSlot),
        Membership::Member { .. } => {
            let representation =
                represent_value(&pure, beta, exec).expect("member of the value span");
            Ok(SlotTest::Slot { representation })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonSlotWitness {
    pub beta: RatFunc<F2>,
    /// Per form, `t` with `sum c_i t_i^2 = beta` over that form's pure part.
    pub representations: Vec<Vec<RatFunc<F2>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonSlots {
    pub space: Subspace,
    pub pure_parts: Vec<DiagonalForm<F2>>,
    pub witness: Option<CommonSlotWitness>,
}

impl CommonSlots {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Intersection of the pure value subspaces of anisotropic Pfister forms.
/// Dimension zero means the forms have no common 1-fold factor.
pub fn common_slot_space(ps: &[PfisterForm<F2>], exec: Exec) -> Result<CommonSlots, FormError> {
    if ps.is_empty() {
        return Err(FormError::EmptyFamily);
    }
    let expansions: Vec<DiagonalForm<F2>> = exec.map(ps, pfister_expand);
    let isotropy = exec.map(&expansions, |e| is_isotropic_char2(e, Exec::Sequential));
    if let Some(index) = isotropy.iter().position(Isotropy::is_isotropic) {
        return Err(FormError::Isotropic { index });
    }
    let pure_parts = expansions
        .iter()
        .map(pure_part)
        .collect::<Result<Vec<_>, _>>()?;
    let spaces = exec.map(&pure_parts, |p| value_subspace(p, Exec::Sequential));
    let mut iter = spaces.into_iter();
    let first = iter.next().expect("nonempty");
    let space = iter.fold(first, |acc, s| intersect(&acc, &s));

    let witness = space.basis().first().map(|row| {
        let beta = row.reconstruct();
        let representations = exec.map(&pure_parts, |p| {
            represent_value(p, &beta, Exec::Sequential).expect("beta lies in every value span")
        });
        CommonSlotWitness {
            beta,
            representations,
        }
    });
    Ok(CommonSlots {
        space,
        pure_parts,
        witness,
    })
}

/// Replays a common-slot witness against the pure parts.
pub fn verify_common_witness(pure_parts: &[DiagonalForm<F2>], w: &CommonSlotWitness) -> bool {
    !w.beta.is_zero()
        && pure_parts.len() == w.representations.len()
        && pure_parts
            .iter()
            .zip(&w.representations)
            .all(|(p, t)| eval_bilinear(p.entries(), t).is_ok_and(|v| v == w.beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::Q;

    fn x<C: Coeff>(n: usize, i: usize) -> RatFunc<C> {
        RatFunc::var(n, i)
    }

    fn pf(slots: Vec<RatFunc<F2>>) -> PfisterForm<F2> {
        PfisterForm::new(slots).unwrap()
    }

    fn diag(entries: Vec<RatFunc<F2>>) -> DiagonalForm<F2> {
        DiagonalForm::new(entries).unwrap()
    }

    fn show<C: Coeff>(f: &DiagonalForm<C>) -> String {
        f.to_string()
    }

    #[test]
    fn expansion_signs() {
        let p = PfisterForm::new(vec![x::<Q>(2, 0), x::<Q>(2, 1)]).unwrap();
        assert_eq!(show(&pfister_expand(&p)), "<1, -x1, -x2, x1*x2>");
        assert_eq!(show(&pfister_expand(&pf(vec![x(1, 0)]))), "<1, x1>");
        let one = RatFunc::<F2>::one(2);
        let p = pf(vec![x(2, 1), one.add(&x(2, 0).mul(&x(2, 1)))]);
        assert_eq!(
            show(&pfister_expand(&p)),
            "<1, x2, x1*x2 + 1, x1*x2^2 + x2>"
        );
    }

    #[test]
    fn pure_parts() {
        let p = pf(vec![x(2, 0), x(2, 1)]);
        assert_eq!(
            show(&pure_part(&pfister_expand(&p)).unwrap()),
            "<x1, x2, x1*x2>"
        );
        assert_eq!(
            show(&pure_part(&pfister_expand(&pf(vec![x(1, 0)]))).unwrap()),
            "<x1>"
        );
        let one = RatFunc::<F2>::one(2);
        let p = pf(vec![x(2, 0), one.add(&x(2, 1))]);
        assert_eq!(
            show(&pure_part(&pfister_expand(&p)).unwrap()),
            "<x1, x2 + 1, x1*x2 + x1>"
        );
        assert_eq!(
            pure_part(&diag(vec![x(2, 0)])),
            Err(FormError::MissingUnitEntry)
        );
    }

    #[test]
    fn isotropy_examples() {
        let one = RatFunc::<F2>::one(2);
        match is_isotropic_char2(&diag(vec![one.clone(), one.clone()]), Exec::Sequential) {
            Isotropy::Isotropic { witness } => assert_eq!(witness, vec![one.clone(), one.clone()]),
            other => panic!("{other:?}"),
        }
        let phi0 = pfister_expand(&pf(vec![x(2, 0), x(2, 1)]));
        assert_eq!(
            is_isotropic_char2(&phi0, Exec::Sequential),
            Isotropy::Anisotropic { rank: 4 }
        );
        let f = diag(vec![x(2, 0), x(2, 0).mul(&x(2, 1)).mul(&x(2, 1))]);
        match is_isotropic_char2(&f, Exec::Sequential) {
            Isotropy::Isotropic { witness } => assert_eq!(witness, vec![x(2, 1), one.clone()]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn value_subspace_dimensions() {
        assert_eq!(
            value_subspace(&diag(vec![RatFunc::one(2)]), Exec::Sequential).dim(),
            1
        );
        let f = diag(vec![x(2, 0), x(2, 1), x(2, 0).mul(&x(2, 1))]);
        assert_eq!(value_subspace(&f, Exec::Sequential).dim(), 3);
        let f = diag(vec![x(2, 0), x(2, 0).mul(&x(2, 1)).mul(&x(2, 1))]);
        assert_eq!(value_subspace(&f, Exec::Sequential).dim(), 1);
    }

    #[test]
    fn slot_tests() {
        let p = pf(vec![x(2, 0), x(2, 1)]);
        let one = RatFunc::<F2>::one(2);
        assert!(has_slot(&p, &x(2, 0), Exec::Sequential).unwrap().is_slot());
        match has_slot(&p, &x(2, 0).mul(&x(2, 1)), Exec::Sequential).unwrap() {
            SlotTest::Slot { representation } => {
                let pure = pure_part(&pfister_expand(&p)).unwrap();
                let v = eval_bilinear(pure.entries(), &representation).unwrap();
                assert_eq!(v, x(2, 0).mul(&x(2, 1)));
            }
            SlotTest::NotSlot => panic!("x1*x2 is a slot"),
        }
        assert!(!has_slot(&p, &one.add(&x(2, 0)), Exec::Sequential)
            .unwrap()
            .is_slot());
        assert_eq!(
            has_slot(&p, &RatFunc::zero(2), Exec::Sequential),
            Err(FormError::ZeroBeta)
        );
        let iso = pf(vec![one.clone(), x(2, 0)]);
        assert!(matches!(
            has_slot(&iso, &x(2, 0), Exec::Sequential),
            Err(FormError::Isotropic { .. })
        ));
    }

    #[test]
    fn common_slots_of_a_linked_pair() {
        let one = RatFunc::<F2>::one(2);
        let forms = [
            pf(vec![x(2, 0), x(2, 1)]),
            pf(vec![x(2, 0), one.add(&x(2, 1))]),
        ];
        let c = common_slot_space(&forms, Exec::Sequential).unwrap();
        assert!(c.dim() >= 1);
        let w = c.witness.as_ref().unwrap();
        assert!(verify_common_witness(&c.pure_parts, w));
        assert!(member(&x(2, 0), &c.space).is_member());

        let single = common_slot_space(&forms[..1], Exec::Sequential).unwrap();
        assert_eq!(single.dim(), 3);
    }

    #[test]
    fn common_slots_reject_isotropic_input() {
        let one = RatFunc::<F2>::one(2);
        let forms = [pf(vec![x(2, 0), x(2, 1)]), pf(vec![one.clone(), x(2, 1)])];
        assert_eq!(
            common_slot_space(&forms, Exec::Sequential),
            Err(FormError::Isotropic { index: 1 })
        );
    }
}
