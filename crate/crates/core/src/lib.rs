//! Exact bilinear Pfister forms over `Q(x1..xn)` and `F2(x1..xn)`, and a
//! certificate-emitting verifier for the non-linkage of the `2^n`-member
//! Pfister family built from `x1, ..., xn`.
//!
//! Layers, bottom up:
//!
//! * [`fieldcore`]: sparse polynomials and canonical rational functions.
//! * [`char2linalg`]: `F2(x1..xn)` as a vector space over its subfield of
//!   squares; spans, membership, intersections, 2-independence.
//! * [`bilforms`]: diagonal and Pfister forms, isotropy and common slots in
//!   characteristic 2.
//! * [`dyadic`]: the 2-adic Gauss valuation and residue forms.
//! * [`family`]: the Pfister family and the four quaternion norm forms.
//! * [`verifier`]: parser, pipelines, exhaustive oracle, certificates.

pub mod bilforms;
pub mod char2linalg;
pub mod dyadic;
pub mod family;
pub mod fieldcore;
pub mod par;
pub mod verifier;

pub use par::Exec;
