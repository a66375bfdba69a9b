//! Order-one invariant of framed knots in oriented circle bundles over
//! oriented surfaces.
//!
//! The crate computes the universal order-one invariant `I` of framed knots
//! in the total space of an oriented circle bundle `p: M -> F` over an
//! oriented surface `F != S^2`, together with the verification machinery
//! around it: move invariance, the skein identity for crossing changes, the
//! order-one (second derivative) vanishing, the kink action on curve
//! components, and the tridiagonal kernel structure of the universality
//! homomorphism.
//!
//! Values of `I` live in the free abelian group on wedge classes: unordered
//! pairs of elements of `pi_1(M)` up to simultaneous conjugation. All
//! arithmetic is exact (integer group words, rational plane geometry), so
//! equality of invariant values is decidable and byte-stable.

pub mod error;
pub mod group;
pub mod wedge;

pub use error::{Error, Result};
