//! Exact-arithmetic toolkit for left-invariant geometry on low-dimensional
//! Lie algebras: stable two- and three-forms in dimension six, the
//! Chevalley-Eilenberg differential and its cohomology, half-flat
//! SU(3)-structure verification, polynomial obstruction certificates, and a
//! machine-readable catalog of four- and five-dimensional Lie algebras.
//!
//! All arithmetic is exact: arbitrary-precision rationals, a single
//! quadratic extension per context, and sparse multivariate polynomials for
//! identity testing over generic closed forms.

pub mod catalog;
pub mod exterior;
pub mod halfflat;
pub mod lie;
pub mod linalg;
pub mod scalar;
pub mod stable;

pub use exterior::{EndoVol, KForm, MultiIndex};
pub use lie::{CohomologyProfile, Presentation, StructuralInvariants};
pub use scalar::{Rat, Scalar};
pub use stable::{Definiteness, StablePair};
