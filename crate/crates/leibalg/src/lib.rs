//! Exact computer algebra for finite-dimensional Leibniz algebras.
//!
//! Algebras are structure-constant tensors over GF(p) (p prime, p <= 251) or
//! over the rationals. The crate provides identity checking, series and class
//! predicates, subspace-lattice enumeration with Frattini/socle/nilradical
//! machinery, the companion Lie algebra construction, and deterministic
//! builders for the algebra families exercised by the verification suite.
//!
//! The `parallel` feature (on by default) runs the enumeration and scan inner
//! loops on rayon; without it the same code paths run sequentially.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod companion;
pub mod field;
pub mod lattice;
pub mod matrix;
mod par;
pub mod subspace;
pub mod suite;

pub use algebra::{Algebra, AlgebraError, IdentityWitness, WitnessKind};
pub use catalog::{Family, FamilySpec, Variant};
pub use classify::{AlgebraClass, ClassVerdict, ClassWitness, Flag, SeriesReport};
pub use companion::Decomposition;
pub use field::{Field, FieldError, Scalar};
pub use lattice::{Budget, EnumKind, MinimalityVerdict, TwoGenerated, Verdict};
pub use matrix::{LinalgError, Matrix, Vector};
pub use par::mode;
pub use subspace::{fitting_null, kernel, Subspace};
