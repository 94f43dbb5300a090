//! Exact arithmetic and classification machinery for two-dimensional
//! endo-commutative curled algebras.
//!
//! An algebra is given by its structure matrix with respect to a basis
//! `{e, f}`:
//!
//! ```text
//! e² = a1 e + b1 f
//! f² = a2 e + b2 f
//! ef = a3 e + b3 f
//! fe = a4 e + b4 f
//! ```
//!
//! It is *endo-commutative* when `x²y² = (xy)²` for all `x, y`, and *curled*
//! when every `x²` is a scalar multiple of `x`. Over any field other than
//! `F2`, every such algebra is isomorphic to exactly one of
//!
//! ```text
//! C0    = 0                       (zero algebra)
//! C1    : ef = e, fe = -e
//! C2(a) : e² = e, ef = af, fe = (1-a)f
//! ```
//!
//! The crate provides the base fields ([`field`]), formal polynomial
//! identities ([`poly`]), algebra predicates ([`algebra`]), basis changes and
//! isomorphism search ([`iso`]), the constructive classifier ([`classify`])
//! and exhaustive re-checks over small finite fields ([`verify`]).
//!
//! ```
//! use curled2_core::{classify, FieldSpec, StructureMatrix};
//!
//! let q: FieldSpec = "Q".parse().unwrap();
//! let a = StructureMatrix::parse(q, "C(1/3,0,2/3,0;0,1)").unwrap();
//! let c = classify::classify(&a).unwrap();
//! assert_eq!(c.label.to_string(), "C2(2/3)");
//! assert_eq!(c.witness.to_string(), "[[0,1],[1,0]]");
//! ```
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod classify;
mod error;
pub mod field;
pub mod iso;
pub mod linalg;
pub mod poly;
mod union_find;
pub mod verify;

pub use algebra::{AlgebraElement, CFormParams, EcMethod, StructureMatrix};
pub use classify::{CanonicalLabel, Classification, SpecialKind};
pub use error::{Error, Result};
pub use field::{ArithOp, FieldElem, FieldSpec};
pub use iso::Transform2;
pub use poly::MultiPoly;
