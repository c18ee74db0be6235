//! Machine verification that the commutative algebras Λ_n = k[x,y]/(x², y^{n+2})
//! and their socle quotients A_n have representation dimension 3.
//!
//! The engine builds an explicit generator-cogenerator M_n over A_n out of
//! string modules, computes minimal projective resolutions of all simple
//! End(M_n)-modules via minimal right add(M)-approximations, and certifies
//! that the global dimension of End(M_n) is exactly 3 — over Q and over
//! prime fields. Everything is exact linear algebra; every positive claim in
//! a certificate is backed by a checkable witness (an invertible
//! intertwiner, a radical basis, a dimension count).
//!
//! Entry points: [`orchestrate::verify_an`], [`orchestrate::verify_lambda`],
//! and the runnable examples under `examples/`.

pub mod algebra;
pub mod approx;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod hom;
pub mod label;
pub mod linalg;
pub mod module;
pub mod orchestrate;

pub use error::Error;
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use label::Label;
