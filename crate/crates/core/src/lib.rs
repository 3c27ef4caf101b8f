//! Exact recomputation of the arithmetic facts behind the classification of
//! semistable abelian varieties over Q with bad reduction only at 19.
//!
//! The crate is split by subject:
//! - [`arith`]: rationals, polynomials, finite-field factorization;
//! - [`nf`]: number fields from certified integral bases, ideals, unit
//!   quotients and ray class groups;
//! - [`ramification`]: Herbrand functions and discriminant bounds;
//! - [`hopf`]: explicit rank-4 Hopf algebras and their group laws;
//! - [`torsion`]: 2-torsion of an elliptic curve, F_2 representations and
//!   small finite groups.

pub mod arith;
pub mod check;
pub mod error;
pub mod hopf;
pub mod nf;
pub mod ramification;
pub mod torsion;

pub use check::{CheckReport, Status};
pub use error::{Error, Result};
