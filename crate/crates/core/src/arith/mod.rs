//! Exact arithmetic kernel: rationals, dense polynomials over Q and F_p,
//! resultants and discriminants, integer matrix normal forms.

pub mod fp;
pub mod intmat;
pub mod poly;
pub mod rational;

pub use fp::{factor_mod_p, FpPoly, ModPFactorization};
pub use poly::{cubic_galois_group, poly_discriminant, CubicGalois, Poly};
pub use rational::{squarefree_class, Rational};
