//! Exact arithmetic over Q: rationals, univariate and multivariate polynomials,
//! resultants, factorization, certified complex roots and rational reconstruction.

pub mod factor;
pub mod fixed;
pub mod integer;
pub(crate) mod modp;
pub mod mpoly;
pub mod poly;
pub mod rational;
pub mod reconstruct;
pub mod resultant;
pub mod roots;

pub use factor::{factor_over_q, Factorization};
pub use mpoly::MPoly;
pub use poly::UniPoly;
pub use rational::{fifth_power_class, parse_rational, Rational};
pub use reconstruct::rational_reconstruct;
pub use resultant::{discriminant, resultant};
pub use roots::{complex_roots, complex_roots_adaptive, ComplexBall};
