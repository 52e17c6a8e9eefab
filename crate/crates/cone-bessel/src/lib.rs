//! Bessel functions on simple Euclidean Jordan algebras.
//!
//! The crate implements, over the three supported simple algebras
//! Sym(r,ℝ), Herm(r,ℂ) and the spin factors ℝ^{1,n−1}:
//!
//! * the Jordan-algebra numerical kernel (products, operator maps,
//!   determinants, spectral/singular decompositions, p-norms, the symmetric
//!   cone Ω and the bounded symmetric domain D) — [`jordan`];
//! * partition combinatorics and the spherical-polynomial engine
//!   (generalized Pochhammer symbols, Gindikin gamma, Jack polynomials,
//!   reproducing kernels K^m) — [`spherical`];
//! * I/J-Bessel functions: restricted spherical series with truncation
//!   certificates, the bounded-domain integral representation by randomized
//!   quasi-Monte-Carlo, upper-bound verification, and a rank-one
//!   tube-contour oracle — [`bessel`];
//! * the holomorphic semigroup kernel on the cone, its composition law,
//!   decay bounds, the rank-one Hankel transform and the Hermite/Mehler
//!   radial consistency check — [`semigroup`].
//!
//! All core math is generic over the scalar type (`f32`/`f64`) through the
//! [`Scalar`] trait; concrete `f64` aliases are exported at the crate root.

pub mod dd;
pub mod jordan;
pub mod spherical;
pub mod error;
pub mod quad;
pub mod scalar;
pub mod special;

pub use error::{Error, Result};
pub use scalar::{Cplx, Scalar};
