//! The three supported simple Euclidean Jordan algebras and their
//! complexifications: Sym(r,ℝ), Herm(r,ℂ), and the spin factors ℝ^{1,n−1}.
//!
//! Elements carry coordinates in a fixed basis that is orthonormal for the
//! trace form (x|y) = tr(x ȳ). For the matrix families this means the
//! off-diagonal coordinates are √2 × the matrix entries; for the spin factor
//! all coordinates are √2 × the natural (x₀, x⃗) components. Every constant
//! in the integral formulas (π^n in c_λ, Lebesgue measure on D) presupposes
//! this Euclidean normalization.

mod element;
mod haar;
mod maps;
mod spectral;

pub use element::{Algebra, ComplexElement, Element, Family};
pub use haar::{haar_kl_sample, k_rotate, standard_frame};
pub use maps::{
    generic_norm_h, op_b, op_box, op_l, op_p, op_p2, sandwich, sandwich_real, LinearMap,
};
pub use spectral::{
    in_domain_d, inverse, inverse_real, jordan_eigenvalues, pnorm, power_int, singular,
    spectral, sqrt_cone, SpectralData,
};

/// Relative slack for cone membership and idempotent checks.
pub const CONE_SLACK: f64 = 1e-12;

/// Singular values below `VARIETY_RTOL · t₁` (or `VARIETY_ATOL` if t₁ is
/// tiny) count as zero for variety membership.
pub const VARIETY_RTOL: f64 = 1e-10;
pub const VARIETY_ATOL: f64 = 1e-14;

// Helpers shared with the spherical engine for general-rank spectra.
pub(crate) use spectral::{char_poly as char_poly_pub, durand_kerner as poly_roots_pub};
