//! Haar-random algebra automorphisms (K_L) and K-rotations of V^ℂ, used by
//! the Monte-Carlo spherical-average oracle and the bound-check samplers.

use nalgebra::DMatrix;
use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use super::element::{Algebra, ComplexElement, Element, Family};
use super::maps::LinearMap;
use crate::scalar::{sc, Cplx, Scalar};

fn gaussian<S: Scalar>(rng: &mut impl Rng) -> S {
    sc(rng.sample::<f64, _>(StandardNormal))
}

/// Haar-orthogonal Q ∈ SO(m) via QR of a Gaussian ensemble with the sign
/// convention diag(R) > 0 and a determinant fix.
fn haar_so<S: Scalar>(m: usize, rng: &mut impl Rng) -> DMatrix<S> {
    let g = DMatrix::from_fn(m, m, |_, _| gaussian::<S>(rng));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..m {
        if r[(j, j)] < S::zero() {
            for i in 0..m {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    if q.determinant() < S::zero() {
        for i in 0..m {
            q[(i, m - 1)] = -q[(i, m - 1)];
        }
    }
    q
}

/// Haar-unitary U ∈ U(m) via QR of a complex Ginibre ensemble with the
/// phase convention diag(R) > 0.
fn haar_u<S: Scalar>(m: usize, rng: &mut impl Rng) -> DMatrix<Cplx<S>> {
    let g = DMatrix::from_fn(m, m, |_, _| Complex::new(gaussian::<S>(rng), gaussian::<S>(rng)));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..m {
        let d = r[(j, j)];
        let n = crate::scalar::cnorm(d);
        if n > S::zero() {
            let phase = d / Complex::new(n, S::zero());
            for i in 0..m {
                q[(i, j)] *= phase;
            }
        }
    }
    q
}

/// A Haar-distributed Jordan-algebra automorphism of V (complexified): for
/// the matrix families conjugation by a Haar orthogonal/unitary matrix, for
/// the spin factor a Haar rotation of the x⃗ block.
pub fn haar_kl_sample<S: Scalar>(algebra: Algebra, rng: &mut impl Rng) -> LinearMap<S> {
    let n = algebra.n;
    let zero = Complex::new(S::zero(), S::zero());
    let mut mat = DMatrix::from_element(n, n, zero);
    match algebra.family {
        Family::SymR => {
            let o = haar_so::<S>(algebra.r, rng);
            let oc = o.map(|x| Complex::new(x, S::zero()));
            for j in 0..n {
                let mut coords = vec![zero; n];
                coords[j] = Complex::new(S::one(), S::zero());
                let b = ComplexElement::from_coords(algebra, coords).unwrap();
                let img = ComplexElement::from_matrix(
                    algebra,
                    &(&oc * b.to_matrix() * oc.transpose()),
                );
                for (i, &c) in img.coords().iter().enumerate() {
                    mat[(i, j)] = c;
                }
            }
        }
        Family::HermC => {
            let u = haar_u::<S>(algebra.r, rng);
            for j in 0..n {
                let mut coords = vec![zero; n];
                coords[j] = Complex::new(S::one(), S::zero());
                let b = ComplexElement::from_coords(algebra, coords).unwrap();
                let img =
                    ComplexElement::from_matrix(algebra, &(&u * b.to_matrix() * u.adjoint()));
                for (i, &c) in img.coords().iter().enumerate() {
                    mat[(i, j)] = c;
                }
            }
        }
        Family::Spin => {
            let o = haar_so::<S>(n - 1, rng);
            mat[(0, 0)] = Complex::new(S::one(), S::zero());
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    mat[(i + 1, j + 1)] = Complex::new(o[(i, j)], S::zero());
                }
            }
        }
    }
    LinearMap { algebra, mat }
}

/// The pinned standard Jordan frame: E_jj for the matrix families,
/// {½(1, ±ê₁)} for the spin factor.
pub fn standard_frame<S: Scalar>(algebra: Algebra) -> Vec<Element<S>> {
    match algebra.family {
        Family::SymR | Family::HermC => (0..algebra.r)
            .map(|j| {
                let mut coords = vec![S::zero(); algebra.n];
                coords[j] = S::one();
                Element::from_coords(algebra, coords).unwrap()
            })
            .collect(),
        Family::Spin => {
            let half = sc::<S>(0.5);
            [S::one(), -S::one()]
                .iter()
                .map(|&s| {
                    let mut parts = vec![Complex::new(half, S::zero())];
                    parts.push(Complex::new(s * half, S::zero()));
                    parts.extend(vec![
                        Complex::new(S::zero(), S::zero());
                        algebra.n - 2
                    ]);
                    ComplexElement::from_spin_parts(algebra, &parts).re_part()
                })
                .collect()
        }
    }
}

/// Apply a random element of K (triple-system automorphisms) to z. The
/// realized subgroups are z ↦ uzuᵀ (SymR), z ↦ uzv* (HermC), and the
/// phase-rotation e^{iθ}·SO(n) in the coordinates diagonalizing Δ as a sum
/// of squares (spin). Singular values are preserved exactly.
pub fn k_rotate<S: Scalar>(z: &ComplexElement<S>, rng: &mut impl Rng) -> ComplexElement<S> {
    let alg = z.algebra;
    match alg.family {
        Family::SymR => {
            let u = haar_u::<S>(alg.r, rng);
            ComplexElement::from_matrix(alg, &(&u * z.to_matrix() * u.transpose()))
        }
        Family::HermC => {
            let u = haar_u::<S>(alg.r, rng);
            let v = haar_u::<S>(alg.r, rng);
            ComplexElement::from_matrix(alg, &(&u * z.to_matrix() * v.adjoint()))
        }
        Family::Spin => {
            // ζ₀ = z₀, ζ_j = i z_j turns Δ into ζ₀² + Σζ_j²; K acts there as
            // e^{iθ}·SO(n).
            let (z0, zv) = z.spin_parts();
            let i = Complex::new(S::zero(), S::one());
            let mut zeta = vec![z0];
            zeta.extend(zv.iter().map(|&c| i * c));
            let o = haar_so::<S>(alg.n, rng);
            let theta = sc::<S>(rng.gen::<f64>() * std::f64::consts::TAU);
            let phase = Complex::new(theta.cos(), theta.sin());
            let rotated: Vec<Cplx<S>> = (0..alg.n)
                .map(|r| {
                    let mut acc = Complex::new(S::zero(), S::zero());
                    for (c, &zc) in zeta.iter().enumerate() {
                        acc += Complex::new(o[(r, c)], S::zero()) * zc;
                    }
                    acc * phase
                })
                .collect();
            let mut parts = vec![rotated[0]];
            parts.extend(rotated[1..].iter().map(|&c| -i * c));
            ComplexElement::from_spin_parts(alg, &parts)
        }
    }
}
