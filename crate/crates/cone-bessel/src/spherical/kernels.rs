//! Spherical polynomials Φ_m, the Fischer reproducing kernels K^m, and the
//! module dimensions d_m, all computed through the Jack engine with
//! α = 2/d: d_m/(n/r)_m · Φ_m(x) = C_m^{(α)}(eigenvalues of x)/|m|!.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::jordan::{jordan_eigenvalues, Algebra, ComplexElement, Family};
use crate::scalar::{c64, Scalar};

use super::jack::{table_for, JackTable};
use super::partition::Partition;
use super::poch::poch_scalar;

type C64 = Complex<f64>;

fn ln_factorial(k: usize) -> f64 {
    crate::special::lgamma_real(k as f64 + 1.0)
}

/// Φ_m(z) = C_m^{(α)}(eig z) / C_m^{(α)}(1,…,1); Φ_m(e) = 1.
pub fn phi_m<S: Scalar>(
    table: &JackTable,
    m: &Partition,
    z: &ComplexElement<S>,
) -> Result<C64> {
    let idx = table.partition_index(m)?;
    let eig: Vec<C64> = jordan_eigenvalues(z).iter().map(|&c| c64(c)).collect();
    let val = table.eval_one(m, &eig)?;
    Ok(val / table.c_at_ones(idx))
}

/// Convenience wrapper building/fetching the table for the algebra.
pub fn phi_m_auto<S: Scalar>(m: &Partition, z: &ComplexElement<S>) -> Result<C64> {
    let table = table_for(z.algebra, m.weight());
    phi_m(&table, m, z)
}

/// The joint spectrum feeding K^m(z,w): eigenvalues of z·w̄ in the matrix
/// view (w̄ is entrywise conjugation for SymR and the conjugate transpose
/// for HermC), and for rank two any family the roots of
/// μ² − (z|w)μ + Δ(z)·conj(Δ(w)).
pub fn pair_spectrum<S: Scalar>(
    z: &ComplexElement<S>,
    w: &ComplexElement<S>,
) -> Result<Vec<C64>> {
    if z.algebra != w.algebra {
        return Err(Error::AlgebraMismatch(z.algebra.id(), w.algebra.id()));
    }
    let alg = z.algebra;
    if alg.r == 1 {
        return Ok(vec![c64(z.coords()[0] * w.coords()[0].conj())]);
    }
    if alg.r == 2 {
        let s = c64(z.inner(w)?);
        let p = c64(z.det()) * c64(w.det()).conj();
        let disc = (s * s - 4.0 * p).sqrt();
        let q = if (s + disc).norm() >= (s - disc).norm() {
            (s + disc) * 0.5
        } else {
            (s - disc) * 0.5
        };
        let other = if q.norm() > 0.0 { p / q } else { q };
        return Ok(vec![q, other]);
    }
    match alg.family {
        Family::SymR | Family::HermC => {
            let m = z.to_matrix() * w.conj().to_matrix();
            let m64 =
                nalgebra::DMatrix::from_fn(alg.r, alg.r, |i, j| c64(m[(i, j)]));
            let coeffs = crate::jordan::char_poly_pub(&m64);
            Ok(crate::jordan::poly_roots_pub(&coeffs))
        }
        Family::Spin => unreachable!("spin factors have rank 2"),
    }
}

/// K^m(z,w) = C_m^{(α)}(pair spectrum of (z,w)) / |m|!.
pub fn kernel_km<S: Scalar>(
    table: &JackTable,
    m: &Partition,
    z: &ComplexElement<S>,
    w: &ComplexElement<S>,
) -> Result<C64> {
    table.partition_index(m)?;
    let spec = pair_spectrum(z, w)?;
    let val = table.eval_one(m, &spec)?;
    Ok(val * (-ln_factorial(m.weight())).exp())
}

/// Convenience wrapper building/fetching the table for the algebra.
pub fn kernel_km_auto<S: Scalar>(
    m: &Partition,
    z: &ComplexElement<S>,
    w: &ComplexElement<S>,
) -> Result<C64> {
    let table = table_for(z.algebra, m.weight());
    kernel_km(&table, m, z, w)
}

/// d_m = dim 𝒫_m(V^ℂ) = (n/r)_m · C_m(1,…,1)/|m|!. Must come out a positive
/// integer; a failure signals an engine/convention inconsistency.
pub fn dim_dm(table: &JackTable, m: &Partition, alg: Algebra) -> Result<f64> {
    let idx = table.partition_index(m)?;
    let nr = C64::new(alg.n_over_r(), 0.0);
    let poch = poch_scalar(nr, m, alg.d).re;
    let val = poch * table.c_at_ones(idx) * (-ln_factorial(m.weight())).exp();
    let rounded = val.round();
    if (val - rounded).abs() > 1e-8 * val.abs().max(1.0) || rounded < 1.0 {
        return Err(Error::NonIntegerDimension(val));
    }
    Ok(rounded)
}

/// Table accessor re-exported for callers that batch evaluations.
pub fn spherical_table(alg: Algebra, max_weight: usize) -> Arc<JackTable> {
    table_for(alg, max_weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{Element, k_rotate};
    use rand::{Rng, SeedableRng};

    type Z = ComplexElement<f64>;

    fn rng() -> rand_chacha::ChaCha8Rng {
        rand_chacha::ChaCha8Rng::seed_from_u64(21)
    }

    fn random_complex(alg: Algebra, rng: &mut impl Rng, scale: f64) -> Z {
        Z::from_coords(
            alg,
            (0..alg.n)
                .map(|_| {
                    Complex::new(
                        (rng.gen::<f64>() - 0.5) * scale,
                        (rng.gen::<f64>() - 0.5) * scale,
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    const ALGS: [fn() -> Algebra; 5] = [
        Algebra::real_line,
        || Algebra::sym_r(2),
        || Algebra::herm_c(2),
        || Algebra::spin(3),
        || Algebra::spin(5),
    ];

    #[test]
    fn phi_at_unit_is_one() {
        for mk in ALGS {
            let alg = mk();
            let table = table_for(alg, 6);
            let e = Z::unit(alg);
            for m in crate::spherical::partitions_upto(alg.r, 4) {
                let v = phi_m(&table, &m, &e).unwrap();
                assert!(
                    (v - C64::new(1.0, 0.0)).norm() < 1e-11,
                    "{} Φ_{m}(e) = {v}",
                    alg.id()
                );
            }
        }
    }

    #[test]
    fn phi_homogeneity() {
        let mut rng = rng();
        for mk in ALGS {
            let alg = mk();
            let table = table_for(alg, 6);
            let z = random_complex(alg, &mut rng, 1.0);
            let c = Complex::new(0.7, -0.4);
            let zc = z.scale(c);
            for m in crate::spherical::partitions_upto(alg.r, 4) {
                let a = phi_m(&table, &m, &z).unwrap();
                let b = phi_m(&table, &m, &zc).unwrap();
                let want = a * c64(c).powu(m.weight() as u32);
                assert!(
                    (b - want).norm() <= 1e-9 * want.norm().max(1e-8),
                    "{} Φ_{m}: {b} vs {want}",
                    alg.id()
                );
            }
        }
    }

    #[test]
    fn exp_kernel_expansion() {
        // Σ_m K^m(z,w) → e^{(z|w)} with a decaying tail for |z|,|w| ≤ 1.
        let mut rng = rng();
        for mk in ALGS {
            let alg = mk();
            let table = table_for(alg, 24);
            for _ in 0..3 {
                let z = random_complex(alg, &mut rng, 0.8);
                let w = random_complex(alg, &mut rng, 0.8);
                let spec = pair_spectrum(&z, &w).unwrap();
                let vals: Vec<C64> = table.eval_all(&spec, 24);
                let mut total = C64::new(0.0, 0.0);
                for (i, p) in table.parts().iter().enumerate().take(vals.len()) {
                    total += vals[i] * (-ln_factorial(p.weight())).exp();
                }
                let want = c64(z.inner(&w).unwrap()).exp();
                assert!(
                    (total - want).norm() <= 1e-10 * want.norm().max(1.0),
                    "{}: {total} vs {want}",
                    alg.id()
                );
            }
        }
    }

    #[test]
    fn kernel_hermitian_symmetry() {
        let mut rng = rng();
        for mk in ALGS {
            let alg = mk();
            let table = table_for(alg, 6);
            let z = random_complex(alg, &mut rng, 1.2);
            let w = random_complex(alg, &mut rng, 1.2);
            for m in crate::spherical::partitions_upto(alg.r, 4) {
                let a = kernel_km(&table, &m, &z, &w).unwrap();
                let b = kernel_km(&table, &m, &w, &z).unwrap();
                assert!(
                    (a - b.conj()).norm() <= 1e-10 * a.norm().max(1e-10),
                    "{} K^{m}: {a} vs conj {b}",
                    alg.id()
                );
            }
        }
    }

    #[test]
    fn kernel_diagonal_squares() {
        // K^m(x, x̄) = K^m(x², e) on random complex x.
        let mut rng = rng();
        for mk in ALGS {
            let alg = mk();
            let table = table_for(alg, 6);
            let e = Z::unit(alg);
            for _ in 0..5 {
                let x = random_complex(alg, &mut rng, 1.0);
                for m in crate::spherical::partitions_upto(alg.r, 4) {
                    let a = kernel_km(&table, &m, &x, &x.conj()).unwrap();
                    let b = kernel_km(&table, &m, &x.square(), &e).unwrap();
                    assert!(
                        (a - b).norm() <= 1e-8 * a.norm().max(1e-10),
                        "{} K^{m}: {a} vs {b}",
                        alg.id()
                    );
                }
            }
        }
    }

    #[test]
    fn dims_are_integers_and_grade_correctly() {
        // Σ_{|m|=k} d_m = C(n+k−1, k), the dimension of degree-k polynomials.
        fn binom(n: usize, k: usize) -> f64 {
            let mut v = 1.0f64;
            for i in 0..k {
                v = v * (n + k - 1 - i) as f64 / (k - i) as f64;
            }
            v
        }
        for mk in ALGS {
            let alg = mk();
            let table = table_for(alg, 6);
            for k in 0..=5usize {
                let mut total = 0.0;
                for m in crate::spherical::partitions_upto(alg.r, k) {
                    if m.weight() == k {
                        total += dim_dm(&table, &m, alg).unwrap();
                    }
                }
                let want = binom(alg.n, k);
                assert!(
                    (total - want).abs() < 1e-6,
                    "{} k={k}: Σ d_m = {total}, want {want}",
                    alg.id()
                );
            }
        }
    }

    #[test]
    fn dim_known_values() {
        let alg = Algebra::herm_c(2);
        let table = table_for(alg, 4);
        assert_eq!(dim_dm(&table, &Partition::new(&[1]), alg).unwrap(), 4.0);
        assert_eq!(dim_dm(&table, &Partition::empty(), alg).unwrap(), 1.0);
        // Sym(2,ℝ): d_(1) = 3, d_(1,1) = 1 (the determinant line)
        let alg = Algebra::sym_r(2);
        let table = table_for(alg, 4);
        assert_eq!(dim_dm(&table, &Partition::new(&[1]), alg).unwrap(), 3.0);
        assert_eq!(dim_dm(&table, &Partition::new(&[1, 1]), alg).unwrap(), 1.0);
    }

    #[test]
    fn phi_invariant_under_k_rotation_of_real_elements() {
        // Φ_m is K_L-invariant; k_rotate preserves singular data so real
        // elements conjugated by automorphisms keep Φ_m on cone elements.
        let mut rng = rng();
        let alg = Algebra::sym_r(2);
        let table = table_for(alg, 6);
        let x = {
            let g = random_complex(alg, &mut rng, 1.0).re_part();
            g.square().add(&Element::unit(alg).scale(0.3)).unwrap()
        };
        let k = crate::jordan::haar_kl_sample::<f64>(alg, &mut rng);
        let kx = k.apply(&x.complexify());
        for m in crate::spherical::partitions_upto(alg.r, 4) {
            let a = phi_m(&table, &m, &x.complexify()).unwrap();
            let b = phi_m(&table, &m, &kx).unwrap();
            assert!((a - b).norm() <= 1e-9 * a.norm().max(1e-10));
        }
        // and under full K rotations the singular values (hence Φ_m on
        // squares of cone elements) are stable
        let z = random_complex(alg, &mut rng, 1.0);
        let kz = k_rotate(&z, &mut rng);
        let sa = crate::jordan::singular(&z).values;
        let sb = crate::jordan::singular(&kz).values;
        for (a, b) in sa.iter().zip(&sb) {
            assert!((a - b).abs() < 1e-10);
        }
    }
}
