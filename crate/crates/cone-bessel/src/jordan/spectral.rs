//! Spectral and singular decompositions, p-norms, domain membership,
//! inverses, cone square roots and Jordan eigenvalues.

use nalgebra::DMatrix;
use num_complex::Complex;

use super::element::{Algebra, ComplexElement, Element, Family};
use super::CONE_SLACK;
use crate::error::{Error, Result};
use crate::scalar::{sc, Cplx, Scalar};

/// Ordered eigenvalues (real case) or singular values (complex case), with
/// the Jordan frame when one is available.
#[derive(Clone, Debug)]
pub struct SpectralData<S: Scalar> {
    /// t₁ ≥ … ≥ t_r.
    pub values: Vec<S>,
    /// Real case: primitive idempotents c_j with x = Σ t_j c_j.
    pub frame: Option<Vec<Element<S>>>,
}

impl<S: Scalar> SpectralData<S> {
    /// Σ t_j c_j; panics without a frame.
    pub fn reconstruct(&self, algebra: Algebra) -> Element<S> {
        let frame = self.frame.as_ref().expect("no frame available");
        let mut x = Element::zero(algebra);
        for (t, c) in self.values.iter().zip(frame) {
            x = x.add(&c.scale(*t)).unwrap();
        }
        x
    }
}

fn sort_desc_with_frame<S: Scalar>(values: &mut [S], frame: &mut [Element<S>]) {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap());
    let v0 = values.to_vec();
    let f0 = frame.to_vec();
    for (pos, &i) in idx.iter().enumerate() {
        values[pos] = v0[i];
        frame[pos] = f0[i].clone();
    }
}

/// Spectral decomposition of a real element: x = Σ t_j c_j with a complete
/// orthogonal system of primitive idempotents.
pub fn spectral<S: Scalar>(x: &Element<S>) -> SpectralData<S> {
    let alg = x.algebra;
    match alg.family {
        Family::SymR => {
            let zc = x.complexify().to_matrix();
            let m = DMatrix::from_fn(alg.r, alg.r, |i, j| zc[(i, j)].re);
            let eig = m.symmetric_eigen();
            let mut values: Vec<S> = eig.eigenvalues.iter().copied().collect();
            let mut frame: Vec<Element<S>> = (0..alg.r)
                .map(|j| {
                    let v = eig.eigenvectors.column(j);
                    let proj =
                        DMatrix::from_fn(alg.r, alg.r, |a, b| Complex::new(v[a] * v[b], S::zero()));
                    ComplexElement::from_matrix(alg, &proj).re_part()
                })
                .collect();
            sort_desc_with_frame(&mut values, &mut frame);
            SpectralData {
                values,
                frame: Some(frame),
            }
        }
        Family::HermC => {
            let m = x.complexify().to_matrix();
            let eig = m.symmetric_eigen();
            let mut values: Vec<S> = eig.eigenvalues.iter().copied().collect();
            let mut frame: Vec<Element<S>> = (0..alg.r)
                .map(|j| {
                    let v = eig.eigenvectors.column(j);
                    let proj = DMatrix::from_fn(alg.r, alg.r, |a, b| v[a] * v[b].conj());
                    ComplexElement::from_matrix(alg, &proj).re_part()
                })
                .collect();
            sort_desc_with_frame(&mut values, &mut frame);
            SpectralData {
                values,
                frame: Some(frame),
            }
        }
        Family::Spin => {
            let (x0, xv) = x.spin_parts();
            let norm = xv.iter().fold(S::zero(), |a, &c| a + c * c).sqrt();
            let half = sc::<S>(0.5);
            let dir: Vec<S> = if norm > sc(1e-300) {
                xv.iter().map(|&c| c / norm).collect()
            } else {
                // Degenerate x⃗ = 0: the pinned ê₁ frame.
                let mut d = vec![S::zero(); alg.n - 1];
                d[0] = S::one();
                d
            };
            let mk = |sign: S| {
                let mut parts = vec![half];
                parts.extend(dir.iter().map(|&u| sign * half * u));
                let pc: Vec<Cplx<S>> = parts
                    .iter()
                    .map(|&p| Complex::new(p, S::zero()))
                    .collect();
                ComplexElement::from_spin_parts(alg, &pc).re_part()
            };
            SpectralData {
                values: vec![x0 + norm, x0 - norm],
                frame: Some(vec![mk(S::one()), mk(-S::one())]),
            }
        }
    }
}

/// Singular values t₁ ≥ … ≥ t_r ≥ 0 of a complex element (the spectral
/// parameters of the K-decomposition z = k Σ t_j c_j).
pub fn singular<S: Scalar>(z: &ComplexElement<S>) -> SpectralData<S> {
    let alg = z.algebra;
    let values = match (alg.r, alg.family) {
        (1, _) => vec![crate::scalar::cnorm(z.coords()[0])],
        (2, _) => rank2_singular(z),
        (_, Family::SymR) | (_, Family::HermC) => {
            let m = z.to_matrix();
            let h = m.adjoint() * &m;
            let eig = h.symmetric_eigen();
            let mut v: Vec<S> = eig
                .eigenvalues
                .iter()
                .map(|&t| t.max(S::zero()).sqrt())
                .collect();
            v.sort_by(|a, b| b.partial_cmp(a).unwrap());
            v
        }
        _ => unreachable!("spin factors have rank 2"),
    };
    SpectralData {
        values,
        frame: None,
    }
}

/// Rank-two singular values from the invariants: t² are the roots of
/// μ² − (z|z)μ + |Δ(z)|² = 0. The discriminant q² − |Δ|² cancels near
/// degenerate values, so both invariants are formed in double-double from
/// the raw coordinates (Δ is an exact rational quadratic in them for every
/// rank-two family).
fn rank2_singular<S: Scalar>(z: &ComplexElement<S>) -> Vec<S> {
    use crate::dd::{CDd, Dd};
    let c: Vec<CDd> = z
        .coords()
        .iter()
        .map(|&x| CDd::new(
            Dd::from_f64(x.re.to_f64().unwrap()),
            Dd::from_f64(x.im.to_f64().unwrap()),
        ))
        .collect();
    let half = Dd { hi: 0.5, lo: 0.0 };
    let mut q = Dd::ZERO;
    for ci in &c {
        q = q + ci.re * ci.re + ci.im * ci.im;
    }
    q = q * half;
    let delta = match z.algebra.family {
        Family::SymR => c[0] * c[1] - (c[2] * c[2]).scale_re(half),
        Family::HermC => c[0] * c[1] - (c[2] * c[2] + c[3] * c[3]).scale_re(half),
        Family::Spin => {
            let mut s = c[0] * c[0];
            for ci in &c[1..] {
                s = s - *ci * *ci;
            }
            s.scale_re(half)
        }
    };
    let p = delta.re * delta.re + delta.im * delta.im;
    let disc_dd = q * q - p;
    let disc = disc_dd.to_f64().max(0.0).sqrt();
    let qf = q.to_f64();
    let t1 = (qf + disc).max(0.0).sqrt();
    let t2 = (qf - disc).max(0.0).sqrt();
    vec![sc(t1), sc(t2)]
}

/// The p-norm |z|_p = ℓ^p norm of the singular values, 1 ≤ p ≤ ∞.
pub fn pnorm<S: Scalar>(z: &ComplexElement<S>, p: f64) -> S {
    assert!(p >= 1.0, "p-norm requires p ≥ 1");
    let sv = singular(z).values;
    if p.is_infinite() {
        return sv[0];
    }
    if (p - 2.0).abs() < 1e-15 {
        return z.norm2();
    }
    let pe = sc::<S>(p);
    sv.iter()
        .fold(S::zero(), |a, &t| a + t.powf(pe))
        .powf(S::one() / pe)
}

/// w ∈ D ⟺ |w|_∞ < 1.
pub fn in_domain_d<S: Scalar>(w: &ComplexElement<S>) -> bool {
    pnorm(w, f64::INFINITY) < S::one()
}

/// Jordan inverse of a complex element.
pub fn inverse<S: Scalar>(z: &ComplexElement<S>) -> Result<ComplexElement<S>> {
    let sv = singular(z).values;
    let smin = sv[sv.len() - 1];
    let smax = sv[0].max(S::one());
    if smin <= sc::<S>(1e-12) * smax {
        return Err(Error::SingularElement((smin / smax).to_f64().unwrap()));
    }
    match z.algebra.family {
        Family::SymR | Family::HermC => {
            let m = z.to_matrix();
            let inv = m
                .try_inverse()
                .ok_or(Error::SingularElement(0.0))?;
            Ok(ComplexElement::from_matrix(z.algebra, &inv))
        }
        Family::Spin => {
            let (z0, zv) = z.spin_parts();
            let det = z.det();
            let mut parts = vec![z0 / det];
            parts.extend(zv.iter().map(|&c| -c / det));
            Ok(ComplexElement::from_spin_parts(z.algebra, &parts))
        }
    }
}

/// Inverse of a real element through its spectral data (t_j → 1/t_j on the
/// frame).
pub fn inverse_real<S: Scalar>(x: &Element<S>) -> Result<Element<S>> {
    let sp = spectral(x);
    let scale = sp.values.iter().fold(S::zero(), |a, &t| a.max(t.abs()));
    let mut out = Element::zero(x.algebra);
    for (t, c) in sp.values.iter().zip(sp.frame.as_ref().unwrap()) {
        if t.abs() <= sc::<S>(1e-12) * scale.max(S::one()) {
            return Err(Error::SingularElement((*t / scale).to_f64().unwrap()));
        }
        out = out.add(&c.scale(S::one() / *t))?;
    }
    Ok(out)
}

/// Square root inside the open cone Ω; boundary elements are rejected, not
/// clamped (silent clamping would corrupt kernel evaluations downstream).
pub fn sqrt_cone<S: Scalar>(x: &Element<S>) -> Result<Element<S>> {
    let sp = spectral(x);
    let scale = sp.values[0].abs().max(S::one());
    let slack = sc::<S>(CONE_SLACK) * scale;
    let mut out = Element::zero(x.algebra);
    for (t, c) in sp.values.iter().zip(sp.frame.as_ref().unwrap()) {
        if *t <= slack {
            return Err(Error::NotInCone(t.to_f64().unwrap_or(f64::NAN)));
        }
        out = out.add(&c.scale(t.sqrt()))?;
    }
    Ok(out)
}

/// Integer powers x^k (power-associativity makes binary exponentiation
/// valid); negative k goes through the inverse.
pub fn power_int<S: Scalar>(z: &ComplexElement<S>, k: i32) -> Result<ComplexElement<S>> {
    if k < 0 {
        return power_int(&inverse(z)?, -k);
    }
    let mut acc = ComplexElement::unit(z.algebra);
    let mut base = z.clone();
    let mut e = k as u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.product(&base)?;
        }
        base = base.square();
        e >>= 1;
    }
    Ok(acc)
}

/// Roots of the characteristic polynomial s ↦ Δ(s·e − z), with multiplicity.
pub fn jordan_eigenvalues<S: Scalar>(z: &ComplexElement<S>) -> Vec<Cplx<S>> {
    let alg = z.algebra;
    match alg.family {
        Family::Spin => {
            let (z0, zv) = z.spin_parts();
            let sq = zv
                .iter()
                .fold(Complex::new(S::zero(), S::zero()), |a, &c| a + c * c);
            let root = crate::scalar::from_c64(crate::scalar::c64(sq).sqrt());
            vec![z0 + root, z0 - root]
        }
        Family::SymR | Family::HermC => {
            if alg.r == 1 {
                return vec![z.coords()[0]];
            }
            let m = z.to_matrix();
            if alg.r == 2 {
                // s² − tr·s + det
                let tr = crate::scalar::c64(m[(0, 0)] + m[(1, 1)]);
                let det = crate::scalar::c64(super::element::det_small(&m));
                let disc = (tr * tr - 4.0 * det).sqrt();
                // pick the root pairing that avoids cancellation
                let q = if (tr + disc).norm() >= (tr - disc).norm() {
                    (tr + disc) * 0.5
                } else {
                    (tr - disc) * 0.5
                };
                let other = if q.norm() > 0.0 { det / q } else { q };
                return vec![
                    crate::scalar::from_c64(q),
                    crate::scalar::from_c64(other),
                ];
            }
            let m64 = DMatrix::from_fn(alg.r, alg.r, |i, j| crate::scalar::c64(m[(i, j)]));
            let coeffs = char_poly(&m64);
            let roots = durand_kerner(&coeffs);
            roots.into_iter().map(crate::scalar::from_c64).collect()
        }
    }
}

/// Monic characteristic polynomial coefficients by Faddeev–LeVerrier:
/// returns [a_0, …, a_{r−1}] with p(s) = s^r + a_{r−1}s^{r−1} + … + a_0.
pub(crate) fn char_poly(m: &DMatrix<Complex<f64>>) -> Vec<Complex<f64>> {
    let r = m.nrows();
    let id = DMatrix::<Complex<f64>>::identity(r, r);
    let mut mk = m.clone();
    let mut coeffs = vec![Complex::new(0.0, 0.0); r];
    let mut ck;
    for k in 1..=r {
        ck = -mk.trace() / (k as f64);
        coeffs[r - k] = ck;
        if k < r {
            mk = m * (&mk + &id * ck);
        }
    }
    coeffs
}

/// All roots of a monic complex polynomial by Durand–Kerner iteration.
pub(crate) fn durand_kerner(coeffs: &[Complex<f64>]) -> Vec<Complex<f64>> {
    let deg = coeffs.len();
    if deg == 0 {
        return vec![];
    }
    let eval = |z: Complex<f64>| -> Complex<f64> {
        let mut p = Complex::new(1.0, 0.0);
        for &a in coeffs.iter().rev() {
            p = p * z + a;
        }
        p
    };
    let radius = 1.0 + coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex::new(0.4, 0.9);
    let mut roots: Vec<Complex<f64>> = (0..deg)
        .map(|k| seed.powu(k as u32 + 1) * radius)
        .collect();
    for _ in 0..500 {
        let mut shift = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            shift = shift.max(delta.norm());
        }
        if shift < 1e-14 * radius {
            break;
        }
    }
    roots
}
