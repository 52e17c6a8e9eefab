//! Structure maps as dense operators on coordinates: L(x), x□y, P(x),
//! P(x,z), B(x,y), the generic norm h, and the quadratic sandwich
//! P(x^{1/2})y.

use nalgebra::DMatrix;
use num_complex::Complex;

use super::element::{det_small, Algebra, ComplexElement, Element};
use super::spectral::spectral;
use super::CONE_SLACK;
use crate::error::{Error, Result};
use crate::scalar::{sc, Cplx, Scalar};

/// A complex-linear operator on V^ℂ in the fixed coordinates.
#[derive(Clone, Debug)]
pub struct LinearMap<S: Scalar> {
    pub algebra: Algebra,
    pub mat: DMatrix<Cplx<S>>,
}

impl<S: Scalar> LinearMap<S> {
    pub fn identity(algebra: Algebra) -> Self {
        LinearMap {
            algebra,
            mat: DMatrix::from_diagonal_element(
                algebra.n,
                algebra.n,
                Complex::new(S::one(), S::zero()),
            ),
        }
    }

    pub fn apply(&self, z: &ComplexElement<S>) -> ComplexElement<S> {
        assert_eq!(self.algebra, z.algebra);
        let v = nalgebra::DVector::from_column_slice(z.coords());
        let w = &self.mat * v;
        ComplexElement::from_coords(self.algebra, w.iter().copied().collect()).unwrap()
    }

    /// Apply to a real element; the result may be complex in general, so the
    /// caller decides whether to project.
    pub fn apply_real(&self, x: &Element<S>) -> ComplexElement<S> {
        self.apply(&x.complexify())
    }

    pub fn compose(&self, other: &LinearMap<S>) -> LinearMap<S> {
        LinearMap {
            algebra: self.algebra,
            mat: &self.mat * &other.mat,
        }
    }

    pub fn add(&self, other: &LinearMap<S>) -> LinearMap<S> {
        LinearMap {
            algebra: self.algebra,
            mat: &self.mat + &other.mat,
        }
    }

    pub fn sub(&self, other: &LinearMap<S>) -> LinearMap<S> {
        LinearMap {
            algebra: self.algebra,
            mat: &self.mat - &other.mat,
        }
    }

    pub fn scale(&self, a: Cplx<S>) -> LinearMap<S> {
        LinearMap {
            algebra: self.algebra,
            mat: self.mat.map(|m| m * a),
        }
    }

    /// Operator trace.
    pub fn op_trace(&self) -> Cplx<S> {
        let mut t = Complex::new(S::zero(), S::zero());
        for i in 0..self.mat.nrows() {
            t += self.mat[(i, i)];
        }
        t
    }

    /// Operator determinant.
    pub fn det(&self) -> Cplx<S> {
        if self.mat.nrows() <= 3 {
            det_small(&self.mat)
        } else {
            self.mat.clone().lu().determinant()
        }
    }
}

/// L(x): multiplication operator y ↦ x∘y, built column-by-column.
pub fn op_l<S: Scalar>(x: &ComplexElement<S>) -> LinearMap<S> {
    let alg = x.algebra;
    let n = alg.n;
    let zero = Complex::new(S::zero(), S::zero());
    let mut mat = DMatrix::from_element(n, n, zero);
    for j in 0..n {
        let mut coords = vec![zero; n];
        coords[j] = Complex::new(S::one(), S::zero());
        let basis = ComplexElement::from_coords(alg, coords).unwrap();
        let col = x.product(&basis).unwrap();
        for (i, &c) in col.coords().iter().enumerate() {
            mat[(i, j)] = c;
        }
    }
    LinearMap { algebra: alg, mat }
}

/// x□y = L(x∘y) + [L(x), L(y)]. No conjugation: callers conjugate explicitly
/// where the formulas require x□ȳ.
pub fn op_box<S: Scalar>(x: &ComplexElement<S>, y: &ComplexElement<S>) -> Result<LinearMap<S>> {
    if x.algebra != y.algebra {
        return Err(Error::AlgebraMismatch(x.algebra.id(), y.algebra.id()));
    }
    let lxy = op_l(&x.product(y)?);
    let lx = op_l(x);
    let ly = op_l(y);
    Ok(lxy.add(&lx.compose(&ly)).sub(&ly.compose(&lx)))
}

/// Quadratic representation P(x) = 2L(x)² − L(x²).
pub fn op_p<S: Scalar>(x: &ComplexElement<S>) -> LinearMap<S> {
    let lx = op_l(x);
    let lx2 = op_l(&x.square());
    let two = Complex::new(sc::<S>(2.0), S::zero());
    lx.compose(&lx).scale(two).sub(&lx2)
}

/// Polarized quadratic representation P(x,z) = L(x)L(z) + L(z)L(x) − L(x∘z).
pub fn op_p2<S: Scalar>(x: &ComplexElement<S>, z: &ComplexElement<S>) -> Result<LinearMap<S>> {
    if x.algebra != z.algebra {
        return Err(Error::AlgebraMismatch(x.algebra.id(), z.algebra.id()));
    }
    let lx = op_l(x);
    let lz = op_l(z);
    let lxz = op_l(&x.product(z)?);
    Ok(lx.compose(&lz).add(&lz.compose(&lx)).sub(&lxz))
}

/// Bergman operator B(x,y) = I − 2 x□ȳ + P(x)P(ȳ).
pub fn op_b<S: Scalar>(x: &ComplexElement<S>, y: &ComplexElement<S>) -> Result<LinearMap<S>> {
    if x.algebra != y.algebra {
        return Err(Error::AlgebraMismatch(x.algebra.id(), y.algebra.id()));
    }
    let yc = y.conj();
    let bx = op_box(x, &yc)?;
    let p = op_p(x).compose(&op_p(&yc));
    let two = Complex::new(sc::<S>(2.0), S::zero());
    Ok(LinearMap::identity(x.algebra).sub(&bx.scale(two)).add(&p))
}

/// Generic norm on the diagonal: h(w,w) = (Det B(w,w))^{r/2n}, the positive
/// real root. Raises `OutsideDomain` when Det B(w,w) ≤ 0.
pub fn generic_norm_h<S: Scalar>(w: &ComplexElement<S>) -> Result<S> {
    let alg = w.algebra;
    let det = op_b(w, w)?.det();
    let tol = sc::<S>(1e-8) * (det.norm_sqr().sqrt() + S::one());
    if det.im.abs() > tol {
        return Err(Error::OutsideDomain);
    }
    if det.re <= S::zero() {
        return Err(Error::OutsideDomain);
    }
    let expo = sc::<S>(alg.r as f64 / (2.0 * alg.n as f64));
    Ok(det.re.powf(expo))
}

/// P(x^{1/2})y for x in the closed cone. Eigenvalues of x within the cone
/// slack of zero are clamped; anything below raises `NotInCone`.
pub fn sandwich<S: Scalar>(x: &Element<S>, y: &ComplexElement<S>) -> Result<ComplexElement<S>> {
    if x.algebra != y.algebra {
        return Err(Error::AlgebraMismatch(x.algebra.id(), y.algebra.id()));
    }
    let sp = spectral(x);
    let scale = sp.values[0].abs().max(S::one());
    let slack = sc::<S>(CONE_SLACK) * scale;
    let mut root = Element::zero(x.algebra);
    let frame = sp.frame.as_ref().expect("real spectral data has a frame");
    for (t, c) in sp.values.iter().zip(frame) {
        if *t < -slack {
            return Err(Error::NotInCone(t.to_f64().unwrap_or(f64::NAN)));
        }
        let tc = t.max(S::zero()).sqrt();
        root = root.add(&c.scale(tc))?;
    }
    Ok(op_p(&root.complexify()).apply(y))
}

/// Real-output variant of [`sandwich`] for a real second argument.
pub fn sandwich_real<S: Scalar>(x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
    Ok(sandwich(x, &y.complexify())?.re_part())
}
