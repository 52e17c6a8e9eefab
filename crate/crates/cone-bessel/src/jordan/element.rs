//! Algebra descriptors and elements.

use nalgebra::DMatrix;
use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{sc, Cplx, Scalar};

/// The simple Euclidean Jordan algebra families supported by this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Real symmetric matrices Sym(r, ℝ), Peirce parameter d = 1.
    SymR,
    /// Complex Hermitian matrices Herm(r, ℂ), d = 2.
    HermC,
    /// Spin factor ℝ^{1,n−1}, rank 2, d = n − 2.
    Spin,
}

/// Which simple algebra: family, rank r, real dimension n, Peirce d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    pub family: Family,
    pub r: usize,
    pub n: usize,
    pub d: usize,
}

impl Algebra {
    pub fn sym_r(r: usize) -> Algebra {
        assert!(r >= 1);
        Algebra {
            family: Family::SymR,
            r,
            n: r * (r + 1) / 2,
            d: 1,
        }
    }

    pub fn herm_c(r: usize) -> Algebra {
        assert!(r >= 1);
        Algebra {
            family: Family::HermC,
            r,
            n: r * r,
            d: 2,
        }
    }

    pub fn spin(n: usize) -> Algebra {
        assert!(n >= 3);
        Algebra {
            family: Family::Spin,
            r: 2,
            n,
            d: n - 2,
        }
    }

    /// V = ℝ, realized as Sym(1, ℝ).
    pub fn real_line() -> Algebra {
        Algebra::sym_r(1)
    }

    /// Jack parameter α = 2/d.
    pub fn alpha(&self) -> f64 {
        2.0 / self.d as f64
    }

    /// n/r as a float (= 1 + (r−1)d/2).
    pub fn n_over_r(&self) -> f64 {
        self.n as f64 / self.r as f64
    }

    /// Short id used by the CLI: `r`, `symr2`, `hermc3`, `spin4`, …
    pub fn id(&self) -> String {
        if self.family == Family::SymR && self.r == 1 {
            return "r".to_string();
        }
        match self.family {
            Family::SymR => format!("symr{}", self.r),
            Family::HermC => format!("hermc{}", self.r),
            Family::Spin => format!("spin{}", self.n),
        }
    }

    pub fn parse(s: &str) -> Result<Algebra> {
        let s = s.trim().to_ascii_lowercase();
        if s == "r" || s == "real" || s == "symr1" {
            return Ok(Algebra::real_line());
        }
        let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| {
            Error::InvalidParameter(format!("cannot parse algebra id {s:?}"))
        })?);
        let k: usize = tail
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("cannot parse algebra id {s:?}")))?;
        match head {
            "symr" => Ok(Algebra::sym_r(k)),
            "hermc" => Ok(Algebra::herm_c(k)),
            "spin" if k >= 3 => Ok(Algebra::spin(k)),
            _ => Err(Error::InvalidParameter(format!(
                "unknown algebra id {s:?} (expected r, symrN, hermcN or spinN)"
            ))),
        }
    }

    fn check_same(&self, other: &Algebra) -> Result<()> {
        if self != other {
            return Err(Error::AlgebraMismatch(self.id(), other.id()));
        }
        Ok(())
    }

    /// Index of the coordinate for matrix entry (j,k), j < k. The layout is
    /// diagonals first, then (j,k) pairs in lexicographic order; HermC has a
    /// (re, im) coordinate pair per off-diagonal slot.
    fn pair_index(&self, j: usize, k: usize) -> usize {
        debug_assert!(j < k && k < self.r);
        let mut idx = 0;
        for jj in 0..self.r {
            for kk in (jj + 1)..self.r {
                if (jj, kk) == (j, k) {
                    let stride = if self.family == Family::HermC { 2 } else { 1 };
                    return self.r + idx * stride;
                }
                idx += 1;
            }
        }
        unreachable!()
    }
}

/// A point of V in the fixed orthonormal coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Element<S: Scalar> {
    pub algebra: Algebra,
    coords: Vec<S>,
}

/// A point of V^ℂ: complex coordinates in the same real basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexElement<S: Scalar> {
    pub algebra: Algebra,
    coords: Vec<Cplx<S>>,
}

const SQRT2: f64 = std::f64::consts::SQRT_2;

impl<S: Scalar> Element<S> {
    pub fn from_coords(algebra: Algebra, coords: Vec<S>) -> Result<Self> {
        if coords.len() != algebra.n {
            return Err(Error::InvalidParameter(format!(
                "expected {} coordinates for {}, got {}",
                algebra.n,
                algebra.id(),
                coords.len()
            )));
        }
        Ok(Element { algebra, coords })
    }

    pub fn zero(algebra: Algebra) -> Self {
        Element {
            algebra,
            coords: vec![S::zero(); algebra.n],
        }
    }

    /// The unit element e.
    pub fn unit(algebra: Algebra) -> Self {
        let mut coords = vec![S::zero(); algebra.n];
        match algebra.family {
            Family::SymR | Family::HermC => {
                for c in coords.iter_mut().take(algebra.r) {
                    *c = S::one();
                }
            }
            Family::Spin => coords[0] = sc(SQRT2),
        }
        Element { algebra, coords }
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn complexify(&self) -> ComplexElement<S> {
        ComplexElement {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .map(|&x| Complex::new(x, S::zero()))
                .collect(),
        }
    }

    /// Real scalar trace.
    pub fn trace(&self) -> S {
        self.complexify().trace().re
    }

    pub fn det(&self) -> S {
        self.complexify().det().re
    }

    pub fn inner(&self, other: &Element<S>) -> Result<S> {
        self.algebra.check_same(&other.algebra)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(S::zero(), |acc, (&a, &b)| acc + a * b))
    }

    pub fn product(&self, other: &Element<S>) -> Result<Element<S>> {
        let z = self.complexify().product(&other.complexify())?;
        Ok(Element {
            algebra: self.algebra,
            coords: z.coords.iter().map(|c| c.re).collect(),
        })
    }

    pub fn square(&self) -> Element<S> {
        self.product(self).expect("same algebra")
    }

    pub fn scale(&self, a: S) -> Element<S> {
        Element {
            algebra: self.algebra,
            coords: self.coords.iter().map(|&x| x * a).collect(),
        }
    }

    pub fn add(&self, other: &Element<S>) -> Result<Element<S>> {
        self.algebra.check_same(&other.algebra)?;
        Ok(Element {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn norm2(&self) -> S {
        self.inner(self).unwrap().sqrt()
    }

    /// Natural spin components (x₀, x⃗); panics off-family.
    pub fn spin_parts(&self) -> (S, Vec<S>) {
        assert_eq!(self.algebra.family, Family::Spin);
        let inv = sc::<S>(1.0 / SQRT2);
        (
            self.coords[0] * inv,
            self.coords[1..].iter().map(|&c| c * inv).collect(),
        )
    }
}

impl<S: Scalar> ComplexElement<S> {
    pub fn from_coords(algebra: Algebra, coords: Vec<Cplx<S>>) -> Result<Self> {
        if coords.len() != algebra.n {
            return Err(Error::InvalidParameter(format!(
                "expected {} coordinates for {}, got {}",
                algebra.n,
                algebra.id(),
                coords.len()
            )));
        }
        Ok(ComplexElement { algebra, coords })
    }

    pub fn zero(algebra: Algebra) -> Self {
        ComplexElement {
            algebra,
            coords: vec![Complex::new(S::zero(), S::zero()); algebra.n],
        }
    }

    pub fn unit(algebra: Algebra) -> Self {
        Element::unit(algebra).complexify()
    }

    pub fn coords(&self) -> &[Cplx<S>] {
        &self.coords
    }

    /// Complex conjugation with respect to the real form V.
    pub fn conj(&self) -> ComplexElement<S> {
        ComplexElement {
            algebra: self.algebra,
            coords: self.coords.iter().map(|c| c.conj()).collect(),
        }
    }

    pub fn re_part(&self) -> Element<S> {
        Element {
            algebra: self.algebra,
            coords: self.coords.iter().map(|c| c.re).collect(),
        }
    }

    pub fn im_part(&self) -> Element<S> {
        Element {
            algebra: self.algebra,
            coords: self.coords.iter().map(|c| c.im).collect(),
        }
    }

    pub fn is_real(&self, tol: S) -> bool {
        let scale = self.norm2().max(S::one());
        self.coords.iter().all(|c| c.im.abs() <= tol * scale)
    }

    pub fn into_real(self, tol: S) -> Result<Element<S>> {
        if !self.is_real(tol) {
            return Err(Error::InvalidParameter(
                "element has a nontrivial imaginary part".into(),
            ));
        }
        Ok(self.re_part())
    }

    pub fn scale(&self, a: Cplx<S>) -> ComplexElement<S> {
        ComplexElement {
            algebra: self.algebra,
            coords: self.coords.iter().map(|&c| c * a).collect(),
        }
    }

    pub fn add(&self, other: &ComplexElement<S>) -> Result<ComplexElement<S>> {
        self.algebra.check_same(&other.algebra)?;
        Ok(ComplexElement {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &ComplexElement<S>) -> Result<ComplexElement<S>> {
        self.add(&other.scale(Complex::new(-S::one(), S::zero())))
    }

    pub fn neg(&self) -> ComplexElement<S> {
        self.scale(Complex::new(-S::one(), S::zero()))
    }

    /// Hermitian norm |z|₂ = √(z|z).
    pub fn norm2(&self) -> S {
        self.coords
            .iter()
            .fold(S::zero(), |acc, c| acc + c.norm_sqr())
            .sqrt()
    }

    /// Sesquilinear inner product (x|y) = tr(x ȳ) = Σ x_i conj(y_i).
    pub fn inner(&self, other: &ComplexElement<S>) -> Result<Cplx<S>> {
        self.algebra.check_same(&other.algebra)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(Complex::new(S::zero(), S::zero()), |acc, (&a, &b)| {
                acc + a * b.conj()
            }))
    }

    /// Jordan product, complex-bilinear extension.
    pub fn product(&self, other: &ComplexElement<S>) -> Result<ComplexElement<S>> {
        self.algebra.check_same(&other.algebra)?;
        match self.algebra.family {
            Family::SymR | Family::HermC => {
                let a = self.to_matrix();
                let b = other.to_matrix();
                let ab = &a * &b;
                let ba = &b * &a;
                let half = Complex::new(sc::<S>(0.5), S::zero());
                Ok(ComplexElement::from_matrix(
                    self.algebra,
                    &((ab + ba) * half),
                ))
            }
            Family::Spin => {
                let (x0, xv) = self.spin_parts();
                let (y0, yv) = other.spin_parts();
                let dot = xv
                    .iter()
                    .zip(&yv)
                    .fold(Complex::new(S::zero(), S::zero()), |a, (&p, &q)| a + p * q);
                let mut parts = Vec::with_capacity(self.algebra.n);
                parts.push(x0 * y0 + dot);
                for i in 0..xv.len() {
                    parts.push(x0 * yv[i] + y0 * xv[i]);
                }
                Ok(ComplexElement::from_spin_parts(self.algebra, &parts))
            }
        }
    }

    pub fn square(&self) -> ComplexElement<S> {
        self.product(self).expect("same algebra")
    }

    /// Jordan trace tr(z), complex-linear.
    pub fn trace(&self) -> Cplx<S> {
        match self.algebra.family {
            Family::SymR | Family::HermC => self.coords[..self.algebra.r]
                .iter()
                .fold(Complex::new(S::zero(), S::zero()), |a, &c| a + c),
            Family::Spin => self.coords[0] * Complex::new(sc::<S>(SQRT2), S::zero()),
        }
    }

    /// Jordan determinant Δ(z), complex-bilinear extension.
    pub fn det(&self) -> Cplx<S> {
        match self.algebra.family {
            Family::SymR | Family::HermC => {
                let m = self.to_matrix();
                det_small(&m)
            }
            Family::Spin => {
                let (z0, zv) = self.spin_parts();
                let sq = zv
                    .iter()
                    .fold(Complex::new(S::zero(), S::zero()), |a, &c| a + c * c);
                z0 * z0 - sq
            }
        }
    }

    /// Matrix view (matrix families only).
    pub fn to_matrix(&self) -> DMatrix<Cplx<S>> {
        let r = self.algebra.r;
        let zero = Complex::new(S::zero(), S::zero());
        let mut m = DMatrix::from_element(r, r, zero);
        let inv = Complex::new(sc::<S>(1.0 / SQRT2), S::zero());
        match self.algebra.family {
            Family::SymR => {
                for j in 0..r {
                    m[(j, j)] = self.coords[j];
                }
                for j in 0..r {
                    for k in (j + 1)..r {
                        let c = self.coords[self.algebra.pair_index(j, k)] * inv;
                        m[(j, k)] = c;
                        m[(k, j)] = c;
                    }
                }
            }
            Family::HermC => {
                let i = Complex::new(S::zero(), S::one());
                for j in 0..r {
                    m[(j, j)] = self.coords[j];
                }
                for j in 0..r {
                    for k in (j + 1)..r {
                        let base = self.algebra.pair_index(j, k);
                        let c1 = self.coords[base];
                        let c2 = self.coords[base + 1];
                        m[(j, k)] = (c1 + i * c2) * inv;
                        m[(k, j)] = (c1 - i * c2) * inv;
                    }
                }
            }
            Family::Spin => panic!("spin factor has no matrix view"),
        }
        m
    }

    /// Inverse of `to_matrix`. For SymR the matrix is symmetrized first.
    pub fn from_matrix(algebra: Algebra, m: &DMatrix<Cplx<S>>) -> ComplexElement<S> {
        let r = algebra.r;
        assert_eq!((m.nrows(), m.ncols()), (r, r));
        let mut coords = vec![Complex::new(S::zero(), S::zero()); algebra.n];
        let s2 = Complex::new(sc::<S>(SQRT2), S::zero());
        let half = Complex::new(sc::<S>(0.5), S::zero());
        match algebra.family {
            Family::SymR => {
                for j in 0..r {
                    coords[j] = m[(j, j)];
                }
                for j in 0..r {
                    for k in (j + 1)..r {
                        coords[algebra.pair_index(j, k)] = (m[(j, k)] + m[(k, j)]) * half * s2;
                    }
                }
            }
            Family::HermC => {
                let i = Complex::new(S::zero(), S::one());
                for j in 0..r {
                    coords[j] = m[(j, j)];
                }
                for j in 0..r {
                    for k in (j + 1)..r {
                        let base = algebra.pair_index(j, k);
                        // a_jk = (c1 + i c2)/√2, a_kj = (c1 − i c2)/√2
                        coords[base] = (m[(j, k)] + m[(k, j)]) * half * s2;
                        coords[base + 1] = (m[(k, j)] - m[(j, k)]) * half * s2 * i;
                    }
                }
            }
            Family::Spin => panic!("spin factor has no matrix view"),
        }
        ComplexElement { algebra, coords }
    }

    /// Natural spin components (z₀, z⃗); panics off-family.
    pub fn spin_parts(&self) -> (Cplx<S>, Vec<Cplx<S>>) {
        assert_eq!(self.algebra.family, Family::Spin);
        let inv = Complex::new(sc::<S>(1.0 / SQRT2), S::zero());
        (
            self.coords[0] * inv,
            self.coords[1..].iter().map(|&c| c * inv).collect(),
        )
    }

    pub fn from_spin_parts(algebra: Algebra, parts: &[Cplx<S>]) -> ComplexElement<S> {
        assert_eq!(algebra.family, Family::Spin);
        assert_eq!(parts.len(), algebra.n);
        let s2 = Complex::new(sc::<S>(SQRT2), S::zero());
        ComplexElement {
            algebra,
            coords: parts.iter().map(|&p| p * s2).collect(),
        }
    }

    /// Leading principal Peirce minor Δ_l, l = 1..r. The spin convention is
    /// Δ₁(z) = z₀ + z⃗₁, pinning the frame {½(1,±ê₁)}.
    pub fn peirce_minor(&self, l: usize) -> Cplx<S> {
        assert!(l >= 1 && l <= self.algebra.r);
        match self.algebra.family {
            Family::SymR | Family::HermC => {
                let m = self.to_matrix();
                det_small(&m.view((0, 0), (l, l)).into_owned())
            }
            Family::Spin => {
                let (z0, zv) = self.spin_parts();
                if l == 1 {
                    z0 + zv[0]
                } else {
                    self.det()
                }
            }
        }
    }
}

/// Determinant of a small complex matrix: closed forms up to 3×3, LU beyond.
pub(crate) fn det_small<S: Scalar>(m: &DMatrix<Cplx<S>>) -> Cplx<S> {
    match m.nrows() {
        0 => Complex::new(S::one(), S::zero()),
        1 => m[(0, 0)],
        2 => m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)],
        3 => {
            m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
                - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
                + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
        }
        _ => m.clone().lu().determinant(),
    }
}

// ---------------------------------------------------------------------------
// JSON wire format: {"algebra":{"family":"SymR","r":2,"n":3},"re":[..],"im":[..]}

#[derive(Serialize, Deserialize)]
struct AlgebraDto {
    family: Family,
    r: usize,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct ElementDto {
    algebra: AlgebraDto,
    re: Vec<f64>,
    im: Vec<f64>,
}

fn algebra_from_dto(dto: &AlgebraDto) -> std::result::Result<Algebra, String> {
    let alg = match dto.family {
        Family::SymR => Algebra::sym_r(dto.r),
        Family::HermC => Algebra::herm_c(dto.r),
        Family::Spin => Algebra::spin(dto.n),
    };
    if alg.n != dto.n || alg.r != dto.r {
        return Err(format!(
            "inconsistent algebra descriptor: family {:?} with r={} has n={}, got n={}",
            dto.family, dto.r, alg.n, dto.n
        ));
    }
    Ok(alg)
}

impl<S: Scalar> Serialize for ComplexElement<S> {
    fn serialize<Sz: Serializer>(&self, serializer: Sz) -> std::result::Result<Sz::Ok, Sz::Error> {
        ElementDto {
            algebra: AlgebraDto {
                family: self.algebra.family,
                r: self.algebra.r,
                n: self.algebra.n,
            },
            re: self.coords.iter().map(|c| c.re.to_f64().unwrap()).collect(),
            im: self.coords.iter().map(|c| c.im.to_f64().unwrap()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for ComplexElement<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let dto = ElementDto::deserialize(deserializer)?;
        let algebra = algebra_from_dto(&dto.algebra).map_err(D::Error::custom)?;
        if dto.re.len() != algebra.n || dto.im.len() != algebra.n {
            return Err(D::Error::custom(format!(
                "coordinate arrays must have length n = {}",
                algebra.n
            )));
        }
        let coords = dto
            .re
            .iter()
            .zip(&dto.im)
            .map(|(&a, &b)| Complex::new(sc(a), sc(b)))
            .collect();
        Ok(ComplexElement { algebra, coords })
    }
}

impl<S: Scalar> Serialize for Element<S> {
    fn serialize<Sz: Serializer>(&self, serializer: Sz) -> std::result::Result<Sz::Ok, Sz::Error> {
        self.complexify().serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Element<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let z = ComplexElement::<S>::deserialize(deserializer)?;
        z.into_real(sc(1e-12))
            .map_err(|_| D::Error::custom("element has a nontrivial imaginary part"))
    }
}
