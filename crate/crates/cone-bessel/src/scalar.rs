//! Scalar abstraction: the whole numerical core is generic over the real
//! scalar type (`f32` or `f64`), with `f64` as the intended precision for
//! production runs. Concrete aliases live at the crate root.

use num_complex::Complex;

/// Real scalar the library is generic over.
///
/// `RealField` supplies the transcendental functions, `FromPrimitive` /
/// `ToPrimitive` the constant conversions.
pub trait Scalar:
    nalgebra::RealField
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + Copy
    + Default
    + Send
    + Sync
    + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Shorthand conversion from an `f64` constant.
#[inline]
pub(crate) fn sc<S: Scalar>(x: f64) -> S {
    S::from_f64(x).expect("f64 constant representable in scalar type")
}

/// Complex number over the generic scalar.
pub type Cplx<S> = Complex<S>;

/// Modulus of a complex number over a generic scalar (num_complex's inherent
/// `norm` is gated on `Float`, which `Scalar` deliberately does not require).
#[inline]
pub fn cnorm<S: Scalar>(z: Complex<S>) -> S {
    (z.re * z.re + z.im * z.im).sqrt()
}

#[inline]
pub(crate) fn c64<S: Scalar>(z: Complex<S>) -> Complex<f64> {
    Complex::new(z.re.to_f64().unwrap(), z.im.to_f64().unwrap())
}

#[inline]
pub(crate) fn from_c64<S: Scalar>(z: Complex<f64>) -> Complex<S> {
    Complex::new(sc(z.re), sc(z.im))
}

/// Arithmetic the series/Jack evaluation engines are written against.
///
/// Implemented by `Complex<S>` for every `Scalar` and by the double-double
/// complex type used on evaluation paths where plain f64 cancellation would
/// swamp the result.
pub trait Arith:
    Copy
    + Send
    + Sync
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    fn from_c64(z: Complex<f64>) -> Self;
    fn to_c64(self) -> Complex<f64>;
    /// Multiply by a real factor given in double-double parts (hi + lo).
    fn mul_real2(self, hi: f64, lo: f64) -> Self;
    fn modulus(self) -> f64;
}

impl<S: Scalar> Arith for Complex<S> {
    #[inline]
    fn zero() -> Self {
        Complex::new(S::zero(), S::zero())
    }
    #[inline]
    fn one() -> Self {
        Complex::new(S::one(), S::zero())
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        Complex::new(sc(x), S::zero())
    }
    #[inline]
    fn from_c64(z: Complex<f64>) -> Self {
        from_c64(z)
    }
    #[inline]
    fn to_c64(self) -> Complex<f64> {
        c64(self)
    }
    #[inline]
    fn mul_real2(self, hi: f64, lo: f64) -> Self {
        let f: S = sc(hi + lo);
        Complex::new(self.re * f, self.im * f)
    }
    #[inline]
    fn modulus(self) -> f64 {
        c64(self).norm()
    }
}
