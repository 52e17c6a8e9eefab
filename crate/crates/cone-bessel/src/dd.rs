//! Double-double (~31 significant digits) arithmetic.
//!
//! The restricted spherical series at arguments with large imaginary part
//! cancels down from intermediate terms of size e^{2|x|₁}; plain f64 loses
//! the value entirely once 2|x|₁ ≳ 30. The bound-check paths therefore run
//! the partition sums in double-double. Algorithms are the classical
//! error-free transformations (Dekker/Knuth two-sum, FMA two-prod).

/// Unevaluated sum hi + lo with |lo| ≤ ulp(hi)/2.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::from_f64(x)
    }
}

impl std::ops::Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl std::ops::Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }
}

impl std::ops::Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl std::ops::Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + self.hi * b.lo + self.lo * b.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl std::ops::Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * Dd::from_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Dd::from_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from_f64(q3)
    }
}

impl std::ops::Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let p2 = p2 + self.lo * b;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<std::cmp::Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(std::cmp::Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

/// Complex double-double.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    #[inline]
    pub fn new(re: Dd, im: Dd) -> CDd {
        CDd { re, im }
    }

    #[inline]
    pub fn scale_re(self, f: Dd) -> CDd {
        CDd::new(self.re * f, self.im * f)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.to_c64().norm()
    }

    #[inline]
    pub fn to_c64(self) -> num_complex::Complex<f64> {
        num_complex::Complex::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl std::ops::Add for CDd {
    type Output = CDd;
    #[inline]
    fn add(self, b: CDd) -> CDd {
        CDd::new(self.re + b.re, self.im + b.im)
    }
}

impl std::ops::Sub for CDd {
    type Output = CDd;
    #[inline]
    fn sub(self, b: CDd) -> CDd {
        CDd::new(self.re - b.re, self.im - b.im)
    }
}

impl std::ops::Neg for CDd {
    type Output = CDd;
    #[inline]
    fn neg(self) -> CDd {
        CDd::new(-self.re, -self.im)
    }
}

impl std::ops::Mul for CDd {
    type Output = CDd;
    #[inline]
    fn mul(self, b: CDd) -> CDd {
        CDd::new(
            self.re * b.re - self.im * b.im,
            self.re * b.im + self.im * b.re,
        )
    }
}

impl crate::scalar::Arith for CDd {
    #[inline]
    fn zero() -> Self {
        CDd::new(Dd::ZERO, Dd::ZERO)
    }
    #[inline]
    fn one() -> Self {
        CDd::new(Dd::ONE, Dd::ZERO)
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        CDd::new(Dd::from_f64(x), Dd::ZERO)
    }
    #[inline]
    fn from_c64(z: num_complex::Complex<f64>) -> Self {
        CDd::new(Dd::from_f64(z.re), Dd::from_f64(z.im))
    }
    #[inline]
    fn to_c64(self) -> num_complex::Complex<f64> {
        CDd::to_c64(self)
    }
    #[inline]
    fn mul_real2(self, hi: f64, lo: f64) -> Self {
        let f = Dd { hi, lo };
        CDd::new(self.re * f, self.im * f)
    }
    #[inline]
    fn modulus(self) -> f64 {
        self.norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Arith;

    #[test]
    fn keeps_small_addend() {
        let a = Dd::from_f64(1e20) + Dd::from_f64(1.0) - Dd::from_f64(1e20);
        assert_eq!(a.to_f64(), 1.0);
    }

    #[test]
    fn division_roundtrip() {
        let a = Dd::from_f64(std::f64::consts::PI);
        let b = Dd::from_f64(std::f64::consts::E);
        let q = a / b * b - a;
        assert!(q.to_f64().abs() < 1e-30);
    }

    // exp(-30) by the raw alternating Taylor series: intermediate terms reach
    // ~4e11 while the value is 9.36e-14. f64 loses everything; double-double
    // keeps ~17 digits of headroom.
    #[test]
    fn alternating_series_cancellation() {
        let x = Dd::from_f64(-30.0);
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for k in 1..200 {
            term = term * x / Dd::from_f64(k as f64);
            sum = sum + term;
        }
        let truth = (-30.0_f64).exp();
        let rel = (sum.to_f64() - truth).abs() / truth;
        assert!(rel < 1e-5, "rel err {rel}");
    }

    #[test]
    fn complex_mul_matches_f64() {
        let a = CDd::from_c64(num_complex::Complex::new(1.25, -0.5));
        let b = CDd::from_c64(num_complex::Complex::new(-2.0, 3.5));
        let p = (a * b).to_c64();
        let q = num_complex::Complex::new(1.25, -0.5) * num_complex::Complex::new(-2.0, 3.5);
        assert!((p - q).norm() < 1e-15);
    }
}
