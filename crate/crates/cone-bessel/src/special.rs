//! Scalar special functions: complex log-gamma and the confluent limit
//! function ₀F₁(λ; u) = Σ_m u^m / ((λ)_m m!), which is the whole rank-one
//! story: the spherical I-Bessel function on ℝ is ₀F₁, and every rank-one
//! argument in a higher-rank algebra reduces to it.
//!
//! ₀F₁ at arguments far from the positive axis cancels from terms of size
//! e^{|2√u|} down to e^{Re 2√u}; evaluation escalates f64 series → double-
//! double series → Bessel integral representations, picking the cheapest
//! route that keeps the certified digits.

use num_complex::Complex;
use std::sync::OnceLock;

use crate::dd::{CDd, Dd};
use crate::error::{Error, Result};

type C64 = Complex<f64>;

// Lanczos approximation, g = 7, 9 coefficients. ~15 significant digits on
// the half-plane Re z > 0.5; reflection elsewhere.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Principal-branch log-gamma for complex argument.
///
/// Poles at 0, −1, −2, … are reported, not returned as infinities.
pub fn lgamma_complex(z: C64) -> Result<C64> {
    if z.re < 0.5 {
        // Reflection: ln Γ(z) = ln π − ln sin(πz) − ln Γ(1−z).
        let pz = std::f64::consts::PI * z;
        let sin = pz.sin();
        if sin.norm() < 1e-12 {
            return Err(Error::PoleHit(format!("Γ pole near z = {z}")));
        }
        let rest = lgamma_complex(C64::new(1.0, 0.0) - z)?;
        return Ok(C64::new(std::f64::consts::PI.ln(), 0.0) - sin.ln() - rest);
    }
    let zm = z - 1.0;
    let mut acc = C64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (zm + i as f64);
    }
    let t = zm + LANCZOS_G + 0.5;
    let half_log_2pi = 0.918_938_533_204_672_74; // ln(2π)/2
    Ok(C64::new(half_log_2pi, 0.0) + (zm + 0.5) * t.ln() - t + acc.ln())
}

/// ln Γ(x) for real x > 0.
pub fn lgamma_real(x: f64) -> f64 {
    lgamma_complex(C64::new(x, 0.0))
        .expect("positive real argument has no pole")
        .re
}

/// Γ(x) for real x > 0.
pub fn gamma_real(x: f64) -> f64 {
    lgamma_real(x).exp()
}

/// Distance from z to the nearest non-positive integer (gamma pole lattice).
pub fn pole_distance(z: C64) -> f64 {
    if z.re > 0.5 {
        return f64::INFINITY;
    }
    let k = z.re.round().min(0.0);
    (z - C64::new(k, 0.0)).norm()
}

/// ₀F₁(λ; u) by the raw f64 series. Caller is responsible for knowing the
/// cancellation is acceptable (see [`zerof1_any`]).
pub fn zerof1_f64(lambda: C64, u: C64) -> C64 {
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    let mut m = 0u32;
    loop {
        let denom = (lambda + m as f64) * (m + 1) as f64;
        term = term * u / denom;
        sum += term;
        m += 1;
        if term.norm() < 1e-18 * sum.norm().max(1e-300) || m > 40_000 {
            return sum;
        }
    }
}

/// ₀F₁(λ; u) accumulated in double-double.
pub fn zerof1_dd(lambda: C64, u: C64) -> C64 {
    let lam = CDd::new(Dd::from_f64(lambda.re), Dd::from_f64(lambda.im));
    let uu = CDd::new(Dd::from_f64(u.re), Dd::from_f64(u.im));
    let mut term = CDd::new(Dd::ONE, Dd::ZERO);
    let mut sum = term;
    let mut peak = 1.0f64;
    let mut m = 0u32;
    loop {
        let mf = Dd::from_f64((m + 1) as f64);
        let denom = CDd::new(
            (lam.re + Dd::from_f64(m as f64)) * mf,
            lam.im * mf,
        );
        // term *= u / denom
        let d2 = denom.re * denom.re + denom.im * denom.im;
        let inv = CDd::new(denom.re / d2, -denom.im / d2);
        term = term * uu * inv;
        sum = sum + term;
        peak = peak.max(term.norm());
        m += 1;
        if term.norm() < 1e-34 * peak || m > 40_000 {
            return sum.to_c64();
        }
    }
}

fn gauss_legendre_raw(n: usize) -> (Vec<f64>, Vec<f64>) {
    // Newton iteration on P_n; nodes/weights on [-1, 1].
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn gl64() -> &'static (Vec<f64>, Vec<f64>) {
    static GL: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    GL.get_or_init(|| gauss_legendre_raw(64))
}

/// Composite Gauss–Legendre of a complex-valued integrand on [a, b].
pub fn composite_gl<F: Fn(f64) -> C64>(f: F, a: f64, b: f64, panels: usize) -> C64 {
    let (nodes, weights) = gl64();
    let mut sum = C64::new(0.0, 0.0);
    let h = (b - a) / panels as f64;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        for (x, w) in nodes.iter().zip(weights) {
            sum += f(mid + 0.5 * h * x) * *w;
        }
    }
    sum * (0.5 * h)
}

/// Classical J_ν(x) for real x ≥ 0, real ν ≥ 0, by the Bessel integral
/// representation. Stable for all x (no cancellation growth).
pub fn besselj_quad(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    let panels = 1 + ((x + nu) / 30.0).ceil() as usize;
    let osc = composite_gl(
        |th| C64::new((nu * th - x * th.sin()).cos(), 0.0),
        0.0,
        std::f64::consts::PI,
        panels,
    )
    .re / std::f64::consts::PI;
    let s = (nu * std::f64::consts::PI).sin();
    if s.abs() < 1e-15 {
        return osc;
    }
    // ∫_0^∞ e^{−νt − x sinh t} dt, double-exponential decay.
    let t_max = ((760.0 / x).max(1.0).asinh()).min(760.0 / nu.max(1e-3)).max(1.0);
    let tail = composite_gl(
        |t| C64::new((-nu * t - x * t.sinh()).exp(), 0.0),
        0.0,
        t_max,
        6,
    )
    .re;
    osc - s / std::f64::consts::PI * tail
}

/// Classical I_ν(z) for complex z with Re z ≥ 0, by quadrature.
fn besseli_quad(nu: f64, z: C64) -> Result<C64> {
    let pi = std::f64::consts::PI;
    let panels = 1 + ((z.norm() + nu) / 30.0).ceil() as usize;
    let osc = composite_gl(
        |th| (z * th.cos()).exp() * (nu * th).cos(),
        0.0,
        pi,
        panels,
    ) / pi;
    let s = (nu * pi).sin();
    if s.abs() < 1e-15 || z.re > 13.0 {
        // Integer order kills the branch-cut integral; for Re z > 13 it is
        // below e^{−2 Re z} of the main term.
        return Ok(osc);
    }
    if z.re <= 1e-12 {
        return Err(Error::QuadratureNotConverged(
            "I_ν integral representation needs Re z > 0".into(),
        ));
    }
    let t_max = (760.0 / z.re).acosh().max(1.0).min(760.0 / nu.max(1e-3));
    // Panel so that the oscillation z.im · cosh t advances a bounded phase.
    let mut breaks = vec![0.0f64];
    let mut t = 0.0;
    while t < t_max {
        let rate = z.im.abs() * t.cosh() + 1.0;
        let step = (25.0 / rate).min(0.5).max(1e-3);
        t = (t + step).min(t_max);
        breaks.push(t);
    }
    let mut tail = C64::new(0.0, 0.0);
    for w in breaks.windows(2) {
        tail += composite_gl(|t| (-z * t.cosh() - nu * t).exp(), w[0], w[1], 1);
    }
    Ok(osc - tail * (s / pi))
}

/// How many decimal-ish digits the raw series loses to cancellation:
/// ln(peak term) − ln(result scale) ≈ |2√u| − Re 2√u.
pub fn zerof1_cancellation(u: C64) -> f64 {
    let z = u.sqrt() * 2.0;
    z.norm() - z.re
}

/// ₀F₁(λ; u) with automatic route selection: f64 series, double-double
/// series, or (real λ) classical Bessel integral representations.
pub fn zerof1_any(lambda: C64, u: C64) -> Result<C64> {
    let loss = zerof1_cancellation(u);
    if loss <= 16.0 {
        return Ok(zerof1_f64(lambda, u));
    }
    if loss <= 55.0 {
        return Ok(zerof1_dd(lambda, u));
    }
    if lambda.im.abs() > 1e-12 {
        return Err(Error::QuadratureNotConverged(format!(
            "₀F₁ cancellation {loss:.1} nats needs the Bessel integral route, \
             which requires real λ (got {lambda})"
        )));
    }
    let lam = lambda.re;
    let nu = lam - 1.0;
    let z = u.sqrt() * 2.0; // principal root: Re z ≥ 0
    let lg = lgamma_complex(C64::new(lam, 0.0))?;
    if z.re <= 1e-9 * z.norm() {
        // u on the negative real axis: ₀F₁(λ; −v) = Γ(λ) (√v)^{−ν} J_ν(2√v).
        let v = (-u.re).max(0.0);
        let j = besselj_quad(nu, 2.0 * v.sqrt());
        let val = (lg.re - nu * 0.5 * v.ln()).exp() * j;
        return Ok(C64::new(val, 0.0));
    }
    // ₀F₁(λ; u) = Γ(λ) (z/2)^{−ν} I_ν(z).
    let i = besseli_quad(nu, z)?;
    let scale = (lg - (z / 2.0).ln() * nu).exp();
    Ok(scale * i)
}
