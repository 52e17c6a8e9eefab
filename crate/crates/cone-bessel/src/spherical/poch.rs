//! Generalized Pochhammer symbols, the Gindikin gamma function, the
//! normalizing constant c_λ, rank of λ, and the Wallach set.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::jordan::Algebra;
use crate::special::{lgamma_complex, pole_distance};

use super::partition::Partition;

type C64 = Complex<f64>;

/// (s)_𝐧 = Π_j (s_j − (j−1)d/2)_{n_j} for a vector parameter s and any
/// nonnegative integer exponent vector n (not necessarily a partition).
pub fn poch_vec(s: &[C64], n: &[u32], d: usize) -> C64 {
    assert!(s.len() >= n.len(), "parameter vector shorter than exponents");
    let mut prod = C64::new(1.0, 0.0);
    for (j, &nj) in n.iter().enumerate() {
        let base = s[j] - C64::new(j as f64 * d as f64 / 2.0, 0.0);
        for l in 0..nj {
            prod *= base + l as f64;
        }
    }
    prod
}

/// (λ)_m with the scalar λ broadcast to (λ, …, λ).
pub fn poch_scalar(lambda: C64, m: &Partition, d: usize) -> C64 {
    let s = vec![lambda; m.len().max(1)];
    poch_vec(&s, m.parts(), d)
}

/// ln |(λ)_m| (−∞ when the symbol vanishes exactly).
pub fn poch_log_abs(lambda: C64, m: &Partition, d: usize) -> f64 {
    let mut acc = 0.0f64;
    for (j, &mj) in m.parts().iter().enumerate() {
        let base = lambda - C64::new(j as f64 * d as f64 / 2.0, 0.0);
        for l in 0..mj {
            let f = (base + l as f64).norm();
            if f == 0.0 {
                return f64::NEG_INFINITY;
            }
            acc += f.ln();
        }
    }
    acc
}

/// log Γ_Ω(s) = (n−r)/2 · ln(2π) + Σ_j ln Γ(s_j − (j−1)d/2).
///
/// Raises `PoleHit` when any shifted argument is within 1e-8 of a pole.
pub fn gindikin_gamma_log(s: &[C64], alg: Algebra) -> Result<C64> {
    assert_eq!(s.len(), alg.r);
    let mut acc = C64::new(
        (alg.n - alg.r) as f64 / 2.0 * (2.0 * std::f64::consts::PI).ln(),
        0.0,
    );
    for (j, &sj) in s.iter().enumerate() {
        let arg = sj - C64::new(j as f64 * alg.d as f64 / 2.0, 0.0);
        if pole_distance(arg) < 1e-8 {
            return Err(Error::PoleHit(format!(
                "Γ_Ω argument s_{} − ({})d/2 = {arg} at a pole",
                j + 1,
                j
            )));
        }
        acc += lgamma_complex(arg)?;
    }
    Ok(acc)
}

/// Scalar-broadcast Gindikin gamma log.
pub fn gindikin_gamma_log_scalar(lambda: C64, alg: Algebra) -> Result<C64> {
    gindikin_gamma_log(&vec![lambda; alg.r], alg)
}

/// c_λ = (1/π^n) Γ_Ω(λ) / Γ_Ω(λ − n/r).
pub fn c_lambda(lambda: C64, alg: Algebra) -> Result<C64> {
    let num = gindikin_gamma_log_scalar(lambda, alg)?;
    let den = gindikin_gamma_log_scalar(lambda - alg.n_over_r(), alg)?;
    let logc = num - den - C64::new(alg.n as f64 * std::f64::consts::PI.ln(), 0.0);
    Ok(logc.exp())
}

/// rank λ: the largest l such that (λ)_m ≠ 0 for every partition of length
/// ≤ l. Real λ on the lattice j·d/2 + ℤ_{≤0} is classified with 1e-12
/// tolerance; any λ with |Im λ| ≥ 1e-12 has full rank.
pub fn rank_lambda(lambda: C64, alg: Algebra) -> usize {
    if lambda.im.abs() >= 1e-12 {
        return alg.r;
    }
    for j in 0..alg.r {
        let v = lambda.re - j as f64 * alg.d as f64 / 2.0;
        let k = v.round();
        if k <= 0.5 && (v - k).abs() <= 1e-12 && k <= 0.0 {
            return j;
        }
    }
    alg.r
}

/// λ ∈ 𝒲 = {0, d/2, …, (r−1)d/2} ∪ ((r−1)d/2, ∞).
pub fn wallach_member(lambda: f64, alg: Algebra) -> bool {
    let top = (alg.r - 1) as f64 * alg.d as f64 / 2.0;
    if lambda > top - 1e-12 {
        return true;
    }
    if lambda < -1e-12 {
        return false;
    }
    let step = alg.d as f64 / 2.0;
    let j = (lambda / step).round();
    (lambda - j * step).abs() <= 1e-12 && j >= 0.0 && (j as usize) < alg.r
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};

    #[test]
    fn empty_partition_is_one() {
        let m = Partition::empty();
        assert_eq!(poch_scalar(C64::new(1.7, 0.3), &m, 1), C64::new(1.0, 0.0));
    }

    #[test]
    fn direct_substitution() {
        // r=2, d=2, λ=3, m=(1,1): (3)_1 (3−1)_1 = 3·2 = 6
        let m = Partition::new(&[1, 1]);
        let got = poch_scalar(C64::new(3.0, 0.0), &m, 2);
        assert_relative_eq!(got.re, 6.0, max_relative = 1e-14);
    }

    #[test]
    fn functional_equation() {
        // (s)_{m+n} = (s)_m (s+m)_n
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let d = *[1usize, 2, 3].iter().nth(rng.gen_range(0..3)).unwrap();
            let r = 3;
            let s: Vec<C64> = (0..r)
                .map(|_| C64::new(rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 2.0 - 1.0))
                .collect();
            let m: Vec<u32> = (0..r).map(|_| rng.gen_range(0..4)).collect();
            let n: Vec<u32> = (0..r).map(|_| rng.gen_range(0..4)).collect();
            let mn: Vec<u32> = m.iter().zip(&n).map(|(a, b)| a + b).collect();
            let lhs = poch_vec(&s, &mn, d);
            let s_plus_m: Vec<C64> = s
                .iter()
                .zip(&m)
                .map(|(a, b)| a + C64::new(*b as f64, 0.0))
                .collect();
            let rhs = poch_vec(&s, &m, d) * poch_vec(&s_plus_m, &n, d);
            assert!(
                (lhs - rhs).norm() <= 1e-10 * lhs.norm().max(1.0),
                "lhs {lhs} rhs {rhs}"
            );
        }
    }

    #[test]
    fn reversal_identity() {
        // (−s*)_m = (−1)^{|m|} (s − m* + n/r)_{m*}
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for alg in [
            crate::jordan::Algebra::sym_r(3),
            crate::jordan::Algebra::herm_c(3),
            crate::jordan::Algebra::spin(5),
        ] {
            let r = alg.r;
            for _ in 0..30 {
                let s: Vec<C64> = (0..r)
                    .map(|_| C64::new(rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 2.0 - 1.0))
                    .collect();
                let mut mv: Vec<u32> = (0..r).map(|_| rng.gen_range(0..5)).collect();
                mv.sort_unstable_by(|a, b| b.cmp(a));
                let m = Partition::new(&mv);
                let neg_s_star: Vec<C64> = (0..r).map(|j| -s[r - 1 - j]).collect();
                let lhs = poch_vec(&neg_s_star, m.parts(), alg.d);
                let mstar = m.reversed(r);
                let arg: Vec<C64> = (0..r)
                    .map(|j| s[j] - C64::new(mstar[j] as f64 - alg.n_over_r(), 0.0))
                    .collect();
                let sign = if m.weight() % 2 == 0 { 1.0 } else { -1.0 };
                let rhs = poch_vec(&arg, &mstar, alg.d) * sign;
                assert!(
                    (lhs - rhs).norm() <= 1e-9 * lhs.norm().max(1.0),
                    "{}: lhs {lhs} rhs {rhs}",
                    alg.id()
                );
            }
        }
    }

    #[test]
    fn gindikin_rank_one_is_gamma() {
        let alg = Algebra::real_line();
        let g = gindikin_gamma_log_scalar(C64::new(2.0, 0.0), alg).unwrap();
        assert!(g.norm() < 1e-12); // Γ(2) = 1
    }

    #[test]
    fn gindikin_hermc2_value() {
        // Γ_Ω(3) on Herm(2,ℂ): (2π)^{(4−2)/2} Γ(3) Γ(2) = 4π
        let alg = Algebra::herm_c(2);
        let g = gindikin_gamma_log_scalar(C64::new(3.0, 0.0), alg).unwrap();
        assert_relative_eq!(
            g.re.exp(),
            4.0 * std::f64::consts::PI,
            max_relative = 1e-12
        );
    }

    #[test]
    fn poch_is_gamma_ratio() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for alg in [Algebra::sym_r(2), Algebra::herm_c(3), Algebra::spin(4)] {
            for _ in 0..20 {
                let s: Vec<C64> = (0..alg.r)
                    .map(|j| {
                        C64::new(
                            2.0 + j as f64 + rng.gen::<f64>() * 3.0,
                            rng.gen::<f64>() - 0.5,
                        )
                    })
                    .collect();
                let mut mv: Vec<u32> = (0..alg.r).map(|_| rng.gen_range(0..4)).collect();
                mv.sort_unstable_by(|a, b| b.cmp(a));
                let sm: Vec<C64> = s
                    .iter()
                    .zip(&mv)
                    .map(|(a, b)| a + C64::new(*b as f64, 0.0))
                    .collect();
                let lhs = poch_vec(&s, &mv, alg.d);
                let rhs = (gindikin_gamma_log(&sm, alg).unwrap()
                    - gindikin_gamma_log(&s, alg).unwrap())
                .exp();
                assert!(
                    (lhs - rhs).norm() <= 1e-9 * lhs.norm().max(1.0),
                    "{}: {lhs} vs {rhs}",
                    alg.id()
                );
            }
        }
    }

    #[test]
    fn c_lambda_rank_one() {
        // V = ℝ: c_λ = (λ−1)/π
        for lam in [2.5, 3.0, 7.25] {
            let c = c_lambda(C64::new(lam, 0.0), Algebra::real_line()).unwrap();
            assert_relative_eq!(c.re, (lam - 1.0) / std::f64::consts::PI, max_relative = 1e-12);
        }
    }

    #[test]
    fn rank_lambda_cases() {
        let h3 = Algebra::herm_c(3);
        assert_eq!(rank_lambda(C64::new(0.0, 0.0), h3), 0);
        assert_eq!(rank_lambda(C64::new(-2.0, 0.0), h3), 0);
        assert_eq!(rank_lambda(C64::new(1.0, 0.0), h3), 1);
        assert_eq!(rank_lambda(C64::new(2.0, 0.0), h3), 2);
        assert_eq!(rank_lambda(C64::new(0.37, 0.0), h3), 3);
        assert_eq!(rank_lambda(C64::new(1.0, 0.5), h3), 3);
        let h2 = Algebra::herm_c(2);
        assert_eq!(rank_lambda(C64::new(1.0, 0.0), h2), 1);
        assert_eq!(rank_lambda(C64::new(3.0, 0.0), h2), 2);
    }

    #[test]
    fn wallach_cases() {
        let s3 = Algebra::sym_r(3); // d = 1: W = {0, 0.5, 1} ∪ (1, ∞)
        assert!(wallach_member(0.0, s3));
        assert!(wallach_member(0.5, s3));
        assert!(!wallach_member(0.75, s3));
        assert!(wallach_member(1.0, s3));
        assert!(wallach_member(17.3, s3));
        assert!(!wallach_member(-0.2, s3));
    }
}
