//! Jack polynomials in C-normalization, evaluated by the variable-by-
//! variable branching rule. One sweep of the dynamic program yields C_κ at
//! a given point for *every* partition of weight ≤ cap simultaneously,
//! which is exactly the shape the spherical series need.
//!
//! The recursion works directly on C-normalized values,
//!     C_κ(x₁,…,x_k) = Σ_{μ ≺ κ} γ_{κμ} C_μ(x₁,…,x_{k−1}) x_k^{|κ/μ|},
//! the sum running over horizontal strips κ/μ. The coefficients γ are
//! assembled from upper/lower hook products in double-double so that the
//! table stays accurate enough for cancellation-heavy downstream sums.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex;
use rayon::prelude::*;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::jordan::Algebra;
use crate::scalar::Arith;

use super::partition::{partitions_upto, Partition};

type C64 = Complex<f64>;

#[derive(Clone, Copy, Debug)]
struct Strip {
    mu: u32,
    skip: u16,
    g_hi: f64,
    g_lo: f64,
}

/// Memoized branching data for Jack polynomials C^{(α)} with parts ≤ r.
pub struct JackTable {
    pub r: usize,
    pub alpha: f64,
    pub max_weight: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// first index whose weight exceeds w, for each w ≤ max_weight
    cutoff: Vec<usize>,
    strips: Vec<Vec<Strip>>,
    c_at_ones: Vec<f64>,
}

/// Upper hook h^ν_*(i,j) = ν'_j − i + α(ν_i − j + 1), 1-based box (i,j).
fn hook_upper(parts: &[u32], conj: &[u32], i: usize, j: usize, alpha: Dd) -> Dd {
    let a = conj[j - 1] as f64 - i as f64;
    let b = parts[i - 1] as f64 - j as f64 + 1.0;
    Dd::from_f64(a) + alpha * b
}

/// Lower hook h_ν^*(i,j) = ν'_j − i + 1 + α(ν_i − j).
fn hook_lower(parts: &[u32], conj: &[u32], i: usize, j: usize, alpha: Dd) -> Dd {
    let a = conj[j - 1] as f64 - i as f64 + 1.0;
    let b = parts[i - 1] as f64 - j as f64;
    Dd::from_f64(a) + alpha * b
}

fn conj_cols(parts: &[u32], width: usize) -> Vec<u32> {
    (1..=width.max(1))
        .map(|j| parts.iter().filter(|&&p| p as usize >= j).count() as u32)
        .collect()
}

/// γ_{κμ} = α^{|κ/μ|} (|κ|!/|μ|!) Π_{b∈μ} OB^μ(b) / Π_{b∈κ} OB^κ(b),
/// with OB the hook complementary to the branching-rule choice: the upper
/// hook on columns where κ' = μ', the lower hook elsewhere — wait, the
/// B-choice is lower on equal columns, so OB is upper there.
fn gamma_dd(kappa: &[u32], mu: &[u32], alpha: Dd) -> Dd {
    let width = kappa.first().copied().unwrap_or(0) as usize;
    let kconj = conj_cols(kappa, width);
    let mconj = conj_cols(mu, width);
    let wk: usize = kappa.iter().map(|&p| p as usize).sum();
    let wm: usize = mu.iter().map(|&p| p as usize).sum();

    let mut num: Vec<Dd> = Vec::with_capacity(wm + (wk - wm) * 2);
    let mut den: Vec<Dd> = Vec::with_capacity(wk);
    for (i0, &rowlen) in mu.iter().enumerate() {
        let i = i0 + 1;
        for j in 1..=rowlen as usize {
            let same = kconj[j - 1] == mconj[j - 1];
            num.push(if same {
                hook_lower(mu, &mconj, i, j, alpha)
            } else {
                hook_upper(mu, &mconj, i, j, alpha)
            });
        }
    }
    for (i0, &rowlen) in kappa.iter().enumerate() {
        let i = i0 + 1;
        for j in 1..=rowlen as usize {
            let same = kconj[j - 1] == mconj[j - 1];
            den.push(if same {
                hook_lower(kappa, &kconj, i, j, alpha)
            } else {
                hook_upper(kappa, &kconj, i, j, alpha)
            });
        }
    }
    for l in (wm + 1)..=wk {
        num.push(Dd::from_f64(l as f64));
        num.push(alpha);
    }

    let mut acc = Dd::ONE;
    let (mut i, mut j) = (0usize, 0usize);
    while i < num.len() || j < den.len() {
        if j >= den.len() || (i < num.len() && acc.hi.abs() <= 1.0) {
            acc = acc * num[i];
            i += 1;
        } else {
            acc = acc / den[j];
            j += 1;
        }
    }
    acc
}

/// Enumerate horizontal-strip predecessors μ of κ: κ₁ ≥ μ₁ ≥ κ₂ ≥ μ₂ ≥ ….
fn strip_predecessors(kappa: &Partition) -> Vec<Vec<u32>> {
    let len = kappa.len();
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; len];
    fn rec(kappa: &Partition, current: &mut Vec<u32>, row: usize, out: &mut Vec<Vec<u32>>) {
        if row == current.len() {
            out.push(current.clone());
            return;
        }
        let hi = kappa.part(row + 1);
        let lo = kappa.part(row + 2);
        for v in lo..=hi {
            current[row] = v;
            rec(kappa, current, row + 1, out);
        }
    }
    rec(kappa, &mut current, 0, &mut out);
    out
}

impl JackTable {
    pub fn build(r: usize, alpha: f64, max_weight: usize) -> JackTable {
        assert!(r >= 1 && alpha > 0.0);
        let parts = partitions_upto(r, max_weight);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut cutoff = vec![parts.len(); max_weight + 1];
        for (w, c) in cutoff.iter_mut().enumerate() {
            *c = parts.partition_point(|p| p.weight() <= w);
        }
        // Recover α as an exact rational 2/d in double-double when it came
        // from a Peirce parameter; hook products then stay DD-accurate.
        let dg = 2.0 / alpha;
        let alpha_dd = if (dg - dg.round()).abs() < 1e-9 && dg.round() >= 1.0 {
            Dd::from_f64(2.0) / Dd::from_f64(dg.round())
        } else {
            Dd::from_f64(alpha)
        };
        let strips: Vec<Vec<Strip>> = parts
            .par_iter()
            .map(|kappa| {
                strip_predecessors(kappa)
                    .into_iter()
                    .map(|mu_parts| {
                        let mu = Partition::new(&mu_parts);
                        let skip = (kappa.weight() - mu.weight()) as u16;
                        let g = gamma_dd(kappa.parts(), mu.parts(), alpha_dd);
                        Strip {
                            mu: index[&mu] as u32,
                            skip,
                            g_hi: g.hi,
                            g_lo: g.lo,
                        }
                    })
                    .collect()
            })
            .collect();
        let mut table = JackTable {
            r,
            alpha,
            max_weight,
            parts,
            index,
            cutoff,
            strips,
            c_at_ones: Vec::new(),
        };
        let ones = vec![C64::new(1.0, 0.0); r];
        let vals: Vec<crate::dd::CDd> = table.eval_all(&ones, max_weight);
        table.c_at_ones = vals.iter().map(|v| v.to_c64().re).collect();
        table
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    pub fn partition_index(&self, m: &Partition) -> Result<usize> {
        self.index
            .get(m)
            .copied()
            .ok_or(Error::WeightTooLarge(m.weight(), self.max_weight))
    }

    /// Number of partitions of weight ≤ w (they form a prefix of `parts`).
    pub fn len_upto(&self, w: usize) -> usize {
        self.cutoff[w.min(self.max_weight)]
    }

    /// C_m(1, …, 1) with r ones.
    pub fn c_at_ones(&self, idx: usize) -> f64 {
        self.c_at_ones[idx]
    }

    /// Evaluate C_κ at the given point for every κ with |κ| ≤ cap.
    /// `points` may be shorter than r (padded with zeros).
    pub fn eval_all<A: Arith>(&self, points: &[C64], cap: usize) -> Vec<A> {
        let cap = cap.min(self.max_weight);
        let np = self.cutoff[cap];
        let mut vals: Vec<A> = vec![A::zero(); np];
        if np == 0 {
            return vals;
        }
        vals[0] = A::one();
        let mut padded = points.to_vec();
        padded.resize(self.r, C64::new(0.0, 0.0));
        let mut pows: Vec<A> = Vec::with_capacity(cap + 1);
        for &x in &padded {
            let xa = A::from_c64(x);
            pows.clear();
            pows.push(A::one());
            for k in 1..=cap {
                let prev = pows[k - 1];
                pows.push(prev * xa);
            }
            let mut new_vals = vec![A::zero(); np];
            for (ki, slot) in new_vals.iter_mut().enumerate() {
                let mut acc = A::zero();
                for strip in &self.strips[ki] {
                    let v = vals[strip.mu as usize];
                    acc = acc + (v * pows[strip.skip as usize]).mul_real2(strip.g_hi, strip.g_lo);
                }
                *slot = acc;
            }
            vals = new_vals;
        }
        vals
    }

    /// Single C-normalized Jack value C_m^{(α)}(points).
    pub fn eval_one(&self, m: &Partition, points: &[C64]) -> Result<C64> {
        let idx = self.partition_index(m)?;
        let vals: Vec<C64> = self.eval_all(points, m.weight());
        Ok(vals[idx])
    }
}

/// Evaluate C_m^{(α)} at arbitrary complex points through the shared cache.
pub fn jack_c(m: &Partition, alpha: f64, points: &[C64]) -> Result<C64> {
    if m.len() > points.len() {
        return Ok(C64::new(0.0, 0.0));
    }
    let table = table_for_params(points.len(), alpha, m.weight());
    table.eval_one(m, points)
}

type TableKey = (usize, u64);

fn cache() -> &'static Mutex<HashMap<TableKey, Arc<JackTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<TableKey, Arc<JackTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared Jack table for (r, α), grown on demand to cover `max_weight`.
pub fn table_for_params(r: usize, alpha: f64, max_weight: usize) -> Arc<JackTable> {
    let key = (r, alpha.to_bits());
    {
        let guard = cache().lock().unwrap();
        if let Some(t) = guard.get(&key) {
            if t.max_weight >= max_weight {
                return Arc::clone(t);
            }
        }
    }
    let rounded = max_weight.div_ceil(20) * 20;
    let table = Arc::new(JackTable::build(r, alpha, rounded));
    cache().lock().unwrap().insert(key, Arc::clone(&table));
    table
}

/// Shared Jack table for an algebra (α = 2/d), covering `max_weight`.
pub fn table_for(alg: Algebra, max_weight: usize) -> Arc<JackTable> {
    table_for_params(alg.r, alg.alpha(), max_weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn degree_two_closed_forms() {
        // C_(2) = m_2 + 2/(1+α) m_11, C_(11) = 2α/(1+α) m_11
        for alpha in [2.0, 1.0, 0.5, 2.0 / 3.0] {
            let t = JackTable::build(2, alpha, 4);
            let x = C64::new(0.7, 0.2);
            let y = C64::new(-0.3, 0.5);
            let c2 = t.eval_one(&Partition::new(&[2]), &[x, y]).unwrap();
            let c11 = t.eval_one(&Partition::new(&[1, 1]), &[x, y]).unwrap();
            let m2 = x * x + y * y;
            let m11 = x * y;
            let want2 = m2 + m11 * (2.0 / (1.0 + alpha));
            let want11 = m11 * (2.0 * alpha / (1.0 + alpha));
            assert!((c2 - want2).norm() < 1e-13, "α={alpha}: {c2} vs {want2}");
            assert!((c11 - want11).norm() < 1e-13, "α={alpha}: {c11} vs {want11}");
        }
    }

    #[test]
    fn normalization_sum_is_power_sum() {
        // Σ_{|m|=k} C_m(t) = (Σ t_i)^k: pins every hook and γ convention.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &(r, alpha) in &[(1usize, 2.0f64), (2, 2.0), (2, 1.0), (3, 2.0), (3, 1.0), (3, 0.7)] {
            let table = JackTable::build(r, alpha, 10);
            let pts: Vec<C64> = (0..r)
                .map(|_| C64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0))
                .collect();
            let vals: Vec<C64> = table.eval_all(&pts, 10);
            let s: C64 = pts.iter().sum();
            for k in 0..=10usize {
                let mut total = C64::new(0.0, 0.0);
                for (i, p) in table.parts().iter().enumerate() {
                    if p.weight() == k && i < vals.len() {
                        total += vals[i];
                    }
                }
                let want = s.powu(k as u32);
                assert!(
                    (total - want).norm() <= 1e-10 * want.norm().max(1.0),
                    "r={r} α={alpha} k={k}: {total} vs {want}"
                );
            }
        }
    }

    #[test]
    fn schur_proportionality_at_alpha_one() {
        // α = 1: C_m^{(1)} ∝ Schur s_m; the ratio must not depend on the
        // point. Schur by the bialternant formula (independent oracle).
        fn schur(parts: &[u32], x: &[C64]) -> C64 {
            let n = x.len();
            let lam: Vec<i64> = (0..n).map(|i| *parts.get(i).unwrap_or(&0) as i64).collect();
            let det = |exps: &[i64]| -> C64 {
                // det(x_i^{e_j}) for n ≤ 3
                let p = |i: usize, e: i64| x[i].powi(e as i32);
                match n {
                    1 => p(0, exps[0]),
                    2 => p(0, exps[0]) * p(1, exps[1]) - p(0, exps[1]) * p(1, exps[0]),
                    3 => {
                        p(0, exps[0]) * (p(1, exps[1]) * p(2, exps[2]) - p(1, exps[2]) * p(2, exps[1]))
                            - p(0, exps[1])
                                * (p(1, exps[0]) * p(2, exps[2]) - p(1, exps[2]) * p(2, exps[0]))
                            + p(0, exps[2])
                                * (p(1, exps[0]) * p(2, exps[1]) - p(1, exps[1]) * p(2, exps[0]))
                    }
                    _ => unreachable!(),
                }
            };
            let num: Vec<i64> = (0..n).map(|j| lam[j] + (n - 1 - j) as i64).collect();
            let den: Vec<i64> = (0..n).map(|j| (n - 1 - j) as i64).collect();
            det(&num) / det(&den)
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for r in [2usize, 3] {
            let table = JackTable::build(r, 1.0, 6);
            for mparts in [vec![2u32], vec![2, 1], vec![3, 1], vec![2, 2]] {
                if mparts.len() > r {
                    continue;
                }
                let m = Partition::new(&mparts);
                let mut ratios = Vec::new();
                for _ in 0..5 {
                    let pts: Vec<C64> = (0..r)
                        .map(|_| {
                            C64::new(rng.gen::<f64>() + 0.5, rng.gen::<f64>() * 2.0 - 1.0)
                        })
                        .collect();
                    let c = table.eval_one(&m, &pts).unwrap();
                    let s = schur(m.parts(), &pts);
                    ratios.push(c / s);
                }
                for w in ratios.windows(2) {
                    assert!(
                        (w[0] - w[1]).norm() <= 1e-10 * w[0].norm(),
                        "ratio drifts: {ratios:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn trailing_zero_stability() {
        // C_m(t, 0) for a single-row m equals t^|m|; longer partitions vanish.
        let table = JackTable::build(3, 2.0, 6);
        let t = C64::new(0.8, -0.3);
        let vals: Vec<C64> = table.eval_all(&[t], 6);
        for (i, p) in table.parts().iter().enumerate() {
            if i >= vals.len() {
                break;
            }
            if p.len() <= 1 {
                let want = t.powu(p.weight() as u32);
                assert!((vals[i] - want).norm() < 1e-12 * want.norm().max(1.0));
            } else {
                assert!(vals[i].norm() < 1e-14);
            }
        }
    }

    #[test]
    fn empty_partition_is_one() {
        let table = JackTable::build(2, 2.0, 2);
        let v = table
            .eval_one(&Partition::empty(), &[C64::new(0.3, 0.1), C64::new(0.2, 0.0)])
            .unwrap();
        assert!((v - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn weight_too_large_errors() {
        let table = JackTable::build(2, 2.0, 4);
        assert!(matches!(
            table.eval_one(&Partition::new(&[5]), &[C64::new(1.0, 0.0)]),
            Err(Error::WeightTooLarge(5, 4))
        ));
    }
}
