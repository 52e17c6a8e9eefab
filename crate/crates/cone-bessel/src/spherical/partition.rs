//! Partitions m₁ ≥ m₂ ≥ … ≥ m_r ≥ 0 and their deterministic enumeration.

use std::fmt;

/// A partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[u32]) -> Partition {
        let mut v: Vec<u32> = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        assert!(
            v.windows(2).all(|w| w[0] >= w[1]),
            "parts must be nonincreasing: {parts:?}"
        );
        Partition(v)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// m_i with 1-based index, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Column length κ'_j = #{i : κ_i ≥ j}, 1-based j.
    pub fn conj_col(&self, j: u32) -> u32 {
        self.0.iter().filter(|&&p| p >= j).count() as u32
    }

    /// The reversal m* = (m_r, …, m₁) padded to length r.
    pub fn reversed(&self, r: usize) -> Vec<u32> {
        (0..r).map(|i| self.part(r - i)).collect()
    }

    /// Padded parts vector of length r.
    pub fn padded(&self, r: usize) -> Vec<u32> {
        (1..=r).map(|i| self.part(i)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of length ≤ r and weight ≤ k, in graded colex order:
/// sorted by weight, ties broken by comparing the padded tuples from the
/// last component.
pub fn partitions_upto(r: usize, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(out: &mut Vec<Partition>, current: &mut Vec<u32>, r: usize, rem: usize, max: u32) {
        out.push(Partition::new(current));
        if current.len() == r {
            return;
        }
        let mut p = 1u32;
        while p <= max && p as usize <= rem {
            current.push(p);
            rec(out, current, r, rem - p as usize, p);
            current.pop();
            p += 1;
        }
    }
    rec(&mut out, &mut current, r, k, k as u32);
    out.sort_by(|a, b| {
        a.weight().cmp(&b.weight()).then_with(|| {
            let pa = a.padded(r);
            let pb = b.padded(r);
            for i in (0..r).rev() {
                match pa[i].cmp(&pb[i]) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_enumeration() {
        let ps = partitions_upto(1, 3);
        let want: Vec<Partition> = [vec![], vec![1], vec![2], vec![3]]
            .iter()
            .map(|v| Partition::new(v))
            .collect();
        assert_eq!(ps, want);
    }

    #[test]
    fn rank_two_enumeration() {
        let ps = partitions_upto(2, 2);
        let want: Vec<Partition> = [vec![], vec![1], vec![2], vec![1, 1]]
            .iter()
            .map(|v| Partition::new(v))
            .collect();
        assert_eq!(ps, want);
    }

    #[test]
    fn count_matches_brute_force() {
        // brute force: nested loops over (m1, m2, m3)
        let mut count = 0usize;
        for m1 in 0..=6u32 {
            for m2 in 0..=m1 {
                for m3 in 0..=m2 {
                    if m1 + m2 + m3 <= 6 {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(partitions_upto(3, 6).len(), count);
    }

    #[test]
    fn conjugate_columns() {
        let p = Partition::new(&[4, 2, 1]);
        assert_eq!(p.conj_col(1), 3);
        assert_eq!(p.conj_col(2), 2);
        assert_eq!(p.conj_col(3), 1);
        assert_eq!(p.conj_col(4), 1);
        assert_eq!(p.conj_col(5), 0);
        assert_eq!(p.reversed(4), vec![0, 1, 2, 4]);
    }
}
