//! Integer partitions, stored with weakly decreasing parts.

use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{factorial, Q};
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; zero parts are kept (the wheel convention needs them).
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    pub fn doubled(&self) -> Partition {
        Partition { parts: self.parts.iter().map(|p| 2 * p).collect() }
    }

    pub fn halved(&self) -> Option<Partition> {
        self.is_even().then(|| Partition { parts: self.parts.iter().map(|p| p / 2).collect() })
    }

    /// Runs of equal parts as (part, multiplicity), largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Product of the factorials of the multiplicities.
    pub fn symmetry_factor(&self) -> Q {
        self.multiplicities().iter().fold(Q::one(), |acc, &(_, m)| acc * factorial(m as u64))
    }

    /// Parts in increasing order, the order used by the appendix tables.
    pub fn ascending(&self) -> Vec<u32> {
        self.parts.iter().rev().copied().collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// All partitions of `n` in increasing lexicographic order of their
/// decreasing part sequences: (1,1,..,1) first, (n) last.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out.sort();
    out
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Even partitions of `2k`, in the order of `partitions(k)`.
pub fn even_partitions(k: u32) -> Vec<Partition> {
    partitions(k).iter().map(Partition::doubled).collect()
}

pub fn count(n: u32) -> usize {
    partitions(n).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn counts() {
        let c: Vec<usize> = (1..=6).map(count).collect();
        assert_eq!(c, vec![1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn order() {
        let p = partitions(4);
        assert_eq!(p[0].parts(), &[1, 1, 1, 1]);
        assert_eq!(p[1].parts(), &[2, 1, 1]);
        assert_eq!(p[2].parts(), &[2, 2]);
        assert_eq!(p[4].parts(), &[4]);
        assert_eq!(Partition::new(vec![2, 4, 2]).multiplicities(), vec![(4, 1), (2, 2)]);
    }
}
