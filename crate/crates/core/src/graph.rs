//! Oriented trivalent multigraphs as perfect matchings on vertex flags.
//!
//! Flag `3v + s` is slot `s` of vertex `v`. The slot order 0, 1, 2 at each
//! vertex is the cyclic order of its half-edges.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type Flag = usize;

/// An edge written as `((v, s), (w, t))`: vertex and slot of each end.
pub type SlotPair = ((usize, usize), (usize, usize));

#[inline]
pub fn flag(v: usize, s: usize) -> Flag {
    3 * v + s
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedGraph {
    partner: Vec<Flag>,
}

impl OrientedGraph {
    /// The graph with no vertices, the unit for disjoint union.
    pub fn empty() -> Self {
        OrientedGraph { partner: Vec::new() }
    }

    /// Builds a graph from flag pairs `((v, s), (w, t))`.
    pub fn from_pairs(vertex_count: usize, pairs: &[SlotPair]) -> Result<Self> {
        if !vertex_count.is_multiple_of(2) {
            return Err(Error::Malformed(format!("odd vertex count {vertex_count}")));
        }
        const NONE: usize = usize::MAX;
        let mut partner = vec![NONE; 3 * vertex_count];
        for &((v, s), (w, t)) in pairs {
            if v >= vertex_count || w >= vertex_count || s > 2 || t > 2 {
                return Err(Error::Malformed(format!("flag {v}.{s} or {w}.{t} out of range")));
            }
            let (a, b) = (flag(v, s), flag(w, t));
            if a == b {
                return Err(Error::Malformed(format!("flag {v}.{s} paired with itself")));
            }
            for (x, (u, r)) in [(a, (v, s)), (b, (w, t))] {
                if partner[x] != NONE {
                    return Err(Error::Malformed(format!("flag {u}.{r} referenced twice")));
                }
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(f) = partner.iter().position(|&p| p == NONE) {
            let missing: Vec<_> =
                (f..partner.len()).filter(|&x| partner[x] == NONE).map(|x| format!("{}.{}", x / 3, x % 3)).collect();
            return Err(Error::Malformed(format!("flags {} unmatched", missing.join(", "))));
        }
        Ok(OrientedGraph { partner })
    }

    /// Trusted constructor from a partner array.
    pub fn from_partner(partner: Vec<Flag>) -> Result<Self> {
        let n = partner.len();
        if !n.is_multiple_of(6) {
            return Err(Error::Malformed(format!("{n} flags do not form an even vertex count")));
        }
        for (f, &p) in partner.iter().enumerate() {
            if p >= n || p == f || partner[p] != f {
                return Err(Error::Malformed(format!("flag {}.{} badly paired", f / 3, f % 3)));
            }
        }
        Ok(OrientedGraph { partner })
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len() / 3
    }

    /// Half the vertex count.
    pub fn degree(&self) -> usize {
        self.partner.len() / 6
    }

    pub fn partner(&self, f: Flag) -> Flag {
        self.partner[f]
    }

    pub fn partners(&self) -> &[Flag] {
        &self.partner
    }

    /// Edges as flag pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(Flag, Flag)> {
        (0..self.partner.len()).filter(|&f| f < self.partner[f]).map(|f| (f, self.partner[f])).collect()
    }

    pub fn is_loop(&self, e: (Flag, Flag)) -> bool {
        e.0 / 3 == e.1 / 3
    }

    pub fn has_loop(&self) -> bool {
        (0..self.partner.len()).any(|f| f / 3 == self.partner[f] / 3)
    }

    pub fn theta() -> Self {
        OrientedGraph { partner: vec![3, 5, 4, 0, 2, 1] }
    }

    /// The necklace with `m` beads: a cycle on `2m` vertices with every other
    /// edge doubled, built as a `2m`-wheel with adjacent spokes joined.
    pub fn necklace(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::OutOfEnvelope("necklace needs at least one bead".into()));
        }
        let mut g = wheels(&[2 * m]);
        for b in 0..m {
            g.join(flag(2 * b, 0), flag(2 * b + 1, 0));
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &OrientedGraph) -> OrientedGraph {
        let off = self.partner.len();
        let mut partner = self.partner.clone();
        partner.extend(other.partner.iter().map(|p| p + off));
        OrientedGraph { partner }
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn component_vertices(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for s in 0..3 {
                    let w = self.partner[flag(v, s)] / 3;
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph on a union of components, vertices renumbered in order.
    pub fn induced(&self, vertices: &[usize]) -> OrientedGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut partner = Vec::with_capacity(3 * vertices.len());
        for &v in vertices {
            for s in 0..3 {
                let p = self.partner[flag(v, s)];
                partner.push(flag(index[p / 3], p % 3));
            }
        }
        OrientedGraph { partner }
    }

    pub fn connected_components(&self) -> Vec<OrientedGraph> {
        self.component_vertices().iter().map(|c| self.induced(c)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_vertices().len() <= 1
    }

    /// Relabels vertex `v` as `perm[v]`, keeping slots.
    pub fn relabel(&self, perm: &[usize]) -> OrientedGraph {
        let mut partner = vec![0; self.partner.len()];
        for (f, &p) in self.partner.iter().enumerate() {
            partner[flag(perm[f / 3], f % 3)] = flag(perm[p / 3], p % 3);
        }
        OrientedGraph { partner }
    }

    /// Exchanges two slots at one vertex, reversing its cyclic order.
    pub fn swap_slots(&self, v: usize, a: usize, b: usize) -> OrientedGraph {
        let (fa, fb) = (flag(v, a), flag(v, b));
        let map = |f: Flag| {
            if f == fa {
                fb
            } else if f == fb {
                fa
            } else {
                f
            }
        };
        let mut partner = vec![0; self.partner.len()];
        for (f, &p) in self.partner.iter().enumerate() {
            partner[map(f)] = map(p);
        }
        OrientedGraph { partner }
    }

    /// Rotates the slots at `v` cyclically; the orientation is unchanged.
    pub fn rotate_slots(&self, v: usize) -> OrientedGraph {
        self.swap_slots(v, 0, 1).swap_slots(v, 1, 2)
    }

    /// Inserts a bubble (a 2-wheel with its spokes on the two ends) into the
    /// edge through flag `f`.
    pub fn insert_bubble(&self, f: Flag) -> OrientedGraph {
        let p = self.partner[f];
        let n = self.vertex_count();
        let (a, b) = (n, n + 1);
        let mut partner = self.partner.clone();
        partner.extend([0; 6]);
        let mut set = |x: Flag, y: Flag| {
            partner[x] = y;
            partner[y] = x;
        };
        set(flag(a, 0), f);
        set(flag(b, 0), p);
        set(flag(a, 2), flag(b, 1));
        set(flag(b, 2), flag(a, 1));
        OrientedGraph { partner }
    }

    /// Pairs two flags, overwriting whatever they were paired with.
    pub(crate) fn join(&mut self, a: Flag, b: Flag) {
        self.partner[a] = b;
        self.partner[b] = a;
    }
}

/// Disjoint wheels with rims joined and spokes (slot 0) left self-paired.
/// Rim vertex `t` has slots (spoke, rim in, rim out) and rim out meets the
/// next vertex's rim in. Callers must pair every spoke.
pub(crate) fn wheels(parts: &[usize]) -> OrientedGraph {
    let total: usize = parts.iter().sum();
    let mut partner: Vec<Flag> = (0..3 * total).collect();
    let mut base = 0;
    for &p in parts {
        for t in 0..p {
            let out = flag(base + t, 2);
            let next_in = flag(base + (t + 1) % p, 1);
            partner[out] = next_in;
            partner[next_in] = out;
        }
        base += p;
    }
    OrientedGraph { partner }
}

/// Spoke flags of the wheels built by `wheels`.
pub(crate) fn spokes(parts: &[usize]) -> Vec<Flag> {
    let total: usize = parts.iter().sum();
    (0..total).map(|v| flag(v, 0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_shape() {
        let t = OrientedGraph::necklace(1).unwrap();
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.edges().len(), 3);
        let t2 = OrientedGraph::necklace(2).unwrap();
        assert_eq!(t2.vertex_count(), 4);
        assert_eq!(t2.edges().len(), 6);
        assert!(!t2.has_loop());
        assert!(OrientedGraph::necklace(0).is_err());
    }

    #[test]
    fn components() {
        let t = OrientedGraph::theta();
        let t2 = OrientedGraph::necklace(2).unwrap();
        let g = t.disjoint_union(&t2).disjoint_union(&t);
        let sizes: Vec<usize> = g.connected_components().iter().map(|c| c.vertex_count()).collect();
        assert_eq!(sizes, vec![2, 4, 2]);
        assert_eq!(OrientedGraph::necklace(3).unwrap().connected_components().len(), 1);
    }

    #[test]
    fn incomplete_matching() {
        let e = OrientedGraph::from_pairs(2, &[((0, 0), (1, 0)), ((0, 1), (1, 2))]).unwrap_err();
        assert!(alloc::format!("{e}").contains("0.2, 1.1"));
    }
}
