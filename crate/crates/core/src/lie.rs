//! Lie algebra weight systems by tensor contraction, and the su(2) weights of
//! polywheels.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Flag, OrientedGraph};
use crate::homology::{closure, GraphVector};
use crate::linalg::{factorial, q, rank, solve_affine, Matrix, Q};
use crate::partition::{partitions, Partition};

/// Structure constants `c_{ijk}` (indices lowered) and inverse metric
/// `σ^{ij}` of a metric Lie algebra in some basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieData {
    dim: usize,
    metric_inv: Matrix,
    structure: Vec<Q>,
}

impl LieData {
    /// Checks symmetry and invertibility of the metric and total
    /// antisymmetry of the structure constants; ad-invariance is not checked.
    pub fn new(metric_inv: Matrix, structure: Vec<Q>) -> Result<Self> {
        let n = metric_inv.len();
        if metric_inv.iter().any(|r| r.len() != n) || structure.len() != n * n * n {
            return Err(Error::Inconsistent("Lie data shapes disagree".into()));
        }
        for (i, row) in metric_inv.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if *x != metric_inv[j][i] {
                    return Err(Error::Inconsistent("metric is not symmetric".into()));
                }
            }
        }
        if rank(&metric_inv) != n {
            return Err(Error::Singular("metric is degenerate".into()));
        }
        let at = |i: usize, j: usize, k: usize| &structure[(i * n + j) * n + k];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = at(i, j, k);
                    if *c != -at(j, i, k).clone() || *c != -at(i, k, j).clone() {
                        return Err(Error::Inconsistent("structure constants not antisymmetric".into()));
                    }
                }
            }
        }
        Ok(LieData { dim: n, metric_inv, structure })
    }

    /// Totally antisymmetric tensor from its values on `i < j < k`.
    pub fn from_antisymmetric(metric_inv: Matrix, values: &[((usize, usize, usize), Q)]) -> Result<Self> {
        let n = metric_inv.len();
        let mut s = vec![Q::zero(); n * n * n];
        for ((i, j, k), v) in values {
            let (i, j, k) = (*i, *j, *k);
            for (p, sg) in
                [((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1), ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1)]
            {
                s[(p.0 * n + p.1) * n + p.2] = v * q(sg);
            }
        }
        LieData::new(metric_inv, s)
    }

    /// su(2) with `c_{ijk} = ε_{ijk}` and metric `δ`.
    pub fn su2() -> Self {
        LieData::from_antisymmetric(crate::linalg::identity(3), &[((0, 1, 2), q(1))]).expect("valid")
    }

    /// sl(2) in the basis (e, h, f) with the trace form of the defining
    /// representation: `(e,f) = 1`, `(h,h) = 2`.
    pub fn sl2() -> Self {
        let mut m = crate::linalg::zeros(3, 3);
        m[0][2] = q(1);
        m[2][0] = q(1);
        m[1][1] = crate::linalg::qr(1, 2);
        // c_{ehf} = ([e,h], f) = (-2e, f) = -2
        LieData::from_antisymmetric(m, &[((0, 1, 2), q(-2))]).expect("valid")
    }

    /// The one-dimensional abelian Lie algebra.
    pub fn abelian() -> Self {
        LieData::new(crate::linalg::identity(1), vec![Q::zero()]).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn metric_inv(&self) -> &Matrix {
        &self.metric_inv
    }
}

/// Sparse tensor whose legs are graph flags.
struct Tensor {
    legs: Vec<Flag>,
    entries: BTreeMap<u64, Q>,
}

fn digit(idx: u64, pos: usize, n: u64) -> u64 {
    (idx / n.pow(pos as u32)) % n
}

fn contract(a: &Tensor, b: &Tensor, n: usize) -> Tensor {
    let n64 = n as u64;
    let shared: Vec<Flag> = a.legs.iter().copied().filter(|l| b.legs.contains(l)).collect();
    let a_only: Vec<usize> = (0..a.legs.len()).filter(|&p| !shared.contains(&a.legs[p])).collect();
    let b_only: Vec<usize> = (0..b.legs.len()).filter(|&p| !shared.contains(&b.legs[p])).collect();
    let a_sh: Vec<usize> = shared.iter().map(|l| a.legs.iter().position(|x| x == l).unwrap()).collect();
    let b_sh: Vec<usize> = shared.iter().map(|l| b.legs.iter().position(|x| x == l).unwrap()).collect();
    let pack =
        |idx: u64, positions: &[usize]| positions.iter().rev().fold(0u64, |acc, &p| acc * n64 + digit(idx, p, n64));
    let mut groups: BTreeMap<u64, Vec<(u64, &Q)>> = BTreeMap::new();
    for (idx, v) in &b.entries {
        groups.entry(pack(*idx, &b_sh)).or_default().push((pack(*idx, &b_only), v));
    }
    let scale = n64.pow(a_only.len() as u32);
    let mut entries: BTreeMap<u64, Q> = BTreeMap::new();
    for (idx, v) in &a.entries {
        if let Some(g) = groups.get(&pack(*idx, &a_sh)) {
            let ao = pack(*idx, &a_only);
            for (bo, w) in g {
                let e = entries.entry(ao + bo * scale).or_insert_with(Q::zero);
                *e += v * *w;
            }
        }
    }
    entries.retain(|_, v| !v.is_zero());
    let legs = a_only.iter().map(|&p| a.legs[p]).chain(b_only.iter().map(|&p| b.legs[p])).collect();
    Tensor { legs, entries }
}

/// The weight `c_Γ(g)`: structure constants at the vertices in slot order,
/// inverse metric along the edges, all indices summed.
pub fn lie_weight(g: &OrientedGraph, l: &LieData) -> Q {
    let n = l.dim;
    let mut ts: Vec<Tensor> = Vec::new();
    let mut vertex = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = l.c(i, j, k);
                if !c.is_zero() {
                    vertex.insert((i + n * (j + n * k)) as u64, c.clone());
                }
            }
        }
    }
    let mut edge = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if !l.metric_inv[i][j].is_zero() {
                edge.insert((i + n * j) as u64, l.metric_inv[i][j].clone());
            }
        }
    }
    for v in 0..g.vertex_count() {
        ts.push(Tensor { legs: vec![3 * v, 3 * v + 1, 3 * v + 2], entries: vertex.clone() });
    }
    for (a, b) in g.edges() {
        ts.push(Tensor { legs: vec![a, b], entries: edge.clone() });
    }
    let mut scalar = Q::one();
    loop {
        ts.retain(|t| {
            if t.legs.is_empty() {
                scalar *= t.entries.get(&0).cloned().unwrap_or_else(Q::zero);
                false
            } else {
                true
            }
        });
        if ts.is_empty() || scalar.is_zero() {
            return scalar;
        }
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                let sh = ts[i].legs.iter().filter(|x| ts[j].legs.contains(x)).count();
                if sh == 0 {
                    continue;
                }
                let r = ts[i].legs.len() + ts[j].legs.len() - 2 * sh;
                let cost = ts[i].entries.len() * ts[j].entries.len();
                if best.is_none_or(|(_, _, br, bc)| (r, cost) < (br, bc)) {
                    best = Some((i, j, r, cost));
                }
            }
        }
        let (i, j, _, _) = best.expect("a tensor with open legs shares one with another");
        let b = ts.swap_remove(j);
        let a = ts.swap_remove(i);
        ts.push(contract(&a, &b, n));
    }
}

pub fn lie_weight_vector(v: &GraphVector, l: &LieData) -> Q {
    v.iter().fold(Q::zero(), |acc, (k, c)| acc + c * lie_weight(&k.graph(), l))
}

fn check_even(lambda: &Partition) -> Result<()> {
    if lambda.is_even() {
        Ok(())
    } else {
        Err(Error::OutOfEnvelope(format!("partition {lambda} has an odd part")))
    }
}

/// `c⟨w_λ⟩(su(2)) = 3^{#zero parts} 2^{j-1} (-1)^k (2k+1)! / (2^{k-1} k!)`
/// with `j` the number of positive parts.
pub fn su2_closed_form(lambda: &Partition) -> Result<Q> {
    check_even(lambda)?;
    let zeros = lambda.parts().iter().filter(|&&p| p == 0).count() as u32;
    let j = lambda.len() as u32 - zeros;
    let k = (lambda.weight() / 2) as u64;
    let three = crate::linalg::pow(&q(3), zeros);
    if j == 0 {
        return Ok(three);
    }
    let sign = if k.is_multiple_of(2) { q(1) } else { q(-1) };
    let w = sign * factorial(2 * k + 1) / (crate::linalg::pow(&q(2), k as u32 - 1) * factorial(k));
    Ok(three * crate::linalg::pow(&q(2), j - 1) * w)
}

/// The same weight from the spoke-joining recursion, memoized.
pub fn su2_recursion(lambda: &Partition) -> Result<Q> {
    check_even(lambda)?;
    let mut memo = BTreeMap::new();
    Ok(recur(lambda.parts(), &mut memo))
}

fn recur(parts: &[u32], memo: &mut BTreeMap<Vec<u32>, Q>) -> Q {
    let zeros = parts.iter().filter(|&&p| p == 0).count() as u32;
    let mut key: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    let three = crate::linalg::pow(&q(3), zeros);
    if key.is_empty() {
        return three;
    }
    if let Some(v) = memo.get(&key) {
        return three * v;
    }
    let k = key.iter().sum::<u32>() / 2;
    let with = |s: usize, repl: &[u32]| -> Vec<u32> {
        let mut v: Vec<u32> = key.iter().enumerate().filter(|(i, _)| *i != s).map(|(_, &p)| p).collect();
        v.extend_from_slice(repl);
        v
    };
    let mut total = Q::zero();
    for (s, &ls) in key.iter().enumerate() {
        total += q(ls as i64 / 2) * recur(&with(s, &[ls - 2]), memo);
        for l in (0..=ls - 2).step_by(2) {
            total -= q(l as i64 + 1) * recur(&with(s, &[ls - l - 2, l]), memo);
        }
    }
    for s in 0..key.len() {
        for t in s + 1..key.len() {
            let mut v: Vec<u32> = key.iter().enumerate().filter(|(i, _)| *i != s && *i != t).map(|(_, &p)| p).collect();
            v.push(key[s] + key[t] - 2);
            total -= q(2 * key[s] as i64 * key[t] as i64) * recur(&v, memo);
        }
    }
    let value = total / q(k as i64);
    memo.insert(key, value.clone());
    three * value
}

/// `(C_{m_1} ⋯ C_{m_j})(v)`: components of each term are distributed over
/// ordered slots, slot `i` taking exactly `2 m_i` vertices.
pub fn weight_product(ms: &[usize], v: &GraphVector, l: &LieData) -> Result<Q> {
    let total: usize = ms.iter().sum();
    if total != v.degree() {
        return Err(Error::DegreeMismatch { expected: v.degree(), found: total });
    }
    let mut acc = Q::zero();
    for (key, coef) in v.iter() {
        let g = key.graph();
        let comps = g.connected_components();
        let degs: Vec<usize> = comps.iter().map(OrientedGraph::degree).collect();
        let ways = assignments(&degs, &mut ms.to_vec(), 0);
        if ways == 0 {
            continue;
        }
        let w = comps.iter().fold(Q::one(), |a, c| a * lie_weight(c, l));
        acc += coef * w * q(ways as i64);
    }
    Ok(acc)
}

fn assignments(degs: &[usize], room: &mut [usize], i: usize) -> u64 {
    if i == degs.len() {
        return room.iter().all(|&r| r == 0) as u64;
    }
    let mut n = 0;
    for s in 0..room.len() {
        if room[s] >= degs[i] {
            room[s] -= degs[i];
            n += assignments(degs, room, i + 1);
            room[s] += degs[i];
        }
    }
    n
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolywheelSolution {
    /// Coefficients on `⟨w_{2P}⟩` for partitions `P` of `k`.
    Unique(Vec<(Partition, Q)>),
    /// The weight products do not determine the coefficients.
    Indeterminate { particular: Vec<(Partition, Q)>, nullspace: Vec<Vec<Q>> },
    /// No polywheel combination has the same weight products.
    Inconsistent,
}

/// Solves `Σ_P a_P (C_μ)(⟨w_{2P}⟩) = (C_μ)(v)` over all partitions `μ` of `k`.
pub fn solve_polywheel_coords(v: &GraphVector, l: &LieData) -> Result<PolywheelSolution> {
    let k = v.degree() as u32;
    let ps = partitions(k);
    let closures: Vec<GraphVector> = ps.iter().map(|p| closure(&p.doubled())).collect::<Result<_>>()?;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for mu in &ps {
        let ms: Vec<usize> = mu.parts().iter().map(|&x| x as usize).collect();
        a.push(closures.iter().map(|c| weight_product(&ms, c, l)).collect::<Result<Vec<_>>>()?);
        b.push(weight_product(&ms, v, l)?);
    }
    let label = |x: Vec<Q>| ps.iter().map(Partition::doubled).zip(x).collect::<Vec<_>>();
    Ok(match solve_affine(&a, &b) {
        None => PolywheelSolution::Inconsistent,
        Some((x, null)) if null.is_empty() => PolywheelSolution::Unique(label(x)),
        Some((x, null)) => PolywheelSolution::Indeterminate { particular: label(x), nullspace: null },
    })
}

/// The matrices `(x_i)_{jk} = ε_{ijk}` of the adjoint action of su(2).
pub fn su2_generators() -> [Matrix; 3] {
    let l = LieData::su2();
    core::array::from_fn(|i| (0..3).map(|j| (0..3).map(|k| l.c(i, j, k).clone()).collect()).collect())
}
