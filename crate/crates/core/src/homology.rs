//! Graph homology: vectors of canonical graphs, AS/IHX reduction, polywheel
//! closures, the coproduct and bubbling.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::canon::{canonical_form, canonicalize, GraphKey};
use crate::class::{Atom, ClassName};
use crate::error::{Error, Result};
use crate::graph::{flag, spokes, wheels, Flag, OrientedGraph};
use crate::linalg::{inverse, mat_vec, q, transpose, Matrix, Q};
use crate::partition::{partitions, Partition};

/// A rational combination of canonical graphs on `2 * degree` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphVector {
    degree: usize,
    terms: BTreeMap<GraphKey, Q>,
}

impl GraphVector {
    pub fn zero(degree: usize) -> Self {
        GraphVector { degree, terms: BTreeMap::new() }
    }

    pub fn from_graph(g: &OrientedGraph) -> Self {
        let mut v = GraphVector::zero(g.degree());
        v.add_graph(g, &Q::one());
        v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<GraphKey, Q> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GraphKey, &Q)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &GraphKey) -> Q {
        self.terms.get(key).cloned().unwrap_or_else(Q::zero)
    }

    /// Adds `coef * g`; graphs killed by AS are absorbed.
    pub fn add_graph(&mut self, g: &OrientedGraph, coef: &Q) {
        debug_assert_eq!(g.degree(), self.degree);
        let c = canonicalize(g);
        if c.sign != 0 {
            self.add_key(c.key, &(coef * Q::from_integer(c.sign.into())));
        }
    }

    /// Adds `coef` times a canonical representative.
    pub fn add_key(&mut self, key: GraphKey, coef: &Q) {
        if coef.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *e += coef;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&mut self, other: &GraphVector, coef: &Q) {
        for (k, v) in &other.terms {
            self.add_key(k.clone(), &(v * coef));
        }
    }

    pub fn scaled(&self, c: &Q) -> GraphVector {
        let mut out = GraphVector::zero(self.degree);
        out.add(self, c);
        out
    }

    /// Bilinear extension of disjoint union.
    pub fn union_product(&self, other: &GraphVector) -> GraphVector {
        let mut out = GraphVector::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            let ga = a.graph();
            for (b, y) in &other.terms {
                out.add_graph(&ga.disjoint_union(&b.graph()), &(x * y));
            }
        }
        out
    }
}

/// The three terms of the Jacobi relation at the edge through `f`.
///
/// With the edge joining `u` (legs `L1, L2` after it in cyclic order) to `v`
/// (legs `L3, L4`), the relation is
/// `G(u: L1 L2 | v: L3 L4) + G(u: L2 L3 | v: L1 L4) + G(u: L3 L1 | v: L2 L4) = 0`.
pub fn ihx_terms(g: &OrientedGraph, f: Flag) -> Result<[OrientedGraph; 3]> {
    let fv = g.partner(f);
    let (u, su, v, sv) = (f / 3, f % 3, fv / 3, fv % 3);
    if u == v {
        return Err(Error::LoopEdge);
    }
    let pos = [flag(u, (su + 1) % 3), flag(u, (su + 2) % 3), flag(v, (sv + 1) % 3), flag(v, (sv + 2) % 3)];
    let arrangements = [[0, 1, 2, 3], [1, 2, 0, 3], [2, 0, 1, 3]];
    let build = |arr: &[usize; 4]| {
        let mut at = [0usize; 4];
        for (p, &leg) in arr.iter().enumerate() {
            at[leg] = pos[p];
        }
        let mut h = g.clone();
        for leg in 0..4 {
            let other = g.partner(pos[leg]);
            match pos.iter().position(|&x| x == other) {
                Some(m) => h.join(at[leg], at[m]),
                None => h.join(at[leg], other),
            }
        }
        h
    };
    Ok(arrangements.map(|a| build(&a)))
}

pub fn ihx_relation(g: &OrientedGraph, f: Flag) -> Result<GraphVector> {
    let mut v = GraphVector::zero(g.degree());
    for t in ihx_terms(g, f)? {
        v.add_graph(&t, &Q::one());
    }
    Ok(v)
}

/// One flag per non-loop edge.
pub fn non_loop_edges(g: &OrientedGraph) -> Vec<Flag> {
    g.edges().into_iter().filter(|&e| !g.is_loop(e)).map(|e| e.0).collect()
}

/// Closure of the seeds' classes under appearance in IHX relations.
pub fn saturate(seeds: &[OrientedGraph], k: usize) -> Result<Vec<GraphKey>> {
    let mut seen = BTreeSet::new();
    let mut queue = Vec::new();
    for s in seeds {
        if s.degree() != k {
            return Err(Error::DegreeMismatch { expected: k, found: s.degree() });
        }
        let c = canonicalize(s);
        if c.sign != 0 && seen.insert(c.key.clone()) {
            queue.push(c.key);
        }
    }
    while let Some(key) = queue.pop() {
        let g = key.graph();
        for f in non_loop_edges(&g) {
            for t in ihx_relation(&g, f)?.terms.into_keys() {
                if seen.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Sum over all pairings of the spokes of disjoint wheels of sizes `λ`.
pub fn closure(lambda: &Partition) -> Result<GraphVector> {
    if !lambda.is_even() || lambda.parts().contains(&0) {
        return Err(Error::OutOfEnvelope(format!("closure needs positive even parts, got {lambda}")));
    }
    let parts: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let base = wheels(&parts);
    let sp = spokes(&parts);
    let mut out = GraphVector::zero(lambda.weight() as usize / 2);
    let mut g = base.clone();
    pair_all(&sp, &mut vec![false; sp.len()], &mut g, &mut out);
    Ok(out)
}

fn pair_all(sp: &[Flag], used: &mut [bool], g: &mut OrientedGraph, out: &mut GraphVector) {
    let Some(i) = used.iter().position(|u| !u) else {
        out.add_graph(g, &Q::one());
        return;
    };
    used[i] = true;
    for j in i + 1..sp.len() {
        if !used[j] {
            used[j] = true;
            g.join(sp[i], sp[j]);
            pair_all(sp, used, g, out);
            used[j] = false;
        }
    }
    used[i] = false;
}

/// Disjoint union of necklaces with bead counts `p`.
pub fn necklace_union(p: &Partition) -> OrientedGraph {
    p.parts().iter().fold(OrientedGraph::empty(), |acc, &m| {
        acc.disjoint_union(&OrientedGraph::necklace(m as usize).expect("parts are positive"))
    })
}

/// Splits of the components of every term into an ordered pair.
pub fn coproduct(v: &GraphVector) -> BTreeMap<(GraphKey, GraphKey), Q> {
    let mut out: BTreeMap<(GraphKey, GraphKey), Q> = BTreeMap::new();
    for (key, coef) in v.iter() {
        let g = key.graph();
        let comps = g.component_vertices();
        for mask in 0u32..(1 << comps.len()) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, c) in comps.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.extend_from_slice(c);
                } else {
                    right.extend_from_slice(c);
                }
            }
            let a = canonicalize(&g.induced(&left));
            let b = canonicalize(&g.induced(&right));
            let s = a.sign * b.sign;
            if s == 0 {
                continue;
            }
            let e = out.entry((a.key, b.key)).or_insert_with(Q::zero);
            *e += coef * Q::from_integer(s.into());
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Σ (k_i / k)` times the graph with a bubble on the first edge of its
/// `i`-th component, where component `i` has `2 k_i` vertices.
pub fn bubble_class(v: &GraphVector) -> Result<GraphVector> {
    if v.degree == 0 {
        return Err(Error::OutOfEnvelope("bubbling needs a graph with edges".into()));
    }
    let k = Q::from_integer((v.degree as i64).into());
    let mut out = GraphVector::zero(v.degree + 1);
    for (key, coef) in v.iter() {
        let g = key.graph();
        for comp in g.component_vertices() {
            let w = Q::from_integer(((comp.len() / 2) as i64).into()) / &k;
            out.add_graph(&g.insert_bubble(flag(comp[0], 0)), &(coef * w));
        }
    }
    Ok(out)
}

/// Sparse row reduction where every row's pivot is its largest column.
struct Eliminator {
    pivot_row: Vec<Option<usize>>,
    rows: Vec<BTreeMap<usize, Q>>,
}

impl Eliminator {
    fn new(cols: usize) -> Self {
        Eliminator { pivot_row: vec![None; cols], rows: Vec::new() }
    }

    fn add_row(&mut self, mut row: BTreeMap<usize, Q>) {
        loop {
            let target = row.iter().rev().find(|(c, _)| self.pivot_row[**c].is_some()).map(|(c, v)| (*c, v.clone()));
            let Some((c, v)) = target else { break };
            for (cc, pv) in &self.rows[self.pivot_row[c].expect("pivot")] {
                let e = row.entry(*cc).or_insert_with(Q::zero);
                *e -= &v * pv;
                if e.is_zero() {
                    row.remove(cc);
                }
            }
        }
        let Some((&pc, pv)) = row.iter().next_back() else { return };
        let inv = pv.recip();
        for x in row.values_mut() {
            *x *= &inv;
        }
        self.pivot_row[pc] = Some(self.rows.len());
        self.rows.push(row);
    }

    /// Coordinates of every column over the free (non-pivot) columns.
    fn free_coordinates(&self) -> (Vec<usize>, Vec<Vec<Q>>) {
        let free: Vec<usize> = (0..self.pivot_row.len()).filter(|&c| self.pivot_row[c].is_none()).collect();
        let mut index = vec![usize::MAX; self.pivot_row.len()];
        for (i, &c) in free.iter().enumerate() {
            index[c] = i;
        }
        let mut coords: Vec<Vec<Q>> = Vec::with_capacity(self.pivot_row.len());
        for c in 0..self.pivot_row.len() {
            let mut x = vec![Q::zero(); free.len()];
            match self.pivot_row[c] {
                None => x[index[c]] = Q::one(),
                Some(r) => {
                    for (d, a) in &self.rows[r] {
                        if *d != c {
                            for (xi, yi) in x.iter_mut().zip(&coords[*d]) {
                                if !yi.is_zero() {
                                    *xi -= a * yi;
                                }
                            }
                        }
                    }
                }
            }
            coords.push(x);
        }
        (free, coords)
    }
}

/// A polywheel row and the class coefficients it must carry.
type ResidualRow = (Partition, Vec<(ClassName, Q)>);

/// The polywheel rows that pin down a new connected residual class, with the
/// coefficients they must carry. In degree 5 the residual coefficients alone
/// leave a choice up to multiples of `theta5`, so that coefficient is pinned too.
fn residual_targets(k: usize) -> Option<(Atom, Vec<ResidualRow>)> {
    let g8b = ClassName::new(vec![Atom::G8b]);
    let g10b = ClassName::new(vec![Atom::G10b]);
    match k {
        4 => Some((
            Atom::G8b,
            vec![
                (Partition::new(vec![4, 4]), vec![(g8b.clone(), q(24))]),
                (Partition::new(vec![8]), vec![(g8b, q(7))]),
            ],
        )),
        5 => Some((
            Atom::G10b,
            vec![
                (Partition::new(vec![6, 4]), vec![(g10b.clone(), q(252))]),
                (
                    Partition::new(vec![10]),
                    vec![
                        (g10b, crate::linalg::qr(231, 2)),
                        (ClassName::new(vec![Atom::Theta(5)]), crate::linalg::qr(2541, 16)),
                    ],
                ),
            ],
        )),
        _ => None,
    }
}

pub const MAX_DEGREE: usize = 5;

#[derive(Debug, Clone)]
pub struct HomologyBasis {
    degree: usize,
    span: Vec<GraphKey>,
    column: BTreeMap<GraphKey, usize>,
    classes: Vec<ClassName>,
    class_vectors: Vec<GraphVector>,
    residuals: BTreeMap<Atom, OrientedGraph>,
    /// Per span column, coordinates over `classes`.
    coords: Vec<Vec<Q>>,
    relation_rows: usize,
    pivots: usize,
}

impl HomologyBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn span(&self) -> &[GraphKey] {
        &self.span
    }

    pub fn classes(&self) -> &[ClassName] {
        &self.classes
    }

    /// The class as a (signed) combination of canonical keys.
    pub fn class_vector(&self, i: usize) -> &GraphVector {
        &self.class_vectors[i]
    }

    pub fn class_keys(&self) -> Vec<GraphKey> {
        self.class_vectors.iter().map(|v| v.iter().next().expect("nonzero class").0.clone()).collect()
    }

    pub fn index_of(&self, c: &ClassName) -> Option<usize> {
        self.classes.iter().position(|x| x == c)
    }

    pub fn residual_graph(&self, a: Atom) -> Option<&OrientedGraph> {
        self.residuals.get(&a)
    }

    pub fn residuals(&self) -> &BTreeMap<Atom, OrientedGraph> {
        &self.residuals
    }

    pub fn relation_rows(&self) -> usize {
        self.relation_rows
    }

    pub fn pivot_count(&self) -> usize {
        self.pivots
    }

    pub fn contains(&self, key: &GraphKey) -> bool {
        self.column.contains_key(key)
    }

    pub fn reduce(&self, v: &GraphVector) -> Result<Vec<Q>> {
        if v.degree != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: v.degree });
        }
        let mut out = vec![Q::zero(); self.dim()];
        for (key, coef) in v.iter() {
            let c = *self.column.get(key).ok_or_else(|| Error::KeyOutsideSpan(format!("{key}")))?;
            for (o, x) in out.iter_mut().zip(&self.coords[c]) {
                if !x.is_zero() {
                    *o += coef * x;
                }
            }
        }
        Ok(out)
    }

    /// Coordinates as a map from class name, zero entries dropped.
    pub fn reduce_named(&self, v: &GraphVector) -> Result<Vec<(ClassName, Q)>> {
        Ok(self.classes.iter().cloned().zip(self.reduce(v)?).filter(|(_, x)| !x.is_zero()).collect())
    }

    /// A graph representing the named class (with sign +1).
    pub fn class_graph(&self, c: &ClassName) -> Result<OrientedGraph> {
        class_graph(c, &self.residuals)
    }
}

/// Disjoint union of the atom graphs of `c`.
pub fn class_graph(c: &ClassName, residuals: &BTreeMap<Atom, OrientedGraph>) -> Result<OrientedGraph> {
    let mut g = OrientedGraph::empty();
    for a in c.atoms() {
        let h = match a {
            Atom::Theta(m) => OrientedGraph::necklace(*m as usize)?,
            r => residuals.get(r).cloned().ok_or_else(|| Error::Unknown(format!("no representative for {r}")))?,
        };
        g = g.disjoint_union(&h);
    }
    Ok(g)
}

/// All products of the given atoms with total degree `k`.
fn products(atoms: &[Atom], k: u32) -> Vec<ClassName> {
    fn go(atoms: &[Atom], start: usize, rest: u32, cur: &mut Vec<Atom>, out: &mut Vec<ClassName>) {
        if rest == 0 {
            out.push(ClassName::new(cur.clone()));
            return;
        }
        for i in start..atoms.len() {
            if atoms[i].degree() <= rest {
                cur.push(atoms[i]);
                go(atoms, i, rest - atoms[i].degree(), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(atoms, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Computes graph homology in degree `k` together with its named basis.
pub fn basis(k: usize) -> Result<HomologyBasis> {
    if k == 0 || k > MAX_DEGREE {
        return Err(Error::OutOfEnvelope(format!("basis degree {k} not in 1..={MAX_DEGREE}")));
    }
    let mut residuals = BTreeMap::new();
    if k > 4 {
        let b4 = basis(4)?;
        residuals.extend(b4.residuals.clone());
    }
    let necklaces: Vec<ClassName> = partitions(k as u32).iter().map(ClassName::necklaces).collect();

    let mut seeds: Vec<OrientedGraph> = Vec::new();
    let mut closures = BTreeMap::new();
    for p in partitions(k as u32) {
        let lam = p.doubled();
        let c = closure(&lam)?;
        seeds.extend(c.iter().map(|(key, _)| key.graph()));
        closures.insert(lam, c);
        seeds.push(necklace_union(&p));
    }
    for g in residuals.values() {
        for p in partitions(k as u32 - g.degree() as u32) {
            seeds.push(necklace_union(&p).disjoint_union(g));
        }
    }
    let mut span = saturate(&seeds, k)?;
    // Necklace unions first so that they stay free columns.
    let preferred: Vec<GraphKey> =
        necklaces.iter().map(|c| canonicalize(&class_graph(c, &residuals).expect("necklace")).key).collect();
    span.sort_by_key(|key| (preferred.iter().position(|p| p == key).unwrap_or(usize::MAX), key.clone()));
    let column: BTreeMap<GraphKey, usize> = span.iter().cloned().enumerate().map(|(i, key)| (key, i)).collect();

    let mut elim = Eliminator::new(span.len());
    let mut relation_rows = 0;
    for key in &span {
        let g = key.graph();
        for f in non_loop_edges(&g) {
            let rel = ihx_relation(&g, f)?;
            let row: BTreeMap<usize, Q> = rel.iter().map(|(key, c)| (column[key], c.clone())).collect();
            relation_rows += 1;
            elim.add_row(row);
        }
    }
    let pivots = elim.rows.len();
    let (free, free_coords) = elim.free_coordinates();
    let dim = free.len();
    let to_free = |v: &GraphVector| -> Vec<Q> {
        let mut out = vec![Q::zero(); dim];
        for (key, c) in v.iter() {
            for (o, x) in out.iter_mut().zip(&free_coords[column[key]]) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    };

    let mut atoms: Vec<Atom> = (1..=k as u32).map(Atom::Theta).collect();
    atoms.extend(residuals.keys().copied());
    let mut classes = products(&atoms, k as u32);
    classes.sort_by_key(ClassName::listing_key);
    let mut vectors: Vec<GraphVector> =
        classes.iter().map(|c| Ok(GraphVector::from_graph(&class_graph(c, &residuals)?))).collect::<Result<_>>()?;

    if classes.len() + 1 == dim {
        let (atom, targets) = residual_targets(k)
            .ok_or_else(|| Error::OutOfEnvelope(format!("no residual identification in degree {k}")))?;
        let known: Vec<Vec<Q>> = vectors.iter().map(to_free).collect();
        let target_free: Vec<Vec<Q>> = targets.iter().map(|(lam, _)| to_free(&closures[lam])).collect();
        let mut names = classes.clone();
        names.push(ClassName::new(vec![atom]));
        let mut found = None;
        'search: for key in &span {
            let g = key.graph();
            if !g.is_connected() || preferred.contains(key) {
                continue;
            }
            let mut m: Matrix = known.clone();
            m.push(free_coords[column[key]].clone());
            let Ok(inv) = inverse(&transpose(&m)) else { continue };
            for sign in [Q::one(), -Q::one()] {
                let ok = targets.iter().zip(&target_free).all(|((_, want), t)| {
                    let x = mat_vec(&inv, t);
                    want.iter().all(|(name, value)| {
                        let i = names.iter().position(|n| n == name).expect("target class");
                        let v = if i == dim - 1 { &x[i] * &sign } else { x[i].clone() };
                        v == *value
                    })
                });
                if ok {
                    found = Some(if sign.is_one() { g } else { g.swap_slots(0, 1, 2) });
                    break 'search;
                }
            }
        }
        let g = found.ok_or_else(|| Error::Unknown(format!("no graph matches the {atom} coefficients")))?;
        residuals.insert(atom, g.clone());
        classes.push(ClassName::new(vec![atom]));
        vectors.push(GraphVector::from_graph(&g));
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&i| classes[i].listing_key());
        classes = order.iter().map(|&i| classes[i].clone()).collect();
        vectors = order.iter().map(|&i| vectors[i].clone()).collect();
    }
    if classes.len() != dim {
        return Err(Error::Inconsistent(format!(
            "degree {k}: quotient has dimension {dim} but {} named classes",
            classes.len()
        )));
    }
    let m: Matrix = vectors.iter().map(to_free).collect();
    let inv =
        inverse(&transpose(&m)).map_err(|_| Error::Singular(format!("named classes are dependent in degree {k}")))?;
    let coords: Vec<Vec<Q>> = free_coords.iter().map(|x| mat_vec(&inv, x)).collect();
    Ok(HomologyBasis {
        degree: k,
        span,
        column,
        classes,
        class_vectors: vectors,
        residuals,
        coords,
        relation_rows,
        pivots,
    })
}

/// Necklace unions whose bead partition has at least two parts above one;
/// together with the polywheels they span homology for `k <= 5`.
pub fn extra_classes(k: usize) -> Vec<ClassName> {
    partitions(k as u32)
        .iter()
        .filter(|p| p.parts().iter().filter(|&&m| m > 1).count() >= 2)
        .map(ClassName::necklaces)
        .collect()
}

/// Coefficients of the polywheel closures of even partitions of `2k`, as
/// rows over the basis classes.
pub fn polywheel_matrix(b: &HomologyBasis) -> Result<Vec<(Partition, Vec<Q>)>> {
    partitions(b.degree as u32)
        .iter()
        .map(|p| {
            let lam = p.doubled();
            let coords = b.reduce(&closure(&lam)?)?;
            Ok((lam, coords))
        })
        .collect()
}

/// A basis class written as polywheels plus extra classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolywheelExpression {
    pub polywheels: Vec<(Partition, Q)>,
    pub extras: Vec<(ClassName, Q)>,
}

/// Inverts the polywheel matrix augmented by the extra classes: every basis
/// class in terms of polywheels and `extra_classes(k)`.
pub fn inverse_expressions(b: &HomologyBasis) -> Result<Vec<(ClassName, PolywheelExpression)>> {
    let rows = polywheel_matrix(b)?;
    let extras = extra_classes(b.degree);
    let mut m: Matrix = rows.iter().map(|(_, r)| r.clone()).collect();
    for e in &extras {
        let i = b.index_of(e).ok_or_else(|| Error::Unknown(format!("{e} is not a basis class")))?;
        let mut r = vec![Q::zero(); b.dim()];
        r[i] = Q::one();
        m.push(r);
    }
    if m.len() != b.dim() {
        return Err(Error::Singular(format!(
            "{} polywheels and {} extra classes for dimension {}",
            rows.len(),
            extras.len(),
            b.dim()
        )));
    }
    // Row j of m is generator j in class coordinates; class i = Σ_j inv[i][j] gen_j.
    let inv = inverse(&transpose(&m))?;
    let inv = transpose(&inv);
    let mut out = Vec::new();
    for (i, c) in b.classes.iter().enumerate() {
        let mut polywheels = Vec::new();
        let mut ex = Vec::new();
        for (j, (lam, _)) in rows.iter().enumerate() {
            polywheels.push((lam.clone(), inv[i][j].clone()));
        }
        for (j, e) in extras.iter().enumerate() {
            ex.push((e.clone(), inv[i][rows.len() + j].clone()));
        }
        out.push((c.clone(), PolywheelExpression { polywheels, extras: ex }));
    }
    Ok(out)
}

/// Polywheel coordinates of `v` by reduction, or `None` when `v` is not in
/// the polywheel span.
pub fn polywheel_coords_by_reduction(v: &GraphVector, b: &HomologyBasis) -> Result<Option<Vec<(Partition, Q)>>> {
    let rows = polywheel_matrix(b)?;
    let target = b.reduce(v)?;
    let a = transpose(&rows.iter().map(|(_, r)| r.clone()).collect());
    Ok(crate::linalg::solve_affine(&a, &target).map(|(x, _)| rows.into_iter().map(|(l, _)| l).zip(x).collect()))
}

pub fn canonical_rep(g: &OrientedGraph) -> (OrientedGraph, i8) {
    canonical_form(g)
}
