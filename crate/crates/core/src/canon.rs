//! Canonical forms of oriented trivalent graphs with orientation signs.
//!
//! Each component is relabelled by a breadth-first search from every root
//! vertex and every ordering of its slots; a newly reached vertex puts the
//! flag it was entered by into slot 0 and branches over the order of its
//! two remaining slots. The lexicographically least code wins. Labellings
//! reaching the same code differ by an automorphism, and if two of them
//! disagree on orientation the class is killed by AS.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::graph::{flag, OrientedGraph};

/// Serialized minimal representative: `n:` followed by its sorted flag
/// pairs `v.s-w.t`, comma separated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphKey(String);

impl GraphKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn empty() -> Self {
        GraphKey::from_graph(&OrientedGraph::empty())
    }

    fn from_graph(g: &OrientedGraph) -> Self {
        let mut s = String::new();
        let _ = write!(s, "{}:", g.vertex_count());
        for (i, (a, b)) in g.edges().into_iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{}.{}-{}.{}", a / 3, a % 3, b / 3, b % 3);
        }
        GraphKey(s)
    }

    /// Decodes the representative graph.
    pub fn graph(&self) -> OrientedGraph {
        Self::parse_graph(&self.0).expect("graph keys are produced by canonicalization")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let g = Self::parse_graph(text)?;
        let c = canonicalize(&g);
        if c.key.0 != text || c.sign != 1 {
            return Err(Error::Parse(alloc::format!("{text} is not a canonical key")));
        }
        Ok(c.key)
    }

    fn parse_graph(text: &str) -> Result<OrientedGraph> {
        let bad = || Error::Parse(alloc::format!("bad graph key {text}"));
        let (n, rest) = text.split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let mut pairs = Vec::new();
        for item in rest.split(',').filter(|s| !s.is_empty()) {
            let (a, b) = item.split_once('-').ok_or_else(bad)?;
            pairs.push((parse_flag(a).ok_or_else(bad)?, parse_flag(b).ok_or_else(bad)?));
        }
        OrientedGraph::from_pairs(n, &pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.0.split(':').next().and_then(|n| n.parse().ok()).unwrap_or(0)
    }
}

fn parse_flag(s: &str) -> Option<(usize, usize)> {
    let (v, t) = s.split_once('.')?;
    Some((v.parse().ok()?, t.parse().ok()?))
}

impl fmt::Display for GraphKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedCanonical {
    pub key: GraphKey,
    /// `g = sign * representative` in graph homology modulo AS.
    pub sign: i8,
}

pub fn canonicalize(g: &OrientedGraph) -> SignedCanonical {
    let (rep, sign) = canonical_form(g);
    SignedCanonical { key: GraphKey::from_graph(&rep), sign }
}

/// The canonical representative and the sign relating `g` to it.
pub fn canonical_form(g: &OrientedGraph) -> (OrientedGraph, i8) {
    let mut parts: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut sign = 1i8;
    for comp in g.component_vertices() {
        let (code, s) = component_code(g, &comp);
        sign *= s;
        parts.push((comp.len(), code));
    }
    parts.sort();
    let mut partner = Vec::with_capacity(3 * g.vertex_count());
    let mut off = 0;
    for (n, code) in &parts {
        partner.extend(code.iter().map(|&c| c as usize + 3 * off));
        off += n;
    }
    let rep = OrientedGraph::from_partner(partner).expect("canonical code is a matching");
    (rep, sign)
}

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a OrientedGraph,
    n: usize,
    label: Vec<usize>,
    vert: Vec<usize>,
    /// Per label: new slot -> old slot.
    order: Vec<[usize; 3]>,
    code: Vec<u32>,
    best: Option<Vec<u32>>,
    best_sign: i8,
    reversing: bool,
}

const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];

fn perm_sign(p: &[usize; 3]) -> i8 {
    match p {
        [0, 1, 2] | [1, 2, 0] | [2, 0, 1] => 1,
        _ => -1,
    }
}

fn component_code(g: &OrientedGraph, comp: &[usize]) -> (Vec<u32>, i8) {
    let mut s = Search {
        g,
        n: comp.len(),
        label: vec![NONE; g.vertex_count()],
        vert: Vec::with_capacity(comp.len()),
        order: vec![[0, 1, 2]; comp.len()],
        code: Vec::with_capacity(3 * comp.len()),
        best: None,
        best_sign: 1,
        reversing: false,
    };
    for &root in roots(g, comp).iter() {
        s.label[root] = 0;
        s.vert.push(root);
        for ord in ORDERS {
            s.order[0] = ord;
            if let Some(st) = s.recompare(0) {
                s.explore(0, st);
            }
        }
        s.vert.pop();
        s.label[root] = NONE;
    }
    let sign = if s.reversing { 0 } else { s.best_sign };
    (s.best.unwrap_or_default(), sign)
}

/// Root candidates: vertices with the lexicographically largest local
/// multiplicity profile (loops, then parallel edges). The profile is an
/// isomorphism invariant so the restriction keeps the result canonical.
fn roots(g: &OrientedGraph, comp: &[usize]) -> Vec<usize> {
    let profile = |v: usize| {
        let mut loops = 0;
        let mut nb = [0usize; 3];
        for (s, x) in nb.iter_mut().enumerate() {
            let w = g.partner(flag(v, s)) / 3;
            if w == v {
                loops += 1;
            }
            *x = w;
        }
        let mut mult = [0usize; 3];
        for (i, m) in mult.iter_mut().enumerate() {
            *m = nb.iter().filter(|&&w| w == nb[i]).count();
        }
        mult.sort_unstable();
        (loops, mult)
    };
    let best = comp.iter().map(|&v| profile(v)).max();
    comp.iter().copied().filter(|&v| Some(profile(v)) == best).collect()
}

impl Search<'_> {
    fn recompare(&self, pos: usize) -> Option<Ordering> {
        match &self.best {
            None => Some(Ordering::Less),
            Some(b) => match self.code[..pos].cmp(&b[..pos]) {
                Ordering::Greater => None,
                o => Some(o),
            },
        }
    }

    fn step(&self, st: Ordering, pos: usize, entry: u32) -> Option<Ordering> {
        match (&self.best, st) {
            (None, _) | (_, Ordering::Less) => Some(Ordering::Less),
            (Some(b), _) => match entry.cmp(&b[pos]) {
                Ordering::Greater => None,
                o => Some(o),
            },
        }
    }

    fn explore(&mut self, pos: usize, st: Ordering) {
        if pos == 3 * self.n {
            self.leaf(st);
            return;
        }
        let (i, s) = (pos / 3, pos % 3);
        let v = self.vert[i];
        let p = self.g.partner(flag(v, self.order[i][s]));
        let (w, t) = (p / 3, p % 3);
        if self.label[w] == NONE {
            let lw = self.vert.len();
            self.label[w] = lw;
            self.vert.push(w);
            let (a, b) = ((t + 1) % 3, (t + 2) % 3);
            for ord in [[t, a, b], [t, b, a]] {
                self.order[lw] = ord;
                let Some(st) = self.recompare(pos) else { continue };
                let entry = (3 * lw) as u32;
                if let Some(st) = self.step(st, pos, entry) {
                    self.code.push(entry);
                    self.explore(pos + 1, st);
                    self.code.pop();
                }
            }
            self.vert.pop();
            self.label[w] = NONE;
        } else {
            let lw = self.label[w];
            let slot = self.order[lw].iter().position(|&x| x == t).expect("slot present");
            let entry = (3 * lw + slot) as u32;
            if let Some(st) = self.step(st, pos, entry) {
                self.code.push(entry);
                self.explore(pos + 1, st);
                self.code.pop();
            }
        }
    }

    fn leaf(&mut self, st: Ordering) {
        let sign = self.order.iter().map(perm_sign).product::<i8>();
        if st == Ordering::Less || self.best.is_none() {
            self.best = Some(self.code.clone());
            self.best_sign = sign;
            self.reversing = false;
        } else if sign != self.best_sign {
            self.reversing = true;
        }
    }
}
