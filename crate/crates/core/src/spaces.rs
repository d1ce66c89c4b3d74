//! Rozansky-Witten invariants of concrete spaces: Hilbert schemes of points
//! on a K3 surface, generalized Kummer varieties, products, formal rational
//! sums, and the virtual spaces defined by su(2) weights.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::chern::{b_theta_power_poly, evaluate_s_poly, theta_normalizer, ChernVector};
use crate::class::{Atom, ClassName};
use crate::error::{Error, Result};
use crate::genera::{chi_y_hilbert, chi_y_kummer, invert_chi, solve_s, ChiVector};
use crate::homology::{basis, extra_classes, inverse_expressions, HomologyBasis, PolywheelExpression};
use crate::lie::{lie_weight, LieData};
use crate::linalg::{factorial, pow, q, solve_affine, Matrix, Q};
use crate::partition::{even_partitions, partitions, Partition};

/// Largest degree with complete Chern data for Hilbert and Kummer spaces.
pub const MAX_SPACE_DEGREE: usize = 4;

/// How a reported invariant was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Polywheel,
    RationalFunction,
    ProductSplit,
    DirectWeight,
    AdditiveSum,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Polywheel => "polywheel",
            Provenance::RationalFunction => "rational-function",
            Provenance::ProductSplit => "product-split",
            Provenance::DirectWeight => "direct-weight",
            Provenance::AdditiveSum => "additive-sum",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub class: ClassName,
    /// `None` marks an invariant no strategy could evaluate.
    pub value: Option<(Q, Provenance)>,
}

/// Values of `b_Γ` on every basis class of one degree, in basis order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    degree: usize,
    entries: Vec<ReportEntry>,
}

impl InvariantReport {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[ReportEntry] {
        &self.entries
    }

    pub fn get(&self, c: &ClassName) -> Result<(Q, Provenance)> {
        if c.degree() as usize != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: c.degree() as usize });
        }
        let e = self
            .entries
            .iter()
            .find(|e| e.class == *c)
            .ok_or_else(|| Error::Unknown(format!("{c} is not a basis class in degree {}", self.degree)))?;
        e.value.clone().ok_or_else(|| Error::Unknown(format!("no strategy evaluates {c}")))
    }

    pub fn value(&self, c: &ClassName) -> Result<Q> {
        Ok(self.get(c)?.0)
    }
}

/// Cached graph homology data per degree.
#[derive(Debug, Default)]
pub struct Engine {
    data: BTreeMap<usize, DegreeData>,
}

#[derive(Debug)]
struct DegreeData {
    basis: HomologyBasis,
    expressions: Vec<(ClassName, PolywheelExpression)>,
}

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    fn load(&mut self, k: usize) -> Result<&DegreeData> {
        if let alloc::collections::btree_map::Entry::Vacant(slot) = self.data.entry(k) {
            let b = basis(k)?;
            let expressions = inverse_expressions(&b)?;
            slot.insert(DegreeData { basis: b, expressions });
        }
        Ok(&self.data[&k])
    }

    pub fn basis(&mut self, k: usize) -> Result<&HomologyBasis> {
        Ok(&self.load(k)?.basis)
    }

    pub fn classes(&mut self, k: usize) -> Result<Vec<ClassName>> {
        Ok(self.load(k)?.basis.classes().to_vec())
    }

    pub fn expressions(&mut self, k: usize) -> Result<Vec<(ClassName, PolywheelExpression)>> {
        Ok(self.load(k)?.expressions.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceKind {
    Irreducible,
    /// Chern numbers and invariants given by su(2) weights.
    Virtual,
    Product(Vec<Space>),
    Sum(Vec<(Q, Space)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Space {
    name: String,
    degree: usize,
    kind: SpaceKind,
    chern: ChernVector,
    chi: Option<ChiVector>,
    s_parameter: Option<Q>,
    report: InvariantReport,
}

impl Space {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.kind
    }

    pub fn chern(&self) -> &ChernVector {
        &self.chern
    }

    pub fn chi(&self) -> Option<&ChiVector> {
        self.chi.as_ref()
    }

    /// The parameter `s = s_2^4 / 48` fixed for degree-4 irreducible spaces.
    pub fn s_parameter(&self) -> Option<&Q> {
        self.s_parameter.as_ref()
    }

    pub fn report(&self) -> &InvariantReport {
        &self.report
    }

    pub fn is_irreducible(&self) -> bool {
        self.kind == SpaceKind::Irreducible
    }
}

/// `b_{Θ^k}(S^[k]) = 12^k (k+3)^k`.
pub fn hilbert_b_theta_power(k: usize) -> Q {
    pow(&q(12), k as u32) * pow(&q(k as i64 + 3), k as u32)
}

/// `b_{Θ^k}(T^[[k]]) = 12^k (k+1)^{k+1}`.
pub fn kummer_b_theta_power(k: usize) -> Q {
    pow(&q(12), k as u32) * pow(&q(k as i64 + 1), k as u32 + 1)
}

fn polywheel_value(e: &PolywheelExpression, chern: &ChernVector) -> Result<Q> {
    e.polywheels.iter().try_fold(Q::zero(), |acc, (l, a)| {
        if a.is_zero() {
            return Ok(acc);
        }
        let v = chern.s(l)?;
        Ok(if l.len() % 2 == 0 { acc + a * v } else { acc - a * v })
    })
}

fn in_polywheel_span(e: &PolywheelExpression) -> bool {
    e.extras.iter().all(|(_, c)| c.is_zero())
}

fn theta_times(k: usize, m: u32) -> ClassName {
    let mut atoms: Vec<Atom> = (0..k - m as usize).map(|_| Atom::Theta(1)).collect();
    atoms.push(Atom::Theta(m));
    ClassName::new(atoms)
}

/// Invariants of an irreducible space from its Chern numbers.
fn irreducible_report(engine: &mut Engine, chern: &ChernVector) -> Result<InvariantReport> {
    let k = chern.degree();
    let exprs = engine.expressions(k)?;
    let mut values: Vec<Option<(Q, Provenance)>> = vec![None; exprs.len()];
    for (i, (_, e)) in exprs.iter().enumerate() {
        if in_polywheel_span(e) {
            values[i] = Some((polywheel_value(e, chern)?, Provenance::Polywheel));
        }
    }
    let lookup = |values: &[Option<(Q, Provenance)>], c: &ClassName| -> Result<Q> {
        exprs
            .iter()
            .position(|(d, _)| d == c)
            .and_then(|i| values[i].clone())
            .map(|(v, _)| v)
            .ok_or_else(|| Error::Unknown(format!("{c} is not in the polywheel span")))
    };
    let top = lookup(&values, &ClassName::theta_power(k as u32))?;
    if top.is_zero() {
        return Err(Error::DivisionByZero(format!("b_theta^{k} vanishes; the space is not irreducible")));
    }
    // Necklace unions outside the span: b_{Θ^{k-Σm}Π Θ_m} = b_{Θ^k} Π (b_{Θ^{k-m}Θ_m} / b_{Θ^k}).
    let extras = extra_classes(k);
    for (i, (c, _)) in exprs.iter().enumerate() {
        if values[i].is_some() || !extras.contains(c) {
            continue;
        }
        let p = c.necklace_partition().expect("necklace union");
        let mut v = top.clone();
        for &m in p.parts().iter().filter(|&&m| m > 1) {
            v = v * lookup(&values, &theta_times(k, m))? / &top;
        }
        values[i] = Some((v, Provenance::RationalFunction));
    }
    for (i, (_, e)) in exprs.iter().enumerate() {
        if values[i].is_some() {
            continue;
        }
        let mut v = polywheel_value(e, chern)?;
        for (x, a) in &e.extras {
            if !a.is_zero() {
                v += a * lookup(&values, x)?;
            }
        }
        values[i] = Some((v, Provenance::RationalFunction));
    }
    Ok(InvariantReport {
        degree: k,
        entries: exprs.into_iter().zip(values).map(|((class, _), value)| ReportEntry { class, value }).collect(),
    })
}

fn irreducible(engine: &mut Engine, name: String, chi: ChiVector, b_top: Q) -> Result<Space> {
    let k = chi.degree();
    let inv = invert_chi(&chi)?;
    let s_parameter = match inv.direction {
        Some(_) => Some(solve_s(&chi, &b_top)?),
        None => None,
    };
    let chern = inv.at(&s_parameter.clone().unwrap_or_else(Q::zero))?;
    let check = evaluate_s_poly(&b_theta_power_poly(k), &chern)?;
    if check != b_top {
        return Err(Error::Inconsistent(format!(
            "{name}: b_theta^{k} from Chern numbers is {check}, expected {b_top}"
        )));
    }
    let report = irreducible_report(engine, &chern)?;
    Ok(Space { name, degree: k, kind: SpaceKind::Irreducible, chern, chi: Some(chi), s_parameter, report })
}

fn check_envelope(k: usize) -> Result<()> {
    if k == 0 || k > MAX_SPACE_DEGREE {
        return Err(Error::OutOfEnvelope(format!("space degree {k} not in 1..={MAX_SPACE_DEGREE}")));
    }
    Ok(())
}

pub fn hilbert_name(k: usize) -> String {
    if k == 1 {
        "S".to_string()
    } else {
        format!("S^[{k}]")
    }
}

pub fn kummer_name(k: usize) -> String {
    format!("T^[[{k}]]")
}

/// The Hilbert scheme of `k` points on a K3 surface.
pub fn make_hilbert(engine: &mut Engine, k: usize) -> Result<Space> {
    check_envelope(k)?;
    let chi = ChiVector::new(chi_y_hilbert(k)?)?;
    irreducible(engine, hilbert_name(k), chi, hilbert_b_theta_power(k))
}

/// The generalized Kummer variety of dimension `4k`.
pub fn make_kummer(engine: &mut Engine, k: usize) -> Result<Space> {
    check_envelope(k)?;
    let chi = ChiVector::new(chi_y_kummer(k)?)?;
    irreducible(engine, kummer_name(k), chi, kummer_b_theta_power(k))
}

fn product_name(factors: &[Space]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < factors.len() {
        let n = &factors[i].name;
        let mut j = i + 1;
        while j < factors.len() && factors[j].name == *n && !n.contains(['^', '*', ' ']) {
            j += 1;
        }
        out.push(if j - i > 1 { format!("{n}^{}", j - i) } else { n.clone() });
        i = j;
    }
    out.join("x")
}

/// `b_Γ(X×Y) = Σ b_{Γ'}(X) b_{Γ''}(Y)` over splittings of the components of `Γ`.
fn split_value(c: &ClassName, x: &Space, y: &Space) -> Result<Q> {
    let atoms = c.atoms();
    let mut acc = Q::zero();
    for mask in 0u32..(1 << atoms.len()) {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, &atom) in atoms.iter().enumerate() {
            if mask & (1 << i) != 0 {
                a.push(atom);
            } else {
                b.push(atom);
            }
        }
        let (a, b) = (ClassName::new(a), ClassName::new(b));
        if a.degree() as usize == x.degree && b.degree() as usize == y.degree {
            acc += x.report.value(&a)? * y.report.value(&b)?;
        }
    }
    Ok(acc)
}

fn product_pair(engine: &mut Engine, x: &Space, y: &Space) -> Result<(ChernVector, InvariantReport)> {
    let k = x.degree + y.degree;
    let chern = x.chern.product(&y.chern);
    let mut entries = Vec::new();
    for (class, e) in engine.expressions(k)? {
        let split = split_value(&class, x, y)?;
        let value = if in_polywheel_span(&e) {
            let v = polywheel_value(&e, &chern)?;
            if v != split {
                return Err(Error::Inconsistent(format!("{class}: polywheel value {v} but product split {split}")));
            }
            (v, Provenance::Polywheel)
        } else {
            (split, Provenance::ProductSplit)
        };
        entries.push(ReportEntry { class, value: Some(value) });
    }
    Ok((chern, InvariantReport { degree: k, entries }))
}

/// The product of two or more spaces.
pub fn product(engine: &mut Engine, factors: &[Space]) -> Result<Space> {
    let (first, rest) = factors.split_first().ok_or_else(|| Error::Malformed("empty product".into()))?;
    if rest.is_empty() {
        return Ok(first.clone());
    }
    let mut acc = first.clone();
    for y in rest {
        let (chern, report) = product_pair(engine, &acc, y)?;
        acc = Space {
            name: String::new(),
            degree: acc.degree + y.degree,
            kind: SpaceKind::Irreducible,
            chern,
            chi: None,
            s_parameter: None,
            report,
        };
    }
    acc.name = product_name(factors);
    acc.kind = SpaceKind::Product(factors.to_vec());
    Ok(acc)
}

fn sum_name(terms: &[(Q, Space)]) -> String {
    let mut out = String::new();
    for (i, (c, x)) in terms.iter().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.abs();
        if a.is_one() {
            out.push_str(&x.name);
        } else {
            out.push_str(&format!("{a}*{}", x.name));
        }
    }
    out
}

/// A formal rational combination of spaces of one degree.
pub fn formal_sum(engine: &mut Engine, terms: &[(Q, Space)]) -> Result<Space> {
    let ((_, first), _) = terms.split_first().ok_or_else(|| Error::Malformed("empty formal sum".into()))?;
    let k = first.degree;
    if let Some((_, x)) = terms.iter().find(|(_, x)| x.degree != k) {
        return Err(Error::DegreeMismatch { expected: k, found: x.degree });
    }
    let mut chern = first.chern.scale(&Q::zero());
    for (c, x) in terms {
        chern = chern.add(&x.chern, c)?;
    }
    let mut entries = Vec::new();
    for (class, e) in engine.expressions(k)? {
        let mut additive = Q::zero();
        for (c, x) in terms {
            additive += c * x.report.value(&class)?;
        }
        let value = if in_polywheel_span(&e) {
            let v = polywheel_value(&e, &chern)?;
            if v != additive {
                return Err(Error::Inconsistent(format!("{class}: polywheel value {v} but summed value {additive}")));
            }
            (v, Provenance::Polywheel)
        } else {
            (additive, Provenance::AdditiveSum)
        };
        entries.push(ReportEntry { class, value: Some(value) });
    }
    Ok(Space {
        name: sum_name(terms),
        degree: k,
        kind: SpaceKind::Sum(terms.to_vec()),
        chern,
        chi: None,
        s_parameter: None,
        report: InvariantReport { degree: k, entries },
    })
}

/// `s_λ(C_k) = (-1)^{k+j} (2k+1)! / (2^{k-j} k!)` for `λ` with `j` parts.
pub fn virtual_chern(k: usize) -> Result<ChernVector> {
    let values = even_partitions(k as u32)
        .into_iter()
        .map(|l| {
            let j = l.len();
            let mut v = factorial(2 * k as u64 + 1) / (pow(&q(2), (k - j) as u32) * factorial(k as u64));
            if (k + j) % 2 == 1 {
                v = -v;
            }
            (l, v)
        })
        .collect();
    ChernVector::from_s(k, values)
}

/// The virtual space whose invariants are su(2) weights.
pub fn virtual_ck(engine: &mut Engine, k: usize) -> Result<Space> {
    if k == 0 || k > crate::homology::MAX_DEGREE {
        return Err(Error::OutOfEnvelope(format!("virtual space degree {k}")));
    }
    let chern = virtual_chern(k)?;
    let su2 = LieData::su2();
    let exprs = engine.expressions(k)?;
    let mut entries = Vec::new();
    for (class, e) in exprs {
        let g = engine.basis(k)?.class_graph(&class)?;
        let direct = lie_weight(&g, &su2);
        let value = if in_polywheel_span(&e) {
            let v = polywheel_value(&e, &chern)?;
            if v != direct {
                return Err(Error::Inconsistent(format!("{class}: polywheel value {v} but su(2) weight {direct}")));
            }
            (v, Provenance::Polywheel)
        } else {
            (direct, Provenance::DirectWeight)
        };
        entries.push(ReportEntry { class, value: Some(value) });
    }
    Ok(Space {
        name: format!("C_{k}"),
        degree: k,
        kind: SpaceKind::Virtual,
        chern,
        chi: None,
        s_parameter: None,
        report: InvariantReport { degree: k, entries },
    })
}

pub fn b_invariant(x: &Space, c: &ClassName) -> Result<(Q, Provenance)> {
    x.report.get(c)
}

/// The product of Hilbert schemes `S^[p_1] × S^[p_2] × …`, smallest first.
pub fn hilbert_product(engine: &mut Engine, p: &Partition) -> Result<Space> {
    let factors = p.ascending().iter().map(|&m| make_hilbert(engine, m as usize)).collect::<Result<Vec<_>>>()?;
    product(engine, &factors)
}

/// All products of Hilbert schemes of total degree `k`, from `S^[k]` down
/// to `S^k`.
pub fn hilbert_family(engine: &mut Engine, k: usize) -> Result<Vec<Space>> {
    partitions(k as u32).iter().rev().map(|p| hilbert_product(engine, p)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchCriterion {
    AllInvariants,
    ChernOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanSolution {
    Unique(Vec<Q>),
    NonUnique { particular: Vec<Q>, nullspace: Vec<Vec<Q>> },
    Infeasible,
}

fn features(x: &Space, criterion: MatchCriterion) -> Result<Vec<Q>> {
    match criterion {
        MatchCriterion::ChernOnly => Ok(x.chern.s_values().values().cloned().collect()),
        MatchCriterion::AllInvariants => x.report.entries.iter().map(|e| x.report.value(&e.class)).collect(),
    }
}

/// Coefficients `x_i` with `target ∼ Σ x_i dictionary_i`.
pub fn express_in_span(target: &Space, dictionary: &[Space], criterion: MatchCriterion) -> Result<SpanSolution> {
    if dictionary.is_empty() {
        return Err(Error::Malformed("empty dictionary".into()));
    }
    if let Some(x) = dictionary.iter().find(|x| x.degree != target.degree) {
        return Err(Error::DegreeMismatch { expected: target.degree, found: x.degree });
    }
    let columns = dictionary.iter().map(|x| features(x, criterion)).collect::<Result<Vec<_>>>()?;
    let rhs = features(target, criterion)?;
    let a: Matrix = (0..rhs.len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    Ok(match solve_affine(&a, &rhs) {
        None => SpanSolution::Infeasible,
        Some((x, null)) if null.is_empty() => SpanSolution::Unique(x),
        Some((particular, nullspace)) => SpanSolution::NonUnique { particular, nullspace },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CobordismReport {
    /// The combination of Hilbert scheme products with the Chern numbers of `T^[[4]]`.
    pub combination: Space,
    pub kummer: Space,
    pub chern_match: bool,
    pub b_combination: Q,
    pub b_kummer: Q,
    /// Left and right sides of the cleared-denominator relation.
    pub integral_left: Space,
    pub integral_right: Space,
    pub integral_chern_match: bool,
    pub b_integral_left: Q,
    pub b_integral_right: Q,
}

impl CobordismReport {
    pub fn distinguished(&self) -> bool {
        self.chern_match && self.b_combination != self.b_kummer
    }
}

/// Exhibits two formal combinations with equal Chern numbers in degree 4
/// but different `b_{Θ_2^2}`.
pub fn cobordism_distinguish(engine: &mut Engine) -> Result<CobordismReport> {
    let fam = hilbert_family(engine, 4)?;
    let kummer = make_kummer(engine, 4)?;
    let coefs = match express_in_span(&kummer, &fam, MatchCriterion::ChernOnly)? {
        SpanSolution::Unique(x) => x,
        other => return Err(Error::Inconsistent(format!("Chern-number match is not unique: {other:?}"))),
    };
    let terms: Vec<(Q, Space)> = coefs.into_iter().zip(fam.iter().cloned()).collect();
    let combination = formal_sum(engine, &terms)?;
    let theta2sq = ClassName::necklaces(&Partition::new(vec![2, 2]));
    let b_combination = combination.report.value(&theta2sq)?;
    let b_kummer = kummer.report.value(&theta2sq)?;
    // fam is S^[4], S×S^[3], S^[2]×S^[2], S^2×S^[2], S^4.
    let integral_left = formal_sum(engine, &[(q(336), fam[0].clone()), (q(268), fam[3].clone())])?;
    let integral_right = formal_sum(
        engine,
        &[(q(48), kummer.clone()), (q(294), fam[1].clone()), (q(144), fam[2].clone()), (q(63), fam[4].clone())],
    )?;
    Ok(CobordismReport {
        chern_match: combination.chern == kummer.chern,
        b_integral_left: integral_left.report.value(&theta2sq)?,
        b_integral_right: integral_right.report.value(&theta2sq)?,
        integral_chern_match: integral_left.chern == integral_right.chern,
        combination,
        kummer,
        b_combination,
        b_kummer,
        integral_left,
        integral_right,
    })
}

/// The coefficient of `π^{2k}` in `‖K‖^{2k} / vol^{k-1}`:
/// `(192k)^k ∫ Td^{1/2}_k` with `∫ Td^{1/2}_k = b_{Θ^k} / (48^k k!)`.
pub fn curvature_volume_relation(x: &Space) -> Result<Q> {
    if !x.is_irreducible() {
        return Err(Error::Inconsistent(format!("{} is not irreducible", x.name)));
    }
    let k = x.degree;
    let b = x.report.value(&ClassName::theta_power(k as u32))?;
    Ok(pow(&q(192 * k as i64), k as u32) * b / theta_normalizer(k))
}

/// `∫ Td^{1/2}_k`, computed from the Chern numbers.
pub fn td_half_integral(x: &Space) -> Result<Q> {
    let k = x.degree;
    Ok(evaluate_s_poly(&b_theta_power_poly(k), &x.chern)? / theta_normalizer(k))
}
