//! The χ_y-genus: Riemann-Roch in terms of Chern numbers and its inversion,
//! Salamon's relation, and closed formulas for Hilbert schemes of points on
//! a K3 surface and for generalized Kummer varieties.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::chern::{mult_sequence_term, s_in_c, ChernVector, SPolynomial};
use crate::error::{Error, Result};
use crate::linalg::{inverse, mat_vec, pow, q, solve_affine, solve_unique, Matrix, Q};
use crate::partition::{even_partitions, Partition};
use crate::series::TruncSeries;

pub const MAX_CHI_DEGREE: usize = 4;

/// Polynomial in `y`, lowest coefficient first.
pub type YPoly = Vec<Q>;

/// `χ^0, …, χ^{2k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiVector {
    degree: usize,
    values: Vec<Q>,
}

impl ChiVector {
    pub fn new(values: Vec<Q>) -> Result<Self> {
        if values.len() % 2 != 1 || values.len() < 3 {
            return Err(Error::Inconsistent(format!("{} χ values; need 2k+1 with k ≥ 1", values.len())));
        }
        Ok(ChiVector { degree: (values.len() - 1) / 2, values })
    }

    /// Completes `χ^0..χ^k` by the symmetry `χ^m = χ^{2k-m}`.
    pub fn from_half(half: &[Q]) -> Result<Self> {
        if half.len() < 2 {
            return Err(Error::Inconsistent("need χ^0..χ^k with k ≥ 1".into()));
        }
        let mut values = half.to_vec();
        values.extend(half[..half.len() - 1].iter().rev().cloned());
        ChiVector::new(values)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.values.len();
        (0..n).all(|m| self.values[m] == self.values[n - 1 - m])
    }
}

/// Per pair of roots `±x`: `Td` times `ch(Λ_y T*)` at a numeric `y`,
/// divided by its constant term `(1+y)^2`.
fn pair_factor_log(y: &Q, order: usize) -> Result<TruncSeries> {
    let n = order + 2;
    let e = TruncSeries::exp_x(n);
    let em = e.dilate(&q(-1));
    let one = TruncSeries::one(n);
    // x / (1 - e^x) and -x / (1 - e^{-x}), each after dividing numerator and
    // denominator by x.
    let a = (&one - &e).shift_down(1)?;
    let b = (&one - &em).shift_down(1)?;
    let td = TruncSeries::one(n - 1).div(&(&a * &b))?.scale(&q(-1));
    let ch = &(&TruncSeries::one(n) + &em.scale(y)) * &(&TruncSeries::one(n) + &e.scale(y));
    let f = &td * &TruncSeries::new(ch.coeffs().to_vec(), n - 1);
    let c0 = f.coeff(0);
    TruncSeries::new(f.coeffs()[..=order].to_vec(), order).scale(&c0.recip()).log()
}

/// `Σ_m χ^m y^m` as s-polynomials, one per power of `y`.
fn chi_y_polys(k: usize) -> Result<Vec<SPolynomial>> {
    if k == 0 || k > MAX_CHI_DEGREE {
        return Err(Error::OutOfEnvelope(format!("Riemann-Roch degree {k} not in 1..={MAX_CHI_DEGREE}")));
    }
    let parts = even_partitions(k as u32);
    let points: Vec<Q> = (0..=2 * k).map(|t| q(t as i64)).collect();
    // values[t][λ]: the coefficient of s_λ at y = points[t]
    let mut values: Vec<Vec<Q>> = Vec::new();
    for y in &points {
        let log = pair_factor_log(y, 2 * k)?;
        // Σ over pair variables of x^{2n} is half the power sum s_{2n}.
        let p = mult_sequence_term(&log.scale(&crate::linalg::qr(1, 2)), k)?;
        let lead = pow(&(y + q(1)), 2 * k as u32);
        values.push(parts.iter().map(|l| p.coefficient(l) * &lead).collect());
    }
    let vander: Matrix = points.iter().map(|y| (0..=2 * k).map(|m| pow(y, m as u32)).collect()).collect();
    let inv = inverse(&vander)?;
    let mut out = vec![SPolynomial::zero(k); 2 * k + 1];
    for (i, l) in parts.iter().enumerate() {
        let column: Vec<Q> = values.iter().map(|r| r[i].clone()).collect();
        for (m, c) in mat_vec(&inv, &column).into_iter().enumerate() {
            out[m] = out[m].add(&SPolynomial::new(k, [(l.clone(), c)])?);
        }
    }
    Ok(out)
}

/// `χ^m = ∫ ch(Λ^m T*) Td` as a polynomial in the s-numbers.
pub fn chi_m_polynomial(k: usize, m: usize) -> Result<SPolynomial> {
    if m > 2 * k {
        return Err(Error::OutOfEnvelope(format!("χ^{m} in degree {k}")));
    }
    Ok(chi_y_polys(k)?.swap_remove(m))
}

pub fn chi_polynomials(k: usize) -> Result<Vec<SPolynomial>> {
    chi_y_polys(k)
}

pub fn evaluate_chi(cv: &ChernVector) -> Result<ChiVector> {
    let polys = chi_y_polys(cv.degree())?;
    let values = polys.iter().map(|p| crate::chern::evaluate_s_poly(p, cv)).collect::<Result<_>>()?;
    ChiVector::new(values)
}

/// `Σ (-1)^m (6m² - k(6k+1)) χ^m`.
pub fn salamon_residual(chi: &ChiVector) -> Q {
    let k = chi.degree as i64;
    chi.values.iter().enumerate().fold(Q::zero(), |acc, (m, v)| {
        let m = m as i64;
        let w = q(6 * m * m - k * (6 * k + 1));
        if m % 2 == 0 {
            acc + w * v
        } else {
            acc - w * v
        }
    })
}

/// Chern numbers recovered from χ: unique for `k ≤ 3`, a line for `k = 4`
/// parametrized by `s = s_2^4 / 48`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiInversion {
    /// The solution, at `s = 0` when a direction is present.
    pub base: ChernVector,
    /// Change per unit of `s`.
    pub direction: Option<ChernVector>,
}

impl ChiInversion {
    pub fn at(&self, s: &Q) -> Result<ChernVector> {
        match &self.direction {
            None => Ok(self.base.clone()),
            Some(d) => self.base.add(d, s),
        }
    }
}

fn s24(k: usize) -> Partition {
    Partition::new(vec![2; k])
}

pub fn invert_chi(chi: &ChiVector) -> Result<ChiInversion> {
    let k = chi.degree;
    if !chi.is_symmetric() {
        return Err(Error::Inconsistent("χ vector is not symmetric".into()));
    }
    let polys = chi_y_polys(k)?;
    let parts = even_partitions(k as u32);
    let a: Matrix = polys.iter().map(|p| parts.iter().map(|l| p.coefficient(l)).collect()).collect();
    let (x, null) = solve_affine(&a, chi.values())
        .ok_or_else(|| Error::Inconsistent("χ values violate the relations forced on hyperkahler manifolds".into()))?;
    let to_cv = |v: Vec<Q>| ChernVector::from_s(k, parts.iter().cloned().zip(v).collect());
    let idx = parts.iter().position(|l| *l == s24(k)).expect("s2^k present");
    match null.len() {
        0 => Ok(ChiInversion { base: to_cv(x)?, direction: None }),
        1 if k == 4 => {
            let n = &null[0];
            if n[idx].is_zero() {
                return Err(Error::Singular("s_2^4 does not move along the free direction".into()));
            }
            let t0 = &x[idx] / &n[idx];
            let base: Vec<Q> = x.iter().zip(n).map(|(a, b)| a - b * &t0).collect();
            let scale = q(48) / &n[idx];
            let dir: Vec<Q> = n.iter().map(|b| b * &scale).collect();
            Ok(ChiInversion { base: to_cv(base)?, direction: Some(to_cv(dir)?) })
        }
        d => Err(Error::Singular(format!("χ determines Chern numbers only up to {d} parameters in degree {k}"))),
    }
}

/// Rows expressing each monomial (s- or c-basis) in `χ^0..χ^{k-1}` and, for
/// `k = 4`, the parameter `s`. Returns the monomials and the coefficient rows
/// with columns `χ^0, …, χ^{k-1}[, s]`.
pub fn inversion_table(k: usize, c_basis: bool) -> Result<(Vec<Partition>, Matrix)> {
    let polys = chi_y_polys(k)?;
    let parts = even_partitions(k as u32);
    let (_, s_c) = s_in_c(k);
    // Functionals on the s-vector.
    let mut rows: Matrix = polys[..k].iter().map(|p| parts.iter().map(|l| p.coefficient(l)).collect()).collect();
    if rows.len() < parts.len() {
        let mut r = vec![Q::zero(); parts.len()];
        r[parts.iter().position(|l| *l == s24(k)).expect("present")] = crate::linalg::qr(1, 48);
        rows.push(r);
    }
    if rows.len() != parts.len() {
        return Err(Error::Singular(format!("degree {k}: χ^0..χ^(k-1) do not determine the Chern numbers")));
    }
    // s = F^{-1} (χ, s); c = (s_in_c)^{-1} s.
    let mut table = inverse(&rows)?;
    if c_basis {
        table = crate::linalg::mat_mul(&inverse(&s_c)?, &table);
    }
    Ok((parts, table))
}

/// A polynomial in c-monomials, keyed by partition.
pub type CPolynomial = BTreeMap<Partition, Q>;

/// Coefficient rows of `χ^m` on the c-monomials.
pub fn chi_in_c_table(k: usize) -> Result<(Vec<Partition>, Vec<CPolynomial>)> {
    let polys = chi_y_polys(k)?;
    Ok((even_partitions(k as u32), polys.iter().map(SPolynomial::to_c_basis).collect()))
}

/// Hodge numbers `h[p][q]` of a K3 surface.
pub fn k3_hodge() -> Vec<Vec<i64>> {
    vec![vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]]
}

/// χ_y of the Hilbert scheme of `k` points on a surface, from the product
/// `Π_{n≥1} Π_{p,q} (1 - (-1)^{p+q} x^{p+n-1} y^{q+n-1} t^n)^{-(-1)^{p+q} h^{p,q}}`
/// at `x = -1`. Returns `χ^0..χ^{2k}`.
pub fn chi_y_hilbert_surface(hodge: &[Vec<i64>], k: usize) -> Result<YPoly> {
    let ydeg = 2 * k;
    // series in t up to t^k with coefficients polynomials in y up to y^{2k}
    let mut acc: Vec<YPoly> = vec![vec![Q::zero(); ydeg + 1]; k + 1];
    acc[0][0] = Q::one();
    for n in 1..=k {
        for (p, row) in hodge.iter().enumerate() {
            for (qq, &h) in row.iter().enumerate() {
                if h == 0 {
                    continue;
                }
                let even = (p + qq) % 2 == 0;
                let ypow = qq + n - 1;
                if ypow > ydeg {
                    continue;
                }
                // u = -(-1)^{p+q} (-1)^{p+n-1} y^{q+n-1} t^n, exponent -(-1)^{p+q} h
                let mut sign = if (p + n - 1) % 2 == 0 { 1 } else { -1 };
                if even {
                    sign = -sign;
                }
                let e = if even { -h } else { h };
                acc = times_binomial(&acc, sign, ypow, n, e, k, ydeg);
            }
        }
    }
    Ok(acc.swap_remove(k))
}

/// `acc * (1 + sign y^a t^n)^e`, truncated.
fn times_binomial(acc: &[YPoly], sign: i64, a: usize, n: usize, e: i64, tmax: usize, ydeg: usize) -> Vec<YPoly> {
    let mut out = vec![vec![Q::zero(); ydeg + 1]; tmax + 1];
    let mut binom = Q::one();
    let mut j = 0usize;
    while j * n <= tmax {
        let c = &binom * pow(&q(sign), j as u32);
        if !c.is_zero() {
            for t in 0..=tmax - j * n {
                for (d, v) in acc[t].iter().enumerate() {
                    if !v.is_zero() && d + j * a <= ydeg {
                        out[t + j * n][d + j * a] += v * &c;
                    }
                }
            }
        }
        binom = binom * q(e - j as i64) / q(j as i64 + 1);
        j += 1;
    }
    out
}

pub fn chi_y_hilbert(k: usize) -> Result<YPoly> {
    chi_y_hilbert_surface(&k3_hodge(), k)
}

/// χ_y of the generalized Kummer variety of dimension `2k`:
/// `(k+1) Σ_{d | k+1} d^3 (1 - y + … + (-y)^{(k+1)/d - 1})^2 (-y)^{k+1-(k+1)/d}`.
pub fn chi_y_kummer(k: usize) -> Result<YPoly> {
    if k == 0 {
        return Err(Error::OutOfEnvelope("Kummer varieties start in degree 1".into()));
    }
    let n = k + 1;
    let mut out = vec![Q::zero(); 2 * k + 1];
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let m = n / d;
        let alt: Vec<Q> = (0..m).map(|i| if i % 2 == 0 { q(1) } else { q(-1) }).collect();
        let sq = poly_mul(&alt, &alt);
        let shift = n - m;
        let sign = if shift.is_multiple_of(2) { q(1) } else { q(-1) };
        let w = pow(&q(d as i64), 3) * sign;
        for (i, c) in sq.iter().enumerate() {
            out[i + shift] += c * &w;
        }
    }
    Ok(out.into_iter().map(|c| c * q(n as i64)).collect())
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `k = 4`: the value of `b_{Θ^4}` on a space with the given χ and
/// parameter `s`, via `48^4 4! Td^{1/2}_4` and the inversion.
pub fn b_theta4_from_chi(chi: &ChiVector, s: &Q) -> Result<Q> {
    let inv = invert_chi(chi)?;
    let cv = inv.at(s)?;
    crate::chern::evaluate_s_poly(&crate::chern::b_theta_power_poly(4), &cv)
}

/// Solves for `s` given `b_{Θ^4}` (linear in `s`).
pub fn solve_s(chi: &ChiVector, b_theta4: &Q) -> Result<Q> {
    let f0 = b_theta4_from_chi(chi, &Q::zero())?;
    let f1 = b_theta4_from_chi(chi, &Q::one())?;
    let slope = &f1 - &f0;
    if slope.is_zero() {
        return Err(Error::Singular("b_Θ^4 does not depend on s".into()));
    }
    Ok(solve_unique(&vec![vec![slope]], &[b_theta4 - f0])?.swap_remove(0))
}
