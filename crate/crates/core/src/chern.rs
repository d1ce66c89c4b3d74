//! Characteristic numbers of hyperkahler manifolds: monomials in `s_{2j}`
//! and `c_{2j}` indexed by even partitions, Chern roots in `±` pairs, and
//! the multiplicative sequences `Td^{±1/2}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{factorial, inverse, mat_vec, pow, q, qr, transpose, Matrix, Q};
use crate::partition::{even_partitions, Partition};
use crate::series::{sinhc_half, TruncSeries};

/// A polynomial in `s_2, s_4, …` of weight `2k`, keyed by even partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPolynomial {
    degree: usize,
    terms: BTreeMap<Partition, Q>,
}

impl SPolynomial {
    pub fn zero(degree: usize) -> Self {
        SPolynomial { degree, terms: BTreeMap::new() }
    }

    pub fn new(degree: usize, terms: impl IntoIterator<Item = (Partition, Q)>) -> Result<Self> {
        let mut p = SPolynomial::zero(degree);
        for (l, c) in terms {
            if !l.is_even() || l.weight() as usize != 2 * degree {
                return Err(Error::Inconsistent(format!("monomial {l} is not an even partition of {}", 2 * degree)));
            }
            p.add_term(l, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, l: Partition, c: Q) {
        let e = self.terms.entry(l.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&l);
        }
    }

    /// `k`, where the weight is `2k`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Q> {
        &self.terms
    }

    pub fn coefficient(&self, l: &Partition) -> Q {
        self.terms.get(l).cloned().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut p = SPolynomial::zero(self.degree);
        for (l, a) in &self.terms {
            p.add_term(l.clone(), a * c);
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (l, a) in &other.terms {
            p.add_term(l.clone(), a.clone());
        }
        p
    }

    /// Coefficients on the `c`-monomials.
    pub fn to_c_basis(&self) -> BTreeMap<Partition, Q> {
        let (parts, m) = s_in_c(self.degree);
        let mut out = BTreeMap::new();
        for (j, mu) in parts.iter().enumerate() {
            let mut acc = Q::zero();
            for (i, l) in parts.iter().enumerate() {
                acc += self.coefficient(l) * &m[i][j];
            }
            if !acc.is_zero() {
                out.insert(mu.clone(), acc);
            }
        }
        out
    }

    /// Inverse of `to_c_basis`.
    pub fn from_c_basis(degree: usize, c: &BTreeMap<Partition, Q>) -> Result<Self> {
        let (parts, m) = s_in_c(degree);
        let inv = inverse(&m)?;
        let mut p = SPolynomial::zero(degree);
        for (mu, a) in c {
            let j =
                parts.iter().position(|x| x == mu).ok_or_else(|| Error::Inconsistent(format!("bad monomial {mu}")))?;
            for (i, l) in parts.iter().enumerate() {
                p.add_term(l.clone(), a * &inv[j][i]);
            }
        }
        Ok(p)
    }
}

/// `s2^2 s4` style name of a monomial, factors in increasing index.
pub fn monomial_name(prefix: &str, l: &Partition) -> String {
    let mut out = String::new();
    for (p, m) in l.multiplicities().iter().rev() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&format!("{prefix}{p}"));
        if *m > 1 {
            out.push_str(&format!("^{m}"));
        }
    }
    out
}

impl fmt::Display for SPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{}", monomial_name("s", l))?;
        }
        Ok(())
    }
}

/// Polynomials in the elementary symmetric functions `e_1, e_2, …` of the
/// squared pair variables, keyed by the partition of `e` indices.
type EPoly = BTreeMap<Partition, Q>;

fn e_mul(a: &EPoly, b: &EPoly) -> EPoly {
    let mut out = EPoly::new();
    for (x, p) in a {
        for (y, r) in b {
            let mut parts = x.parts().to_vec();
            parts.extend_from_slice(y.parts());
            let e = out.entry(Partition::new(parts)).or_insert_with(Q::zero);
            *e += p * r;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn e_add(a: &mut EPoly, b: &EPoly, c: &Q) {
    for (x, p) in b {
        let e = a.entry(x.clone()).or_insert_with(Q::zero);
        *e += p * c;
    }
    a.retain(|_, v| !v.is_zero());
}

/// Power sums `p_1..p_n` in terms of `e`'s (Newton's identities).
fn power_sums(n: usize) -> Vec<EPoly> {
    let e = |i: u32| -> EPoly { [(Partition::new(alloc::vec![i]), Q::one())].into_iter().collect() };
    let mut p: Vec<EPoly> = Vec::new();
    for m in 1..=n {
        let mut pm = EPoly::new();
        for i in 1..m {
            let sign = if (i - 1) % 2 == 0 { q(1) } else { q(-1) };
            e_add(&mut pm, &e_mul(&e(i as u32), &p[m - i - 1]), &sign);
        }
        let sign = if (m - 1) % 2 == 0 { q(m as i64) } else { q(-(m as i64)) };
        e_add(&mut pm, &e(m as u32), &sign);
        p.push(pm);
    }
    p
}

/// Rows: `s_λ`; columns: `c_μ`; over the even partitions of `2k` in
/// standard order. With roots `±x_i` and `y_i = x_i^2`,
/// `s_{2j} = 2 p_j(y)` and `c_{2j} = (-1)^j e_j(y)`.
pub fn s_in_c(k: usize) -> (Vec<Partition>, Matrix) {
    let parts = even_partitions(k as u32);
    let p = power_sums(k);
    let mut m = crate::linalg::zeros(parts.len(), parts.len());
    for (i, l) in parts.iter().enumerate() {
        let mut poly: EPoly = [(Partition::empty(), Q::one())].into_iter().collect();
        for &part in l.parts() {
            let mut two_p = EPoly::new();
            e_add(&mut two_p, &p[part as usize / 2 - 1], &q(2));
            poly = e_mul(&poly, &two_p);
        }
        for (mu, coef) in poly {
            // e_μ = Π e_{μ_i} = (-1)^{|μ|} c_{2μ}
            let sign = if mu.weight() % 2 == 0 { q(1) } else { q(-1) };
            let j = parts.iter().position(|x| *x == mu.doubled()).expect("partition of k");
            m[i][j] += coef * sign;
        }
    }
    (parts, m)
}

/// Chern numbers of one space (or virtual space) in degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernVector {
    degree: usize,
    s_values: BTreeMap<Partition, Q>,
}

impl ChernVector {
    /// Requires a value for every even partition of `2k`.
    pub fn from_s(degree: usize, values: BTreeMap<Partition, Q>) -> Result<Self> {
        for l in even_partitions(degree as u32) {
            if !values.contains_key(&l) {
                return Err(Error::MissingValue(format!("s-monomial {l}")));
            }
        }
        if values.len() != even_partitions(degree as u32).len() {
            return Err(Error::Inconsistent("unexpected s-monomials".into()));
        }
        Ok(ChernVector { degree, s_values: values })
    }

    pub fn from_c(degree: usize, values: &BTreeMap<Partition, Q>) -> Result<Self> {
        let (parts, m) = s_in_c(degree);
        let c: Vec<Q> = parts
            .iter()
            .map(|l| values.get(l).cloned().ok_or_else(|| Error::MissingValue(format!("c-monomial {l}"))))
            .collect::<Result<_>>()?;
        if values.len() != parts.len() {
            return Err(Error::Inconsistent("unexpected c-monomials".into()));
        }
        let s = mat_vec(&m, &c);
        Ok(ChernVector { degree, s_values: parts.into_iter().zip(s).collect() })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn s_values(&self) -> &BTreeMap<Partition, Q> {
        &self.s_values
    }

    pub fn s(&self, l: &Partition) -> Result<Q> {
        self.s_values.get(l).cloned().ok_or_else(|| Error::MissingValue(format!("s-monomial {l}")))
    }

    pub fn c_values(&self) -> BTreeMap<Partition, Q> {
        let (parts, m) = s_in_c(self.degree);
        let inv = inverse(&m).expect("s/c change of basis is invertible");
        let s: Vec<Q> = parts.iter().map(|l| self.s_values[l].clone()).collect();
        parts.into_iter().zip(mat_vec(&inv, &s)).collect()
    }

    pub fn c(&self, l: &Partition) -> Result<Q> {
        self.c_values().get(l).cloned().ok_or_else(|| Error::MissingValue(format!("c-monomial {l}")))
    }

    pub fn add(&self, other: &Self, coef: &Q) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let s = self.s_values.iter().map(|(l, v)| (l.clone(), v + &other.s_values[l] * coef)).collect();
        Ok(ChernVector { degree: self.degree, s_values: s })
    }

    pub fn scale(&self, c: &Q) -> Self {
        ChernVector { degree: self.degree, s_values: self.s_values.iter().map(|(l, v)| (l.clone(), v * c)).collect() }
    }

    /// The Chern numbers of a product: each monomial splits over subsets of
    /// its factors.
    pub fn product(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        let mut s = BTreeMap::new();
        for l in even_partitions(degree as u32) {
            let parts = l.parts();
            let mut acc = Q::zero();
            for mask in 0u32..(1 << parts.len()) {
                let (mut a, mut b) = (Vec::new(), Vec::new());
                for (i, &p) in parts.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        a.push(p);
                    } else {
                        b.push(p);
                    }
                }
                let (a, b) = (Partition::new(a), Partition::new(b));
                if a.weight() as usize == 2 * self.degree && b.weight() as usize == 2 * other.degree {
                    acc += lookup(self, &a) * lookup(other, &b);
                }
            }
            s.insert(l, acc);
        }
        ChernVector { degree, s_values: s }
    }
}

fn lookup(cv: &ChernVector, l: &Partition) -> Q {
    if l.is_empty() {
        Q::one()
    } else {
        cv.s_values[l].clone()
    }
}

pub fn evaluate_s_poly(p: &SPolynomial, cv: &ChernVector) -> Result<Q> {
    if p.degree != cv.degree {
        return Err(Error::DegreeMismatch { expected: cv.degree, found: p.degree });
    }
    p.terms.iter().try_fold(Q::zero(), |acc, (l, c)| Ok(acc + c * cv.s(l)?))
}

/// Degree-`2k` part of `exp(Σ a_{2i} s_{2i} x^{2i})`.
pub fn mult_sequence_term(log: &TruncSeries, k: usize) -> Result<SPolynomial> {
    if log.order() < 2 * k {
        return Err(Error::OutOfEnvelope(format!("series order {} below {}", log.order(), 2 * k)));
    }
    if !log.coeff(0).is_zero() || (0..=log.order()).any(|i| i % 2 == 1 && !log.coeff(i).is_zero()) {
        return Err(Error::Inconsistent("log series must be even with zero constant term".into()));
    }
    let mut p = SPolynomial::zero(k);
    for l in even_partitions(k as u32) {
        let c = l.parts().iter().fold(Q::one(), |acc, &i| acc * log.coeff(i as usize)) / l.symmetry_factor();
        p.add_term(l, c);
    }
    Ok(p)
}

/// `ln f` for `Td^{1/2}`: `-½ ln(sinh(x/2)/(x/2))`.
pub fn td_half_log(order: usize) -> TruncSeries {
    sinhc_half(order).log().expect("constant term one").scale(&qr(-1, 2))
}

pub fn td_neg_half_log(order: usize) -> TruncSeries {
    td_half_log(order).scale(&q(-1))
}

/// `Td^{±1/2}_k` as an s-polynomial; `sign` is +1 or -1.
pub fn td_power(sign: i64, k: usize) -> SPolynomial {
    let log = td_half_log(2 * k + 2).scale(&q(sign));
    mult_sequence_term(&log, k).expect("valid log series")
}

/// `48^k k!`.
pub fn theta_normalizer(k: usize) -> Q {
    pow(&q(48), k as u32) * factorial(k as u64)
}

/// `b_{Θ^k} = 48^k k! Td^{1/2}_k`, as a polynomial in the `s`-numbers.
pub fn b_theta_power_poly(k: usize) -> SPolynomial {
    td_power(1, k).scale(&theta_normalizer(k))
}

/// Coefficients `a_P` with `Θ^k = Σ_P a_P ⟨w_{2P}⟩`, from `48^k k! Td^{-1/2}_k`
/// with each `s_{2m}` read as the wheel `w_{2m}`; keyed by `P ⊢ k`.
pub fn theta_power_in_polywheels(k: usize) -> Vec<(Partition, Q)> {
    let p = td_power(-1, k).scale(&theta_normalizer(k));
    crate::partition::partitions(k as u32)
        .into_iter()
        .map(|part| {
            let c = p.coefficient(&part.doubled());
            (part, c)
        })
        .collect()
}

/// The change of basis as `(partitions, matrix)` with `c_μ = Σ m[μ][λ] s_λ`.
pub fn c_in_s(k: usize) -> (Vec<Partition>, Matrix) {
    let (parts, m) = s_in_c(k);
    (parts, inverse(&m).expect("invertible"))
}

pub fn transpose_of(m: &Matrix) -> Matrix {
    transpose(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn low_degree_conversions() {
        let (_, m) = s_in_c(1);
        assert_eq!(m, vec![vec![q(-2)]]);
        let (p, m) = s_in_c(2);
        let i = p.iter().position(|l| l.parts() == [4]).unwrap();
        let c22 = p.iter().position(|l| l.parts() == [2, 2]).unwrap();
        assert_eq!(m[i][c22], q(2));
        assert_eq!(m[i][i], q(-4));
    }

    #[test]
    fn td_half_coefficients() {
        assert_eq!(td_half_log(4).coeff(2), qr(-1, 48));
        assert_eq!(td_neg_half_log(4).coeff(2), qr(1, 48));
        let t = td_power(1, 1);
        assert_eq!(t.coefficient(&Partition::new(vec![2])), qr(-1, 48));
    }
}
