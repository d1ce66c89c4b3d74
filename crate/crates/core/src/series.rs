//! Truncated power series with rational coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{factorial, q, Q};

/// `a_0 + a_1 x + … + a_N x^N`, exact up to `x^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Q>,
}

impl TruncSeries {
    pub fn new(mut coeffs: Vec<Q>, order: usize) -> Self {
        coeffs.resize(order + 1, Q::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries { coeffs: vec![Q::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Q::one(), order)
    }

    pub fn constant(c: Q, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Q::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Q) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `exp(x) = Σ x^n / n!`.
    pub fn exp_x(order: usize) -> Self {
        TruncSeries { coeffs: (0..=order).map(|n| factorial(n as u64).recip()).collect() }
    }

    /// `f(c x)`.
    pub fn dilate(&self, c: &Q) -> Self {
        let mut p = Q::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &p);
            p *= c;
        }
        TruncSeries { coeffs }
    }

    /// Divides by `x^n`, dropping the (required zero) low coefficients; the
    /// order drops by `n`.
    pub fn shift_down(&self, n: usize) -> Result<Self> {
        if self.coeffs[..n.min(self.coeffs.len())].iter().any(|a| !a.is_zero()) {
            return Err(Error::Inconsistent("series is not divisible by the power of x".into()));
        }
        Ok(TruncSeries { coeffs: self.coeffs[n..].to_vec() })
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut c: Vec<Q> = (1..=n).map(|i| &self.coeffs[i] * q(i as i64)).collect();
        c.push(Q::zero());
        TruncSeries { coeffs: c }
    }

    pub fn integral(&self) -> Self {
        let n = self.order();
        let mut c = vec![Q::zero()];
        c.extend((0..n).map(|i| &self.coeffs[i] / q(i as i64 + 1)));
        TruncSeries { coeffs: c }
    }

    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::DivisionByZero("series with zero constant term".into()));
        }
        let n = self.order();
        let inv0 = a0.recip();
        let mut b = vec![Q::zero(); n + 1];
        b[0] = inv0.clone();
        for i in 1..=n {
            let mut acc = Q::zero();
            for j in 1..=i {
                acc += &self.coeffs[j] * &b[i - j];
            }
            b[i] = -acc * &inv0;
        }
        Ok(TruncSeries { coeffs: b })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Inconsistent("exp needs a zero constant term".into()));
        }
        // e' = f' e
        let n = self.order();
        let d = self.derivative();
        let mut e = vec![Q::zero(); n + 1];
        e[0] = Q::one();
        for i in 1..=n {
            let mut acc = Q::zero();
            for j in 0..i {
                acc += &d.coeffs[j] * &e[i - 1 - j];
            }
            e[i] = acc / q(i as i64);
        }
        Ok(TruncSeries { coeffs: e })
    }

    /// Requires constant term one.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Inconsistent("log needs constant term one".into()));
        }
        Ok((&self.derivative() * &self.inverse()?).integral())
    }

    /// `self(g(x))` for `g` with zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::Inconsistent("inner series needs a zero constant term".into()));
        }
        let n = self.order().min(g.order());
        let mut out = TruncSeries::zero(n);
        let mut p = TruncSeries::one(n);
        let g = TruncSeries::new(g.coeffs.clone(), n);
        for i in 0..=n {
            out = &out + &p.scale(&self.coeffs[i]);
            p = &p * &g;
        }
        Ok(out)
    }

    /// `(1 + u)^e` for integer `e` and `u` with zero constant term.
    pub fn binomial_power(u: &Self, e: i64) -> Result<Self> {
        let n = u.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut c = Q::one();
        for j in 0..=n {
            coeffs.push(c.clone());
            c = c * q(e - j as i64) / q(j as i64 + 1);
        }
        TruncSeries { coeffs }.compose(u)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, o: &TruncSeries) -> TruncSeries {
        let n = self.order().min(o.order());
        TruncSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect() }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, o: &TruncSeries) -> TruncSeries {
        self + &(-o)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, o: &TruncSeries) -> TruncSeries {
        let n = self.order().min(o.order());
        let mut c = vec![Q::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !o.coeffs[j].is_zero() {
                    c[i + j] += &self.coeffs[i] * &o.coeffs[j];
                }
            }
        }
        TruncSeries { coeffs: c }
    }
}

/// `sinh(x/2) / (x/2)`.
pub fn sinhc_half(order: usize) -> TruncSeries {
    let coeffs = (0..=order)
        .map(|i| {
            if i % 2 == 1 {
                Q::zero()
            } else {
                let k = (i / 2) as u32;
                (crate::linalg::pow(&q(4), k) * factorial(2 * k as u64 + 1)).recip()
            }
        })
        .collect();
    TruncSeries { coeffs }
}
