//! Exact dense linear algebra over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;
pub type Matrix = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> Q {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Q::from_integer(acc)
}

pub fn pow(x: &Q, e: u32) -> Q {
    let mut acc = Q::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Q::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn transpose(a: &Matrix) -> Matrix {
    if a.is_empty() {
        return Vec::new();
    }
    let cols = a[0].len();
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Q::zero();
                    for t in 0..inner {
                        if !row[t].is_zero() && !b[t][j].is_zero() {
                            acc += &row[t] * &b[t][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, x: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| {
            row.iter().zip(x).filter(|(r, v)| !r.is_zero() && !v.is_zero()).fold(Q::zero(), |acc, (r, v)| acc + r * v)
        })
        .collect()
}

/// Row reduces in place to reduced echelon form; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    rref(&mut m).len()
}

/// Solution set of `a x = b`: a particular solution (free variables zero) and a
/// nullspace basis, or `None` when inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Q]) -> Option<(Vec<Q>, Vec<Vec<Q>>)> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    let mut null = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); cols];
        v[f] = Q::one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -m[i][f].clone();
        }
        null.push(v);
    }
    Some((x, null))
}

/// Unique solution of a square or overdetermined system.
pub fn solve_unique(a: &Matrix, b: &[Q]) -> Result<Vec<Q>> {
    match solve_affine(a, b) {
        None => Err(Error::Inconsistent("linear system has no solution".into())),
        Some((_, null)) if !null.is_empty() => {
            Err(Error::Singular(alloc::format!("solution space has dimension {}", null.len())))
        }
        Some((x, _)) => Ok(x),
    }
}

pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.len();
    let mut m: Matrix = a.iter().zip(identity(n)).map(|(r, e)| r.iter().cloned().chain(e).collect()).collect();
    let pivots = rref(&mut m);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular("matrix is not invertible".into()));
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}
