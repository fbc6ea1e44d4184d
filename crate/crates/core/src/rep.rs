//! The deformed Tits representation `psi_n : T_n -> GL_{n-1}(Z[x])`.
//!
//! `psi_n(t_i)` is the identity except for column `i`, which carries
//! `x` above the diagonal, `-1` on it and `x` below it. Words map to
//! products taken left to right, and vectors act on matrices from the left.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::twin::TwinWord;

/// A square matrix with polynomial entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn zero(dim: usize) -> Self {
        PolyMatrix {
            dim,
            entries: vec![IntPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for k in 0..dim {
            m.entries[k * dim + k] = IntPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Index(format!(
                "matrix with {dim} rows is not square"
            )));
        }
        Ok(PolyMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &IntPoly {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: IntPoly) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[IntPoly] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn column(&self, col: usize) -> Vec<IntPoly> {
        (0..self.dim).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<IntPoly>> {
        (0..self.dim).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// `M - I`.
    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for k in 0..self.dim {
            m.entries[k * self.dim + k] -= &IntPoly::one();
        }
        m
    }

    pub fn scale(&self, c: &IntPoly) -> Self {
        PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn left_mul_row(&self, v: &[IntPoly]) -> Result<Vec<IntPoly>> {
        if v.len() != self.dim {
            return Err(Error::Index(format!(
                "row of length {} cannot multiply a {}x{} matrix",
                v.len(),
                self.dim,
                self.dim
            )));
        }
        Ok((0..self.dim)
            .map(|c| v.iter().enumerate().map(|(r, a)| a * self.get(r, c)).sum())
            .collect())
    }

    /// Evaluates every entry at an integer point.
    pub fn eval_at(&self, a: &BigInt) -> Vec<Vec<BigInt>> {
        (0..self.dim)
            .map(|r| self.row(r).iter().map(|e| e.eval(a)).collect())
            .collect()
    }

    /// Right multiplication by `psi(t_i)`; only column `i` changes.
    pub fn mul_generator_in_place(&mut self, i: usize) {
        let c = i - 1;
        let x = IntPoly::x();
        for r in 0..self.dim {
            let mut acc = -self.get(r, c);
            if c > 0 {
                acc += &(self.get(r, c - 1) * &x);
            }
            if c + 1 < self.dim {
                acc += &(self.get(r, c + 1) * &x);
            }
            self.set(r, c, acc);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> IntPoly {
        determinant(self)
    }
}

impl Mul<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;

    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut out = PolyMatrix::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Sub<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;

    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        PolyMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.dim).map(|r| self.row(r)))
            .finish()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            f.write_str("[")?;
            for (c, e) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// `psi_n(t_i)`, an `(n-1) x (n-1)` matrix.
pub fn generator_matrix(n: usize, i: usize) -> Result<PolyMatrix> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::Index(format!("t{i} is not a generator of T_{n}")));
    }
    let mut m = PolyMatrix::identity(n - 1);
    m.mul_generator_in_place(i);
    Ok(m)
}

/// Image of a word, multiplying generator matrices left to right.
pub fn psi(word: &TwinWord) -> Result<PolyMatrix> {
    let n = word.strands();
    if n < 2 {
        return Err(Error::Index("psi_n is defined for n >= 2".into()));
    }
    let mut m = PolyMatrix::identity(n - 1);
    for &l in word.letters() {
        m.mul_generator_in_place(l);
    }
    Ok(m)
}

pub fn determinant(m: &PolyMatrix) -> IntPoly {
    let n = m.dim;
    if n == 0 {
        return IntPoly::one();
    }
    let mut a: Vec<Vec<IntPoly>> = m.rows();
    let mut negate = false;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return IntPoly::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = core::mem::take(&mut row[k]);
            for j in k + 1..n {
                let t = &(&row[j] * pivot) - &(&lead * &pivot_row[j]);
                row[j] = t
                    .exact_div(&prev)
                    .expect("Bareiss quotients are exact over an integral domain");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Closed form of `psi_{n+1}(t_1 t_2 ... t_n)`, an `n x n` matrix.
pub fn a_matrix(n: usize) -> Result<PolyMatrix> {
    if n < 2 {
        return Err(Error::Index(format!("A_n needs n >= 2, got {n}")));
    }
    let x2_minus_1 = IntPoly::from_i64s(&[-1, 0, 1]);
    let mut m = PolyMatrix::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            let entry = if i == 1 {
                -IntPoly::x_pow(j - 1)
            } else if j >= i {
                x2_minus_1.shift(j - i)
            } else if j + 1 == i {
                IntPoly::x()
            } else {
                IntPoly::zero()
            };
            m.set(i - 1, j - 1, entry);
        }
    }
    Ok(m)
}

/// Which inclusion a fixed row vector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// `Q_j = x^j U_j(1/x)`, from `Q_j = 2 Q_{j-1} - x^2 Q_{j-2}`.
fn reversed_chebyshev(count: usize) -> Vec<IntPoly> {
    let mut out: Vec<IntPoly> = Vec::with_capacity(count);
    let two = BigInt::from(2);
    for j in 0..count {
        let q = match j {
            0 => IntPoly::one(),
            1 => IntPoly::constant(2),
            _ => out[j - 1usize].scale(&two) - out[j - 2].shift(2),
        };
        out.push(q);
    }
    out
}

/// Row vector of length `n` fixed by `psi_{n+1}` on the image of `iota^R`
/// (or `iota^L`), scaled by `x^{n-1}` so every entry is a polynomial.
///
/// Entry `k` (1-based) of the right vector is `x^{n-k} Q_{k-1}`; the left
/// vector lists the same entries in reverse order.
pub fn fixed_row(n: usize, side: Side) -> Result<Vec<IntPoly>> {
    if n == 0 {
        return Err(Error::Index("fixed rows need n >= 1".into()));
    }
    let q = reversed_chebyshev(n);
    let mut row: Vec<IntPoly> = q
        .iter()
        .enumerate()
        .map(|(j, qj)| qj.shift(n - 1 - j))
        .collect();
    if side == Side::Left {
        row.reverse();
    }
    Ok(row)
}
