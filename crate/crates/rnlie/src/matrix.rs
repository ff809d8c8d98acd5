//! Dense matrices over an exact coefficient ring.
//!
//! The same matrix type carries rational matrices (structure data, bivectors,
//! endomorphisms, witnesses) and polynomial matrices (automorphism families,
//! symbolic orbits, Lax-type matrices). Inversion, rank and determinant are
//! provided for rational entries only; everything upstream of them is exact.

use crate::poly::Poly;
use crate::rat::Rat;
use std::fmt;

/// Exact commutative ring of matrix entries.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Zero of the same ring instance (same variable list for polynomials).
    fn zero_like(&self) -> Self;
    /// One of the same ring instance.
    fn one_like(&self) -> Self;
}

impl Scalar for Rat {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
}

impl Scalar for Poly {
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Poly::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        Poly::constant(self.vars(), Rat::one())
    }
}

/// Dense `rows x cols` matrix in row-major order.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(n > 0, "matrix must have at least one row");
        let m = rows[0].len();
        assert!(m > 0 && rows.iter().all(|r| r.len() == m), "ragged rows");
        Matrix {
            rows: n,
            cols: m,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero_like_entry(rows: usize, cols: usize, model: &T) -> Self {
        Matrix::from_fn(rows, cols, |_, _| model.zero_like())
    }

    pub fn identity_like_entry(n: usize, model: &T) -> Self {
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                model.one_like()
            } else {
                model.zero_like()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        self.entries[r * self.cols + c] = v;
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix::from_fn(self.rows, self.cols, |r, c| f(self.at(r, c)))
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).add(other.at(r, c))
        })
    }

    pub fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).sub(other.at(r, c))
        })
    }

    pub fn neg(&self) -> Matrix<T> {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, k: &T) -> Matrix<T> {
        self.map(|x| x.mul(k))
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = self.at(0, 0).zero_like();
            for k in 0..self.cols {
                acc = acc.add(&self.at(r, k).mul(other.at(k, c)));
            }
            acc
        })
    }

    /// `self^k` for `k >= 0`; `k = 0` yields the identity.
    pub fn pow(&self, k: u32) -> Matrix<T> {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Matrix::identity_like_entry(self.rows, self.at(0, 0));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut acc = self.at(0, 0).zero_like();
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_antisymmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            for c in r..self.cols {
                if !self.at(r, c).add(self.at(c, r)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// First nonzero position in row-major order, if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.at(r, c).is_zero() {
                    return Some((r, c));
                }
            }
        }
        None
    }
}

impl Matrix<Rat> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::zero_like_entry(rows, cols, &Rat::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::identity_like_entry(n, &Rat::zero())
    }

    pub fn from_i64_rows(rows: Vec<Vec<i64>>) -> Self {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Rat::from_int).collect())
                .collect(),
        )
    }

    /// Exact inverse by Gauss-Jordan elimination, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix<Rat>> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot != col {
                for c in 0..n {
                    let tmp = a.at(pivot, c).clone();
                    a.set(pivot, c, a.at(col, c).clone());
                    a.set(col, c, tmp);
                    let tmp = inv.at(pivot, c).clone();
                    inv.set(pivot, c, inv.at(col, c).clone());
                    inv.set(col, c, tmp);
                }
            }
            let p = a.at(col, col).clone();
            let pinv = p.recip();
            for c in 0..n {
                a.set(col, c, &(a.at(col, c).clone()) * &pinv);
                inv.set(col, c, &(inv.at(col, c).clone()) * &pinv);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for c in 0..n {
                    let v = a.at(r, c) - &(&factor * a.at(col, c));
                    a.set(r, c, v);
                    let v = inv.at(r, c) - &(&factor * inv.at(col, c));
                    inv.set(r, c, v);
                }
            }
        }
        Some(inv)
    }

    /// Exact rank over the rationals by elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (n, m) = (a.rows, a.cols);
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m {
            let pivot = match (row..n).find(|&r| !a.at(r, col).is_zero()) {
                Some(p) => p,
                None => continue,
            };
            if pivot != row {
                for c in 0..m {
                    let tmp = a.at(pivot, c).clone();
                    a.set(pivot, c, a.at(row, c).clone());
                    a.set(row, c, tmp);
                }
            }
            let lead = a.at(row, col).clone();
            for r in (row + 1)..n {
                if a.at(r, col).is_zero() {
                    continue;
                }
                let factor = &(a.at(r, col).clone()) / &lead;
                for c in col..m {
                    let v = a.at(r, c) - &(&factor * a.at(row, c));
                    a.set(r, c, v);
                }
            }
            rank += 1;
            row += 1;
            if row == n {
                break;
            }
        }
        rank
    }

    /// Exact determinant by elimination.
    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !a.at(r, col).is_zero()) {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if pivot != col {
                for c in 0..n {
                    let tmp = a.at(pivot, c).clone();
                    a.set(pivot, c, a.at(col, c).clone());
                    a.set(col, c, tmp);
                }
                det = -det;
            }
            let lead = a.at(col, col).clone();
            det = &det * &lead;
            for r in (col + 1)..n {
                if a.at(r, col).is_zero() {
                    continue;
                }
                let factor = &(a.at(r, col).clone()) / &lead;
                for c in col..n {
                    let v = a.at(r, c) - &(&factor * a.at(col, c));
                    a.set(r, c, v);
                }
            }
        }
        det
    }
}

impl Matrix<Poly> {
    /// Determinant by cofactor expansion; intended for the small symbolic
    /// matrices of automorphism families.
    pub fn det_poly(&self) -> Poly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 1 {
            return self.at(0, 0).clone();
        }
        let mut acc = self.at(0, 0).zero_like();
        for c in 0..n {
            if self.at(0, c).is_zero() {
                continue;
            }
            let minor = Matrix::from_fn(n - 1, n - 1, |i, j| {
                self.at(i + 1, if j < c { j } else { j + 1 }).clone()
            });
            let term = self.at(0, c).mul(&minor.det_poly());
            acc = if c % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
