//! Lie algebras given by structure constants.
//!
//! A [`LieAlgebra`] stores the full array `f^k_{ij}` (coefficient of `X_k` in
//! `[X_i, X_j]`), kept antisymmetric in `(i, j)` by construction. All indices
//! in the public API are 1-based, matching the usual basis labels `X_1..X_d`;
//! storage is dense since dimensions stay small.
//!
//! The adjoint data uses the convention pinned down by the worked
//! four-dimensional example: the matrix of `ad`-type generators has
//! `(X_i)_{j,k} = -f^k_{ij}` (row `j`, column `k`), and the antisymmetric
//! companions have `(Y^k)_{i,j} = -f^k_{ij}`.

use crate::matrix::Matrix;
use crate::rat::Rat;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("bracket index ({0}, {1}, {2}) out of range for dimension {3}")]
    IndexOutOfRange(usize, usize, usize, usize),
    #[error("bracket ({0}, {1}) requires i < j")]
    NotUpperPair(usize, usize),
    #[error("duplicate bracket entry for ({0}, {1}, {2})")]
    Duplicate(usize, usize, usize),
}

/// Finite-dimensional real Lie algebra by structure constants.
#[derive(Clone, PartialEq, Debug)]
pub struct LieAlgebra {
    dim: usize,
    /// `f[(i*d + j)*d + k]` is `f^k_{ij}`, all 0-based.
    f: Vec<Rat>,
    name: Option<String>,
}

/// One Jacobi-identity failure: the quadruple and its nonzero defect.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiDefect {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub defect: Rat,
}

/// The matrices `X_i` and `Y^k` derived from the structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointData {
    pub x: Vec<Matrix<Rat>>,
    pub y: Vec<Matrix<Rat>>,
}

impl LieAlgebra {
    /// Builds the algebra from the nonzero brackets `[X_i, X_j] = c X_k + ...`
    /// listed as `(i, j, k, c)` with `i < j`; antisymmetric completions are
    /// filled in and everything unlisted is zero. Jacobi is *not* enforced
    /// here; use [`check_jacobi`](Self::check_jacobi).
    pub fn new(
        dim: usize,
        brackets: &[(usize, usize, usize, Rat)],
        name: Option<&str>,
    ) -> Result<Self, LieError> {
        assert!(dim > 0, "dimension must be positive");
        let mut f = vec![Rat::zero(); dim * dim * dim];
        for (i, j, k, c) in brackets {
            let (i, j, k) = (*i, *j, *k);
            if i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim {
                return Err(LieError::IndexOutOfRange(i, j, k, dim));
            }
            if i >= j {
                return Err(LieError::NotUpperPair(i, j));
            }
            let (i0, j0, k0) = (i - 1, j - 1, k - 1);
            let idx = (i0 * dim + j0) * dim + k0;
            if !f[idx].is_zero() {
                return Err(LieError::Duplicate(i, j, k));
            }
            f[idx] = c.clone();
            f[(j0 * dim + i0) * dim + k0] = -c;
        }
        Ok(LieAlgebra {
            dim,
            f,
            name: name.map(|s| s.to_string()),
        })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new(dim, &[], None).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    /// `f^k_{ij}` with 1-based indices.
    pub fn f(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.f[((i - 1) * self.dim + (j - 1)) * self.dim + (k - 1)]
    }

    /// Direct constructor from a full `f^k_{ij}` table (used for Sklyanin
    /// duals, where the constants arrive already completed). The table is
    /// indexed `raw[i][j][k]`, 0-based, and must be antisymmetric in `(i, j)`.
    pub fn from_full_table(dim: usize, raw: &dyn Fn(usize, usize, usize) -> Rat) -> Self {
        let mut f = vec![Rat::zero(); dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    f[(i * dim + j) * dim + k] = raw(i, j, k);
                }
            }
        }
        let alg = LieAlgebra { dim, f, name: None };
        for i in 1..=dim {
            for j in 1..=dim {
                for k in 1..=dim {
                    debug_assert!(
                        (alg.f(i, j, k) + alg.f(j, i, k)).is_zero(),
                        "structure constants not antisymmetric at ({i},{j},{k})"
                    );
                }
            }
        }
        alg
    }

    /// Bracket of coefficient vectors: `[u, v]_k = sum f^k_{ij} u_i v_j`.
    pub fn bracket(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let d = self.dim;
        assert!(u.len() == d && v.len() == d, "vector length mismatch");
        let mut out = vec![Rat::zero(); d];
        for i in 0..d {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for k in 0..d {
                    let c = self.f(i + 1, j + 1, k + 1);
                    if !c.is_zero() {
                        out[k] += &(&uv * c);
                    }
                }
            }
        }
        out
    }

    /// Every quadruple `(i, j, k, l)` with a nonzero Jacobi defect
    /// `sum_m (f^m_{ij} f^l_{mk} + f^m_{jk} f^l_{mi} + f^m_{ki} f^l_{mj})`.
    /// The report is empty iff the structure constants define a Lie algebra.
    pub fn check_jacobi(&self) -> Vec<JacobiDefect> {
        let d = self.dim;
        let mut defects = Vec::new();
        for i in 1..=d {
            for j in 1..=d {
                for k in 1..=d {
                    for l in 1..=d {
                        let mut s = Rat::zero();
                        for m in 1..=d {
                            s += &(self.f(i, j, m) * self.f(m, k, l));
                            s += &(self.f(j, k, m) * self.f(m, i, l));
                            s += &(self.f(k, i, m) * self.f(m, j, l));
                        }
                        if !s.is_zero() {
                            defects.push(JacobiDefect {
                                i,
                                j,
                                k,
                                l,
                                defect: s,
                            });
                        }
                    }
                }
            }
        }
        defects
    }

    pub fn is_lie_algebra(&self) -> bool {
        self.check_jacobi().is_empty()
    }

    /// The matrices `X_i` (entry `(j, k) = -f^k_{ij}`) and `Y^k`
    /// (entry `(i, j) = -f^k_{ij}`, antisymmetric).
    pub fn adjoint_matrices(&self) -> AdjointData {
        let d = self.dim;
        let x = (1..=d)
            .map(|i| Matrix::from_fn(d, d, |j, k| -self.f(i, j + 1, k + 1)))
            .collect();
        let y = (1..=d)
            .map(|k| Matrix::from_fn(d, d, |i, j| -self.f(i + 1, j + 1, k)))
            .collect();
        AdjointData { x, y }
    }

    /// Matrix of `ad_X` on coefficient columns: entry `(k, j)` is the
    /// coefficient of `X_k` in `[X, X_j]`.
    pub fn ad(&self, coeffs: &[Rat]) -> Matrix<Rat> {
        let d = self.dim;
        assert_eq!(coeffs.len(), d, "coefficient vector length mismatch");
        Matrix::from_fn(d, d, |k, j| {
            let mut s = Rat::zero();
            for m in 0..d {
                if !coeffs[m].is_zero() {
                    s += &(&coeffs[m] * self.f(m + 1, j + 1, k + 1));
                }
            }
            s
        })
    }

    /// Matrix of the coadjoint action `ad*_X = -(ad_X)^t` on dual-basis
    /// coefficient columns, defined by `(ad*_X a)(Y) = -a([X, Y])`.
    pub fn coadjoint_matrix(&self, coeffs: &[Rat]) -> Matrix<Rat> {
        self.ad(coeffs).transpose().neg()
    }

    /// True iff `A` is invertible and `A [X_i, X_j] = [A X_i, A X_j]` for all
    /// basis pairs.
    pub fn is_automorphism(&self, a: &Matrix<Rat>) -> bool {
        let d = self.dim;
        if a.rows() != d || a.cols() != d {
            return false;
        }
        if a.det().is_zero() {
            return false;
        }
        let col = |m: &Matrix<Rat>, j: usize| -> Vec<Rat> {
            (0..d).map(|r| m.at(r, j).clone()).collect()
        };
        for i in 0..d {
            for j in (i + 1)..d {
                // A [X_i, X_j]
                let mut lhs = vec![Rat::zero(); d];
                for k in 0..d {
                    let c = self.f(i + 1, j + 1, k + 1);
                    if c.is_zero() {
                        continue;
                    }
                    for r in 0..d {
                        lhs[r] += &(c * a.at(r, k));
                    }
                }
                let rhs = self.bracket(&col(a, i), &col(a, j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Basis vector `X_i` (1-based) as a coefficient column.
pub fn basis_vector(dim: usize, i: usize) -> Vec<Rat> {
    assert!(i >= 1 && i <= dim);
    let mut v = vec![Rat::zero(); dim];
    v[i - 1] = Rat::one();
    v
}
