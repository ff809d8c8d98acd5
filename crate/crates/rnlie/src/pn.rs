//! r-matrices, Nijenhuis operators and r-n structures.
//!
//! Every predicate exists in two independent formulations that must agree:
//!
//! * the *matrix form*, one matrix equation per basis index, built from the
//!   adjoint data `X_i`, `Y^i` (the fast path, also usable with polynomial
//!   entries for whole-family symbolic checks);
//! * the *direct form*, basis-wise evaluation of the defining tensor
//!   (Schouten defect, Nijenhuis torsion, concomitant), built from brackets
//!   and coadjoint actions only.
//!
//! A disagreement between the two is a hard internal error, never silently
//! resolved.
//!
//! Conventions: bivector matrices are antisymmetric with `m[i][j] = r^{ij}`
//! and `r#(X^i) = sum_j r^{ij} X_j`; endomorphism matrices act on columns,
//! entry `(i, j)` being the coefficient of `X_i` in `n(X_j)`; `n^t` acting on
//! dual coefficient columns is the matrix transpose.

use crate::lie::{basis_vector, LieAlgebra};
use crate::matrix::{Matrix, Scalar};
use crate::rat::Rat;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PnError {
    #[error("objects live on different algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("r-matrix is singular")]
    Singular,
    #[error("{0} does not solve the classical Yang-Baxter equation")]
    NotCybe(&'static str),
    #[error("r-matrices are not compatible")]
    NotCompatible,
    #[error("{0} is not a Nijenhuis operator")]
    NotNijenhuis(&'static str),
    #[error("wedge index ({0}, {1}) requires 1 <= i < j <= dim")]
    BadWedgeIndex(usize, usize),
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("r-n structure invalid: {0}")]
    InvalidRn(String),
}

/// Antisymmetric bivector on an algebra (or, with `on_dual`, on its dual).
#[derive(Clone, Debug, PartialEq)]
pub struct Bivector {
    alg: Arc<LieAlgebra>,
    m: Matrix<Rat>,
    on_dual: bool,
}

impl Bivector {
    pub fn zero(alg: &Arc<LieAlgebra>) -> Self {
        Bivector {
            alg: alg.clone(),
            m: Matrix::zero(alg.dim(), alg.dim()),
            on_dual: false,
        }
    }

    /// From wedge terms `c X_i ^ X_j` with `i < j` (1-based).
    pub fn from_wedge(alg: &Arc<LieAlgebra>, terms: &[(usize, usize, Rat)]) -> Result<Self, PnError> {
        let d = alg.dim();
        let mut m = Matrix::zero(d, d);
        for (i, j, c) in terms {
            if *i < 1 || *j <= *i || *j > d {
                return Err(PnError::BadWedgeIndex(*i, *j));
            }
            m.set(i - 1, j - 1, m.at(i - 1, j - 1) + c);
            m.set(j - 1, i - 1, m.at(j - 1, i - 1) - c);
        }
        Ok(Bivector {
            alg: alg.clone(),
            m,
            on_dual: false,
        })
    }

    pub fn from_matrix(alg: &Arc<LieAlgebra>, m: Matrix<Rat>) -> Result<Self, PnError> {
        if m.rows() != alg.dim() || m.cols() != alg.dim() {
            return Err(PnError::DimensionMismatch);
        }
        if !m.is_antisymmetric() {
            return Err(PnError::NotAntisymmetric);
        }
        Ok(Bivector {
            alg: alg.clone(),
            m,
            on_dual: false,
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    pub fn matrix(&self) -> &Matrix<Rat> {
        &self.m
    }

    pub fn on_dual(&self) -> bool {
        self.on_dual
    }

    pub fn add(&self, other: &Bivector) -> Result<Bivector, PnError> {
        if self.alg != other.alg || self.on_dual != other.on_dual {
            return Err(PnError::AlgebraMismatch);
        }
        Ok(Bivector {
            alg: self.alg.clone(),
            m: self.m.add(&other.m),
            on_dual: self.on_dual,
        })
    }

    pub fn scale(&self, c: &Rat) -> Bivector {
        Bivector {
            alg: self.alg.clone(),
            m: self.m.scale(c),
            on_dual: self.on_dual,
        }
    }

    pub fn is_invertible(&self) -> bool {
        !self.m.det().is_zero()
    }

    /// Wedge terms `(i, j, c)` with `i < j`, 1-based, nonzero `c` only.
    pub fn wedge_terms(&self) -> Vec<(usize, usize, Rat)> {
        let d = self.m.rows();
        let mut out = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                if !self.m.at(i, j).is_zero() {
                    out.push((i + 1, j + 1, self.m.at(i, j).clone()));
                }
            }
        }
        out
    }
}

/// A (1,1)-tensor `n: g -> g` in column-action convention.
#[derive(Clone, Debug, PartialEq)]
pub struct Endomorphism {
    alg: Arc<LieAlgebra>,
    m: Matrix<Rat>,
}

impl Endomorphism {
    pub fn new(alg: &Arc<LieAlgebra>, m: Matrix<Rat>) -> Result<Self, PnError> {
        if m.rows() != alg.dim() || m.cols() != alg.dim() {
            return Err(PnError::DimensionMismatch);
        }
        Ok(Endomorphism {
            alg: alg.clone(),
            m,
        })
    }

    pub fn identity(alg: &Arc<LieAlgebra>) -> Self {
        Endomorphism {
            alg: alg.clone(),
            m: Matrix::identity(alg.dim()),
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    pub fn matrix(&self) -> &Matrix<Rat> {
        &self.m
    }

    pub fn add(&self, other: &Endomorphism) -> Result<Endomorphism, PnError> {
        if self.alg != other.alg {
            return Err(PnError::AlgebraMismatch);
        }
        Ok(Endomorphism {
            alg: self.alg.clone(),
            m: self.m.add(&other.m),
        })
    }

    /// `n(v)` on coefficient columns.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        let d = self.alg.dim();
        assert_eq!(v.len(), d);
        (0..d)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..d {
                    s += &(self.m.at(i, j) * &v[j]);
                }
                s
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Endomorphism {
        Endomorphism {
            alg: self.alg.clone(),
            m: self.m.pow(k),
        }
    }
}

/// Rank-3 tensor of rationals with exact zero test; slot variance is fixed
/// by the operation that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Rat>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![Rat::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 1-based access.
    pub fn at(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.data[((i - 1) * self.dim + (j - 1)) * self.dim + (k - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rat) {
        self.data[((i - 1) * self.dim + (j - 1)) * self.dim + (k - 1)] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Nonzero entries as `(i, j, k, value)`, index-lexicographic.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Rat)> {
        let mut out = Vec::new();
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                for k in 1..=self.dim {
                    let v = self.at(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Matrix-form equations, generic over the coefficient ring so the same code
// verifies rational instances and whole parametric families.
// ---------------------------------------------------------------------------

/// Left-hand sides of the matrix CYBE, one per basis index `i`:
/// `r Y^i r - sum_l r X_l r^{il} - sum_l r^{il} X_l^t r`.
pub fn cybe_matrix_lhs<T: Scalar>(
    x: &[Matrix<T>],
    y: &[Matrix<T>],
    r: &Matrix<T>,
) -> Vec<Matrix<T>> {
    let d = x.len();
    (0..d)
        .map(|i| {
            let mut lhs = r.mul(&y[i]).mul(r);
            for l in 0..d {
                let ril = r.at(i, l);
                if ril.is_zero() {
                    continue;
                }
                lhs = lhs.sub(&r.mul(&x[l]).scale(ril));
                lhs = lhs.sub(&x[l].transpose().mul(r).scale(ril));
            }
            lhs
        })
        .collect()
}

/// Left-hand sides of the matrix Nijenhuis condition, one per `i`:
/// `X_i n^t n^t + sum_l n^l_i n^t X_l - n^t X_i n^t - sum_l n^l_i X_l n^t`.
pub fn nijenhuis_matrix_lhs<T: Scalar>(x: &[Matrix<T>], n: &Matrix<T>) -> Vec<Matrix<T>> {
    let d = x.len();
    let nt = n.transpose();
    let ntnt = nt.mul(&nt);
    (0..d)
        .map(|i| {
            let mut lhs = x[i].mul(&ntnt).sub(&nt.mul(&x[i]).mul(&nt));
            for l in 0..d {
                let nli = n.at(l, i);
                if nli.is_zero() {
                    continue;
                }
                lhs = lhs.add(&nt.mul(&x[l]).scale(nli));
                lhs = lhs.sub(&x[l].mul(&nt).scale(nli));
            }
            lhs
        })
        .collect()
}

/// Left-hand sides of the matrix concomitant condition, one per `i`:
/// `sum_j r X_j n^j_i + sum_j X_j^t n^j_i r - r X_i n^t - n X_i^t r`.
pub fn concomitant_matrix_lhs<T: Scalar>(
    x: &[Matrix<T>],
    r: &Matrix<T>,
    n: &Matrix<T>,
) -> Vec<Matrix<T>> {
    let d = x.len();
    let nt = n.transpose();
    (0..d)
        .map(|i| {
            let mut lhs = r.mul(&x[i]).mul(&nt).neg();
            lhs = lhs.sub(&n.mul(&x[i].transpose()).mul(r));
            for j in 0..d {
                let nji = n.at(j, i);
                if nji.is_zero() {
                    continue;
                }
                lhs = lhs.add(&r.mul(&x[j]).scale(nji));
                lhs = lhs.add(&x[j].transpose().mul(r).scale(nji));
            }
            lhs
        })
        .collect()
}

/// The intertwining condition `n r = r n^t` as a defect matrix.
pub fn intertwine_defect<T: Scalar>(r: &Matrix<T>, n: &Matrix<T>) -> Matrix<T> {
    n.mul(r).sub(&r.mul(&n.transpose()))
}

fn adjoint_of(alg: &LieAlgebra) -> (Vec<Matrix<Rat>>, Vec<Matrix<Rat>>) {
    let adj = alg.adjoint_matrices();
    (adj.x, adj.y)
}

// ---------------------------------------------------------------------------
// Predicates on rational instances.
// ---------------------------------------------------------------------------

/// Matrix-form CYBE check.
pub fn check_cybe_matrix(r: &Bivector) -> bool {
    let (x, y) = adjoint_of(r.algebra());
    cybe_matrix_lhs(&x, &y, r.matrix()).iter().all(Matrix::is_zero)
}

/// Direct-form Schouten defect `<r,r>(X^i, X^j, X^k)`; zero iff `r` solves
/// the CYBE. Slot variance: three contravariant (dual-basis) arguments.
pub fn schouten_defect(r: &Bivector) -> Tensor3 {
    let alg = r.algebra();
    let d = alg.dim();
    let rm = r.matrix();
    let dual = sklyanin_constants(alg, rm);
    let mut t = Tensor3::zero(d);
    for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                // [r# X^i, r# X^j] component k
                let mut s = Rat::zero();
                for l in 1..=d {
                    if rm.at(i - 1, l - 1).is_zero() {
                        continue;
                    }
                    for m in 1..=d {
                        if rm.at(j - 1, m - 1).is_zero() {
                            continue;
                        }
                        s += &(&(rm.at(i - 1, l - 1) * rm.at(j - 1, m - 1)) * alg.f(l, m, k));
                    }
                }
                // minus r#([X^i, X^j]^r) component k
                for m in 1..=d {
                    let c = dual.f(i, j, m);
                    if !c.is_zero() {
                        s = s - (c * rm.at(m - 1, k - 1));
                    }
                }
                if !s.is_zero() {
                    t.set(i, j, k, s);
                }
            }
        }
    }
    t
}

/// Structure constants of the Sklyanin bracket on the dual space:
/// `f~^{ij}_m = sum_l (r^{jl} f^i_{lm} - r^{il} f^j_{lm})`. The same formula
/// serves on the dual side (constants of `g*` and a bivector matrix on `g*`).
pub fn sklyanin_constants(alg: &LieAlgebra, rm: &Matrix<Rat>) -> LieAlgebra {
    let d = alg.dim();
    LieAlgebra::from_full_table(d, &|i, j, m| {
        let mut s = Rat::zero();
        for l in 0..d {
            if !rm.at(j, l).is_zero() {
                s += &(rm.at(j, l) * alg.f(l + 1, m + 1, i + 1));
            }
            if !rm.at(i, l).is_zero() {
                s = s - (rm.at(i, l) * alg.f(l + 1, m + 1, j + 1));
            }
        }
        s
    })
}

/// The Sklyanin dual of `r`: the dual-space structure constants, flagged with
/// whether they satisfy Jacobi (they do whenever `r` solves the CYBE).
pub struct SklyaninDual {
    pub dual: LieAlgebra,
    pub is_lie: bool,
}

pub fn sklyanin_dual(r: &Bivector) -> SklyaninDual {
    let dual = sklyanin_constants(r.algebra(), r.matrix());
    let is_lie = dual.check_jacobi().is_empty();
    SklyaninDual { dual, is_lie }
}

/// Compatibility of two CYBE solutions: their sum solves the CYBE. The
/// equivalent mixed identity
/// `r [X^i,X^j]^{r'} + r' [X^i,X^j]^r = [rX^i, r'X^j] + [r'X^i, rX^j]`
/// is evaluated independently; disagreement would be an internal error.
pub fn check_r_compatible(r: &Bivector, r2: &Bivector) -> Result<bool, PnError> {
    if r.algebra() != r2.algebra() {
        return Err(PnError::AlgebraMismatch);
    }
    if !check_cybe_matrix(r) {
        return Err(PnError::NotCybe("first argument"));
    }
    if !check_cybe_matrix(r2) {
        return Err(PnError::NotCybe("second argument"));
    }
    let sum_ok = check_cybe_matrix(&r.add(r2)?);

    let alg = r.algebra();
    let d = alg.dim();
    let (ra, rb) = (r.matrix(), r2.matrix());
    let da = sklyanin_constants(alg, ra);
    let db = sklyanin_constants(alg, rb);
    let mut mixed_ok = true;
    'outer: for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                // LHS: sum_m (f~'^{ij}_m r^{mk} + f~^{ij}_m r'^{mk})
                let mut lhs = Rat::zero();
                for m in 1..=d {
                    lhs += &(db.f(i, j, m) * ra.at(m - 1, k - 1));
                    lhs += &(da.f(i, j, m) * rb.at(m - 1, k - 1));
                }
                // RHS: sum_{a,b} (r^{ia} r'^{jb} + r'^{ia} r^{jb}) f^k_{ab}
                let mut rhs = Rat::zero();
                for a in 1..=d {
                    for b in 1..=d {
                        let c = alg.f(a, b, k);
                        if c.is_zero() {
                            continue;
                        }
                        let w = &(ra.at(i - 1, a - 1) * rb.at(j - 1, b - 1))
                            + &(rb.at(i - 1, a - 1) * ra.at(j - 1, b - 1));
                        rhs += &(&w * c);
                    }
                }
                if lhs != rhs {
                    mixed_ok = false;
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(
        sum_ok, mixed_ok,
        "internal error: sum-CYBE and mixed-identity compatibility tests disagree"
    );
    Ok(sum_ok)
}

/// Inverse of an invertible `r`, as a bivector on the dual space. The matrix
/// is the exact inverse of `r`'s matrix, which realises the defining pairing
/// `<(r^-1)#(X_i), r#(X^j)> = -<X^j, X_i>` since `M r^t = -I` when `M r = I`.
pub fn inverse_r(r: &Bivector) -> Result<Bivector, PnError> {
    let inv = r.matrix().inverse().ok_or(PnError::Singular)?;
    debug_assert!(inv.is_antisymmetric());
    Ok(Bivector {
        alg: r.algebra().clone(),
        m: inv,
        on_dual: !r.on_dual(),
    })
}

/// Bi-r-matrix property: the Sklyanin bracket of `r^-1` over the dual algebra
/// `(g*, f~)` reproduces the original structure constants exactly.
pub fn check_bi_r_matrix(r: &Bivector) -> Result<bool, PnError> {
    if !check_cybe_matrix(r) {
        return Err(PnError::NotCybe("argument"));
    }
    let rinv = inverse_r(r)?;
    let dual = sklyanin_constants(r.algebra(), r.matrix());
    let back = sklyanin_constants(&dual, rinv.matrix());
    let alg = r.algebra();
    let d = alg.dim();
    for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                if back.f(i, j, k) != alg.f(i, j, k) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Direct-form Nijenhuis torsion
/// `[nX_i, nX_j] - n[nX_i, X_j] - n[X_i, nX_j] + n^2 [X_i, X_j]`,
/// antisymmetric in the first two slots.
pub fn nijenhuis_torsion(n: &Endomorphism) -> Tensor3 {
    let alg = n.algebra();
    let d = alg.dim();
    let mut t = Tensor3::zero(d);
    for i in 1..=d {
        let ei = basis_vector(d, i);
        let nei = n.apply(&ei);
        for j in 1..=d {
            let ej = basis_vector(d, j);
            let nej = n.apply(&ej);
            let term1 = alg.bracket(&nei, &nej);
            let term2 = n.apply(&alg.bracket(&nei, &ej));
            let term3 = n.apply(&alg.bracket(&ei, &nej));
            let term4 = n.apply(&n.apply(&alg.bracket(&ei, &ej)));
            for k in 1..=d {
                let v = &(&term1[k - 1] - &term2[k - 1]) - &(&term3[k - 1] - &term4[k - 1]);
                if !v.is_zero() {
                    t.set(i, j, k, v);
                }
            }
        }
    }
    t
}

/// Matrix-form Nijenhuis check; must agree with `nijenhuis_torsion == 0`.
pub fn check_nijenhuis_matrix(n: &Endomorphism) -> bool {
    let (x, _) = adjoint_of(n.algebra());
    nijenhuis_matrix_lhs(&x, n.matrix())
        .iter()
        .all(Matrix::is_zero)
}

/// Direct-form concomitant
/// `C(r,n)(a, b) = L_{r#a} n^t b - L_{r#b} n^t a - n^t L_{r#a} b + n^t L_{r#b} a`
/// on basis covectors, with `L_X = ad*_X`; component `k` of `C(X^i, X^j)` is
/// stored at `(i, j, k)`.
pub fn concomitant(r: &Bivector, n: &Endomorphism) -> Tensor3 {
    assert_eq!(r.algebra(), n.algebra(), "objects on different algebras");
    let alg = r.algebra();
    let d = alg.dim();
    let rm = r.matrix();
    let nt = n.matrix().transpose();
    // Coadjoint matrices of r# X^i for each i.
    let coad: Vec<Matrix<Rat>> = (0..d)
        .map(|i| {
            let v: Vec<Rat> = (0..d).map(|l| rm.at(i, l).clone()).collect();
            alg.coadjoint_matrix(&v)
        })
        .collect();
    let apply = |m: &Matrix<Rat>, v: &[Rat]| -> Vec<Rat> {
        (0..d)
            .map(|a| {
                let mut s = Rat::zero();
                for b in 0..d {
                    s += &(m.at(a, b) * &v[b]);
                }
                s
            })
            .collect()
    };
    let mut t = Tensor3::zero(d);
    for i in 1..=d {
        let ei = basis_vector(d, i);
        let nt_ei = apply(&nt, &ei);
        for j in 1..=d {
            let ej = basis_vector(d, j);
            let nt_ej = apply(&nt, &ej);
            let t1 = apply(&coad[i - 1], &nt_ej);
            let t2 = apply(&coad[j - 1], &nt_ei);
            let t3 = apply(&nt, &apply(&coad[i - 1], &ej));
            let t4 = apply(&nt, &apply(&coad[j - 1], &ei));
            for k in 1..=d {
                let v = &(&t1[k - 1] - &t2[k - 1]) - &(&t3[k - 1] - &t4[k - 1]);
                if !v.is_zero() {
                    t.set(i, j, k, v);
                }
            }
        }
    }
    t
}

/// Matrix-form concomitant check; must agree with `concomitant == 0`.
pub fn check_concomitant_matrix(r: &Bivector, n: &Endomorphism) -> bool {
    assert_eq!(r.algebra(), n.algebra(), "objects on different algebras");
    let (x, _) = adjoint_of(r.algebra());
    concomitant_matrix_lhs(&x, r.matrix(), n.matrix())
        .iter()
        .all(Matrix::is_zero)
}

/// The four r-n conditions, reported individually.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RnReport {
    /// (i) `r` solves the CYBE.
    pub cybe: bool,
    /// (ii) the Nijenhuis torsion of `n` vanishes.
    pub torsion: bool,
    /// (iii) `n r = r n^t`.
    pub intertwine: bool,
    /// (iv) the concomitant `C(r, n)` vanishes.
    pub concomitant: bool,
}

impl RnReport {
    pub fn valid(&self) -> bool {
        self.cybe && self.torsion && self.intertwine && self.concomitant
    }

    pub fn failing(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.cybe {
            out.push("cybe");
        }
        if !self.torsion {
            out.push("torsion");
        }
        if !self.intertwine {
            out.push("intertwine");
        }
        if !self.concomitant {
            out.push("concomitant");
        }
        out
    }
}

/// Checks all four r-n conditions using the matrix forms.
pub fn check_rn(r: &Bivector, n: &Endomorphism) -> RnReport {
    assert_eq!(r.algebra(), n.algebra(), "objects on different algebras");
    RnReport {
        cybe: check_cybe_matrix(r),
        torsion: check_nijenhuis_matrix(n),
        intertwine: intertwine_defect(r.matrix(), n.matrix()).is_zero(),
        concomitant: check_concomitant_matrix(r, n),
    }
}

/// A validated r-n structure.
#[derive(Clone, Debug, PartialEq)]
pub struct RnStructure {
    r: Bivector,
    n: Endomorphism,
}

impl RnStructure {
    pub fn new(r: Bivector, n: Endomorphism) -> Result<Self, PnError> {
        if r.algebra() != n.algebra() {
            return Err(PnError::AlgebraMismatch);
        }
        let report = check_rn(&r, &n);
        if !report.valid() {
            return Err(PnError::InvalidRn(report.failing().join(", ")));
        }
        Ok(RnStructure { r, n })
    }

    /// Unvalidated constructor, for exercising failure paths.
    pub fn new_unchecked(r: Bivector, n: Endomorphism) -> Self {
        RnStructure { r, n }
    }

    pub fn r(&self) -> &Bivector {
        &self.r
    }

    pub fn n(&self) -> &Endomorphism {
        &self.n
    }
}

/// The hierarchy `r_k` with matrix `n^k r`, `k = 1..=kmax`. Every member is
/// validated: antisymmetric, CYBE, pairwise compatible, and `(r, n^k)` is
/// again an r-n structure.
pub fn hierarchy(s: &RnStructure, kmax: u32) -> Vec<Bivector> {
    assert!(kmax >= 1);
    let alg = s.r().algebra().clone();
    let mut out: Vec<Bivector> = Vec::new();
    for k in 1..=kmax {
        let m = s.n().matrix().pow(k).mul(s.r().matrix());
        assert!(
            m.is_antisymmetric(),
            "hierarchy member r_{k} is not antisymmetric"
        );
        let rk = Bivector {
            alg: alg.clone(),
            m,
            on_dual: s.r().on_dual(),
        };
        assert!(
            check_cybe_matrix(&rk),
            "hierarchy member r_{k} does not solve the CYBE"
        );
        assert!(
            check_rn(s.r(), &s.n().pow(k)).valid(),
            "(r, n^{k}) is not an r-n structure"
        );
        out.push(rk);
    }
    for a in 0..out.len() {
        for b in (a + 1)..out.len() {
            assert!(
                check_r_compatible(&out[a], &out[b]).unwrap(),
                "hierarchy members r_{} and r_{} are not compatible",
                a + 1,
                b + 1
            );
        }
    }
    out
}

/// Recovers the Nijenhuis partner of a compatible pair: `n = r' o r^-1`.
/// Preconditions: `r` invertible, both solve the CYBE, and the pair is
/// compatible.
pub fn n_from_pair(r: &Bivector, r2: &Bivector) -> Result<Endomorphism, PnError> {
    if r.algebra() != r2.algebra() {
        return Err(PnError::AlgebraMismatch);
    }
    let rinv = r.matrix().inverse().ok_or(PnError::Singular)?;
    if !check_r_compatible(r, r2)? {
        return Err(PnError::NotCompatible);
    }
    let n = Endomorphism {
        alg: r.algebra().clone(),
        m: r2.matrix().mul(&rinv),
    };
    debug_assert!(
        check_rn(r, &n).valid(),
        "internal error: recovered n fails the r-n conditions"
    );
    debug_assert_eq!(
        n.matrix().mul(r.matrix()),
        r2.matrix().clone(),
        "internal error: n r does not recover r'"
    );
    Ok(n)
}

/// Nijenhuis concomitant of two torsion-free operators; zero iff compatible
/// (then `n1 + n2` is torsion-free, which is asserted).
pub fn nijenhuis_concomitant(n1: &Endomorphism, n2: &Endomorphism) -> Result<Tensor3, PnError> {
    if n1.algebra() != n2.algebra() {
        return Err(PnError::AlgebraMismatch);
    }
    if !check_nijenhuis_matrix(n1) {
        return Err(PnError::NotNijenhuis("first argument"));
    }
    if !check_nijenhuis_matrix(n2) {
        return Err(PnError::NotNijenhuis("second argument"));
    }
    let alg = n1.algebra();
    let d = alg.dim();
    let mut t = Tensor3::zero(d);
    for i in 1..=d {
        let ei = basis_vector(d, i);
        let n1ei = n1.apply(&ei);
        let n2ei = n2.apply(&ei);
        for j in 1..=d {
            let ej = basis_vector(d, j);
            let n1ej = n1.apply(&ej);
            let n2ej = n2.apply(&ej);
            let bij = alg.bracket(&ei, &ej);
            // [n1 X_i, n2 X_j] - n1[n2 X_i, X_j] - n1[X_i, n2 X_j] + n1 n2 [X_i, X_j]
            let a1 = alg.bracket(&n1ei, &n2ej);
            let a2 = n1.apply(&alg.bracket(&n2ei, &ej));
            let a3 = n1.apply(&alg.bracket(&ei, &n2ej));
            let a4 = n1.apply(&n2.apply(&bij));
            // [n2 X_i, n1 X_j] - n2[n1 X_i, X_j] - n2[X_i, n1 X_j] + n2 n1 [X_i, X_j]
            let b1 = alg.bracket(&n2ei, &n1ej);
            let b2 = n2.apply(&alg.bracket(&n1ei, &ej));
            let b3 = n2.apply(&alg.bracket(&ei, &n1ej));
            let b4 = n2.apply(&n1.apply(&bij));
            for k in 0..d {
                let half1 = &(&a1[k] - &a2[k]) - &(&a3[k] - &a4[k]);
                let half2 = &(&b1[k] - &b2[k]) - &(&b3[k] - &b4[k]);
                let v = &half1 + &half2;
                if !v.is_zero() {
                    t.set(i, j, k + 1, v);
                }
            }
        }
    }
    if t.is_zero() {
        let sum = n1.add(n2)?;
        assert!(
            check_nijenhuis_matrix(&sum),
            "internal error: zero Nijenhuis concomitant but sum has torsion"
        );
    }
    Ok(t)
}

/// Compatibility of Nijenhuis operators: vanishing Nijenhuis concomitant.
pub fn check_n_compatible(n1: &Endomorphism, n2: &Endomorphism) -> Result<bool, PnError> {
    Ok(nijenhuis_concomitant(n1, n2)?.is_zero())
}

/// Compatibility of r-n structures: `(r1 + r2, n1 + n2)` is an r-n structure.
pub fn check_rn_compatible(s1: &RnStructure, s2: &RnStructure) -> Result<bool, PnError> {
    if s1.r().algebra() != s2.r().algebra() {
        return Err(PnError::AlgebraMismatch);
    }
    let r = s1.r().add(s2.r())?;
    let n = s1.n().add(s2.n())?;
    Ok(check_rn(&r, &n).valid())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;

    fn a41() -> Arc<LieAlgebra> {
        Arc::new(
            LieAlgebra::new(
                4,
                &[(2, 4, 1, Rat::one()), (3, 4, 2, Rat::one())],
                Some("A_{4,1}"),
            )
            .unwrap(),
        )
    }

    fn a45() -> Arc<LieAlgebra> {
        Arc::new(
            LieAlgebra::new(
                4,
                &[
                    (1, 4, 1, Rat::one()),
                    (2, 4, 2, Rat::from_int(-1)),
                    (3, 4, 3, Rat::from_int(-1)),
                ],
                Some("A_{4,5}^{-1,-1}"),
            )
            .unwrap(),
        )
    }

    /// The invertible representative r = X1^X4 - X2^X3 on A_{4,1}.
    fn r_a41(alg: &Arc<LieAlgebra>) -> Bivector {
        Bivector::from_wedge(
            alg,
            &[(1, 4, Rat::one()), (2, 3, Rat::from_int(-1))],
        )
        .unwrap()
    }

    /// The compatible n-family on A_{4,1} at parameters (n1, n2, n3, n4).
    fn n_a41(alg: &Arc<LieAlgebra>, p: [i64; 4]) -> Endomorphism {
        let [n1, n2, n3, n4] = p.map(Rat::from_int);
        Endomorphism::new(
            alg,
            Matrix::from_rows(vec![
                vec![n1.clone(), -&n2, n4.clone(), Rat::zero()],
                vec![Rat::zero(), n3.clone(), Rat::zero(), n4.clone()],
                vec![Rat::zero(), Rat::zero(), n3.clone(), n2.clone()],
                vec![Rat::zero(), Rat::zero(), Rat::zero(), n1.clone()],
            ]),
        )
        .unwrap()
    }

    #[test]
    fn wedge_constructor_is_antisymmetric() {
        let alg = a41();
        let r = r_a41(&alg);
        assert!(r.matrix().is_antisymmetric());
        assert_eq!(r.matrix().at(0, 3), &Rat::one());
        assert_eq!(r.matrix().at(3, 0), &Rat::from_int(-1));
        assert_eq!(r.matrix().at(1, 2), &Rat::from_int(-1));
        assert!(matches!(
            Bivector::from_wedge(&alg, &[(3, 2, Rat::one())]),
            Err(PnError::BadWedgeIndex(3, 2))
        ));
    }

    #[test]
    fn cybe_examples() {
        let alg = a41();
        assert!(check_cybe_matrix(&r_a41(&alg)));
        assert!(check_cybe_matrix(&Bivector::zero(&alg)));
        let bad = Bivector::from_wedge(&alg, &[(2, 4, Rat::one())]).unwrap();
        assert!(!check_cybe_matrix(&bad));
        assert!(!schouten_defect(&bad).is_zero());
    }

    #[test]
    fn schouten_examples() {
        let alg = a41();
        assert!(schouten_defect(&Bivector::zero(&alg)).is_zero());
        assert!(schouten_defect(&r_a41(&alg)).is_zero());
    }

    #[test]
    fn cybe_scaling_property() {
        let alg = a41();
        let r = r_a41(&alg);
        let n = n_a41(&alg, [1, 2, 3, 5]);
        for c in [Rat::from_int(3), Rat::new(-7, 2), Rat::zero()] {
            assert!(check_cybe_matrix(&r.scale(&c)));
            // (c r, n) is again an r-n structure.
            assert!(check_rn(&r.scale(&c), &n).valid());
        }
    }

    #[test]
    fn sklyanin_dual_of_the_a41_representative() {
        let alg = a41();
        let out = sklyanin_dual(&r_a41(&alg));
        assert!(out.is_lie);
        // Nonzero dual constants exactly f~^{12}_3 = 1 and f~^{13}_4 = 1.
        let d = &out.dual;
        for i in 1..=4 {
            for j in 1..=4 {
                for k in 1..=4 {
                    let expected = match (i, j, k) {
                        (1, 2, 3) | (1, 3, 4) => Rat::one(),
                        (2, 1, 3) | (3, 1, 4) => Rat::from_int(-1),
                        _ => Rat::zero(),
                    };
                    assert_eq!(d.f(i, j, k), &expected, "f~^{{{i}{j}}}_{k}");
                }
            }
        }
    }

    #[test]
    fn sklyanin_dual_of_zero_is_abelian() {
        let alg = a41();
        let out = sklyanin_dual(&Bivector::zero(&alg));
        assert!(out.is_lie);
        assert!(out.dual.check_jacobi().is_empty());
        for i in 1..=4 {
            for j in 1..=4 {
                for k in 1..=4 {
                    assert!(out.dual.f(i, j, k).is_zero());
                }
            }
        }
    }

    #[test]
    fn sklyanin_dual_of_a42_representative() {
        // A_{4,2}^{-1}: r = X1^X3 - X2^X4 gives
        // f~^{12}_1 = f~^{23}_3 = -1, f~^{24}_4 = 1, f~^{21}_4 = 1.
        let alg = Arc::new(
            LieAlgebra::new(
                4,
                &[
                    (1, 4, 1, Rat::from_int(-1)),
                    (2, 4, 2, Rat::one()),
                    (3, 4, 2, Rat::one()),
                    (3, 4, 3, Rat::one()),
                ],
                Some("A_{4,2}^{-1}"),
            )
            .unwrap(),
        );
        let r = Bivector::from_wedge(
            &alg,
            &[(1, 3, Rat::one()), (2, 4, Rat::from_int(-1))],
        )
        .unwrap();
        let out = sklyanin_dual(&r);
        assert!(out.is_lie);
        let dual = &out.dual;
        assert_eq!(dual.f(1, 2, 1), &Rat::from_int(-1));
        assert_eq!(dual.f(2, 3, 3), &Rat::from_int(-1));
        assert_eq!(dual.f(2, 4, 4), &Rat::one());
        assert_eq!(dual.f(1, 2, 4), &Rat::from_int(-1)); // printed as f~^{21}_4 = 1
        // Nothing else besides antisymmetric completions.
        let mut nonzero = 0;
        for i in 1..=4 {
            for j in (i + 1)..=4 {
                for k in 1..=4 {
                    if !dual.f(i, j, k).is_zero() {
                        nonzero += 1;
                    }
                }
            }
        }
        assert_eq!(nonzero, 4);
    }

    #[test]
    fn compatibility_examples() {
        let alg = a41();
        let r = r_a41(&alg);
        assert!(check_r_compatible(&r, &Bivector::zero(&alg)).unwrap());
        let r1 = Bivector::from_wedge(&alg, &[(1, 2, Rat::one())]).unwrap();
        assert!(check_r_compatible(&r, &r1).unwrap());
        assert!(check_r_compatible(&r, &r.scale(&Rat::new(5, 3))).unwrap());
        let bad = Bivector::from_wedge(&alg, &[(2, 4, Rat::one())]).unwrap();
        assert!(matches!(
            check_r_compatible(&r, &bad),
            Err(PnError::NotCybe(_))
        ));
    }

    #[test]
    fn inverse_examples() {
        let alg = a41();
        let r = r_a41(&alg);
        let inv = inverse_r(&r).unwrap();
        assert!(inv.on_dual());
        assert_eq!(inv.matrix().clone(), r.matrix().neg());
        assert_eq!(
            inv.matrix().mul(r.matrix()),
            Matrix::identity(4)
        );
        let singular = Bivector::from_wedge(&alg, &[(1, 2, Rat::one())]).unwrap();
        assert!(matches!(inverse_r(&singular), Err(PnError::Singular)));
    }

    #[test]
    fn inverse_of_block_wedge() {
        // r = X1^X2 + X3^X4 on the abelian 4-dim algebra inverts to minus itself.
        let alg = Arc::new(LieAlgebra::abelian(4));
        let r = Bivector::from_wedge(&alg, &[(1, 2, Rat::one()), (3, 4, Rat::one())]).unwrap();
        let inv = inverse_r(&r).unwrap();
        assert_eq!(inv.matrix().clone(), r.matrix().neg());
    }

    #[test]
    fn bi_r_matrix_examples() {
        let alg = a41();
        assert!(check_bi_r_matrix(&r_a41(&alg)).unwrap());
        // Abelian algebra: both sides stay abelian/original.
        let ab = Arc::new(LieAlgebra::abelian(4));
        let r = Bivector::from_wedge(&ab, &[(1, 2, Rat::from_int(3)), (3, 4, Rat::new(1, 2))])
            .unwrap();
        assert!(check_bi_r_matrix(&r).unwrap());
    }

    #[test]
    fn torsion_examples() {
        let alg = a41();
        assert!(nijenhuis_torsion(&Endomorphism::identity(&alg)).is_zero());
        let scaled = Endomorphism::new(&alg, Matrix::identity(4).scale(&Rat::new(-5, 7))).unwrap();
        assert!(nijenhuis_torsion(&scaled).is_zero());
        assert!(nijenhuis_torsion(&n_a41(&alg, [1, 2, 3, 5])).is_zero());
        assert!(check_nijenhuis_matrix(&n_a41(&alg, [1, 2, 3, 5])));
    }

    #[test]
    fn torsion_cross_oracle_on_a_swap() {
        let alg = a41();
        // n swapping X1 <-> X4.
        let swap = Endomorphism::new(
            &alg,
            Matrix::from_i64_rows(vec![
                vec![0, 0, 0, 1],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![1, 0, 0, 0],
            ]),
        )
        .unwrap();
        assert_eq!(
            check_nijenhuis_matrix(&swap),
            nijenhuis_torsion(&swap).is_zero()
        );
    }

    #[test]
    fn concomitant_examples() {
        let alg = a41();
        let r = r_a41(&alg);
        let n = n_a41(&alg, [2, -1, 3, 7]);
        assert!(concomitant(&Bivector::zero(&alg), &n).is_zero());
        assert!(concomitant(&r, &Endomorphism::identity(&alg)).is_zero());
        assert!(concomitant(&r, &n).is_zero());
        assert!(check_concomitant_matrix(&Bivector::zero(&alg), &n));
        assert!(check_concomitant_matrix(&r, &Endomorphism::identity(&alg)));
        assert!(check_concomitant_matrix(&r, &n));
    }

    #[test]
    fn check_rn_examples() {
        let alg = a41();
        let r = r_a41(&alg);
        for p in [[1, 1, 1, 1], [2, -1, 3, 7], [0, 5, -2, 1]] {
            let report = check_rn(&r, &n_a41(&alg, p));
            assert!(report.valid(), "failed for {p:?}: {:?}", report.failing());
        }
        let report = check_rn(&r, &Endomorphism::identity(&alg));
        assert!(report.valid());
        // n = diag(1,2,3,4) breaks the intertwining condition (iii):
        // (n r - r n^t) has entry (1,4) equal to (1 - 4) * 1.
        let diag = Endomorphism::new(
            &alg,
            Matrix::from_i64_rows(vec![
                vec![1, 0, 0, 0],
                vec![0, 2, 0, 0],
                vec![0, 0, 3, 0],
                vec![0, 0, 0, 4],
            ]),
        )
        .unwrap();
        let report = check_rn(&r, &diag);
        assert!(!report.intertwine);
        let defect = intertwine_defect(r.matrix(), diag.matrix());
        assert_eq!(defect.at(0, 3), &Rat::from_int(-3));
    }

    #[test]
    fn rn_structure_constructor_validates() {
        let alg = a41();
        let r = r_a41(&alg);
        assert!(RnStructure::new(r.clone(), n_a41(&alg, [1, 1, 1, 1])).is_ok());
        let diag = Endomorphism::new(
            &alg,
            Matrix::from_i64_rows(vec![
                vec![1, 0, 0, 0],
                vec![0, 2, 0, 0],
                vec![0, 0, 3, 0],
                vec![0, 0, 0, 4],
            ]),
        )
        .unwrap();
        assert!(matches!(
            RnStructure::new(r, diag),
            Err(PnError::InvalidRn(_))
        ));
    }

    #[test]
    fn hierarchy_examples() {
        let alg = a41();
        let r = r_a41(&alg);
        // n = identity: r_k = r for all k.
        let s = RnStructure::new(r.clone(), Endomorphism::identity(&alg)).unwrap();
        for rk in hierarchy(&s, 3) {
            assert_eq!(rk.matrix(), r.matrix());
        }
        // The worked pair at (1,1,1,1), depth 3.
        let s = RnStructure::new(r.clone(), n_a41(&alg, [1, 1, 1, 1])).unwrap();
        assert_eq!(hierarchy(&s, 3).len(), 3);
        // Nilpotent n of order 2 (first Nijenhuis class at n1 = 0, c1 = 1):
        // r_2 = 0.
        let nilp = Endomorphism::new(
            &alg,
            Matrix::from_i64_rows(vec![
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 0, 0],
                vec![0, 0, 0, 0],
            ]),
        )
        .unwrap();
        let s = RnStructure::new(r, nilp).unwrap();
        let hs = hierarchy(&s, 2);
        assert!(hs[1].matrix().is_zero());
    }

    #[test]
    fn n_from_pair_reproduces_the_worked_partners() {
        let alg = a41();
        let r = r_a41(&alg);
        // r2 = r gives the identity.
        let n = n_from_pair(&r, &r).unwrap();
        assert_eq!(n.matrix().clone(), Matrix::identity(4));
        // r2 = X1^X2 gives n(X3) = X1, n(X4) = X2.
        let r2 = Bivector::from_wedge(&alg, &[(1, 2, Rat::one())]).unwrap();
        let n = n_from_pair(&r, &r2).unwrap();
        let expected = Matrix::from_i64_rows(vec![
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
        ]);
        assert_eq!(n.matrix(), &expected);
        // r2 = X1^X4 - X1^X3 gives n(X1) = X1, n(X2) = X1, n(X4) = -X3 + X4.
        let r2 = Bivector::from_wedge(
            &alg,
            &[(1, 4, Rat::one()), (1, 3, Rat::from_int(-1))],
        )
        .unwrap();
        let n = n_from_pair(&r, &r2).unwrap();
        let expected = Matrix::from_i64_rows(vec![
            vec![1, 1, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, -1],
            vec![0, 0, 0, 1],
        ]);
        assert_eq!(n.matrix(), &expected);
        // Singular r is rejected.
        assert!(matches!(
            n_from_pair(&r2, &r),
            Err(PnError::Singular)
        ));
    }

    #[test]
    fn nijenhuis_concomitant_examples() {
        let alg = a41();
        let r = r_a41(&alg);
        let id = Endomorphism::identity(&alg);
        let n = n_a41(&alg, [1, 2, 3, 4]);
        assert!(nijenhuis_concomitant(&id, &n).unwrap().is_zero());
        // Concomitant of n with itself is twice the torsion expression; zero
        // for a Nijenhuis operator.
        assert!(nijenhuis_concomitant(&n, &n).unwrap().is_zero());
        // The four worked partners of the physical example are pairwise
        // compatible (their sum is again Nijenhuis).
        let parts = [
            Bivector::from_wedge(&alg, &[(1, 2, Rat::one())]).unwrap(),
            Bivector::from_wedge(&alg, &[(1, 3, Rat::from_int(-1))]).unwrap(),
            Bivector::from_wedge(&alg, &[(1, 4, Rat::one()), (1, 3, Rat::from_int(-1))]).unwrap(),
            Bivector::from_wedge(&alg, &[(2, 3, Rat::from_int(-1))]).unwrap(),
        ];
        let ns: Vec<Endomorphism> = parts.iter().map(|p| n_from_pair(&r, p).unwrap()).collect();
        for a in 0..4 {
            for b in (a + 1)..4 {
                assert!(
                    nijenhuis_concomitant(&ns[a], &ns[b]).unwrap().is_zero(),
                    "partners {a} and {b} should be compatible"
                );
            }
        }
    }

    #[test]
    fn rn_compatibility_examples() {
        let alg = a41();
        let r = r_a41(&alg);
        let n = n_a41(&alg, [1, 1, 1, 1]);
        let s = RnStructure::new(r.clone(), n).unwrap();
        // Doubling preserves all four conditions.
        assert!(check_rn_compatible(&s, &s).unwrap());
        // (r, n1) and (r, n2) from the worked partners.
        let r1 = Bivector::from_wedge(&alg, &[(1, 2, Rat::one())]).unwrap();
        let r2 = Bivector::from_wedge(&alg, &[(1, 3, Rat::from_int(-1))]).unwrap();
        let s1 = RnStructure::new(r.clone(), n_from_pair(&r, &r1).unwrap()).unwrap();
        let s2 = RnStructure::new(r.clone(), n_from_pair(&r, &r2).unwrap()).unwrap();
        assert!(check_rn_compatible(&s1, &s2).unwrap());
    }

    #[test]
    fn corollary_biconditional_on_sampled_partners() {
        // For r', r'' built from the A_{4,1} family, n-compatibility of the
        // recovered operators agrees with r-compatibility.
        let alg = a41();
        let r = r_a41(&alg);
        let partners = [
            Bivector::from_wedge(&alg, &[(1, 2, Rat::one())]).unwrap(),
            Bivector::from_wedge(&alg, &[(1, 3, Rat::from_int(2))]).unwrap(),
            Bivector::from_wedge(&alg, &[(1, 4, Rat::one()), (2, 3, Rat::from_int(-1))]).unwrap(),
            Bivector::from_wedge(&alg, &[(1, 4, Rat::new(1, 2)), (1, 2, Rat::from_int(3))])
                .unwrap(),
        ];
        for a in 0..partners.len() {
            for b in 0..partners.len() {
                let ra = &partners[a];
                let rb = &partners[b];
                let na = n_from_pair(&r, ra).unwrap();
                let nb = n_from_pair(&r, rb).unwrap();
                assert_eq!(
                    check_n_compatible(&na, &nb).unwrap(),
                    check_r_compatible(ra, rb).unwrap(),
                    "biconditional failed for partners {a}, {b}"
                );
            }
        }
    }

    /// The module's central oracle pair: on random bivectors and
    /// endomorphisms the matrix-form predicates must agree with the direct
    /// tensors (zero iff true), with zero discrepancies.
    #[test]
    fn formulation_agreement_on_random_inputs() {
        use crate::sample::Sampler;
        let mut sampler = Sampler::new(20240);
        for alg in [a41(), a45()] {
            for _ in 0..60 {
                let mut m = Matrix::zero(4, 4);
                for i in 0..4 {
                    for j in (i + 1)..4 {
                        let c = sampler.rat(4);
                        m.set(i, j, c.clone());
                        m.set(j, i, -&c);
                    }
                }
                let r = Bivector::from_matrix(&alg, m).unwrap();
                let nm = Matrix::from_fn(4, 4, |_, _| sampler.rat(4));
                let n = Endomorphism::new(&alg, nm).unwrap();
                assert_eq!(check_cybe_matrix(&r), schouten_defect(&r).is_zero());
                assert_eq!(
                    check_nijenhuis_matrix(&n),
                    nijenhuis_torsion(&n).is_zero()
                );
                assert_eq!(
                    check_concomitant_matrix(&r, &n),
                    concomitant(&r, &n).is_zero()
                );
            }
        }
    }

    /// All domain values are immutable after construction and freely
    /// shareable between threads.
    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<LieAlgebra>();
        assert_send_sync::<Bivector>();
        assert_send_sync::<Endomorphism>();
        assert_send_sync::<RnStructure>();
        assert_send_sync::<Tensor3>();
        assert_send_sync::<crate::poly::Poly>();
        assert_send_sync::<crate::matrix::Matrix<Rat>>();

        // Fan a catalog-style verification out across threads.
        let alg = a41();
        let r = r_a41(&alg);
        let handles: Vec<_> = (0..4)
            .map(|k| {
                let r = r.clone();
                let alg = alg.clone();
                std::thread::spawn(move || {
                    let n = Endomorphism::new(
                        &alg,
                        Matrix::identity(4).scale(&Rat::from_int(k + 1)),
                    )
                    .unwrap();
                    check_rn(&r, &n).valid()
                })
            })
            .collect();
        for h in handles {
            assert!(h.join().unwrap());
        }
    }

    /// Whenever a random bivector happens to solve the CYBE, its Sklyanin
    /// dual satisfies Jacobi.
    #[test]
    fn sklyanin_dual_is_lie_for_cybe_solutions() {
        use crate::sample::Sampler;
        let alg = a41();
        let mut sampler = Sampler::new(5150);
        let mut hits = 0;
        for _ in 0..80 {
            // Sample within the known solution shape so CYBE holds often.
            let r = Bivector::from_wedge(
                &alg,
                &[
                    (1, 2, sampler.rat(4)),
                    (1, 3, sampler.rat(4)),
                    (1, 4, sampler.rat(4)),
                    (2, 3, sampler.rat(4)),
                ],
            )
            .unwrap();
            if check_cybe_matrix(&r) {
                hits += 1;
                assert!(sklyanin_dual(&r).is_lie);
            }
        }
        assert!(hits > 10, "sampler produced too few CYBE solutions");
    }
}
