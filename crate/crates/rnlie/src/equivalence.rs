//! Equivalence of r-matrices, Nijenhuis operators and r-n structures under
//! Lie algebra automorphisms.
//!
//! The orientation convention is `r' = A r A^t` and `n' = A n A^{-1}`. A
//! witness is an exact parameter assignment into the algebra's automorphism
//! family; everything a search returns is re-verified exactly, and a failed
//! search never certifies inequivalence.

use crate::catalog::{AutoFamilyData, CatalogEntry};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::pn::{Bivector, Endomorphism};
use crate::poly::{Poly, VarSet};
use crate::rat::Rat;
use crate::sample::Sampler;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivError {
    #[error("matrix is not a Lie algebra automorphism")]
    NotAutomorphism,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("objects live on different algebras")]
    AlgebraMismatch,
    #[error("assignment makes the nonvanishing polynomial zero")]
    Vanishing,
    #[error("{0}")]
    BadFamily(String),
}

/// A parametric automorphism family: a matrix of polynomials in named
/// parameters together with the nonvanishing polynomial (the determinant)
/// that a valid assignment must keep nonzero.
#[derive(Clone, Debug)]
pub struct AutomorphismFamily {
    alg: Arc<LieAlgebra>,
    vars: VarSet,
    matrix: Matrix<Poly>,
    nonvanishing: Poly,
}

impl AutomorphismFamily {
    pub fn new(alg: &Arc<LieAlgebra>, vars: VarSet, matrix: Matrix<Poly>) -> Self {
        let nonvanishing = matrix.det_poly();
        AutomorphismFamily {
            alg: alg.clone(),
            vars,
            matrix,
            nonvanishing,
        }
    }

    /// Builds the family from catalog data.
    pub fn from_catalog(entry: &CatalogEntry) -> Result<Self, EquivError> {
        Self::from_data(&entry.algebra, &entry.automorphism)
    }

    pub fn from_data(alg: &Arc<LieAlgebra>, data: &AutoFamilyData) -> Result<Self, EquivError> {
        let vars = VarSet::new(data.params.clone());
        let d = alg.dim();
        if data.matrix.len() != d || data.matrix.iter().any(|r| r.len() != d) {
            return Err(EquivError::DimensionMismatch);
        }
        let mut m = Matrix::zero_like_entry(d, d, &Poly::zero(&vars));
        for (r, row) in data.matrix.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                m.set(
                    r,
                    c,
                    e.to_poly(&vars).map_err(EquivError::BadFamily)?,
                );
            }
        }
        Ok(Self::new(alg, vars, m))
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn matrix(&self) -> &Matrix<Poly> {
        &self.matrix
    }

    pub fn nonvanishing(&self) -> &Poly {
        &self.nonvanishing
    }

    /// Exact instantiation; rejects assignments on the vanishing locus.
    pub fn instantiate(&self, assignment: &BTreeMap<String, Rat>) -> Result<Matrix<Rat>, EquivError> {
        let point: Vec<Rat> = self
            .vars
            .names()
            .iter()
            .map(|n| assignment.get(n).cloned().unwrap_or_else(Rat::zero))
            .collect();
        let det = self
            .nonvanishing
            .eval(&point)
            .map_err(EquivError::BadFamily)?;
        if det.is_zero() {
            return Err(EquivError::Vanishing);
        }
        let d = self.alg.dim();
        let mut out = Matrix::zero(d, d);
        for r in 0..d {
            for c in 0..d {
                out.set(
                    r,
                    c,
                    self.matrix
                        .at(r, c)
                        .eval(&point)
                        .map_err(EquivError::BadFamily)?,
                );
            }
        }
        Ok(out)
    }
}

/// An exact equivalence witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub assignment: BTreeMap<String, Rat>,
    pub matrix: Matrix<Rat>,
}

/// Lifts a rational matrix to polynomial entries over `vars`.
pub fn lift_matrix(m: &Matrix<Rat>, vars: &VarSet) -> Matrix<Poly> {
    m.map(|c| Poly::constant(vars, c.clone()))
}

/// A generic antisymmetric matrix with one named symbol per listed wedge
/// position `(i, j)` (1-based, `i < j`); unlisted positions are zero.
pub fn generic_bivector_matrix(
    dim: usize,
    vars: &VarSet,
    positions: &[(usize, usize, &str)],
) -> Matrix<Poly> {
    let mut m = Matrix::zero_like_entry(dim, dim, &Poly::zero(vars));
    for (i, j, name) in positions {
        let p = Poly::var(vars, name);
        m.set(i - 1, j - 1, p.clone());
        m.set(j - 1, i - 1, p.neg());
    }
    m
}

/// The symbolic orbit `A r A^t` of a bivector matrix under the family; `r`
/// may itself carry symbolic coefficients.
pub fn symbolic_orbit_r(fam: &AutomorphismFamily, r: &Matrix<Poly>) -> Matrix<Poly> {
    fam.matrix.mul(r).mul(&fam.matrix.transpose())
}

/// Entrywise equations of `A r A^t - r = 0` for the stabilizer of `r` inside
/// the family, as polynomials in the family parameters (upper triangle,
/// index-lexicographic).
pub fn stabilizer_condition(fam: &AutomorphismFamily, r: &Bivector) -> Vec<Poly> {
    let d = fam.alg.dim();
    let rp = lift_matrix(r.matrix(), &fam.vars);
    let orbit = symbolic_orbit_r(fam, &rp);
    let defect = orbit.sub(&rp);
    let mut out = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            out.push(defect.at(i, j).clone());
        }
    }
    out
}

/// Exact witness verification: `a` must be an automorphism, `a r a^t` must
/// equal `r2`, and when endomorphisms are supplied, `a n = n2 a` (which is
/// `a n a^{-1} = n2`).
pub fn verify_witness(
    alg: &Arc<LieAlgebra>,
    a: &Matrix<Rat>,
    r: &Bivector,
    r2: &Bivector,
    n_pair: Option<(&Endomorphism, &Endomorphism)>,
) -> Result<bool, EquivError> {
    if r.algebra() != alg || r2.algebra() != alg {
        return Err(EquivError::AlgebraMismatch);
    }
    if a.rows() != alg.dim() || a.cols() != alg.dim() {
        return Err(EquivError::DimensionMismatch);
    }
    if !alg.is_automorphism(a) {
        return Err(EquivError::NotAutomorphism);
    }
    let orbit = a.mul(r.matrix()).mul(&a.transpose());
    if &orbit != r2.matrix() {
        return Ok(false);
    }
    if let Some((n, n2)) = n_pair {
        if n.algebra() != alg || n2.algebra() != alg {
            return Err(EquivError::AlgebraMismatch);
        }
        if a.mul(n.matrix()) != n2.matrix().mul(a) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Search budget: grid height for enumerated rationals, number of seeded
/// random trials per free parameter, and the overall candidate budget.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    pub grid_height: i64,
    pub random_trials: u32,
    pub seed: u64,
    pub max_candidates: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            grid_height: 3,
            random_trials: 40,
            seed: 1,
            max_candidates: 10_000,
        }
    }
}

/// Heuristic witness search: sequential elimination of parameters that occur
/// linearly, exact rational-root enumeration for univariate equations, then
/// grid and seeded random trials for genuinely free parameters. Every
/// candidate is re-verified exactly; `None` never certifies inequivalence.
pub fn search_witness(
    fam: &AutomorphismFamily,
    r: &Bivector,
    r2: &Bivector,
    n_pair: Option<(&Endomorphism, &Endomorphism)>,
    budget: &SearchBudget,
) -> Option<Witness> {
    let d = fam.alg.dim();
    let rp = lift_matrix(r.matrix(), &fam.vars);
    let r2p = lift_matrix(r2.matrix(), &fam.vars);
    let defect = symbolic_orbit_r(fam, &rp).sub(&r2p);
    let mut eqs = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            let e = defect.at(i, j);
            if !e.is_zero() {
                eqs.push(e.clone());
            }
        }
    }
    if let Some((n, n2)) = n_pair {
        // a n = n2 a, entrywise.
        let np = lift_matrix(n.matrix(), &fam.vars);
        let n2p = lift_matrix(n2.matrix(), &fam.vars);
        let defect = fam.matrix.mul(&np).sub(&n2p.mul(&fam.matrix));
        for i in 0..d {
            for j in 0..d {
                let e = defect.at(i, j);
                if !e.is_zero() {
                    eqs.push(e.clone());
                }
            }
        }
    }

    let mut grid = vec![Rat::zero()];
    for h in 1..=budget.grid_height {
        for q in 1..=budget.grid_height {
            let cand = Rat::new(h, q);
            if !grid.contains(&cand) {
                grid.push(cand.clone());
                grid.push(-&cand);
            }
        }
    }
    let mut ctx = SearchCtx {
        fam,
        eqs,
        grid,
        sampler: Sampler::new(budget.seed),
        random_trials: budget.random_trials,
        remaining: budget.max_candidates,
        grid_height: budget.grid_height,
    };
    let assignment = ctx.solve(&BTreeMap::new())?;
    let matrix = fam.instantiate(&assignment).ok()?;
    match verify_witness(&fam.alg, &matrix, r, r2, n_pair) {
        Ok(true) => Some(Witness { assignment, matrix }),
        _ => None,
    }
}

struct SearchCtx<'a> {
    fam: &'a AutomorphismFamily,
    eqs: Vec<Poly>,
    grid: Vec<Rat>,
    sampler: Sampler,
    random_trials: u32,
    remaining: u64,
    grid_height: i64,
}

impl<'a> SearchCtx<'a> {
    fn bind(&self, p: &Poly, asg: &BTreeMap<String, Rat>) -> Poly {
        let consts: BTreeMap<String, Poly> = asg
            .iter()
            .map(|(k, v)| (k.clone(), Poly::constant(&self.fam.vars, v.clone())))
            .collect();
        p.substitute_polys(&consts)
    }

    fn spend(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        true
    }

    fn solve(&mut self, assignment: &BTreeMap<String, Rat>) -> Option<BTreeMap<String, Rat>> {
        let mut asg = assignment.clone();
        // Constraint propagation: drop satisfied equations, fail on constant
        // nonzero ones, pin parameters forced by degree-1 univariate
        // equations.
        let mut reduced: Vec<Poly>;
        loop {
            let mut progressed = false;
            reduced = Vec::new();
            for eq in &self.eqs {
                let red = self.bind(eq, &asg);
                if red.is_zero() {
                    continue;
                }
                if let Some(c) = red.as_constant() {
                    if !c.is_zero() {
                        return None;
                    }
                    continue;
                }
                if let Some((var_idx, coeffs)) = red.univariate_coeffs() {
                    if coeffs.len() == 2 {
                        let name = self.fam.vars.names()[var_idx].clone();
                        let val = -&(&coeffs[0] / &coeffs[1]);
                        asg.insert(name, val);
                        progressed = true;
                        continue;
                    }
                }
                reduced.push(red);
            }
            if !progressed {
                break;
            }
        }

        if reduced.is_empty() {
            return self.finish(asg);
        }

        // Prefer a parameter pinned by a univariate equation: its exact
        // rational roots are the only candidates.
        for red in &reduced {
            if let Some((var_idx, coeffs)) = red.univariate_coeffs() {
                let name = self.fam.vars.names()[var_idx].clone();
                let roots = rational_roots(&coeffs);
                for root in roots {
                    if !self.spend() {
                        return None;
                    }
                    let mut next = asg.clone();
                    next.insert(name.clone(), root);
                    if let Some(found) = self.solve(&next) {
                        return Some(found);
                    }
                }
                return None;
            }
        }

        // Otherwise branch on the first unassigned parameter that occurs in
        // an unresolved equation: grid values first, then random rationals.
        let var_idx = reduced
            .iter()
            .flat_map(|p| p.used_vars())
            .min()
            .expect("non-constant equation uses a variable");
        let name = self.fam.vars.names()[var_idx].clone();
        let mut candidates = self.grid.clone();
        for _ in 0..self.random_trials {
            candidates.push(self.sampler.rat(self.grid_height * 4));
        }
        for cand in candidates {
            if !self.spend() {
                return None;
            }
            let mut next = asg.clone();
            next.insert(name.clone(), cand);
            if let Some(found) = self.solve(&next) {
                return Some(found);
            }
        }
        None
    }

    /// All equations are satisfied; pick values for any parameters that are
    /// still free so that the nonvanishing polynomial is nonzero.
    fn finish(&mut self, mut asg: BTreeMap<String, Rat>) -> Option<BTreeMap<String, Rat>> {
        let names: Vec<String> = self.fam.vars.names().to_vec();
        let free: Vec<String> = names
            .iter()
            .filter(|n| !asg.contains_key(*n))
            .cloned()
            .collect();
        // Leave free parameters at zero unless the determinant forces
        // otherwise; try a small deterministic ladder.
        let eval_det = |asg: &BTreeMap<String, Rat>| -> Rat {
            let point: Vec<Rat> = names
                .iter()
                .map(|n| asg.get(n).cloned().unwrap_or_else(Rat::zero))
                .collect();
            self.fam
                .nonvanishing
                .eval(&point)
                .expect("determinant evaluation cannot fail")
        };
        for n in &free {
            asg.insert(n.clone(), Rat::zero());
        }
        if !eval_det(&asg).is_zero() {
            return Some(asg);
        }
        // The zero default sits on the vanishing locus; walk the free
        // parameters through grid values.
        let grid = self.grid.clone();
        fn assign_rec(
            free: &[String],
            grid: &[Rat],
            asg: &mut BTreeMap<String, Rat>,
            eval_det: &dyn Fn(&BTreeMap<String, Rat>) -> Rat,
        ) -> bool {
            if free.is_empty() {
                return !eval_det(asg).is_zero();
            }
            for c in grid {
                asg.insert(free[0].clone(), c.clone());
                if assign_rec(&free[1..], grid, asg, eval_det) {
                    return true;
                }
            }
            false
        }
        if assign_rec(&free, &grid, &mut asg, &eval_det) {
            Some(asg)
        } else {
            None
        }
    }
}

/// Exact rational roots of a univariate polynomial given by ascending
/// coefficients. Degree 1 and 2 are solved directly (with exact square
/// roots); higher degrees use divisor candidates over the integerised
/// polynomial, giving up (empty) when the constants grow beyond enumeration.
pub fn rational_roots(coeffs: &[Rat]) -> Vec<Rat> {
    let mut cs: Vec<Rat> = coeffs.to_vec();
    while cs.last().map_or(false, |c| c.is_zero()) {
        cs.pop();
    }
    if cs.len() <= 1 {
        return Vec::new();
    }
    let mut roots: Vec<Rat> = Vec::new();
    // Factor out x^k.
    let mut low = 0;
    while cs[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rat::zero());
        cs.drain(..low);
    }
    if cs.len() == 2 {
        let root = -&(&cs[0] / &cs[1]);
        push_unique(&mut roots, root);
        return roots;
    }
    if cs.len() == 3 {
        // a x^2 + b x + c
        let (c, b, a) = (&cs[0], &cs[1], &cs[2]);
        let disc = &(b * b) - &(&(&Rat::from_int(4) * a) * c);
        if let Some(s) = exact_sqrt(&disc) {
            let two_a = &Rat::from_int(2) * a;
            push_unique(&mut roots, &(&(-b) + &s) / &two_a);
            push_unique(&mut roots, &(&(-b) - &s) / &two_a);
        }
        return roots;
    }
    // Integerise and enumerate candidates p/q with p | a0 and q | an.
    let mut denom_lcm = BigInt::from(1);
    for c in &cs {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = cs
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    let bound = BigInt::from(1_000_000);
    if a0 > bound || an > bound {
        return roots;
    }
    let eval = |x: &Rat| -> bool {
        let mut acc = Rat::zero();
        for c in cs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc.is_zero()
    };
    let p_divs = small_divisors(a0.to_i64().unwrap_or(0));
    let q_divs = small_divisors(an.to_i64().unwrap_or(0));
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = Rat::new(sign * p, *q);
                if eval(&cand) {
                    push_unique(&mut roots, cand);
                }
            }
        }
    }
    roots
}

fn push_unique(roots: &mut Vec<Rat>, r: Rat) {
    if !roots.contains(&r) {
        roots.push(r);
    }
}

fn small_divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Exact square root of a nonnegative rational, if it is rational.
pub fn exact_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(Rat::from_bigints(ns, ds))
    } else {
        None
    }
}
