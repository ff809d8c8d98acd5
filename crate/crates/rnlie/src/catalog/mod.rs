//! Embedded catalog of four-dimensional symplectic real Lie algebras.
//!
//! The catalog carries, per algebra: the structure constants, the equivalence
//! classes of r-matrices with their parameter constraints and invertibility
//! flags, the r-n family attached to the invertible representative (with the
//! dual structure constants of the Sklyanin bracket), the equivalence classes
//! of Nijenhuis structures, and the automorphism-group family.
//!
//! The data is transcribed once and thereafter guarded by [`verify_catalog`]:
//! every sampled instance of every class is pushed through the exact checks,
//! so a transcription slip shows up as a reported failure, never silently.

mod data;

use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::pn::{
    check_bi_r_matrix, check_cybe_matrix, check_rn, sklyanin_constants, Bivector, Endomorphism,
};
use crate::rat::Rat;
use crate::sample::Sampler;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

pub use data::{build_entry, entry_ids, load_catalog, sample_entry_variants};

/// Expression in named parameters with exact rational constants; used for
/// parametric wedge coefficients, endomorphism entries and automorphism
/// matrices.
#[derive(Clone, Debug, PartialEq)]
pub enum PExpr {
    Num(Rat),
    Param(String),
    Neg(Box<PExpr>),
    Add(Box<PExpr>, Box<PExpr>),
    Sub(Box<PExpr>, Box<PExpr>),
    Mul(Box<PExpr>, Box<PExpr>),
    Div(Box<PExpr>, Box<PExpr>),
    Pow(Box<PExpr>, u32),
}

/// Parameter expression helpers; the catalog data is written with these.
pub fn v(name: &str) -> PExpr {
    PExpr::Param(name.to_string())
}

pub fn n(k: i64) -> PExpr {
    PExpr::Num(Rat::from_int(k))
}

pub fn q(p: i64, den: i64) -> PExpr {
    PExpr::Num(Rat::new(p, den))
}

pub fn rn(r: &Rat) -> PExpr {
    PExpr::Num(r.clone())
}

impl PExpr {
    pub fn pow(self, k: u32) -> PExpr {
        PExpr::Pow(Box::new(self), k)
    }

    /// Exact evaluation; errors only on division by zero, which a
    /// constraint-satisfying assignment never triggers.
    pub fn eval(&self, assignment: &BTreeMap<String, Rat>) -> Result<Rat, String> {
        Ok(match self {
            PExpr::Num(c) => c.clone(),
            PExpr::Param(p) => assignment
                .get(p)
                .ok_or_else(|| format!("missing parameter `{p}`"))?
                .clone(),
            PExpr::Neg(a) => -&a.eval(assignment)?,
            PExpr::Add(a, b) => &a.eval(assignment)? + &b.eval(assignment)?,
            PExpr::Sub(a, b) => &a.eval(assignment)? - &b.eval(assignment)?,
            PExpr::Mul(a, b) => &a.eval(assignment)? * &b.eval(assignment)?,
            PExpr::Div(a, b) => {
                let den = b.eval(assignment)?;
                if den.is_zero() {
                    return Err("division by zero in parameter expression".into());
                }
                &a.eval(assignment)? / &den
            }
            PExpr::Pow(a, k) => a.eval(assignment)?.pow(*k),
        })
    }

    /// Converts to a polynomial over `vars`; fails if the expression divides
    /// by anything other than a nonzero constant.
    pub fn to_poly(&self, vars: &crate::poly::VarSet) -> Result<crate::poly::Poly, String> {
        use crate::poly::Poly;
        Ok(match self {
            PExpr::Num(c) => Poly::constant(vars, c.clone()),
            PExpr::Param(p) => {
                if vars.index_of(p).is_none() {
                    return Err(format!("parameter `{p}` not in variable list"));
                }
                Poly::var(vars, p)
            }
            PExpr::Neg(a) => a.to_poly(vars)?.neg(),
            PExpr::Add(a, b) => a.to_poly(vars)?.add(&b.to_poly(vars)?),
            PExpr::Sub(a, b) => a.to_poly(vars)?.sub(&b.to_poly(vars)?),
            PExpr::Mul(a, b) => a.to_poly(vars)?.mul(&b.to_poly(vars)?),
            PExpr::Div(a, b) => {
                let den = b.to_poly(vars)?;
                let c = den
                    .as_constant()
                    .ok_or("division by a non-constant expression")?;
                if c.is_zero() {
                    return Err("division by zero".into());
                }
                a.to_poly(vars)?.scale(&c.recip())
            }
            PExpr::Pow(a, k) => a.to_poly(vars)?.pow(*k),
        })
    }

    pub fn params(&self, out: &mut Vec<String>) {
        match self {
            PExpr::Num(_) => {}
            PExpr::Param(p) => {
                if !out.contains(p) {
                    out.push(p.clone());
                }
            }
            PExpr::Neg(a) | PExpr::Pow(a, _) => a.params(out),
            PExpr::Add(a, b) | PExpr::Sub(a, b) | PExpr::Mul(a, b) | PExpr::Div(a, b) => {
                a.params(out);
                b.params(out);
            }
        }
    }
}

impl Add for PExpr {
    type Output = PExpr;
    fn add(self, rhs: PExpr) -> PExpr {
        PExpr::Add(Box::new(self), Box::new(rhs))
    }
}

impl Sub for PExpr {
    type Output = PExpr;
    fn sub(self, rhs: PExpr) -> PExpr {
        PExpr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl Mul for PExpr {
    type Output = PExpr;
    fn mul(self, rhs: PExpr) -> PExpr {
        PExpr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl Div for PExpr {
    type Output = PExpr;
    fn div(self, rhs: PExpr) -> PExpr {
        PExpr::Div(Box::new(self), Box::new(rhs))
    }
}

impl Neg for PExpr {
    type Output = PExpr;
    fn neg(self) -> PExpr {
        PExpr::Neg(Box::new(self))
    }
}

impl fmt::Display for PExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PExpr::Num(c) => write!(f, "{c}"),
            PExpr::Param(p) => write!(f, "{p}"),
            PExpr::Neg(a) => write!(f, "-({a})"),
            PExpr::Add(a, b) => write!(f, "({a} + {b})"),
            PExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            PExpr::Mul(a, b) => write!(f, "({a}*{b})"),
            PExpr::Div(a, b) => write!(f, "({a}/{b})"),
            PExpr::Pow(a, k) => write!(f, "({a})^{k}"),
        }
    }
}

/// Range constraint on a single sampled parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Range {
    Free,
    NonZero,
    Positive,
    Negative,
}

impl Range {
    pub fn satisfied(&self, x: &Rat) -> bool {
        match self {
            Range::Free => true,
            Range::NonZero => !x.is_zero(),
            Range::Positive => x.is_positive(),
            Range::Negative => x.is_negative(),
        }
    }

    fn sample(&self, s: &mut Sampler, height: i64) -> Rat {
        match self {
            Range::Free => s.rat(height),
            Range::NonZero => s.nonzero_rat(height),
            Range::Positive => s.positive_rat(height),
            Range::Negative => s.negative_rat(height),
        }
    }
}

/// Named sampled parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: String,
    pub range: Range,
}

pub fn ps(name: &str, range: Range) -> ParamSpec {
    ParamSpec {
        name: name.to_string(),
        range,
    }
}

/// Constraints that couple several parameters of one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coupling {
    /// At least one of the named parameters must be nonzero.
    AtLeastOneNonZero(Vec<String>),
    /// At least one of the named parameters must be zero.
    AtLeastOneZero(Vec<String>),
    /// The two named parameters must differ.
    NotEqual(String, String),
}

impl Coupling {
    pub fn satisfied(&self, a: &BTreeMap<String, Rat>) -> bool {
        match self {
            Coupling::AtLeastOneNonZero(set) => set.iter().any(|p| !a[p].is_zero()),
            Coupling::AtLeastOneZero(set) => set.iter().any(|p| a[p].is_zero()),
            Coupling::NotEqual(x, y) => a[x] != a[y],
        }
    }
}

/// One equivalence class of r-matrices (a Table 1 row).
#[derive(Clone, Debug)]
pub struct RClass {
    pub id: String,
    pub invertible: bool,
    pub params: Vec<ParamSpec>,
    pub couplings: Vec<Coupling>,
    /// Wedge coefficients `(i, j, expr)` with `i < j`.
    pub wedge: Vec<(usize, usize, PExpr)>,
    pub note: Option<String>,
}

/// The r-n family attached to the invertible representative (a Table 2 row).
#[derive(Clone, Debug)]
pub struct RnFamily {
    /// Extra parameters of the representative r itself (usually none).
    pub r_params: Vec<ParamSpec>,
    pub r_wedge: Vec<(usize, usize, PExpr)>,
    /// Parameters of the compatible Nijenhuis family (all free).
    pub n_params: Vec<ParamSpec>,
    /// Column-action matrix entries of the family.
    pub n_matrix: Vec<Vec<PExpr>>,
    /// Dual structure constants `f~^{ij}_k` with `i < j`.
    pub dual: Vec<(usize, usize, usize, PExpr)>,
}

/// One equivalence class of Nijenhuis structures (a Table 3 row).
#[derive(Clone, Debug)]
pub struct NClass {
    pub id: String,
    pub params: Vec<ParamSpec>,
    pub couplings: Vec<Coupling>,
    pub matrix: Vec<Vec<PExpr>>,
    pub note: Option<String>,
}

/// Automorphism-group family of the algebra (a Table 4 cell); instantiation
/// is valid wherever the determinant is nonzero.
#[derive(Clone, Debug)]
pub struct AutoFamilyData {
    pub params: Vec<String>,
    pub matrix: Vec<Vec<PExpr>>,
}

/// Complete catalog entry for one algebra.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: Arc<LieAlgebra>,
    /// Lie-algebra family parameters fixed for this instance (may be empty).
    pub algebra_params: BTreeMap<String, Rat>,
    /// Bialgebra label of the dual, stored as an opaque string.
    pub dual_label: String,
    pub r_classes: Vec<RClass>,
    pub rn_family: RnFamily,
    pub n_classes: Vec<NClass>,
    pub automorphism: AutoFamilyData,
}

fn fnv1a(seed: u64, text: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ seed.wrapping_mul(0x100_0000_01b3);
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

/// Samples `count` assignments for the given parameters, deterministically in
/// `(seed, label)`, satisfying every range and coupling. Numerators stay
/// small and denominators are bounded by 10.
pub fn sample_assignments(
    params: &[ParamSpec],
    couplings: &[Coupling],
    seed: u64,
    label: &str,
    count: usize,
) -> Vec<BTreeMap<String, Rat>> {
    let mut sampler = Sampler::new(fnv1a(seed, label));
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        // Rejection sampling over the couplings; each individual range is
        // sampled constructively so this terminates fast.
        'attempt: loop {
            let mut a = BTreeMap::new();
            for p in params {
                a.insert(p.name.clone(), p.range.sample(&mut sampler, 4));
            }
            for c in couplings {
                if !c.satisfied(&a) {
                    match c {
                        Coupling::AtLeastOneNonZero(set) => {
                            let pick = &set[sampler.index(set.len())];
                            a.insert(pick.clone(), sampler.nonzero_rat(4));
                        }
                        Coupling::AtLeastOneZero(set) => {
                            let pick = &set[sampler.index(set.len())];
                            a.insert(pick.clone(), Rat::zero());
                        }
                        Coupling::NotEqual(_, _) => continue 'attempt,
                    }
                }
            }
            if couplings.iter().all(|c| c.satisfied(&a))
                && params.iter().all(|p| p.range.satisfied(&a[&p.name]))
            {
                out.push(a);
                break;
            }
        }
    }
    out
}

/// Renders an assignment deterministically for reports.
pub fn format_assignment(a: &BTreeMap<String, Rat>) -> String {
    a.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Instantiates a wedge-coefficient list at an assignment.
pub fn instantiate_wedge(
    alg: &Arc<LieAlgebra>,
    wedge: &[(usize, usize, PExpr)],
    assignment: &BTreeMap<String, Rat>,
) -> Result<Bivector, String> {
    let mut terms = Vec::new();
    for (i, j, e) in wedge {
        terms.push((*i, *j, e.eval(assignment)?));
    }
    Bivector::from_wedge(alg, &terms).map_err(|e| e.to_string())
}

/// Instantiates an endomorphism-matrix entry grid at an assignment.
pub fn instantiate_endo(
    alg: &Arc<LieAlgebra>,
    grid: &[Vec<PExpr>],
    assignment: &BTreeMap<String, Rat>,
) -> Result<Endomorphism, String> {
    let d = alg.dim();
    if grid.len() != d || grid.iter().any(|row| row.len() != d) {
        return Err("endomorphism grid has wrong shape".into());
    }
    let mut m = Matrix::zero(d, d);
    for (r, row) in grid.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            m.set(r, c, e.eval(assignment)?);
        }
    }
    Endomorphism::new(alg, m).map_err(|e| e.to_string())
}

/// Instantiates an automorphism-family matrix at an assignment.
pub fn instantiate_matrix(
    grid: &[Vec<PExpr>],
    assignment: &BTreeMap<String, Rat>,
) -> Result<Matrix<Rat>, String> {
    let rows = grid.len();
    let cols = grid[0].len();
    let mut m = Matrix::zero(rows, cols);
    for (r, row) in grid.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            m.set(r, c, e.eval(assignment)?);
        }
    }
    Ok(m)
}

impl CatalogEntry {
    /// The Table 2 representative r at the family's default parameters
    /// (extra r-parameters, when present, default to 1).
    pub fn representative_r(&self) -> Bivector {
        let mut a = BTreeMap::new();
        for p in &self.rn_family.r_params {
            a.insert(p.name.clone(), Rat::one());
        }
        instantiate_wedge(&self.algebra, &self.rn_family.r_wedge, &a)
            .expect("representative instantiation cannot fail")
    }
}

/// One verification failure with full provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub entry: String,
    pub section: String,
    pub class: String,
    pub assignment: String,
    pub check: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FAIL entry={} section={} class={} assignment=[{}] check={}",
            self.entry, self.section, self.class, self.assignment, self.check
        )
    }
}

/// Structured outcome of a catalog verification run.
#[derive(Clone, Debug, Default)]
pub struct CatalogReport {
    pub entries: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl CatalogReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Deterministic human-readable rendering, one line per failure plus a
    /// summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for f in &self.failures {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "{} entries, {} checks, {} failures\n",
            self.entries,
            self.checks,
            self.failures.len()
        ));
        out
    }
}

/// Replays the catalog: Jacobi for every algebra, CYBE for every r-class
/// sample (with invertibility where flagged), the four r-n conditions for
/// every r-n family sample, exact agreement of the stored dual constants
/// with the Sklyanin bracket, the bi-r-matrix property of the invertible
/// representative, the r-n conditions for every Nijenhuis-class sample
/// against the entry's representative r, and the automorphism property for
/// every Table 4 sample.
pub fn verify_catalog(entries: &[CatalogEntry], seed: u64, samples_per_class: usize) -> CatalogReport {
    assert!(samples_per_class >= 1);
    let mut report = CatalogReport {
        entries: entries.len(),
        ..Default::default()
    };
    for entry in entries {
        verify_entry(entry, seed, samples_per_class, &mut report);
    }
    report
}

fn verify_entry(entry: &CatalogEntry, seed: u64, samples: usize, report: &mut CatalogReport) {
    let alg = &entry.algebra;
    let mut fail = |section: &str, class: &str, assignment: String, check: String| {
        report.failures.push(Failure {
            entry: entry.id.clone(),
            section: section.to_string(),
            class: class.to_string(),
            assignment,
            check,
        });
    };

    // Structure constants satisfy Jacobi.
    report.checks += 1;
    let defects = alg.check_jacobi();
    if !defects.is_empty() {
        let d = &defects[0];
        fail(
            "algebra",
            "-",
            String::new(),
            format!(
                "jacobi defect at ({},{},{},{}) = {}",
                d.i, d.j, d.k, d.l, d.defect
            ),
        );
    }

    // Every r-class sample solves the matrix CYBE; flagged classes sample to
    // invertible matrices.
    for class in &entry.r_classes {
        let label = format!("{}/r/{}", entry.id, class.id);
        let assignments =
            sample_assignments(&class.params, &class.couplings, seed, &label, samples);
        for a in assignments {
            report.checks += 1;
            let r = match instantiate_wedge(alg, &class.wedge, &a) {
                Ok(r) => r,
                Err(e) => {
                    fail("r-class", &class.id, format_assignment(&a), e);
                    continue;
                }
            };
            if class.invertible && !r.is_invertible() {
                // Classes marked invertible consist of the invertible members
                // of the printed form; resample once constructively by
                // nudging, otherwise record it.
                fail(
                    "r-class",
                    &class.id,
                    format_assignment(&a),
                    "flagged invertible but sample is singular".into(),
                );
                continue;
            }
            if !check_cybe_matrix(&r) {
                fail(
                    "r-class",
                    &class.id,
                    format_assignment(&a),
                    "matrix CYBE fails".into(),
                );
            }
        }
    }

    // r-n family: all four conditions per sample, dual constants, bi-r.
    {
        let fam = &entry.rn_family;
        let mut params = fam.r_params.clone();
        params.extend(fam.n_params.iter().cloned());
        let label = format!("{}/rn", entry.id);
        let assignments = sample_assignments(&params, &[], seed, &label, samples);
        for a in assignments {
            report.checks += 1;
            let r = match instantiate_wedge(alg, &fam.r_wedge, &a) {
                Ok(r) => r,
                Err(e) => {
                    fail("rn-family", "-", format_assignment(&a), e);
                    continue;
                }
            };
            let n = match instantiate_endo(alg, &fam.n_matrix, &a) {
                Ok(n) => n,
                Err(e) => {
                    fail("rn-family", "-", format_assignment(&a), e);
                    continue;
                }
            };
            if !r.is_invertible() {
                fail(
                    "rn-family",
                    "-",
                    format_assignment(&a),
                    "representative r is singular".into(),
                );
                continue;
            }
            let rep = check_rn(&r, &n);
            if !rep.valid() {
                fail(
                    "rn-family",
                    "-",
                    format_assignment(&a),
                    format!("r-n conditions fail: {}", rep.failing().join(", ")),
                );
            }
            // Stored dual constants match the Sklyanin bracket exactly.
            let dual = sklyanin_constants(alg, r.matrix());
            let mut stored = BTreeMap::new();
            for (i, j, k, e) in &fam.dual {
                match e.eval(&a) {
                    Ok(valv) => {
                        stored.insert((*i, *j, *k), valv);
                    }
                    Err(e) => fail("rn-family", "dual", format_assignment(&a), e),
                }
            }
            let d = alg.dim();
            let mut dual_ok = true;
            for i in 1..=d {
                for j in (i + 1)..=d {
                    for k in 1..=d {
                        let expect = stored.get(&(i, j, k)).cloned().unwrap_or_else(Rat::zero);
                        if dual.f(i, j, k) != &expect {
                            dual_ok = false;
                            fail(
                                "rn-family",
                                "dual",
                                format_assignment(&a),
                                format!(
                                    "f~^{{{i}{j}}}_{k}: stored {expect}, computed {}",
                                    dual.f(i, j, k)
                                ),
                            );
                        }
                    }
                }
            }
            let _ = dual_ok;
            // Bi-r-matrix property of the invertible representative.
            match check_bi_r_matrix(&r) {
                Ok(true) => {}
                Ok(false) => fail(
                    "rn-family",
                    "bi-r",
                    format_assignment(&a),
                    "dual Sklyanin bracket does not reproduce the original brackets".into(),
                ),
                Err(e) => fail("rn-family", "bi-r", format_assignment(&a), e.to_string()),
            }
        }
    }

    // Nijenhuis classes: sampled instances pair with the representative r
    // into full r-n structures.
    let rep_r = entry.representative_r();
    for class in &entry.n_classes {
        let label = format!("{}/n/{}", entry.id, class.id);
        let assignments =
            sample_assignments(&class.params, &class.couplings, seed, &label, samples);
        for a in assignments {
            report.checks += 1;
            let nop = match instantiate_endo(alg, &class.matrix, &a) {
                Ok(n) => n,
                Err(e) => {
                    fail("n-class", &class.id, format_assignment(&a), e);
                    continue;
                }
            };
            let rep = check_rn(&rep_r, &nop);
            if !rep.valid() {
                fail(
                    "n-class",
                    &class.id,
                    format_assignment(&a),
                    format!("r-n conditions fail: {}", rep.failing().join(", ")),
                );
            }
        }
    }

    // Automorphism family samples.
    {
        let params: Vec<ParamSpec> = entry
            .automorphism
            .params
            .iter()
            .map(|p| ps(p, Range::Free))
            .collect();
        let label = format!("{}/aut", entry.id);
        // Valid family members are those with nonvanishing determinant, so
        // draw extra assignments and keep the first `samples` invertible ones.
        let assignments = sample_assignments(&params, &[], seed, &label, samples * 20);
        let mut kept = 0;
        for a in assignments {
            if kept == samples {
                break;
            }
            let m = match instantiate_matrix(&entry.automorphism.matrix, &a) {
                Ok(m) => m,
                Err(e) => {
                    report.checks += 1;
                    fail("automorphism", "-", format_assignment(&a), e);
                    kept += 1;
                    continue;
                }
            };
            if m.det().is_zero() {
                continue;
            }
            kept += 1;
            report.checks += 1;
            if !alg.is_automorphism(&m) {
                fail(
                    "automorphism",
                    "-",
                    format_assignment(&a),
                    "matrix is not a Lie algebra automorphism".into(),
                );
            }
        }
        if kept < samples {
            report.checks += 1;
            fail(
                "automorphism",
                "-",
                String::new(),
                "could not draw enough invertible family samples".into(),
            );
        }
    }
}
