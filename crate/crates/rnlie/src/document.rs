//! The structured-text document format shared by CLI input, catalog export
//! and machine-readable reports.
//!
//! A document is a JSON tree with a fixed set of optional sections. All
//! numbers are exact rationals serialized as strings (`"p/q"` or integer
//! strings, never floats); polynomial entries use the expression grammar of
//! [`crate::parse`]. Parsing the printed form of a document reproduces it
//! exactly.

use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::parse::parse_polynomial;
use crate::pn::{Bivector, Endomorphism};
use crate::poly::{Poly, VarSet};
use crate::rat::Rat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<RSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<NSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<AutomorphismSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phase_space: Option<PhaseSpaceSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub realization: Option<RealizationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationSection>,
}

/// `{"dim": d, "brackets": [[i, j, k, "c"], ...]}` with `f^k_{ij} = c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub dim: usize,
    pub brackets: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// `{"wedge": [[i, j, "coefficient"], ...]}`; coefficients are constant
/// expressions in the kernel grammar.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RSection {
    pub wedge: Vec<(usize, usize, String)>,
}

/// `{"matrix": [["entry", ...], ...]}`, column-action convention.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NSection {
    pub matrix: Vec<Vec<String>>,
}

/// Either a raw matrix or a catalog family id plus a parameter assignment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<BTreeMap<String, String>>,
}

/// `{"dim": 2n, "pi": [[...], ...]}`; `pi` may be omitted for the canonical
/// four-dimensional instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhaseSpaceSection {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<Vec<String>>>,
}

/// `{"s": ["expr", ...]}` over the phase-space variables `x1..x2n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizationSection {
    pub s: Vec<String>,
}

/// `{"t": [[[...]]]}`, one square matrix per generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationSection {
    pub t: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DocError(pub String);

impl std::fmt::Display for DocError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for DocError {}

fn err<T>(msg: impl Into<String>) -> Result<T, DocError> {
    Err(DocError(msg.into()))
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, DocError> {
        serde_json::from_str(text).map_err(|e| DocError(format!("document parse error: {e}")))
    }

    /// Deterministic pretty rendering; `Document::parse` of the output is the
    /// identity.
    pub fn print(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }
}

/// Parses an exact rational given either as `p/q` digits or as a constant
/// expression in the kernel grammar.
pub fn parse_rat(src: &str) -> Result<Rat, DocError> {
    if let Ok(r) = src.parse::<Rat>() {
        return Ok(r);
    }
    let empty = VarSet::new(Vec::<String>::new());
    let p = parse_polynomial(src, &empty)
        .map_err(|e| DocError(format!("invalid rational `{src}`: {e}")))?;
    p.as_constant()
        .ok_or_else(|| DocError(format!("`{src}` is not a constant")))
}

pub fn algebra_from(section: &AlgebraSection) -> Result<Arc<LieAlgebra>, DocError> {
    if section.dim == 0 {
        return err("algebra dimension must be positive");
    }
    let mut brackets = Vec::new();
    for (i, j, k, c) in &section.brackets {
        brackets.push((*i, *j, *k, parse_rat(c)?));
    }
    let alg = LieAlgebra::new(section.dim, &brackets, section.name.as_deref())
        .map_err(|e| DocError(e.to_string()))?;
    Ok(Arc::new(alg))
}

pub fn algebra_section(alg: &LieAlgebra) -> AlgebraSection {
    let d = alg.dim();
    let mut brackets = Vec::new();
    for i in 1..=d {
        for j in (i + 1)..=d {
            for k in 1..=d {
                let c = alg.f(i, j, k);
                if !c.is_zero() {
                    brackets.push((i, j, k, c.to_string()));
                }
            }
        }
    }
    AlgebraSection {
        dim: d,
        brackets,
        name: alg.name().map(|s| s.to_string()),
    }
}

pub fn bivector_from(
    alg: &Arc<LieAlgebra>,
    section: &RSection,
) -> Result<Bivector, DocError> {
    let mut terms = Vec::new();
    for (i, j, c) in &section.wedge {
        terms.push((*i, *j, parse_rat(c)?));
    }
    Bivector::from_wedge(alg, &terms).map_err(|e| DocError(e.to_string()))
}

pub fn r_section(r: &Bivector) -> RSection {
    RSection {
        wedge: r
            .wedge_terms()
            .into_iter()
            .map(|(i, j, c)| (i, j, c.to_string()))
            .collect(),
    }
}

pub fn endomorphism_from(
    alg: &Arc<LieAlgebra>,
    section: &NSection,
) -> Result<Endomorphism, DocError> {
    let d = alg.dim();
    if section.matrix.len() != d || section.matrix.iter().any(|r| r.len() != d) {
        return err(format!("n matrix must be {d}x{d}"));
    }
    let mut m = Matrix::zero(d, d);
    for (r, row) in section.matrix.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            m.set(r, c, parse_rat(e)?);
        }
    }
    Endomorphism::new(alg, m).map_err(|e| DocError(e.to_string()))
}

pub fn n_section(n: &Endomorphism) -> NSection {
    let d = n.algebra().dim();
    NSection {
        matrix: (0..d)
            .map(|r| (0..d).map(|c| n.matrix().at(r, c).to_string()).collect())
            .collect(),
    }
}

pub fn matrix_from(rows: &[Vec<String>]) -> Result<Matrix<Rat>, DocError> {
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return err("matrix rows must be nonempty and rectangular");
    }
    let mut m = Matrix::zero(rows.len(), rows[0].len());
    for (r, row) in rows.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            m.set(r, c, parse_rat(e)?);
        }
    }
    Ok(m)
}

pub fn phase_space_from(
    section: &PhaseSpaceSection,
) -> Result<crate::integrable::PhaseSpace, DocError> {
    use crate::integrable::PhaseSpace;
    match &section.pi {
        None => {
            if section.dim == 4 {
                Ok(PhaseSpace::canonical4())
            } else {
                err("pi may only be omitted for the canonical dimension-4 space")
            }
        }
        Some(rows) => {
            let pi = matrix_from(rows)?;
            let vars = VarSet::new(
                (1..=section.dim)
                    .map(|i| format!("x{i}"))
                    .collect::<Vec<_>>(),
            );
            PhaseSpace::new(vars, pi).map_err(|e| DocError(e.to_string()))
        }
    }
}

pub fn realization_polys(
    vars: &VarSet,
    section: &RealizationSection,
) -> Result<Vec<Poly>, DocError> {
    section
        .s
        .iter()
        .map(|src| {
            parse_polynomial(src, vars).map_err(|e| DocError(format!("in `{src}`: {e}")))
        })
        .collect()
}

pub fn representation_matrices(
    section: &RepresentationSection,
) -> Result<Vec<Matrix<Rat>>, DocError> {
    section.t.iter().map(|m| matrix_from(m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_of_a_full_document() {
        let text = r#"{
            "algebra": {"dim": 4, "brackets": [[2, 4, 1, "1"], [3, 4, 2, "1"]], "name": "A_{4,1}"},
            "r": {"wedge": [[1, 4, "1"], [2, 3, "-1"]]},
            "n": {"matrix": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]},
            "phase_space": {"dim": 4},
            "realization": {"s": ["-x3", "-x2*x3", "-1/2*x2^2*x3", "x4"]},
            "representation": {"t": [[["0", "1"], ["0", "0"]], [["0", "0"], ["0", "0"]], [["1", "0"], ["0", "1"]], [["0", "0"], ["1", "0"]]]}
        }"#;
        let doc = Document::parse(text).unwrap();
        let printed = doc.print();
        let reparsed = Document::parse(&printed).unwrap();
        assert_eq!(doc, reparsed);
        assert_eq!(printed, reparsed.print());
    }

    #[test]
    fn numbers_are_exact_strings() {
        let doc = Document::parse(r#"{"r": {"wedge": [[1, 2, "2/6"]]}}"#).unwrap();
        let alg = Arc::new(crate::lie::LieAlgebra::abelian(4));
        let r = bivector_from(&alg, doc.r.as_ref().unwrap()).unwrap();
        assert_eq!(r.matrix().at(0, 1), &Rat::new(1, 3));
        // Floats are rejected.
        assert!(parse_rat("0.5").is_err());
        // Constant expressions are accepted.
        assert_eq!(parse_rat("-(1/2)").unwrap(), Rat::new(-1, 2));
    }

    #[test]
    fn unknown_sections_are_rejected() {
        assert!(Document::parse(r#"{"algebre": {}}"#).is_err());
    }

    #[test]
    fn algebra_section_roundtrips_through_the_type() {
        let alg = Arc::new(
            crate::lie::LieAlgebra::new(
                4,
                &[(2, 4, 1, Rat::one()), (3, 4, 2, Rat::one())],
                Some("A_{4,1}"),
            )
            .unwrap(),
        );
        let sec = algebra_section(&alg);
        let back = algebra_from(&sec).unwrap();
        assert_eq!(&*back, &*alg);
    }
}
