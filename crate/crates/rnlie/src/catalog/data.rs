//! The embedded table data: 18 four-dimensional symplectic real Lie algebras
//! with their r-matrix classes, r-n families, Nijenhuis classes and
//! automorphism families.
//!
//! Transcription notes (verified by `verify_catalog` and the unit tests):
//!
//! * `A_{4,7}` carries the nonzero commutators `[X1,X4] = 2X1`,
//!   `[X2,X3] = X1`, `[X2,X4] = X2`, `[X3,X4] = X2 + X3`; the last bracket
//!   contributes both `f^2_{34}` and `f^3_{34}`. Without `f^3_{34} = 1` the
//!   Jacobi identity fails and the stored dual constants cannot be
//!   reproduced.
//! * The dual constants of `A2+A2` are `f~^{12}_1 = f~^{34}_3 = 1` (the two
//!   factors behave identically); of `A_{4,12}`, the constant paired with
//!   `f~^{31}` sits at lower index 4.
//! * Lie-algebra family parameters (`a`, `b`) are fixed per entry instance;
//!   `load_catalog` uses the default witnesses below and
//!   `sample_entry_variants` draws further values from the stated ranges.

use super::*;
use crate::rat::Rat;

const F: Range = Range::Free;
const NZ: Range = Range::NonZero;
const POS: Range = Range::Positive;
const NEG: Range = Range::Negative;

fn alg(brackets: &[(usize, usize, usize, Rat)], name: &str) -> Arc<LieAlgebra> {
    Arc::new(LieAlgebra::new(4, brackets, Some(name)).expect("catalog brackets are well-formed"))
}

fn one() -> Rat {
    Rat::one()
}

fn int(k: i64) -> Rat {
    Rat::from_int(k)
}

fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p, q)
}

/// Builds a 4x4 entry grid from the four columns `n(X_1) .. n(X_4)`, each a
/// coefficient vector over `X_1 .. X_4`; this mirrors how the tables print
/// the Nijenhuis structures.
fn cols4(c1: [PExpr; 4], c2: [PExpr; 4], c3: [PExpr; 4], c4: [PExpr; 4]) -> Vec<Vec<PExpr>> {
    let cols = [c1, c2, c3, c4];
    (0..4)
        .map(|row| (0..4).map(|col| cols[col][row].clone()).collect())
        .collect()
}

fn z() -> PExpr {
    n(0)
}

fn rc(
    id: &str,
    invertible: bool,
    params: Vec<ParamSpec>,
    couplings: Vec<Coupling>,
    wedge: Vec<(usize, usize, PExpr)>,
) -> RClass {
    RClass {
        id: id.to_string(),
        invertible,
        params,
        couplings,
        wedge,
        note: None,
    }
}

fn nc(
    id: &str,
    params: Vec<ParamSpec>,
    couplings: Vec<Coupling>,
    matrix: Vec<Vec<PExpr>>,
) -> NClass {
    NClass {
        id: id.to_string(),
        params,
        couplings,
        matrix,
        note: None,
    }
}

fn some_nonzero(names: &[&str]) -> Coupling {
    Coupling::AtLeastOneNonZero(names.iter().map(|s| s.to_string()).collect())
}

fn some_zero(names: &[&str]) -> Coupling {
    Coupling::AtLeastOneZero(names.iter().map(|s| s.to_string()).collect())
}

fn ne(a: &str, b: &str) -> Coupling {
    Coupling::NotEqual(a.to_string(), b.to_string())
}

fn aut(params: &[&str], matrix: Vec<Vec<PExpr>>) -> AutoFamilyData {
    AutoFamilyData {
        params: params.iter().map(|s| s.to_string()).collect(),
        matrix,
    }
}

// ---------------------------------------------------------------------------
// Entries
// ---------------------------------------------------------------------------

fn entry_a41() -> CatalogEntry {
    let algebra = alg(
        &[(2, 4, 1, one()), (3, 4, 2, one())],
        "A_{4,1}",
    );
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ), ps("c23", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14")), (2, 3, v("c23"))],
        ),
        rc(
            "2",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c23", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", F), ps("c13", POS)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", F), ps("c13", NEG)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c12", NZ)],
            vec![],
            vec![(1, 2, v("c12"))],
        ),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 4, n(1)), (2, 3, n(-1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), z()],
            [-v("n2"), v("n3"), z(), z()],
            [v("n4"), z(), v("n3"), z()],
            [z(), v("n4"), v("n2"), v("n1")],
        ),
        dual: vec![(1, 2, 3, n(1)), (1, 3, 4, n(1))],
    };
    let n_classes = vec![
        nc(
            "1",
            vec![ps("n1", F), ps("c1", F)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [z(), v("n1"), z(), z()],
                [v("c1"), z(), v("n1"), z()],
                [z(), v("c1"), z(), v("n1")],
            ),
        ),
        nc(
            "2",
            vec![ps("n1", F), ps("c2", NZ), ps("c3", F)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [-v("c2"), v("n1"), z(), z()],
                [v("c3"), z(), v("n1"), z()],
                [z(), v("c3"), v("c2"), v("n1")],
            ),
        ),
        nc(
            "3",
            vec![ps("n1", F), ps("n3", F), ps("c4", F), ps("c5", F)],
            vec![ne("n1", "n3")],
            cols4(
                [v("n1"), z(), z(), z()],
                [-v("c4"), v("n3"), z(), z()],
                [v("c5"), z(), v("n3"), z()],
                [z(), v("c5"), v("c4"), v("n1")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a11", "a12", "a16", "a3", "a4", "a7", "a8"],
        vec![
            vec![v("a11") * v("a16").pow(2), v("a7") * v("a16"), v("a3"), v("a4")],
            vec![z(), v("a11") * v("a16"), v("a7"), v("a8")],
            vec![z(), z(), v("a11"), v("a12")],
            vec![z(), z(), z(), v("a16")],
        ],
    );
    CatalogEntry {
        id: "A_{4,1}".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "A_{4,1}.iii".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a42() -> CatalogEntry {
    let algebra = alg(
        &[
            (1, 4, 1, int(-1)),
            (2, 4, 2, one()),
            (3, 4, 2, one()),
            (3, 4, 3, one()),
        ],
        "A_{4,2}^{-1}",
    );
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", F), ps("c13", NZ), ps("c23", POS), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23")), (2, 4, v("c24"))],
        ),
        rc(
            "2",
            true,
            vec![ps("c12", F), ps("c13", NZ), ps("c23", NEG), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23")), (2, 4, v("c24"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", NZ), ps("c13", NZ), ps("c23", POS)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", NZ), ps("c13", NZ), ps("c23", NEG)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", F), ps("c23", POS), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23")), (2, 4, v("c24"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c12", F), ps("c23", NEG), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23")), (2, 4, v("c24"))],
        ),
        rc(
            "7",
            false,
            vec![ps("c12", F), ps("c13", NZ), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 4, v("c24"))],
        ),
        rc(
            "8",
            false,
            vec![ps("c12", F), ps("c13", NZ), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "9",
            false,
            vec![ps("c12", NZ), ps("c13", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        rc(
            "10",
            false,
            vec![ps("c13", NZ), ps("c23", POS)],
            vec![],
            vec![(1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "11",
            false,
            vec![ps("c13", NZ), ps("c23", NEG)],
            vec![],
            vec![(1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "12",
            false,
            vec![ps("c12", F), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 4, v("c24"))],
        ),
        rc(
            "13",
            false,
            vec![ps("c12", NZ), ps("c23", POS)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23"))],
        ),
        rc(
            "14",
            false,
            vec![ps("c12", NZ), ps("c23", NEG)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23"))],
        ),
        rc(
            "15",
            false,
            vec![ps("c12", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 4, v("c14"))],
        ),
        rc("16", false, vec![ps("c12", NZ)], vec![], vec![(1, 2, v("c12"))]),
        rc("17", false, vec![ps("c13", NZ)], vec![], vec![(1, 3, v("c13"))]),
        rc("18", false, vec![ps("c23", POS)], vec![], vec![(2, 3, v("c23"))]),
        rc("19", false, vec![ps("c23", NEG)], vec![], vec![(2, 3, v("c23"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 3, n(1)), (2, 4, n(-1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        n_matrix: cols4(
            [v("n1"), v("n2"), z(), z()],
            [z(), v("n3"), z(), z()],
            [z(), v("n4"), v("n1"), z()],
            [v("n4"), z(), -v("n2"), v("n3")],
        ),
        dual: vec![
            (1, 2, 1, n(-1)),
            (1, 2, 4, n(-1)),
            (2, 3, 3, n(-1)),
            (2, 4, 4, n(1)),
        ],
    };
    let n_classes = vec![nc(
        "1",
        vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        vec![],
        cols4(
            [v("n1"), v("n2"), z(), z()],
            [z(), v("n3"), z(), z()],
            [z(), v("n4"), v("n1"), z()],
            [v("n4"), z(), -v("n2"), v("n3")],
        ),
    )];
    let automorphism = aut(
        &["a1", "a4", "a6", "a8"],
        vec![
            vec![v("a1"), z(), z(), v("a4")],
            vec![z(), v("a6"), z(), v("a8")],
            vec![z(), z(), v("a6"), z()],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,2}^{-1}".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "A_{4,2}^{-1}.i".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a43() -> CatalogEntry {
    let algebra = alg(&[(1, 4, 1, one()), (3, 4, 2, one())], "A_{4,3}");
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ), ps("c23", POS)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14")), (2, 3, v("c23"))],
        ),
        rc(
            "2",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ), ps("c23", NEG)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14")), (2, 3, v("c23"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c23", POS)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c23", NEG)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c12", F), ps("c23", F), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23")), (2, 4, v("c24"))],
        ),
        rc(
            "7",
            false,
            vec![ps("c12", F), ps("c13", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        rc("8", false, vec![ps("c12", NZ)], vec![], vec![(1, 2, v("c12"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 4, n(-1)), (2, 3, n(1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), z()],
            [v("n2"), v("n4"), z(), z()],
            [v("n3"), z(), v("n4"), z()],
            [z(), v("n3"), -v("n2"), v("n1")],
        ),
        dual: vec![(1, 2, 3, n(-1)), (1, 4, 4, n(1))],
    };
    let n_classes = vec![
        nc(
            "pos",
            vec![ps("n1", F), ps("n4", F), ps("n2", POS), ps("c3", F)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [v("n2"), v("n4"), z(), z()],
                [v("c3"), z(), v("n4"), z()],
                [z(), v("c3"), -v("n2"), v("n1")],
            ),
        ),
        nc(
            "neg",
            vec![ps("n1", F), ps("n4", F), ps("n2", NEG), ps("c3", F)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [v("n2"), v("n4"), z(), z()],
                [v("c3"), z(), v("n4"), z()],
                [z(), v("c3"), -v("n2"), v("n1")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a1", "a4", "a6", "a7", "a8", "a12"],
        vec![
            vec![v("a1"), z(), z(), v("a4")],
            vec![z(), v("a6"), v("a7"), v("a8")],
            vec![z(), z(), v("a6"), v("a12")],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,3}".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "A_{4,3}.ii".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a46(a: &Rat) -> CatalogEntry {
    let algebra = alg(
        &[(1, 4, 1, a.clone()), (2, 4, 3, int(-1)), (3, 4, 2, one())],
        "A_{4,6}^{a,0}",
    );
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ), ps("c23", POS)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14")), (2, 3, v("c23"))],
        ),
        rc(
            "2",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ), ps("c23", NEG)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14")), (2, 3, v("c23"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c23", POS)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c23", NEG)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c12", F), ps("c13", F)],
            vec![some_nonzero(&["c12", "c13"])],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 4, n(1)), (2, 3, n(1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), z()],
            [v("n2"), v("n4"), z(), z()],
            [v("n3"), z(), v("n4"), z()],
            [z(), -v("n3"), v("n2"), v("n1")],
        ),
        dual: vec![(1, 2, 3, n(1)), (1, 3, 2, n(-1)), (1, 4, 4, -rn(a))],
    };
    let n_classes = vec![nc(
        "1",
        vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        vec![],
        cols4(
            [v("n1"), z(), z(), z()],
            [v("n2"), v("n4"), z(), z()],
            [v("n3"), z(), v("n4"), z()],
            [z(), -v("n3"), v("n2"), v("n1")],
        ),
    )];
    let automorphism = aut(
        &["a1", "a4", "a6", "a7", "a8", "a12"],
        vec![
            vec![v("a1"), z(), z(), v("a4")],
            vec![z(), v("a6"), v("a7"), v("a8")],
            vec![z(), -v("a7"), v("a6"), v("a12")],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,6}^{a,0}".into(),
        algebra,
        algebra_params: BTreeMap::from([("a".to_string(), a.clone())]),
        dual_label: "A_{4,6}^{a,0}.i".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a47() -> CatalogEntry {
    // [X1,X4] = 2X1, [X2,X3] = X1, [X2,X4] = X2, [X3,X4] = X2 + X3.
    let algebra = alg(
        &[
            (1, 4, 1, int(2)),
            (2, 3, 1, one()),
            (2, 4, 2, one()),
            (3, 4, 2, one()),
            (3, 4, 3, one()),
        ],
        "A_{4,7}",
    );
    let r_classes = vec![
        rc(
            "1",
            false,
            vec![ps("c12", F), ps("c23", F), ps("c24", NZ)],
            vec![],
            vec![
                (1, 2, v("c12")),
                (1, 3, -(v("c23").pow(2) / v("c24"))),
                (1, 4, -v("c23")),
                (2, 3, v("c23")),
                (2, 4, v("c24")),
            ],
        ),
        rc(
            "2",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c23", POS)],
            vec![],
            vec![
                (1, 2, v("c12")),
                (1, 3, v("c13")),
                (1, 4, q(1, 2) * v("c23")),
                (2, 3, v("c23")),
            ],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c23", NEG)],
            vec![],
            vec![
                (1, 2, v("c12")),
                (1, 3, v("c13")),
                (1, 4, q(1, 2) * v("c23")),
                (2, 3, v("c23")),
            ],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", POS)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NEG)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c12", F), ps("c13", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        rc("7", false, vec![ps("c12", NZ)], vec![], vec![(1, 2, v("c12"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 4, q(-1, 2)), (2, 3, n(-1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), z()],
            [v("n2"), v("n1"), z(), z()],
            [v("n3"), z(), v("n1"), z()],
            [z(), n(-2) * v("n3"), n(2) * v("n2"), v("n1")],
        ),
        dual: vec![
            (1, 2, 2, q(1, 2)),
            (1, 2, 3, q(-1, 2)),
            (1, 3, 3, q(1, 2)),
            (1, 4, 4, n(1)),
            (2, 3, 4, n(2)),
        ],
    };
    let n_classes = vec![
        nc(
            "pos",
            vec![ps("n1", F), ps("n2", POS), ps("c3", F)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [v("n2"), v("n1"), z(), z()],
                [v("c3"), z(), v("n1"), z()],
                [z(), n(-2) * v("c3"), n(2) * v("n2"), v("n1")],
            ),
        ),
        nc(
            "neg",
            vec![ps("n1", F), ps("n2", NEG), ps("c3", F)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [v("n2"), v("n1"), z(), z()],
                [v("c3"), z(), v("n1"), z()],
                [z(), n(-2) * v("c3"), n(2) * v("n2"), v("n1")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a4", "a6", "a7", "a8", "a12"],
        vec![
            vec![
                v("a6").pow(2),
                -(v("a12") * v("a6")),
                v("a6") * v("a8") - v("a12") * (v("a6") + v("a7")),
                v("a4"),
            ],
            vec![z(), v("a6"), v("a7"), v("a8")],
            vec![z(), z(), v("a6"), v("a12")],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,7}".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "A_{4,7}.i".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a49_half() -> CatalogEntry {
    let algebra = alg(
        &[
            (1, 4, 1, rat(1, 2)),
            (2, 3, 1, one()),
            (2, 4, 2, one()),
            (3, 4, 3, rat(-1, 2)),
        ],
        "A_{4,9}^{-1/2}",
    );
    let r_classes = vec![
        rc(
            "1",
            false,
            vec![ps("c13", F), ps("c23", F), ps("c34", NZ)],
            vec![],
            vec![
                (1, 2, v("c23").pow(2) / v("c34")),
                (1, 3, v("c13")),
                (1, 4, -v("c23")),
                (2, 3, v("c23")),
                (3, 4, v("c34")),
            ],
        ),
        rc(
            "2",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c23", NZ)],
            vec![],
            vec![
                (1, 2, v("c12")),
                (1, 3, v("c13")),
                (1, 4, n(2) * v("c23")),
                (2, 3, v("c23")),
            ],
        ),
        rc(
            "3",
            true,
            vec![ps("c12", F), ps("c13", NZ), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 4, v("c24"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", F), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 4, v("c24"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c12", NZ), ps("c13", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        RClass {
            id: "7".into(),
            invertible: false,
            params: vec![ps("c12", NZ)],
            couplings: vec![],
            wedge: vec![(1, 2, v("c12"))],
            note: Some("printed twice in the source table; stored once".into()),
        },
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 4, n(-4)), (2, 3, n(-2))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        n_matrix: cols4(
            [v("n2"), v("n1"), z(), z()],
            [n(2) * v("n4"), v("n2"), z(), z()],
            [n(-2) * v("n3"), z(), v("n2"), n(2) * v("n1")],
            [z(), v("n3"), v("n4"), v("n2")],
        ),
        dual: vec![
            (1, 2, 2, n(-2)),
            (1, 3, 3, n(4)),
            (1, 4, 4, n(2)),
            (2, 3, 4, n(1)),
        ],
    };
    let n_classes = vec![
        nc(
            "1",
            vec![ps("n2", F), ps("c4", NZ)],
            vec![],
            cols4(
                [v("n2"), z(), z(), z()],
                [n(2) * v("c4"), v("n2"), z(), z()],
                [z(), z(), v("n2"), z()],
                [z(), z(), v("c4"), v("n2")],
            ),
        ),
        nc(
            "2",
            vec![ps("n2", F), ps("c3", NZ)],
            vec![],
            cols4(
                [v("n2"), z(), z(), z()],
                [z(), v("n2"), z(), z()],
                [n(-2) * v("c3"), z(), v("n2"), z()],
                [z(), v("c3"), z(), v("n2")],
            ),
        ),
        nc(
            "3",
            vec![ps("n2", F), ps("c1", NZ), ps("c3", F), ps("c4", NZ)],
            vec![],
            cols4(
                [v("n2"), v("c1"), z(), z()],
                [n(2) * v("c4"), v("n2"), z(), z()],
                [n(-2) * v("c3"), z(), v("n2"), n(2) * v("c1")],
                [z(), v("c3"), v("c4"), v("n2")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a4", "a6", "a8", "a11", "a12"],
        vec![
            vec![v("a11") * v("a6"), n(2) * v("a12") * v("a6"), v("a8") * v("a11"), v("a4")],
            vec![z(), v("a6"), z(), v("a8")],
            vec![z(), z(), v("a11"), v("a12")],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,9}^{-1/2}".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "A_{4,9}^{-1/2}.iii".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a49_one() -> CatalogEntry {
    let algebra = alg(
        &[
            (1, 4, 1, int(2)),
            (2, 3, 1, one()),
            (2, 4, 2, one()),
            (3, 4, 3, one()),
        ],
        "A_{4,9}^{1}",
    );
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c23", NZ)],
            vec![],
            vec![
                (1, 2, v("c12")),
                (1, 3, v("c13")),
                (1, 4, q(1, 2) * v("c23")),
                (2, 3, v("c23")),
            ],
        ),
        rc(
            "2",
            false,
            vec![ps("c13", F), ps("c23", F), ps("c34", NZ)],
            vec![],
            vec![
                (1, 2, v("c23").pow(2) / v("c34")),
                (1, 3, v("c13")),
                (1, 4, -v("c23")),
                (2, 3, v("c23")),
                (3, 4, v("c34")),
            ],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", F), ps("c13", F)],
            vec![some_nonzero(&["c12", "c13"])],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 4, q(1, 4)), (2, 3, q(1, 2))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), z()],
            [v("n2"), v("n1"), z(), z()],
            [v("n3"), z(), v("n1"), z()],
            [z(), n(-2) * v("n3"), n(2) * v("n2"), v("n1")],
        ),
        dual: vec![
            (1, 2, 2, q(-1, 4)),
            (1, 3, 3, q(-1, 4)),
            (1, 4, 4, q(-1, 2)),
            (2, 3, 4, n(-1)),
        ],
    };
    let n_classes = vec![
        nc(
            "1",
            vec![ps("n1", F), ps("c2", NZ), ps("c3", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [v("c2"), v("n1"), z(), z()],
                [v("c3"), z(), v("n1"), z()],
                [z(), n(-2) * v("c3"), n(2) * v("c2"), v("n1")],
            ),
        ),
        nc(
            "2",
            vec![ps("n1", F), ps("n2", F), ps("n3", F)],
            vec![some_zero(&["n2", "n3"])],
            cols4(
                [v("n1"), z(), z(), z()],
                [v("n2"), v("n1"), z(), z()],
                [v("n3"), z(), v("n1"), z()],
                [z(), n(-2) * v("n3"), n(2) * v("n2"), v("n1")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a4", "a6", "a7", "a8", "a10", "a11", "a12"],
        vec![
            vec![
                v("a11") * v("a6") - v("a10") * v("a7"),
                v("a10") * v("a8") - v("a12") * v("a6"),
                v("a8") * v("a11") - v("a7") * v("a12"),
                v("a4"),
            ],
            vec![z(), v("a6"), v("a7"), v("a8")],
            vec![z(), v("a10"), v("a11"), v("a12")],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,9}^{1}".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "A_{4,9}^1.i".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a49_zero() -> CatalogEntry {
    let algebra = alg(
        &[(1, 4, 1, one()), (2, 3, 1, one()), (2, 4, 2, one())],
        "A_{4,9}^{0}",
    );
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", NZ), ps("c13", F), ps("c23", NZ)],
            vec![],
            vec![
                (1, 2, v("c12")),
                (1, 3, v("c13")),
                (1, 4, v("c23")),
                (2, 3, v("c23")),
            ],
        ),
        rc(
            "2",
            false,
            vec![ps("c13", F), ps("c23", NZ)],
            vec![],
            vec![(1, 3, v("c13")), (1, 4, v("c23")), (2, 3, v("c23"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c13", F), ps("c23", F), ps("c34", NZ)],
            vec![],
            vec![
                (1, 2, v("c23").pow(2) / v("c34")),
                (1, 3, v("c13")),
                (1, 4, -v("c23")),
                (2, 3, v("c23")),
                (3, 4, v("c34")),
            ],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", F), ps("c14", F), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 4, v("c14")), (2, 4, v("c24"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", F), ps("c13", NZ), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c12", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 4, v("c14"))],
        ),
        rc(
            "7",
            false,
            vec![ps("c12", NZ), ps("c13", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        rc("8", false, vec![ps("c12", NZ)], vec![], vec![(1, 2, v("c12"))]),
        rc("9", false, vec![ps("c13", NZ)], vec![], vec![(1, 3, v("c13"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 2, q(-1, 2)), (1, 4, n(-1)), (2, 3, n(-1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), z()],
            [n(-2) * v("n2"), v("n1"), z(), z()],
            [-v("n3"), z(), v("n1"), z()],
            [v("n2"), v("n3"), n(-2) * v("n2"), v("n1")],
        ),
        dual: vec![
            (1, 2, 4, n(1)),
            (1, 3, 3, n(1)),
            (1, 4, 4, n(1)),
            (2, 3, 4, n(1)),
        ],
    };
    let n_classes = vec![nc(
        "1",
        vec![ps("n1", F), ps("n2", F), ps("n3", F)],
        vec![],
        cols4(
            [v("n1"), z(), z(), z()],
            [n(-2) * v("n2"), v("n1"), z(), z()],
            [-v("n3"), z(), v("n1"), z()],
            [v("n2"), v("n3"), n(-2) * v("n2"), v("n1")],
        ),
    )];
    let automorphism = aut(
        &["a2", "a4", "a6", "a8", "a11"],
        vec![
            vec![v("a11") * v("a6"), v("a2"), v("a8") * v("a11"), v("a4")],
            vec![z(), v("a6"), z(), v("a8")],
            vec![z(), z(), v("a11"), z()],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,9}^{0}".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "A_{4,9}^0.iv".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a49_b(b: &Rat) -> CatalogEntry {
    let one_plus_b = &one() + b;
    let algebra = alg(
        &[
            (1, 4, 1, one_plus_b.clone()),
            (2, 3, 1, one()),
            (2, 4, 2, one()),
            (3, 4, 3, b.clone()),
        ],
        "A_{4,9}^{b}",
    );
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![
                (1, 2, v("c12")),
                (1, 3, v("c13")),
                (1, 4, v("c14")),
                (2, 3, rn(&one_plus_b) * v("c14")),
            ],
        ),
        rc(
            "2",
            false,
            vec![ps("c12", F), ps("c14", F), ps("c24", NZ)],
            vec![],
            vec![
                (1, 2, v("c12")),
                (1, 3, -(rn(b) * v("c14").pow(2) / v("c24"))),
                (1, 4, v("c14")),
                (2, 3, -(rn(b) * v("c14"))),
                (2, 4, v("c24")),
            ],
        ),
        rc(
            "3",
            false,
            vec![ps("c13", F), ps("c23", F), ps("c34", NZ)],
            vec![],
            vec![
                (1, 2, v("c23").pow(2) / v("c34")),
                (1, 3, v("c13")),
                (1, 4, -v("c23")),
                (2, 3, v("c23")),
                (3, 4, v("c34")),
            ],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", NZ), ps("c13", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        rc("6", false, vec![ps("c12", NZ)], vec![], vec![(1, 2, v("c12"))]),
        rc("7", false, vec![ps("c13", NZ)], vec![], vec![(1, 3, v("c13"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 4, n(-1)), (2, 3, -rn(&one_plus_b))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), z()],
            [v("n2"), v("n1"), z(), z()],
            [v("n3"), z(), v("n1"), z()],
            [
                z(),
                -(rn(&one_plus_b) * v("n3")),
                rn(&one_plus_b) * v("n2"),
                v("n1"),
            ],
        ),
        dual: vec![
            (1, 2, 2, rn(b)),
            (1, 3, 3, n(1)),
            (1, 4, 4, rn(&one_plus_b)),
            (2, 3, 4, rn(&(&one_plus_b * &one_plus_b))),
        ],
    };
    let n_classes = vec![
        nc(
            "1",
            vec![ps("n1", F), ps("c2", NZ), ps("c3", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [v("c2"), v("n1"), z(), z()],
                [v("c3"), z(), v("n1"), z()],
                [
                    z(),
                    -(rn(&one_plus_b) * v("c3")),
                    rn(&one_plus_b) * v("c2"),
                    v("n1"),
                ],
            ),
        ),
        nc(
            "2",
            vec![ps("n1", F), ps("c2", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [v("c2"), v("n1"), z(), z()],
                [z(), z(), v("n1"), z()],
                [z(), z(), rn(&one_plus_b) * v("c2"), v("n1")],
            ),
        ),
        nc(
            "3",
            vec![ps("n1", F), ps("c3", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [z(), v("n1"), z(), z()],
                [v("c3"), z(), v("n1"), z()],
                [z(), -(rn(&one_plus_b) * v("c3")), z(), v("n1")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a4", "a6", "a8", "a11", "a12"],
        vec![
            vec![
                v("a11") * v("a6"),
                -(v("a12") * v("a6") / rn(b)),
                v("a8") * v("a11"),
                v("a4"),
            ],
            vec![z(), v("a6"), z(), v("a8")],
            vec![z(), z(), v("a11"), v("a12")],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,9}^{b}".into(),
        algebra,
        algebra_params: BTreeMap::from([("b".to_string(), b.clone())]),
        dual_label: "A_{4,9}^b.i".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a411(b: &Rat) -> CatalogEntry {
    let two_b = &int(2) * b;
    let algebra = alg(
        &[
            (1, 4, 1, two_b.clone()),
            (2, 3, 1, one()),
            (2, 4, 2, b.clone()),
            (2, 4, 3, int(-1)),
            (3, 4, 2, one()),
            (3, 4, 3, b.clone()),
        ],
        "A_{4,11}^{b}",
    );
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![
                (1, 2, v("c12")),
                (1, 3, v("c13")),
                (1, 4, v("c14")),
                (2, 3, rn(&two_b) * v("c14")),
            ],
        ),
        rc(
            "2",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", F), ps("c13", F)],
            vec![some_nonzero(&["c12", "c13"])],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
    ];
    let half_inv_b = &rat(-1, 2) / b;
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 4, rn(&half_inv_b)), (2, 3, n(-1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), z()],
            [v("n2"), v("n1"), z(), z()],
            [v("n3"), z(), v("n1"), z()],
            [z(), -(rn(&two_b) * v("n3")), rn(&two_b) * v("n2"), v("n1")],
        ),
        dual: vec![
            (1, 2, 2, q(1, 2)),
            (1, 2, 3, -(rn(&(&one() / &two_b)))),
            (1, 3, 2, rn(&(&one() / &two_b))),
            (1, 3, 3, q(1, 2)),
            (1, 4, 4, n(1)),
            (2, 3, 4, rn(&two_b)),
        ],
    };
    let n_classes = vec![nc(
        "1",
        vec![ps("n1", F), ps("c2", F), ps("c3", F)],
        vec![some_nonzero(&["c2", "c3"])],
        cols4(
            [v("n1"), z(), z(), z()],
            [v("c2"), v("n1"), z(), z()],
            [v("c3"), z(), v("n1"), z()],
            [z(), -(rn(&two_b) * v("c3")), rn(&two_b) * v("c2"), v("n1")],
        ),
    )];
    let denom = &(&one() + &(b * b));
    let automorphism = aut(
        &["a4", "a6", "a7", "a8", "a12"],
        vec![
            vec![
                v("a6").pow(2) + v("a7").pow(2),
                -((v("a6") * (rn(b) * v("a12") + v("a8"))
                    + v("a7") * (rn(b) * v("a8") - v("a12")))
                    / rn(denom)),
                -((v("a6") * (v("a12") - rn(b) * v("a8"))
                    + v("a7") * (rn(b) * v("a12") + v("a8")))
                    / rn(denom)),
                v("a4"),
            ],
            vec![z(), v("a6"), v("a7"), v("a8")],
            vec![z(), -v("a7"), v("a6"), v("a12")],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,11}^{b}".into(),
        algebra,
        algebra_params: BTreeMap::from([("b".to_string(), b.clone())]),
        dual_label: "A_{4,11}^b.i".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a412() -> CatalogEntry {
    let algebra = alg(
        &[
            (1, 3, 1, one()),
            (1, 4, 2, int(-1)),
            (2, 3, 2, one()),
            (2, 4, 1, one()),
        ],
        "A_{4,12}",
    );
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c23", F), ps("c24", F), ps("r12", NZ)],
            vec![some_nonzero(&["c23", "c24"])],
            vec![
                (1, 2, v("r12")),
                (1, 3, v("c24")),
                (1, 4, -v("c23")),
                (2, 3, v("c23")),
                (2, 4, v("c24")),
            ],
        ),
        rc(
            "2",
            true,
            vec![ps("c23", F), ps("c24", F)],
            vec![some_nonzero(&["c23", "c24"])],
            vec![
                (1, 3, v("c24")),
                (1, 4, -v("c23")),
                (2, 3, v("c23")),
                (2, 4, v("c24")),
            ],
        ),
        RClass {
            id: "3".into(),
            invertible: false,
            params: vec![ps("c13", F), ps("c23", F), ps("r34", NZ)],
            couplings: vec![],
            // The CYBE forces m12 * m34 = -((c13)^2 + (c23)^2); the printed
            // row carries a sign slip on the X1^X2 coefficient.
            wedge: vec![
                (1, 2, (v("c13").pow(2) + v("c23").pow(2)) / v("r34")),
                (1, 3, v("c13")),
                (1, 4, v("c23")),
                (2, 3, v("c23")),
                (2, 4, -v("c13")),
                (3, 4, -v("r34")),
            ],
            note: Some("X1^X2 coefficient sign corrected to satisfy the CYBE".into()),
        },
        rc(
            "4",
            false,
            vec![ps("c13", F), ps("c23", F)],
            vec![some_nonzero(&["c13", "c23"])],
            vec![(1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc("5", false, vec![ps("c12", POS)], vec![], vec![(1, 2, v("c12"))]),
        rc("6", false, vec![ps("c12", NEG)], vec![], vec![(1, 2, v("c12"))]),
    ];
    // The representative r carries its own nonzero parameter b; the printed
    // Nijenhuis data is tied to the same b.
    let rn_family = RnFamily {
        r_params: vec![ps("b", NZ)],
        r_wedge: vec![(1, 2, -(v("b") / n(2))), (1, 4, n(-1)), (2, 3, n(1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F)],
        n_matrix: cols4(
            [v("n1"), -v("n2"), z(), z()],
            [v("n2"), v("n1"), z(), z()],
            [
                v("n3"),
                v("b") * v("n2") / n(2),
                v("n1"),
                v("n2"),
            ],
            [
                -(v("b") * v("n2") / n(2)),
                v("n3"),
                -v("n2"),
                v("n1"),
            ],
        ),
        dual: vec![
            (1, 2, 3, v("b")),
            (1, 3, 4, n(-1)),
            (1, 4, 3, n(1)),
            (2, 3, 3, n(-1)),
            (2, 4, 4, n(-1)),
        ],
    };
    // Nijenhuis classes pair with the representative at its default b = 1.
    let n_classes = vec![nc(
        "1",
        vec![ps("n1", F), ps("n2", F), ps("n3", F)],
        vec![],
        cols4(
            [v("n1"), -v("n2"), z(), z()],
            [v("n2"), v("n1"), z(), z()],
            [v("n3"), v("n2") / n(2), v("n1"), v("n2")],
            [-(v("n2") / n(2)), v("n3"), -v("n2"), v("n1")],
        ),
    )];
    let automorphism = aut(
        &["a1", "a2", "a3", "a4"],
        vec![
            vec![v("a1"), v("a2"), v("a3"), v("a4")],
            vec![-v("a2"), v("a1"), v("a4"), -v("a3")],
            vec![z(), z(), n(1), z()],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,12}".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "A_{4,12}.ii".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a2a2() -> CatalogEntry {
    let algebra = alg(&[(1, 2, 2, one()), (3, 4, 4, one())], "A2+A2");
    let r_classes = vec![
        rc(
            "1",
            false,
            vec![ps("r12", F), ps("c14", NZ), ps("c24", F)],
            vec![],
            vec![
                (1, 2, v("r12")),
                (2, 3, -v("r12")),
                (1, 4, v("c14")),
                (3, 4, v("c14")),
                (2, 4, v("c24")),
            ],
        ),
        rc(
            "2",
            false,
            vec![ps("r13", NZ), ps("c14", F), ps("c23", F)],
            vec![],
            vec![
                (1, 3, v("r13")),
                (2, 3, v("c23")),
                (1, 4, v("c14")),
                (2, 4, v("c23") * v("c14") / v("r13")),
            ],
        ),
        rc(
            "3",
            false,
            vec![ps("r12", F), ps("c24", F)],
            vec![],
            vec![(1, 2, v("r12")), (2, 3, -v("r12")), (2, 4, v("c24"))],
        ),
        rc(
            "4",
            true,
            vec![ps("c12", NZ), ps("c24", NZ), ps("c34", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 4, v("c24")), (3, 4, v("c34"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", NZ), ps("c23", NZ), ps("c24", F)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23")), (2, 4, v("c24"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c14", NZ), ps("c24", F), ps("c34", NZ)],
            vec![],
            vec![(1, 4, v("c14")), (2, 4, v("c24")), (3, 4, v("c34"))],
        ),
        rc(
            "7",
            false,
            vec![ps("c12", NZ), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 4, v("c24"))],
        ),
        rc(
            "8",
            false,
            vec![ps("c24", NZ), ps("c34", NZ)],
            vec![],
            vec![(2, 4, v("c24")), (3, 4, v("c34"))],
        ),
        rc(
            "9",
            true,
            vec![ps("c12", NZ), ps("c34", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (3, 4, v("c34"))],
        ),
        rc(
            "10",
            false,
            vec![ps("c23", NZ), ps("c24", F)],
            vec![],
            vec![(2, 3, v("c23")), (2, 4, v("c24"))],
        ),
        rc(
            "11",
            false,
            vec![ps("c14", NZ), ps("c24", F)],
            vec![],
            vec![(1, 4, v("c14")), (2, 4, v("c24"))],
        ),
        rc("12", false, vec![ps("c12", NZ)], vec![], vec![(1, 2, v("c12"))]),
        rc("13", false, vec![ps("c24", NZ)], vec![], vec![(2, 4, v("c24"))]),
        rc("14", false, vec![ps("c34", NZ)], vec![], vec![(3, 4, v("c34"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 2, n(1)), (3, 4, n(1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), -v("n2")],
            [z(), v("n1"), z(), z()],
            [z(), v("n2"), v("n3"), z()],
            [z(), z(), z(), v("n3")],
        ),
        // The printed row lists only f~^{34}_3; the two identical factors
        // also force f~^{12}_1 = 1, which the exact check requires.
        dual: vec![(1, 2, 1, n(1)), (3, 4, 3, n(1))],
    };
    let n_classes = vec![nc(
        "1",
        vec![ps("n1", F), ps("n2", F), ps("n3", F)],
        vec![],
        cols4(
            [v("n1"), z(), z(), -v("n2")],
            [z(), v("n1"), z(), z()],
            [z(), v("n2"), v("n3"), z()],
            [z(), z(), z(), v("n3")],
        ),
    )];
    let automorphism = aut(
        &["a5", "a6", "a15", "a16"],
        vec![
            vec![n(1), z(), z(), z()],
            vec![v("a5"), v("a6"), z(), z()],
            vec![z(), z(), n(1), z()],
            vec![z(), z(), v("a15"), v("a16")],
        ],
    );
    CatalogEntry {
        id: "A2+A2".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "(III+R).iii".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a45_m1m1() -> CatalogEntry {
    let algebra = alg(
        &[
            (1, 4, 1, one()),
            (2, 4, 2, int(-1)),
            (3, 4, 3, int(-1)),
        ],
        "A_{4,5}^{-1,-1}",
    );
    let full_wedge = || {
        vec![
            (1, 2, v("c12")),
            (1, 3, v("c13")),
            (2, 3, v("c23")),
            (2, 4, v("c24")),
            (3, 4, v("c34")),
        ]
    };
    let r_classes = vec![
        RClass {
            id: "1a".into(),
            invertible: true,
            params: vec![
                ps("c12", F),
                ps("c13", NZ),
                ps("c23", F),
                ps("c24", NZ),
                ps("c34", F),
            ],
            couplings: vec![some_zero(&["c12", "c34"])],
            wedge: full_wedge(),
            note: Some("first branch of the starred row: c12 or c34 vanishes".into()),
        },
        RClass {
            id: "1b".into(),
            invertible: true,
            params: vec![
                ps("c12", NZ),
                ps("c13", F),
                ps("c23", F),
                ps("c24", F),
                ps("c34", NZ),
            ],
            couplings: vec![some_zero(&["c13", "c24"])],
            wedge: full_wedge(),
            note: Some("second branch of the starred row: c13 or c24 vanishes".into()),
        },
        rc(
            "2",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c23", NZ)],
            vec![some_nonzero(&["c12", "c13"])],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c23", F), ps("c24", F), ps("c34", F)],
            vec![some_nonzero(&["c24", "c34"])],
            vec![(2, 3, v("c23")), (2, 4, v("c24")), (3, 4, v("c34"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", F), ps("c13", F)],
            vec![some_nonzero(&["c12", "c13"])],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        rc("6", false, vec![ps("c23", NZ)], vec![], vec![(2, 3, v("c23"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 2, n(1)), (1, 3, n(1)), (2, 4, n(1))],
        n_params: vec![
            ps("n1", F),
            ps("n2", F),
            ps("n3", F),
            ps("n4", F),
            ps("n5", F),
        ],
        n_matrix: cols4(
            [v("n2") - v("n1"), v("n5"), z(), v("n1")],
            [z(), v("n3") - v("n1"), -v("n1"), z()],
            [z(), v("n4"), v("n2"), z()],
            [v("n2") - v("n3") - v("n4"), v("n5"), v("n5"), v("n3")],
        ),
        dual: vec![(1, 2, 1, n(-1)), (2, 3, 3, n(-1)), (2, 4, 4, n(1))],
    };
    let n_classes = vec![
        nc(
            "1",
            vec![
                ps("n1", NZ),
                ps("n2", F),
                ps("n3", F),
                ps("n4", F),
                ps("c5", F),
            ],
            vec![],
            cols4(
                [v("n2") - v("n1"), v("c5"), z(), v("n1")],
                [z(), v("n3") - v("n1"), -v("n1"), z()],
                [z(), v("n4"), v("n2"), z()],
                [v("n2") - v("n3") - v("n4"), v("c5"), v("c5"), v("n3")],
            ),
        ),
        nc(
            "2",
            vec![ps("n2", F), ps("n3", F), ps("c4", F), ps("c5", NZ)],
            vec![],
            cols4(
                [v("n2"), v("c5"), z(), z()],
                [z(), v("n3"), z(), z()],
                [z(), v("c4"), v("n2"), z()],
                [v("n2") - v("n3") - v("c4"), v("c5"), v("c5"), v("n3")],
            ),
        ),
        nc(
            "3",
            vec![ps("n2", F), ps("n3", F), ps("c4", F)],
            vec![],
            cols4(
                [v("n2"), z(), z(), z()],
                [z(), v("n3"), z(), z()],
                [z(), v("c4"), v("n2"), z()],
                [v("n2") - v("n3") - v("c4"), z(), z(), v("n3")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a1", "a4", "a6", "a7", "a8", "a10", "a11", "a12"],
        vec![
            vec![v("a1"), z(), z(), v("a4")],
            vec![z(), v("a6"), v("a7"), v("a8")],
            vec![z(), v("a10"), v("a11"), v("a12")],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,5}^{-1,-1}".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "A_{4,5}^{-1,-1}.i".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a45_a_ma(a: &Rat) -> CatalogEntry {
    let algebra = alg(
        &[
            (1, 4, 1, one()),
            (2, 4, 2, a.clone()),
            (3, 4, 3, -a),
        ],
        "A_{4,5}^{a,-a}",
    );
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ), ps("c23", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14")), (2, 3, v("c23"))],
        ),
        rc(
            "2",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", F), ps("c23", F), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23")), (2, 4, v("c24"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c13", F), ps("c23", F), ps("c34", NZ)],
            vec![],
            vec![(1, 3, v("c13")), (2, 3, v("c23")), (3, 4, v("c34"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", NZ), ps("c13", NZ), ps("c23", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c12", NZ), ps("c23", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23"))],
        ),
        rc(
            "7",
            false,
            vec![ps("c13", NZ), ps("c23", NZ)],
            vec![],
            vec![(1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "8",
            false,
            vec![ps("c12", NZ), ps("c13", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        rc("9", false, vec![ps("c23", NZ)], vec![], vec![(2, 3, v("c23"))]),
        rc("10", false, vec![ps("c12", NZ)], vec![], vec![(1, 2, v("c12"))]),
        rc("11", false, vec![ps("c13", NZ)], vec![], vec![(1, 3, v("c13"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 4, n(-1)), (2, 3, n(1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), z()],
            [-v("n2"), v("n4"), z(), z()],
            [v("n3"), z(), v("n4"), z()],
            [z(), v("n3"), v("n2"), v("n1")],
        ),
        dual: vec![(1, 2, 2, -rn(a)), (1, 3, 3, rn(a)), (1, 4, 4, n(1))],
    };
    let n_classes = vec![
        NClass {
            id: "1".into(),
            params: vec![ps("n1", F), ps("n4", F), ps("n2", NZ), ps("n3", NZ)],
            couplings: vec![],
            matrix: cols4(
                [v("n1"), z(), z(), z()],
                [-v("n2"), v("n4"), z(), z()],
                [v("n3"), z(), v("n4"), z()],
                [z(), v("n3"), v("n2"), v("n1")],
            ),
            note: Some("classes with equal product n2*n3 are equivalent".into()),
        },
        nc(
            "2",
            vec![ps("n1", F), ps("n4", F), ps("c3", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [z(), v("n4"), z(), z()],
                [v("c3"), z(), v("n4"), z()],
                [z(), v("c3"), z(), v("n1")],
            ),
        ),
        nc(
            "3",
            vec![ps("n1", F), ps("n4", F), ps("c2", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [-v("c2"), v("n4"), z(), z()],
                [z(), z(), v("n4"), z()],
                [z(), z(), v("c2"), v("n1")],
            ),
        ),
        nc(
            "4",
            vec![ps("n1", F), ps("n4", F)],
            vec![ne("n1", "n4")],
            cols4(
                [v("n1"), z(), z(), z()],
                [z(), v("n4"), z(), z()],
                [z(), z(), v("n4"), z()],
                [z(), z(), z(), v("n1")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a1", "a4", "a6", "a8", "a11", "a12"],
        vec![
            vec![v("a1"), z(), z(), v("a4")],
            vec![z(), v("a6"), z(), v("a8")],
            vec![z(), z(), v("a11"), v("a12")],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,5}^{a,-a}".into(),
        algebra,
        algebra_params: BTreeMap::from([("a".to_string(), a.clone())]),
        dual_label: "A_{4,5}^{a,-a}.i".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_a45_m1a(a: &Rat) -> CatalogEntry {
    let algebra = alg(
        &[
            (1, 4, 1, one()),
            (2, 4, 2, int(-1)),
            (3, 4, 3, a.clone()),
        ],
        "A_{4,5}^{-1,a}",
    );
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", NZ), ps("c13", F), ps("c23", F), ps("c34", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23")), (3, 4, v("c34"))],
        ),
        rc(
            "2",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", F), ps("c23", F), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23")), (2, 4, v("c24"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c13", F), ps("c23", F), ps("c34", NZ)],
            vec![],
            vec![(1, 3, v("c13")), (2, 3, v("c23")), (3, 4, v("c34"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c12", NZ), ps("c13", NZ), ps("c23", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c12", NZ), ps("c23", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23"))],
        ),
        rc(
            "7",
            false,
            vec![ps("c13", NZ), ps("c23", NZ)],
            vec![],
            vec![(1, 3, v("c13")), (2, 3, v("c23"))],
        ),
        rc(
            "8",
            false,
            vec![ps("c12", NZ), ps("c13", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13"))],
        ),
        rc("9", false, vec![ps("c23", NZ)], vec![], vec![(2, 3, v("c23"))]),
        rc("10", false, vec![ps("c12", NZ)], vec![], vec![(1, 2, v("c12"))]),
        rc("11", false, vec![ps("c13", NZ)], vec![], vec![(1, 3, v("c13"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 2, n(1)), (3, 4, n(-1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        n_matrix: cols4(
            [v("n1"), z(), v("n3"), z()],
            [z(), v("n1"), v("n2"), z()],
            [z(), z(), v("n4"), z()],
            [v("n2"), -v("n3"), z(), v("n4")],
        ),
        dual: vec![(1, 3, 1, n(1)), (2, 3, 2, n(-1)), (3, 4, 4, rn(a))],
    };
    let n_classes = vec![
        NClass {
            id: "1".into(),
            params: vec![ps("n1", F), ps("n4", F), ps("n2", NZ), ps("n3", NZ)],
            couplings: vec![],
            matrix: cols4(
                [v("n1"), z(), v("n3"), z()],
                [z(), v("n1"), v("n2"), z()],
                [z(), z(), v("n4"), z()],
                [v("n2"), -v("n3"), z(), v("n4")],
            ),
            note: Some("classes with equal product n2*n3 are equivalent".into()),
        },
        nc(
            "2",
            vec![ps("n1", F), ps("n4", F), ps("c3", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), v("c3"), z()],
                [z(), v("n1"), z(), z()],
                [z(), z(), v("n4"), z()],
                [z(), -v("c3"), z(), v("n4")],
            ),
        ),
        nc(
            "3",
            vec![ps("n1", F), ps("n4", F), ps("c2", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [z(), v("n1"), v("c2"), z()],
                [z(), z(), v("n4"), z()],
                [v("c2"), z(), z(), v("n4")],
            ),
        ),
        nc(
            "4",
            vec![ps("n1", F), ps("n4", F)],
            vec![ne("n1", "n4")],
            cols4(
                [v("n1"), z(), z(), z()],
                [z(), v("n1"), z(), z()],
                [z(), z(), v("n4"), z()],
                [z(), z(), z(), v("n4")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a1", "a4", "a6", "a8", "a11", "a12"],
        vec![
            vec![v("a1"), z(), z(), v("a4")],
            vec![z(), v("a6"), z(), v("a8")],
            vec![z(), z(), v("a11"), v("a12")],
            vec![z(), z(), z(), n(1)],
        ],
    );
    CatalogEntry {
        id: "A_{4,5}^{-1,a}".into(),
        algebra,
        algebra_params: BTreeMap::from([("a".to_string(), a.clone())]),
        dual_label: "A_{4,5}^{-1,a}.i".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_ii_r() -> CatalogEntry {
    let algebra = alg(&[(2, 3, 1, one())], "II+R");
    let full_wedge = || {
        vec![
            (1, 2, v("c12")),
            (1, 3, v("c13")),
            (1, 4, v("c14")),
            (2, 4, v("c24")),
            (3, 4, v("c34")),
        ]
    };
    let r_classes = vec![
        RClass {
            id: "1a".into(),
            invertible: true,
            params: vec![
                ps("c12", NZ),
                ps("c13", F),
                ps("c14", F),
                ps("c24", F),
                ps("c34", NZ),
            ],
            couplings: vec![],
            wedge: full_wedge(),
            note: Some("first branch of the starred row".into()),
        },
        RClass {
            id: "1b".into(),
            invertible: true,
            params: vec![
                ps("c12", F),
                ps("c13", NZ),
                ps("c14", F),
                ps("c24", NZ),
                ps("c34", F),
            ],
            couplings: vec![],
            wedge: full_wedge(),
            note: Some("second branch of the starred row".into()),
        },
        rc(
            "2",
            false,
            vec![ps("c12", F), ps("c13", F), ps("c14", F)],
            vec![some_nonzero(&["c12", "c13"])],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", F), ps("c14", F), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 4, v("c14")), (2, 4, v("c24"))],
        ),
        rc("4", false, vec![ps("c14", NZ)], vec![], vec![(1, 4, v("c14"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 3, n(1)), (2, 4, n(-1))],
        n_params: vec![
            ps("n1", F),
            ps("n2", F),
            ps("n3", F),
            ps("n4", F),
            ps("n5", F),
        ],
        n_matrix: cols4(
            [v("n1"), z(), z(), v("n5")],
            [-v("n2"), v("n4"), v("n5"), z()],
            [z(), v("n3"), v("n1"), v("n2")],
            [v("n3"), z(), z(), v("n4")],
        ),
        dual: vec![(1, 4, 3, n(1))],
    };
    let n_classes = vec![
        nc(
            "1",
            vec![
                ps("n1", F),
                ps("n3", F),
                ps("n4", F),
                ps("n5", NZ),
                ps("c2", F),
            ],
            vec![ne("n1", "n4")],
            cols4(
                [v("n1"), z(), z(), v("n5")],
                [-v("c2"), v("n4"), v("n5"), z()],
                [z(), v("n3"), v("n1"), v("c2")],
                [v("n3"), z(), z(), v("n4")],
            ),
        ),
        nc(
            "2",
            vec![ps("n1", F), ps("n3", NZ), ps("n5", NZ), ps("c2", F)],
            vec![],
            cols4(
                [v("n1"), z(), z(), v("n5")],
                [-v("c2"), v("n1"), v("n5"), z()],
                [z(), v("n3"), v("n1"), v("c2")],
                [v("n3"), z(), z(), v("n1")],
            ),
        ),
        nc(
            "3",
            vec![ps("n1", F), ps("n5", NZ), ps("c2", F)],
            vec![],
            cols4(
                [v("n1"), z(), z(), v("n5")],
                [-v("c2"), v("n1"), v("n5"), z()],
                [z(), z(), v("n1"), v("c2")],
                [z(), z(), z(), v("n1")],
            ),
        ),
        nc(
            "4",
            vec![ps("n1", F), ps("n4", F), ps("c2", F), ps("c3", F)],
            vec![ne("n1", "n4")],
            cols4(
                [v("n1"), z(), z(), z()],
                [-v("c2"), v("n4"), z(), z()],
                [z(), v("c3"), v("n1"), v("c2")],
                [v("c3"), z(), z(), v("n4")],
            ),
        ),
        nc(
            "5",
            vec![ps("n1", F), ps("c2", F), ps("c3", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [-v("c2"), v("n1"), z(), z()],
                [z(), v("c3"), v("n1"), v("c2")],
                [v("c3"), z(), z(), v("n1")],
            ),
        ),
        nc(
            "6",
            vec![ps("n1", F), ps("c2", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [-v("c2"), v("n1"), z(), z()],
                [z(), z(), v("n1"), v("c2")],
                [z(), z(), z(), v("n1")],
            ),
        ),
    ];
    let automorphism = aut(
        &[
            "a2", "a3", "a4", "a6", "a7", "a10", "a11", "a14", "a15", "a16",
        ],
        vec![
            vec![
                v("a11") * v("a6") - v("a10") * v("a7"),
                v("a2"),
                v("a3"),
                v("a4"),
            ],
            vec![z(), v("a6"), v("a7"), z()],
            vec![z(), v("a10"), v("a11"), z()],
            vec![z(), v("a14"), v("a15"), v("a16")],
        ],
    );
    CatalogEntry {
        id: "II+R".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "(II+R).xiv".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_vi0_r() -> CatalogEntry {
    let algebra = alg(&[(1, 3, 1, one()), (2, 3, 2, int(-1))], "VI0+R");
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", NZ), ps("c14", F), ps("c24", F), ps("c34", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 4, v("c14")), (2, 4, v("c24")), (3, 4, v("c34"))],
        ),
        rc(
            "2",
            false,
            vec![ps("c12", F), ps("c13", NZ), ps("c14", F)],
            vec![],
            vec![(1, 2, v("c12")), (1, 3, v("c13")), (1, 4, v("c14"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", NZ), ps("c14", NZ), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 4, v("c14")), (2, 4, v("c24"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", F), ps("c23", NZ), ps("c24", F)],
            vec![],
            vec![(1, 2, v("c12")), (2, 3, v("c23")), (2, 4, v("c24"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c14", F), ps("c24", F), ps("c34", NZ)],
            vec![],
            vec![(1, 4, v("c14")), (2, 4, v("c24")), (3, 4, v("c34"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c12", NZ), ps("c14", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 4, v("c14"))],
        ),
        rc(
            "7",
            false,
            vec![ps("c14", NZ), ps("c24", NZ)],
            vec![],
            vec![(1, 4, v("c14")), (2, 4, v("c24"))],
        ),
        rc(
            "8",
            false,
            vec![ps("c12", NZ), ps("c24", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (2, 4, v("c24"))],
        ),
        rc("9", false, vec![ps("c12", NZ)], vec![], vec![(1, 2, v("c12"))]),
        rc("10", false, vec![ps("c14", NZ)], vec![], vec![(1, 4, v("c14"))]),
        rc("11", false, vec![ps("c24", NZ)], vec![], vec![(2, 4, v("c24"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 2, n(1)), (3, 4, n(1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), v("n3")],
            [z(), v("n1"), z(), v("n2")],
            [v("n2"), -v("n3"), v("n4"), z()],
            [z(), z(), z(), v("n4")],
        ),
        dual: vec![(1, 4, 1, n(1)), (2, 4, 2, n(-1))],
    };
    let n_classes = vec![
        NClass {
            id: "1".into(),
            params: vec![ps("n1", F), ps("n4", F), ps("n2", NZ), ps("n3", NZ)],
            couplings: vec![],
            matrix: cols4(
                [v("n1"), z(), z(), v("n3")],
                [z(), v("n1"), z(), v("n2")],
                [v("n2"), -v("n3"), v("n4"), z()],
                [z(), z(), z(), v("n4")],
            ),
            note: Some("classes with equal product n2*n3 are equivalent".into()),
        },
        nc(
            "2",
            vec![ps("n1", F), ps("n4", F), ps("c3", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), v("c3")],
                [z(), v("n1"), z(), z()],
                [z(), -v("c3"), v("n4"), z()],
                [z(), z(), z(), v("n4")],
            ),
        ),
        nc(
            "3",
            vec![ps("n1", F), ps("n4", F), ps("c2", NZ)],
            vec![],
            cols4(
                [v("n1"), z(), z(), z()],
                [z(), v("n1"), z(), v("c2")],
                [v("c2"), z(), v("n4"), z()],
                [z(), z(), z(), v("n4")],
            ),
        ),
        nc(
            "4",
            vec![ps("n1", F), ps("n4", F)],
            vec![ne("n1", "n4")],
            cols4(
                [v("n1"), z(), z(), z()],
                [z(), v("n1"), z(), z()],
                [z(), z(), v("n4"), z()],
                [z(), z(), z(), v("n4")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a1", "a3", "a6", "a7", "a15", "a16"],
        vec![
            vec![v("a1"), z(), v("a3"), z()],
            vec![z(), v("a6"), v("a7"), z()],
            vec![z(), z(), n(1), z()],
            vec![z(), z(), v("a15"), v("a16")],
        ],
    );
    CatalogEntry {
        id: "VI0+R".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "(VI0+R).ix".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

fn entry_vii0_r() -> CatalogEntry {
    let algebra = alg(&[(1, 3, 2, int(-1)), (2, 3, 1, one())], "VII0+R");
    let r_classes = vec![
        rc(
            "1",
            true,
            vec![ps("c12", POS), ps("c14", F), ps("c24", F), ps("c34", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 4, v("c14")), (2, 4, v("c24")), (3, 4, v("c34"))],
        ),
        rc(
            "2",
            true,
            vec![ps("c12", NEG), ps("c14", F), ps("c24", F), ps("c34", NZ)],
            vec![],
            vec![(1, 2, v("c12")), (1, 4, v("c14")), (2, 4, v("c24")), (3, 4, v("c34"))],
        ),
        rc(
            "3",
            false,
            vec![ps("c12", POS), ps("c14", F), ps("c24", F)],
            vec![some_nonzero(&["c14", "c24"])],
            vec![(1, 2, v("c12")), (1, 4, v("c14")), (2, 4, v("c24"))],
        ),
        rc(
            "4",
            false,
            vec![ps("c12", NEG), ps("c14", F), ps("c24", F)],
            vec![some_nonzero(&["c14", "c24"])],
            vec![(1, 2, v("c12")), (1, 4, v("c14")), (2, 4, v("c24"))],
        ),
        rc(
            "5",
            false,
            vec![ps("c14", F), ps("c24", F), ps("c34", NZ)],
            vec![],
            vec![(1, 4, v("c14")), (2, 4, v("c24")), (3, 4, v("c34"))],
        ),
        rc(
            "6",
            false,
            vec![ps("c14", F), ps("c24", F)],
            vec![some_nonzero(&["c14", "c24"])],
            vec![(1, 4, v("c14")), (2, 4, v("c24"))],
        ),
        rc("7", false, vec![ps("c12", POS)], vec![], vec![(1, 2, v("c12"))]),
        rc("8", false, vec![ps("c12", NEG)], vec![], vec![(1, 2, v("c12"))]),
    ];
    let rn_family = RnFamily {
        r_params: vec![],
        r_wedge: vec![(1, 2, n(1)), (3, 4, n(1))],
        n_params: vec![ps("n1", F), ps("n2", F), ps("n3", F), ps("n4", F)],
        n_matrix: cols4(
            [v("n1"), z(), z(), v("n3")],
            [z(), v("n1"), z(), v("n2")],
            [v("n2"), -v("n3"), v("n4"), z()],
            [z(), z(), z(), v("n4")],
        ),
        dual: vec![(1, 4, 2, n(1)), (2, 4, 1, n(-1))],
    };
    let n_classes = vec![
        NClass {
            id: "1".into(),
            params: vec![ps("n1", F), ps("n4", F), ps("n2", F), ps("n3", F)],
            couplings: vec![some_nonzero(&["n2", "n3"])],
            matrix: cols4(
                [v("n1"), z(), z(), v("n3")],
                [z(), v("n1"), z(), v("n2")],
                [v("n2"), -v("n3"), v("n4"), z()],
                [z(), z(), z(), v("n4")],
            ),
            note: Some("classes with n2*n3 = 0 are equivalent".into()),
        },
        nc(
            "2",
            vec![ps("n1", F), ps("n4", F)],
            vec![ne("n1", "n4")],
            cols4(
                [v("n1"), z(), z(), z()],
                [z(), v("n1"), z(), z()],
                [z(), z(), v("n4"), z()],
                [z(), z(), z(), v("n4")],
            ),
        ),
    ];
    let automorphism = aut(
        &["a1", "a2", "a3", "a7", "a15", "a16"],
        vec![
            vec![v("a1"), v("a2"), v("a3"), z()],
            vec![-v("a2"), v("a1"), v("a7"), z()],
            vec![z(), z(), n(1), z()],
            vec![z(), z(), v("a15"), v("a16")],
        ],
    );
    CatalogEntry {
        id: "VII0+R".into(),
        algebra,
        algebra_params: BTreeMap::new(),
        dual_label: "(VII0+R).iv".into(),
        r_classes,
        rn_family,
        n_classes,
        automorphism,
    }
}

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

/// Canonical entry identifiers, in table order.
pub fn entry_ids() -> Vec<&'static str> {
    vec![
        "A_{4,1}",
        "A_{4,2}^{-1}",
        "A_{4,3}",
        "A_{4,6}^{a,0}",
        "A_{4,7}",
        "A_{4,9}^{-1/2}",
        "A_{4,9}^{1}",
        "A_{4,9}^{0}",
        "A_{4,9}^{b}",
        "A_{4,11}^{b}",
        "A_{4,12}",
        "A2+A2",
        "A_{4,5}^{-1,-1}",
        "A_{4,5}^{a,-a}",
        "A_{4,5}^{-1,a}",
        "II+R",
        "VI0+R",
        "VII0+R",
    ]
}

/// Builds one entry; `params` overrides the Lie-algebra family parameters
/// (defaults: `a = 1/2`, `b = 1/3` except `b = 1/2` for the `A_{4,11}`
/// family, matching their stated ranges).
pub fn build_entry(id: &str, params: Option<&BTreeMap<String, Rat>>) -> Option<CatalogEntry> {
    let get = |name: &str, default: Rat| -> Rat {
        params
            .and_then(|p| p.get(name))
            .cloned()
            .unwrap_or(default)
    };
    Some(match id {
        "A_{4,1}" => entry_a41(),
        "A_{4,2}^{-1}" => entry_a42(),
        "A_{4,3}" => entry_a43(),
        "A_{4,6}^{a,0}" => entry_a46(&get("a", rat(1, 2))),
        "A_{4,7}" => entry_a47(),
        "A_{4,9}^{-1/2}" => entry_a49_half(),
        "A_{4,9}^{1}" => entry_a49_one(),
        "A_{4,9}^{0}" => entry_a49_zero(),
        "A_{4,9}^{b}" => entry_a49_b(&get("b", rat(1, 3))),
        "A_{4,11}^{b}" => entry_a411(&get("b", rat(1, 2))),
        "A_{4,12}" => entry_a412(),
        "A2+A2" => entry_a2a2(),
        "A_{4,5}^{-1,-1}" => entry_a45_m1m1(),
        "A_{4,5}^{a,-a}" => entry_a45_a_ma(&get("a", rat(1, 2))),
        "A_{4,5}^{-1,a}" => entry_a45_m1a(&get("a", rat(1, 2))),
        "II+R" => entry_ii_r(),
        "VI0+R" => entry_vi0_r(),
        "VII0+R" => entry_vii0_r(),
        _ => return None,
    })
}

/// All 18 entries at their default family parameters, in table order.
pub fn load_catalog() -> Vec<CatalogEntry> {
    entry_ids()
        .into_iter()
        .map(|id| build_entry(id, None).unwrap())
        .collect()
}

/// Draws `count` further instances of a family entry with the family
/// parameter sampled from its stated range (`a != 0`, `0 < |b| < 1`,
/// `b > 0`, `-1 < a < 1` with `a != 0`, as appropriate); entries without
/// parameters return the single default instance.
pub fn sample_entry_variants(id: &str, seed: u64, count: usize) -> Vec<CatalogEntry> {
    let mut sampler = Sampler::new(fnv1a(seed, id));
    let mut out = Vec::new();
    for _ in 0..count {
        let mut params = BTreeMap::new();
        match id {
            "A_{4,6}^{a,0}" => {
                params.insert("a".to_string(), sampler.nonzero_rat(4));
            }
            "A_{4,9}^{b}" => {
                params.insert("b".to_string(), sampler.open_unit_nonzero());
            }
            "A_{4,11}^{b}" => {
                params.insert("b".to_string(), sampler.positive_rat(4));
            }
            "A_{4,5}^{a,-a}" | "A_{4,5}^{-1,a}" => {
                params.insert("a".to_string(), sampler.open_unit_nonzero());
            }
            _ => {
                out.push(build_entry(id, None).unwrap());
                return out;
            }
        }
        out.push(build_entry(id, Some(&params)).unwrap());
    }
    out
}
