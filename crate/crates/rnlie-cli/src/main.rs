//! Command-line front end: structured-text I/O for algebras, r-matrices,
//! Nijenhuis operators, r-n structures, the embedded catalog and the
//! integrable-systems pipeline.
//!
//! Exit codes: 0 = all checks pass / witness found; 1 = a mathematical check
//! failed / no witness found; 2 = input or usage error.

use clap::{Args, Parser, Subcommand};
use rnlie::catalog::{self, CatalogEntry};
use rnlie::document::{
    self, algebra_section, bivector_from, endomorphism_from, n_section, r_section, Document,
};
use rnlie::equivalence::{
    search_witness, verify_witness, AutomorphismFamily, SearchBudget,
};
use rnlie::integrable::{
    check_involution, check_realization, check_representation, classify_integrability,
    independence_rank_detailed, invariants, lax_matrix, Integrability, Realization,
    Representation,
};
use rnlie::lie::LieAlgebra;
use rnlie::pn::{
    check_n_compatible, check_r_compatible, check_rn, check_rn_compatible,
    cybe_matrix_lhs, hierarchy, n_from_pair, nijenhuis_torsion, sklyanin_dual, Bivector,
    Endomorphism, RnStructure,
};
use rnlie::rat::Rat;
use serde_json::json;
use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "rnlie",
    about = "Exact verification and construction of r-matrices and r-n structures on real Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit a machine-readable JSON report instead of the human rendering.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity of an algebra document.
    VerifyAlgebra {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check that the r section solves the classical Yang-Baxter equation.
    VerifyR {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check that the n section is a Nijenhuis operator.
    VerifyN {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check all four r-n conditions of the (r, n) pair.
    VerifyRn {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print the dual structure constants of the Sklyanin bracket.
    Dual {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print the hierarchy r_k = n^k r for k = 1..K.
    Hierarchy {
        file: String,
        #[arg(long, short)]
        k: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Compatibility of the two documents' contents (r-r, n-n or rn-rn).
    Compat {
        file1: String,
        file2: String,
        #[command(flatten)]
        common: Common,
    },
    /// Recover n = r2 o r^{-1} from a compatible pair of r-matrices.
    ConstructN {
        file_r: String,
        file_r2: String,
        #[command(flatten)]
        common: Common,
    },
    /// Equivalence of two objects under a supplied or searched automorphism.
    Equiv {
        file1: String,
        file2: String,
        /// Document carrying an automorphism section to verify.
        #[arg(long)]
        witness: Option<String>,
        /// Search for a witness in the algebra's automorphism family.
        #[arg(long)]
        search: bool,
        /// Candidate budget for the search.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Catalog entry supplying the automorphism family (defaults to the
        /// algebra name of the first document).
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the realization / representation / Lax / involution /
    /// independence pipeline.
    Invariants {
        file: String,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        #[arg(long, default_value_t = 5)]
        trials: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the catalog entry identifiers.
    List {
        #[command(flatten)]
        common: Common,
    },
    /// Emit one entry as a round-trippable document.
    Show {
        entry: String,
        #[command(flatten)]
        common: Common,
    },
    /// Replay the full verification harness over every entry.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_doc(path: &str) -> Result<Document, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    Document::parse(&text).map_err(|e| format!("{path}: {e}"))
}

fn need_algebra(doc: &Document, path: &str) -> Result<Arc<LieAlgebra>, String> {
    let sec = doc
        .algebra
        .as_ref()
        .ok_or_else(|| format!("{path}: missing `algebra` section"))?;
    document::algebra_from(sec).map_err(|e| format!("{path}: {e}"))
}

fn need_r(doc: &Document, alg: &Arc<LieAlgebra>, path: &str) -> Result<Bivector, String> {
    let sec = doc
        .r
        .as_ref()
        .ok_or_else(|| format!("{path}: missing `r` section"))?;
    bivector_from(alg, sec).map_err(|e| format!("{path}: {e}"))
}

fn need_n(doc: &Document, alg: &Arc<LieAlgebra>, path: &str) -> Result<Endomorphism, String> {
    let sec = doc
        .n
        .as_ref()
        .ok_or_else(|| format!("{path}: missing `n` section"))?;
    endomorphism_from(alg, sec).map_err(|e| format!("{path}: {e}"))
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit(json_mode: bool, report: &serde_json::Value, human: &str) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
    } else {
        print!("{human}");
    }
}

fn run(cmd: Command) -> Result<ExitCode, String> {
    match cmd {
        Command::VerifyAlgebra { file, common } => {
            let doc = read_doc(&file)?;
            let alg = need_algebra(&doc, &file)?;
            let defects = alg.check_jacobi();
            let ok = defects.is_empty();
            let mut human = String::new();
            for d in &defects {
                human.push_str(&format!(
                    "jacobi defect at ({},{},{},{}): {}\n",
                    d.i, d.j, d.k, d.l, d.defect
                ));
            }
            human.push_str(&format!("jacobi: {}\n", pass_fail(ok)));
            let report = json!({
                "check": "jacobi",
                "ok": ok,
                "defects": defects.iter().map(|d| json!({
                    "indices": [d.i, d.j, d.k, d.l],
                    "defect": d.defect.to_string(),
                })).collect::<Vec<_>>(),
            });
            emit(common.json, &report, &human);
            Ok(verdict(ok))
        }
        Command::VerifyR { file, common } => {
            let doc = read_doc(&file)?;
            let alg = need_algebra(&doc, &file)?;
            let r = need_r(&doc, &alg, &file)?;
            let adj = alg.adjoint_matrices();
            let lhs = cybe_matrix_lhs(&adj.x, &adj.y, r.matrix());
            let failing: Vec<usize> = lhs
                .iter()
                .enumerate()
                .filter(|(_, m)| !m.is_zero())
                .map(|(i, _)| i + 1)
                .collect();
            let ok = failing.is_empty();
            let human = if ok {
                "cybe: pass\n".to_string()
            } else {
                format!(
                    "cybe: FAIL (first failing matrix equation: i = {})\n",
                    failing[0]
                )
            };
            let report = json!({
                "check": "cybe",
                "ok": ok,
                "failing_equations": failing,
            });
            emit(common.json, &report, &human);
            Ok(verdict(ok))
        }
        Command::VerifyN { file, common } => {
            let doc = read_doc(&file)?;
            let alg = need_algebra(&doc, &file)?;
            let n = need_n(&doc, &alg, &file)?;
            let torsion = nijenhuis_torsion(&n);
            let ok = torsion.is_zero();
            let mut human = String::new();
            for (i, j, k, val) in torsion.nonzero_entries().iter().take(8) {
                human.push_str(&format!("torsion({i},{j})^{k} = {val}\n"));
            }
            human.push_str(&format!("nijenhuis: {}\n", pass_fail(ok)));
            let report = json!({
                "check": "nijenhuis",
                "ok": ok,
                "nonzero_torsion_entries": torsion.nonzero_entries().iter().map(|(i,j,k,v)| json!({
                    "indices": [i, j, k],
                    "value": v.to_string(),
                })).collect::<Vec<_>>(),
            });
            emit(common.json, &report, &human);
            Ok(verdict(ok))
        }
        Command::VerifyRn { file, common } => {
            let doc = read_doc(&file)?;
            let alg = need_algebra(&doc, &file)?;
            let r = need_r(&doc, &alg, &file)?;
            let n = need_n(&doc, &alg, &file)?;
            let rep = check_rn(&r, &n);
            let human = format!
                ("cybe: {}\ntorsion: {}\nintertwine: {}\nconcomitant: {}\nr-n structure: {}\n",
                pass_fail(rep.cybe),
                pass_fail(rep.torsion),
                pass_fail(rep.intertwine),
                pass_fail(rep.concomitant),
                pass_fail(rep.valid()),
            );
            let report = json!({
                "check": "rn",
                "ok": rep.valid(),
                "conditions": {
                    "cybe": rep.cybe,
                    "torsion": rep.torsion,
                    "intertwine": rep.intertwine,
                    "concomitant": rep.concomitant,
                },
            });
            emit(common.json, &report, &human);
            Ok(verdict(rep.valid()))
        }
        Command::Dual { file, common } => {
            let doc = read_doc(&file)?;
            let alg = need_algebra(&doc, &file)?;
            let r = need_r(&doc, &alg, &file)?;
            let out = sklyanin_dual(&r);
            let d = alg.dim();
            let mut constants = Vec::new();
            for i in 1..=d {
                for j in (i + 1)..=d {
                    for k in 1..=d {
                        let c = out.dual.f(i, j, k);
                        if !c.is_zero() {
                            constants.push((i, j, k, c.clone()));
                        }
                    }
                }
            }
            let mut human = String::new();
            for (i, j, k, c) in &constants {
                human.push_str(&format!("f~^{{{i}{j}}}_{k} = {c}\n"));
            }
            human.push_str(&format!(
                "dual satisfies jacobi: {}\n",
                pass_fail(out.is_lie)
            ));
            let report = json!({
                "check": "dual",
                "ok": out.is_lie,
                "constants": constants.iter().map(|(i,j,k,c)| json!([i, j, k, c.to_string()])).collect::<Vec<_>>(),
            });
            emit(common.json, &report, &human);
            Ok(verdict(out.is_lie))
        }
        Command::Hierarchy { file, k, common } => {
            if k < 1 {
                return Err("--k must be at least 1".into());
            }
            let doc = read_doc(&file)?;
            let alg = need_algebra(&doc, &file)?;
            let r = need_r(&doc, &alg, &file)?;
            let n = need_n(&doc, &alg, &file)?;
            let s = RnStructure::new(r, n).map_err(|e| format!("{file}: {e}"))?;
            let members = hierarchy(&s, k);
            let mut human = String::new();
            let mut items = Vec::new();
            for (idx, rk) in members.iter().enumerate() {
                let sec = r_section(rk);
                human.push_str(&format!("r_{}: {}\n", idx + 1, serde_json::to_string(&sec.wedge).unwrap()));
                items.push(json!({"k": idx + 1, "wedge": sec.wedge}));
            }
            human.push_str("hierarchy: pass\n");
            let report = json!({"check": "hierarchy", "ok": true, "members": items});
            emit(common.json, &report, &human);
            Ok(ExitCode::SUCCESS)
        }
        Command::Compat {
            file1,
            file2,
            common,
        } => {
            let doc1 = read_doc(&file1)?;
            let doc2 = read_doc(&file2)?;
            let alg = need_algebra(&doc1, &file1)?;
            if let Some(sec) = &doc2.algebra {
                let alg2 = document::algebra_from(sec).map_err(|e| format!("{file2}: {e}"))?;
                if *alg2 != *alg {
                    return Err("documents carry different algebras".into());
                }
            }
            let kind;
            let ok = match (
                (&doc1.r, &doc1.n),
                (&doc2.r, &doc2.n),
            ) {
                ((Some(_), Some(_)), (Some(_), Some(_))) => {
                    kind = "rn-rn";
                    let s1 = RnStructure::new(
                        need_r(&doc1, &alg, &file1)?,
                        need_n(&doc1, &alg, &file1)?,
                    )
                    .map_err(|e| format!("{file1}: {e}"))?;
                    let s2 = RnStructure::new(
                        need_r(&doc2, &alg, &file2)?,
                        need_n(&doc2, &alg, &file2)?,
                    )
                    .map_err(|e| format!("{file2}: {e}"))?;
                    check_rn_compatible(&s1, &s2).map_err(|e| e.to_string())?
                }
                ((Some(_), None), (Some(_), None)) => {
                    kind = "r-r";
                    let r1 = need_r(&doc1, &alg, &file1)?;
                    let r2 = need_r(&doc2, &alg, &file2)?;
                    check_r_compatible(&r1, &r2).map_err(|e| e.to_string())?
                }
                ((None, Some(_)), (None, Some(_))) => {
                    kind = "n-n";
                    let n1 = need_n(&doc1, &alg, &file1)?;
                    let n2 = need_n(&doc2, &alg, &file2)?;
                    check_n_compatible(&n1, &n2).map_err(|e| e.to_string())?
                }
                _ => {
                    return Err(
                        "documents must both carry r, both carry n, or both carry (r, n)".into(),
                    )
                }
            };
            let human = format!("compatibility ({kind}): {}\n", pass_fail(ok));
            let report = json!({"check": "compat", "kind": kind, "ok": ok});
            emit(common.json, &report, &human);
            Ok(verdict(ok))
        }
        Command::ConstructN {
            file_r,
            file_r2,
            common,
        } => {
            let doc1 = read_doc(&file_r)?;
            let doc2 = read_doc(&file_r2)?;
            let alg = need_algebra(&doc1, &file_r)?;
            let r = need_r(&doc1, &alg, &file_r)?;
            let r2 = need_r(&doc2, &alg, &file_r2)?;
            let n = n_from_pair(&r, &r2).map_err(|e| e.to_string())?;
            let out = Document {
                algebra: Some(algebra_section(&alg)),
                n: Some(n_section(&n)),
                ..Document::default()
            };
            if common.json {
                println!("{}", out.print());
            } else {
                print!("{}", out.print());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv {
            file1,
            file2,
            witness,
            search,
            budget,
            seed,
            family,
            common,
        } => {
            let doc1 = read_doc(&file1)?;
            let doc2 = read_doc(&file2)?;
            let alg = need_algebra(&doc1, &file1)?;
            let r1 = need_r(&doc1, &alg, &file1)?;
            let r2 = need_r(&doc2, &alg, &file2)?;
            let n1 = doc1
                .n
                .as_ref()
                .map(|sec| endomorphism_from(&alg, sec))
                .transpose()
                .map_err(|e| format!("{file1}: {e}"))?;
            let n2 = doc2
                .n
                .as_ref()
                .map(|sec| endomorphism_from(&alg, sec))
                .transpose()
                .map_err(|e| format!("{file2}: {e}"))?;
            if n1.is_some() != n2.is_some() {
                return Err("either both documents carry n or neither does".into());
            }
            let n_pair = n1.as_ref().zip(n2.as_ref());

            if let Some(wfile) = witness {
                let wdoc = read_doc(&wfile)?;
                let m = witness_matrix(&wdoc, &alg, &wfile)?;
                let ok = verify_witness(&alg, &m, &r1, &r2, n_pair)
                    .map_err(|e| e.to_string())?;
                let human = format!("witness verification: {}\n", pass_fail(ok));
                let report = json!({"check": "equiv", "mode": "witness", "ok": ok});
                emit(common.json, &report, &human);
                return Ok(verdict(ok));
            }
            if !search {
                return Err("pass --witness FILE or --search".into());
            }
            let entry = resolve_family(&alg, family.as_deref())?;
            let fam = AutomorphismFamily::from_catalog(&entry).map_err(|e| e.to_string())?;
            let search_budget = SearchBudget {
                seed,
                max_candidates: budget,
                ..SearchBudget::default()
            };
            match search_witness(&fam, &r1, &r2, n_pair, &search_budget) {
                Some(w) => {
                    let asg: BTreeMap<String, String> = w
                        .assignment
                        .iter()
                        .map(|(k, v)| (k.clone(), v.to_string()))
                        .collect();
                    let human = format!(
                        "witness found: {}\n",
                        serde_json::to_string(&asg).unwrap()
                    );
                    let report = json!({
                        "check": "equiv",
                        "mode": "search",
                        "ok": true,
                        "assignment": asg,
                    });
                    emit(common.json, &report, &human);
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    let human = format!("no witness found (budget {budget})\n");
                    let report = json!({
                        "check": "equiv",
                        "mode": "search",
                        "ok": false,
                        "budget": budget,
                    });
                    emit(common.json, &report, &human);
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Catalog { action } => run_catalog(action),
        Command::Invariants {
            file,
            kmax,
            trials,
            seed,
            common,
        } => {
            if kmax < 1 {
                return Err("--kmax must be at least 1".into());
            }
            let doc = read_doc(&file)?;
            let alg = need_algebra(&doc, &file)?;
            let r = need_r(&doc, &alg, &file)?;
            let ps_sec = doc
                .phase_space
                .as_ref()
                .ok_or_else(|| format!("{file}: missing `phase_space` section"))?;
            let phase = document::phase_space_from(ps_sec).map_err(|e| format!("{file}: {e}"))?;
            let real_sec = doc
                .realization
                .as_ref()
                .ok_or_else(|| format!("{file}: missing `realization` section"))?;
            let s = document::realization_polys(phase.vars(), real_sec)
                .map_err(|e| format!("{file}: {e}"))?;
            let rep_sec = doc
                .representation
                .as_ref()
                .ok_or_else(|| format!("{file}: missing `representation` section"))?;
            let t =
                document::representation_matrices(rep_sec).map_err(|e| format!("{file}: {e}"))?;

            let mut human = String::new();
            let real_report =
                check_realization(&phase, &alg, &s).map_err(|e| e.to_string())?;
            human.push_str(&format!("realization: {}\n", pass_fail(real_report.ok())));
            if !real_report.ok() && real_report.sign_flip_fixes {
                human.push_str(
                    "  note: a global bracket sign flip would fix every failing pair\n",
                );
            }
            let rep_defects = check_representation(&alg, &t).map_err(|e| e.to_string())?;
            human.push_str(&format!(
                "representation: {}\n",
                pass_fail(rep_defects.is_empty())
            ));
            for d in &rep_defects {
                human.push_str(&format!("  failing pair ({}, {})\n", d.i, d.j));
            }
            // The pipeline continues regardless, reporting what the data
            // yields.
            let real = Realization::new(phase.clone(), &alg, s.clone());
            let rep = Representation::new(&alg, t);
            let (q, inv) = match (&real, &rep) {
                (Ok(real), Ok(rep)) => {
                    let q = lax_matrix(real, &r, rep).map_err(|e| e.to_string())?;
                    let inv = invariants(&q, kmax);
                    (q, inv)
                }
                _ => {
                    // The realization is a hard precondition for Q.
                    return Err(format!(
                        "{file}: realization invalid; cannot build the Lax matrix"
                    ));
                }
            };
            let _ = q;
            let mut inv_strings = Vec::new();
            for (i, p) in inv.iter().enumerate() {
                human.push_str(&format!("I_{} = {}\n", i + 1, p));
                inv_strings.push(p.to_string());
            }
            let inv_failures = check_involution(&phase, &inv).map_err(|e| e.to_string())?;
            human.push_str(&format!(
                "involution: {}\n",
                pass_fail(inv_failures.is_empty())
            ));
            for (a, b, br) in &inv_failures {
                human.push_str(&format!("  {{I_{a}, I_{b}}} = {br}\n"));
            }
            let (rank, stable) =
                independence_rank_detailed(&phase, &inv, trials, seed).map_err(|e| e.to_string())?;
            human.push_str(&format!(
                "independence rank: {rank}{}\n",
                if stable { "" } else { " (UNSTABLE: rank still growing)" }
            ));
            let class = classify_integrability(&phase, &inv, trials, seed)
                .map_err(|e| e.to_string())?;
            let class_str = match &class {
                Integrability::UnderDetermined => "under-determined".to_string(),
                Integrability::Liouville => "Liouville-integrable".to_string(),
                Integrability::Superintegrable { extra, maximal } => format!(
                    "superintegrable(extra={extra}{})",
                    if *maximal { ", maximal" } else { "" }
                ),
            };
            human.push_str(&format!("classification: {class_str}\n"));
            let ok = real_report.ok() && rep_defects.is_empty() && inv_failures.is_empty();
            human.push_str(&format!("pipeline: {}\n", pass_fail(ok)));
            let report = json!({
                "check": "invariants",
                "ok": ok,
                "realization_ok": real_report.ok(),
                "representation_ok": rep_defects.is_empty(),
                "invariants": inv_strings,
                "involution_failures": inv_failures.iter().map(|(a, b, br)| json!({
                    "pair": [a, b],
                    "bracket": br.to_string(),
                })).collect::<Vec<_>>(),
                "independence_rank": rank,
                "rank_stable": stable,
                "classification": class_str,
            });
            emit(common.json, &report, &human);
            Ok(verdict(ok))
        }
    }
}

fn witness_matrix(
    doc: &Document,
    alg: &Arc<LieAlgebra>,
    path: &str,
) -> Result<rnlie::Matrix<Rat>, String> {
    let sec = doc
        .automorphism
        .as_ref()
        .ok_or_else(|| format!("{path}: missing `automorphism` section"))?;
    if let Some(rows) = &sec.matrix {
        return document::matrix_from(rows).map_err(|e| format!("{path}: {e}"));
    }
    let family = sec
        .family
        .as_ref()
        .ok_or_else(|| format!("{path}: automorphism needs `matrix` or `family`"))?;
    let entry = resolve_family(alg, Some(family))?;
    let fam = AutomorphismFamily::from_catalog(&entry).map_err(|e| e.to_string())?;
    let assignment: BTreeMap<String, Rat> = sec
        .assignment
        .as_ref()
        .map(|m| {
            m.iter()
                .map(|(k, v)| Ok((k.clone(), document::parse_rat(v).map_err(|e| e.to_string())?)))
                .collect::<Result<_, String>>()
        })
        .transpose()?
        .unwrap_or_default();
    fam.instantiate(&assignment).map_err(|e| e.to_string())
}

/// Finds the catalog entry carrying the automorphism family for `alg`,
/// either by explicit id or by the algebra's name, and checks the structure
/// constants agree.
fn resolve_family(alg: &Arc<LieAlgebra>, id: Option<&str>) -> Result<CatalogEntry, String> {
    let id = match id {
        Some(id) => id.to_string(),
        None => alg
            .name()
            .map(|s| s.to_string())
            .ok_or("algebra has no name; pass --family ENTRY")?,
    };
    let entry = catalog::build_entry(&id, None)
        .ok_or_else(|| format!("unknown catalog entry `{id}`"))?;
    let d = alg.dim();
    if entry.algebra.dim() != d {
        return Err(format!("entry `{id}` has different dimension"));
    }
    for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                if entry.algebra.f(i, j, k) != alg.f(i, j, k) {
                    return Err(format!(
                        "structure constants differ from catalog entry `{id}` at ({i},{j},{k})"
                    ));
                }
            }
        }
    }
    Ok(entry)
}

fn run_catalog(action: CatalogAction) -> Result<ExitCode, String> {
    match action {
        CatalogAction::List { common } => {
            let ids = catalog::entry_ids();
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "entries": ids })).unwrap()
                );
            } else {
                for id in ids {
                    println!("{id}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        CatalogAction::Show { entry, common } => {
            let e = catalog::build_entry(&entry, None)
                .ok_or_else(|| format!("unknown catalog entry `{entry}`"))?;
            // Emit the algebra, the invertible representative and the
            // Nijenhuis family member at all parameters = 1, which
            // round-trips as input for every verification subcommand.
            let ones: BTreeMap<String, Rat> = e
                .rn_family
                .r_params
                .iter()
                .chain(e.rn_family.n_params.iter())
                .map(|p| (p.name.clone(), Rat::one()))
                .collect();
            let r = catalog::instantiate_wedge(&e.algebra, &e.rn_family.r_wedge, &ones)
                .map_err(|err| format!("{entry}: {err}"))?;
            let n = catalog::instantiate_endo(&e.algebra, &e.rn_family.n_matrix, &ones)
                .map_err(|err| format!("{entry}: {err}"))?;
            let doc = Document {
                algebra: Some(algebra_section(&e.algebra)),
                r: Some(r_section(&r)),
                n: Some(n_section(&n)),
                ..Document::default()
            };
            let _ = common;
            println!("{}", doc.print());
            Ok(ExitCode::SUCCESS)
        }
        CatalogAction::Verify {
            seed,
            samples,
            common,
        } => {
            if samples < 1 {
                return Err("--samples must be at least 1".into());
            }
            let entries = catalog::load_catalog();
            let report = catalog::verify_catalog(&entries, seed, samples);
            if common.json {
                let failures: Vec<serde_json::Value> = report
                    .failures
                    .iter()
                    .map(|f| {
                        json!({
                            "entry": f.entry,
                            "section": f.section,
                            "class": f.class,
                            "assignment": f.assignment,
                            "check": f.check,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "check": "catalog",
                        "ok": report.ok(),
                        "entries": report.entries,
                        "checks": report.checks,
                        "failures": failures,
                    }))
                    .unwrap()
                );
            } else {
                print!("{}", report.render());
            }
            Ok(verdict(report.ok()))
        }
    }
}
