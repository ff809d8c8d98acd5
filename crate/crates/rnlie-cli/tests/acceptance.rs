//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `--nocapture`). Every tolerance is exact equality; there
//! are no epsilons anywhere.
//!
//! Criterion 7 includes the pairwise-involution claim for the worked
//! example's three invariants. That sub-criterion is asserted as stated and
//! fails: the three printed invariants are functionally independent of rank
//! 3 on a four-dimensional symplectic space, and no three independent
//! functions there can pairwise commute (a commuting independent family
//! spans an isotropic distribution, capped at rank 2). The exact nonzero
//! bracket is pinned in `integrable`'s unit tests.

use rnlie::catalog::{
    build_entry, instantiate_endo, instantiate_wedge, load_catalog, sample_assignments,
    verify_catalog,
};
use rnlie::equivalence::{
    generic_bivector_matrix, search_witness, symbolic_orbit_r, verify_witness,
    AutomorphismFamily, SearchBudget,
};
use rnlie::integrable::{
    check_involution, classify_integrability, independence_rank_detailed, invariants, lax_matrix,
    sum_hamiltonian, worked_example as ex, Integrability,
};
use rnlie::lie::LieAlgebra;
use rnlie::matrix::Matrix;
use rnlie::parse::parse_polynomial;
use rnlie::pn::{
    check_bi_r_matrix, check_concomitant_matrix, check_cybe_matrix, check_n_compatible,
    check_nijenhuis_matrix, check_r_compatible, check_rn, concomitant, hierarchy, n_from_pair,
    nijenhuis_torsion, schouten_defect, Bivector, Endomorphism, RnStructure,
};
use rnlie::poly::{Poly, VarSet};
use rnlie::rat::Rat;
use rnlie::sample::Sampler;
use std::collections::BTreeMap;
use std::process::Command;
use std::sync::Arc;

fn report(criterion: &str, ok: bool) {
    println!(
        "ACCEPTANCE {criterion}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
}

/// Criterion 1: `catalog verify --seed 1 --samples 5` reports 0 failures
/// across all 18 entries, and corrupting a single structure constant
/// produces at least one reported failure.
#[test]
fn criterion_1_catalog_soundness() {
    let out = Command::new(env!("CARGO_BIN_EXE_rnlie"))
        .args(["catalog", "verify", "--seed", "1", "--samples", "5"])
        .output()
        .expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout);
    let clean = out.status.code() == Some(0)
        && text.contains("18 entries")
        && text.contains("0 failures");

    // Negative control: flip the sign of f^2_{34} in the first entry.
    let mut entry = build_entry("A_{4,1}", None).unwrap();
    entry.algebra = Arc::new(
        LieAlgebra::new(
            4,
            &[(2, 4, 1, Rat::one()), (3, 4, 2, Rat::from_int(-1))],
            Some("A_{4,1} (corrupted)"),
        )
        .unwrap(),
    );
    let corrupted = verify_catalog(&[entry], 1, 5);
    let control = !corrupted.ok();

    report("1 catalog-soundness", clean && control);
    assert!(clean, "catalog verify must be clean:\n{text}");
    assert!(control, "corruption must be flagged");
}

/// Criterion 2: the symbolic orbit on the first entry reproduces the four
/// printed polynomial identities exactly, and the stabilizer system of the
/// invertible representative is identically satisfied by the printed
/// parametrization.
#[test]
fn criterion_2_symbolic_orbit_and_stabilizer() {
    let entry = build_entry("A_{4,1}", None).unwrap();
    let mut names: Vec<String> = entry.automorphism.params.clone();
    names.extend(["r12", "r13", "r14", "r23"].map(String::from));
    let vs = VarSet::new(names);
    let mut m = Matrix::zero_like_entry(4, 4, &Poly::zero(&vs));
    for (r, row) in entry.automorphism.matrix.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            m.set(r, c, e.to_poly(&vs).unwrap());
        }
    }
    let fam = AutomorphismFamily::new(&entry.algebra, vs.clone(), m);
    let generic = generic_bivector_matrix(
        4,
        &vs,
        &[(1, 2, "r12"), (1, 3, "r13"), (1, 4, "r14"), (2, 3, "r23")],
    );
    let orbit = symbolic_orbit_r(&fam, &generic);
    let p = |s: &str| Poly::var(&vs, s);
    let id14 = orbit.at(0, 3) == &p("a11").mul(&p("a16").pow(3)).mul(&p("r14"));
    let id23 = orbit.at(1, 2) == &p("a11").pow(2).mul(&p("a16")).mul(&p("r23"));
    let expected13 = p("a11")
        .mul(&p("r13"))
        .add(&p("a12").mul(&p("r14")))
        .mul(&p("a11"))
        .mul(&p("a16").pow(2))
        .add(&p("a7").mul(&p("a11")).mul(&p("a16")).mul(&p("r23")));
    let id13 = orbit.at(0, 2) == &expected13;
    let expected12 = p("a11")
        .mul(&p("a16"))
        .mul(&p("r12"))
        .add(&p("a7").mul(&p("r13")))
        .add(&p("a8").mul(&p("r14")))
        .mul(&p("a11"))
        .mul(&p("a16").pow(2))
        .add(&p("a7").pow(2).mul(&p("a16")).mul(&p("r23")))
        .sub(&p("a3").mul(&p("a11")).mul(&p("a16")).mul(&p("r23")));
    let id12 = orbit.at(0, 1) == &expected12;

    // Stabilizer: substituting a11 = 1, a16 = 1, a12 = a7, a3 = a7^2 - a8
    // annihilates every equation of A r A^t - r = 0.
    let fam = AutomorphismFamily::from_catalog(&entry).unwrap();
    let r = Bivector::from_wedge(
        &entry.algebra,
        &[(1, 4, Rat::one()), (2, 3, Rat::from_int(-1))],
    )
    .unwrap();
    let eqs = rnlie::equivalence::stabilizer_condition(&fam, &r);
    let fvs = fam.vars().clone();
    let mut bind = BTreeMap::new();
    bind.insert("a11".to_string(), Poly::constant(&fvs, Rat::one()));
    bind.insert("a16".to_string(), Poly::constant(&fvs, Rat::one()));
    bind.insert("a12".to_string(), Poly::var(&fvs, "a7"));
    bind.insert(
        "a3".to_string(),
        Poly::var(&fvs, "a7").pow(2).sub(&Poly::var(&fvs, "a8")),
    );
    let stab = eqs.iter().all(|eq| eq.substitute_polys(&bind).is_zero());

    let ok = id14 && id23 && id13 && id12 && stab;
    report("2 worked-orbit-and-stabilizer", ok);
    assert!(ok);
}

/// Criterion 3: for every invertible representative and at least 20 seeded
/// compatible partners (built as n r from sampled Nijenhuis classes), the
/// bi-r-matrix property holds and the recovered operator passes all four
/// r-n conditions.
#[test]
fn criterion_3_bi_r_and_recovered_operators() {
    let mut ok = true;
    for entry in load_catalog() {
        let r = entry.representative_r();
        assert!(r.is_invertible());
        if check_bi_r_matrix(&r) != Ok(true) {
            ok = false;
            eprintln!("bi-r fails for {}", entry.id);
        }
        let mut partners = 0usize;
        let mut round = 0u64;
        while partners < 20 {
            round += 1;
            for class in &entry.n_classes {
                let label = format!("acc3/{}/{}/{}", entry.id, class.id, round);
                for asg in
                    sample_assignments(&class.params, &class.couplings, 3 + round, &label, 2)
                {
                    let n = instantiate_endo(&entry.algebra, &class.matrix, &asg).unwrap();
                    let partner =
                        Bivector::from_matrix(&entry.algebra, n.matrix().mul(r.matrix()))
                            .unwrap();
                    let recovered = match n_from_pair(&r, &partner) {
                        Ok(n) => n,
                        Err(e) => {
                            ok = false;
                            eprintln!("{}: n_from_pair failed: {e}", entry.id);
                            continue;
                        }
                    };
                    if !check_rn(&r, &recovered).valid() {
                        ok = false;
                        eprintln!("{}: recovered n fails the r-n conditions", entry.id);
                    }
                    partners += 1;
                }
            }
            assert!(round < 20, "sampler failed to produce partners");
        }
    }
    report("3 bi-r-matrix-and-recovery", ok);
    assert!(ok);
}

/// Criterion 4: for every r-n family sample and k <= 4, the hierarchy
/// members n^k r solve the CYBE and are pairwise compatible.
#[test]
fn criterion_4_hierarchy() {
    let mut ok = true;
    for entry in load_catalog() {
        let fam = &entry.rn_family;
        let mut params = fam.r_params.clone();
        params.extend(fam.n_params.iter().cloned());
        let label = format!("acc4/{}", entry.id);
        for asg in sample_assignments(&params, &[], 17, &label, 3) {
            let r = instantiate_wedge(&entry.algebra, &fam.r_wedge, &asg).unwrap();
            let n = instantiate_endo(&entry.algebra, &fam.n_matrix, &asg).unwrap();
            let s = match RnStructure::new(r, n) {
                Ok(s) => s,
                Err(e) => {
                    ok = false;
                    eprintln!("{}: family sample is not an r-n structure: {e}", entry.id);
                    continue;
                }
            };
            // `hierarchy` asserts CYBE, pairwise compatibility and the
            // (r, n^k) conditions internally; re-check CYBE explicitly.
            let members = hierarchy(&s, 4);
            for rk in &members {
                if !check_cybe_matrix(rk) {
                    ok = false;
                }
            }
        }
    }
    report("4 hierarchy", ok);
    assert!(ok);
}

/// Criterion 5: on at least 50 sampled triples (r invertible, r', r'') from
/// the first and the diagonal-action entries, compatibility of the
/// recovered Nijenhuis operators agrees with compatibility of the partner
/// r-matrices in every case.
#[test]
fn criterion_5_compatibility_biconditional() {
    let mut checked = 0usize;
    let mut agreements = 0usize;
    let mut compatible_seen = 0usize;
    let mut incompatible_seen = 0usize;
    for id in ["A_{4,1}", "A_{4,5}^{-1,-1}"] {
        let entry = build_entry(id, None).unwrap();
        let r = entry.representative_r();
        // Partner pool from all Nijenhuis classes.
        let mut pool: Vec<Bivector> = Vec::new();
        for (ci, class) in entry.n_classes.iter().enumerate() {
            let label = format!("acc5/{id}/{ci}");
            for asg in sample_assignments(&class.params, &class.couplings, 29, &label, 4) {
                let n = instantiate_endo(&entry.algebra, &class.matrix, &asg).unwrap();
                pool.push(
                    Bivector::from_matrix(&entry.algebra, n.matrix().mul(r.matrix())).unwrap(),
                );
            }
        }
        for a in 0..pool.len() {
            for b in (a + 1)..pool.len() {
                if checked >= 60 && agreements == checked {
                    break;
                }
                let rp = &pool[a];
                let rpp = &pool[b];
                let np = n_from_pair(&r, rp).unwrap();
                let npp = n_from_pair(&r, rpp).unwrap();
                let n_compat = check_n_compatible(&np, &npp).unwrap();
                let r_compat = check_r_compatible(rp, rpp).unwrap();
                checked += 1;
                if n_compat == r_compat {
                    agreements += 1;
                }
                if r_compat {
                    compatible_seen += 1;
                } else {
                    incompatible_seen += 1;
                }
            }
        }
    }
    let ok = checked >= 50 && agreements == checked;
    println!(
        "  criterion 5 detail: {checked} triples, {compatible_seen} compatible, {incompatible_seen} incompatible"
    );
    report("5 compatibility-biconditional", ok);
    assert!(ok, "{agreements}/{checked} agreements");
}

/// Criterion 6: on at least 100 random bivectors and endomorphisms per
/// catalog algebra, the matrix-form predicates agree with the direct-form
/// tensors with zero discrepancies.
#[test]
fn criterion_6_dual_formulation_oracle() {
    let mut discrepancies = 0usize;
    for entry in load_catalog() {
        let alg = &entry.algebra;
        let mut sampler = Sampler::new(0x6_0000 + alg.dim() as u64 + fxhash(&entry.id));
        for _ in 0..100 {
            let mut m = Matrix::zero(4, 4);
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let c = sampler.rat(3);
                    m.set(i, j, c.clone());
                    m.set(j, i, -&c);
                }
            }
            let r = Bivector::from_matrix(alg, m).unwrap();
            let n = Endomorphism::new(alg, Matrix::from_fn(4, 4, |_, _| sampler.rat(3))).unwrap();
            if check_cybe_matrix(&r) != schouten_defect(&r).is_zero() {
                discrepancies += 1;
            }
            if check_nijenhuis_matrix(&n) != nijenhuis_torsion(&n).is_zero() {
                discrepancies += 1;
            }
            if check_concomitant_matrix(&r, &n) != concomitant(&r, &n).is_zero() {
                discrepancies += 1;
            }
        }
    }
    let ok = discrepancies == 0;
    report("6 dual-formulation-oracle", ok);
    assert!(ok, "{discrepancies} discrepancies");
}

fn fxhash(s: &str) -> u64 {
    s.bytes().fold(0u64, |h, b| {
        h.rotate_left(5).wrapping_add(b as u64).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95)
    })
}

/// Criterion 7 (exact reproductions): the embedded example yields the three
/// printed invariants, the printed subsystem invariants, independence rank
/// 3 with the superintegrable classification, and the summed Hamiltonian
/// with its printed operator sum and higher invariants.
#[test]
fn criterion_7_worked_reproduction() {
    let real = ex::realization();
    let rep = ex::representation();
    let ps = real.phase().clone();
    let pvars = ps.vars().clone();
    let want = |src: &str| parse_polynomial(src, &pvars).unwrap();

    let q = lax_matrix(&real, &ex::base_r(), &rep).unwrap();
    let inv = invariants(&q, 3);
    let main_ok = inv[0] == want("2*x2*x3 - x3 - x4")
        && inv[1] == want("x2^2*x3^2 + (x2*x3 - x3)^2 + x4^2")
        && inv[2] == want("x2^3*x3^3 + (x2*x3 - x3)^3 - x4^3");

    let parts = ex::partners();
    let sub = |idx: usize, k: u32| {
        let q = lax_matrix(&real, &parts[idx], &rep).unwrap();
        invariants(&q, k)
    };
    let sub_ok = sub(0, 1)[0] == want("x2*x3")
        && sub(1, 2) == vec![want("2*x3 - 1/2*x2^2*x3"), want("2*x3^2 + (1/2*x2^2*x3)^2")]
        && sub(2, 2)
            == vec![
                want("x3 - 1/2*x2^2*x3 - x4"),
                want("x3^2 + (1/2*x2^2*x3 + x4)^2"),
            ]
        && sub(3, 1)[0] == want("2*x2*x3");

    let (rank, stable) = independence_rank_detailed(&ps, &inv, 5, 7).unwrap();
    let rank_ok = rank == 3 && stable;
    let class_ok = classify_integrability(&ps, &inv, 5, 7).unwrap()
        == Integrability::Superintegrable {
            extra: 1,
            maximal: true,
        };

    let sum = sum_hamiltonian(&real, &rep, &ex::base_r(), &parts).unwrap();
    let n_expected = Matrix::from_i64_rows(vec![
        vec![1, 2, 1, 0],
        vec![0, 1, 0, 1],
        vec![0, 0, 1, -2],
        vec![0, 0, 0, 1],
    ]);
    let r_sum = Bivector::from_matrix(
        real.algebra(),
        sum.n_sum.matrix().mul(ex::base_r().matrix()),
    )
    .unwrap();
    let sum_inv = invariants(&lax_matrix(&real, &r_sum, &rep).unwrap(), 3);
    let sum_ok = sum.consistent
        && sum.h == want("3*x3 + 3*x2*x3 - x2^2*x3 - x4")
        && sum.n_sum.matrix() == &n_expected
        && sum_inv[1]
            == want("(x2*x3 + 2*x3)^2 + (x2*x3 + x3)^2 + (x2*x3 - x4 - x2^2*x3)^2")
        && sum_inv[2]
            == want("(x2*x3 + 2*x3)^3 + (x2*x3 + x3)^3 + (x2*x3 - x4 - x2^2*x3)^3");

    let ok = main_ok && sub_ok && rank_ok && class_ok && sum_ok;
    report("7 worked-reproduction (exact polynomials, rank, sum system)", ok);
    assert!(main_ok, "main invariants");
    assert!(sub_ok, "subsystem invariants");
    assert!(rank_ok, "independence rank");
    assert!(class_ok, "classification");
    assert!(sum_ok, "sum Hamiltonian");
}

/// Criterion 7 (involution sub-criterion), asserted as stated. This fails:
/// three functionally independent invariants on a four-dimensional
/// symplectic space cannot pairwise Poisson-commute, and the exact brackets
/// of the printed invariants are nonzero. The failure is recorded, not
/// worked around; see the module-level note.
#[test]
fn criterion_7_involution_as_stated() {
    let real = ex::realization();
    let rep = ex::representation();
    let ps = real.phase().clone();
    let q = lax_matrix(&real, &ex::base_r(), &rep).unwrap();
    let inv = invariants(&q, 3);
    let failures = check_involution(&ps, &inv).unwrap();
    let ok = failures.is_empty();
    report("7 involution-of-main-invariants (as stated)", ok);
    assert!(
        ok,
        "the printed invariants are not pairwise in involution; first nonzero bracket {{I_{}, I_{}}} = {}",
        failures[0].0, failures[0].1, failures[0].2
    );
}

/// Criterion 8: the search connects the same-sign class within the stated
/// budget, returns not-found on the opposite-sign pair, and every returned
/// witness passes exact re-verification.
#[test]
fn criterion_8_search_sanity() {
    let entry = build_entry("A_{4,1}", None).unwrap();
    let alg = entry.algebra.clone();
    let fam = AutomorphismFamily::from_catalog(&entry).unwrap();
    let wedge = |terms: &[(usize, usize, i64)]| {
        Bivector::from_wedge(
            &alg,
            &terms
                .iter()
                .map(|(i, j, c)| (*i, *j, Rat::from_int(*c)))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    };
    let budget = SearchBudget {
        max_candidates: 10_000,
        ..SearchBudget::default()
    };
    let r = wedge(&[(1, 2, 1), (1, 3, 1)]);
    let r2 = wedge(&[(1, 2, 1), (1, 3, 4)]);
    let found = search_witness(&fam, &r, &r2, None, &budget);
    let same_ok = match &found {
        Some(w) => verify_witness(&alg, &w.matrix, &r, &r2, None).unwrap(),
        None => false,
    };
    let plus = wedge(&[(1, 3, 1)]);
    let minus = wedge(&[(1, 3, -1)]);
    let not_found = search_witness(&fam, &plus, &minus, None, &budget).is_none();
    let ok = same_ok && not_found;
    report("8 search-sanity", ok);
    assert!(same_ok, "same-class witness not found or not verified");
    assert!(not_found, "opposite-sign classes must not connect");
}
