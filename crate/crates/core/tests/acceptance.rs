//! Acceptance criteria 1-10, one PASS/FAIL line each. Runs as a plain
//! binary so the lines are always shown; exits nonzero if any fails.

use std::time::{Duration, Instant};

use sl5susy::e510::{coadjoint_generator_spectrum, gamma_identity_check, graded_dimension_crosscheck, jacobi_trials};
use sl5susy::koszul::{
    grading_sign_check, minimal_orbit_series, orbit_series_identities, peel_levels, verify_free_generation,
};
use sl5susy::liecore::{sl5, Weight};
use sl5susy::pscohomology::{
    euler_characteristic_crosscheck, lambda_quotient_basis, superspace_operator_check, zero_mode_cohomology, FieldKind,
};
use sl5susy::repring::VirtualModule;

type Outcome = Result<String, String>;

fn module(s: &str) -> VirtualModule {
    VirtualModule::parse(&sl5(), s).expect("valid module")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn level_decomposition() -> Outcome {
    let expected = ["(0010)", "(1000)", "(0001)", "(0100)", "(1001)", "(0002)+(1100)"];
    let start = Instant::now();
    let levels = peel_levels(&minimal_orbit_series(8), 8).map_err(err)?;
    let elapsed = start.elapsed();
    for (p, want) in (1..).zip(expected) {
        let got = levels.level(p).ok_or(format!("level {p} missing"))?;
        ensure(*got == module(want), || format!("level {p}: {got}, expected {want}"))?;
    }
    ensure(elapsed < Duration::from_secs(30), || format!("peeling to level 8 took {elapsed:?}"))?;
    Ok(format!("levels 1-6 exact; peeled to level 8 in {elapsed:.2?}"))
}

fn free_generation() -> Outcome {
    let report = verify_free_generation(10).map_err(err)?;
    ensure(report.levels.len() == 8, || format!("compared {} levels", report.levels.len()))?;
    ensure(report.passed(), || format!("level {:?} differs", report.first_failure()))?;
    Ok("peeled levels 3-10 equal the free superalgebra on the coadjoint spectrum".into())
}

fn series_identities() -> Outcome {
    let ids = orbit_series_identities(10).map_err(err)?;
    for id in &ids {
        ensure(id.passed() && id.comparison.truncation == 10, || format!("{}: {}", id.name, id.comparison))?;
    }
    Ok(format!("{} identities hold coefficient-wise to t^10", ids.len()))
}

fn cohomology_tables() -> Outcome {
    let expected: [(FieldKind, &[(usize, usize, &str)]); 3] = [
        (FieldKind::Scalar, &[(0, 0, "(0000)"), (1, 1, "(1000)"), (1, 2, "(0001)"), (2, 3, "(0000)")]),
        (FieldKind::Vector, &[(0, 0, "(0001)"), (0, 1, "(0100)"), (1, 2, "(0010)"), (1, 3, "(1000)")]),
        (
            FieldKind::Oneform,
            &[(0, 0, "(1000)"), (0, 1, "(0001)"), (1, 1, "(2000)"), (1, 2, "(0000)+(1001)"), (1, 3, "(0010)")],
        ),
    ];
    let mut blocks = 0;
    for (field, cells) in expected {
        let table = zero_mode_cohomology(&field.spec(), 10).map_err(err)?;
        blocks += table.stats.blocks;
        let got: Vec<(usize, usize, VirtualModule)> = table.nonzero().map(|(&(g, k), m)| (g, k, m.clone())).collect();
        let want: Vec<(usize, usize, VirtualModule)> = cells.iter().map(|&(g, k, m)| (g, k, module(m))).collect();
        ensure(got == want, || format!("{field}: got {got:?}"))?;
        let smaller = zero_mode_cohomology(&field.spec(), 8).map_err(err)?;
        ensure(smaller.cells == table.cells, || format!("{field}: n_max 8 and 10 tables differ"))?;
        if field == FieldKind::Scalar {
            let euler = euler_characteristic_crosscheck(&table, 10).map_err(err)?;
            ensure(euler.passed(), || format!("Euler characteristic: {}", euler.comparison))?;
        }
    }
    Ok(format!("scalar, vector and 1-form tables exact to total degree 10 ({blocks} weight blocks); Euler characteristic matches to t^10"))
}

fn pairing() -> Outcome {
    let levels = peel_levels(&minimal_orbit_series(6), 6).map_err(err)?;
    let r = |p: i64| levels.level(p).cloned().ok_or(format!("level {p} missing"));
    let conj6 = r(6)?.conjugate();
    ensure(conj6 == module("(2000)+(0011)"), || format!("conj(R_6) = {conj6}"))?;
    for p in 1..=4 {
        ensure(r(5 - p)?.conjugate() == r(p)?, || format!("conj(R_{}) != R_{p}", 5 - p))?;
    }
    Ok(format!("conj(R_6) = {conj6}; conj(R_(5-p)) = R_p for p = 1..4"))
}

fn e510_realization() -> Outcome {
    let jacobi = jacobi_trials(100, 3, 7);
    ensure(jacobi.passed(), || format!("{} Jacobi failures, first {:?}", jacobi.failures.len(), jacobi.failures[0]))?;
    let gamma = gamma_identity_check(2, 20, 7);
    ensure(gamma.passed(), || format!("gamma identity: {:?}", gamma.failures.first()))?;
    Ok(format!(
        "closure, antisymmetry and Jacobi on 100 triples of degree <= 3; gamma identity on {} basis triples",
        gamma.triples_checked
    ))
}

fn dimension_oracles() -> Outcome {
    let rs = sl5();
    for (g, want) in [(1, 10), (2, 50), (3, 175), (4, 490)] {
        let got = lambda_quotient_basis(g).map_err(err)?.basis.len();
        let weyl = rs.weyl_dim(&Weight::new(&[0, 0, g as i32, 0])).map_err(err)?;
        ensure(got == want && weyl == want.into(), || format!("degree {g}: {got}, weyl {weyl}"))?;
    }
    let dims = graded_dimension_crosscheck(4).map_err(err)?;
    ensure(dims.passed(), || format!("{:?}", dims.rows))?;
    let (v1, v2, f1) = (dims.rows[1].vector_rank, dims.rows[2].vector_rank, dims.rows[1].form_rank);
    ensure((v1, v2, f1) == (24, 70, 40), || format!("dims {v1}, {v2}, {f1}"))?;
    Ok("quotient ring 10, 50, 175, 490; E(5,10) degrees 0-4 match weyl_dim(100i), weyl_dim(001i)".into())
}

fn grading_sign() -> Outcome {
    let report = grading_sign_check(&sl5(), &coadjoint_generator_spectrum(10), 10).map_err(err)?;
    ensure(report.passed(), || format!("{:?}", report.violations.first()))?;
    Ok("uniform sign (-1)^p at every level up to 10".into())
}

fn p4_consequences() -> Outcome {
    let a = module("(2000)").tensor(&module("(1000)")).map_err(err)?;
    let b = module("(0011)").tensor(&module("(0001)")).map_err(err)?;
    ensure(!a.contains(&Weight::new(&[0, 0, 1, 0])), || format!("(2000)x(1000) = {a}"))?;
    ensure(!b.contains(&Weight::new(&[1, 0, 0, 0])), || format!("(0011)x(0001) = {b}"))?;
    Ok(format!("(2000)x(1000) = {a}; (0011)x(0001) = {b}"))
}

fn superspace_operators() -> Outcome {
    let report = superspace_operator_check(2);
    ensure(report.monomials == 21 * 1024, || format!("{} monomials", report.monomials))?;
    for i in &report.identities {
        ensure(i.failures == 0, || format!("{}: {:?}", i.name, i.first_failure))?;
    }
    Ok(format!("3 anticommutators, all index pairs, {} monomials", report.monomials))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("level decomposition", level_decomposition),
        ("free generation", free_generation),
        ("series identities", series_identities),
        ("cohomology tables", cohomology_tables),
        ("pairing", pairing),
        ("E(5,10) realization", e510_realization),
        ("dimension oracles", dimension_oracles),
        ("grading sign", grading_sign),
        ("P(4) consequences", p4_consequences),
        ("superspace operators", superspace_operators),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} [{t:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail} [{t:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
