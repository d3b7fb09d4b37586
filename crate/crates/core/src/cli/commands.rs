//! Report builders behind each subcommand.

use serde::Serialize;
use serde_json::json;

use super::{E510Command, Field, Format, RunConfig, SeriesKind};
use crate::e510::{self, coadjoint_generator_spectrum, level_table};
use crate::error::Error;
use crate::json::module_terms;
use crate::koszul::{
    compare_free_generation, extend_levels_by_pairing, free_generation_sides, grading_sign_check, minimal_orbit_series,
    orbit_series_identities, LevelDecomposition, Parity,
};
use crate::liecore::{sl5, Weight};
use crate::pscohomology::{self, superspace_operator_check, FieldKind};
use crate::repring::VirtualModule;
use crate::repseries::{geometric_factor, FactorSign, RepSeries};

pub(crate) struct Report {
    pub body: String,
    pub passed: bool,
}

pub(crate) enum CommandError {
    Usage(String),
    Internal(Error),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Internal(e)
    }
}

type CmdResult = Result<Report, CommandError>;

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn latex_module(m: &VirtualModule) -> String {
    m.to_string().replace('+', "\\oplus ").replace('-', "\\ominus ")
}

fn latex_array(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("\\begin{{array}}{{{}}}\n", "l".repeat(header.len()));
    out.push_str(&format!("{} \\\\\n\\hline\n", header.join(" & ")));
    for r in rows {
        out.push_str(&format!("{} \\\\\n", r.join(" & ")));
    }
    out.push_str("\\end{array}\n");
    out
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

pub(crate) fn levels(config: &RunConfig, paired: bool) -> CmdResult {
    let n = config.max_level;
    let peeled = crate::koszul::peel_levels(&minimal_orbit_series(n), n)?;
    let all = extend_levels_by_pairing(&peeled)?;
    let is_peeled = |p: i64| p >= 1 && p <= n as i64;
    let body = match config.format {
        Format::Json => {
            let levels: Vec<_> = all
                .levels
                .iter()
                .map(|(&p, m)| {
                    json!({
                        "level": p,
                        "parity": parity_name(LevelDecomposition::parity(p)),
                        "origin": if is_peeled(p) { "peeled" } else { "paired" },
                        "modules": module_terms(m),
                    })
                })
                .collect();
            to_json(&json!({ "max_level": n, "levels": levels }))
        }
        Format::Text => all
            .levels
            .iter()
            .filter(|(&p, _)| paired || is_peeled(p))
            .map(|(p, m)| format!("{p}: {m}\n"))
            .collect(),
        Format::Latex => {
            let rows: Vec<Vec<String>> = all
                .levels
                .iter()
                .filter(|(&p, _)| paired || is_peeled(p))
                .map(|(p, m)| vec![p.to_string(), latex_module(m)])
                .collect();
            latex_array(&["p", "R_p"], &rows)
        }
    };
    Ok(Report { body, passed: true })
}

/// One line of the verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn item(name: &str, passed: bool, detail: impl Into<String>) -> VerifyItem {
    VerifyItem { name: name.into(), passed, detail: detail.into() }
}

/// The verification suite to truncation `max_level`, sorted by item name.
/// With `inject_fault`, the peeled level 3 gains a spurious trivial module.
pub fn verify_items(max_level: usize, max_x_degree: usize, inject_fault: bool) -> crate::error::Result<Vec<VerifyItem>> {
    let rs = sl5();
    let n = max_level;
    let (mut peeled, free) = free_generation_sides(n)?;
    if inject_fault {
        let slot = peeled.levels.get_mut(&3).ok_or(Error::OutOfRange { degree: 3, truncation: n })?;
        *slot = &*slot + &VirtualModule::unit(&rs);
    }
    let mut items = Vec::new();

    if n >= 3 {
        let report = compare_free_generation(&peeled, &free, n);
        let detail = match report.levels.iter().find(|l| !l.equal) {
            None => format!("levels 3..{n} of the peeled and freely generated superalgebras agree"),
            Some(l) => format!(
                "level {} differs: peeled {} vs free {}",
                l.level,
                crate::json::module_from_terms(&rs, &l.peeled)?,
                crate::json::module_from_terms(&rs, &l.free)?
            ),
        };
        items.push(item("free-generation", report.passed(), detail));
    } else {
        items.push(item("free-generation", true, format!("no levels >= 3 within truncation {n}")));
    }

    let signs = grading_sign_check(&rs, &coadjoint_generator_spectrum(n), n)?;
    let detail = match signs.violations.first() {
        None => format!("every coefficient at level p has sign (-1)^p up to level {n}"),
        Some(v) => format!("level {} has {} (power {:?})", v.level, v.module, v.power),
    };
    items.push(item("grading-sign", signs.passed(), detail));

    items.push(match extend_levels_by_pairing(&peeled) {
        Err(e) => item("level-pairing", false, e.to_string()),
        Ok(all) => {
            let expected = VirtualModule::parse(&rs, "(2000)+(0011)")?;
            match all.level(-1) {
                Some(m) if n >= 6 && *m != expected => {
                    item("level-pairing", false, format!("level -1 = conj(R_6) = {m}, expected {expected}"))
                }
                Some(m) => item("level-pairing", true, format!("conj(R_(5-p)) = R_p on overlaps; level -1 = {m}")),
                None => item("level-pairing", true, "conj(R_(5-p)) = R_p on overlaps"),
            }
        }
    });

    let irrep = |l: [i32; 4]| VirtualModule::irrep(&rs, Weight::new(&l));
    let a = irrep([2, 0, 0, 0])?.tensor(&irrep([1, 0, 0, 0])?)?;
    let b = irrep([0, 0, 1, 1])?.tensor(&irrep([0, 0, 0, 1])?)?;
    let ok = !a.contains(&Weight::new(&[0, 0, 1, 0])) && !b.contains(&Weight::new(&[1, 0, 0, 0]));
    items.push(item("p4-non-containment", ok, format!("(2000)x(1000) = {a}; (0011)x(0001) = {b}")));

    let ids = orbit_series_identities(n)?;
    let failed: Vec<String> = ids.iter().filter(|i| !i.passed()).map(|i| format!("{}: {}", i.name, i.comparison)).collect();
    let detail =
        if failed.is_empty() { format!("{} identities hold to order t^{n}", ids.len()) } else { failed.join("; ") };
    items.push(item("series-identities", failed.is_empty(), detail));

    let ss = superspace_operator_check(max_x_degree);
    let detail = match ss.identities.iter().find(|i| i.failures > 0) {
        None => format!("{{Q,Q}}, {{D,Q}}, {{D,D}} on {} monomials with x-degree <= {max_x_degree}", ss.monomials),
        Some(i) => format!("{}: {} failures, first {}", i.name, i.failures, i.first_failure.clone().unwrap_or_default()),
    };
    items.push(item("superspace-operators", ss.passed(), detail));

    items.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(items)
}

pub(crate) fn verify(config: &RunConfig, inject_fault: bool, max_x_degree: Option<usize>) -> CmdResult {
    if inject_fault && config.max_level < 3 {
        return Err(CommandError::Usage("--inject-fault needs --max-level >= 3".into()));
    }
    let max_x = max_x_degree.or(config.max_degree).unwrap_or(2);
    if max_x > 3 {
        return Err(CommandError::Usage("--max-x-degree must be at most 3".into()));
    }
    let items = verify_items(config.max_level, max_x, inject_fault)?;
    let passed = items.iter().all(|i| i.passed);
    let body = match config.format {
        Format::Json => to_json(&json!({ "max_level": config.max_level, "passed": passed, "items": items })),
        Format::Text => {
            let mut s: String = items
                .iter()
                .map(|i| format!("{} {}: {}\n", if i.passed { "PASS" } else { "FAIL" }, i.name, i.detail))
                .collect();
            let failed = items.iter().filter(|i| !i.passed).count();
            s.push_str(&if failed == 0 {
                format!("all {} items passed\n", items.len())
            } else {
                format!("{failed} of {} items failed\n", items.len())
            });
            s
        }
        Format::Latex => {
            let rows: Vec<Vec<String>> = items
                .iter()
                .map(|i| vec![format!("\\texttt{{{}}}", i.name), if i.passed { "pass" } else { "fail" }.into()])
                .collect();
            latex_array(&["item", "result"], &rows)
        }
    };
    Ok(Report { body, passed })
}

pub(crate) fn cohomology(config: &RunConfig, field: Field) -> CmdResult {
    let kind = match field {
        Field::Scalar => FieldKind::Scalar,
        Field::Vector => FieldKind::Vector,
        Field::Oneform => FieldKind::Oneform,
    };
    let table = pscohomology::zero_mode_cohomology(&kind.spec(), config.n_max)?;
    let body = match config.format {
        Format::Json => to_json(&table.to_json()),
        Format::Text => table.to_text(),
        Format::Latex => table.to_latex(),
    };
    Ok(Report { body, passed: true })
}

pub(crate) fn e510(config: &RunConfig, what: E510Command) -> CmdResult {
    match what {
        E510Command::Levels => {
            let entries = level_table(2 - (config.max_level as i64 - 1))?;
            let body = match config.format {
                Format::Json => to_json(&json!({ "levels": entries })),
                Format::Text => entries.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
                Format::Latex => {
                    let rows: Vec<Vec<String>> = entries
                        .iter()
                        .map(|e| vec![e.level.to_string(), e.module.clone(), parity_name(e.parity).into(), e.dimension.clone()])
                        .collect();
                    latex_array(&["\\ell", "module", "parity", "dim"], &rows)
                }
            };
            Ok(Report { body, passed: true })
        }
        E510Command::Jacobi { max_degree } => {
            let d = max_degree.or(config.max_degree).unwrap_or(3);
            if d > 6 {
                return Err(CommandError::Usage("--max-degree must be at most 6".into()));
            }
            let r = e510::jacobi_trials(config.trials, d, config.seed);
            let body = match config.format {
                Format::Json => to_json(&r),
                _ => {
                    let mut s = format!(
                        "jacobi: {} trials, degree <= {}, seed {}: {} failures\n",
                        r.trials,
                        r.max_degree,
                        r.seed,
                        r.failures.len()
                    );
                    for f in &r.failures {
                        s.push_str(&format!("  trial {} {}: {}\n", f.trial, f.check, f.detail));
                    }
                    s
                }
            };
            Ok(Report { body, passed: r.passed() })
        }
        E510Command::Dims { max_degree } => {
            let d = max_degree.or(config.max_degree).unwrap_or(4);
            if d > 8 {
                return Err(CommandError::Usage("--max-degree must be at most 8".into()));
            }
            let r = e510::graded_dimension_crosscheck(d)?;
            let body = match config.format {
                Format::Json => to_json(&r),
                Format::Text => {
                    let mut s = "i  div-free  count  weyl(100i) | closed  count  weyl(001i)\n".to_string();
                    for row in &r.rows {
                        s.push_str(&format!(
                            "{}  {}  {}  {} | {}  {}  {}  {}\n",
                            row.degree,
                            row.vector_rank,
                            row.vector_count,
                            row.vector_weyl,
                            row.form_rank,
                            row.form_count,
                            row.form_weyl,
                            if row.ok { "ok" } else { "MISMATCH" }
                        ));
                    }
                    s
                }
                Format::Latex => {
                    let rows: Vec<Vec<String>> = r
                        .rows
                        .iter()
                        .map(|row| vec![row.degree.to_string(), row.vector_rank.to_string(), row.form_rank.to_string()])
                        .collect();
                    latex_array(&["i", "\\dim(100i)", "\\dim(001i)"], &rows)
                }
            };
            Ok(Report { body, passed: r.passed() })
        }
        E510Command::Gamma { max_degree } => {
            let d = max_degree.or(config.max_degree).unwrap_or(2);
            if d > 2 {
                return Err(CommandError::Usage("--max-degree must be at most 2 for the gamma identity".into()));
            }
            let r = e510::gamma_identity_check(d, config.trials, config.seed);
            let body = match config.format {
                Format::Json => to_json(&r),
                _ => format!(
                    "gamma identity: basis of {} closed forms of degree <= {}, {} triples, {} random checks: {} failures\n",
                    r.basis_size,
                    r.max_degree,
                    r.triples_checked,
                    r.random_checks,
                    r.failures.len()
                ),
            };
            Ok(Report { body, passed: r.passed() })
        }
    }
}

pub(crate) fn series(config: &RunConfig, kind: SeriesKind) -> CmdResult {
    let n = config.max_level;
    let rs = sl5();
    let z = minimal_orbit_series(n);
    let theta = VirtualModule::irrep(&rs, Weight::new(&[0, 0, 1, 0]))?;
    let s: RepSeries = match kind {
        SeriesKind::Orbit => z,
        SeriesKind::Inverse => z.inverse()?,
        SeriesKind::Theta => z.mul(&geometric_factor(&theta, 1, FactorSign::Plus, n)?)?,
        SeriesKind::Shifted => z.mul(&geometric_factor(&theta, 1, FactorSign::Plus, n)?)?.mul(&geometric_factor(
            &VirtualModule::irrep(&rs, Weight::new(&[1, 0, 0, 0]))?,
            2,
            FactorSign::Minus,
            n,
        )?)?,
    };
    let body = match config.format {
        Format::Json => to_json(&s.to_json()),
        Format::Text => s.coefficients().iter().enumerate().map(|(p, c)| format!("{p}: {c}\n")).collect(),
        Format::Latex => {
            let terms: Vec<String> = s
                .coefficients()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| format!("\\left[{}\\right]t^{{{p}}}", latex_module(c)))
                .collect();
            format!("{} + O(t^{{{}}})\n", terms.join(" + "), n + 1)
        }
    };
    Ok(Report { body, passed: true })
}
