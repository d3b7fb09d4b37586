//! Minimal-orbit partition functions and the superalgebra levels dual to
//! them: peeling `R_p` off a product `prod_p (1 - t^p)^{-(-1)^p R_p}`, the
//! universal enveloping series of a freely generated superalgebra, the
//! free-generation check, and the level `p <-> 5 - p` pairing.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{module_terms, ModuleTerm};
use crate::liecore::{sl5, RootSystem, Weight};
use crate::repring::VirtualModule;
use crate::repseries::{geometric_factor, series_identity_check, FactorSign, RepSeries, SeriesComparison};

pub const FREE_GENERATION_ASSUMPTION: &str = "S+(E4) = B+(E4) at positive levels";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_level(p: i64) -> Self {
        if p.rem_euclid(2) == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Sign carried by a generator of this parity in a signed series.
    pub fn sign(self) -> i32 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Peeled,
    Free,
    Paired,
}

/// Level modules `R_p` of a graded superalgebra. Statistics follow the
/// parity of `p`; multiplicities are nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub levels: BTreeMap<i64, VirtualModule>,
    pub origin: Origin,
}

impl LevelDecomposition {
    pub fn level(&self, p: i64) -> Option<&VirtualModule> {
        self.levels.get(&p)
    }

    pub fn parity(p: i64) -> Parity {
        Parity::of_level(p)
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

impl fmt::Display for LevelDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, m) in &self.levels {
            writeln!(f, "{p}: {m}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub level: usize,
    pub module: VirtualModule,
    pub parity: Parity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpectrum {
    pub generators: Vec<Generator>,
}

impl GeneratorSpectrum {
    /// `P(t) = sum_g sign(g) R_g t^{level(g)}`, fermions entering negatively.
    pub fn series(&self, rs: &Arc<RootSystem>, truncation: usize) -> Result<RepSeries> {
        let mut p = RepSeries::zero(rs, truncation);
        for g in &self.generators {
            if g.level == 0 {
                return Err(Error::LevelZeroGenerator);
            }
            if g.level > truncation {
                continue;
            }
            let signed = if g.parity == Parity::Odd { -&g.module } else { g.module.clone() };
            let cur = p.coefficient(g.level)?.clone();
            p.set_coefficient(g.level, &cur + &signed)?;
        }
        Ok(p)
    }
}

/// `sum_p (p * highest) t^p`, the coordinate ring of the minimal orbit with
/// coefficients labelled by component modules.
pub fn minimal_orbit_series_for(rs: &Arc<RootSystem>, highest: &Weight, truncation: usize) -> Result<RepSeries> {
    let coeffs = (0..=truncation)
        .map(|p| VirtualModule::irrep(rs, highest.scaled(p as i32)))
        .collect::<Result<Vec<_>>>()?;
    RepSeries::from_coefficients(rs, coeffs, truncation)
}

/// `Z_lambda(t) = sum_p (00p0) t^p` for `sl(5)`.
pub fn minimal_orbit_series(truncation: usize) -> RepSeries {
    minimal_orbit_series_for(&sl5(), &Weight::new(&[0, 0, 1, 0]), truncation).expect("valid sl5 weights")
}

/// Levels of the superalgebra whose enveloping series is `z^{-1}`.
pub fn peel_levels(z: &RepSeries, truncation: usize) -> Result<LevelDecomposition> {
    let n = truncation.min(z.truncation());
    peel_product(&z.truncate(n)?.inverse()?, Origin::Peeled)
}

/// Factorises a unit series as `prod_p (1 - t^p)^{-(-1)^p R_p}` and
/// returns the `R_p`.
pub fn peel_product(series: &RepSeries, origin: Origin) -> Result<LevelDecomposition> {
    if !series.coefficient(0)?.is_unit() {
        return Err(Error::NonUnitConstant);
    }
    let n = series.truncation();
    let mut residual = series.clone();
    let mut levels = BTreeMap::new();
    for p in 1..=n {
        let e = residual.coefficient(p)?.clone();
        if e.is_zero() {
            continue;
        }
        let r = if p % 2 == 1 { -&e } else { e.clone() };
        if r.terms().values().any(|c| c.is_negative()) {
            return Err(Error::InconsistentGrading { level: p, module: r.to_string() });
        }
        levels.insert(p as i64, r);
        residual = residual.mul(&geometric_factor(&e, p, FactorSign::Plus, n)?)?;
        debug_assert!(residual.coefficient(p)?.is_zero());
    }
    Ok(LevelDecomposition { levels, origin })
}

/// `prod_p (1 - t^p)^{-(-1)^p R_p}` over the stored positive levels.
pub fn enveloping_series(rs: &Arc<RootSystem>, levels: &LevelDecomposition, truncation: usize) -> Result<RepSeries> {
    let mut acc = RepSeries::unit(rs, truncation);
    for (&p, r) in levels.levels.range(1..) {
        let p = p as usize;
        if p > truncation {
            break;
        }
        let exponent = if p % 2 == 1 { -r } else { r.clone() };
        acc = acc.mul(&geometric_factor(&exponent, p, FactorSign::Minus, truncation)?)?;
    }
    Ok(acc)
}

/// `(1 - P(t))^{-1}`, the enveloping series of the superalgebra freely
/// generated by `gen`.
pub fn free_superalgebra_uea(rs: &Arc<RootSystem>, gen: &GeneratorSpectrum, truncation: usize) -> Result<RepSeries> {
    let p = gen.series(rs, truncation)?;
    RepSeries::unit(rs, truncation).sub(&p).inverse()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignViolation {
    pub power: Option<usize>,
    pub level: usize,
    pub module: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingSignReport {
    pub max_level: usize,
    pub violations: Vec<SignViolation>,
}

impl GradingSignReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every coefficient at level `p` of each tensor power
/// `P(t)^i` and of `(1 - P)^{-1}` has the uniform sign `(-1)^p`.
pub fn grading_sign_check(rs: &Arc<RootSystem>, gen: &GeneratorSpectrum, truncation: usize) -> Result<GradingSignReport> {
    let p = gen.series(rs, truncation)?;
    let mut violations = Vec::new();
    let check = |s: &RepSeries, power: Option<usize>, violations: &mut Vec<SignViolation>| {
        for (level, c) in s.coefficients().iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            let want = if level % 2 == 1 { -1 } else { 1 };
            if c.uniform_sign() != Some(want) {
                violations.push(SignViolation { power, level, module: c.to_string() });
            }
        }
    };
    let mut power = p.clone();
    let mut i = 1;
    while power.coefficients().iter().any(|c| !c.is_zero()) {
        check(&power, Some(i), &mut violations);
        power = power.mul(&p)?;
        i += 1;
    }
    let uea = free_superalgebra_uea(rs, gen, truncation)?;
    check(&uea, None, &mut violations);
    Ok(GradingSignReport { max_level: truncation, violations })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelComparison {
    pub level: usize,
    pub peeled: Vec<ModuleTerm>,
    pub free: Vec<ModuleTerm>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeGenerationReport {
    pub assumption: String,
    pub max_level: usize,
    pub levels: Vec<LevelComparison>,
}

impl FreeGenerationReport {
    pub fn passed(&self) -> bool {
        self.levels.iter().all(|l| l.equal)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.levels.iter().find(|l| !l.equal).map(|l| l.level)
    }
}

/// Both sides of the free-generation comparison, computed independently.
pub fn free_generation_sides(truncation: usize) -> Result<(LevelDecomposition, LevelDecomposition)> {
    let rs = sl5();
    let (peeled, free) = rayon::join(
        || peel_levels(&minimal_orbit_series(truncation), truncation),
        || {
            let gen = crate::e510::coadjoint_generator_spectrum(truncation);
            let uea = free_superalgebra_uea(&rs, &gen, truncation)?;
            peel_product(&uea, Origin::Free)
        },
    );
    Ok((peeled?, free?))
}

pub fn compare_free_generation(
    peeled: &LevelDecomposition,
    free: &LevelDecomposition,
    truncation: usize,
) -> FreeGenerationReport {
    let rs = sl5();
    let zero = VirtualModule::zero(&rs);
    let levels = (3..=truncation)
        .map(|p| {
            let a = peeled.level(p as i64).unwrap_or(&zero);
            let b = free.level(p as i64).unwrap_or(&zero);
            LevelComparison { level: p, peeled: module_terms(a), free: module_terms(b), equal: a == b }
        })
        .collect();
    FreeGenerationReport { assumption: FREE_GENERATION_ASSUMPTION.into(), max_level: truncation, levels }
}

/// Levels `3..=N` of the peeled minimal-orbit superalgebra against the
/// superalgebra freely generated by the coadjoint E(5,10) spectrum.
pub fn verify_free_generation(truncation: usize) -> Result<FreeGenerationReport> {
    if truncation < 3 {
        return Err(Error::OutOfRange { degree: truncation, truncation: 3 });
    }
    let (peeled, free) = free_generation_sides(truncation)?;
    Ok(compare_free_generation(&peeled, &free, truncation))
}

/// A series identity checked coefficient-wise to the truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesIdentity {
    pub name: String,
    pub comparison: SeriesComparison,
}

impl SeriesIdentity {
    pub fn passed(&self) -> bool {
        self.comparison.equal()
    }
}

/// The two factorizations of the minimal-orbit series:
///
/// * `Z_lambda (1-t)^{(0010)} = 1 - (1000) t^2 + (0001) t^3 - t^5`, with
///   every coefficient above `t^5` zero;
/// * `Z_lambda (1-t)^{(0010)} (1-t^2)^{-(1000)} =
///   1 + sum_i (i001) t^{3+2i} - sum_i (i100) t^{4+2i}`.
///
/// Both right-hand sides are written down directly rather than computed.
pub fn orbit_series_identities(truncation: usize) -> Result<Vec<SeriesIdentity>> {
    let rs = sl5();
    let irrep = |labels: [i32; 4]| VirtualModule::irrep(&rs, Weight::new(&labels));
    let theta = irrep([0, 0, 1, 0])?;
    let lhs = minimal_orbit_series(truncation).mul(&geometric_factor(&theta, 1, FactorSign::Plus, truncation)?)?;

    let mut quartet = vec![VirtualModule::zero(&rs); truncation + 1];
    quartet[0] = VirtualModule::unit(&rs);
    for (p, labels, sign) in [(2, [1, 0, 0, 0], -1), (3, [0, 0, 0, 1], 1), (5, [0, 0, 0, 0], -1)] {
        if p <= truncation {
            let m = irrep(labels)?;
            quartet[p] = if sign < 0 { -&m } else { m };
        }
    }
    let quartet = RepSeries::from_coefficients(&rs, quartet, truncation)?;

    let shifted = lhs.mul(&geometric_factor(&irrep([1, 0, 0, 0])?, 2, FactorSign::Minus, truncation)?)?;
    let mut spectrum = vec![VirtualModule::zero(&rs); truncation + 1];
    spectrum[0] = VirtualModule::unit(&rs);
    for (p, slot) in spectrum.iter_mut().enumerate().skip(3) {
        let i = ((p - 3) / 2) as i32;
        *slot = if p % 2 == 1 { irrep([i, 0, 0, 1])? } else { -&irrep([i, 1, 0, 0])? };
    }
    let spectrum = RepSeries::from_coefficients(&rs, spectrum, truncation)?;

    Ok(vec![
        SeriesIdentity {
            name: "Z_lambda (1-t)^(0010) = 1 - (1000)t^2 + (0001)t^3 - t^5".into(),
            comparison: series_identity_check(&lhs, &quartet),
        },
        SeriesIdentity {
            name: "Z_lambda (1-t)^(0010) (1-t^2)^-(1000) = 1 + sum (i001)t^(3+2i) - sum (i100)t^(4+2i)".into(),
            comparison: series_identity_check(&shifted, &spectrum),
        },
    ])
}

/// Extends positive levels by `R_{5-p} = conj(R_p)`, checking the overlap.
pub fn extend_levels_by_pairing(levels: &LevelDecomposition) -> Result<LevelDecomposition> {
    let mut out = levels.levels.clone();
    for (&p, r) in &levels.levels {
        let q = 5 - p;
        let conj = r.conjugate();
        match levels.levels.get(&q) {
            Some(existing) if *existing != conj => {
                return Err(Error::PairingInconsistent {
                    level: q,
                    found: existing.to_string(),
                    expected: conj.to_string(),
                })
            }
            Some(_) => {}
            None => {
                out.insert(q, conj);
            }
        }
    }
    Ok(LevelDecomposition { levels: out, origin: Origin::Paired })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> VirtualModule {
        VirtualModule::parse(&sl5(), s).unwrap()
    }

    #[test]
    fn minimal_orbit_coefficients() {
        let z = minimal_orbit_series(4);
        assert!(z.coefficient(0).unwrap().is_unit());
        assert_eq!(z.coefficient(1).unwrap(), &m("(0010)"));
        assert_eq!(z.coefficient(2).unwrap().dim(), 50.into());
        assert_eq!(z.coefficient(3).unwrap(), &m("(0030)"));
    }

    #[test]
    fn inverse_of_minimal_orbit_low_orders() {
        let inv = minimal_orbit_series(3).inverse().unwrap();
        assert_eq!(inv.coefficient(1).unwrap(), &m("-(0010)"));
        assert_eq!(inv.coefficient(2).unwrap(), &m("(0101)+(1000)"));
    }

    #[test]
    fn peel_unit_is_empty() {
        let rs = sl5();
        assert!(peel_levels(&RepSeries::unit(&rs, 6), 6).unwrap().is_empty());
    }

    #[test]
    fn peel_low_levels() {
        let levels = peel_levels(&minimal_orbit_series(4), 4).unwrap();
        let expect = ["(0010)", "(1000)", "(0001)", "(0100)"];
        for (p, e) in expect.iter().enumerate() {
            assert_eq!(levels.level(p as i64 + 1).unwrap(), &m(e));
        }
    }

    #[test]
    fn peel_detects_bad_signs() {
        // (1 + (0010) t)^{-1} would need a level-one module of negative size.
        let rs = sl5();
        let z = RepSeries::one_plus(&m("-(0010)"), 1, 3);
        let err = peel_levels(&z, 3).unwrap_err();
        assert!(matches!(err, Error::InconsistentGrading { level: 1, .. }), "{err}");
        let _ = rs;
    }

    #[test]
    fn single_bosonic_generator() {
        let rs = sl5();
        let gen = GeneratorSpectrum {
            generators: vec![Generator { level: 1, module: m("(0000)"), parity: Parity::Even }],
        };
        let uea = free_superalgebra_uea(&rs, &gen, 6).unwrap();
        assert!(uea.coefficients().iter().all(|c| c.is_unit()));
        let bad = GeneratorSpectrum {
            generators: vec![Generator { level: 0, module: m("(0000)"), parity: Parity::Even }],
        };
        assert_eq!(free_superalgebra_uea(&rs, &bad, 3), Err(Error::LevelZeroGenerator));
    }

    #[test]
    fn pairing_from_peeled_levels() {
        let levels = peel_levels(&minimal_orbit_series(6), 6).unwrap();
        let paired = extend_levels_by_pairing(&levels).unwrap();
        assert_eq!(paired.level(-1).unwrap(), &m("(2000)+(0011)"));
        assert_eq!(paired.level(0).unwrap(), &m("(1001)"));
        assert_eq!(extend_levels_by_pairing(&paired).unwrap().levels, paired.levels);

        let mut broken = levels.clone();
        broken.levels.insert(4, m("(1000)"));
        assert!(matches!(extend_levels_by_pairing(&broken), Err(Error::PairingInconsistent { .. })));
    }

    #[test]
    fn orbit_identities_hold() {
        let ids = orbit_series_identities(8).unwrap();
        assert_eq!(ids.len(), 2);
        for id in &ids {
            assert!(id.passed(), "{}: {}", id.name, id.comparison);
        }
    }
}
