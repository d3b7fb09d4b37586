//! Zero-mode pure spinor cohomology for the constrained `lambda` of the
//! minimal orbit: the quotient ring, superspace operators, and the
//! cohomology of `lambda_{mn} d/d theta_{mn}` on scalar, vector and 1-form
//! superfields with their shift symmetries, decomposed into sl(5) modules.
//!
//! Torus weights are GL(5) occupation numbers. The basis elements
//! `lambda_{mn}` and `theta_{mn}` carry weight `e_m + e_n`; cohomology
//! classes are reported by their component modules, conjugate to the
//! modules spanned by the basis elements.

mod complex;
pub mod lambda;
pub mod superspace;
mod table;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use complex::{BlockCohomology, ComplexBlock};
pub use lambda::{lambda_quotient_basis, quotient_dimension, GlWeight, LambdaQuotientBasis};
pub use superspace::{superspace_operator_check, OperatorKind, SuperPoly, SuperspaceOperator, SuperspaceReport};
pub use table::{CohomologyJson, ClassJson};

use crate::error::{Error, Result};
use crate::koszul::minimal_orbit_series;
use crate::liecore::{decompose_character, sl5, Weight, WeightMultiset};
use crate::repring::VirtualModule;
use crate::repseries::{geometric_factor, series_identity_check, FactorSign, RepSeries, SeriesComparison};

use complex::{block_cohomology, QModule};
use lambda::{pair_of, PAIRS};

pub const DEFAULT_N_MAX: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Scalar,
    Vector,
    Oneform,
}

impl FieldKind {
    pub const ALL: [FieldKind; 3] = [FieldKind::Scalar, FieldKind::Vector, FieldKind::Oneform];

    pub fn name(self) -> &'static str {
        match self {
            FieldKind::Scalar => "scalar",
            FieldKind::Vector => "vector",
            FieldKind::Oneform => "oneform",
        }
    }

    pub fn spec(self) -> SuperfieldSpec {
        match self {
            FieldKind::Scalar => SuperfieldSpec::scalar(),
            FieldKind::Vector => SuperfieldSpec::vector(),
            FieldKind::Oneform => SuperfieldSpec::oneform(),
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FieldKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "scalar" => Ok(FieldKind::Scalar),
            "vector" => Ok(FieldKind::Vector),
            "oneform" | "1-form" | "one-form" => Ok(FieldKind::Oneform),
            other => Err(Error::ConstraintViolated(format!("unknown field '{other}'"))),
        }
    }
}

/// `rho_c -> sum (sign) lambda_v (x) E_a`: for each source basis element,
/// the terms `(lambda variable v, field basis index a, sign)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftMap {
    pub description: String,
    pub source_weights: Vec<GlWeight>,
    pub images: Vec<Vec<(usize, usize, i64)>>,
}

/// A superfield: the torus weights of its basis, an optional shift
/// symmetry, and the labels used in reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperfieldSpec {
    pub name: String,
    /// Module indexing the field (`Phi^m`: `(1000)`, `Xi_m`: `(0001)`).
    pub index_module: String,
    pub field_weights: Vec<GlWeight>,
    pub shift: Option<ShiftMap>,
}

fn unit(i: usize, k: i8) -> GlWeight {
    let mut w = [0; 5];
    w[i] = k;
    w
}

impl SuperfieldSpec {
    pub fn scalar() -> Self {
        SuperfieldSpec { name: "scalar".into(), index_module: "(0000)".into(), field_weights: vec![[0; 5]], shift: None }
    }

    /// `Phi^m ~ Phi^m + lambda_{np} rho^{mnp}`.
    pub fn vector() -> Self {
        let mut source_weights = Vec::new();
        let mut images = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    source_weights.push(lambda::add_weights(&lambda::add_weights(&unit(a, 1), &unit(b, 1)), &unit(c, 1)));
                    images.push(vec![(pair_of(b, c), a, 1), (pair_of(a, c), b, -1), (pair_of(a, b), c, 1)]);
                }
            }
        }
        SuperfieldSpec {
            name: "vector".into(),
            index_module: "(1000)".into(),
            field_weights: (0..5).map(|a| unit(a, 1)).collect(),
            shift: Some(ShiftMap { description: "Phi^m ~ Phi^m + lambda_{np} rho^{mnp}".into(), source_weights, images }),
        }
    }

    /// `Xi_m ~ Xi_m + lambda_{mn} rho^n`.
    pub fn oneform() -> Self {
        let source_weights = (0..5).map(|n| unit(n, 1)).collect();
        let images = (0..5)
            .map(|n| {
                (0..5)
                    .filter(|&m| m != n)
                    .map(|m| if m < n { (pair_of(m, n), m, 1) } else { (pair_of(n, m), m, -1) })
                    .collect()
            })
            .collect();
        SuperfieldSpec {
            name: "oneform".into(),
            index_module: "(0001)".into(),
            field_weights: (0..5).map(|m| unit(m, -1)).collect(),
            shift: Some(ShiftMap { description: "Xi_m ~ Xi_m + lambda_{mn} rho^n".into(), source_weights, images }),
        }
    }

    /// Each shift term must map its source weight to itself after
    /// multiplication by one `lambda`.
    pub fn validate(&self) -> Result<()> {
        if self.field_weights.is_empty() || self.field_weights.len() > u8::MAX as usize {
            return Err(Error::ConstraintViolated("field basis must have 1..=255 elements".into()));
        }
        if let Some(s) = &self.shift {
            if s.images.len() != s.source_weights.len() {
                return Err(Error::ConstraintViolated("shift images do not match sources".into()));
            }
            for (src, terms) in s.source_weights.iter().zip(&s.images) {
                for &(v, a, _) in terms {
                    if v >= PAIRS.len() || a >= self.field_weights.len() {
                        return Err(Error::ConstraintViolated("shift term out of range".into()));
                    }
                    if lambda::add_weights(&lambda::pair_weight(v), &self.field_weights[a]) != *src {
                        return Err(Error::ConstraintViolated(format!(
                            "shift term lambda_{:?} E_{a} does not have the weight of its source {src:?}",
                            PAIRS[v]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// sl(5) Dynkin labels of a GL(5) weight.
pub fn dynkin_of(w: &GlWeight) -> Weight {
    Weight::new(&[(w[0] - w[1]) as i32, (w[1] - w[2]) as i32, (w[2] - w[3]) as i32, (w[3] - w[4]) as i32])
}

/// Nonincreasing 5-tuples with entries in `lo..=hi` summing to `sum`, or
/// all such tuples when `all` is set.
fn weights_with_sum(sum: i32, lo: i8, hi: i8, all: bool) -> Vec<GlWeight> {
    fn rec(i: usize, left: i32, cap: i8, lo: i8, hi: i8, all: bool, cur: &mut GlWeight, out: &mut Vec<GlWeight>) {
        if i == 5 {
            if left == 0 {
                out.push(*cur);
            }
            return;
        }
        let top = if all { hi } else { cap };
        for v in lo..=top {
            let rest = 4 - i as i32;
            let remaining = left - v as i32;
            if remaining < rest * lo as i32 || remaining > rest * hi as i32 {
                continue;
            }
            cur[i] = v;
            rec(i + 1, remaining, v, lo, hi, all, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, sum, hi, lo, hi, all, &mut [0; 5], &mut out);
    out
}

/// All distinct permutations of a weight.
fn permutations(w: &GlWeight) -> Vec<GlWeight> {
    let mut v = *w;
    v.sort();
    let mut out = vec![v];
    loop {
        let mut i = 4;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = 4;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v);
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CohomologyOptions {
    /// Compute every torus weight instead of dominant ones only; the Weyl
    /// invariance of the result is then checked rather than assumed.
    pub all_weights: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomologyStats {
    pub blocks: usize,
    pub exact_blocks: usize,
}

/// Cohomology classes by bidegree `(lambda-degree g, theta-degree k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub field: String,
    pub n_max: usize,
    pub cells: BTreeMap<(usize, usize), VirtualModule>,
    pub stats: CohomologyStats,
}

impl CohomologyTable {
    pub fn get(&self, g: usize, k: usize) -> Option<&VirtualModule> {
        self.cells.get(&(g, k))
    }

    /// The cell as a string, `"0"` when empty.
    pub fn cell(&self, g: usize, k: usize) -> String {
        self.get(g, k).map_or_else(|| "0".into(), |m| m.to_string())
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&(usize, usize), &VirtualModule)> {
        self.cells.iter()
    }
}

/// The graded pieces `B_{g,k}` of the zero-mode complex at total degree
/// `n`, one block per torus weight.
pub fn build_zero_mode_complex(spec: &SuperfieldSpec, n: usize) -> Result<Vec<ComplexBlock>> {
    spec.validate()?;
    let q = QModule::build(spec, n)?;
    Ok(candidate_weights(spec, n, true).into_iter().map(|w| ComplexBlock::new(&q, n, w)).filter(|b| !b.is_empty()).collect())
}

/// Dimension of the quotient `Q_g = (R (x) M) / lambda . (R (x) N)`.
pub fn section_dimension(spec: &SuperfieldSpec, g: usize) -> Result<usize> {
    spec.validate()?;
    Ok(QModule::build(spec, g)?.dim(g))
}

fn candidate_weights(spec: &SuperfieldSpec, n: usize, all: bool) -> Vec<GlWeight> {
    let lo = spec.field_weights.iter().flatten().copied().min().unwrap_or(0).min(0);
    let hi = n as i8 + spec.field_weights.iter().flatten().copied().max().unwrap_or(0).max(0);
    let mut sums: Vec<i32> = spec.field_weights.iter().map(|w| w.iter().map(|&x| x as i32).sum()).collect();
    sums.sort();
    sums.dedup();
    sums.into_iter().flat_map(|s| weights_with_sum(2 * n as i32 + s, lo, hi, all)).collect()
}

pub fn zero_mode_cohomology(spec: &SuperfieldSpec, n_max: usize) -> Result<CohomologyTable> {
    zero_mode_cohomology_with(spec, n_max, CohomologyOptions::default())
}

pub fn zero_mode_cohomology_with(spec: &SuperfieldSpec, n_max: usize, opts: CohomologyOptions) -> Result<CohomologyTable> {
    spec.validate()?;
    let q = QModule::build(spec, n_max)?;
    let tasks: Vec<(usize, GlWeight)> =
        (0..=n_max).flat_map(|n| candidate_weights(spec, n, opts.all_weights).into_iter().map(move |w| (n, w))).collect();
    let results: Vec<BlockCohomology> =
        tasks.par_iter().map(|&(n, w)| block_cohomology(&q, n, w)).collect::<Result<Vec<_>>>()?;
    let mut stats = CohomologyStats::default();
    let mut characters: BTreeMap<(usize, usize), WeightMultiset> = BTreeMap::new();
    for r in &results {
        let euler = |v: &[usize]| v.iter().enumerate().map(|(g, &d)| if g % 2 == 0 { d as i64 } else { -(d as i64) }).sum::<i64>();
        if euler(&r.dims) != euler(&r.cohomology) {
            return Err(Error::Internal(format!("Euler characteristic mismatch at total degree {}, weight {:?}", r.total_degree, r.weight)));
        }
        stats.blocks += 1;
        stats.exact_blocks += r.exact as usize;
        for (g, &h) in r.cohomology.iter().enumerate() {
            if h == 0 {
                continue;
            }
            let ch = characters.entry((g, r.total_degree - g)).or_default();
            let orbit = if opts.all_weights { vec![r.weight] } else { permutations(&r.weight) };
            for w in orbit {
                ch.add(dynkin_of(&w), BigInt::from(h));
            }
        }
    }
    let rs = sl5();
    let mut cells = BTreeMap::new();
    for (bideg, ch) in characters {
        let m = decompose_character(&rs, &ch)?;
        if !m.is_zero() {
            cells.insert(bideg, m.conjugate());
        }
    }
    Ok(CohomologyTable { field: spec.name.clone(), n_max, cells, stats })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub from_cohomology: RepSeries,
    pub from_series: RepSeries,
    pub comparison: SeriesComparison,
}

impl EulerReport {
    pub fn passed(&self) -> bool {
        self.comparison.equal()
    }
}

/// `sum_{g,k} (-1)^k H_{g,k} t^{g+k}` against `Z_lambda (x) (1-t)^{(0010)}`.
pub fn euler_characteristic_crosscheck(table: &CohomologyTable, truncation: usize) -> Result<EulerReport> {
    if table.field != "scalar" {
        return Err(Error::ConstraintViolated("the Euler characteristic crosscheck applies to the scalar field".into()));
    }
    if truncation > table.n_max {
        return Err(Error::OutOfRange { degree: truncation, truncation: table.n_max });
    }
    let rs = sl5();
    let mut coeffs = vec![VirtualModule::zero(&rs); truncation + 1];
    for (&(g, k), m) in &table.cells {
        if g + k <= truncation {
            let signed = if k % 2 == 1 { -m } else { m.clone() };
            coeffs[g + k] = &coeffs[g + k] + &signed;
        }
    }
    let from_cohomology = RepSeries::from_coefficients(&rs, coeffs, truncation)?;
    let theta = VirtualModule::irrep(&rs, Weight::new(&[0, 0, 1, 0]))?;
    let from_series = minimal_orbit_series(truncation).mul(&geometric_factor(&theta, 1, FactorSign::Plus, truncation)?)?;
    let comparison = series_identity_check(&from_cohomology, &from_series);
    Ok(EulerReport { from_cohomology, from_series, comparison })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        for f in FieldKind::ALL {
            f.spec().validate().unwrap();
        }
        let mut bad = SuperfieldSpec::vector();
        bad.shift.as_mut().unwrap().images[0][0].1 = 4;
        assert!(bad.validate().is_err());
    }

    #[test]
    fn weight_enumeration() {
        assert_eq!(permutations(&[1, 1, 0, 0, 0]).len(), 10);
        assert_eq!(weights_with_sum(2, 0, 2, false), vec![[1, 1, 0, 0, 0], [2, 0, 0, 0, 0]]);
        assert_eq!(weights_with_sum(2, 0, 2, true).len(), 15);
    }

    #[test]
    fn complex_dimensions() {
        let blocks = build_zero_mode_complex(&SuperfieldSpec::scalar(), 2).unwrap();
        let d11: usize = blocks.iter().map(|b| b.dims()[1]).sum();
        assert_eq!(d11, 100);
        let d0: usize = build_zero_mode_complex(&SuperfieldSpec::scalar(), 0).unwrap().iter().map(|b| b.dims()[0]).sum();
        assert_eq!(d0, 1);
        // 50 * 5 minus an injective image of the 10 ghosts-for-shifts
        assert_eq!(section_dimension(&SuperfieldSpec::vector(), 1).unwrap(), 40);
        assert_eq!(section_dimension(&SuperfieldSpec::oneform(), 1).unwrap(), 45);
    }

    #[test]
    fn scalar_table_and_euler_characteristic() {
        let t = zero_mode_cohomology(&SuperfieldSpec::scalar(), 5).unwrap();
        let cells: Vec<(usize, usize, String)> = t.nonzero().map(|(&(g, k), m)| (g, k, m.to_string())).collect();
        assert_eq!(
            cells,
            vec![(0, 0, "(0000)".into()), (1, 1, "(1000)".into()), (1, 2, "(0001)".into()), (2, 3, "(0000)".into())]
        );
        let e = euler_characteristic_crosscheck(&t, 5).unwrap();
        assert!(e.passed(), "{}", e.comparison);
        assert!(euler_characteristic_crosscheck(&t, 6).is_err());
    }

    #[test]
    fn all_weights_agree_with_dominant_weights() {
        for f in FieldKind::ALL {
            let a = zero_mode_cohomology(&f.spec(), 4).unwrap();
            let b = zero_mode_cohomology_with(&f.spec(), 4, CohomologyOptions { all_weights: true }).unwrap();
            assert_eq!(a.cells, b.cells, "{f}");
        }
    }

    #[test]
    fn table_renderings() {
        let t = zero_mode_cohomology(&SuperfieldSpec::oneform(), 4).unwrap();
        let latex = t.to_latex();
        assert!(latex.contains(r"(0000)\oplus (1001)"));
        assert!(latex.contains(r"\bullet"));
        let json = serde_json::to_value(t.to_json()).unwrap();
        assert_eq!(json["field"], "oneform");
        assert_eq!(json["classes"][0]["lambda_degree"], 0);
        assert!(t.to_text().contains("(2000)"));
    }
}
