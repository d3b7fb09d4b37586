//! Randomized closure/Jacobi trials, the cubic identity behind the QQQ
//! Jacobi identity, and graded dimension counts of the realization.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::liecore::{sl5, Weight};
use crate::linalg::{Echelon, SparseRow};

use super::fields::{
    antisymmetry_defect, bracket_unchecked, jacobi_test, pair_index, pairs, E510Element, PolyTwoForm,
    PolyVectorField,
};
use super::poly::{Exponent, Poly, NVARS};

pub const DEFAULT_SEED: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementKind {
    Even,
    Odd,
    Mixed,
}

fn random_poly(rng: &mut ChaCha8Rng, min_degree: usize, max_degree: usize, max_terms: usize) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(0..=max_terms) {
        let d = rng.gen_range(min_degree..=max_degree);
        let mut e: Exponent = [0; NVARS];
        for _ in 0..d {
            e[rng.gen_range(0..NVARS)] += 1;
        }
        let c: i64 = rng.gen_range(-3..=3);
        p.add_term(e, BigRational::from_integer(c.into()));
    }
    p
}

/// Divergence-free field with coefficients of degree at most `max_degree`,
/// built from a random antisymmetric potential.
pub fn random_vector_field(rng: &mut ChaCha8Rng, max_degree: usize) -> PolyVectorField {
    let a: [Poly; 10] = std::array::from_fn(|_| random_poly(rng, 1, max_degree + 1, 2));
    PolyVectorField::from_potential(&a)
}

/// Closed 2-form `d beta` with coefficients of degree at most `max_degree`.
pub fn random_two_form(rng: &mut ChaCha8Rng, max_degree: usize) -> PolyTwoForm {
    let beta: [Poly; NVARS] = std::array::from_fn(|_| random_poly(rng, 1, max_degree + 1, 2));
    PolyTwoForm::exterior_derivative(&beta)
}

pub fn random_element(rng: &mut ChaCha8Rng, kind: ElementKind, max_degree: usize) -> E510Element {
    match kind {
        ElementKind::Even => E510Element::even(random_vector_field(rng, max_degree)),
        ElementKind::Odd => E510Element::odd(random_two_form(rng, max_degree)),
        ElementKind::Mixed => E510Element {
            even: random_vector_field(rng, max_degree),
            odd: random_two_form(rng, max_degree),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiFailure {
    pub trial: usize,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiReport {
    pub trials: usize,
    pub max_degree: usize,
    pub seed: u64,
    pub failures: Vec<JacobiFailure>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Parities of the three elements of trial `t`: the eight homogeneous
/// patterns in turn, with every ninth trial fully mixed.
fn trial_kinds(t: usize) -> [ElementKind; 3] {
    if t % 9 == 8 {
        return [ElementKind::Mixed; 3];
    }
    let bits = t % 9;
    std::array::from_fn(|i| if bits >> i & 1 == 1 { ElementKind::Odd } else { ElementKind::Even })
}

fn run_trial(trial: usize, max_degree: usize, seed: u64) -> Vec<JacobiFailure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let kinds = trial_kinds(trial);
    let [a, b, c] = kinds.map(|k| random_element(&mut rng, k, max_degree));
    let mut failures = Vec::new();
    let mut fail = |check: &str, detail: String| failures.push(JacobiFailure { trial, check: check.into(), detail });
    for (name, x, y) in [("closure[a,b]", &a, &b), ("closure[b,c]", &b, &c), ("closure[a,c]", &a, &c)] {
        if let Err(e) = bracket_unchecked(x, y).check() {
            fail(name, e.to_string());
        }
    }
    match antisymmetry_defect(&a, &b) {
        Ok(d) if d.is_zero() => {}
        Ok(d) => fail("antisymmetry", d.to_string()),
        Err(e) => fail("antisymmetry", e.to_string()),
    }
    match jacobi_test(&a, &b, &c) {
        Ok(j) if j.is_zero() => {}
        Ok(j) => fail("jacobi", j.to_string()),
        Err(e) => fail("jacobi", e.to_string()),
    }
    failures
}

/// Seeded randomized closure, graded antisymmetry and Jacobi checks. Trial
/// `t` draws from stream `t` of a ChaCha generator keyed by `seed`, so the
/// report does not depend on scheduling.
pub fn jacobi_trials(trials: usize, max_degree: usize, seed: u64) -> JacobiReport {
    let failures = (0..trials).into_par_iter().flat_map_iter(|t| run_trial(t, max_degree, seed)).collect();
    JacobiReport { trials, max_degree, seed, failures }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub max_degree: usize,
    pub basis_size: usize,
    pub triples_checked: usize,
    pub random_checks: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn form_coordinates(f: &PolyTwoForm, index: &mut HashMap<(usize, Exponent), usize>) -> SparseRow<BigRational> {
    let mut row = Vec::new();
    for (i, c) in f.components().iter().enumerate() {
        for (e, v) in c.terms() {
            let n = index.len();
            let col = *index.entry((i, *e)).or_insert(n);
            row.push((col, v.clone()));
        }
    }
    row
}

/// A basis of closed 2-forms with homogeneous coefficients of degree `d`,
/// chosen greedily among `d(x^a dx^n)`.
pub fn closed_form_basis(d: usize) -> Vec<PolyTwoForm> {
    let mut index = HashMap::new();
    let mut echelon = Echelon::new();
    let mut basis = Vec::new();
    for e in Poly::exponents_of_degree(d + 1) {
        for n in 0..NVARS {
            let mut beta: [Poly; NVARS] = Default::default();
            beta[n] = Poly::monomial(e, BigRational::from_integer(1.into()));
            let f = PolyTwoForm::exterior_derivative(&beta);
            if f.is_zero() {
                continue;
            }
            if echelon.insert(form_coordinates(&f, &mut index)) {
                basis.push(f);
            }
        }
    }
    basis
}

/// Integer polynomial with exponents packed four bits per variable; used by
/// the exhaustive polarization check, where all coefficients are integral.
type PackedPoly = Vec<(u32, i64)>;

fn pack(p: &Poly) -> PackedPoly {
    p.terms()
        .iter()
        .map(|(e, c)| {
            let key = e.iter().enumerate().fold(0u32, |acc, (i, &a)| {
                assert!(a < 16, "exponent too large to pack");
                acc | (a as u32) << (4 * i)
            });
            (key, c.to_integer().to_i64().expect("small integer coefficient"))
        })
        .collect()
}

/// Components and first derivatives of a vector field or 2-form.
struct Packed {
    comps: Vec<PackedPoly>,
    derivs: Vec<[PackedPoly; NVARS]>,
}

impl Packed {
    fn new(comps: &[Poly]) -> Self {
        Packed {
            comps: comps.iter().map(pack).collect(),
            derivs: comps.iter().map(|c| std::array::from_fn(|i| pack(&c.deriv(i)))).collect(),
        }
    }
}

fn push_product(acc: &mut Vec<(u64, i64)>, comp: usize, sign: i64, a: &PackedPoly, b: &PackedPoly) {
    for &(ea, ca) in a {
        for &(eb, cb) in b {
            let c = ca.checked_mul(cb).and_then(|v| v.checked_mul(sign)).expect("integer overflow");
            acc.push(((comp as u64) << 32 | (ea + eb) as u64, c));
        }
    }
}

/// Appends the terms of `L_v c` to `acc`, keyed by (component, exponent).
fn push_lie_derivative(acc: &mut Vec<(u64, i64)>, v: &Packed, c: &Packed) {
    for (m, n) in pairs() {
        let k = pair_index(m, n);
        for p in 0..NVARS {
            push_product(acc, k, 1, &v.comps[p], &c.derivs[k][p]);
            if p != n {
                let (s, i) = if p < n { (1, pair_index(p, n)) } else { (-1, pair_index(n, p)) };
                push_product(acc, k, s, &c.comps[i], &v.derivs[p][m]);
            }
            if p != m {
                let (s, i) = if m < p { (1, pair_index(m, p)) } else { (-1, pair_index(p, m)) };
                push_product(acc, k, s, &c.comps[i], &v.derivs[p][n]);
            }
        }
    }
}

fn sums_to_zero(acc: &mut Vec<(u64, i64)>) -> bool {
    acc.sort_unstable_by_key(|e| e.0);
    let mut i = 0;
    while i < acc.len() {
        let mut total = 0i64;
        let key = acc[i].0;
        while i < acc.len() && acc[i].0 == key {
            total = total.checked_add(acc[i].1).expect("integer overflow");
            i += 1;
        }
        if total != 0 {
            return false;
        }
    }
    true
}

/// `L_{star(gamma ^ gamma)} gamma = 0` for every closed `gamma` with
/// coefficients of degree at most `max_degree`. The expression is a cubic
/// form in `gamma`; it vanishes identically iff its polarization
/// `L_{star(a^b)} c + L_{star(b^c)} a + L_{star(c^a)} b` vanishes on all
/// triples from a basis, which is what is checked (in exact integer
/// arithmetic, since the basis is integral). A handful of random `gamma`
/// are also checked directly with the rational implementation.
pub fn gamma_identity_check(max_degree: usize, random_checks: usize, seed: u64) -> IdentityReport {
    let basis: Vec<PolyTwoForm> = (0..=max_degree).flat_map(closed_form_basis).collect();
    let n = basis.len();
    let forms: Vec<Packed> = basis.iter().map(|b| Packed::new(b.components())).collect();
    let stars: Vec<Vec<Packed>> = (0..n)
        .into_par_iter()
        .map(|i| (i..n).map(|j| Packed::new(basis[i].star_wedge(&basis[j]).components())).collect())
        .collect();
    let star = |i: usize, j: usize| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        &stars[a][b - a]
    };
    let mut failures: Vec<String> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut bad = Vec::new();
            let mut acc = Vec::new();
            for j in i..n {
                for k in j..n {
                    acc.clear();
                    push_lie_derivative(&mut acc, star(i, j), &forms[k]);
                    push_lie_derivative(&mut acc, star(j, k), &forms[i]);
                    push_lie_derivative(&mut acc, star(k, i), &forms[j]);
                    if !sums_to_zero(&mut acc) {
                        bad.push(format!("polarization nonzero on basis triple ({i}, {j}, {k})"));
                    }
                }
            }
            bad
        })
        .collect();
    let random: Vec<String> = (0..random_checks)
        .into_par_iter()
        .filter_map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let gamma = random_two_form(&mut rng, max_degree);
            let v = gamma.star_wedge(&gamma);
            (!gamma.lie_derivative(&v).is_zero()).then(|| format!("random gamma #{t} gives nonzero L gamma"))
        })
        .collect();
    failures.extend(random);
    IdentityReport { max_degree, basis_size: n, triples_checked: n * (n + 1) * (n + 2) / 6, random_checks, failures }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionRow {
    pub degree: usize,
    /// Divergence-free fields of this degree, by rank of `div`.
    pub vector_rank: u64,
    /// `dim(Sym^i (x) V) - dim(Sym^{i-1})`.
    pub vector_count: u64,
    pub vector_weyl: u64,
    /// Closed 2-forms of this degree, by rank of `d`.
    pub form_rank: u64,
    /// `dim Omega^1_{i+1} - dim Omega^0_{i+2}` from exactness of the de Rham tail.
    pub form_count: u64,
    pub form_weyl: u64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub rows: Vec<DimensionRow>,
}

impl DimensionReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Monomials of degree `d` in five variables.
fn sym_dim(d: i64) -> u64 {
    if d < 0 {
        0
    } else {
        binom(d as usize + 4, 4)
    }
}

fn kernel_dimension(sources: Vec<Vec<Poly>>) -> u64 {
    let mut index: HashMap<(usize, Exponent), usize> = HashMap::new();
    let mut echelon = Echelon::new();
    let total = sources.len() as u64;
    for image in sources {
        let mut row = Vec::new();
        for (i, c) in image.iter().enumerate() {
            for (e, v) in c.terms() {
                let n = index.len();
                row.push((*index.entry((i, *e)).or_insert(n), v.clone()));
            }
        }
        echelon.insert(row);
    }
    total - echelon.rank() as u64
}

/// Dimensions of the degree-`i` pieces of the realization, three ways.
pub fn graded_dimension_crosscheck(i_max: usize) -> Result<DimensionReport> {
    let rs = sl5();
    let mut rows = Vec::new();
    for i in 0..=i_max {
        let monos = Poly::exponents_of_degree(i);
        let one = BigRational::from_integer(1.into());
        let div_images: Vec<Vec<Poly>> = monos
            .iter()
            .flat_map(|e| (0..NVARS).map(move |m| (e, m)))
            .map(|(e, m)| vec![Poly::monomial(*e, one.clone()).deriv(m)])
            .collect();
        let vector_rank = kernel_dimension(div_images);
        let d_images: Vec<Vec<Poly>> = monos
            .iter()
            .flat_map(|e| pairs().map(move |p| (e, p)))
            .map(|(e, (m, n))| {
                let mut comps: [Poly; 10] = Default::default();
                comps[pair_index(m, n)] = Poly::monomial(*e, one.clone());
                PolyTwoForm::new_unchecked(comps).exterior_derivative_components()
            })
            .collect();
        let form_rank = kernel_dimension(d_images);
        let vector_count = 5 * sym_dim(i as i64) - sym_dim(i as i64 - 1);
        let form_count = 5 * sym_dim(i as i64 + 1) - sym_dim(i as i64 + 2);
        let weyl = |labels: [i32; 4]| -> Result<u64> {
            let d: BigInt = rs.weyl_dim(&Weight::new(&labels))?;
            Ok(d.to_u64().expect("small dimension"))
        };
        let vector_weyl = weyl([1, 0, 0, i as i32])?;
        let form_weyl = weyl([0, 0, 1, i as i32])?;
        let ok = vector_rank == vector_count
            && vector_count == vector_weyl
            && form_rank == form_count
            && form_count == form_weyl;
        rows.push(DimensionRow { degree: i, vector_rank, vector_count, vector_weyl, form_rank, form_count, form_weyl, ok });
    }
    Ok(DimensionReport { rows })
}
