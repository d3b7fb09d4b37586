//! Zero-mode complexes `Q_g (x) wedge^k(theta)` with differential
//! `lambda_{mn} d/d theta_{mn}`, where `Q = (R (x) M) / lambda . (R (x) N)` is
//! the module of sections defined by a superfield's shift symmetry, and
//! their cohomology per torus-weight block.
//!
//! Ranks are first computed modulo a large prime. Since reduction mod `p`
//! can only lower ranks, a block whose mod-`p` cohomology vanishes has
//! vanishing rational cohomology; every block with nonzero mod-`p`
//! cohomology is recomputed over the rationals.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, FieldElem, Fp, SparseRow, PRIME};

use super::lambda::{add_weights, lambda_ring, pair_weight, sub_weights, GlWeight, LambdaRing, NPAIRS};
use super::SuperfieldSpec;

fn to_fp(q: &BigRational) -> Result<Fp> {
    let p = BigInt::from(PRIME);
    let num = q.numer().mod_floor(&p).to_u64().expect("reduced");
    let den = q.denom().mod_floor(&p).to_u64().expect("reduced");
    if den == 0 {
        return Err(Error::Internal("denominator divisible by the working prime".into()));
    }
    Ok(Fp(num).div(&Fp(den)))
}

/// One torus-weight block of `Q_g`.
pub(crate) struct QBlock {
    /// Columns `(standard monomial, field basis index)` of `R_g (x) M`.
    cols: Vec<(u32, u8)>,
    col_index: HashMap<(u32, u8), usize>,
    /// Echelon form of the shift image inside this block.
    shift: Echelon<BigRational>,
    /// Non-pivot columns: the basis of the quotient.
    basis: Vec<usize>,
    basis_pos: HashMap<usize, u32>,
    /// `lambda_v` times basis element `i`, in the block of weight
    /// `weight + wt(lambda_v)` one degree up.
    mult_q: Vec<[Vec<(u32, BigRational)>; NPAIRS]>,
    mult_p: Vec<[Vec<(u32, Fp)>; NPAIRS]>,
}

impl QBlock {
    pub(crate) fn dim(&self) -> usize {
        self.basis.len()
    }

    fn normal_form(&self, row: Vec<(usize, BigRational)>) -> Vec<(u32, BigRational)> {
        let mut merged: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (c, v) in row {
            *merged.entry(c).or_insert_with(BigRational::zero) += v;
        }
        let row: SparseRow<BigRational> = merged.into_iter().filter(|e| !Zero::is_zero(&e.1)).collect();
        self.shift.reduce(row).into_iter().map(|(c, v)| (self.basis_pos[&c], v)).collect()
    }
}

/// The graded module `Q` through some degree, with multiplication maps.
pub(crate) struct QModule {
    pub(crate) degrees: Vec<HashMap<GlWeight, QBlock>>,
}

impl QModule {
    pub(crate) fn build(spec: &SuperfieldSpec, max_degree: usize) -> Result<Self> {
        let ring = lambda_ring(max_degree);
        let mut degrees: Vec<HashMap<GlWeight, QBlock>> =
            (0..=max_degree).into_par_iter().map(|g| build_degree(&ring, spec, g)).collect();
        for g in 0..max_degree {
            let (lo, hi) = degrees.split_at_mut(g + 1);
            fill_mult(&ring, &mut lo[g], &hi[0], g)?;
        }
        Ok(QModule { degrees })
    }

    pub(crate) fn dim(&self, g: usize) -> usize {
        self.degrees[g].values().map(QBlock::dim).sum()
    }
}

fn build_degree(ring: &LambdaRing, spec: &SuperfieldSpec, g: usize) -> HashMap<GlWeight, QBlock> {
    let deg = &ring.degrees[g];
    let mut cols: HashMap<GlWeight, Vec<(u32, u8)>> = HashMap::new();
    for (s, w) in deg.weights.iter().enumerate() {
        for (a, fw) in spec.field_weights.iter().enumerate() {
            cols.entry(add_weights(w, fw)).or_default().push((s as u32, a as u8));
        }
    }
    let mut rows: HashMap<GlWeight, Vec<Vec<((u32, u8), i64)>>> = HashMap::new();
    if let (Some(shift), true) = (&spec.shift, g >= 1) {
        let lower = &ring.degrees[g - 1];
        for (s, w) in lower.weights.iter().enumerate() {
            for (c, sw) in shift.source_weights.iter().enumerate() {
                let mut terms = Vec::new();
                for &(v, a, sign) in &shift.images[c] {
                    for &(t, coef) in &lower.mult[s][v] {
                        terms.push(((t, a as u8), sign * coef));
                    }
                }
                rows.entry(add_weights(w, sw)).or_default().push(terms);
            }
        }
    }
    cols.into_par_iter()
        .map(|(w, mut cols)| {
            cols.sort();
            let col_index: HashMap<(u32, u8), usize> = cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
            let mut shift = Echelon::new();
            for terms in rows.get(&w).into_iter().flatten() {
                let mut row: BTreeMap<usize, i64> = BTreeMap::new();
                for (c, v) in terms {
                    *row.entry(col_index[c]).or_default() += v;
                }
                shift.insert(
                    row.into_iter()
                        .filter(|e| e.1 != 0)
                        .map(|(c, v)| (c, BigRational::from_integer(v.into())))
                        .collect(),
                );
            }
            let pivots: std::collections::HashSet<usize> = shift.pivot_columns().collect();
            let basis: Vec<usize> = (0..cols.len()).filter(|c| !pivots.contains(c)).collect();
            let basis_pos = basis.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
            (w, QBlock { cols, col_index, shift, basis, basis_pos, mult_q: Vec::new(), mult_p: Vec::new() })
        })
        .collect()
}

fn fill_mult(ring: &LambdaRing, lo: &mut HashMap<GlWeight, QBlock>, hi: &HashMap<GlWeight, QBlock>, g: usize) -> Result<()> {
    let deg = &ring.degrees[g];
    lo.par_iter_mut().try_for_each(|(w, block)| -> Result<()> {
        let mut mult_q = Vec::with_capacity(block.basis.len());
        let mut mult_p = Vec::with_capacity(block.basis.len());
        for &c in &block.basis {
            let (s, a) = block.cols[c];
            let mut mq: [Vec<(u32, BigRational)>; NPAIRS] = Default::default();
            let mut mp: [Vec<(u32, Fp)>; NPAIRS] = Default::default();
            for v in 0..NPAIRS {
                let target = match hi.get(&add_weights(w, &pair_weight(v))) {
                    Some(t) => t,
                    None => continue,
                };
                let row: Vec<(usize, BigRational)> = deg.mult[s as usize][v]
                    .iter()
                    .map(|&(t, coef)| (target.col_index[&(t, a)], BigRational::from_integer(coef.into())))
                    .collect();
                let nf = target.normal_form(row);
                mp[v] = nf.iter().map(|(i, q)| Ok((*i, to_fp(q)?))).collect::<Result<_>>()?;
                mq[v] = nf;
            }
            mult_q.push(mq);
            mult_p.push(mp);
        }
        block.mult_q = mult_q;
        block.mult_p = mult_p;
        Ok(())
    })
}

/// Subsets of the ten `theta`s of size `k`, as bit masks.
fn subsets(k: usize) -> Vec<u16> {
    (0u16..1 << NPAIRS).filter(|m| m.count_ones() as usize == k).collect()
}

fn subset_weight(j: u16) -> GlWeight {
    let mut w = [0; 5];
    for v in 0..NPAIRS {
        if j >> v & 1 == 1 {
            w = add_weights(&w, &pair_weight(v));
        }
    }
    w
}

/// The complex `C_{0,n} -> C_{1,n-1} -> ... -> C_{n,0}` in a single
/// torus weight, with `C_{g,k} = (Q_g (x) wedge^k theta)_w`.
pub struct ComplexBlock {
    pub total_degree: usize,
    pub weight: GlWeight,
    /// `elements[g]`: pairs (theta subset, basis position in `Q_g`).
    elements: Vec<Vec<(u16, u32)>>,
}

impl ComplexBlock {
    pub(crate) fn new(q: &QModule, n: usize, weight: GlWeight) -> Self {
        let elements = (0..=n)
            .map(|g| {
                let mut els = Vec::new();
                for j in subsets(n - g) {
                    let u = sub_weights(&weight, &subset_weight(j));
                    if let Some(b) = q.degrees[g].get(&u) {
                        els.extend((0..b.dim() as u32).map(|p| (j, p)));
                    }
                }
                els
            })
            .collect();
        ComplexBlock { total_degree: n, weight, elements }
    }

    /// `dim C_{g, n-g}` in this weight.
    pub fn dims(&self) -> Vec<usize> {
        self.elements.iter().map(Vec::len).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.iter().all(Vec::is_empty)
    }

    /// Sparse rows of `d: C_{g,k} -> C_{g+1,k-1}`, one per source element.
    fn differential<F: FieldElem>(
        &self,
        q: &QModule,
        g: usize,
        coeff: impl Fn(&QBlock, usize, usize) -> Vec<(u32, F)>,
        negate: impl Fn(&F) -> F,
    ) -> Vec<SparseRow<F>> {
        let target: HashMap<(u16, u32), usize> =
            self.elements[g + 1].iter().enumerate().map(|(i, e)| (*e, i)).collect();
        self.elements[g]
            .iter()
            .map(|&(j, pos)| {
                let u = sub_weights(&self.weight, &subset_weight(j));
                let block = &q.degrees[g][&u];
                let mut row: Vec<(usize, F)> = Vec::new();
                let mut before = 0;
                for v in 0..NPAIRS {
                    if j >> v & 1 == 0 {
                        continue;
                    }
                    let rest = j & !(1 << v);
                    for (p2, c) in coeff(block, pos as usize, v) {
                        let col = target[&(rest, p2)];
                        row.push((col, if before % 2 == 0 { c } else { negate(&c) }));
                    }
                    before += 1;
                }
                row
            })
            .collect()
    }

    pub(crate) fn differential_mod_p(&self, q: &QModule, g: usize) -> Vec<SparseRow<Fp>> {
        self.differential(q, g, |b, i, v| b.mult_p[i][v].clone(), Fp::negated)
    }

    pub(crate) fn differential_exact(&self, q: &QModule, g: usize) -> Vec<SparseRow<BigRational>> {
        self.differential(q, g, |b, i, v| b.mult_q[i][v].clone(), BigRational::negated)
    }
}

fn merge_row<F: FieldElem>(row: SparseRow<F>) -> SparseRow<F> {
    let mut sorted = row;
    sorted.sort_by_key(|e| e.0);
    let mut out: SparseRow<F> = Vec::with_capacity(sorted.len());
    for (c, v) in sorted {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = last.1.plus(&v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

fn rank_of<F: FieldElem>(rows: Vec<SparseRow<F>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(merge_row(r));
    }
    e.rank()
}

/// `d o d` vanishes on every element.
fn check_d_squared(rows_g: &[SparseRow<Fp>], rows_next: &[SparseRow<Fp>]) -> bool {
    rows_g.iter().all(|row| {
        let mut acc: HashMap<usize, Fp> = HashMap::new();
        for (j, c) in row {
            for (k, d) in &rows_next[*j] {
                let slot = acc.entry(*k).or_insert(Fp(0));
                *slot = slot.sub_mul(&c.negated(), d);
            }
        }
        acc.values().all(|v| v.is_zero())
    })
}

/// Cohomology dimensions of one block, `h[g]` at bidegree `(g, n - g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCohomology {
    pub total_degree: usize,
    pub weight: GlWeight,
    pub dims: Vec<usize>,
    pub cohomology: Vec<usize>,
    /// Whether exact rational elimination was needed.
    pub exact: bool,
}

pub(crate) fn block_cohomology(q: &QModule, n: usize, weight: GlWeight) -> Result<BlockCohomology> {
    let block = ComplexBlock::new(q, n, weight);
    let dims = block.dims();
    let maps: Vec<Vec<SparseRow<Fp>>> = (0..n).map(|g| block.differential_mod_p(q, g)).collect();
    for g in 0..n.saturating_sub(1) {
        if !check_d_squared(&maps[g], &maps[g + 1]) {
            return Err(Error::Internal(format!("d^2 != 0 at total degree {n}, weight {weight:?}, g = {g}")));
        }
    }
    let ranks_p: Vec<usize> = maps.into_iter().map(rank_of).collect();
    let h = |ranks: &[usize], g: usize| {
        let out = if g < n { ranks[g] } else { 0 };
        let inc = if g > 0 { ranks[g - 1] } else { 0 };
        dims[g] - out - inc
    };
    let hp: Vec<usize> = (0..=n).map(|g| h(&ranks_p, g)).collect();
    if hp.iter().all(|&x| x == 0) {
        return Ok(BlockCohomology { total_degree: n, weight, dims, cohomology: hp, exact: false });
    }
    let ranks_q: Vec<usize> = (0..n)
        .map(|g| {
            let touches = hp[g] > 0 || hp[g + 1] > 0;
            if touches {
                rank_of(block.differential_exact(q, g))
            } else {
                ranks_p[g]
            }
        })
        .collect();
    // Cells whose mod-p cohomology vanishes are certified empty; both maps
    // adjacent to every other cell were recomputed exactly.
    let hq: Vec<usize> = (0..=n).map(|g| if hp[g] == 0 { 0 } else { h(&ranks_q, g) }).collect();
    Ok(BlockCohomology { total_degree: n, weight, dims, cohomology: hq, exact: true })
}
