//! The coordinate ring of the minimal orbit: polynomials in the ten
//! `lambda_{mn}` (`m < n`) modulo the Plücker relations
//! `lambda_{[mn} lambda_{pq]} = 0`.
//!
//! Two independent descriptions are provided. [`lambda_quotient_basis`]
//! row-reduces the degree-`g` part of the ideal in each torus-weight space.
//! [`LambdaRing`] works with standard monomials (products of pairwise
//! non-nested `lambda`s) and the straightening rule
//! `lambda_{mq} lambda_{np} -> lambda_{mp} lambda_{nq} - lambda_{mn} lambda_{pq}`
//! for `m < n < p < q`, which terminates because the total squared span of
//! the index pairs strictly decreases.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::liecore::{sl5, Weight};
use crate::linalg::Echelon;

pub const NPAIRS: usize = 10;

/// Exponents of the ten `lambda_{mn}` in lexicographic pair order.
pub type Mono = [u8; NPAIRS];

/// GL(5) torus weight (occupation number of each index).
pub type GlWeight = [i8; 5];

/// The index pairs `(m, n)`, `m < n`, zero-based, lexicographic.
pub const PAIRS: [(usize, usize); NPAIRS] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

pub fn pair_of(m: usize, n: usize) -> usize {
    PAIRS.iter().position(|&p| p == (m, n)).expect("valid pair")
}

pub fn pair_weight(v: usize) -> GlWeight {
    let mut w = [0; 5];
    w[PAIRS[v].0] += 1;
    w[PAIRS[v].1] += 1;
    w
}

pub fn add_weights(a: &GlWeight, b: &GlWeight) -> GlWeight {
    std::array::from_fn(|i| a[i] + b[i])
}

pub fn sub_weights(a: &GlWeight, b: &GlWeight) -> GlWeight {
    std::array::from_fn(|i| a[i] - b[i])
}

pub fn mono_weight(m: &Mono) -> GlWeight {
    let mut w = [0i8; 5];
    for (v, &e) in m.iter().enumerate() {
        w[PAIRS[v].0] += e as i8;
        w[PAIRS[v].1] += e as i8;
    }
    w
}

pub fn mono_degree(m: &Mono) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

/// `lambda_{mq}` and `lambda_{np}` with `m < n < p < q`.
fn nested(a: usize, b: usize) -> bool {
    let ((m, q), (n, p)) = (PAIRS[a], PAIRS[b]);
    m < n && p < q
}

/// First nested pair of variables present in `m`.
fn find_nested(m: &Mono) -> Option<(usize, usize)> {
    for a in 0..NPAIRS {
        if m[a] == 0 {
            continue;
        }
        for b in 0..NPAIRS {
            if m[b] > 0 && nested(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_standard(m: &Mono) -> bool {
    find_nested(m).is_none()
}

/// Standard monomials of degree `g`: multichains in the product order on
/// index pairs.
pub fn standard_monomials(g: usize) -> Vec<Mono> {
    fn rec(start: usize, left: usize, cur: &mut Mono, out: &mut Vec<Mono>) {
        if left == 0 {
            out.push(*cur);
            return;
        }
        for v in start..NPAIRS {
            let (m, n) = PAIRS[v];
            let last = (0..NPAIRS).rev().find(|&u| cur[u] > 0);
            if let Some(u) = last {
                let (a, b) = PAIRS[u];
                if !(a <= m && b <= n) {
                    continue;
                }
            }
            cur[v] += 1;
            rec(v, left - 1, cur, out);
            cur[v] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(0, g, &mut [0; NPAIRS], &mut out);
    out
}

/// All monomials of degree `g` in the ten variables.
pub fn all_monomials(g: usize) -> Vec<Mono> {
    fn rec(i: usize, left: usize, cur: &mut Mono, out: &mut Vec<Mono>) {
        if i == NPAIRS - 1 {
            cur[i] = left as u8;
            out.push(*cur);
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a as u8;
            rec(i + 1, left - a, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, g, &mut [0; NPAIRS], &mut out);
    out
}

/// Straightening of an arbitrary monomial into standard monomials.
pub struct Straightener {
    memo: HashMap<Mono, Vec<(Mono, i64)>>,
}

impl Default for Straightener {
    fn default() -> Self {
        Straightener { memo: HashMap::new() }
    }
}

impl Straightener {
    pub fn normal_form(&mut self, m: &Mono) -> Vec<(Mono, i64)> {
        if let Some(r) = self.memo.get(m) {
            return r.clone();
        }
        let result = match find_nested(m) {
            None => vec![(*m, 1)],
            Some((a, b)) => {
                let ((mm, q), (n, p)) = (PAIRS[a], PAIRS[b]);
                let mut base = *m;
                base[a] -= 1;
                base[b] -= 1;
                let mut first = base;
                first[pair_of(mm, p)] += 1;
                first[pair_of(n, q)] += 1;
                let mut second = base;
                second[pair_of(mm, n)] += 1;
                second[pair_of(p, q)] += 1;
                let mut acc: BTreeMap<Mono, i64> = BTreeMap::new();
                for (t, c) in self.normal_form(&first) {
                    *acc.entry(t).or_default() += c;
                }
                for (t, c) in self.normal_form(&second) {
                    *acc.entry(t).or_default() -= c;
                }
                acc.into_iter().filter(|e| e.1 != 0).collect()
            }
        };
        self.memo.insert(*m, result.clone());
        result
    }
}

/// Degree-`g` piece of the ring in the standard-monomial basis.
pub struct LambdaDegree {
    pub basis: Vec<Mono>,
    pub index: HashMap<Mono, usize>,
    pub weights: Vec<GlWeight>,
    pub blocks: HashMap<GlWeight, Vec<usize>>,
    /// `mult[s][v]`: `lambda_v` times basis element `s`, in the degree
    /// `g + 1` basis (empty at the top degree).
    pub mult: Vec<[Vec<(u32, i64)>; NPAIRS]>,
}

pub struct LambdaRing {
    pub degrees: Vec<LambdaDegree>,
}

impl LambdaRing {
    fn build(max_degree: usize) -> Self {
        let mut degrees: Vec<LambdaDegree> = (0..=max_degree)
            .into_par_iter()
            .map(|g| {
                let basis = standard_monomials(g);
                let index = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
                let weights: Vec<GlWeight> = basis.iter().map(mono_weight).collect();
                let mut blocks: HashMap<GlWeight, Vec<usize>> = HashMap::new();
                for (i, w) in weights.iter().enumerate() {
                    blocks.entry(*w).or_default().push(i);
                }
                LambdaDegree { basis, index, weights, blocks, mult: Vec::new() }
            })
            .collect();
        let mults: Vec<Vec<[Vec<(u32, i64)>; NPAIRS]>> = (0..max_degree)
            .into_par_iter()
            .map(|g| {
                let src = &degrees[g];
                let dst = &degrees[g + 1];
                let chunk = 256;
                src.basis
                    .par_chunks(chunk)
                    .flat_map_iter(|ms| {
                        let mut st = Straightener::default();
                        ms.iter()
                            .map(|s| {
                                std::array::from_fn(|v| {
                                    let mut t = *s;
                                    t[v] += 1;
                                    st.normal_form(&t)
                                        .into_iter()
                                        .map(|(u, c)| (dst.index[&u] as u32, c))
                                        .collect::<Vec<_>>()
                                })
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect()
            })
            .collect();
        for (g, m) in mults.into_iter().enumerate() {
            degrees[g].mult = m;
        }
        LambdaRing { degrees }
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn dim(&self, g: usize) -> usize {
        self.degrees[g].basis.len()
    }
}

/// Shared ring with standard-monomial data through `max_degree`.
pub fn lambda_ring(max_degree: usize) -> Arc<LambdaRing> {
    static RING: OnceLock<RwLock<Option<Arc<LambdaRing>>>> = OnceLock::new();
    let cell = RING.get_or_init(|| RwLock::new(None));
    if let Some(r) = cell.read().expect("ring lock").as_ref() {
        if r.max_degree() >= max_degree {
            return r.clone();
        }
    }
    let mut guard = cell.write().expect("ring lock");
    if let Some(r) = guard.as_ref() {
        if r.max_degree() >= max_degree {
            return r.clone();
        }
    }
    let ring = Arc::new(LambdaRing::build(max_degree));
    *guard = Some(ring.clone());
    ring
}

/// The degree-`g` quotient obtained by row reduction of the ideal.
pub struct LambdaQuotientBasis {
    pub degree: usize,
    /// Basis monomials (the non-pivot columns), sorted.
    pub basis: Vec<Mono>,
    pub weights: Vec<GlWeight>,
    blocks: HashMap<GlWeight, (Vec<Mono>, Echelon<BigRational>)>,
    position: HashMap<Mono, usize>,
}

impl LambdaQuotientBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Expresses an arbitrary degree-`g` monomial in the basis.
    pub fn reduce(&self, m: &Mono) -> Result<Vec<(usize, BigRational)>> {
        if mono_degree(m) != self.degree {
            return Err(Error::Internal(format!("monomial of degree {} in degree {}", mono_degree(m), self.degree)));
        }
        let (cols, ech) = &self.blocks[&mono_weight(m)];
        let c = cols.iter().position(|x| x == m).expect("monomial in its weight block");
        let rem = ech.reduce(vec![(c, BigRational::from_integer(1.into()))]);
        Ok(rem.into_iter().map(|(col, v)| (self.position[&cols[col]], v)).collect())
    }
}

/// `lambda_{mn} lambda_{pq} - lambda_{mp} lambda_{nq} + lambda_{mq} lambda_{np}`.
fn plucker_relations() -> Vec<Vec<(Mono, i64)>> {
    let mut out = Vec::new();
    for m in 0..5 {
        for n in m + 1..5 {
            for p in n + 1..5 {
                for q in p + 1..5 {
                    let quad = |a: (usize, usize), b: (usize, usize)| {
                        let mut e = [0; NPAIRS];
                        e[pair_of(a.0, a.1)] += 1;
                        e[pair_of(b.0, b.1)] += 1;
                        e
                    };
                    out.push(vec![(quad((m, n), (p, q)), 1), (quad((m, p), (n, q)), -1), (quad((m, q), (n, p)), 1)]);
                }
            }
        }
    }
    out
}

/// Basis of the degree-`g` part of the quotient ring by exact rational row
/// reduction of the ideal, one torus-weight space at a time. Columns are
/// ordered with non-standard monomials first, so the pivots land on them
/// and the surviving columns are the standard monomials; the dimension is
/// checked against `dim(00g0)`.
pub fn lambda_quotient_basis(g: usize) -> Result<LambdaQuotientBasis> {
    let mut by_weight: BTreeMap<GlWeight, Vec<Mono>> = BTreeMap::new();
    for m in all_monomials(g) {
        by_weight.entry(mono_weight(&m)).or_default().push(m);
    }
    let relations = plucker_relations();
    let lower = if g >= 2 { all_monomials(g - 2) } else { Vec::new() };
    let mut generators: HashMap<GlWeight, Vec<Vec<(Mono, i64)>>> = HashMap::new();
    for base in &lower {
        for rel in &relations {
            let terms: Vec<(Mono, i64)> = rel
                .iter()
                .map(|(q, c)| {
                    let mut e = *base;
                    for i in 0..NPAIRS {
                        e[i] += q[i];
                    }
                    (e, *c)
                })
                .collect();
            generators.entry(mono_weight(&terms[0].0)).or_default().push(terms);
        }
    }
    let mut blocks = HashMap::new();
    let mut basis = Vec::new();
    for (w, mut cols) in by_weight {
        cols.sort_by_key(|m| (is_standard(m), *m));
        let col_of: HashMap<Mono, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut ech = Echelon::new();
        for rel in generators.get(&w).into_iter().flatten() {
            let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
            for (m, c) in rel {
                *row.entry(col_of[m]).or_insert_with(BigRational::zero) += BigRational::from_integer((*c).into());
            }
            ech.insert(row.into_iter().filter(|e| !e.1.is_zero()).collect());
        }
        let pivots: Vec<usize> = ech.pivot_columns().collect();
        for (i, m) in cols.iter().enumerate() {
            if !pivots.contains(&i) {
                basis.push(*m);
            }
        }
        blocks.insert(w, (cols, ech));
    }
    basis.sort();
    let expected: BigInt = sl5().weyl_dim(&Weight::new(&[0, 0, g as i32, 0]))?;
    if BigInt::from(basis.len()) != expected {
        return Err(Error::Internal(format!(
            "quotient ring in degree {g} has dimension {}, expected {expected}",
            basis.len()
        )));
    }
    let weights = basis.iter().map(mono_weight).collect();
    let position = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    Ok(LambdaQuotientBasis { degree: g, basis, weights, blocks, position })
}

/// Dimension of the degree-`g` piece from the standard monomials.
pub fn quotient_dimension(g: usize) -> usize {
    standard_monomials(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_monomial_counts() {
        let dims: Vec<_> = (0..=4).map(quotient_dimension).collect();
        assert_eq!(dims, vec![1, 10, 50, 175, 490]);
        for m in standard_monomials(3) {
            assert!(is_standard(&m));
        }
    }

    #[test]
    fn straightening_reduces_a_nested_pair() {
        let mut st = Straightener::default();
        let mut m = [0; NPAIRS];
        m[pair_of(0, 3)] = 1;
        m[pair_of(1, 2)] = 1;
        let nf = st.normal_form(&m);
        assert_eq!(nf.len(), 2);
        assert!(nf.iter().all(|(t, _)| is_standard(t)));
    }

    #[test]
    fn row_reduction_matches_straightening() {
        let mut st = Straightener::default();
        for g in 0..=3 {
            let q = lambda_quotient_basis(g).unwrap();
            assert_eq!(q.basis, {
                let mut s = standard_monomials(g);
                s.sort();
                s
            });
            for m in all_monomials(g) {
                let lhs: BTreeMap<Mono, BigRational> =
                    q.reduce(&m).unwrap().into_iter().map(|(i, c)| (q.basis[i], c)).collect();
                let rhs: BTreeMap<Mono, BigRational> = st
                    .normal_form(&m)
                    .into_iter()
                    .map(|(t, c)| (t, BigRational::from_integer(c.into())))
                    .collect();
                assert_eq!(lhs, rhs, "{m:?}");
            }
        }
    }

    #[test]
    fn ring_multiplication_is_commutative() {
        let ring = lambda_ring(3);
        let d1 = &ring.degrees[1];
        for a in 0..NPAIRS {
            for b in 0..NPAIRS {
                let s_a = d1.index[&{
                    let mut m = [0; NPAIRS];
                    m[a] = 1;
                    m
                }];
                let s_b = d1.index[&{
                    let mut m = [0; NPAIRS];
                    m[b] = 1;
                    m
                }];
                let mut ab = d1.mult[s_a][b].clone();
                let mut ba = d1.mult[s_b][a].clone();
                ab.sort();
                ba.sort();
                assert_eq!(ab, ba);
            }
        }
    }
}
