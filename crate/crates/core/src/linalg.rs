//! Sparse row-echelon elimination over exact fields: the rationals and
//! prime fields `Z/p`. Rows are vectors of `(column, value)` pairs sorted by
//! column; pivots are chosen at the smallest column of each reduced row.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

pub trait FieldElem: Clone + PartialEq + Send + Sync {
    fn is_zero(&self) -> bool;
    /// `self - k * other`
    fn sub_mul(&self, k: &Self, other: &Self) -> Self;
    /// `-k * other`
    fn neg_mul(k: &Self, other: &Self) -> Self;
    /// `self / other`
    fn div(&self, other: &Self) -> Self;
    /// `self + other`
    fn plus(&self, other: &Self) -> Self;
    /// `-self`
    fn negated(&self) -> Self;
}

impl FieldElem for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sub_mul(&self, k: &Self, other: &Self) -> Self {
        self - k * other
    }
    fn neg_mul(k: &Self, other: &Self) -> Self {
        -(k * other)
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// Residue modulo the prime [`PRIME`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp(pub u64);

/// Largest prime below `2^31`, so products fit comfortably in `u64`.
pub const PRIME: u64 = 2_147_483_647;

impl Fp {
    pub fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(PRIME as i64) as u64)
    }

    fn inv(self) -> Self {
        let mut result = 1u64;
        let mut base = self.0;
        let mut e = PRIME - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % PRIME;
            }
            base = base * base % PRIME;
            e >>= 1;
        }
        Fp(result)
    }
}

impl FieldElem for Fp {
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn sub_mul(&self, k: &Self, other: &Self) -> Self {
        Fp((self.0 + PRIME - k.0 * other.0 % PRIME) % PRIME)
    }
    fn neg_mul(k: &Self, other: &Self) -> Self {
        Fp((PRIME - k.0 * other.0 % PRIME) % PRIME)
    }
    fn div(&self, other: &Self) -> Self {
        Fp(self.0 * other.inv().0 % PRIME)
    }
    fn plus(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % PRIME)
    }
    fn negated(&self) -> Self {
        Fp((PRIME - self.0) % PRIME)
    }
}

pub type SparseRow<F> = Vec<(usize, F)>;

/// Incremental echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: FieldElem> Default for Echelon<F> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }
}

/// `row - k * pivot` for sorted sparse rows.
fn axpy<F: FieldElem>(row: &[(usize, F)], k: &F, pivot: &[(usize, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, F::neg_mul(k, &pivot[j].1)));
            j += 1;
        } else {
            let v = row[i].1.sub_mul(k, &pivot[j].1);
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<F: FieldElem> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces a column-sorted `row` against the current pivots; returns
    /// the remainder.
    pub fn reduce(&self, row: SparseRow<F>) -> SparseRow<F> {
        let mut done = Vec::new();
        let mut rest: SparseRow<F> = row.into_iter().filter(|e| !e.1.is_zero()).collect();
        let mut i = 0;
        while i < rest.len() {
            let col = rest[i].0;
            match self.pivots.get(&col) {
                Some(p) => {
                    let k = rest[i].1.div(&p[0].1);
                    rest = axpy(&rest[i + 1..], &k, &p[1..]);
                    i = 0;
                }
                None => {
                    done.push(rest[i].clone());
                    i += 1;
                }
            }
        }
        done
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        let mut row = row;
        row.sort_by_key(|e| e.0);
        let r = self.reduce(row);
        match r.first() {
            Some(&(col, _)) => {
                self.pivots.insert(col, r);
                true
            }
            None => false,
        }
    }
}

/// Rank of a set of sparse rows.
pub fn rank<F: FieldElem>(rows: impl IntoIterator<Item = SparseRow<F>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

pub fn rank_mod_p(rows: impl IntoIterator<Item = Vec<(usize, i64)>>) -> usize {
    rank(rows.into_iter().map(|r| r.into_iter().map(|(c, v)| (c, Fp::from_i64(v))).collect::<Vec<_>>()))
}

pub fn rank_rational(rows: impl IntoIterator<Item = Vec<(usize, i64)>>) -> usize {
    rank(rows.into_iter().map(|r| {
        r.into_iter().map(|(c, v)| (c, BigRational::from_integer(v.into()))).collect::<Vec<_>>()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_agree_on_small_matrices() {
        let rows = vec![vec![(0, 1), (1, 2)], vec![(0, 2), (1, 4)], vec![(1, 1), (2, -1)]];
        assert_eq!(rank_rational(rows.clone()), 2);
        assert_eq!(rank_mod_p(rows), 2);
        assert_eq!(rank_rational(Vec::<Vec<(usize, i64)>>::new()), 0);
    }

    #[test]
    fn unsorted_input_rows() {
        let rows = vec![vec![(3, 1), (0, 1)], vec![(0, 1), (3, 1)], vec![(3, 5)]];
        assert_eq!(rank_rational(rows.clone()), 2);
        assert_eq!(rank_mod_p(rows), 2);
    }

    #[test]
    fn modular_inverse() {
        let a = Fp::from_i64(-3);
        assert_eq!(a.div(&a), Fp(1));
        assert_eq!(Fp::from_i64(6).div(&Fp::from_i64(3)), Fp(2));
    }

    #[test]
    fn pivots_are_leading_columns() {
        let mut e = Echelon::<BigRational>::new();
        let q = |v: i64| BigRational::from_integer(v.into());
        e.insert(vec![(2, q(1)), (5, q(1))]);
        e.insert(vec![(2, q(1)), (4, q(3))]);
        assert_eq!(e.pivot_columns().collect::<Vec<_>>(), vec![2, 4]);
        assert!(e.reduce(vec![(2, q(1)), (4, q(3))]).is_empty());
        assert_eq!(e.reduce(vec![(2, q(2)), (4, q(3))]), vec![(5, q(-1))]);
    }
}
