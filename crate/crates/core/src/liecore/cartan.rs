use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub(crate) type Q64 = Ratio<i64>;

/// Cartan matrix of a finite-type root system.
///
/// Convention: `a[i][j] = <alpha_i^vee, alpha_j>`, so the Dynkin labels of
/// the simple root `alpha_j` are the `j`-th column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i32>,
}

impl CartanMatrix {
    pub fn new(rows: Vec<Vec<i32>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        if rows.iter().any(|r| r.len() != rank) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        let entries: Vec<i32> = rows.into_iter().flatten().collect();
        let m = CartanMatrix { rank, entries };
        m.validate()?;
        Ok(m)
    }

    /// Type `A_n`, the Cartan matrix of `sl(n+1)`.
    pub fn a(n: usize) -> Self {
        let mut rows = vec![vec![0; n]; n];
        for i in 0..n {
            rows[i][i] = 2;
            if i + 1 < n {
                rows[i][i + 1] = -1;
                rows[i + 1][i] = -1;
            }
        }
        CartanMatrix::new(rows).expect("A_n is of finite type")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.rank + j]
    }

    fn validate(&self) -> Result<()> {
        let r = self.rank;
        for i in 0..r {
            if self.get(i, i) != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..r {
                if i == j {
                    continue;
                }
                if self.get(i, j) > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({i},{j}) is positive"
                    )));
                }
                if (self.get(i, j) == 0) != (self.get(j, i) == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) are not simultaneously zero"
                    )));
                }
            }
        }
        let d = self.symmetrizer()?;
        // Positive-definiteness of D A via leading principal minors.
        let sym: Vec<Vec<Q64>> = (0..r)
            .map(|i| (0..r).map(|j| d[i] * Q64::from(self.get(i, j) as i64)).collect())
            .collect();
        for k in 1..=r {
            let minor: Vec<Vec<Q64>> = (0..k).map(|i| sym[i][..k].to_vec()).collect();
            let det = determinant(minor);
            if !det.is_positive() {
                return Err(Error::InvalidCartan(format!(
                    "symmetrization is not positive definite (leading minor {k} = {det})"
                )));
            }
        }
        Ok(())
    }

    /// Positive `d_i` with `d_i a_ij = d_j a_ji`, normalised to 1 on the
    /// first node of every connected component.
    pub(crate) fn symmetrizer(&self) -> Result<Vec<Q64>> {
        let r = self.rank;
        let mut d: Vec<Option<Q64>> = vec![None; r];
        for start in 0..r {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(Q64::one());
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let di = d[i].unwrap();
                for j in 0..r {
                    if i == j || self.get(i, j) == 0 {
                        continue;
                    }
                    let dj = di * Q64::from(self.get(i, j) as i64) / Q64::from(self.get(j, i) as i64);
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            stack.push(j);
                        }
                        Some(existing) if existing != dj => {
                            return Err(Error::InvalidCartan("matrix is not symmetrizable".into()))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(d.into_iter().map(Option::unwrap).collect())
    }

    pub(crate) fn inverse(&self) -> Vec<Vec<Q64>> {
        let r = self.rank;
        let mut a: Vec<Vec<Q64>> = (0..r)
            .map(|i| {
                let mut row: Vec<Q64> = (0..r).map(|j| Q64::from(self.get(i, j) as i64)).collect();
                row.extend((0..r).map(|j| if i == j { Q64::one() } else { Q64::zero() }));
                row
            })
            .collect();
        for col in 0..r {
            let piv = (col..r).find(|&i| !a[i][col].is_zero()).expect("finite type is invertible");
            a.swap(col, piv);
            let inv = a[col][col].recip();
            for v in a[col].iter_mut() {
                *v *= inv;
            }
            for i in 0..r {
                if i != col && !a[i][col].is_zero() {
                    let f = a[i][col];
                    let pivot_row = a[col].clone();
                    for (v, p) in a[i].iter_mut().zip(pivot_row) {
                        *v -= f * p;
                    }
                }
            }
        }
        a.into_iter().map(|row| row[r..].to_vec()).collect()
    }
}

fn determinant(mut m: Vec<Vec<Q64>>) -> Q64 {
    let n = m.len();
    let mut det = Q64::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Q64::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det *= m[col][col];
        for i in col + 1..n {
            let f = m[i][col] / m[col][col];
            for j in col..n {
                let v = m[col][j];
                m[i][j] -= f * v;
            }
        }
    }
    det
}
