//! Superspace with coordinates `x^m` and fermionic `theta_{mn}`, the
//! supersymmetry generators `Q^{mn}` and the covariant derivatives `D^{mn}`,
//! and an exhaustive check of their anticommutators on low-degree
//! monomials.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::lambda::{NPAIRS, PAIRS};
use crate::e510::fields::levi_civita;

/// Exponents of `x^1..x^5` and a bit mask of the `theta_{mn}` present.
pub type SuperMonomial = ([u8; 5], u16);

/// Polynomial superfield with integer coefficients. `theta` monomials are
/// ordered by increasing pair index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperPoly {
    terms: BTreeMap<SuperMonomial, i64>,
}

impl SuperPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(x: [u8; 5], theta: u16) -> Self {
        let mut p = Self::zero();
        p.add(x, theta, 1);
        p
    }

    pub fn add(&mut self, x: [u8; 5], theta: u16, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry((x, theta)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&(x, theta));
        }
    }

    pub fn terms(&self) -> &BTreeMap<SuperMonomial, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_scaled(&mut self, other: &SuperPoly, k: i64) {
        for (&(x, t), &c) in &other.terms {
            self.add(x, t, k * c);
        }
    }

    fn combine(&self, other: &SuperPoly, k: i64) -> SuperPoly {
        let mut out = self.clone();
        out.add_scaled(other, k);
        out
    }

    pub fn plus(&self, other: &SuperPoly) -> SuperPoly {
        self.combine(other, 1)
    }

    pub fn minus(&self, other: &SuperPoly) -> SuperPoly {
        self.combine(other, -1)
    }

    /// `d/dx^{r+1}`.
    pub fn d_x(&self, r: usize) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (&(x, t), &c) in &self.terms {
            if x[r] > 0 {
                let mut y = x;
                y[r] -= 1;
                out.add(y, t, c * x[r] as i64);
            }
        }
        out
    }

    /// Left derivative `d/d theta_v`.
    pub fn d_theta(&self, v: usize) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (&(x, t), &c) in &self.terms {
            if t >> v & 1 == 1 {
                let sign = if (t & ((1 << v) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                out.add(x, t & !(1 << v), sign * c);
            }
        }
        out
    }

    /// Left multiplication by `theta_v`.
    pub fn theta_times(&self, v: usize) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (&(x, t), &c) in &self.terms {
            if t >> v & 1 == 0 {
                let sign = if (t & ((1 << v) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                out.add(x, t | 1 << v, sign * c);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OperatorKind {
    /// `Q^{mn} = d/d theta_{mn} + sum_{p<q} epsilon^{mnpqr} theta_{pq} d_r`
    Q,
    /// `D^{mn} = d/d theta_{mn} - sum_{p<q} epsilon^{mnpqr} theta_{pq} d_r`
    D,
}

/// A first-order odd operator `d/d theta_{mn} + s epsilon theta d` with
/// `(m, n)` given by its pair index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuperspaceOperator {
    pub kind: OperatorKind,
    pub pair: usize,
}

impl SuperspaceOperator {
    pub fn apply(&self, f: &SuperPoly) -> SuperPoly {
        let (m, n) = PAIRS[self.pair];
        let sign = match self.kind {
            OperatorKind::Q => 1,
            OperatorKind::D => -1,
        };
        let mut out = f.d_theta(self.pair);
        let dx: Vec<SuperPoly> = (0..5).map(|r| f.d_x(r)).collect();
        for (v, &(p, q)) in PAIRS.iter().enumerate() {
            for (r, d) in dx.iter().enumerate() {
                let e = levi_civita([m, n, p, q, r]);
                if e != 0 {
                    out.add_scaled(&d.theta_times(v), sign * e);
                }
            }
        }
        out
    }
}

/// `{A, B} f = A(B f) + B(A f)`.
pub fn anticommutator(a: &SuperspaceOperator, b: &SuperspaceOperator, f: &SuperPoly) -> SuperPoly {
    a.apply(&b.apply(f)).plus(&b.apply(&a.apply(f)))
}

/// `k epsilon^{mnpqr} d_r f` for pairs `(m, n)`, `(p, q)`.
fn torsion_term(k: i64, a: usize, b: usize, f: &SuperPoly) -> SuperPoly {
    let ((m, n), (p, q)) = (PAIRS[a], PAIRS[b]);
    let mut out = SuperPoly::zero();
    for r in 0..5 {
        let e = levi_civita([m, n, p, q, r]);
        if e != 0 {
            out.add_scaled(&f.d_x(r), k * e);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub evaluations: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperspaceReport {
    pub max_x_degree: usize,
    pub monomials: usize,
    pub identities: Vec<IdentityResult>,
}

impl SuperspaceReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|i| i.failures == 0)
    }
}

/// All `x^a theta_J` with `|a| <= max_x_degree` and any `J`.
pub fn basis_monomials(max_x_degree: usize) -> Vec<SuperMonomial> {
    let mut xs = Vec::new();
    for d in 0..=max_x_degree {
        xs.extend(crate::e510::poly::Poly::exponents_of_degree(d));
    }
    let mut out = Vec::new();
    for x in xs {
        for t in 0..(1u16 << NPAIRS) {
            out.push((x, t));
        }
    }
    out
}

/// Checks, on every basis monomial,
/// `{Q^{mn}, Q^{pq}} = 2 epsilon^{mnpqr} d_r`, `{D^{mn}, Q^{pq}} = 0` and
/// `{D^{mn}, D^{pq}} = -2 epsilon^{mnpqr} d_r` (torsion
/// `T^{mn,pq,r} = 2 epsilon^{mnpqr}`), for all index pairs.
pub fn superspace_operator_check(max_x_degree: usize) -> SuperspaceReport {
    let monomials = basis_monomials(max_x_degree);
    let op = |kind, pair| SuperspaceOperator { kind, pair };
    let cases: [(&str, OperatorKind, OperatorKind, i64); 3] = [
        ("{Q,Q} = 2 eps d", OperatorKind::Q, OperatorKind::Q, 2),
        ("{D,Q} = 0", OperatorKind::D, OperatorKind::Q, 0),
        ("{D,D} = -2 eps d", OperatorKind::D, OperatorKind::D, -2),
    ];
    let identities = cases
        .iter()
        .map(|&(name, ka, kb, k)| {
            let results: Vec<(usize, Option<String>)> = (0..NPAIRS * NPAIRS)
                .into_par_iter()
                .map(|ab| {
                    let (a, b) = (ab / NPAIRS, ab % NPAIRS);
                    let (oa, ob) = (op(ka, a), op(kb, b));
                    let mut fails = 0;
                    let mut first = None;
                    for &(x, t) in &monomials {
                        let f = SuperPoly::monomial(x, t);
                        let lhs = anticommutator(&oa, &ob, &f);
                        let rhs = torsion_term(k, a, b, &f);
                        if lhs != rhs {
                            fails += 1;
                            first.get_or_insert_with(|| format!("pairs {:?}, {:?} on x^{x:?} theta {t:#b}", PAIRS[a], PAIRS[b]));
                        }
                    }
                    (fails, first)
                })
                .collect();
            IdentityResult {
                name: name.into(),
                evaluations: monomials.len() * NPAIRS * NPAIRS,
                failures: results.iter().map(|r| r.0).sum(),
                first_failure: results.into_iter().find_map(|r| r.1),
            }
        })
        .collect();
    SuperspaceReport { max_x_degree, monomials: monomials.len(), identities }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pscohomology::lambda::pair_of;

    #[test]
    fn qq_on_x5_gives_two() {
        let q12 = SuperspaceOperator { kind: OperatorKind::Q, pair: pair_of(0, 1) };
        let q34 = SuperspaceOperator { kind: OperatorKind::Q, pair: pair_of(2, 3) };
        let one = SuperPoly::monomial([0; 5], 0);
        assert!(anticommutator(&q12, &q34, &one).is_zero());
        let x5 = SuperPoly::monomial([0, 0, 0, 0, 1], 0);
        let mut two = SuperPoly::zero();
        two.add([0; 5], 0, 2);
        assert_eq!(anticommutator(&q12, &q34, &x5), two);
    }

    #[test]
    fn theta_derivative_signs() {
        // d/d theta_0 (theta_0 theta_1) = theta_1; d/d theta_1 (theta_0 theta_1) = -theta_0
        let f = SuperPoly::monomial([0; 5], 0b11);
        assert_eq!(f.d_theta(0), SuperPoly::monomial([0; 5], 0b10));
        let mut minus = SuperPoly::zero();
        minus.add([0; 5], 0b01, -1);
        assert_eq!(f.d_theta(1), minus);
        assert_eq!(SuperPoly::monomial([0; 5], 0b10).theta_times(0), f);
    }

    #[test]
    fn low_degree_identities() {
        let r = superspace_operator_check(1);
        assert!(r.passed(), "{:?}", r.identities);
        assert_eq!(r.monomials, 6 * 1024);
    }
}
