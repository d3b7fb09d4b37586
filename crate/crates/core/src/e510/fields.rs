//! Divergence-free polynomial vector fields, closed polynomial 2-forms and
//! the E(5,10) bracket between them.

use std::fmt;

use crate::error::{Error, Result};
use crate::koszul::Parity;

use super::poly::{Poly, NVARS};

/// Index of the pair `(m, n)`, `m < n`, among the ten 2-form components.
pub fn pair_index(m: usize, n: usize) -> usize {
    debug_assert!(m < n && n < NVARS);
    m * (2 * NVARS - m - 1) / 2 + (n - m - 1)
}

/// The ten pairs `m < n` in [`pair_index`] order.
pub fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..NVARS).flat_map(|m| (m + 1..NVARS).map(move |n| (m, n)))
}

/// `epsilon^{abcde}` with `epsilon^{01234} = +1` (zero-based indices).
pub fn levi_civita(idx: [usize; NVARS]) -> i64 {
    let mut seen = [false; NVARS];
    for &i in &idx {
        if i >= NVARS || seen[i] {
            return 0;
        }
        seen[i] = true;
    }
    let mut inversions = 0;
    for a in 0..NVARS {
        for b in a + 1..NVARS {
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyVectorField {
    comps: [Poly; NVARS],
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyTwoForm {
    comps: [Poly; 10],
}

impl PolyVectorField {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Validating constructor: components `xi^m`, rejected unless
    /// divergence-free.
    pub fn new(comps: [Poly; NVARS]) -> Result<Self> {
        let v = PolyVectorField { comps };
        v.check()?;
        Ok(v)
    }

    /// `xi^m = sum_n d_n A^{mn}` for an antisymmetric potential given by its
    /// components `A^{mn}`, `m < n`; divergence-free by construction.
    pub fn from_potential(a: &[Poly; 10]) -> Self {
        let mut comps: [Poly; NVARS] = Default::default();
        for (m, n) in pairs() {
            let p = &a[pair_index(m, n)];
            comps[m] = &comps[m] + &p.deriv(n);
            comps[n] = &comps[n] - &p.deriv(m);
        }
        PolyVectorField { comps }
    }

    pub fn component(&self, m: usize) -> &Poly {
        &self.comps[m]
    }

    pub fn components(&self) -> &[Poly; NVARS] {
        &self.comps
    }

    pub fn divergence(&self) -> Poly {
        let mut d = Poly::zero();
        for m in 0..NVARS {
            d = &d + &self.comps[m].deriv(m);
        }
        d
    }

    pub fn check(&self) -> Result<()> {
        let d = self.divergence();
        if d.is_zero() {
            Ok(())
        } else {
            Err(Error::ConstraintViolated(format!("vector field has divergence {d}")))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.comps.iter().filter_map(Poly::degree).max()
    }

    /// `xi^p d_p f`.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero();
        for p in 0..NVARS {
            out.add_product(1, &self.comps[p], &f.deriv(p));
        }
        out
    }

    /// `[xi, eta]^m = xi^p d_p eta^m - eta^p d_p xi^m`.
    pub fn commutator(&self, other: &Self) -> Self {
        let comps = std::array::from_fn(|m| &self.apply(&other.comps[m]) - &other.apply(&self.comps[m]));
        PolyVectorField { comps }
    }

    fn add(&self, o: &Self) -> Self {
        PolyVectorField { comps: std::array::from_fn(|m| &self.comps[m] + &o.comps[m]) }
    }

    fn neg(&self) -> Self {
        PolyVectorField { comps: std::array::from_fn(|m| -&self.comps[m]) }
    }
}

impl PolyTwoForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Validating constructor from components `chi_{mn}`, `m < n`.
    pub fn new(comps: [Poly; 10]) -> Result<Self> {
        let f = PolyTwoForm { comps };
        f.check()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(comps: [Poly; 10]) -> Self {
        PolyTwoForm { comps }
    }

    /// `(d beta)_{mn} = d_m beta_n - d_n beta_m`; closed by construction.
    pub fn exterior_derivative(beta: &[Poly; NVARS]) -> Self {
        let mut comps: [Poly; 10] = Default::default();
        for (m, n) in pairs() {
            comps[pair_index(m, n)] = &beta[n].deriv(m) - &beta[m].deriv(n);
        }
        PolyTwoForm { comps }
    }

    /// Antisymmetric component access `chi_{mn}`.
    pub fn get(&self, m: usize, n: usize) -> Poly {
        match m.cmp(&n) {
            std::cmp::Ordering::Less => self.comps[pair_index(m, n)].clone(),
            std::cmp::Ordering::Greater => -&self.comps[pair_index(n, m)],
            std::cmp::Ordering::Equal => Poly::zero(),
        }
    }

    fn get_ref(&self, m: usize, n: usize) -> Option<(&Poly, i64)> {
        match m.cmp(&n) {
            std::cmp::Ordering::Less => Some((&self.comps[pair_index(m, n)], 1)),
            std::cmp::Ordering::Greater => Some((&self.comps[pair_index(n, m)], -1)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn components(&self) -> &[Poly; 10] {
        &self.comps
    }

    /// Components `(d chi)_{pmn}`, `p < m < n`, in lexicographic order.
    pub fn exterior_derivative_components(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        for p in 0..NVARS {
            for m in p + 1..NVARS {
                for n in m + 1..NVARS {
                    let mut c = self.comps[pair_index(m, n)].deriv(p);
                    c = &c - &self.comps[pair_index(p, n)].deriv(m);
                    c = &c + &self.comps[pair_index(p, m)].deriv(n);
                    out.push(c);
                }
            }
        }
        out
    }

    pub fn check(&self) -> Result<()> {
        match self.exterior_derivative_components().into_iter().find(|c| !c.is_zero()) {
            None => Ok(()),
            Some(c) => Err(Error::ConstraintViolated(format!("2-form is not closed: d chi has component {c}"))),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.comps.iter().filter_map(Poly::degree).max()
    }

    /// `(star(chi ^ psi))^r = epsilon^{mnpqr} chi_{mn} psi_{pq}` summed over
    /// all index values.
    pub fn star_wedge(&self, other: &Self) -> PolyVectorField {
        let mut comps: [Poly; NVARS] = Default::default();
        for (m, n) in pairs() {
            let a = &self.comps[pair_index(m, n)];
            if a.is_zero() {
                continue;
            }
            for (p, q) in pairs() {
                let b = &other.comps[pair_index(p, q)];
                if b.is_zero() {
                    continue;
                }
                for (r, comp) in comps.iter_mut().enumerate() {
                    let e = levi_civita([m, n, p, q, r]);
                    if e != 0 {
                        // four orderings of (m,n) and (p,q) contribute equally
                        comp.add_product(4 * e, a, b);
                    }
                }
            }
        }
        PolyVectorField { comps }
    }

    /// `(L_xi chi)_{mn} = xi^p d_p chi_{mn} + chi_{pn} d_m xi^p + chi_{mp} d_n xi^p`.
    pub fn lie_derivative(&self, xi: &PolyVectorField) -> Self {
        let mut out = PolyTwoForm::zero();
        self.add_lie_derivative(xi, &mut out);
        out
    }

    /// `acc += L_xi self`.
    pub fn add_lie_derivative(&self, xi: &PolyVectorField, acc: &mut PolyTwoForm) {
        let dxi: Vec<Vec<Poly>> = (0..NVARS).map(|p| (0..NVARS).map(|m| xi.comps[p].deriv(m)).collect()).collect();
        for (m, n) in pairs() {
            let slot = &mut acc.comps[pair_index(m, n)];
            *slot = &*slot + &xi.apply(&self.comps[pair_index(m, n)]);
            for p in 0..NVARS {
                if let Some((c, s)) = self.get_ref(p, n) {
                    slot.add_product(s, c, &dxi[p][m]);
                }
                if let Some((c, s)) = self.get_ref(m, p) {
                    slot.add_product(s, c, &dxi[p][n]);
                }
            }
        }
    }

    fn add(&self, o: &Self) -> Self {
        PolyTwoForm { comps: std::array::from_fn(|i| &self.comps[i] + &o.comps[i]) }
    }

    fn neg(&self) -> Self {
        PolyTwoForm { comps: std::array::from_fn(|i| -&self.comps[i]) }
    }
}

/// An element `P_xi + Q_chi` of the polynomial E(5,10).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct E510Element {
    pub even: PolyVectorField,
    pub odd: PolyTwoForm,
}

impl E510Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn even(xi: PolyVectorField) -> Self {
        E510Element { even: xi, odd: PolyTwoForm::zero() }
    }

    pub fn odd(chi: PolyTwoForm) -> Self {
        E510Element { even: PolyVectorField::zero(), odd: chi }
    }

    pub fn check(&self) -> Result<()> {
        self.even.check()?;
        self.odd.check()
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Parity when the element is homogeneous and nonzero.
    pub fn parity(&self) -> Option<Parity> {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (false, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.even.degree().max(self.odd.degree())
    }

    pub fn add(&self, o: &Self) -> Self {
        E510Element { even: self.even.add(&o.even), odd: self.odd.add(&o.odd) }
    }

    pub fn neg(&self) -> Self {
        E510Element { even: self.even.neg(), odd: self.odd.neg() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn homogeneous_parts(&self) -> [(Parity, E510Element); 2] {
        [
            (Parity::Even, E510Element::even(self.even.clone())),
            (Parity::Odd, E510Element::odd(self.odd.clone())),
        ]
    }
}

impl fmt::Display for E510Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (m, c) in self.even.comps.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("xi^{} = {c}", m + 1));
            }
        }
        for (m, n) in pairs() {
            let c = &self.odd.comps[pair_index(m, n)];
            if !c.is_zero() {
                parts.push(format!("chi_{}{} = {c}", m + 1, n + 1));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// The superbracket, bilinear extension of
/// `[P_xi, P_eta] = P_{[xi,eta]}`, `[P_xi, Q_chi] = Q_{L_xi chi}`,
/// `[Q_chi, Q_psi] = P_{star(chi ^ psi)}`.
pub fn bracket(a: &E510Element, b: &E510Element) -> Result<E510Element> {
    a.check()?;
    b.check()?;
    Ok(bracket_unchecked(a, b))
}

pub(crate) fn bracket_unchecked(a: &E510Element, b: &E510Element) -> E510Element {
    let even = a.even.commutator(&b.even).add(&a.odd.star_wedge(&b.odd));
    let mut odd = b.odd.lie_derivative(&a.even);
    odd = odd.add(&a.odd.lie_derivative(&b.even).neg());
    E510Element { even, odd }
}

fn sign(p: Parity, q: Parity) -> bool {
    p == Parity::Odd && q == Parity::Odd
}

/// Graded Jacobiator `[a,[b,c]] - [[a,b],c] - (-1)^{|a||b|} [b,[a,c]]`,
/// extended trilinearly over homogeneous components.
pub fn jacobi_test(a: &E510Element, b: &E510Element, c: &E510Element) -> Result<E510Element> {
    a.check()?;
    b.check()?;
    c.check()?;
    let mut total = E510Element::zero();
    for (pa, x) in a.homogeneous_parts() {
        if x.is_zero() {
            continue;
        }
        for (pb, y) in b.homogeneous_parts() {
            if y.is_zero() {
                continue;
            }
            for (_, z) in c.homogeneous_parts() {
                if z.is_zero() {
                    continue;
                }
                let lhs = bracket_unchecked(&x, &bracket_unchecked(&y, &z));
                let first = bracket_unchecked(&bracket_unchecked(&x, &y), &z);
                let second = bracket_unchecked(&y, &bracket_unchecked(&x, &z));
                let mut j = lhs.sub(&first);
                j = if sign(pa, pb) { j.add(&second) } else { j.sub(&second) };
                total = total.add(&j);
            }
        }
    }
    Ok(total)
}

/// `b <-> a` graded antisymmetry defect `[a,b] + (-1)^{|a||b|} [b,a]`.
pub fn antisymmetry_defect(a: &E510Element, b: &E510Element) -> Result<E510Element> {
    a.check()?;
    b.check()?;
    let mut total = E510Element::zero();
    for (pa, x) in a.homogeneous_parts() {
        for (pb, y) in b.homogeneous_parts() {
            let ab = bracket_unchecked(&x, &y);
            let ba = bracket_unchecked(&y, &x);
            total = total.add(&if sign(pa, pb) { ab.sub(&ba) } else { ab.add(&ba) });
        }
    }
    Ok(total)
}
