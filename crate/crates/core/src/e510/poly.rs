//! Sparse polynomials in five variables with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub const NVARS: usize = 5;

pub type Exponent = [u8; NVARS];

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Exponent, BigRational>,
}

fn degree_of(e: &Exponent) -> usize {
    e.iter().map(|&a| a as usize).sum()
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::monomial([0; NVARS], BigRational::from_integer(c.into()))
    }

    pub fn monomial(e: Exponent, c: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term(e, c);
        p
    }

    /// The coordinate `x^{i+1}` (zero-based index `i`).
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Poly::monomial(e, BigRational::one())
    }

    pub fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(degree_of).max()
    }

    pub fn homogeneous_part(&self, d: usize) -> Poly {
        Poly { terms: self.terms.iter().filter(|(e, _)| degree_of(e) == d).map(|(e, c)| (*e, c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// `d/dx^{i+1}`.
    pub fn deriv(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = *e;
                f[i] -= 1;
                out.add_term(f, c * BigRational::from_integer(BigInt::from(e[i])));
            }
        }
        out
    }

    /// `self += k * a * b`, avoiding intermediate allocations.
    pub fn add_product(&mut self, k: i64, a: &Poly, b: &Poly) {
        if k == 0 {
            return;
        }
        let k = BigRational::from_integer(k.into());
        for (ea, ca) in &a.terms {
            let kc = &k * ca;
            for (eb, cb) in &b.terms {
                let mut e = *ea;
                for i in 0..NVARS {
                    e[i] += eb[i];
                }
                self.add_term(e, &kc * cb);
            }
        }
    }

    /// All exponent vectors of total degree `d`, in lexicographic order.
    pub fn exponents_of_degree(d: usize) -> Vec<Exponent> {
        fn rec(i: usize, left: usize, cur: &mut Exponent, out: &mut Vec<Exponent>) {
            if i == NVARS - 1 {
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
        rec(0, d, &mut [0; NVARS], &mut out);
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        out.add_product(1, self, o);
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{a}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leibniz_rule() {
        let a = &(&Poly::var(0) * &Poly::var(0)) + &Poly::var(2);
        let b = &Poly::var(0) * &Poly::var(1);
        let lhs = (&a * &b).deriv(0);
        let rhs = &(&a.deriv(0) * &b) + &(&a * &b.deriv(0));
        assert_eq!(lhs, rhs);
        assert_eq!((&a - &a), Poly::zero());
    }

    #[test]
    fn exponent_counts() {
        assert_eq!(Poly::exponents_of_degree(0).len(), 1);
        assert_eq!(Poly::exponents_of_degree(2).len(), 15);
        assert_eq!(Poly::exponents_of_degree(3).len(), 35);
    }
}
