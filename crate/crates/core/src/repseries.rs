//! Truncated power series in `t` with coefficients in the representation
//! ring.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{module_from_terms, module_terms, ModuleTerm};
use crate::liecore::RootSystem;
use crate::repring::VirtualModule;

pub const DEFAULT_TRUNCATION: usize = 10;

/// Exponent sign of a geometric factor `(1 - t^p)^{±r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorSign {
    /// `(1 - t^p)^{+r} = sum_k (-1)^k Ext^k(r) t^{pk}`
    Plus,
    /// `(1 - t^p)^{-r} = sum_k Sym^k(r) t^{pk}`
    Minus,
}

impl FactorSign {
    pub fn flip(self) -> Self {
        match self {
            FactorSign::Plus => FactorSign::Minus,
            FactorSign::Minus => FactorSign::Plus,
        }
    }
}

/// Coefficients `c_0 ..= c_N`; nothing is ever computed past `N`.
#[derive(Clone)]
pub struct RepSeries {
    rs: Arc<RootSystem>,
    coeffs: Vec<VirtualModule>,
}

impl PartialEq for RepSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for RepSeries {}

impl RepSeries {
    pub fn zero(rs: &Arc<RootSystem>, truncation: usize) -> Self {
        RepSeries { rs: rs.clone(), coeffs: vec![VirtualModule::zero(rs); truncation + 1] }
    }

    pub fn unit(rs: &Arc<RootSystem>, truncation: usize) -> Self {
        let mut s = Self::zero(rs, truncation);
        s.coeffs[0] = VirtualModule::unit(rs);
        s
    }

    /// Series from explicit coefficients; missing degrees up to
    /// `truncation` are zero and extra ones are dropped.
    pub fn from_coefficients(rs: &Arc<RootSystem>, coeffs: Vec<VirtualModule>, truncation: usize) -> Result<Self> {
        let mut s = Self::zero(rs, truncation);
        for (p, c) in coeffs.into_iter().enumerate().take(truncation + 1) {
            if c.root_system().cartan() != rs.cartan() {
                return Err(Error::AmbientMismatch);
            }
            s.coeffs[p] = c;
        }
        Ok(s)
    }

    /// `1 + m t^p`.
    pub fn one_plus(m: &VirtualModule, p: usize, truncation: usize) -> Self {
        let rs = m.root_system();
        let mut s = Self::unit(rs, truncation);
        if p <= truncation {
            s.coeffs[p] = &s.coeffs[p] + m;
        }
        s
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[VirtualModule] {
        &self.coeffs
    }

    pub fn coefficient(&self, p: usize) -> Result<&VirtualModule> {
        self.coeffs.get(p).ok_or(Error::OutOfRange { degree: p, truncation: self.truncation() })
    }

    pub fn set_coefficient(&mut self, p: usize, m: VirtualModule) -> Result<()> {
        let truncation = self.truncation();
        let slot = self.coeffs.get_mut(p).ok_or(Error::OutOfRange { degree: p, truncation })?;
        *slot = m;
        Ok(())
    }

    pub fn truncate(&self, m: usize) -> Result<Self> {
        if m > self.truncation() {
            return Err(Error::OutOfRange { degree: m, truncation: self.truncation() });
        }
        Ok(RepSeries { rs: self.rs.clone(), coeffs: self.coeffs[..=m].to_vec() })
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[0].is_unit() && self.coeffs[1..].iter().all(VirtualModule::is_zero)
    }

    /// Cauchy product with the tensor product on coefficients, truncated to
    /// the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.truncation().min(other.truncation());
        let coeffs = (0..=n)
            .into_par_iter()
            .map(|p| {
                let mut acc = VirtualModule::zero(&self.rs);
                for i in 0..=p {
                    let (a, b) = (&self.coeffs[i], &other.coeffs[p - i]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &a.tensor(b)?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RepSeries { rs: self.rs.clone(), coeffs })
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_unit() {
            return Err(Error::NonUnitConstant);
        }
        let n = self.truncation();
        let mut inv = vec![VirtualModule::unit(&self.rs)];
        for p in 1..=n {
            let terms: Vec<VirtualModule> = (1..=p)
                .into_par_iter()
                .filter(|&k| !self.coeffs[k].is_zero() && !inv[p - k].is_zero())
                .map(|k| self.coeffs[k].tensor(&inv[p - k]))
                .collect::<Result<_>>()?;
            let mut acc = VirtualModule::zero(&self.rs);
            for t in &terms {
                acc = &acc - t;
            }
            inv.push(acc);
        }
        Ok(RepSeries { rs: self.rs.clone(), coeffs: inv })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Self, f: impl Fn(&VirtualModule, &VirtualModule) -> VirtualModule) -> Self {
        let n = self.truncation().min(other.truncation());
        RepSeries { rs: self.rs.clone(), coeffs: (0..=n).map(|p| f(&self.coeffs[p], &other.coeffs[p])).collect() }
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            truncation: self.truncation(),
            coefficients: self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(degree, c)| DegreeJson { degree, modules: module_terms(c) })
                .collect(),
        }
    }

    pub fn from_json(rs: &Arc<RootSystem>, json: &SeriesJson) -> Result<Self> {
        let mut s = Self::zero(rs, json.truncation);
        for d in &json.coefficients {
            s.set_coefficient(d.degree, module_from_terms(rs, &d.modules)?)?;
        }
        Ok(s)
    }
}

/// `(1 - t^p)^{±r}` truncated at `truncation`. Virtual `r` is split as
/// `r+ - r-` and the two nonnegative factors are multiplied.
pub fn geometric_factor(r: &VirtualModule, p: usize, sign: FactorSign, truncation: usize) -> Result<RepSeries> {
    if p == 0 {
        return Err(Error::ZeroPower);
    }
    let (plus, minus) = r.split_signs();
    let a = nonneg_factor(&plus, p, sign, truncation)?;
    if minus.is_zero() {
        return Ok(a);
    }
    let b = nonneg_factor(&minus, p, sign.flip(), truncation)?;
    a.mul(&b)
}

fn nonneg_factor(r: &VirtualModule, p: usize, sign: FactorSign, truncation: usize) -> Result<RepSeries> {
    let rs = r.root_system();
    let mut s = RepSeries::unit(rs, truncation);
    if r.is_zero() {
        return Ok(s);
    }
    let kmax = truncation / p;
    let powers = match sign {
        FactorSign::Minus => r.sym_powers(kmax)?,
        FactorSign::Plus => r.ext_powers(kmax)?,
    };
    for (k, pw) in powers.into_iter().enumerate().skip(1) {
        let c = if sign == FactorSign::Plus && k % 2 == 1 { -&pw } else { pw };
        s.coeffs[k * p] = c;
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub degree: usize,
    pub lhs: VirtualModule,
    pub rhs: VirtualModule,
}

/// Coefficient-wise comparison result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesComparison {
    pub truncation: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl SeriesComparison {
    pub fn equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl fmt::Display for SeriesComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "equal to order t^{}", self.truncation),
            Some(m) => write!(f, "differ at t^{}: {} vs {}", m.degree, m.lhs, m.rhs),
        }
    }
}

pub fn series_identity_check(lhs: &RepSeries, rhs: &RepSeries) -> SeriesComparison {
    let n = lhs.truncation().min(rhs.truncation());
    let first_mismatch = (0..=n).find(|&p| lhs.coeffs[p] != rhs.coeffs[p]).map(|p| Mismatch {
        degree: p,
        lhs: lhs.coeffs[p].clone(),
        rhs: rhs.coeffs[p].clone(),
    });
    SeriesComparison { truncation: n, first_mismatch }
}

impl fmt::Display for RepSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}]t^{p}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.truncation() + 1)
    }
}

impl fmt::Debug for RepSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeJson {
    pub degree: usize,
    pub modules: Vec<ModuleTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub truncation: usize,
    pub coefficients: Vec<DegreeJson>,
}
