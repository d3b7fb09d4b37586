//! The representation ring: virtual modules, tensor products (Klimyk),
//! Adams operations and symmetric/exterior powers via Newton's identities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::liecore::{self, RootSystem, Weight, WeightMultiset};

/// Integer combination of irreducible modules, keyed by highest weight.
#[derive(Clone)]
pub struct VirtualModule {
    rs: Arc<RootSystem>,
    terms: BTreeMap<Weight, BigInt>,
}

fn same_ambient(a: &Arc<RootSystem>, b: &Arc<RootSystem>) -> bool {
    Arc::ptr_eq(a, b) || a.cartan() == b.cartan()
}

impl PartialEq for VirtualModule {
    fn eq(&self, other: &Self) -> bool {
        same_ambient(&self.rs, &other.rs) && self.terms == other.terms
    }
}

impl Eq for VirtualModule {}

impl VirtualModule {
    pub fn zero(rs: &Arc<RootSystem>) -> Self {
        VirtualModule { rs: rs.clone(), terms: BTreeMap::new() }
    }

    /// The trivial module with multiplicity one.
    pub fn unit(rs: &Arc<RootSystem>) -> Self {
        let mut m = Self::zero(rs);
        m.add_term(Weight::zero(rs.rank()), BigInt::one());
        m
    }

    pub fn irrep(rs: &Arc<RootSystem>, highest: Weight) -> Result<Self> {
        rs.check_rank(&highest)?;
        if !highest.is_dominant() {
            return Err(Error::NotDominant(highest.to_string()));
        }
        let mut m = Self::zero(rs);
        m.add_term(highest, BigInt::one());
        Ok(m)
    }

    pub fn from_terms<I, M>(rs: &Arc<RootSystem>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, M)>,
        M: Into<BigInt>,
    {
        let mut m = Self::zero(rs);
        for (w, c) in terms {
            rs.check_rank(&w)?;
            if !w.is_dominant() {
                return Err(Error::NotDominant(w.to_string()));
            }
            m.add_term(w, c.into());
        }
        Ok(m)
    }

    /// Parses sums such as `(0002)+(1100)`, `-(1000)` or `2(0000)-(0100)`.
    pub fn parse(rs: &Arc<RootSystem>, s: &str) -> Result<Self> {
        let bad = || Error::Internal(format!("cannot parse module {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero(rs));
        }
        let mut terms = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, tail) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let open = tail.find('(').ok_or_else(bad)?;
            let close = tail.find(')').ok_or_else(bad)?;
            let coeff: BigInt = if open == 0 { BigInt::one() } else { tail[..open].parse().map_err(|_| bad())? };
            let w: Weight = tail[open..=close].parse()?;
            terms.push((w, coeff * sign));
            rest = &tail[close + 1..];
        }
        Self::from_terms(rs, terms)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn add_term(&mut self, w: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigInt> {
        &self.terms
    }

    pub fn multiplicity(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.terms.contains_key(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        *self == Self::unit(&self.rs)
    }

    pub fn dim(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(w, c)| c * self.rs.weyl_dim(w).expect("stored weights are dominant"))
            .sum()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.rs);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    /// Exact division of every multiplicity; errors if any is not divisible.
    pub fn div_exact(&self, k: i64) -> Result<Self> {
        let k = BigInt::from(k);
        let mut out = Self::zero(&self.rs);
        for (w, c) in &self.terms {
            let (q, r) = c.div_rem(&k);
            if !r.is_zero() {
                return Err(Error::NonIntegral(format!("{c}*{w} / {k}")));
            }
            out.add_term(w.clone(), q);
        }
        Ok(out)
    }

    /// Split into nonnegative parts, `self = plus - minus`.
    pub fn split_signs(&self) -> (Self, Self) {
        let mut plus = Self::zero(&self.rs);
        let mut minus = Self::zero(&self.rs);
        for (w, c) in &self.terms {
            if c.is_positive() {
                plus.add_term(w.clone(), c.clone());
            } else {
                minus.add_term(w.clone(), -c);
            }
        }
        (plus, minus)
    }

    /// `Some(1)` if all multiplicities are positive, `Some(-1)` if all are
    /// negative, `None` for mixed signs or the zero module.
    pub fn uniform_sign(&self) -> Option<i32> {
        if self.is_zero() {
            return None;
        }
        if self.terms.values().all(|c| c.is_positive()) {
            Some(1)
        } else if self.terms.values().all(|c| c.is_negative()) {
            Some(-1)
        } else {
            None
        }
    }

    pub fn conjugate(&self) -> Self {
        let mut out = Self::zero(&self.rs);
        for (w, c) in &self.terms {
            out.add_term(liecore::conjugate(&self.rs, w), c.clone());
        }
        out
    }

    /// Full weight multiset of the virtual character.
    pub fn character(&self) -> Result<WeightMultiset> {
        let mut out = WeightMultiset::new();
        for (w, c) in &self.terms {
            for (u, m) in self.rs.weight_diagram(w)?.iter() {
                out.add(u.clone(), c * m);
            }
        }
        Ok(out)
    }

    fn checked_ambient(&self, other: &Self) -> Result<()> {
        if !same_ambient(&self.rs, &other.rs) {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.checked_ambient(other)?;
        let pairs: Vec<(&Weight, &BigInt, &Weight, &BigInt)> = self
            .terms
            .iter()
            .flat_map(|(a, ca)| other.terms.iter().map(move |(b, cb)| (a, ca, b, cb)))
            .collect();
        let parts: Vec<HashMap<Weight, BigInt>> = pairs
            .par_chunks(16)
            .map(|chunk| {
                let mut acc: HashMap<Weight, BigInt> = HashMap::new();
                for &(a, ca, b, cb) in chunk {
                    let prod = tensor_irreps(&self.rs, a, b)?;
                    let c = ca * cb;
                    for (w, m) in prod.iter() {
                        *acc.entry(w.clone()).or_insert_with(BigInt::zero) += &c * m;
                    }
                }
                Ok(acc)
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(&self.rs);
        for part in parts {
            for (w, c) in part {
                out.add_term(w, c);
            }
        }
        Ok(out)
    }

    /// Adams operation `psi^k`.
    pub fn adams(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::AdamsOrder);
        }
        let mut out = Self::zero(&self.rs);
        for (w, c) in &self.terms {
            for (u, m) in adams_irrep(&self.rs, w, k)?.iter() {
                out.add_term(u.clone(), c * m);
            }
        }
        Ok(out)
    }

    /// `[Sym^0, ..., Sym^max]` of this module.
    pub fn sym_powers(&self, max: usize) -> Result<Vec<Self>> {
        self.newton_powers(max, false)
    }

    /// `[Ext^0, ..., Ext^max]` of this module.
    pub fn ext_powers(&self, max: usize) -> Result<Vec<Self>> {
        self.newton_powers(max, true)
    }

    pub fn sym_power(&self, k: usize) -> Result<Self> {
        Ok(self.sym_powers(k)?.pop().unwrap())
    }

    pub fn ext_power(&self, k: usize) -> Result<Self> {
        Ok(self.ext_powers(k)?.pop().unwrap())
    }

    // n S_n = sum_j psi^j S_{n-j};  n L_n = sum_j (-1)^(j-1) psi^j L_{n-j}.
    fn newton_powers(&self, max: usize, alternating: bool) -> Result<Vec<Self>> {
        let psi: Vec<Self> = (1..=max as u32).map(|j| self.adams(j)).collect::<Result<_>>()?;
        let mut out = vec![Self::unit(&self.rs)];
        for n in 1..=max {
            let mut acc = Self::zero(&self.rs);
            for j in 1..=n {
                let term = psi[j - 1].tensor(&out[n - j])?;
                if alternating && j % 2 == 0 {
                    acc = &acc - &term;
                } else {
                    acc = &acc + &term;
                }
            }
            out.push(acc.div_exact(n as i64)?);
        }
        Ok(out)
    }
}

/// Klimyk's formula: add the weight diagram of the smaller factor to the
/// highest weight of the larger one and straighten with the dot action.
pub(crate) fn tensor_irreps(rs: &Arc<RootSystem>, a: &Weight, b: &Weight) -> Result<Arc<Vec<(Weight, i64)>>> {
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if let Some(hit) = rs.tensor_cache.read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let (small, big) = if rs.weyl_dim(&key.0)? <= rs.weyl_dim(&key.1)? {
        (&key.0, &key.1)
    } else {
        (&key.1, &key.0)
    };
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in rs.weight_diagram(small)?.iter() {
        if let Some((w, sign)) = rs.straighten(&(big + nu)) {
            *acc.entry(w).or_insert(0) += sign as i64 * m;
        }
    }
    let result: Arc<Vec<(Weight, i64)>> = Arc::new(acc.into_iter().filter(|(_, c)| *c != 0).collect());
    if result.iter().any(|(_, c)| *c < 0) {
        return Err(Error::Internal(format!("negative multiplicity in {a} x {b}")));
    }
    rs.tensor_cache.write().unwrap().entry(key).or_insert_with(|| result.clone());
    Ok(result)
}

/// `psi^k` of an irreducible: the character with every weight scaled by `k`,
/// decomposed by dot-action straightening.
fn adams_irrep(rs: &Arc<RootSystem>, w: &Weight, k: u32) -> Result<Arc<Vec<(Weight, i64)>>> {
    let key = (w.clone(), k);
    if let Some(hit) = rs.adams_cache.read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in rs.weight_diagram(w)?.iter() {
        if let Some((u, sign)) = rs.straighten(&nu.scaled(k as i32)) {
            *acc.entry(u).or_insert(0) += sign as i64 * m;
        }
    }
    let result: Arc<Vec<_>> = Arc::new(acc.into_iter().filter(|(_, c)| *c != 0).collect());
    rs.adams_cache.write().unwrap().entry(key).or_insert_with(|| result.clone());
    Ok(result)
}

fn combine(a: &VirtualModule, b: &VirtualModule, sign: i32) -> VirtualModule {
    assert!(same_ambient(&a.rs, &b.rs), "modules over different root systems");
    let mut out = a.clone();
    for (w, c) in &b.terms {
        out.add_term(w.clone(), c * sign);
    }
    out
}

impl Add for &VirtualModule {
    type Output = VirtualModule;
    fn add(self, rhs: &VirtualModule) -> VirtualModule {
        combine(self, rhs, 1)
    }
}

impl Sub for &VirtualModule {
    type Output = VirtualModule;
    fn sub(self, rhs: &VirtualModule) -> VirtualModule {
        combine(self, rhs, -1)
    }
}

impl Neg for &VirtualModule {
    type Output = VirtualModule;
    fn neg(self) -> VirtualModule {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for VirtualModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VirtualModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
