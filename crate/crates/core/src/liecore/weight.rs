use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A weight in the Dynkin (fundamental-weight) basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(SmallVec<[i32; 8]>);

impl Weight {
    pub fn new(labels: &[i32]) -> Self {
        Weight(SmallVec::from_slice(labels))
    }

    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn labels(&self) -> &[i32] {
        &self.0
    }

    pub fn labels_mut(&mut self) -> &mut [i32] {
        &mut self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn scaled(&self, k: i32) -> Self {
        Weight(self.0.iter().map(|&a| a * k).collect())
    }

    /// Label reversal, the action of `-w0` for type A.
    pub fn reversed(&self) -> Self {
        Weight(self.0.iter().rev().copied().collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.0.iter().all(|&a| (0..10).contains(&a));
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if !compact && i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `(0010)`, `0010` or `(0,0,10,0)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = || Error::Internal(format!("cannot parse weight {s:?}"));
        let labels: Vec<i32> = if body.contains(',') {
            body.split(',')
                .map(|t| t.trim().parse::<i32>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as i32).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        if labels.is_empty() {
            return Err(bad());
        }
        Ok(Weight::new(&labels))
    }
}

/// Finitely supported map from (not necessarily dominant) weights to
/// integer multiplicities. Multiplicities may be negative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, BigInt>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, weight: Weight, mult: impl Into<BigInt>) {
        let mult = mult.into();
        if mult.is_zero() {
            return;
        }
        let slot = self.entries.entry(weight.clone()).or_insert_with(BigInt::zero);
        *slot += mult;
        if slot.is_zero() {
            self.entries.remove(&weight);
        }
    }

    pub fn get(&self, weight: &Weight) -> BigInt {
        self.entries.get(weight).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> BigInt {
        self.entries.values().sum()
    }

    /// Pointwise (Minkowski) product of two characters.
    pub fn product(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (a, ma) in &self.entries {
            for (b, mb) in &other.entries {
                out.add(a + b, ma * mb);
            }
        }
        out
    }

    pub fn scaled_weights(&self, k: i32) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, m) in &self.entries {
            out.add(w.scaled(k), m.clone());
        }
        out
    }

    pub fn merge(&mut self, other: &WeightMultiset, sign: i32) {
        for (w, m) in &other.entries {
            self.add(w.clone(), m * sign);
        }
    }

    pub fn has_negative(&self) -> bool {
        self.entries.values().any(|m| m.is_negative())
    }
}

impl FromIterator<(Weight, BigInt)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (Weight, BigInt)>>(iter: I) -> Self {
        let mut out = WeightMultiset::new();
        for (w, m) in iter {
            out.add(w, m);
        }
        out
    }
}
