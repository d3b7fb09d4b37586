//! Serde-facing shapes shared by the JSON reports.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::liecore::{RootSystem, Weight};
use crate::repring::VirtualModule;
use std::sync::Arc;

/// Arbitrary-precision integer that serializes as a JSON number when it
/// fits in 64 bits and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(JsonInt(v.into())),
            Raw::Str(s) => s.parse().map(JsonInt).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleTerm {
    pub dynkin: Vec<i32>,
    pub multiplicity: JsonInt,
}

pub fn module_terms(m: &VirtualModule) -> Vec<ModuleTerm> {
    m.terms()
        .iter()
        .map(|(w, c)| ModuleTerm { dynkin: w.labels().to_vec(), multiplicity: JsonInt(c.clone()) })
        .collect()
}

pub fn module_from_terms(rs: &Arc<RootSystem>, terms: &[ModuleTerm]) -> Result<VirtualModule> {
    VirtualModule::from_terms(rs, terms.iter().map(|t| (Weight::new(&t.dynkin), t.multiplicity.0.clone())))
}
