//! Finite-type root systems: positive roots, Weyl dimensions, Freudenthal
//! weight multiplicities and decomposition of characters into irreducibles.
//!
//! Everything is generic in the Cartan matrix; [`sl5`] hands out the shared
//! `A4` instance used by the rest of the crate.

mod cartan;
mod roots;
mod weight;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

pub use cartan::CartanMatrix;
pub use roots::{DominantCharacter, RootSystem};
pub use weight::{Weight, WeightMultiset};

use crate::error::{Error, Result};
use crate::repring::VirtualModule;

/// The `A4` root system (Lie algebra `sl(5)`), shared process-wide so that
/// its memo tables are reused.
pub fn sl5() -> Arc<RootSystem> {
    static SL5: OnceLock<Arc<RootSystem>> = OnceLock::new();
    SL5.get_or_init(|| RootSystem::new(CartanMatrix::a(4)).expect("A4 is finite type")).clone()
}

pub fn build_root_system(cartan: CartanMatrix) -> Result<Arc<RootSystem>> {
    RootSystem::new(cartan)
}

/// Highest weight of the dual module, `-w0(highest)`.
pub fn conjugate(rs: &RootSystem, highest: &Weight) -> Weight {
    rs.to_dominant(&-highest).0
}

/// Decomposes a Weyl-invariant virtual character into irreducibles by
/// repeatedly removing the character of the dominant weight that is
/// largest in (height, lexicographic) order.
pub fn decompose_character(rs: &Arc<RootSystem>, chars: &WeightMultiset) -> Result<VirtualModule> {
    let mut dominant: BTreeMap<(i64, Weight), BigInt> = BTreeMap::new();
    for (w, m) in chars.iter() {
        rs.check_rank(w)?;
        let (dom, _) = rs.to_dominant(w);
        let rep = chars.get(&dom);
        if &rep != m {
            return Err(Error::NotWeylInvariant(format!(
                "{w} has multiplicity {m} but its dominant conjugate {dom} has {rep}"
            )));
        }
        if w.is_dominant() {
            if let Some(u) = rs.weyl_orbit(w).into_iter().find(|u| &chars.get(u) != m) {
                return Err(Error::NotWeylInvariant(format!(
                    "{w} has multiplicity {m} but its conjugate {u} has {}",
                    chars.get(&u)
                )));
            }
            dominant.insert(rs.peel_key(w), m.clone());
        }
    }
    decompose_dominant(rs, dominant)
}

/// Greedy decomposition from the dominant part of a character only.
pub(crate) fn decompose_dominant(
    rs: &Arc<RootSystem>,
    mut dominant: BTreeMap<(i64, Weight), BigInt>,
) -> Result<VirtualModule> {
    let mut out = VirtualModule::zero(rs);
    while let Some(((_, top), coeff)) = dominant.pop_last() {
        let ch = rs.dominant_character(&top)?;
        for (w, m) in ch.weights.iter().skip(1) {
            let key = rs.peel_key(w);
            let slot = dominant.entry(key.clone()).or_insert_with(BigInt::zero);
            *slot -= &coeff * m;
            if slot.is_zero() {
                dominant.remove(&key);
            }
        }
        out.add_term(top, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn conjugation_reverses_labels_for_a4() {
        let rs = sl5();
        assert_eq!(conjugate(&rs, &w("0010")), w("0100"));
        assert_eq!(conjugate(&rs, &w("1001")), w("1001"));
        for i in 0..4 {
            let src = Weight::new(&[i, 0, 0, 1]);
            assert_eq!(conjugate(&rs, &src), Weight::new(&[1, 0, 0, i]));
        }
    }

    #[test]
    fn decompose_round_trip_and_product() {
        let rs = sl5();
        let fund = rs.freudenthal_multiplicities(&w("1000")).unwrap();
        let v = decompose_character(&rs, &fund).unwrap();
        assert_eq!(v.to_string(), "(1000)");

        let dual = rs.freudenthal_multiplicities(&w("0001")).unwrap();
        let prod = decompose_character(&rs, &fund.product(&dual)).unwrap();
        assert_eq!(prod.to_string(), "(0000)+(1001)");

        assert!(decompose_character(&rs, &WeightMultiset::new()).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_invariant() {
        let rs = sl5();
        let mut m = WeightMultiset::new();
        m.add(w("1000"), 1);
        assert!(matches!(decompose_character(&rs, &m), Err(Error::NotWeylInvariant(_))));
    }
}
