//! The exceptional Lie superalgebra E(5,10): its sl(5) level modules, the
//! coadjoint generator spectrum fed to the free-generation check, and an
//! exact polynomial realization by divergence-free vector fields (even) and
//! closed 2-forms (odd).

pub mod fields;
pub mod poly;
mod checks;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use checks::{
    gamma_identity_check, graded_dimension_crosscheck, jacobi_trials, random_element, random_two_form,
    random_vector_field, DimensionReport, DimensionRow, ElementKind, IdentityReport, JacobiFailure, JacobiReport,
    DEFAULT_SEED,
};
pub use fields::{antisymmetry_defect, bracket, jacobi_test, E510Element, PolyTwoForm, PolyVectorField};
pub use poly::Poly;

use crate::error::{Error, Result};
use crate::koszul::{Generator, GeneratorSpectrum, Parity};
use crate::liecore::{sl5, Weight};
use crate::repring::VirtualModule;

/// The sl(5) module at E(5,10) level `l`, with its parity: `(100i)` even at
/// level `2 - 2i`, `(001i)` odd at level `1 - 2i`. There is nothing above
/// level 2.
pub fn level_module(level: i64) -> Result<(VirtualModule, Parity)> {
    if level > 2 {
        return Err(Error::NoSuchLevel(level));
    }
    let (labels, parity) = if level % 2 == 0 {
        let i = (2 - level) / 2;
        ([1, 0, 0, i as i32], Parity::Even)
    } else {
        let i = (1 - level) / 2;
        ([0, 0, 1, i as i32], Parity::Odd)
    };
    Ok((VirtualModule::irrep(&sl5(), Weight::new(&labels))?, parity))
}

/// Generators at positive levels `p = 3..=N`: the conjugate of E(5,10)
/// level `5 - p`, with statistics given by the parity of `p`. Explicitly,
/// `(i001)` at `3 + 2i` (fermionic) and `(i100)` at `4 + 2i` (bosonic).
pub fn coadjoint_generator_spectrum(truncation: usize) -> GeneratorSpectrum {
    let generators = (3..=truncation)
        .map(|p| {
            let (module, _) = level_module(5 - p as i64).expect("levels below 3 exist");
            Generator { level: p, module: module.conjugate(), parity: Parity::of_level(p as i64) }
        })
        .collect();
    GeneratorSpectrum { generators }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelEntry {
    pub level: i64,
    pub module: String,
    pub parity: Parity,
    pub dimension: String,
}

/// E(5,10) levels from 2 down to `min_level`.
pub fn level_table(min_level: i64) -> Result<Vec<LevelEntry>> {
    (min_level..=2)
        .rev()
        .map(|l| {
            let (m, parity) = level_module(l)?;
            Ok(LevelEntry { level: l, module: m.to_string(), parity, dimension: m.dim().to_string() })
        })
        .collect()
}

impl fmt::Display for LevelEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.level, self.module)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_modules() {
        let (m, p) = level_module(2).unwrap();
        assert_eq!((m.to_string(), p), ("(1000)".into(), Parity::Even));
        let (m, p) = level_module(1).unwrap();
        assert_eq!((m.to_string(), p), ("(0010)".into(), Parity::Odd));
        let (m, _) = level_module(0).unwrap();
        assert_eq!(m.to_string(), "(1001)");
        let (m, p) = level_module(-1).unwrap();
        assert_eq!((m.to_string(), p, m.dim()), ("(0011)".into(), Parity::Odd, 40.into()));
        assert_eq!(level_module(3), Err(Error::NoSuchLevel(3)));
    }

    #[test]
    fn coadjoint_spectrum() {
        let g = coadjoint_generator_spectrum(8);
        let shown: Vec<_> = g.generators.iter().map(|g| (g.level, g.module.to_string(), g.parity)).collect();
        assert_eq!(
            shown,
            vec![
                (3, "(0001)".into(), Parity::Odd),
                (4, "(0100)".into(), Parity::Even),
                (5, "(1001)".into(), Parity::Odd),
                (6, "(1100)".into(), Parity::Even),
                (7, "(2001)".into(), Parity::Odd),
                (8, "(2100)".into(), Parity::Even),
            ]
        );
    }
}
