//! Values derived rather than quoted: each is computed by an oracle
//! independent of the library routine under test, then frozen as a literal.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sl5susy::e510::{bracket, level_module, random_two_form, E510Element};
use sl5susy::koszul::{minimal_orbit_series, peel_levels};
use sl5susy::liecore::{decompose_character, sl5, Weight, WeightMultiset};
use sl5susy::pscohomology::{euler_characteristic_crosscheck, section_dimension, zero_mode_cohomology, SuperfieldSpec};
use sl5susy::repring::VirtualModule;
use sl5susy::repseries::{geometric_factor, FactorSign};

fn m(s: &str) -> VirtualModule {
    VirtualModule::parse(&sl5(), s).unwrap()
}

/// Character-level oracle: decompose a weight multiset assembled by hand.
fn from_character(ch: &WeightMultiset) -> VirtualModule {
    decompose_character(&sl5(), ch).unwrap()
}

fn weights_of(s: &str) -> Vec<Weight> {
    m(s).character()
        .unwrap()
        .iter()
        .flat_map(|(w, k)| std::iter::repeat(w.clone()).take(u32::try_from(k).unwrap() as usize))
        .collect()
}

#[test]
fn dimensions_of_level_modules() {
    // 40, 40 and 15 by the hook-content formula (see tests/oracles.rs).
    for (label, dim) in [("(1100)", 40), ("(0011)", 40), ("(0002)", 15)] {
        assert_eq!(m(label).dim(), BigInt::from(dim), "{label}");
    }
}

#[test]
fn adjoint_zero_weight_has_multiplicity_four() {
    // One Cartan generator per simple root.
    let ch = m("(1001)").character().unwrap();
    assert_eq!(ch.get(&Weight::zero(4)), BigInt::from(4));
}

#[test]
fn vector_times_covector() {
    let mut product = WeightMultiset::new();
    for a in weights_of("(1000)") {
        for b in weights_of("(0001)") {
            product.add(&a + &b, 1);
        }
    }
    let oracle = from_character(&product);
    assert_eq!(oracle, m("(1001)+(0000)"));
    assert_eq!(m("(1000)").tensor(&m("(0001)")).unwrap(), oracle);
}

#[test]
fn symmetric_and_exterior_squares_of_theta() {
    let ws = weights_of("(0010)");
    let (mut sym, mut ext) = (WeightMultiset::new(), WeightMultiset::new());
    for i in 0..ws.len() {
        for j in i..ws.len() {
            sym.add(&ws[i] + &ws[j], 1);
            if j > i {
                ext.add(&ws[i] + &ws[j], 1);
            }
        }
    }
    assert_eq!(from_character(&sym), m("(0020)+(1000)"));
    assert_eq!(m("(0010)").sym_power(2).unwrap(), m("(0020)+(1000)"));
    assert_eq!(m("(0010)").ext_power(2).unwrap().dim(), BigInt::from(45));
    assert_eq!(from_character(&ext), m("(0010)").ext_power(2).unwrap());
    assert_eq!(m("(0010)").tensor(&m("(0010)")).unwrap().dim(), BigInt::from(55 + 45));
}

#[test]
fn second_adams_operation_of_the_vector() {
    // psi^2 doubles every weight.
    let oracle = from_character(&m("(1000)").character().unwrap().scaled_weights(2));
    assert_eq!(oracle, m("(2000)-(0100)"));
    assert_eq!(m("(1000)").adams(2).unwrap(), oracle);
}

#[test]
fn inverse_orbit_series_second_coefficient() {
    // (1/Z)_2 = Z_1^2 - Z_2 by direct Cauchy inversion.
    let direct = &m("(0010)").tensor(&m("(0010)")).unwrap() - &m("(0020)");
    assert_eq!(direct, m("(0101)+(1000)"));
    let inv = minimal_orbit_series(4).inverse().unwrap();
    assert_eq!(inv.coefficient(2).unwrap(), &direct);
    assert_eq!(inv.coefficient(2).unwrap().multiplicity(&Weight::new(&[1, 0, 0, 0])), BigInt::from(1));
}

#[test]
fn symmetric_theta_factor_second_coefficient() {
    let f = geometric_factor(&m("(0010)"), 1, FactorSign::Minus, 4).unwrap();
    assert_eq!(f.coefficient(2).unwrap(), &m("(0010)").sym_power(2).unwrap());
    assert_eq!(f.coefficient(2).unwrap(), &m("(0020)+(1000)"));
}

#[test]
fn shifted_series_fifth_coefficient() {
    // Direct expansion: the t^3 term (0001) times the t^2 term (1000) of
    // (1-t^2)^{-(1000)}, minus the t^5 term of the quartet.
    let direct = &m("(0001)").tensor(&m("(1000)")).unwrap() - &m("(0000)");
    assert_eq!(direct, m("(1001)"));
    let theta = geometric_factor(&m("(0010)"), 1, FactorSign::Plus, 6).unwrap();
    let shift = geometric_factor(&m("(1000)"), 2, FactorSign::Minus, 6).unwrap();
    let s = minimal_orbit_series(6).mul(&theta).unwrap().mul(&shift).unwrap();
    assert_eq!(s.coefficient(5).unwrap(), &direct);
}

#[test]
fn orbit_series_second_coefficient() {
    let z = minimal_orbit_series(2);
    assert_eq!(z.coefficient(2).unwrap(), &m("(0020)"));
    assert_eq!(sl5().weyl_dim(&Weight::new(&[0, 0, 2, 0])).unwrap(), BigInt::from(50));
}

#[test]
fn level_zero_is_the_adjoint() {
    let levels = peel_levels(&minimal_orbit_series(5), 5).unwrap();
    let r0 = levels.level(5).unwrap().conjugate();
    assert_eq!(r0, m("(1001)"));
    assert_eq!(r0.conjugate(), r0);
}

#[test]
fn vector_sections_in_lambda_degree_one() {
    // 10 lambdas times 5 components, minus the injective image of the 10
    // shift parameters rho^{mnp}.
    assert_eq!(section_dimension(&SuperfieldSpec::vector(), 1).unwrap(), 10 * 5 - 10);
}

#[test]
fn euler_characteristic_vanishes_at_t4() {
    let t = zero_mode_cohomology(&SuperfieldSpec::scalar(), 5).unwrap();
    let e = euler_characteristic_crosscheck(&t, 5).unwrap();
    assert!(e.from_series.coefficient(4).unwrap().is_zero());
    assert!(e.from_cohomology.coefficient(4).unwrap().is_zero());
}

#[test]
fn e510_level_minus_one_counts_closed_linear_forms() {
    // Closed 2-forms with linear coefficients: 10 * 5 of them, and d maps
    // onto the 10 constant 3-forms.
    let (module, _) = level_module(-1).unwrap();
    assert_eq!(module, m("(0011)"));
    assert_eq!(module.dim(), BigInt::from(10 * 5 - 10));
}

#[test]
fn odd_square_is_divergence_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..6 {
        let chi = E510Element::odd(random_two_form(&mut rng, 3));
        let square = bracket(&chi, &chi).unwrap();
        assert!(square.odd.is_zero());
        square.check().unwrap();
    }
}
