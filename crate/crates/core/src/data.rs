//! Built-in compound datasets.
//!
//! Two vendored datasets: the Quercus ilex monoterpenoid emission (the
//! transmitter blend) and the Pinus pinea emission (used as the co-channel
//! noise blend). Pool kinetics exist only for the nine Q. ilex
//! monoterpenoids; the four compounds specific to P. pinea carry oxidant
//! rate constants alone and are rejected by transmitter operations.
//!
//! Composition figures are stored as published (percent) and renormalized
//! at load so each blend's fractions sum to exactly one. Note the P. pinea
//! column does not add up to 100% (94.4582%), so its normalized fractions
//! differ from percent/100; the raw percentages stay available through
//! [`BlendComponent::weight`](crate::species::BlendComponent).
//!
//! The NO3 rate-constant column is reproduced at its published scale even
//! though it sits orders of magnitude above typical literature values for
//! monoterpenes; treat those entries as overridable configuration rather
//! than ground truth.

use crate::scalar::Real;
use crate::species::{Blend, OxidationRates, PoolKinetics, VocSpecies};

/// Total released molecules used by both built-in blends.
pub const BUILTIN_Q0: f64 = 10000.0;

/// name, k_a (1/s), k_l (1/s), k_g (1/s), eta
const POOL_KINETICS: [(&str, f64, f64, f64, f64); 9] = [
    ("alpha-pinene", 0.002459, 3.37791e-5, 0.7, 0.867),
    ("beta-pinene", 0.002455, 5.31881e-5, 0.9, 0.846),
    ("myrcene", 0.001565, 15.281e-5, 3.0, 0.840),
    ("sabinene", 0.002953, 0.4044e-5, 2.5, 0.629),
    ("cis-beta-ocimene", 0.001167, 4.1857e-5, 1.5, 0.782),
    ("p-cymene", 0.000844, 0.7434e-5, 2.0, 0.697),
    ("gamma-terpinene", 0.001395, 2.4189e-5, 1.7, 0.811),
    ("alpha-terpinolene", 0.001126, 1.1959e-5, 1.3, 0.736),
    ("beta-phellandrene", 0.001319, 0.5852e-5, 2.3, 0.762),
];

/// name, k_OH, k_NO3, k_O3 (cm^3 molecule^-1 s^-1)
const OXIDATION_RATES: [(&str, f64, f64, f64); 13] = [
    ("alpha-pinene", 52.3e-12, 84.0e-11, 6.16e-17),
    ("beta-pinene", 74.3e-12, 15.0e-11, 2.51e-17),
    ("myrcene", 215.0e-12, 1.1e-11, 47.0e-17),
    ("sabinene", 117.0e-12, 1.0e-11, 8.3e-17),
    ("cis-beta-ocimene", 252.0e-12, 2.2e-11, 54.0e-17),
    ("p-cymene", 151.0e-12, 0.99e-11, 0.2e-17),
    ("gamma-terpinene", 177.0e-12, 2.9e-11, 14.0e-17),
    ("alpha-terpinolene", 225.0e-12, 9.7e-11, 190.0e-17),
    ("beta-phellandrene", 168.0e-12, 8.0e-11, 4.7e-17),
    ("acetone", 0.17e-12, 2.9e-6 * 1e-11, 0.9e-4 * 1e-17),
    ("limonene", 164.0e-12, 1.22e-11, 21.0e-17),
    ("trans-beta-ocimene", 252.0e-12, 2.2e-11, 54.0e-17),
    ("linalool", 159.0e-12, 1.12e-11, 43.0e-17),
];

/// name, composition percent in Q. ilex
const Q_ILEX_COMPOSITION: [(&str, f64); 9] = [
    ("alpha-pinene", 32.0718),
    ("beta-pinene", 24.6972),
    ("myrcene", 12.9217),
    ("sabinene", 10.5861),
    ("cis-beta-ocimene", 5.1687),
    ("p-cymene", 4.3577),
    ("gamma-terpinene", 4.2604),
    ("alpha-terpinolene", 3.2115),
    ("beta-phellandrene", 2.7249),
];

/// name, composition percent in P. pinea (column sums to 94.4582)
const PINUS_PINEA_COMPOSITION: [(&str, f64); 9] = [
    ("alpha-pinene", 0.4341),
    ("beta-pinene", 0.0894),
    ("myrcene", 1.3788),
    ("sabinene", 0.4979),
    ("cis-beta-ocimene", 1.3660),
    ("acetone", 12.3057),
    ("limonene", 1.2384),
    ("trans-beta-ocimene", 70.7136),
    ("linalool", 6.4343),
];

fn species_by_name<S: Real>(name: &str) -> VocSpecies<S> {
    let (_, k_oh, k_no3, k_o3) = OXIDATION_RATES
        .iter()
        .find(|(n, ..)| *n == name)
        .copied()
        .expect("unknown built-in species");
    let oxidation = OxidationRates::new(S::lit(k_oh), S::lit(k_no3), S::lit(k_o3))
        .expect("vendored oxidation rates are valid");
    let kinetics = POOL_KINETICS
        .iter()
        .find(|(n, ..)| *n == name)
        .map(|&(_, k_a, k_l, k_g, eta)| {
            PoolKinetics::new(S::lit(k_a), S::lit(k_l), S::lit(k_g), S::lit(eta))
                .expect("vendored kinetics are valid")
        });
    VocSpecies::new(name, kinetics, oxidation)
}

fn build<S: Real>(composition: &[(&str, f64)]) -> (Vec<VocSpecies<S>>, Blend<S>) {
    let species: Vec<VocSpecies<S>> = composition
        .iter()
        .map(|(name, _)| species_by_name(name))
        .collect();
    let parts = species
        .iter()
        .cloned()
        .zip(composition.iter().map(|&(_, pct)| S::lit(pct)))
        .collect();
    let blend = Blend::new(parts, S::lit(BUILTIN_Q0)).expect("vendored blend is valid");
    (species, blend)
}

/// The nine Q. ilex monoterpenoids with full kinetics, plus their blend.
pub fn builtin_q_ilex<S: Real>() -> (Vec<VocSpecies<S>>, Blend<S>) {
    build(&Q_ILEX_COMPOSITION)
}

/// The Pinus pinea noise blend. Acetone, limonene, trans-beta-ocimene and
/// linalool carry only oxidant constants and are valid for channel and
/// noise use but rejected by transmitter operations.
pub fn builtin_pinus_pinea<S: Real>() -> (Vec<VocSpecies<S>>, Blend<S>) {
    build(&PINUS_PINEA_COMPOSITION)
}
