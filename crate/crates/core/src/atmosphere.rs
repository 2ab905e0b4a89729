//! Turbulent dispersion coefficients and effective chemical loss rates.

use crate::environment::{Environment, StabilityClass};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::species::{Blend, VocSpecies};

/// Gaussian spread parameters at one downwind distance.
///
/// The longitudinal spread is the geometric mean of the lateral and
/// vertical spreads: sigma_x^2 = sigma_y * sigma_z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionCoefficients<S> {
    pub sigma_y: S,
    pub sigma_z: S,
    pub sigma_x: S,
}

impl<S: Real> DispersionCoefficients<S> {
    /// sigma_y * sigma_z, the product most formulas consume.
    pub fn yz_product(&self) -> S {
        self.sigma_y * self.sigma_z
    }
}

/// Power-law coefficients per stability class: sigma = a * x^p.
/// Rows: (a_y, p_y, a_z, p_z).
fn coefficients(class: StabilityClass) -> (f64, f64, f64, f64) {
    match class {
        StabilityClass::A => (0.18, 0.92, 0.60, 0.75),
        StabilityClass::B => (0.14, 0.92, 0.53, 0.73),
        StabilityClass::C => (0.10, 0.92, 0.34, 0.71),
        StabilityClass::D => (0.06, 0.92, 0.15, 0.70),
        StabilityClass::E => (0.04, 0.92, 0.10, 0.65),
        StabilityClass::F => (0.02, 0.89, 0.05, 0.61),
    }
}

/// Dispersion coefficients at downwind distance `x` (m) for a stability class.
pub fn dispersion<S: Real>(x: S, class: StabilityClass) -> Result<DispersionCoefficients<S>> {
    if !(x > S::zero()) || !x.is_finite() {
        return Err(Error::NonPositiveDistance { x: x.widen() });
    }
    let (a_y, p_y, a_z, p_z) = coefficients(class);
    let sigma_y = S::lit(a_y) * x.powf(S::lit(p_y));
    let sigma_z = S::lit(a_z) * x.powf(S::lit(p_z));
    Ok(DispersionCoefficients {
        sigma_y,
        sigma_z,
        sigma_x: (sigma_y * sigma_z).sqrt(),
    })
}

/// Effective first-order loss rate (1/s) of one species from oxidant attack:
/// k_eff = k_OH [OH] + k_NO3 [NO3] + k_O3 [O3].
pub fn k_eff<S: Real>(species: &VocSpecies<S>, env: &Environment<S>) -> S {
    let ox = species.oxidation();
    ox.k_oh * env.c_oh + ox.k_no3 * env.c_no3 + ox.k_o3 * env.c_o3
}

/// Fraction-weighted mean of the per-species loss rates of a blend.
pub fn blend_k_eff<S: Real>(blend: &Blend<S>, env: &Environment<S>) -> S {
    blend
        .components()
        .iter()
        .map(|c| c.fraction * k_eff(&c.species, env))
        .sum()
}
