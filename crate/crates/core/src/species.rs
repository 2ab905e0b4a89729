//! Compound descriptions: storage-pool kinetics, oxidant rate constants, blends.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// First-order storage-pool kinetics of one compound.
///
/// `k_a`, `k_l`, `k_g` are the aqueous, lipid and gas-phase pool release
/// rates in 1/s; `eta` is the water-soluble fraction of production routed
/// to the aqueous pool (the remainder goes to the lipid pool).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoolKinetics<S> {
    pub k_a: S,
    pub k_l: S,
    pub k_g: S,
    pub eta: S,
}

impl<S: Real> PoolKinetics<S> {
    pub fn new(k_a: S, k_l: S, k_g: S, eta: S) -> Result<Self> {
        if !(k_a > S::zero()) || !k_a.is_finite() {
            return Err(Error::invalid("k_a", format!("must be > 0, got {k_a}")));
        }
        if !(k_l > S::zero()) || !k_l.is_finite() {
            return Err(Error::invalid("k_l", format!("must be > 0, got {k_l}")));
        }
        if !(k_g > S::zero()) || !k_g.is_finite() {
            return Err(Error::invalid("k_g", format!("must be > 0, got {k_g}")));
        }
        if !(eta >= S::zero() && eta <= S::one()) {
            return Err(Error::invalid("eta", format!("must lie in [0, 1], got {eta}")));
        }
        Ok(Self { k_a, k_l, k_g, eta })
    }

    /// Fastest pool rate; the RK4 stability guard is 0.1 / this.
    pub fn max_rate(&self) -> S {
        self.k_a.max(self.k_l).max(self.k_g)
    }
}

/// Second-order oxidant rate constants in cm^3 molecule^-1 s^-1.
///
/// Kept in table units on purpose: multiplying by oxidant concentrations in
/// molecules/cm^3 lands directly in 1/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OxidationRates<S> {
    pub k_oh: S,
    pub k_no3: S,
    pub k_o3: S,
}

impl<S: Real> OxidationRates<S> {
    pub fn new(k_oh: S, k_no3: S, k_o3: S) -> Result<Self> {
        for (field, v) in [("k_oh", k_oh), ("k_no3", k_no3), ("k_o3", k_o3)] {
            if !(v >= S::zero()) || !v.is_finite() {
                return Err(Error::invalid(field, format!("must be >= 0, got {v}")));
            }
        }
        Ok(Self { k_oh, k_no3, k_o3 })
    }
}

/// One VOC compound.
///
/// Every species carries oxidant rate constants; pool kinetics are optional
/// because some compounds are only characterized as channel/noise species.
/// Transmitter operations reject species without kinetics instead of
/// defaulting them.
#[derive(Debug, Clone, PartialEq)]
pub struct VocSpecies<S> {
    name: String,
    kinetics: Option<PoolKinetics<S>>,
    oxidation: OxidationRates<S>,
}

impl<S: Real> VocSpecies<S> {
    pub fn new(
        name: impl Into<String>,
        kinetics: Option<PoolKinetics<S>>,
        oxidation: OxidationRates<S>,
    ) -> Self {
        Self {
            name: name.into(),
            kinetics,
            oxidation,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn has_kinetics(&self) -> bool {
        self.kinetics.is_some()
    }

    /// Pool kinetics, or `MissingKinetics` for channel-only species.
    pub fn kinetics(&self) -> Result<&PoolKinetics<S>> {
        self.kinetics.as_ref().ok_or_else(|| Error::MissingKinetics {
            species: self.name.clone(),
        })
    }

    pub fn oxidation(&self) -> &OxidationRates<S> {
        &self.oxidation
    }
}

/// One entry of a blend: a species plus its share of the emission.
///
/// `weight` is the composition figure as tabulated (percent); `fraction` is
/// the weight renormalized so that a blend's fractions sum to exactly one.
#[derive(Debug, Clone, PartialEq)]
pub struct BlendComponent<S> {
    pub species: VocSpecies<S>,
    pub weight: S,
    pub fraction: S,
}

/// A multi-compound emission: (species, fraction) pairs plus the total
/// number of released molecules.
#[derive(Debug, Clone, PartialEq)]
pub struct Blend<S> {
    components: Vec<BlendComponent<S>>,
    q0: S,
}

impl<S: Real> Blend<S> {
    /// Builds a blend from raw composition weights (e.g. tabulated percent).
    /// Weights are renormalized to unit sum.
    pub fn new(parts: Vec<(VocSpecies<S>, S)>, q0: S) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("components", "blend needs at least one species"));
        }
        if !(q0 > S::zero()) || !q0.is_finite() {
            return Err(Error::invalid("q0", format!("must be > 0, got {q0}")));
        }
        let mut total = S::zero();
        for (species, w) in &parts {
            if !(*w >= S::zero()) || !w.is_finite() {
                return Err(Error::invalid(
                    "fraction",
                    format!("weight of `{}` must be >= 0, got {w}", species.name()),
                ));
            }
            total = total + *w;
        }
        if !(total > S::zero()) {
            return Err(Error::invalid("fraction", "weights sum to zero"));
        }
        let components = parts
            .into_iter()
            .map(|(species, weight)| BlendComponent {
                species,
                weight,
                fraction: weight / total,
            })
            .collect();
        Ok(Self { components, q0 })
    }

    pub fn components(&self) -> &[BlendComponent<S>] {
        &self.components
    }

    pub fn q0(&self) -> S {
        self.q0
    }

    pub fn fraction_of(&self, name: &str) -> Option<S> {
        self.components
            .iter()
            .find(|c| c.species.name() == name)
            .map(|c| c.fraction)
    }

    /// Sum of normalized fractions; one up to rounding.
    pub fn fraction_sum(&self) -> S {
        self.components.iter().map(|c| c.fraction).sum()
    }
}
