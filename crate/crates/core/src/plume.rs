//! Gaussian plume channel for constitutive (continuous) release.
//!
//! The steady field is the time integral of the degraded puff:
//!
//! ```text
//! c_p(r) = Q0 / (2π u σy σz) · exp(-y^2 / (2 σy^2))
//!        · [exp(-(z-z0)^2 / (2 σz^2)) + exp(-(z+z0)^2 / (2 σz^2))]
//!        · exp(-k_eff x / u)
//! ```
//!
//! A steady field alone has spectral content only at f = 0. Diurnal
//! variation over an observation window Δt widens that line to
//! Δf = 1/(4π Δt) (the minimal width the time-frequency uncertainty
//! product allows), so the response is modeled as c_p times a Gaussian of
//! standard deviation Δf:
//!
//! ```text
//! H(f) = c_p · G(f),   G(f) = exp(-f^2 / (2 Δf^2)) / (sqrt(2π) Δf)
//! ```
//!
//! The response is real, so phase and group delay are identically zero:
//! the quasi-steady field already integrates all past emission.

use num_complex::Complex;

use crate::atmosphere::{dispersion, DispersionCoefficients};
use crate::environment::StabilityClass;
use crate::error::{Error, Result};
use crate::freq::{FrequencyGrid, FrequencyResponse};
use crate::puff::PuffChannelParams;
use crate::scalar::Real;

/// Default observation window: one diurnal cycle.
pub const DEFAULT_OBSERVATION_WINDOW: f64 = 86400.0;

/// Minimal admissible spectral width for an observation window `delta_t`:
/// Δf = 1 / (4π Δt).
pub fn uncertainty_df<S: Real>(delta_t: S) -> Result<S> {
    if !(delta_t > S::zero()) {
        return Err(Error::invalid(
            "delta_t",
            format!("must be > 0 s, got {delta_t}"),
        ));
    }
    Ok((S::lit(4.0) * S::PI() * delta_t).recip())
}

/// Puff geometry plus the observation window for the spectral width.
#[derive(Debug, Clone, PartialEq)]
pub struct PlumeChannelParams<S> {
    pub q0: S,
    pub x: S,
    pub y: S,
    pub z: S,
    pub z0: S,
    pub u: S,
    pub dispersion: DispersionCoefficients<S>,
    pub k_eff: S,
    /// Observation window Δt in seconds.
    pub delta_t: S,
    /// Optional replacement for the uncertainty-principle Δf (e.g. to
    /// reproduce a published value).
    pub delta_f_override: Option<S>,
}

impl<S: Real> PlumeChannelParams<S> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        q0: S,
        x: S,
        y: S,
        z: S,
        z0: S,
        u: S,
        class: StabilityClass,
        k_eff: S,
        delta_t: S,
    ) -> Result<Self> {
        if !(delta_t > S::zero()) {
            return Err(Error::invalid(
                "delta_t",
                format!("must be > 0 s, got {delta_t}"),
            ));
        }
        if !(q0 > S::zero()) {
            return Err(Error::invalid("q0", format!("must be > 0, got {q0}")));
        }
        if !(u > S::zero()) {
            return Err(Error::invalid("u", format!("must be > 0 m/s, got {u}")));
        }
        if !(k_eff >= S::zero()) {
            return Err(Error::invalid("k_eff", format!("must be >= 0, got {k_eff}")));
        }
        let dispersion = dispersion(x, class)?;
        Ok(Self {
            q0,
            x,
            y,
            z,
            z0,
            u,
            dispersion,
            k_eff,
            delta_t,
            delta_f_override: None,
        })
    }

    /// Same geometry and kinetics as a puff channel, default window.
    pub fn from_puff(p: &PuffChannelParams<S>) -> Self {
        Self {
            q0: p.q0,
            x: p.x,
            y: p.y,
            z: p.z,
            z0: p.z0,
            u: p.u,
            dispersion: p.dispersion,
            k_eff: p.k_eff,
            delta_t: S::lit(DEFAULT_OBSERVATION_WINDOW),
            delta_f_override: None,
        }
    }

    pub fn with_delta_f(mut self, delta_f: S) -> Self {
        self.delta_f_override = Some(delta_f);
        self
    }

    /// Effective spectral width: the override, or 1/(4π Δt).
    pub fn delta_f(&self) -> S {
        self.delta_f_override
            .unwrap_or_else(|| (S::lit(4.0) * S::PI() * self.delta_t).recip())
    }

    /// Steady concentration at the receiver.
    pub fn concentration(&self) -> S {
        let two = S::lit(2.0);
        let sy = self.dispersion.sigma_y;
        let sz = self.dispersion.sigma_z;
        let ss = self.dispersion.yz_product();
        let lateral = (-self.y * self.y / (two * sy * sy)).exp();
        let a = self.z - self.z0;
        let b = self.z + self.z0;
        let images = (-a * a / (two * sz * sz)).exp() + (-b * b / (two * sz * sz)).exp();
        self.q0 / (S::TAU() * self.u * ss) * lateral * images * (-self.k_eff * self.x / self.u).exp()
    }

    /// Peak response c_p · G(0), the unnormalized gain at DC.
    pub fn peak_gain(&self) -> S {
        self.concentration() / (S::TAU().sqrt() * self.delta_f())
    }

    /// Real Gaussian response on a grid; the grid must start at f = 0.
    pub fn response(&self, grid: &FrequencyGrid<S>) -> Result<FrequencyResponse<S>> {
        if !grid.starts_at_zero() {
            return Err(Error::invalid(
                "frequency_grid",
                "normalized plume gain needs f = 0 on the grid",
            ));
        }
        let df = self.delta_f();
        let cp = self.concentration();
        let g0 = (S::TAU().sqrt() * df).recip();
        let fs = grid.points();
        let mut values = Vec::with_capacity(fs.len());
        let mut gains = Vec::with_capacity(fs.len());
        for &f in fs {
            let g = cp * g0 * (-f * f / (S::lit(2.0) * df * df)).exp();
            values.push(Complex::new(g, S::zero()));
            gains.push(g);
        }
        let normalized = FrequencyResponse::normalize(&gains);
        let zeros = vec![S::zero(); fs.len()];
        Ok(FrequencyResponse::from_parts(
            grid.clone(),
            values,
            normalized,
            zeros.clone(),
            zeros,
        ))
    }
}
