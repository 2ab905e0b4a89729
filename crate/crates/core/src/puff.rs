//! Gaussian puff channel for stress-driven (instantaneous) release.
//!
//! A burst of Q0 molecules advects downwind at the wind speed while
//! spreading with the distance-dependent dispersion coefficients; ground
//! reflection adds an image term and oxidant attack multiplies the profile
//! by exp(-k_eff t):
//!
//! ```text
//! c_d(r, t) = Q0 / (2π σy σz)^(3/2)
//!           · exp(-(x - u t)^2 / (2 σy σz)) · exp(-y^2 / (2 σy^2))
//!           · [exp(-(z-z0)^2 / (2 σz^2)) + exp(-(z+z0)^2 / (2 σz^2))]
//!           · exp(-k_eff t)
//! ```
//!
//! with the longitudinal spread taken as sqrt(σy σz). The frequency response
//! uses the model's closed forms:
//!
//! ```text
//! H(f)   = Q0 / (2π u σy σz) · (lateral & image factors)
//!        · exp((k_eff - j 2π f) x / u) · exp((k_eff - j 2π f)^2 σy σz / u^2)
//! gain   = |H|;  normalized gain = gain / max over the grid
//! phase  = -2π f x/u - 4π f k_eff σy σz / u^2
//! delay  =  2π x/u + 4π k_eff σy σz / u^2          (frequency independent)
//! ```

use num_complex::Complex;

use crate::atmosphere::{dispersion, DispersionCoefficients};
use crate::environment::StabilityClass;
use crate::error::{Error, Result};
use crate::freq::{FrequencyGrid, FrequencyResponse};
use crate::scalar::Real;

/// Everything the puff channel needs at one receiver position.
#[derive(Debug, Clone, PartialEq)]
pub struct PuffChannelParams<S> {
    pub q0: S,
    /// Receiver position relative to the source, wind along +x.
    pub x: S,
    pub y: S,
    pub z: S,
    /// Release height.
    pub z0: S,
    pub u: S,
    /// Spreads evaluated at the receiver's downwind distance x.
    pub dispersion: DispersionCoefficients<S>,
    pub k_eff: S,
}

impl<S: Real> PuffChannelParams<S> {
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
    ) -> Result<Self> {
        if !(q0 > S::zero()) {
            return Err(Error::invalid("q0", format!("must be > 0, got {q0}")));
        }
        if !(u > S::zero()) {
            return Err(Error::invalid("u", format!("must be > 0 m/s, got {u}")));
        }
        if !(z >= S::zero()) || !(z0 >= S::zero()) {
            return Err(Error::invalid("z", "heights must be >= 0"));
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
        })
    }

    fn lateral(&self) -> S {
        let sy = self.dispersion.sigma_y;
        (-self.y * self.y / (S::lit(2.0) * sy * sy)).exp()
    }

    fn vertical_images(&self) -> S {
        let sz = self.dispersion.sigma_z;
        let two = S::lit(2.0);
        let a = self.z - self.z0;
        let b = self.z + self.z0;
        (-a * a / (two * sz * sz)).exp() + (-b * b / (two * sz * sz)).exp()
    }

    /// Degraded concentration at the receiver at time t after release.
    pub fn concentration(&self, t: S) -> S {
        debug_assert!(t >= S::zero());
        let ss = self.dispersion.yz_product();
        let norm = self.q0 / (S::TAU() * ss).powf(S::lit(1.5));
        let axial = {
            let d = self.x - self.u * t;
            (-d * d / (S::lit(2.0) * ss)).exp()
        };
        norm * axial * self.lateral() * self.vertical_images() * (-self.k_eff * t).exp()
    }

    /// Frequency-independent group delay 2π x/u + 4π k_eff σy σz / u^2.
    pub fn group_delay(&self) -> S {
        let ss = self.dispersion.yz_product();
        S::TAU() * self.x / self.u
            + S::lit(4.0) * S::PI() * self.k_eff * ss / (self.u * self.u)
    }

    /// Phase -2π f x/u - 4π f k_eff σy σz / u^2, linear in f.
    pub fn phase(&self, f: S) -> S {
        -f * self.group_delay()
    }

    /// log10 of the unnormalized gain; stable where the linear gain would
    /// overflow (large k_eff x / u).
    pub fn log10_gain(&self, f: S) -> S {
        let ss = self.dispersion.yz_product();
        let w = S::TAU() * f;
        let pref = self.q0 / (S::TAU() * self.u * ss) * self.lateral() * self.vertical_images();
        let exponent = self.k_eff * self.x / self.u
            + (self.k_eff * self.k_eff - w * w) * ss / (self.u * self.u);
        pref.log10() + exponent * S::lit(std::f64::consts::LOG10_E)
    }

    /// Attenuation in dB relative to the DC gain: 20 log10(gain(f)/gain(0)).
    pub fn attenuation_db(&self, f: S) -> S {
        S::lit(20.0) * (self.log10_gain(f) - self.log10_gain(S::zero()))
    }

    /// Complex response, gain, normalized gain, phase and delay on a grid.
    /// The grid must start at f = 0 so the normalization maximum is on it.
    pub fn response(&self, grid: &FrequencyGrid<S>) -> Result<FrequencyResponse<S>> {
        if !grid.starts_at_zero() {
            return Err(Error::invalid(
                "frequency_grid",
                "normalized puff gain needs f = 0 on the grid",
            ));
        }
        let ss = self.dispersion.yz_product();
        let u2 = self.u * self.u;
        let pref = self.q0 / (S::TAU() * self.u * ss) * self.lateral() * self.vertical_images();
        let delay = self.group_delay();

        let fs = grid.points();
        let mut values = Vec::with_capacity(fs.len());
        let mut gains = Vec::with_capacity(fs.len());
        let mut phases = Vec::with_capacity(fs.len());
        for &f in fs {
            let w = S::TAU() * f;
            let re_exp =
                self.k_eff * self.x / self.u + (self.k_eff * self.k_eff - w * w) * ss / u2;
            let gain = pref * re_exp.exp();
            let ph = self.phase(f);
            values.push(Complex::from_polar(gain, ph));
            gains.push(gain);
            phases.push(ph);
        }
        let normalized = FrequencyResponse::normalize(&gains);
        let delays = vec![delay; fs.len()];
        Ok(FrequencyResponse::from_parts(
            grid.clone(),
            values,
            normalized,
            phases,
            delays,
        ))
    }

    /// Closed-form -3 dB bandwidth of the normalized gain:
    /// exp(-(2π f)^2 σy σz / u^2) = 1/sqrt(2).
    pub fn bandwidth_3db(&self) -> S {
        let ss = self.dispersion.yz_product();
        (S::lit(0.5) * S::lit(2.0).ln() * self.u * self.u / ss).sqrt() / S::TAU()
    }
}
