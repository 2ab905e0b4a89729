//! Time-averaged burst power at the receiver and signal-to-noise ratios for
//! co-channel noise sources.
//!
//! Powers follow the squared-pulse sample average, term for term:
//!
//! ```text
//! P = (1/n) Σ_t q^2 · exp(-(x_rel - u t)^2 / (σy σz))
//!               · exp(-y_rel^2 / σy^2) · exp(-2 k t)
//! ```
//!
//! (the exponents carry no 1/2: they are the squares of the concentration
//! kernel's Gaussians). Spreads are evaluated at each source's own downwind
//! separation from the receiver. Units are arbitrary but consistent squared
//! concentrations; only ratios are reported.

use crate::atmosphere::{dispersion, DispersionCoefficients};
use crate::environment::Environment;
use crate::error::{Error, Result};
use crate::geometry::NoiseSource;
use crate::scalar::Real;

/// One burst emitter for power purposes: offset from the transmitter
/// origin, released count, effective decay rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PuffSource<S> {
    pub x0: S,
    pub y0: S,
    pub q: S,
    pub k: S,
}

impl<S: Real> PuffSource<S> {
    /// The wanted signal: a source at the transmitter origin.
    pub fn at_origin(q: S, k: S) -> Self {
        Self {
            x0: S::zero(),
            y0: S::zero(),
            q,
            k,
        }
    }
}

impl<S: Real> From<&NoiseSource<S>> for PuffSource<S> {
    fn from(n: &NoiseSource<S>) -> Self {
        Self {
            x0: n.x0,
            y0: n.y0,
            q: n.q_n,
            k: n.k_n,
        }
    }
}

/// Discrete time-average of the squared pulse amplitude.
///
/// `n` samples span `window` inclusively (a single sample sits at the window
/// start).
#[allow(clippy::too_many_arguments)]
pub fn avg_power<S: Real>(
    q: S,
    x_rel: S,
    y_rel: S,
    k: S,
    disp: &DispersionCoefficients<S>,
    u: S,
    window: (S, S),
    n: usize,
) -> S {
    assert!(n >= 1, "need at least one sample");
    let (t0, t1) = window;
    let ss = disp.yz_product();
    let sy2 = disp.sigma_y * disp.sigma_y;
    let lateral = (-y_rel * y_rel / sy2).exp();
    let step = if n > 1 {
        (t1 - t0) / S::from_usize(n - 1).unwrap()
    } else {
        S::zero()
    };
    let mut total = S::zero();
    for i in 0..n {
        let t = t0 + step * S::from_usize(i).unwrap();
        let d = x_rel - u * t;
        total = total + (-d * d / ss).exp() * (-S::lit(2.0) * k * t).exp();
    }
    q * q * lateral * total / S::from_usize(n).unwrap()
}

/// Average received power of one source over the environment's sampling
/// window, with spreads at the source-receiver downwind separation.
pub fn source_power<S: Real>(
    src: &PuffSource<S>,
    receiver: (S, S),
    env: &Environment<S>,
) -> Result<S> {
    let x_rel = receiver.0 - src.x0;
    let y_rel = receiver.1 - src.y0;
    let disp = dispersion(x_rel, env.stability_class)?;
    let n = env.sample_count();
    let t1 = env.t_start + env.sample_step * S::from_usize(n - 1).unwrap();
    Ok(avg_power(
        src.q,
        x_rel,
        y_rel,
        src.k,
        &disp,
        env.wind_speed,
        (env.t_start, t1),
        n,
    ))
}

/// Linear and dB signal-to-noise ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Snr<S> {
    pub linear: S,
    pub db: S,
}

impl<S: Real> Snr<S> {
    fn from_powers(p_signal: S, p_noise: S) -> Self {
        // Zero noise power is reported as the +inf sentinel, not an error.
        let linear = if p_noise > S::zero() {
            p_signal / p_noise
        } else {
            S::infinity()
        };
        Snr {
            linear,
            db: S::lit(10.0) * linear.log10(),
        }
    }
}

/// SNR of one signal source against one noise source.
pub fn snr<S: Real>(
    signal: &PuffSource<S>,
    noise: &PuffSource<S>,
    env: &Environment<S>,
    receiver: (S, S),
) -> Result<Snr<S>> {
    snr_multi(
        std::slice::from_ref(signal),
        std::slice::from_ref(noise),
        env,
        receiver,
    )
}

/// SNR for several signal and noise sources: Σ P_signal / Σ P_noise.
pub fn snr_multi<S: Real>(
    signals: &[PuffSource<S>],
    noises: &[PuffSource<S>],
    env: &Environment<S>,
    receiver: (S, S),
) -> Result<Snr<S>> {
    if signals.is_empty() {
        return Err(Error::invalid("signals", "need at least one signal source"));
    }
    let mut p_signal = S::zero();
    for s in signals {
        p_signal = p_signal + source_power(s, receiver, env)?;
    }
    let mut p_noise = S::zero();
    for n in noises {
        p_noise = p_noise + source_power(n, receiver, env)?;
    }
    Ok(Snr::from_powers(p_signal, p_noise))
}
