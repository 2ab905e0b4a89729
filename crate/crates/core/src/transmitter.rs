//! Storage-pool transmitter model.
//!
//! Production P(t) partitions into an aqueous and a lipid pool and drains
//! through the gas-phase pool into the ambient air:
//!
//! ```text
//! S_a' = eta P - k_a S_a
//! S_l' = (1 - eta) P - k_l S_l
//! S_g' = k_a S_a + k_l S_l - k_g S_g,      e(t) = k_g S_g
//! ```
//!
//! The matching transfer function factors into a gas-pool low-pass times a
//! partition-weighted pair of storage low-passes:
//!
//! ```text
//! H(f) = k_g/(j2πf + k_g) · (k_a η/(j2πf + k_a) + k_l (1-η)/(j2πf + k_l))
//! ```
//!
//! with H(0) = 1. Normalized gain, phase and group delay are evaluated from
//! the closed real/imaginary split of the second factor; the phase is
//! accumulated per factor (each contributes (-π/2, 0]) so no unwrapping is
//! ever needed.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::freq::{FrequencyGrid, FrequencyResponse};
use crate::integrate::rk4_step;
use crate::scalar::Real;
use crate::species::{Blend, PoolKinetics, VocSpecies};

/// VOC production driving the pools, nonnegative over the simulated window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProductionSignal<S> {
    /// Instantaneous burst of `area` molecules at t = 0, realized as the
    /// initial pool contents (eta * area aqueous, the rest lipid).
    Impulse { area: S },
    /// Constant production rate in molecules/s.
    Step { rate: S },
    /// Gaussian pulse of total `area` molecules centered at `center` with
    /// standard deviation `width`.
    GaussianPulse { area: S, center: S, width: S },
    /// mean + amplitude * sin(2π f t); requires amplitude <= mean.
    Sinusoid { mean: S, amplitude: S, frequency: S },
}

impl<S: Real> ProductionSignal<S> {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ProductionSignal::Impulse { area } => {
                if !(area >= S::zero()) {
                    return Err(Error::invalid("area", format!("must be >= 0, got {area}")));
                }
            }
            ProductionSignal::Step { rate } => {
                if !(rate >= S::zero()) {
                    return Err(Error::invalid("rate", format!("must be >= 0, got {rate}")));
                }
            }
            ProductionSignal::GaussianPulse { area, width, .. } => {
                if !(area >= S::zero()) {
                    return Err(Error::invalid("area", format!("must be >= 0, got {area}")));
                }
                if !(width > S::zero()) {
                    return Err(Error::invalid("width", format!("must be > 0, got {width}")));
                }
            }
            ProductionSignal::Sinusoid {
                mean,
                amplitude,
                frequency,
            } => {
                if !(amplitude >= S::zero() && amplitude <= mean) {
                    return Err(Error::invalid(
                        "amplitude",
                        format!("needs 0 <= amplitude <= mean for a nonnegative signal, got {amplitude} vs mean {mean}"),
                    ));
                }
                if !(frequency > S::zero()) {
                    return Err(Error::invalid(
                        "frequency",
                        format!("must be > 0, got {frequency}"),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Production rate at time t (zero for the impulse, which enters through
    /// the initial condition instead).
    pub fn rate_at(&self, t: S) -> S {
        match *self {
            ProductionSignal::Impulse { .. } => S::zero(),
            ProductionSignal::Step { rate } => rate,
            ProductionSignal::GaussianPulse { area, center, width } => {
                let z = (t - center) / width;
                area / (width * S::TAU().sqrt()) * (-z * z / S::lit(2.0)).exp()
            }
            ProductionSignal::Sinusoid {
                mean,
                amplitude,
                frequency,
            } => mean + amplitude * (S::TAU() * frequency * t).sin(),
        }
    }
}

/// Pool contents at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoolState<S> {
    pub t: S,
    pub s_a: S,
    pub s_l: S,
    pub s_g: S,
}

/// RK4 trajectory of the pools; each sample pairs the state with the
/// emission rate e(t) = k_g S_g(t).
pub fn simulate_pools<S: Real>(
    species: &VocSpecies<S>,
    signal: &ProductionSignal<S>,
    window: (S, S),
    dt: S,
) -> Result<Vec<(PoolState<S>, S)>> {
    let kin = *species.kinetics()?;
    signal.validate()?;
    let (t0, t1) = window;
    if !(t1 > t0) {
        return Err(Error::invalid(
            "window",
            format!("end must exceed start, got [{t0}, {t1}]"),
        ));
    }
    let max_dt = S::lit(0.1) / kin.max_rate();
    if !(dt > S::zero()) || dt > max_dt {
        return Err(Error::UnstableStep {
            dt: dt.widen(),
            max_dt: max_dt.widen(),
        });
    }

    let mut y = match *signal {
        ProductionSignal::Impulse { area } => {
            [kin.eta * area, (S::one() - kin.eta) * area, S::zero()]
        }
        _ => [S::zero(); 3],
    };
    let deriv = |t: S, y: &[S; 3]| -> [S; 3] {
        let p = signal.rate_at(t);
        [
            kin.eta * p - kin.k_a * y[0],
            (S::one() - kin.eta) * p - kin.k_l * y[1],
            kin.k_a * y[0] + kin.k_l * y[1] - kin.k_g * y[2],
        ]
    };

    let steps = ((t1 - t0) / dt).widen().ceil() as usize;
    let mut out = Vec::with_capacity(steps + 1);
    let mut t = t0;
    out.push((
        PoolState {
            t,
            s_a: y[0],
            s_l: y[1],
            s_g: y[2],
        },
        kin.k_g * y[2],
    ));
    for i in 1..=steps {
        y = rk4_step(&deriv, t, &y, dt);
        t = t0 + dt * S::from_usize(i).unwrap();
        out.push((
            PoolState {
                t,
                s_a: y[0],
                s_l: y[1],
                s_g: y[2],
            },
            kin.k_g * y[2],
        ));
    }
    Ok(out)
}

/// Real part of the storage factor: Σ_i w_i k_i^2 / (k_i^2 + w^2).
fn storage_re<S: Real>(kin: &PoolKinetics<S>, w: S) -> S {
    let wa = kin.k_a * kin.k_a + w * w;
    let wl = kin.k_l * kin.k_l + w * w;
    kin.k_a * kin.k_a * kin.eta / wa + kin.k_l * kin.k_l * (S::one() - kin.eta) / wl
}

/// Magnitude of the (negative) imaginary part: Σ_i w_i k_i w / (k_i^2 + w^2).
fn storage_im<S: Real>(kin: &PoolKinetics<S>, w: S) -> S {
    let wa = kin.k_a * kin.k_a + w * w;
    let wl = kin.k_l * kin.k_l + w * w;
    kin.k_a * kin.eta * w / wa + kin.k_l * (S::one() - kin.eta) * w / wl
}

/// Complex transfer-function value at one frequency.
pub fn value<S: Real>(kin: &PoolKinetics<S>, f: S) -> Complex<S> {
    let w = S::TAU() * f;
    let gas = Complex::new(kin.k_g, S::zero()) / Complex::new(kin.k_g, w);
    let aq = Complex::new(kin.k_a * kin.eta, S::zero()) / Complex::new(kin.k_a, w);
    let lip = Complex::new(kin.k_l * (S::one() - kin.eta), S::zero()) / Complex::new(kin.k_l, w);
    gas * (aq + lip)
}

/// Closed-form normalized gain k_g/sqrt(k_g^2 + w^2) * sqrt(Re^2 + Im^2).
pub fn normalized_gain<S: Real>(kin: &PoolKinetics<S>, f: S) -> S {
    let w = S::TAU() * f;
    let re = storage_re(kin, w);
    let im = storage_im(kin, w);
    kin.k_g / (kin.k_g * kin.k_g + w * w).sqrt() * (re * re + im * im).sqrt()
}

/// Phase in radians, accumulated per factor so it is continuous in f.
pub fn phase<S: Real>(kin: &PoolKinetics<S>, f: S) -> S {
    let w = S::TAU() * f;
    let re = storage_re(kin, w);
    let im = storage_im(kin, w);
    (-w / kin.k_g).atan() + (-im / re).atan()
}

/// Analytic group delay -dphase/df in seconds.
pub fn group_delay<S: Real>(kin: &PoolKinetics<S>, f: S) -> S {
    let w = S::TAU() * f;
    let tau = S::TAU();
    let pi = S::PI();
    let one = S::one();
    let wa = kin.k_a * kin.k_a + w * w;
    let wl = kin.k_l * kin.k_l + w * w;

    let re = storage_re(kin, w);
    let im = storage_im(kin, w);
    let eight_pi2 = S::lit(8.0) * pi * pi;
    let re_p = -eight_pi2 * kin.k_a * kin.k_a * kin.eta * f / (wa * wa)
        - eight_pi2 * kin.k_l * kin.k_l * (one - kin.eta) * f / (wl * wl);
    let im_p = tau * kin.k_a * kin.eta * (kin.k_a * kin.k_a - w * w) / (wa * wa)
        + tau * (one - kin.eta) * kin.k_l * (kin.k_l * kin.k_l - w * w) / (wl * wl);

    tau * kin.k_g / (kin.k_g * kin.k_g + w * w) + (re * im_p - im * re_p) / (re * re + im * im)
}

fn build_response<S: Real>(
    grid: &FrequencyGrid<S>,
    value_at: impl Fn(S) -> Complex<S>,
    norm_at: impl Fn(S) -> S,
    phase_at: impl Fn(S) -> S,
    delay_at: impl Fn(S) -> S,
) -> FrequencyResponse<S> {
    let fs = grid.points();
    FrequencyResponse::from_parts(
        grid.clone(),
        fs.iter().map(|&f| value_at(f)).collect(),
        fs.iter().map(|&f| norm_at(f)).collect(),
        fs.iter().map(|&f| phase_at(f)).collect(),
        fs.iter().map(|&f| delay_at(f)).collect(),
    )
}

/// Full transmitter response of one species on a grid.
pub fn transfer_function<S: Real>(
    species: &VocSpecies<S>,
    grid: &FrequencyGrid<S>,
) -> Result<FrequencyResponse<S>> {
    let kin = species.kinetics()?;
    Ok(build_response(
        grid,
        |f| value(kin, f),
        |f| normalized_gain(kin, f),
        |f| phase(kin, f),
        |f| group_delay(kin, f),
    ))
}

/// Fraction-weighted complex sum of the component responses, normalized by
/// its maximum over the grid. The delay column is a central difference of
/// the summed phase; there is no closed per-blend form.
pub fn blend_transfer_function<S: Real>(
    blend: &Blend<S>,
    grid: &FrequencyGrid<S>,
) -> Result<FrequencyResponse<S>> {
    let mut kinetics = Vec::with_capacity(blend.components().len());
    for c in blend.components() {
        kinetics.push((c.fraction, *c.species.kinetics()?));
    }
    let value_at = |f: S| -> Complex<S> {
        kinetics
            .iter()
            .fold(Complex::new(S::zero(), S::zero()), |acc, &(w, kin)| {
                acc + value(&kin, f).scale(w)
            })
    };
    let phase_at = |f: S| {
        let v = value_at(f);
        v.im.atan2(v.re)
    };

    let fs = grid.points();
    let values: Vec<Complex<S>> = fs.iter().map(|&f| value_at(f)).collect();
    let gains: Vec<S> = values.iter().map(|v| v.norm()).collect();
    let normalized = FrequencyResponse::normalize(&gains);
    let phases: Vec<S> = fs.iter().map(|&f| phase_at(f)).collect();
    let delays: Vec<S> = fs
        .iter()
        .map(|&f| {
            let h = (f * S::lit(1e-4)).max(S::lit(1e-12));
            let lo = (f - h).max(S::zero());
            let hi = f + h;
            -(phase_at(hi) - phase_at(lo)) / (hi - lo)
        })
        .collect();
    Ok(FrequencyResponse::from_parts(
        grid.clone(),
        values,
        normalized,
        phases,
        delays,
    ))
}
