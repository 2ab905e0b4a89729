//! End-to-end frequency-domain models of a VOC-based interplant
//! molecular-communication link.
//!
//! The link is modeled in three cascaded stages, each exposing attenuation
//! (normalized gain), phase and group delay over a frequency grid:
//!
//! * [`transmitter`] — storage-pool kinetics of VOC release from a leaf,
//!   with the matching low-pass transfer function;
//! * [`puff`] / [`plume`] — the physical air channel for burst
//!   (stress-driven) and continuous (constitutive) emission, built on
//!   Pasquill-Gifford dispersion and oxidant degradation ([`atmosphere`]);
//! * [`receiver`] — leaf uptake as a first-order mass balance.
//!
//! [`noise`] adds time-averaged burst powers and SNR for co-channel
//! emitters, and [`link`] composes stages, extracts -3 dB bandwidth and
//! evaluates Shannon capacity. [`oracle`] holds the deliberately naive
//! numerical cross-checks (adaptive Simpson, direct DFT, finite
//! differences, ODE reference experiments) used by the test suites.
//!
//! All math is generic over the scalar type through [`scalar::Real`];
//! `f64` aliases for the main types sit at the crate root.

// Validation guards are written as `!(x > 0)` rather than `x <= 0` so that
// NaN inputs fail them too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod atmosphere;
pub mod data;
pub mod environment;
pub mod error;
pub mod freq;
pub mod geometry;
mod integrate;
pub mod link;
pub mod noise;
pub mod oracle;
pub mod plume;
pub mod puff;
pub mod receiver;
pub mod scalar;
pub mod species;
pub mod transmitter;

pub use error::{Error, Result};
pub use scalar::Real;

/// `f64` aliases for the concrete types most callers want.
pub type VocSpecies64 = species::VocSpecies<f64>;
pub type PoolKinetics64 = species::PoolKinetics<f64>;
pub type Blend64 = species::Blend<f64>;
pub type Environment64 = environment::Environment<f64>;
pub type LinkGeometry64 = geometry::LinkGeometry<f64>;
pub type NoiseSource64 = geometry::NoiseSource<f64>;
pub type FrequencyGrid64 = freq::FrequencyGrid<f64>;
pub type FrequencyResponse64 = freq::FrequencyResponse<f64>;
pub type DispersionCoefficients64 = atmosphere::DispersionCoefficients<f64>;
pub type PuffChannelParams64 = puff::PuffChannelParams<f64>;
pub type PlumeChannelParams64 = plume::PlumeChannelParams<f64>;
pub type LeafParams64 = receiver::LeafParams<f64>;
pub type PuffSource64 = noise::PuffSource<f64>;
pub type Snr64 = noise::Snr<f64>;
