//! Transmitter-relative link layout: receiver position and noise sources.

use crate::atmosphere::blend_k_eff;
use crate::environment::Environment;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::species::Blend;

/// One co-channel burst emitter at offset (x0, y0) from the transmitter.
///
/// `k_n` is the source's effective decay rate. It is free data: construct
/// with an explicit value, or derive it from a blend via
/// [`NoiseSource::from_blend`].
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseSource<S> {
    pub x0: S,
    pub y0: S,
    pub q_n: S,
    pub k_n: S,
    pub blend: Option<Blend<S>>,
}

impl<S: Real> NoiseSource<S> {
    pub fn new(x0: S, y0: S, q_n: S, k_n: S) -> Result<Self> {
        if !(q_n > S::zero()) || !q_n.is_finite() {
            return Err(Error::invalid("q_n", format!("must be > 0, got {q_n}")));
        }
        if !(k_n >= S::zero()) || !k_n.is_finite() {
            return Err(Error::invalid("k_n", format!("must be >= 0, got {k_n}")));
        }
        Ok(Self {
            x0,
            y0,
            q_n,
            k_n,
            blend: None,
        })
    }

    /// Derives `k_n` as the blend's fraction-weighted effective loss rate.
    pub fn from_blend(x0: S, y0: S, q_n: S, blend: Blend<S>, env: &Environment<S>) -> Result<Self> {
        let k_n = blend_k_eff(&blend, env);
        let mut src = Self::new(x0, y0, q_n, k_n)?;
        src.blend = Some(blend);
        Ok(src)
    }
}

/// Receiver position and noise layout, all relative to the transmitter at
/// the origin with the wind along +x.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkGeometry<S> {
    pub receiver: (S, S, S),
    pub noise_sources: Vec<NoiseSource<S>>,
}

impl<S: Real> LinkGeometry<S> {
    pub fn new(receiver: (S, S, S), noise_sources: Vec<NoiseSource<S>>) -> Result<Self> {
        let (x, _, z) = receiver;
        if !(x > S::zero()) {
            return Err(Error::invalid(
                "receiver",
                format!("receiver must sit downwind (x > 0), got x = {x}"),
            ));
        }
        if !(z >= S::zero()) {
            return Err(Error::invalid(
                "receiver",
                format!("receiver height must be >= 0, got z = {z}"),
            ));
        }
        Ok(Self {
            receiver,
            noise_sources,
        })
    }
}
