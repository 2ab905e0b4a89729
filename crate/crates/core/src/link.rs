//! End-to-end composition: stage products, bandwidth extraction, capacity.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::freq::FrequencyResponse;
use crate::scalar::Real;

/// Composes transmitter, channel and receiver stages on one shared grid:
/// normalized gains multiply pointwise, phases and group delays add.
pub fn end_to_end_response<S: Real>(
    tx: &FrequencyResponse<S>,
    channel: &FrequencyResponse<S>,
    rx: &FrequencyResponse<S>,
) -> Result<FrequencyResponse<S>> {
    if tx.grid() != channel.grid() || tx.grid() != rx.grid() {
        return Err(Error::GridMismatch);
    }
    let n = tx.len();
    let mut values = Vec::with_capacity(n);
    let mut normalized = Vec::with_capacity(n);
    let mut phases = Vec::with_capacity(n);
    let mut delays = Vec::with_capacity(n);
    for i in 0..n {
        let gain = tx.normalized_gain()[i] * channel.normalized_gain()[i] * rx.normalized_gain()[i];
        let phase = tx.phase()[i] + channel.phase()[i] + rx.phase()[i];
        normalized.push(gain);
        phases.push(phase);
        delays.push(tx.delay()[i] + channel.delay()[i] + rx.delay()[i]);
        values.push(Complex::from_polar(gain, phase));
    }
    Ok(FrequencyResponse::from_parts(
        tx.grid().clone(),
        values,
        normalized,
        phases,
        delays,
    ))
}

/// Smallest frequency where the normalized gain crosses 1/sqrt(2), linearly
/// interpolated between grid points.
///
/// Expects a low-pass-normalized response: gain 1 at the first grid point,
/// nonincreasing thereafter.
pub fn bandwidth_3db<S: Real>(resp: &FrequencyResponse<S>) -> Result<S> {
    let threshold = S::lit(0.5).sqrt();
    let fs = resp.grid().points();
    let g = resp.normalized_gain();
    if !(g[0] >= threshold) {
        return Err(Error::invalid(
            "normalized_gain",
            "response must start at its maximum (gain 1 at the first grid point)",
        ));
    }
    for i in 1..g.len() {
        if g[i] < threshold {
            let t = (threshold - g[i - 1]) / (g[i] - g[i - 1]);
            return Ok(fs[i - 1] + t * (fs[i] - fs[i - 1]));
        }
    }
    Err(Error::NeverCrosses)
}

/// Shannon capacity B log2(1 + SNR) in bits/s; SNR is linear.
pub fn capacity<S: Real>(bandwidth: S, snr_linear: S) -> S {
    debug_assert!(bandwidth >= S::zero() && snr_linear >= S::zero());
    bandwidth * (S::one() + snr_linear).ln() / S::lit(2.0).ln()
}
