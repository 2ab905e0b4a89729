//! Frequency grids and sampled stage responses.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Strictly increasing grid of nonnegative frequencies in Hz.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid<S>(Vec<S>);

impl<S: Real> FrequencyGrid<S> {
    pub fn new(points: Vec<S>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::invalid("frequency_grid", "grid must not be empty"));
        }
        if !(points[0] >= S::zero()) || !points[0].is_finite() {
            return Err(Error::invalid(
                "frequency_grid",
                format!("frequencies must be >= 0, got {}", points[0]),
            ));
        }
        for w in points.windows(2) {
            if !(w[1] > w[0]) || !w[1].is_finite() {
                return Err(Error::invalid(
                    "frequency_grid",
                    format!("grid must be strictly increasing, got {} after {}", w[1], w[0]),
                ));
            }
        }
        Ok(Self(points))
    }

    /// `n` logarithmically spaced points on [min, max].
    pub fn log_spaced(min: S, max: S, n: usize) -> Result<Self> {
        if !(min > S::zero()) {
            return Err(Error::invalid(
                "frequency_grid",
                format!("log spacing needs min > 0, got {min}"),
            ));
        }
        if n < 2 || !(max > min) {
            return Err(Error::invalid(
                "frequency_grid",
                "log spacing needs n >= 2 and max > min",
            ));
        }
        let (la, lb) = (min.log10(), max.log10());
        let step = (lb - la) / S::from_usize(n - 1).unwrap();
        let points = (0..n)
            .map(|i| {
                let t = S::from_usize(i).unwrap();
                S::lit(10.0).powf(la + step * t)
            })
            .collect();
        Self::new(points)
    }

    /// Like [`log_spaced`](Self::log_spaced) with f = 0 prepended, for
    /// responses normalized by their DC value.
    pub fn log_spaced_with_zero(min: S, max: S, n: usize) -> Result<Self> {
        let mut points = vec![S::zero()];
        points.extend_from_slice(Self::log_spaced(min, max, n)?.points());
        Self::new(points)
    }

    pub fn points(&self) -> &[S] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn starts_at_zero(&self) -> bool {
        self.0[0] == S::zero()
    }
}

/// A complex response sampled on a grid together with its derived curves.
///
/// `gain` is `|values|`; `normalized_gain` is the gain divided by its
/// maximum over the grid (one at some grid point); `phase` is continuous in
/// radians; `delay` is the group delay -dphase/df in seconds.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyResponse<S> {
    grid: FrequencyGrid<S>,
    values: Vec<Complex<S>>,
    gain: Vec<S>,
    normalized_gain: Vec<S>,
    phase: Vec<S>,
    delay: Vec<S>,
}

impl<S: Real> FrequencyResponse<S> {
    pub(crate) fn from_parts(
        grid: FrequencyGrid<S>,
        values: Vec<Complex<S>>,
        normalized_gain: Vec<S>,
        phase: Vec<S>,
        delay: Vec<S>,
    ) -> Self {
        debug_assert_eq!(grid.len(), values.len());
        debug_assert_eq!(grid.len(), normalized_gain.len());
        debug_assert_eq!(grid.len(), phase.len());
        debug_assert_eq!(grid.len(), delay.len());
        let gain = values.iter().map(|v| v.norm()).collect();
        Self {
            grid,
            values,
            gain,
            normalized_gain,
            phase,
            delay,
        }
    }

    /// Divides a gain curve by its maximum over the grid.
    pub(crate) fn normalize(gain: &[S]) -> Vec<S> {
        let max = gain.iter().fold(S::zero(), |m, &g| m.max(g));
        gain.iter().map(|&g| g / max).collect()
    }

    pub fn grid(&self) -> &FrequencyGrid<S> {
        &self.grid
    }

    pub fn values(&self) -> &[Complex<S>] {
        &self.values
    }

    pub fn gain(&self) -> &[S] {
        &self.gain
    }

    pub fn normalized_gain(&self) -> &[S] {
        &self.normalized_gain
    }

    pub fn phase(&self) -> &[S] {
        &self.phase
    }

    pub fn delay(&self) -> &[S] {
        &self.delay
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Attenuation in dB: 20 log10 of the normalized gain.
    pub fn attenuation_db(&self) -> Vec<S> {
        let twenty = S::lit(20.0);
        self.normalized_gain
            .iter()
            .map(|&g| twenty * g.log10())
            .collect()
    }
}
