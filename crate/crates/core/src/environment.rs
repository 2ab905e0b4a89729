//! Ambient conditions: wind, stability class, oxidant levels, sampling window.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Pasquill-Gifford stability class, A (strongly unstable) through
/// F (moderately stable).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StabilityClass {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl StabilityClass {
    pub const ALL: [StabilityClass; 6] = [
        StabilityClass::A,
        StabilityClass::B,
        StabilityClass::C,
        StabilityClass::D,
        StabilityClass::E,
        StabilityClass::F,
    ];
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            StabilityClass::A => 'A',
            StabilityClass::B => 'B',
            StabilityClass::C => 'C',
            StabilityClass::D => 'D',
            StabilityClass::E => 'E',
            StabilityClass::F => 'F',
        };
        write!(f, "{c}")
    }
}

impl FromStr for StabilityClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(StabilityClass::A),
            "B" | "b" => Ok(StabilityClass::B),
            "C" | "c" => Ok(StabilityClass::C),
            "D" | "d" => Ok(StabilityClass::D),
            "E" | "e" => Ok(StabilityClass::E),
            "F" | "f" => Ok(StabilityClass::F),
            other => Err(Error::invalid(
                "stability_class",
                format!("expected one of A-F, got `{other}`"),
            )),
        }
    }
}

/// Shared ambient state for channel and noise evaluation.
///
/// Oxidant concentrations are in molecules/cm^3 so that multiplying by the
/// tabulated rate constants gives 1/s directly.
#[derive(Debug, Clone, PartialEq)]
pub struct Environment<S> {
    pub wind_speed: S,
    pub stability_class: StabilityClass,
    pub c_oh: S,
    pub c_o3: S,
    pub c_no3: S,
    pub release_height: S,
    pub t_start: S,
    pub t_end: S,
    pub sample_step: S,
}

impl<S: Real> Environment<S> {
    /// Default sampling window: t in [0, 20] s at 1 s steps.
    pub fn new(
        wind_speed: S,
        stability_class: StabilityClass,
        c_oh: S,
        c_o3: S,
        c_no3: S,
        release_height: S,
    ) -> Result<Self> {
        Self::with_window(
            wind_speed,
            stability_class,
            c_oh,
            c_o3,
            c_no3,
            release_height,
            S::zero(),
            S::lit(20.0),
            S::one(),
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub fn with_window(
        wind_speed: S,
        stability_class: StabilityClass,
        c_oh: S,
        c_o3: S,
        c_no3: S,
        release_height: S,
        t_start: S,
        t_end: S,
        sample_step: S,
    ) -> Result<Self> {
        if !(wind_speed > S::zero()) || !wind_speed.is_finite() {
            return Err(Error::invalid(
                "wind_speed",
                format!("must be > 0 m/s, got {wind_speed}"),
            ));
        }
        for (field, v) in [("c_oh", c_oh), ("c_o3", c_o3), ("c_no3", c_no3)] {
            if !(v >= S::zero()) || !v.is_finite() {
                return Err(Error::invalid(field, format!("must be >= 0, got {v}")));
            }
        }
        if !(release_height >= S::zero()) {
            return Err(Error::invalid(
                "release_height",
                format!("must be >= 0 m, got {release_height}"),
            ));
        }
        if !(t_end > t_start) {
            return Err(Error::invalid(
                "time_window",
                format!("t_end must exceed t_start, got [{t_start}, {t_end}]"),
            ));
        }
        if !(sample_step > S::zero()) {
            return Err(Error::invalid(
                "sample_step",
                format!("must be > 0 s, got {sample_step}"),
            ));
        }
        Ok(Self {
            wind_speed,
            stability_class,
            c_oh,
            c_o3,
            c_no3,
            release_height,
            t_start,
            t_end,
            sample_step,
        })
    }

    /// Number of samples t_k = t_start + k * sample_step inside the window.
    pub fn sample_count(&self) -> usize {
        let span = (self.t_end - self.t_start) / self.sample_step;
        // Tolerate rounding when the window is an exact multiple of the step.
        (span.widen() + 1e-9).floor() as usize + 1
    }
}
