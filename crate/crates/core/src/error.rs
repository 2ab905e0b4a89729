use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the channel models.
///
/// Scalar payloads are widened to `f64` so the error type stays independent
/// of the scalar parameter.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The species has only oxidant rate constants; pool kinetics are absent.
    #[error("species `{species}` has no pool kinetics; transmitter operations need k_a, k_l, k_g, eta")]
    MissingKinetics { species: String },

    /// Fixed-step integration would be unstable at this step size.
    #[error("time step {dt} s exceeds the stability bound {max_dt} s (0.1 / fastest rate)")]
    UnstableStep { dt: f64, max_dt: f64 },

    /// Dispersion coefficients are only defined downwind of the source.
    #[error("downwind distance must be positive, got {x} m")]
    NonPositiveDistance { x: f64 },

    /// Stage responses can only be composed on one shared frequency grid.
    #[error("frequency grids differ; stage responses must share a grid")]
    GridMismatch,

    /// The normalized gain stayed above 1/sqrt(2) over the whole grid.
    #[error("normalized gain never crosses 1/sqrt(2) on the grid")]
    NeverCrosses,

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not converge to the requested tolerance")]
    NoConvergence,

    /// A constructor argument violated a model invariant.
    #[error("invalid {field}: {reason}")]
    InvalidParameter { field: &'static str, reason: String },
}

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            reason: reason.into(),
        }
    }

    /// Name of the violated field for `InvalidParameter`, if any.
    pub fn field(&self) -> Option<&'static str> {
        match self {
            Error::InvalidParameter { field, .. } => Some(field),
            _ => None,
        }
    }
}
