use core::fmt;

use crate::arcs::ArcClass;

/// Errors shared by all layers of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A hyperbolic length was zero, negative, non-finite, or below the
    /// degeneration threshold (1e-12). Lengths that small are never clamped.
    NonPositiveLength(f64),
    /// A set of three arc classes is not one of the 14 admissible triples.
    InvalidTriple,
    /// Two arc classes with positive weight cross, so they cannot carry a
    /// common measured foliation.
    CrossingSupport(ArcClass, ArcClass),
    /// A foliation weight or chart coordinate was negative.
    NegativeMeasure,
    /// The foliation is not in good position with respect to the requested
    /// arc triple.
    NotInGoodPosition,
    /// All three chart coordinates are zero.
    ZeroCoords,
    /// The operation needs a nonzero foliation.
    ZeroFoliation,
    /// The point does not lie in the requested compactification chart.
    NotInChart,
    /// No hexagon (or pentagon) realizes the requested lengths.
    Infeasible(&'static str),
    /// The limit iteration did not meet the Cauchy criterion at `n_max`.
    NotConverged { residual: f64, tol: f64 },
    /// The sequence specification falls outside both the symbolic case table
    /// and the numeric fallback's ability to classify it.
    UnsupportedSpec(&'static str),
    /// An internal cross-check failed; indicates a bug, not bad input.
    Inconsistent(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveLength(v) => write!(f, "length {v} is not a positive finite number"),
            Error::InvalidTriple => write!(f, "not an admissible arc triple"),
            Error::CrossingSupport(x, y) => {
                write!(f, "support classes {} and {} cross", x.name(), y.name())
            }
            Error::NegativeMeasure => write!(f, "weights and coordinates must be nonnegative"),
            Error::NotInGoodPosition => write!(f, "foliation is not in good position"),
            Error::ZeroCoords => write!(f, "all chart coordinates are zero"),
            Error::ZeroFoliation => write!(f, "the zero foliation has no projective class"),
            Error::NotInChart => write!(f, "point does not lie in the requested chart"),
            Error::Infeasible(what) => write!(f, "no solution: {what}"),
            Error::NotConverged { residual, tol } => {
                write!(f, "not converged: residual {residual:e} exceeds tolerance {tol:e}")
            }
            Error::UnsupportedSpec(what) => write!(f, "unsupported sequence spec: {what}"),
            Error::Inconsistent(what) => write!(f, "internal consistency failure: {what}"),
        }
    }
}

impl core::error::Error for Error {}
