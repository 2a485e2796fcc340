use core::fmt;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter lies outside the region where the operation is defined.
    /// The message names the violated condition, e.g. `requires eta <= 0`.
    GateViolation(&'static str),
    /// A recurrence denominator vanished.
    DegenerateOrder(&'static str),
    /// The series did not meet its truncation test within `terms` terms.
    NonConvergence { terms: usize },
    /// The normalization constant under- or overflowed.
    GammaOverflow,
    NoRootInScanRange { ceiling: f64 },
    /// Root refinement lost its sign-change bracket.
    NonMonotoneBracket,
    /// An Euler-Rayleigh quotient used a nonpositive Rayleigh sum.
    BoundsInvalid { s: u32 },
    /// The function vanished (to working precision) on a scanned circle.
    PoleOnCircle { angle: f64 },
    /// Zero spacings suggest that a zero was skipped.
    ZeroEnumerationIncomplete { index: usize },
    /// Errors too small to take logarithms of.
    DegenerateFit,
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    /// True for errors caused by inputs rather than by numerics.
    pub fn is_gate_violation(&self) -> bool {
        matches!(self, Error::GateViolation(_) | Error::DegenerateOrder(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GateViolation(what) => write!(f, "parameter gate violated: {}", what),
            Error::DegenerateOrder(what) => write!(f, "degenerate order: {}", what),
            Error::NonConvergence { terms } => {
                write!(f, "series did not converge within {} terms", terms)
            }
            Error::GammaOverflow => f.write_str("normalization constant overflows"),
            Error::NoRootInScanRange { ceiling } => {
                write!(f, "no sign change found below {}", ceiling)
            }
            Error::NonMonotoneBracket => f.write_str("root refinement escaped its bracket"),
            Error::BoundsInvalid { s } => {
                write!(f, "Rayleigh sums of order {} or {} are not positive", 2 * s, 2 * s + 2)
            }
            Error::PoleOnCircle { angle } => {
                write!(f, "function vanishes on the scanned circle at angle {}", angle)
            }
            Error::ZeroEnumerationIncomplete { index } => {
                write!(f, "irregular zero spacing near zero #{}, a zero may be missing", index)
            }
            Error::DegenerateFit => f.write_str("errors underflow, cannot fit an order"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
