use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in rings with different numbers of variables.
    RingMismatch { left: usize, right: usize },
    /// A ring must have between 1 and [`crate::MAX_VARS`] variables.
    BadVariableCount(usize),
    /// A generator exponent exceeds the configured cap.
    ExponentCap { exponent: u32, cap: u32 },
    /// The operation is undefined on its input (zero or unit ideal, empty index set, ...).
    Domain(&'static str),
    /// Too many irreducible components for an exact exponential search.
    TooManyComponents { components: usize, cap: usize },
    /// The characteristic poset is larger than the configured cap.
    PosetTooLarge { points: usize, cap: usize },
    /// The search budget (time or node count) ran out before an exact answer.
    BudgetExhausted,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch { left, right } => {
                write!(f, "ring mismatch: {left} variables vs {right} variables")
            }
            Error::BadVariableCount(n) => {
                write!(f, "unsupported number of variables: {n} (must be 1..={})", crate::MAX_VARS)
            }
            Error::ExponentCap { exponent, cap } => {
                write!(f, "exponent {exponent} exceeds the cap {cap}")
            }
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::TooManyComponents { components, cap } => {
                write!(f, "{components} irreducible components exceed the cap {cap}")
            }
            Error::PosetTooLarge { points, cap } => {
                write!(f, "characteristic poset has {points} points, cap is {cap}")
            }
            Error::BudgetExhausted => f.write_str("search budget exhausted"),
        }
    }
}

impl Error {
    /// True for errors caused by resource limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::TooManyComponents { .. } | Error::PosetTooLarge { .. } | Error::BudgetExhausted)
    }
}

impl core::error::Error for Error {}
