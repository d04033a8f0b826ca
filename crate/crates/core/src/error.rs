use core::fmt;

/// Errors raised while validating configurations and subset parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A scalar parameter is outside its admissible range.
    InvalidParameter {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    /// The array must have at least two elements.
    TooFewAntennas(usize),
    /// The subset size is outside `1..=n_t`.
    SubsetSize { m: usize, n_t: usize },
    /// `n_t - m` is odd, so the idle antennas cannot be split into two
    /// equal halves that cancel at the receiver.
    OddRemainder { m: usize, n_t: usize },
    /// An antenna index list is malformed.
    InvalidIndices(&'static str),
    /// A sweep or sample request is empty.
    Empty(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter {
                name,
                value,
                expected,
            } => write!(f, "invalid {name} = {value}: expected {expected}"),
            Error::TooFewAntennas(n) => write!(f, "array needs at least 2 antennas, got {n}"),
            Error::SubsetSize { m, n_t } => {
                write!(f, "subset size m = {m} must lie in 1..={n_t}")
            }
            Error::OddRemainder { m, n_t } => write!(
                f,
                "n_t - m = {} is odd (n_t = {n_t}, m = {m}); the idle antennas must split \
                 into two equal halves for their contributions to cancel at the receiver",
                n_t - m
            ),
            Error::InvalidIndices(why) => write!(f, "invalid antenna index set: {why}"),
            Error::Empty(what) => write!(f, "{what} must not be empty"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn check_positive(name: &'static str, value: f64) -> Result<f64, Error> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            expected: "a finite value > 0",
        })
    }
}
