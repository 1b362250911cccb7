//! Crate-wide error type.

use std::fmt;

use crate::closure::HypothesisVerdict;
use crate::point::Axis;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Exponent arithmetic left the representable range.
    Overflow,
    /// A generator list does not describe an `<x,y>`-primary staircase.
    NotPrimary(String),
    /// A generator falls outside the integral closure of the corner ideal;
    /// the closure computation refuses to proceed.
    HypothesisViolated(HypothesisVerdict),
    /// Some power of the input fell outside the hypothesis while checking
    /// powers; `power` is the offending exponent.
    PowerHypothesisViolated { power: u64, verdict: HypothesisVerdict },
    /// The fold enumeration produced a tuple whose period shift would be
    /// negative. Cannot happen when the corner-membership hypothesis holds,
    /// so this signals a violated hypothesis to callers that skipped the gate.
    NegativeShift {
        /// Axis being folded (`Y` for the y-period fold, `X` for the mirror).
        axis: Axis,
        /// Fixed coordinate of the offending tuple.
        along: u64,
        /// How far below the required shift the coordinate total fell.
        shortfall: u64,
    },
    /// A constructor or operation was handed parameters outside its domain.
    InvalidParams(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow => write!(f, "exponent arithmetic overflowed"),
            Error::NotPrimary(msg) => write!(f, "not an <x,y>-primary staircase: {msg}"),
            Error::HypothesisViolated(v) => {
                write!(
                    f,
                    "{} generator(s) outside the integral closure of the corner ideal",
                    v.failures().len()
                )
            }
            Error::PowerHypothesisViolated { power, verdict } => write!(
                f,
                "power {power} has {} generator(s) outside its corner integral closure",
                verdict.failures().len()
            ),
            Error::NegativeShift { axis, along, shortfall } => write!(
                f,
                "negative period shift while folding along {axis:?} at coordinate {along} \
                 (short by {shortfall}); the corner-membership hypothesis is violated"
            ),
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
