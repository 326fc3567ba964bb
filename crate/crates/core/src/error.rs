use thiserror::Error;

use crate::enclosure::Enclosure;
use crate::report::ConvergenceReport;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ArcError {
    #[error("ordinate {0} is outside the quarter circle range [0, 1]")]
    OrdinateOutOfRange(f64),

    #[error("{name} = {value} is outside its domain: {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("chord endpoints coincide at ordinate {0}")]
    DegenerateChord(f64),

    #[error("arc endpoints coincide at ordinate {0}")]
    DegenerateArc(f64),

    #[error("points must have strictly decreasing ordinates (index {index}: {prev} then {next})")]
    Unordered { index: usize, prev: f64, next: f64 },

    #[error("partition endpoints differ: ({0}, {1}) vs ({2}, {3})")]
    EndpointMismatch(f64, f64, f64, f64),

    #[error("2^{0} segments exceed the supported index range")]
    Capacity(u32),

    #[error("no convergence after {iterations} iterations; last enclosure {last}")]
    NonConvergence {
        iterations: u32,
        last: Enclosure,
        /// History up to the cap, when the failing computation keeps one.
        report: Option<Box<ConvergenceReport>>,
    },
}

impl ArcError {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        ArcError::Domain {
            name,
            value,
            expected,
        }
    }

    /// True for failures of the iteration rather than of the input.
    pub fn is_non_convergence(&self) -> bool {
        matches!(self, ArcError::NonConvergence { .. })
    }
}

pub type Result<T, E = ArcError> = std::result::Result<T, E>;
