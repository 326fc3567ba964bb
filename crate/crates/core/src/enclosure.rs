use std::fmt;

use serde::{Deserialize, Serialize};

/// A closed interval `[lo, hi]` known to contain some true value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Enclosure {
    pub lo: f64,
    pub hi: f64,
}

impl Enclosure {
    pub const ZERO: Enclosure = Enclosure { lo: 0.0, hi: 0.0 };

    /// Panics if `lo > hi` or either bound is NaN.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "enclosure bounds out of order: [{lo}, {hi}]");
        Enclosure { lo, hi }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        self.lo + 0.5 * (self.hi - self.lo)
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lo <= value && value <= self.hi
    }

    /// Interval scaled by a non-negative factor.
    pub fn scale(&self, factor: f64) -> Self {
        debug_assert!(factor >= 0.0);
        Enclosure::new(self.lo * factor, self.hi * factor)
    }

    pub fn is_subset_of(&self, other: &Enclosure) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}
