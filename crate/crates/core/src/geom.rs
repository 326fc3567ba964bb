//! Points, chords and origin triangles on the closed unit quarter circle.
//!
//! A point is identified by its ordinate `y` alone; the abscissa is always
//! recomputed as `sqrt(1 - y^2)`, so every value of [`CirclePoint`] lies on
//! the circle. Near `y = 1` the abscissa has poor relative accuracy because
//! the circle is nearly horizontal there. Downstream code therefore works
//! with ordinate differences wherever it can (see [`chord_length`]).
//!
//! Arcs are oriented from the larger ordinate to the smaller one. Functions
//! that accept two endpoints normalise to that order.

use std::cmp::Ordering;

use crate::error::{ArcError, Result};

/// A point `(sqrt(1 - y^2), y)` on the first-quadrant unit circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CirclePoint {
    y: f64,
}

impl CirclePoint {
    /// `(0, 1)`, the top end of the quarter circle.
    pub const TOP: CirclePoint = CirclePoint { y: 1.0 };
    /// `(1, 0)`, the point the arcsine is measured from.
    pub const RIGHT: CirclePoint = CirclePoint { y: 0.0 };

    pub fn from_ordinate(y: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&y) {
            return Err(ArcError::OrdinateOutOfRange(y));
        }
        // normalise -0.0
        Ok(CirclePoint { y: y + 0.0 })
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn x(&self) -> f64 {
        ((1.0 - self.y) * (1.0 + self.y)).sqrt()
    }

    pub fn coords(&self) -> (f64, f64) {
        (self.x(), self.y)
    }
}

impl TryFrom<f64> for CirclePoint {
    type Error = ArcError;

    fn try_from(y: f64) -> Result<Self> {
        CirclePoint::from_ordinate(y)
    }
}

impl From<CirclePoint> for f64 {
    fn from(p: CirclePoint) -> f64 {
        p.y
    }
}

pub fn point_from_ordinate(y: f64) -> Result<CirclePoint> {
    CirclePoint::from_ordinate(y)
}

/// Euclidean distance between two points of the quarter circle.
///
/// The abscissa difference is taken as `(yq - yp)(yq + yp) / (xp + xq)`,
/// which follows from `x^2 + y^2 = 1` and avoids cancelling two nearly
/// equal square roots.
pub fn chord_length(p: CirclePoint, q: CirclePoint) -> f64 {
    let dy = p.y - q.y;
    if dy == 0.0 {
        return 0.0;
    }
    let dx = (q.y - p.y) * (q.y + p.y) / (p.x() + q.x());
    dx.hypot(dy)
}

/// Distance from the origin to the line through a chord of the given length.
pub fn height_for_chord(length: f64) -> f64 {
    let half = 0.5 * length;
    ((1.0 - half) * (1.0 + half)).sqrt()
}

pub fn height_at_origin(p: CirclePoint, q: CirclePoint) -> Result<f64> {
    if p == q {
        return Err(ArcError::DegenerateChord(p.y));
    }
    Ok(height_for_chord(chord_length(p, q)))
}

pub fn compare_by_ordinate(p: CirclePoint, q: CirclePoint) -> Ordering {
    p.y.total_cmp(&q.y)
}

/// Returns the pair as `(higher, lower)` by ordinate.
pub fn canonical(a: CirclePoint, b: CirclePoint) -> (CirclePoint, CirclePoint) {
    if a.y >= b.y {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Chord {
    pub hi: CirclePoint,
    pub lo: CirclePoint,
    pub length: f64,
}

impl Chord {
    pub fn new(a: CirclePoint, b: CirclePoint) -> Self {
        let (hi, lo) = canonical(a, b);
        Chord {
            hi,
            lo,
            length: chord_length(hi, lo),
        }
    }
}

/// The triangle with apex at the origin over a chord.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleAtOrigin {
    pub base: Chord,
    pub height: f64,
}

impl TriangleAtOrigin {
    pub fn new(a: CirclePoint, b: CirclePoint) -> Result<Self> {
        if a == b {
            return Err(ArcError::DegenerateChord(a.y));
        }
        let base = Chord::new(a, b);
        Ok(TriangleAtOrigin {
            base,
            height: height_for_chord(base.length),
        })
    }

    pub fn area(&self) -> f64 {
        0.5 * self.base.length * self.height
    }
}
