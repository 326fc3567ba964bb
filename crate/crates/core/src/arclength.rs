//! Arc length by repeated chord bisection.
//!
//! Starting from the chord `AB`, every level inserts the circle point
//! equidistant from the two ends of each chord, so level `m` is a polygonal
//! of `2^m` congruent chords of length `l_m` and total length
//! `L_m = 2^m l_m`. The sequence `L_m` is non-decreasing, bounded above by
//! `l_0 / h_0^2`, and its limit is the arc length.
//!
//! Each level also yields a certified bracket: the inscribed polygonal is
//! shorter than the arc, and twice the area of the circumscribed fan,
//! `L_m / h_m`, is longer. [`arc_length`] refines until that bracket is
//! narrower than the requested tolerance.

use serde::{Deserialize, Serialize};

use crate::enclosure::Enclosure;
use crate::error::{ArcError, Result};
use crate::geom::{canonical, chord_length, height_for_chord, CirclePoint};
use crate::report::{ConvergenceReport, Quantity, ReportRow, StopReason};

pub const DEFAULT_MAX_ITER: u32 = 40;

/// Deepest level [`bisection_points`] will materialise (2^26 + 1 points).
pub const MAX_POINT_LEVEL: u32 = 26;

/// State of the bisection scheme at level `m`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BisectionRecord {
    pub m: u32,
    /// Length of each of the `2^m` congruent chords.
    pub segment_length: f64,
    /// Distance from the origin to each chord.
    pub height: f64,
    /// `2^m * segment_length`.
    pub total_length: f64,
}

impl BisectionRecord {
    fn new(m: u32, segment_length: f64) -> Self {
        BisectionRecord {
            m,
            segment_length,
            height: height_for_chord(segment_length),
            total_length: segment_length * 2f64.powi(m as i32),
        }
    }

    /// `1 - h` without cancellation: `(l/2)^2 / (1 + h)`.
    pub fn sagitta(&self) -> f64 {
        let half = 0.5 * self.segment_length;
        half * half / (1.0 + self.height)
    }

    /// Area of the inscribed fan of `2^m` origin triangles.
    pub fn inner_area(&self) -> f64 {
        0.5 * self.total_length * self.height
    }

    /// Area of the circumscribed fan of tangent triangles.
    pub fn outer_area(&self) -> f64 {
        0.5 * self.total_length / self.height
    }

    /// `outer_area - inner_area`, as `L h (1/h^2 - 1) / 2` with `1 - h^2 = (l/2)^2`.
    pub fn area_gap(&self) -> f64 {
        let half = 0.5 * self.segment_length;
        0.5 * self.total_length * half * half / self.height
    }

    /// `L/h - L`, the width of the raw arc-length bracket.
    pub fn length_gap(&self) -> f64 {
        self.total_length * self.sagitta() / self.height
    }

    fn next(&self) -> Self {
        // The new chord is the hypotenuse over half the old chord and the
        // sagitta, since the inserted point lies on the old chord's bisector.
        let half = 0.5 * self.segment_length;
        BisectionRecord::new(self.m + 1, half.hypot(self.sagitta()))
    }

    /// Rounding in `l_m` grows by a few ulps per level; bounds are widened by this many.
    pub(crate) fn rounding_ulps(&self) -> u32 {
        4 * (self.m + 2)
    }

    pub(crate) fn widened(&self, lo: f64, hi: f64) -> Enclosure {
        let rel = f64::from(self.rounding_ulps()) * f64::EPSILON;
        Enclosure::new(lo * (1.0 - rel), hi * (1.0 + rel))
    }

    /// Certified bracket `[L_m, L_m / h_m]` of the arc length.
    pub fn length_enclosure(&self) -> Enclosure {
        self.widened(self.total_length, self.total_length + self.length_gap())
    }

    /// Certified bracket `[inner, outer]` of the sector area.
    pub fn area_enclosure(&self) -> Enclosure {
        let inner = self.inner_area();
        self.widened(inner, inner + self.area_gap())
    }
}

/// The circle point equidistant from `a` and `b`.
///
/// Computed as the chord midpoint pushed out to the circle. Its ordinate is
/// `(ya + yb) / (2h)` where `h` is the chord's distance from the origin.
pub fn circle_midpoint(a: CirclePoint, b: CirclePoint) -> Result<CirclePoint> {
    if a == b {
        return Err(ArcError::DegenerateArc(a.y()));
    }
    let h = height_for_chord(chord_length(a, b));
    let y = ((a.y() + b.y()) / (2.0 * h)).min(1.0);
    CirclePoint::from_ordinate(y)
}

fn check_strictly_decreasing(points: &[CirclePoint]) -> Result<()> {
    for (i, w) in points.windows(2).enumerate() {
        if w[0].y() <= w[1].y() {
            return Err(ArcError::Unordered {
                index: i + 1,
                prev: w[0].y(),
                next: w[1].y(),
            });
        }
    }
    Ok(())
}

/// Inserts the circle midpoint of every adjacent pair.
///
/// `points` must be ordered by strictly decreasing ordinate.
pub fn bisection_step(points: &[CirclePoint]) -> Result<Vec<CirclePoint>> {
    if points.len() < 2 {
        return Err(ArcError::domain(
            "point count",
            points.len() as f64,
            "at least two points",
        ));
    }
    check_strictly_decreasing(points)?;
    let mut out = Vec::with_capacity(2 * points.len() - 1);
    out.push(points[0]);
    for w in points.windows(2) {
        let mid = circle_midpoint(w[0], w[1])?;
        if !(w[0].y() > mid.y() && mid.y() > w[1].y()) {
            // adjacent floats: no representable point strictly between
            return Err(ArcError::Unordered {
                index: out.len(),
                prev: w[0].y(),
                next: mid.y(),
            });
        }
        out.push(mid);
        out.push(w[1]);
    }
    Ok(out)
}

/// The level-`m` point list `A = P_0 > P_1 > ... > P_{2^m} = B`.
pub fn bisection_points(a: CirclePoint, b: CirclePoint, m: u32) -> Result<Vec<CirclePoint>> {
    if m > MAX_POINT_LEVEL {
        return Err(ArcError::Capacity(m));
    }
    let (hi, lo) = canonical(a, b);
    if hi == lo {
        return Err(ArcError::DegenerateArc(hi.y()));
    }
    let mut points = vec![hi, lo];
    for _ in 0..m {
        points = bisection_step(&points)?;
    }
    Ok(points)
}

/// Iterator over the bisection records of an arc, starting at level 0.
#[derive(Clone, Debug)]
pub struct Bisection {
    next: Option<BisectionRecord>,
}

impl Bisection {
    pub fn new(a: CirclePoint, b: CirclePoint) -> Result<Self> {
        if a == b {
            return Err(ArcError::DegenerateArc(a.y()));
        }
        Ok(Bisection {
            next: Some(BisectionRecord::new(0, chord_length(a, b))),
        })
    }
}

impl Iterator for Bisection {
    type Item = BisectionRecord;

    fn next(&mut self) -> Option<BisectionRecord> {
        let current = self.next?;
        self.next = (current.m < u32::MAX).then(|| current.next());
        Some(current)
    }
}

/// Records for levels `0..=m_max`.
pub fn length_sequence(a: CirclePoint, b: CirclePoint, m_max: u32) -> Result<Vec<BisectionRecord>> {
    if m_max >= u64::BITS {
        return Err(ArcError::Capacity(m_max));
    }
    Ok(Bisection::new(a, b)?.take(m_max as usize + 1).collect())
}

/// The record at level `m` alone.
pub fn record_at(a: CirclePoint, b: CirclePoint, m: u32) -> Result<BisectionRecord> {
    length_sequence(a, b, m).map(|records| records[m as usize])
}

/// `l_0 / h_0^2`, an upper bound for every `L_m` of the arc.
pub fn upper_bound(a: CirclePoint, b: CirclePoint) -> Result<f64> {
    if a == b {
        return Err(ArcError::DegenerateArc(a.y()));
    }
    let l0 = chord_length(a, b);
    let half = 0.5 * l0;
    Ok(l0 / ((1.0 - half) * (1.0 + half)))
}

pub(crate) fn check_tolerance(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(ArcError::domain("tol", tol, "a positive finite number"))
    }
}

/// Runs the bisection until `bracket(record)` is at most `tol` wide.
pub(crate) fn refine(
    a: CirclePoint,
    b: CirclePoint,
    tol: f64,
    max_iter: u32,
    quantity: Quantity,
) -> Result<(Enclosure, ConvergenceReport)> {
    check_tolerance(tol)?;
    let (hi, lo) = canonical(a, b);
    let mut report = ConvergenceReport {
        quantity,
        a: hi.y(),
        b: lo.y(),
        tolerance: tol,
        max_iter,
        rows: Vec::new(),
        stop_reason: StopReason::ToleranceMet,
    };
    if hi == lo {
        return Ok((Enclosure::ZERO, report));
    }
    let bracket = match quantity {
        Quantity::ArcLength => BisectionRecord::length_enclosure,
        Quantity::SectorArea => BisectionRecord::area_enclosure,
    };
    for record in Bisection::new(hi, lo)?.take(max_iter as usize + 1) {
        let enclosure = bracket(&record);
        report.rows.push(ReportRow::new(&record, enclosure));
        if enclosure.width() <= tol {
            return Ok((enclosure, report));
        }
    }
    report.stop_reason = StopReason::IterationCap;
    Err(ArcError::NonConvergence {
        iterations: max_iter,
        last: report.last_enclosure().unwrap_or(Enclosure::ZERO),
        report: Some(Box::new(report)),
    })
}

/// Certified enclosure of the length of the arc between `a` and `b`.
pub fn arc_length(
    a: CirclePoint,
    b: CirclePoint,
    tol: f64,
) -> Result<(Enclosure, ConvergenceReport)> {
    arc_length_capped(a, b, tol, DEFAULT_MAX_ITER)
}

pub fn arc_length_capped(
    a: CirclePoint,
    b: CirclePoint,
    tol: f64,
    max_iter: u32,
) -> Result<(Enclosure, ConvergenceReport)> {
    refine(a, b, tol, max_iter, Quantity::ArcLength)
}
