//! Sector area from inscribed and circumscribed triangle fans.
//!
//! At bisection level `m` the sector over an arc contains the fan of `2^m`
//! origin triangles over the level-`m` chords (area `L_m h_m / 2`) and is
//! contained in the fan of tangent triangles over the same chords (area
//! `L_m / (2 h_m)`). The tangent fan is never built point by point; each of
//! its triangles has base `l_m / h_m` on the tangent line and height 1.

use serde::{Deserialize, Serialize};

use crate::arclength::{
    arc_length_capped, check_tolerance, record_at, refine, Bisection, BisectionRecord,
    DEFAULT_MAX_ITER,
};
use crate::enclosure::Enclosure;
use crate::error::{ArcError, Result};
use crate::geom::{chord_length, height_for_chord, CirclePoint};
use crate::report::{ConvergenceReport, Quantity};

/// Inner and outer polygon areas at one bisection level.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectorSandwich {
    pub m: u32,
    pub inner_area: f64,
    pub outer_area: f64,
    pub gap: f64,
}

impl From<&BisectionRecord> for SectorSandwich {
    fn from(record: &BisectionRecord) -> Self {
        SectorSandwich {
            m: record.m,
            inner_area: record.inner_area(),
            outer_area: record.outer_area(),
            gap: record.area_gap(),
        }
    }
}

pub fn sandwich(a: CirclePoint, b: CirclePoint, m: u32) -> Result<SectorSandwich> {
    record_at(a, b, m).map(|r| SectorSandwich::from(&r))
}

pub fn inner_polygon_area(a: CirclePoint, b: CirclePoint, m: u32) -> Result<f64> {
    record_at(a, b, m).map(|r| r.inner_area())
}

pub fn outer_polygon_area(a: CirclePoint, b: CirclePoint, m: u32) -> Result<f64> {
    record_at(a, b, m).map(|r| r.outer_area())
}

/// Smallest level whose outer and inner fans differ in area by less than `epsilon`.
pub fn gap_iterations(a: CirclePoint, b: CirclePoint, epsilon: f64) -> Result<u32> {
    first_level(a, b, epsilon, |record| record.area_gap() < epsilon)
}

/// Smallest level at which `1 / (1 - (l_m/2)^2) < 1 + 2 eps h_0^2 / l_0`.
///
/// This is a sufficient condition for the gap to drop below `epsilon`, so the
/// level returned here is never below [`gap_iterations`].
pub fn criterion_iterations(a: CirclePoint, b: CirclePoint, epsilon: f64) -> Result<u32> {
    let l0 = chord_length(a, b);
    let h0 = height_for_chord(l0);
    let slack = 2.0 * epsilon * h0 * h0 / l0;
    first_level(a, b, epsilon, |record| {
        let half = 0.5 * record.segment_length;
        // 1 / h_m^2 - 1 = (l_m/2)^2 / h_m^2
        half * half / (record.height * record.height) < slack
    })
}

fn first_level(
    a: CirclePoint,
    b: CirclePoint,
    epsilon: f64,
    done: impl Fn(&BisectionRecord) -> bool,
) -> Result<u32> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(ArcError::domain("epsilon", epsilon, "a positive number"));
    }
    let mut last = None;
    for record in Bisection::new(a, b)?.take(DEFAULT_MAX_ITER as usize + 1) {
        if done(&record) {
            return Ok(record.m);
        }
        last = Some(record);
    }
    Err(ArcError::NonConvergence {
        iterations: DEFAULT_MAX_ITER,
        last: last.map_or(Enclosure::ZERO, |r| r.area_enclosure()),
        report: None,
    })
}

/// Certified enclosure of the area of the sector between `a` and `b`.
pub fn sector_area(
    a: CirclePoint,
    b: CirclePoint,
    tol: f64,
) -> Result<(Enclosure, ConvergenceReport)> {
    sector_area_capped(a, b, tol, DEFAULT_MAX_ITER)
}

pub fn sector_area_capped(
    a: CirclePoint,
    b: CirclePoint,
    tol: f64,
    max_iter: u32,
) -> Result<(Enclosure, ConvergenceReport)> {
    refine(a, b, tol, max_iter, Quantity::SectorArea)
}

/// Arc length and sector area of one arc, and their ratio.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioCheck {
    pub ratio: f64,
    pub arc: Enclosure,
    pub sector: Enclosure,
    pub arc_report: ConvergenceReport,
    pub sector_report: ConvergenceReport,
}

/// Arc length over sector area, from the midpoints of the two enclosures.
///
/// `tol` bounds the relative width of each enclosure, so the ratio lands
/// within a few `tol` of its exact value even for short arcs.
pub fn verify_ratio(a: CirclePoint, b: CirclePoint, tol: f64) -> Result<f64> {
    ratio_check(a, b, tol, DEFAULT_MAX_ITER).map(|check| check.ratio)
}

pub fn ratio_check(a: CirclePoint, b: CirclePoint, tol: f64, max_iter: u32) -> Result<RatioCheck> {
    check_tolerance(tol)?;
    if a == b {
        return Err(ArcError::DegenerateArc(a.y()));
    }
    // the arc is never shorter than its chord, the sector never smaller than half of it
    let abs_tol = tol * chord_length(a, b);
    let (arc, arc_report) = arc_length_capped(a, b, abs_tol, max_iter)?;
    let (sector, sector_report) = sector_area_capped(a, b, abs_tol / 2.0, max_iter)?;
    Ok(RatioCheck {
        ratio: arc.midpoint() / sector.midpoint(),
        arc,
        sector,
        arc_report,
        sector_report,
    })
}
