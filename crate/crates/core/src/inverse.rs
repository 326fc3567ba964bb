//! Arcsine as an arc length, pi, and sine by inverting the arcsine.
//!
//! `arcsin(y)` is the length of the arc from `(sqrt(1 - y^2), y)` down to
//! `(1, 0)`. It is continuous and strictly increasing on `[0, 1]`, which is
//! all [`sin`] needs: it bisects on the ordinate.

use serde::{Deserialize, Serialize};

use crate::arclength::{arc_length_capped, check_tolerance, DEFAULT_MAX_ITER};
use crate::enclosure::Enclosure;
use crate::error::{ArcError, Result};
use crate::geom::CirclePoint;
use crate::report::ConvergenceReport;

/// Enough halvings to exhaust every binary64 value in `[0, 1]`.
const MAX_SIN_STEPS: u32 = 2_000;

pub fn arcsin(y: f64, tol: f64) -> Result<(Enclosure, ConvergenceReport)> {
    arcsin_capped(y, tol, DEFAULT_MAX_ITER)
}

pub fn arcsin_capped(y: f64, tol: f64, max_iter: u32) -> Result<(Enclosure, ConvergenceReport)> {
    let point = CirclePoint::from_ordinate(y)?;
    arc_length_capped(point, CirclePoint::RIGHT, tol, max_iter)
}

/// Pi as twice the quarter-circle length, i.e. the half-circle length.
pub fn pi_constant(tol: f64) -> Result<Enclosure> {
    pi_constant_capped(tol, DEFAULT_MAX_ITER).map(|(e, _)| e)
}

/// [`pi_constant`] together with the quarter-circle report behind it.
pub fn pi_constant_capped(tol: f64, max_iter: u32) -> Result<(Enclosure, ConvergenceReport)> {
    let (quarter, report) = arcsin_capped(1.0, tol, max_iter)?;
    Ok((quarter.scale(2.0), report))
}

/// The ordinate `y` with `arcsin(y) = x`, for `x` in `[0, pi/2]`.
pub fn sin(x: f64, tol: f64) -> Result<f64> {
    sin_capped(x, tol, DEFAULT_MAX_ITER)
}

pub fn sin_capped(x: f64, tol: f64, max_iter: u32) -> Result<f64> {
    check_tolerance(tol)?;
    let half_pi_hi = pi_constant_capped(tol, max_iter)?.0.hi / 2.0;
    if !(0.0..=half_pi_hi).contains(&x) {
        return Err(ArcError::domain("x", x, "[0, pi/2]"));
    }
    // Midpoints of enclosures this narrow sit within tol/8 of the true arcsine,
    // so a residual of tol/2 keeps |arcsin(y) - x| below tol.
    let inner_tol = tol / 4.0;
    let accept = tol / 2.0;
    let residual =
        |y: f64| -> Result<f64> { Ok(arcsin_capped(y, inner_tol, max_iter)?.0.midpoint() - x) };

    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    let (mut r_lo, mut r_hi) = (residual(lo)?, residual(hi)?);
    for _ in 0..MAX_SIN_STEPS {
        if r_lo.abs() <= accept {
            return Ok(lo);
        }
        if r_hi.abs() <= accept {
            return Ok(hi);
        }
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            // No float lies strictly between lo and hi: return the better end.
            return Ok(if r_lo.abs() <= r_hi.abs() { lo } else { hi });
        }
        let r_mid = residual(mid)?;
        if r_mid < 0.0 {
            (lo, r_lo) = (mid, r_mid);
        } else {
            (hi, r_hi) = (mid, r_mid);
        }
    }
    Err(ArcError::NonConvergence {
        iterations: MAX_SIN_STEPS,
        last: Enclosure::new(lo, hi),
        report: None,
    })
}

/// The vector `(u, v)` from `Y0` to the point `Z` where the tangent at `Y0`
/// meets the ray from the origin through `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentIntersection {
    pub u: f64,
    pub v: f64,
}

impl TangentIntersection {
    /// `|Y0 Z|`.
    pub fn length(&self) -> f64 {
        self.u.hypot(self.v)
    }
}

pub fn tangent_intersection(y0: f64, y: f64) -> Result<TangentIntersection> {
    let (x0, y0) = CirclePoint::from_ordinate(y0)?.coords();
    let (x, y) = CirclePoint::from_ordinate(y)?.coords();
    let dot = x * x0 + y * y0;
    if dot <= 0.0 {
        // Y is a quarter turn from Y0: the ray runs parallel to the tangent.
        return Err(ArcError::domain(
            "x*x0 + y*y0",
            dot,
            "points less than a quarter turn apart",
        ));
    }
    let cross = x * y0 - x0 * y;
    Ok(TangentIntersection {
        u: y0 / dot * cross,
        v: -x0 / dot * cross,
    })
}

/// Area of the triangle `Z O Y0`, which contains the sector between `Y0` and `Y`.
pub fn continuity_modulus(y0: f64, y: f64) -> Result<f64> {
    tangent_intersection(y0, y).map(|t| 0.5 * t.length())
}
