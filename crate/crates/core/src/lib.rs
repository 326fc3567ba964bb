//! Trigonometry on the unit quarter circle built from polygons.
//!
//! Arc length is the limit of inscribed polygonal lengths under repeated
//! chord bisection, bracketed from above by circumscribed tangent fans.
//! From it follow the sector area, `arcsin` (arc length from `(1, 0)`),
//! `pi` (twice the quarter circle) and `sin` (the inverse of `arcsin`).
//! Every length and area comes back as an [`Enclosure`] that contains the
//! exact value.
//!
//! ```
//! use polyarc::{pi_constant, CirclePoint, arc_length};
//!
//! let pi = pi_constant(1e-10).unwrap();
//! assert!(pi.contains(std::f64::consts::PI));
//!
//! let (quarter, _) = arc_length(CirclePoint::TOP, CirclePoint::RIGHT, 1e-9).unwrap();
//! assert!(quarter.width() <= 1e-9);
//! ```

pub mod arclength;
pub mod enclosure;
pub mod error;
pub mod geom;
pub mod inverse;
pub mod partition;
pub mod report;
pub mod sector;

pub use arclength::{
    arc_length, arc_length_capped, bisection_points, bisection_step, circle_midpoint,
    length_sequence, record_at, upper_bound, Bisection, BisectionRecord, DEFAULT_MAX_ITER,
};
pub use enclosure::Enclosure;
pub use error::{ArcError, Result};
pub use geom::{
    chord_length, compare_by_ordinate, height_at_origin, height_for_chord, point_from_ordinate,
    Chord, CirclePoint, TriangleAtOrigin,
};
pub use inverse::{
    arcsin, arcsin_capped, continuity_modulus, pi_constant, pi_constant_capped, sin, sin_capped,
    tangent_intersection, TangentIntersection,
};
pub use partition::{
    additivity_check, make_partition, polygonal_length, refine_union, refinement_gap_bound,
    scheme_limit, scheme_limit_capped, segment_gap_bound, Additivity, Partition, PartitionScheme,
    SchemeFamily, SchemeLimit,
};
pub use report::{ConvergenceReport, Quantity, ReportRow, StopReason};
pub use sector::{
    criterion_iterations, gap_iterations, inner_polygon_area, outer_polygon_area, ratio_check,
    sandwich, sector_area, sector_area_capped, verify_ratio, RatioCheck, SectorSandwich,
};
