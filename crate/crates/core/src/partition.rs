//! Partitions of an arc, refinement, and the limit of polygonal lengths.
//!
//! A partition is any finite set of circle points between the arc ends,
//! listed by strictly decreasing ordinate. Its norm is the longest chord
//! between neighbours. Refining a partition can only lengthen its polygonal,
//! and by no more than
//!
//! ```text
//! l_0 / h_0^2 * |P|^2 / (4 - |P|^2)
//! ```
//!
//! where `l_0`, `h_0` belong to the whole arc. So every family of partitions
//! whose norm shrinks to zero has the same limiting length, which is the one
//! the bisection scheme produces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arclength::{arc_length, bisection_points, upper_bound, MAX_POINT_LEVEL};
use crate::error::{ArcError, Result};
use crate::geom::{canonical, chord_length, CirclePoint};
use crate::sector::sector_area;

/// Ordinates closer than this are the same point when merging partitions.
pub const MERGE_TOLERANCE: f64 = 1e-14;

/// Minimum ordinate spacing kept in random partitions.
pub const RANDOM_MIN_GAP: f64 = 1e-12;

/// Largest ladder level tried by [`scheme_limit`] (2^24 segments).
pub const MAX_SCHEME_LEVEL: u32 = 24;

#[derive(Clone, Debug, PartialEq)]
pub struct Partition {
    points: Vec<CirclePoint>,
    norm: f64,
}

impl Partition {
    /// Points must run from the higher arc end to the lower one with
    /// strictly decreasing ordinates.
    pub fn new(points: Vec<CirclePoint>) -> Result<Self> {
        if points.len() < 2 {
            return Err(ArcError::domain(
                "point count",
                points.len() as f64,
                "at least two points",
            ));
        }
        let mut norm = 0.0_f64;
        for (i, w) in points.windows(2).enumerate() {
            if w[0].y() <= w[1].y() {
                return Err(ArcError::Unordered {
                    index: i + 1,
                    prev: w[0].y(),
                    next: w[1].y(),
                });
            }
            norm = norm.max(chord_length(w[0], w[1]));
        }
        Ok(Partition { points, norm })
    }

    pub fn points(&self) -> &[CirclePoint] {
        &self.points
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn start(&self) -> CirclePoint {
        self.points[0]
    }

    pub fn end(&self) -> CirclePoint {
        self.points[self.points.len() - 1]
    }

    pub fn segments(&self) -> usize {
        self.points.len() - 1
    }

    pub fn chords(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.windows(2).map(|w| chord_length(w[0], w[1]))
    }

    /// True when every point of `coarser` also appears here.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let mut it = self.points.iter().peekable();
        coarser.points.iter().all(|p| {
            while let Some(q) = it.peek() {
                if q.y() > p.y() + MERGE_TOLERANCE {
                    it.next();
                } else {
                    break;
                }
            }
            it.peek()
                .is_some_and(|q| (q.y() - p.y()).abs() <= MERGE_TOLERANCE)
        })
    }
}

/// Neumaier compensated sum.
fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut carry) = (0.0_f64, 0.0_f64);
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

pub fn polygonal_length(p: &Partition) -> f64 {
    compensated_sum(p.chords())
}

fn same_point(p: CirclePoint, q: CirclePoint) -> bool {
    (p.y() - q.y()).abs() <= MERGE_TOLERANCE
}

/// The partition containing the points of both.
pub fn refine_union(p: &Partition, q: &Partition) -> Result<Partition> {
    if !same_point(p.start(), q.start()) || !same_point(p.end(), q.end()) {
        return Err(ArcError::EndpointMismatch(
            p.start().y(),
            p.end().y(),
            q.start().y(),
            q.end().y(),
        ));
    }
    let (left, right) = (p.points(), q.points());
    let mut merged: Vec<CirclePoint> = Vec::with_capacity(left.len() + right.len());
    let (mut i, mut j) = (0, 0);
    while i < left.len() || j < right.len() {
        let next = match (left.get(i), right.get(j)) {
            (Some(&l), Some(&r)) if l.y() >= r.y() => {
                i += 1;
                l
            }
            (_, Some(&r)) => {
                j += 1;
                r
            }
            (Some(&l), None) => {
                i += 1;
                l
            }
            (None, None) => unreachable!(),
        };
        match merged.last() {
            Some(&last) if same_point(last, next) => {}
            _ => merged.push(next),
        }
    }
    Partition::new(merged)
}

/// `l_0 / h_0^2 * |P|^2 / (4 - |P|^2)`: how far any refinement of `p` can
/// lengthen its polygonal.
pub fn refinement_gap_bound(p: &Partition) -> Result<f64> {
    let cota = upper_bound(p.start(), p.end())?;
    let n2 = p.norm * p.norm;
    Ok(cota * n2 / (4.0 - n2))
}

/// The same bound taken chord by chord, `sum l_i * l_i^2 / (4 - l_i^2)`.
///
/// Never larger than [`refinement_gap_bound`], and much smaller when only a
/// few chords are long.
pub fn segment_gap_bound(p: &Partition) -> f64 {
    compensated_sum(p.chords().map(|l| {
        let l2 = l * l;
        l * l2 / (4.0 - l2)
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "scheme")]
pub enum PartitionScheme {
    /// The level-`levels` point list of the bisection scheme.
    Bisection { levels: u32 },
    /// `segments` equal steps in ordinate.
    OrdinateUniform { segments: u32 },
    /// `segments - 1` interior ordinates drawn uniformly, seeded.
    Random { segments: u32, seed: u64 },
}

pub fn make_partition(
    a: CirclePoint,
    b: CirclePoint,
    scheme: PartitionScheme,
) -> Result<Partition> {
    let (hi, lo) = canonical(a, b);
    if hi == lo {
        return Err(ArcError::DegenerateArc(hi.y()));
    }
    let points = match scheme {
        PartitionScheme::Bisection { levels } => bisection_points(hi, lo, levels)?,
        PartitionScheme::OrdinateUniform { segments } => {
            check_segments(segments)?;
            let (top, bottom) = (hi.y(), lo.y());
            let step = (top - bottom) / f64::from(segments);
            let mut points = Vec::with_capacity(segments as usize + 1);
            points.push(hi);
            points.extend(
                (1..segments)
                    .map(|i| CirclePoint::from_ordinate(top - f64::from(i) * step))
                    .collect::<Result<Vec<_>>>()?,
            );
            points.push(lo);
            points.dedup_by(|next, prev| next.y() >= prev.y());
            points
        }
        PartitionScheme::Random { segments, seed } => {
            check_segments(segments)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (top, bottom) = (hi.y(), lo.y());
            let mut ys: Vec<f64> = (1..segments)
                .map(|_| rng.random_range(bottom..=top))
                .collect();
            ys.sort_unstable_by(|p, q| q.total_cmp(p));
            let mut points = Vec::with_capacity(ys.len() + 2);
            points.push(hi);
            let mut last = top;
            for y in ys {
                if last - y >= RANDOM_MIN_GAP && y - bottom >= RANDOM_MIN_GAP {
                    points.push(CirclePoint::from_ordinate(y)?);
                    last = y;
                }
            }
            points.push(lo);
            points
        }
    };
    Partition::new(points)
}

fn check_segments(segments: u32) -> Result<()> {
    if segments == 0 || segments > 1 << MAX_POINT_LEVEL {
        Err(ArcError::domain(
            "segments",
            f64::from(segments),
            "between 1 and 2^26",
        ))
    } else {
        Ok(())
    }
}

/// A family of partitions indexed by a doubling size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum SchemeFamily {
    Bisection,
    OrdinateUniform,
    Random { seed: u64 },
}

impl SchemeFamily {
    /// Member `k` of the ladder: level `k` bisection, or `2^k` segments.
    pub fn member(&self, k: u32) -> PartitionScheme {
        match *self {
            SchemeFamily::Bisection => PartitionScheme::Bisection { levels: k },
            SchemeFamily::OrdinateUniform => PartitionScheme::OrdinateUniform { segments: 1 << k },
            SchemeFamily::Random { seed } => PartitionScheme::Random {
                segments: 1 << k,
                seed,
            },
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SchemeFamily::Bisection => "bisection",
            SchemeFamily::OrdinateUniform => "ordinate_uniform",
            SchemeFamily::Random { .. } => "random",
        }
    }
}

/// Where a partition ladder stopped.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchemeLimit {
    pub family: SchemeFamily,
    pub level: u32,
    pub segments: usize,
    pub norm: f64,
    /// Polygonal length at the stopping level.
    pub value: f64,
    /// Change from the previous level.
    pub step: f64,
    /// [`refinement_gap_bound`] at the stopping level.
    pub gap_bound: f64,
    /// [`segment_gap_bound`] at the stopping level.
    pub segment_bound: f64,
}

/// Walks the family's ladder until successive lengths differ by at most
/// `tol` and no refinement could add more than `tol`.
pub fn scheme_limit(
    a: CirclePoint,
    b: CirclePoint,
    family: SchemeFamily,
    tol: f64,
) -> Result<SchemeLimit> {
    scheme_limit_capped(a, b, family, tol, MAX_SCHEME_LEVEL)
}

pub fn scheme_limit_capped(
    a: CirclePoint,
    b: CirclePoint,
    family: SchemeFamily,
    tol: f64,
    max_level: u32,
) -> Result<SchemeLimit> {
    crate::arclength::check_tolerance(tol)?;
    if max_level > MAX_POINT_LEVEL {
        return Err(ArcError::Capacity(max_level));
    }
    let mut previous: Option<f64> = None;
    let mut last = None;
    for k in 0..=max_level {
        let p = make_partition(a, b, family.member(k))?;
        let value = polygonal_length(&p);
        let limit = SchemeLimit {
            family,
            level: k,
            segments: p.segments(),
            norm: p.norm(),
            value,
            step: previous.map_or(f64::INFINITY, |prev| (value - prev).abs()),
            gap_bound: refinement_gap_bound(&p)?,
            segment_bound: segment_gap_bound(&p),
        };
        if limit.step <= tol && limit.segment_bound <= tol {
            return Ok(limit);
        }
        previous = Some(value);
        last = Some(limit);
    }
    let last = last.expect("ladder has at least one level");
    Err(ArcError::NonConvergence {
        iterations: max_level,
        last: crate::enclosure::Enclosure::new(last.value, last.value + last.segment_bound),
        report: None,
    })
}

/// Whole-arc and split-arc quantities for a point `m` between `a` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Additivity {
    pub arc_whole: f64,
    pub arc_parts: f64,
    pub sector_whole: f64,
    pub sector_parts: f64,
}

impl Additivity {
    pub fn arc_defect(&self) -> f64 {
        (self.arc_whole - self.arc_parts).abs()
    }

    pub fn sector_defect(&self) -> f64 {
        (self.sector_whole - self.sector_parts).abs()
    }
}

pub fn additivity_check(
    a: CirclePoint,
    m: CirclePoint,
    b: CirclePoint,
    tol: f64,
) -> Result<Additivity> {
    let (hi, lo) = canonical(a, b);
    if !(hi.y() >= m.y() && m.y() >= lo.y()) {
        return Err(ArcError::Unordered {
            index: 1,
            prev: hi.y(),
            next: m.y(),
        });
    }
    let arc = |p, q| arc_length(p, q, tol).map(|(e, _)| e.midpoint());
    let sector = |p, q| sector_area(p, q, tol).map(|(e, _)| e.midpoint());
    Ok(Additivity {
        arc_whole: arc(hi, lo)?,
        arc_parts: arc(hi, m)? + arc(m, lo)?,
        sector_whole: sector(hi, lo)?,
        sector_parts: sector(hi, m)? + sector(m, lo)?,
    })
}
