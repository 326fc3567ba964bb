use serde::{Deserialize, Serialize};

use crate::arclength::BisectionRecord;
use crate::enclosure::Enclosure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    ArcLength,
    SectorArea,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    ToleranceMet,
    IterationCap,
}

/// One bisection level. Field order is the CSV column order.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub m: u32,
    pub segment_length: f64,
    pub height: f64,
    pub total_length: f64,
    pub inner_area: f64,
    pub outer_area: f64,
    pub enclosure_lo: f64,
    pub enclosure_hi: f64,
}

impl ReportRow {
    pub const COLUMNS: [&'static str; 8] = [
        "m",
        "segment_length",
        "height",
        "total_length",
        "inner_area",
        "outer_area",
        "enclosure_lo",
        "enclosure_hi",
    ];

    pub(crate) fn new(record: &BisectionRecord, enclosure: Enclosure) -> Self {
        ReportRow {
            m: record.m,
            segment_length: record.segment_length,
            height: record.height,
            total_length: record.total_length,
            inner_area: record.inner_area(),
            outer_area: record.outer_area(),
            enclosure_lo: enclosure.lo,
            enclosure_hi: enclosure.hi,
        }
    }

    pub fn enclosure(&self) -> Enclosure {
        Enclosure::new(self.enclosure_lo, self.enclosure_hi)
    }
}

/// Iteration history of one arc-length or sector-area refinement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub quantity: Quantity,
    /// Ordinate of the higher arc endpoint.
    pub a: f64,
    /// Ordinate of the lower arc endpoint.
    pub b: f64,
    pub tolerance: f64,
    pub max_iter: u32,
    pub rows: Vec<ReportRow>,
    pub stop_reason: StopReason,
}

impl ConvergenceReport {
    pub fn last_enclosure(&self) -> Option<Enclosure> {
        self.rows.last().map(ReportRow::enclosure)
    }

    /// Checks the row ordering and monotonicity every report should satisfy.
    pub fn is_consistent(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.m as usize == i)
            && self.rows.windows(2).all(|w| {
                w[1].total_length >= w[0].total_length
                    && w[1].enclosure_hi - w[1].enclosure_lo
                        <= w[0].enclosure_hi - w[0].enclosure_lo
            })
    }
}
