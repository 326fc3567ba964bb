use std::io::{self, Write};

use polyarc::{Additivity, ConvergenceReport, Enclosure, SchemeLimit};
use serde::{Deserialize, Serialize};

use crate::Format;

/// Everything one invocation prints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Output {
    pub command: String,
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enclosure: Option<Enclosure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Details>,
    pub reports: Vec<ConvergenceReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Details {
    Sin {
        x: f64,
        arcsin: Enclosure,
    },
    Ratio {
        arc: Enclosure,
        sector: Enclosure,
    },
    PartitionCompare {
        limits: Vec<SchemeLimit>,
        max_disagreement: f64,
    },
    Additivity(Additivity),
}

const SCHEME_COLUMNS: [&str; 8] = [
    "family",
    "level",
    "segments",
    "norm",
    "value",
    "step",
    "gap_bound",
    "segment_bound",
];

#[derive(Serialize)]
struct SchemeRow<'a> {
    family: &'a str,
    level: u32,
    segments: usize,
    norm: f64,
    value: f64,
    step: f64,
    gap_bound: f64,
    segment_bound: f64,
}

pub fn write(out: &mut impl Write, output: &Output, format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, output)?;
            writeln!(out)
        }
        Format::Csv => write_csv(out, output),
    }
}

/// Partition comparisons print one row per scheme family; everything else
/// prints the rows of its first convergence report.
fn write_csv(out: &mut impl Write, output: &Output) -> io::Result<()> {
    let mut csv = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    if let Some(Details::PartitionCompare { limits, .. }) = &output.details {
        csv.write_record(SCHEME_COLUMNS)?;
        for limit in limits {
            csv.serialize(SchemeRow {
                family: limit.family.name(),
                level: limit.level,
                segments: limit.segments,
                norm: limit.norm,
                value: limit.value,
                step: limit.step,
                gap_bound: limit.gap_bound,
                segment_bound: limit.segment_bound,
            })?;
        }
    } else {
        csv.write_record(polyarc::ReportRow::COLUMNS)?;
        for row in output.reports.first().map_or(&[][..], |r| &r.rows) {
            csv.serialize(row)?;
        }
    }
    csv.flush()
}
