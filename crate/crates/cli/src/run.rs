use polyarc::{
    additivity_check, arc_length_capped, arcsin_capped, pi_constant_capped, ratio_check,
    scheme_limit_capped, sector_area_capped, sin_capped, ArcError, CirclePoint, ConvergenceReport,
    Enclosure, SchemeFamily,
};

use crate::output::{Details, Output};
use crate::{Cli, Command, EXIT_DOMAIN, EXIT_NON_CONVERGENCE};

pub struct Outcome {
    pub output: Option<Output>,
    pub error: Option<String>,
    pub code: u8,
}

fn point(y: f64) -> Result<CirclePoint, ArcError> {
    CirclePoint::from_ordinate(y)
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Pi => "pi",
        Command::Arc(_) => "arc",
        Command::Arcsin { .. } => "arcsin",
        Command::Sin { .. } => "sin",
        Command::Sector(_) => "sector",
        Command::Ratio(_) => "ratio",
        Command::PartitionCompare(_) => "partition-compare",
        Command::Additivity { .. } => "additivity",
    }
}

fn enclosure_output(cli: &Cli, (enclosure, report): (Enclosure, ConvergenceReport)) -> Output {
    Output {
        command: command_name(&cli.command).to_string(),
        tolerance: cli.common.tol,
        value: Some(enclosure.midpoint()),
        enclosure: Some(enclosure),
        details: None,
        reports: vec![report],
    }
}

fn compute(cli: &Cli) -> Result<Output, ArcError> {
    let tol = cli.common.tol;
    let max_iter = cli.common.max_iter;
    let name = command_name(&cli.command).to_string();
    Ok(match &cli.command {
        Command::Pi => enclosure_output(cli, pi_constant_capped(tol, max_iter)?),
        Command::Arc(arc) => enclosure_output(
            cli,
            arc_length_capped(point(arc.a)?, point(arc.b)?, tol, max_iter)?,
        ),
        Command::Arcsin { y } => enclosure_output(cli, arcsin_capped(*y, tol, max_iter)?),
        Command::Sector(arc) => enclosure_output(
            cli,
            sector_area_capped(point(arc.a)?, point(arc.b)?, tol, max_iter)?,
        ),
        Command::Sin { x } => {
            let y = sin_capped(*x, tol, max_iter)?;
            let (arcsin, report) = arcsin_capped(y, tol, max_iter)?;
            Output {
                command: name,
                tolerance: tol,
                value: Some(y),
                enclosure: None,
                details: Some(Details::Sin { x: *x, arcsin }),
                reports: vec![report],
            }
        }
        Command::Ratio(arc) => {
            let check = ratio_check(point(arc.a)?, point(arc.b)?, tol, max_iter)?;
            Output {
                command: name,
                tolerance: tol,
                value: Some(check.ratio),
                enclosure: None,
                details: Some(Details::Ratio {
                    arc: check.arc,
                    sector: check.sector,
                }),
                reports: vec![check.arc_report, check.sector_report],
            }
        }
        Command::PartitionCompare(arc) => {
            let (a, b) = (point(arc.a)?, point(arc.b)?);
            let (enclosure, report) = arc_length_capped(a, b, tol, max_iter)?;
            let max_level = max_iter.min(polyarc::partition::MAX_SCHEME_LEVEL);
            let limits = if a == b {
                Vec::new()
            } else {
                [
                    SchemeFamily::Bisection,
                    SchemeFamily::OrdinateUniform,
                    SchemeFamily::Random {
                        seed: cli.common.seed,
                    },
                ]
                .into_iter()
                .map(|family| scheme_limit_capped(a, b, family, tol, max_level))
                .collect::<Result<Vec<_>, _>>()?
            };
            let values: Vec<f64> = limits.iter().map(|l| l.value).collect();
            let spread = |vs: &[f64]| {
                let max = vs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                let min = vs.iter().copied().fold(f64::INFINITY, f64::min);
                if vs.is_empty() {
                    0.0
                } else {
                    max - min
                }
            };
            Output {
                command: name,
                tolerance: tol,
                value: Some(enclosure.midpoint()),
                enclosure: Some(enclosure),
                details: Some(Details::PartitionCompare {
                    max_disagreement: spread(&values),
                    limits,
                }),
                reports: vec![report],
            }
        }
        Command::Additivity { a, m, b } => {
            let check = additivity_check(point(*a)?, point(*m)?, point(*b)?, tol)?;
            Output {
                command: name,
                tolerance: tol,
                value: Some(check.arc_defect()),
                enclosure: None,
                details: Some(Details::Additivity(check)),
                reports: Vec::new(),
            }
        }
    })
}

pub fn execute(cli: &Cli) -> Outcome {
    match compute(cli) {
        Ok(output) => Outcome {
            output: Some(output),
            error: None,
            code: 0,
        },
        Err(err) => {
            let code = if err.is_non_convergence() {
                EXIT_NON_CONVERGENCE
            } else {
                EXIT_DOMAIN
            };
            // a capped refinement still has a history worth printing
            let output = match &err {
                ArcError::NonConvergence {
                    last,
                    report: Some(report),
                    ..
                } => Some(Output {
                    command: command_name(&cli.command).to_string(),
                    tolerance: cli.common.tol,
                    value: None,
                    enclosure: Some(*last),
                    details: None,
                    reports: vec![(**report).clone()],
                }),
                _ => None,
            };
            Outcome {
                output,
                error: Some(err.to_string()),
                code,
            }
        }
    }
}
