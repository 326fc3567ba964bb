//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p polyarc-cli --test acceptance`.

#![allow(clippy::approx_constant)]

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::{arc_exact, ivt_midpoint_ordinate, random_arc, random_ordered, rng, EPS};
use polyarc::*;
use rand::Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn pt(y: f64) -> CirclePoint {
    CirclePoint::from_ordinate(y).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: ArcError) -> String {
    e.to_string()
}

/// Chord between two ordinates from plain coordinates.
fn oracle_chord(ya: f64, yb: f64) -> f64 {
    let x = |y: f64| (1.0 - y * y).max(0.0).sqrt();
    (x(ya) - x(yb)).hypot(ya - yb)
}

fn pi_reproduction() -> Verdict {
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_polyarc"))
        .args(["pi", "--tol", "1e-10"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    ensure(out.status.success(), || {
        format!("exit status {}", out.status)
    })?;
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let lo = json["enclosure"]["lo"]
        .as_f64()
        .ok_or("missing enclosure.lo")?;
    let hi = json["enclosure"]["hi"]
        .as_f64()
        .ok_or("missing enclosure.hi")?;
    let target = 3.141_592_653_589_79;
    ensure(lo <= target && target <= hi && lo <= PI && PI <= hi, || {
        format!("[{lo}, {hi}] misses pi")
    })?;
    ensure(hi - lo <= 2e-10, || format!("width {:e}", hi - lo))?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "[{lo}, {hi}], width {:.2e}, {elapsed:.2?}",
        hi - lo
    ))
}

fn ratio_is_two() -> Verdict {
    let mut r = rng(2);
    let started = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let (hi, lo) = random_arc(&mut r);
        let check = ratio_check(pt(hi), pt(lo), 1e-9, DEFAULT_MAX_ITER).map_err(err)?;
        let ratio = check.arc.midpoint() / check.sector.midpoint();
        worst = worst.max((ratio - 2.0).abs());
        ensure((ratio - 2.0).abs() <= 1e-7, || {
            format!("ratio {ratio} on ({hi}, {lo})")
        })?;
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(5), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("max |ratio - 2| = {worst:.2e}, {elapsed:.2?}"))
}

fn lengths_monotone_and_bounded() -> Verdict {
    let mut r = rng(3);
    for _ in 0..50 {
        let (hi, lo) = random_arc(&mut r);
        let seq = length_sequence(pt(hi), pt(lo), 20).map_err(err)?;
        let chord = oracle_chord(hi, lo);
        let bound = chord / (1.0 - chord * chord / 4.0);
        for w in seq.windows(2) {
            ensure(w[1].total_length >= w[0].total_length, || {
                format!("L decreases at m={} on ({hi}, {lo})", w[1].m)
            })?;
        }
        for rec in &seq {
            ensure(rec.total_length <= bound + 8.0 * EPS, || {
                format!(
                    "L_{} = {} above {bound} on ({hi}, {lo})",
                    rec.m, rec.total_length
                )
            })?;
        }
    }
    Ok("50 arcs, m <= 20".into())
}

fn chords_contract() -> Verdict {
    let mut r = rng(3);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let (hi, lo) = random_arc(&mut r);
        let seq = length_sequence(pt(hi), pt(lo), 21).map_err(err)?;
        for w in seq.windows(2) {
            let limit = w[0].segment_length / 2f64.sqrt();
            worst = worst.max(w[1].segment_length / w[0].segment_length);
            ensure(w[1].segment_length <= limit + 8.0 * EPS, || {
                format!(
                    "chord {} > {limit} at m={} on ({hi}, {lo})",
                    w[1].segment_length, w[0].m
                )
            })?;
        }
    }
    Ok(format!("max ratio {worst:.6}"))
}

fn inner_chords_shorter() -> Verdict {
    let mut r = rng(5);
    for _ in 0..1000 {
        let ys = random_ordered(&mut r, 4);
        let outer = chord_length(pt(ys[0]), pt(ys[3]));
        let inner = chord_length(pt(ys[1]), pt(ys[2]));
        ensure(inner <= outer + 4.0 * EPS, || {
            format!("{ys:?}: {inner} > {outer}")
        })?;
    }
    Ok("1000 quadruples".into())
}

fn gap_first_levels() -> Verdict {
    let (a, b) = (CirclePoint::TOP, CirclePoint::RIGHT);
    let level = gap_iterations(a, b, 0.3).map_err(err)?;
    ensure(level == 1, || format!("gap_iterations = {level}"))?;
    let g0 = sandwich(a, b, 0).map_err(err)?.gap;
    let g1 = sandwich(a, b, 1).map_err(err)?.gap;
    // outer tangent polygon minus inscribed fan, from host trigonometry
    let o0 = FRAC_PI_4.tan() - 0.5 * FRAC_PI_2.sin();
    let o1 = 2.0 * FRAC_PI_8.tan() - FRAC_PI_4.sin();
    ensure((g0 - 0.5).abs() <= 1e-9 && (g0 - o0).abs() <= 1e-9, || {
        format!("gap_0 = {g0}")
    })?;
    // 0.12132034 is 3 sqrt(2)/2 - 2 rounded to eight places
    let exact1 = 1.5 * 2f64.sqrt() - 2.0;
    ensure(
        (g1 - exact1).abs() <= 1e-9 && (g1 - o1).abs() <= 1e-9,
        || format!("gap_1 = {g1}, expected {exact1}"),
    )?;
    ensure((g1 - 0.121_320_34).abs() < 5e-9, || format!("gap_1 = {g1}"))?;
    Ok(format!("level 1, gaps {g0:.10} and {g1:.10}"))
}

fn random_partition(r: &mut impl Rng, hi: f64, lo: f64, n: usize) -> Result<Partition> {
    let mut inner: Vec<f64> = (0..n).map(|_| r.random_range(lo..hi)).collect();
    inner.sort_by(|p, q| q.total_cmp(p));
    inner.dedup();
    let mut ys = vec![hi];
    ys.extend(inner.into_iter().filter(|&y| y < hi && y > lo));
    ys.push(lo);
    Partition::new(ys.into_iter().map(pt).collect())
}

fn refinement_bound() -> Verdict {
    let mut r = rng(7);
    for _ in 0..100 {
        let (hi, lo) = random_arc(&mut r);
        let n = r.random_range(0..16);
        let p = random_partition(&mut r, hi, lo, n).map_err(err)?;
        let extra = random_partition(&mut r, hi, lo, n + 1).map_err(err)?;
        let q = refine_union(&p, &extra).map_err(err)?;
        ensure(q.refines(&p), || "union does not refine".into())?;

        // bound computed here from the chord and the norm alone
        let chord = oracle_chord(hi, lo);
        let bound = |part: &Partition| {
            let n = part.norm();
            chord / (1.0 - chord * chord / 4.0) * n * n / (4.0 - n * n)
        };
        let (lp, lq) = (polygonal_length(&p), polygonal_length(&q));
        ensure((lq - lp).abs() <= bound(&p) + 8.0 * EPS, || {
            format!(
                "|L(Q) - L(P)| = {:e} above {:e}",
                (lq - lp).abs(),
                bound(&p)
            )
        })?;

        let k = r.random_range(0..16);
        let other = random_partition(&mut r, hi, lo, k).map_err(err)?;
        let lo_ = polygonal_length(&other);
        ensure(
            (lp - lo_).abs() <= bound(&p) + bound(&other) + 8.0 * EPS,
            || format!("triangle bound fails on ({hi}, {lo})"),
        )?;
    }
    Ok("100 pairs plus triangle bound".into())
}

fn schemes_agree() -> Verdict {
    let mut r = rng(8);
    let mut worst = 0.0f64;
    let started = Instant::now();
    for i in 0..20 {
        let (hi, lo) = random_arc(&mut r);
        let values: Vec<f64> = [
            SchemeFamily::Bisection,
            SchemeFamily::OrdinateUniform,
            SchemeFamily::Random { seed: 100 + i },
        ]
        .into_iter()
        .map(|f| scheme_limit(pt(hi), pt(lo), f, 1e-9).map(|l| l.value))
        .collect::<Result<_>>()
        .map_err(err)?;
        for (j, u) in values.iter().enumerate() {
            for v in &values[j + 1..] {
                worst = worst.max((u - v).abs());
                ensure((u - v).abs() <= 1e-7, || {
                    format!("{values:?} on ({hi}, {lo})")
                })?;
            }
            ensure((u - arc_exact(hi, lo)).abs() <= 1e-7, || {
                format!("{u} vs exact {} on ({hi}, {lo})", arc_exact(hi, lo))
            })?;
        }
    }
    Ok(format!(
        "max pairwise {worst:.2e}, {:.2?}",
        started.elapsed()
    ))
}

fn additivity() -> Verdict {
    let mut r = rng(9);
    let mut worst = (0.0f64, 0.0f64);
    for _ in 0..50 {
        let ys = random_ordered(&mut r, 3);
        let check = additivity_check(pt(ys[0]), pt(ys[1]), pt(ys[2]), 1e-9).map_err(err)?;
        worst = (
            worst.0.max(check.arc_defect()),
            worst.1.max(check.sector_defect()),
        );
        ensure(check.arc_defect() <= 1e-8, || {
            format!("arc defect on {ys:?}")
        })?;
        ensure(check.sector_defect() <= 5e-9, || {
            format!("sector defect on {ys:?}")
        })?;
    }
    Ok(format!(
        "max defects {:.2e} (arc), {:.2e} (sector)",
        worst.0, worst.1
    ))
}

fn round_trips() -> Verdict {
    let tol = 1e-10;
    let mut r = rng(10);
    let asin_mid = |y: f64| arcsin(y, tol).map(|(e, _)| e.midpoint()).map_err(err);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let y: f64 = r.random();
        let back = sin(asin_mid(y)?, tol).map_err(err)?;
        worst = worst.max((back - y).abs());
        ensure((back - y).abs() <= 1e-9, || {
            format!("sin(arcsin({y})) = {back}")
        })?;
    }
    for _ in 0..50 {
        let x = r.random_range(0.0..FRAC_PI_2);
        let back = asin_mid(sin(x, tol).map_err(err)?)?;
        worst = worst.max((back - x).abs());
        ensure((back - x).abs() <= 1e-9, || {
            format!("arcsin(sin({x})) = {back}")
        })?;
    }
    let ladder: Vec<f64> = (0..100)
        .map(|i| asin_mid(i as f64 / 99.0))
        .collect::<Result<_, _>>()?;
    ensure(ladder.windows(2).all(|w| w[1] > w[0]), || {
        "ladder not increasing".into()
    })?;
    Ok(format!("max error {worst:.2e}"))
}

fn continuity_modulus_bound() -> Verdict {
    let mut r = rng(11);
    let g = |y: f64| {
        arcsin(y, 1e-11)
            .map(|(e, _)| e.midpoint() / 2.0)
            .map_err(err)
    };
    for _ in 0..100 {
        let (y0, y): (f64, f64) = (r.random(), r.random());
        let t = tangent_intersection(y0, y).map_err(err)?;
        let modulus = 0.5 * t.u.hypot(t.v);
        let change = (g(y)? - g(y0)?).abs();
        ensure(change <= modulus + 1e-9, || {
            format!("({y0}, {y}): {change} > {modulus}")
        })?;
    }
    let mut last = Vec::new();
    for y0 in [0.25, 0.5] {
        let moduli: Vec<f64> = (1..=20)
            .map(|k| continuity_modulus(y0, y0 + 2f64.powi(-k)))
            .collect::<Result<_>>()
            .map_err(err)?;
        ensure(moduli.windows(2).all(|w| w[1] < w[0]), || {
            format!("not decreasing at {y0}")
        })?;
        let end = *moduli.last().unwrap();
        ensure(end < 1e-6, || format!("modulus {end:e} at k=20, y0={y0}"))?;
        last.push(end);
    }
    Ok(format!("k=20 moduli {:.2e}, {:.2e}", last[0], last[1]))
}

fn midpoint_oracle() -> Verdict {
    let mut r = rng(12);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let (hi, lo) = random_arc(&mut r);
        let m = circle_midpoint(pt(hi), pt(lo)).map_err(err)?.y();
        let root = ivt_midpoint_ordinate(hi, lo);
        worst = worst.max((m - root).abs());
        ensure((m - root).abs() <= 1e-12, || {
            format!("({hi}, {lo}): {m} vs {root}")
        })?;
    }
    Ok(format!("max difference {worst:.2e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("pi reproduction", pi_reproduction),
        ("arc over sector ratio", ratio_is_two),
        (
            "bisection lengths monotone and bounded",
            lengths_monotone_and_bounded,
        ),
        ("chord contraction", chords_contract),
        ("inner chord no longer than outer", inner_chords_shorter),
        ("sector gap levels", gap_first_levels),
        ("refinement gap bound", refinement_bound),
        ("scheme independence", schemes_agree),
        ("additivity", additivity),
        ("arcsin and sin round trips", round_trips),
        ("continuity modulus", continuity_modulus_bound),
        ("midpoint against root finder", midpoint_oracle),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(reason) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {reason}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
