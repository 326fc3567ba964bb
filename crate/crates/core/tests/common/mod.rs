//! Independent reference computations for the integration tests.
//!
//! Nothing here calls into the crate's arithmetic: coordinates are formed
//! directly from `sqrt(1 - y^2)` and lengths with `hypot`, and the host
//! library's `asin` stands in for exact arc lengths.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EPS: f64 = f64::EPSILON;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coords(y: f64) -> (f64, f64) {
    ((1.0 - y * y).max(0.0).sqrt(), y)
}

fn dist(p: (f64, f64), q: (f64, f64)) -> f64 {
    (p.0 - q.0).hypot(p.1 - q.1)
}

/// Ordinate of the circle point equidistant from the points at `ya` and `yb`,
/// found by bisecting `h(y) = |A P_y| - |P_y B|`, which changes sign between them.
pub fn ivt_midpoint_ordinate(ya: f64, yb: f64) -> f64 {
    let (a, b) = (coords(ya), coords(yb));
    let h = |y: f64| dist(a, coords(y)) - dist(coords(y), b);
    let (mut lo, mut hi) = if ya < yb { (ya, yb) } else { (yb, ya) };
    let h_lo_positive = h(lo) > 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo < 1e-16 {
            break;
        }
        if (h(mid) > 0.0) == h_lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Chord of the level-`m` quarter-circle bisection by the half-angle
/// recurrence `c' = sqrt(2 - 2 sqrt(1 - (c/2)^2))` from `c = sqrt 2`.
pub fn half_angle_chord(m: u32) -> f64 {
    let mut c = std::f64::consts::SQRT_2;
    for _ in 0..m {
        c = (2.0 - 2.0 * (1.0 - (c / 2.0).powi(2)).sqrt()).sqrt();
    }
    c
}

/// Exact length of the arc between two ordinates.
pub fn arc_exact(ya: f64, yb: f64) -> f64 {
    (ya.asin() - yb.asin()).abs()
}

/// Two ordinates drawn uniformly, returned as `(higher, lower)`, distinct.
pub fn random_arc(rng: &mut ChaCha8Rng) -> (f64, f64) {
    loop {
        let (p, q): (f64, f64) = (rng.random(), rng.random());
        if p != q {
            return if p > q { (p, q) } else { (q, p) };
        }
    }
}

/// `n` distinct ordinates sorted in decreasing order.
pub fn random_ordered(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let mut ys: Vec<f64> = (0..n).map(|_| rng.random()).collect();
        ys.sort_by(|p, q| q.total_cmp(p));
        if ys.windows(2).all(|w| w[0] > w[1]) {
            return ys;
        }
    }
}
