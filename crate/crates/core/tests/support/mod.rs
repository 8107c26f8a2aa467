//! Independent reference computations used by the integration and
//! acceptance tests. Nothing here calls the closed-form slot integrals.
#![allow(dead_code)]

use std::collections::BTreeMap;

use chrono::{Datelike, Timelike};
use vessel_demand::ingest::DateWindow;
use vessel_demand::profiles::{weekday_counts, Aggregation, HOURS};
use vessel_demand::{ChargePolicy, ChargingProfile, PortCall};

pub const TRAPEZOID_STEP_H: f64 = 1e-4;

/// Composite trapezoid rule for the charging power over `[a, b]`, with step
/// at most [`TRAPEZOID_STEP_H`]. The interval is split at the profile's
/// breakpoints so the jump at the start of the session (and at the end of a
/// zero-length taper) is not smeared across a step. Power is left-continuous,
/// so a piece's right end is sampled directly and its left end just inside.
pub fn trapezoid(p: &ChargingProfile, a: f64, b: f64) -> f64 {
    let mut cuts = vec![a, b];
    for bp in [0.0, p.ramp_start_h, p.ramp_end_h] {
        if bp > a && bp < b {
            cuts.push(bp);
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let len = hi - lo;
        if len <= 0.0 {
            continue;
        }
        let n = (len / TRAPEZOID_STEP_H).ceil().max(1.0) as usize;
        let h = len / n as f64;
        let left = p.instantaneous_power(lo + len * 1e-9);
        let right = p.instantaneous_power(hi);
        let mut inner = 0.0;
        for i in 1..n {
            inner += p.instantaneous_power(lo + i as f64 * h);
        }
        total += h * (0.5 * (left + right) + inner);
    }
    total
}

/// Trapezoid estimate of every elapsed hour of a session.
pub fn trapezoid_elapsed_hours(p: &ChargingProfile) -> Vec<f64> {
    let hours = p.ramp_end_h.ceil() as usize;
    (0..hours).map(|k| trapezoid(p, k as f64, (k + 1) as f64)).collect()
}

/// Energy delivered in the first `t` hours of a session, from the
/// antiderivative of the profile.
pub fn cumulative_energy(p: &ChargingProfile, t: f64) -> f64 {
    let (rated, t1, t2) = (p.rated_power_kw, p.ramp_start_h, p.ramp_end_h);
    let constant = rated * t.clamp(0.0, t1);
    let width = t2 - t1;
    if width <= 0.0 {
        return constant;
    }
    let u = (t - t1).clamp(0.0, width);
    constant + rated * (u - u * u / (2.0 * width))
}

/// Replays every call as an individual session on the real timeline and
/// averages the energy landing in each hour of day over the days that the
/// aggregation covers.
pub fn simulate_sessions(
    calls: &[PortCall],
    window: &DateWindow,
    aggregation: Aggregation,
    adoption: &BTreeMap<String, f64>,
    policies: &BTreeMap<String, ChargePolicy>,
) -> BTreeMap<String, [f64; HOURS]> {
    let days = weekday_counts(window);
    let mut out: BTreeMap<String, [f64; HOURS]> =
        adoption.keys().map(|c| (c.clone(), [0.0; HOURS])).collect();
    for call in calls {
        let Some(&fraction) = adoption.get(&call.vessel_class) else {
            continue;
        };
        let dow = call.arrival_utc.weekday().num_days_from_monday() as usize;
        let divisor = match aggregation {
            Aggregation::AllDays => days.iter().sum::<u32>(),
            Aggregation::Weekday(d) if d.num_days_from_monday() as usize == dow => days[dow],
            Aggregation::Weekday(_) => continue,
        };
        if divisor == 0 {
            continue;
        }
        let policy = &policies[&call.vessel_class];
        let weight = fraction * policy.sessions_per_arrival / f64::from(divisor);
        let start_hour = call.arrival_utc.hour() as usize;
        let curve = out.get_mut(&call.vessel_class).unwrap();
        let hours = policy.profile.ramp_end_h.ceil() as usize;
        for k in 0..hours {
            let e = cumulative_energy(&policy.profile, (k + 1) as f64)
                - cumulative_energy(&policy.profile, k as f64);
            curve[(start_hour + k) % HOURS] += weight * e;
        }
    }
    out
}

/// Largest absolute difference relative to the largest magnitude in `expected`.
pub fn max_norm_rel_err(actual: &[f64], expected: &[f64]) -> f64 {
    assert_eq!(actual.len(), expected.len());
    let scale = expected.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let diff = actual
        .iter()
        .zip(expected)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// `|a - b| <= rel * max(|a|, |b|)`; two zeros compare equal.
pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs())
}
