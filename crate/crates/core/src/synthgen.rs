//! Deterministic synthetic port-call data.
//!
//! The default spec targets a calendar year with five frequent small-vessel
//! classes, plus filler calls (rare classes, vessels of 25 m or more, calls
//! outside the year) that the default filters remove. The hourly and weekday
//! shapes are invented approximations of typical harbour traffic:
//! commercial fishing returns late afternoon, tugs work daytime hours on
//! weekdays, leisure traffic rises after midday and is heavier at weekends.
//!
//! Per-class counts are exact. Each class's count is apportioned over the
//! weekday × hour cells by largest remainder, so only the dates, minutes,
//! lengths and vessel ids inside a cell are random.

use chrono::{Datelike, Duration, NaiveDate, TimeZone, Utc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ingest::{DateWindow, PortCall};
use crate::profiles::{DAYS, HOURS};
use crate::vessel_class::*;

#[derive(Debug, Error, PartialEq)]
pub enum SynthError {
    #[error("class `{0}`: weights must be finite, non-negative and not all zero")]
    BadWeights(String),
    #[error("class `{class}`: length range {min}..{max} m is empty or non-positive")]
    BadLengthRange { class: String, min: f64, max: f64 },
    #[error("class `{0}`: fleet size must be positive")]
    EmptyFleet(String),
    #[error("class `{0}`: count must be positive")]
    ZeroCount(String),
    #[error("generation window is inverted")]
    BadWindow,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassTarget {
    pub vessel_class: String,
    pub count: usize,
    pub hourly_weights: [f64; HOURS],
    /// Monday first.
    pub weekday_weights: [f64; DAYS],
    /// Lengths are drawn from `[min, max)` on a 0.1 m grid.
    pub length_range_m: (f64, f64),
    /// Distinct vessel ids to draw from.
    pub fleet_size: u32,
}

impl ClassTarget {
    fn validate(&self) -> Result<(), SynthError> {
        let ok = |w: &[f64]| w.iter().all(|x| x.is_finite() && *x >= 0.0) && w.iter().sum::<f64>() > 0.0;
        if self.count == 0 {
            return Err(SynthError::ZeroCount(self.vessel_class.clone()));
        }
        if !ok(&self.hourly_weights) || !ok(&self.weekday_weights) {
            return Err(SynthError::BadWeights(self.vessel_class.clone()));
        }
        let (min, max) = self.length_range_m;
        if !(min > 0.0 && decimetres(min) < decimetres(max)) {
            return Err(SynthError::BadLengthRange {
                class: self.vessel_class.clone(),
                min,
                max,
            });
        }
        if self.fleet_size == 0 {
            return Err(SynthError::EmptyFleet(self.vessel_class.clone()));
        }
        Ok(())
    }
}

/// Calls the default filters must discard.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FillerSpec {
    /// Small vessels of classes too rare to pass the frequency threshold.
    pub rare_classes: Vec<(String, usize)>,
    /// Calls inside the window by vessels of at least `oversize_from_m`.
    pub oversized: usize,
    pub oversize_from_m: f64,
    /// Small-vessel calls dated in the year before or after the window.
    pub out_of_window: usize,
}

impl FillerSpec {
    pub fn total(&self) -> usize {
        self.rare_classes.iter().map(|(_, n)| n).sum::<usize>() + self.oversized + self.out_of_window
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthSpec {
    pub seed: u64,
    pub window: DateWindow,
    pub class_targets: Vec<ClassTarget>,
    pub filler: FillerSpec,
}

const NIGHT: f64 = 0.02;

fn fishing_hours() -> [f64; HOURS] {
    [
        NIGHT, NIGHT, NIGHT, NIGHT, 0.05, 0.08, 0.10, 0.12, 0.12, 0.10, 0.10, 0.12, //
        0.14, 0.16, 0.22, 0.45, 1.00, 0.95, 0.55, 0.18, 0.10, 0.07, 0.05, NIGHT,
    ]
}

fn tug_hours() -> [f64; HOURS] {
    [
        NIGHT, NIGHT, NIGHT, NIGHT, NIGHT, 0.08, 0.70, 0.85, 0.75, 0.90, 0.80, 0.70, //
        0.85, 0.75, 0.90, 0.80, 0.95, 0.85, 0.40, 0.10, 0.06, 0.05, 0.04, NIGHT,
    ]
}

fn yacht_hours() -> [f64; HOURS] {
    [
        NIGHT, NIGHT, NIGHT, NIGHT, NIGHT, 0.04, 0.06, 0.10, 0.14, 0.18, 0.20, 0.24, //
        0.45, 0.60, 0.75, 0.90, 1.00, 0.70, 0.45, 0.25, 0.12, 0.07, 0.05, NIGHT,
    ]
}

fn sailing_hours() -> [f64; HOURS] {
    [
        NIGHT, NIGHT, NIGHT, NIGHT, NIGHT, 0.04, 0.06, 0.10, 0.14, 0.18, 0.20, 0.22, //
        0.24, 0.28, 0.60, 0.85, 1.00, 0.75, 0.45, 0.25, 0.12, 0.07, 0.05, NIGHT,
    ]
}

fn rare_hours() -> [f64; HOURS] {
    let mut w = [0.05; HOURS];
    for slot in w.iter_mut().take(20).skip(7) {
        *slot = 0.5;
    }
    w
}

const COMMERCIAL_WEEK: [f64; DAYS] = [1.0, 1.0, 1.0, 1.0, 1.0, 0.55, 0.5];
const LEISURE_WEEK: [f64; DAYS] = [0.55, 0.5, 0.5, 0.55, 0.7, 1.0, 1.0];

const RARE_CLASSES: [(&str, usize); 26] = [
    ("Pleasure craft", 460),
    ("Passenger ship", 330),
    ("Pilot vessel", 260),
    ("Search & rescue vessel", 210),
    ("Law enforcement", 170),
    ("Diving vessel", 150),
    ("Dredger", 130),
    ("Research vessel", 115),
    ("Survey vessel", 100),
    ("Patrol vessel", 90),
    ("Ferry", 80),
    ("Workboat", 70),
    ("Crew boat", 58),
    ("Supply vessel", 50),
    ("Port tender", 40),
    ("Buoy tender", 30),
    ("Landing craft", 24),
    ("Hopper barge", 20),
    ("Cargo ship", 18),
    ("Tanker", 16),
    ("Catamaran", 14),
    ("Rowing boat", 12),
    ("Houseboat", 10),
    ("Water taxi", 8),
    ("Military ops", 5),
    ("Offshore support vessel", 13),
];

impl SynthSpec {
    /// Calendar-year 2019 dataset whose default-filtered class counts are
    /// 2056, 1655, 1546, 1176 and 553.
    pub fn default_2019(seed: u64) -> Self {
        let target = |class: &str, count, hours, week, len: (f64, f64), fleet| ClassTarget {
            vessel_class: class.to_string(),
            count,
            hourly_weights: hours,
            weekday_weights: week,
            length_range_m: len,
            fleet_size: fleet,
        };
        SynthSpec {
            seed,
            window: DateWindow {
                start: NaiveDate::from_ymd_opt(2019, 1, 1).unwrap(),
                end: NaiveDate::from_ymd_opt(2019, 12, 31).unwrap(),
            },
            class_targets: vec![
                target(SAILING_SHIP, 2056, sailing_hours(), LEISURE_WEEK, (6.0, 25.0), 220),
                target(FISHING_VESSEL, 1655, fishing_hours(), COMMERCIAL_WEEK, (7.0, 24.0), 60),
                target(PUSHER_TUG, 1546, tug_hours(), COMMERCIAL_WEEK, (10.0, 25.0), 14),
                target(YACHT, 1176, yacht_hours(), LEISURE_WEEK, (5.0, 24.0), 180),
                target(TRAWLER, 553, fishing_hours(), COMMERCIAL_WEEK, (10.0, 25.0), 25),
            ],
            filler: FillerSpec {
                rare_classes: RARE_CLASSES.iter().map(|&(c, n)| (c.to_string(), n)).collect(),
                oversized: 1800,
                oversize_from_m: 25.0,
                out_of_window: 1200,
            },
        }
    }

    pub fn validate(&self) -> Result<(), SynthError> {
        if self.window.start > self.window.end {
            return Err(SynthError::BadWindow);
        }
        self.class_targets.iter().try_for_each(ClassTarget::validate)
    }
}

fn decimetres(m: f64) -> i64 {
    (m * 10.0).round() as i64
}

/// Splits `total` over `weights` in proportion, exactly, by largest
/// remainder. Ties go to the lower index.
pub fn apportion(total: usize, weights: &[f64]) -> Vec<usize> {
    let sum: f64 = weights.iter().sum();
    if weights.is_empty() || sum.is_nan() || sum <= 0.0 {
        return vec![0; weights.len()];
    }
    let quotas: Vec<f64> = weights.iter().map(|w| total as f64 * w / sum).collect();
    let mut counts: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let assigned: usize = counts.iter().sum();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| {
        let ra = quotas[a] - quotas[a].floor();
        let rb = quotas[b] - quotas[b].floor();
        rb.total_cmp(&ra).then(a.cmp(&b))
    });
    // Rounding in the quotas can leave `assigned` off by one in either
    // direction; both cases are settled here.
    if assigned <= total {
        for &i in order.iter().cycle().take(total - assigned) {
            counts[i] += 1;
        }
    } else {
        let mut excess = assigned - total;
        for &i in order.iter().rev() {
            if excess == 0 {
                break;
            }
            if counts[i] > 0 {
                counts[i] -= 1;
                excess -= 1;
            }
        }
    }
    counts
}

struct Emitter {
    rng: ChaCha8Rng,
    calls: Vec<PortCall>,
}

impl Emitter {
    fn call_on(&mut self, date: NaiveDate, hour: u32, class: &str, id: String, length_m: f64) {
        let minute = self.rng.random_range(0..60);
        let arrival_utc = Utc.from_utc_datetime(&date.and_hms_opt(hour, minute, 0).unwrap());
        self.calls.push(PortCall {
            vessel_id: id,
            vessel_class: class.to_string(),
            length_m,
            arrival_utc,
        });
    }

    fn length(&mut self, min: f64, max: f64) -> f64 {
        self.rng.random_range(decimetres(min)..decimetres(max)) as f64 / 10.0
    }

    fn vessel_id(&mut self, class_idx: usize, fleet: u32) -> String {
        let n = self.rng.random_range(0..fleet);
        format!("235{:02}{:04}", class_idx % 100, n)
    }

    fn random_date(&mut self, window: &DateWindow) -> NaiveDate {
        let days = window.num_days().max(1);
        window.start + Duration::days(i64::from(self.rng.random_range(0..days)))
    }
}

fn dates_by_weekday(window: &DateWindow) -> [Vec<NaiveDate>; DAYS] {
    let mut out: [Vec<NaiveDate>; DAYS] = Default::default();
    let mut date = window.start;
    while date <= window.end {
        out[date.weekday().num_days_from_monday() as usize].push(date);
        date = date.succ_opt().unwrap();
    }
    out
}

/// Builds the calls for `spec`, sorted by arrival time then vessel id.
/// The same spec always yields the same calls.
pub fn generate(spec: &SynthSpec) -> Result<Vec<PortCall>, SynthError> {
    spec.validate()?;
    let mut em = Emitter {
        rng: ChaCha8Rng::seed_from_u64(spec.seed),
        calls: Vec::new(),
    };
    let by_weekday = dates_by_weekday(&spec.window);

    for (class_idx, target) in spec.class_targets.iter().enumerate() {
        let cell_weights: Vec<f64> = (0..DAYS)
            .flat_map(|d| {
                let available = !by_weekday[d].is_empty();
                target
                    .hourly_weights
                    .iter()
                    .map(move |&w| if available { target.weekday_weights[d] * w } else { 0.0 })
            })
            .collect();
        let cells = apportion(target.count, &cell_weights);
        for (cell, &n) in cells.iter().enumerate() {
            let (day, hour) = (cell / HOURS, (cell % HOURS) as u32);
            let dates = &by_weekday[day];
            for _ in 0..n {
                let date = dates[em.rng.random_range(0..dates.len())];
                let id = em.vessel_id(class_idx, target.fleet_size);
                let (lo, hi) = target.length_range_m;
                let len = em.length(lo, hi);
                em.call_on(date, hour, &target.vessel_class, id, len);
            }
        }
    }

    let hours = rare_hours();
    let base_idx = spec.class_targets.len();
    for (i, (class, count)) in spec.filler.rare_classes.iter().enumerate() {
        let class_idx = base_idx + i;
        for _ in 0..*count {
            let date = em.random_date(&spec.window);
            let hour = apportion_pick(&mut em.rng, &hours);
            let id = em.vessel_id(class_idx, 40);
            let len = em.length(3.0, 24.0);
            em.call_on(date, hour, class, id, len);
        }
    }

    let all_classes: Vec<&str> = spec
        .class_targets
        .iter()
        .map(|t| t.vessel_class.as_str())
        .chain(spec.filler.rare_classes.iter().map(|(c, _)| c.as_str()))
        .collect();
    if !all_classes.is_empty() {
        let oversize_idx = base_idx + spec.filler.rare_classes.len();
        for i in 0..spec.filler.oversized {
            let class = all_classes[em.rng.random_range(0..all_classes.len())];
            let date = em.random_date(&spec.window);
            let hour = em.rng.random_range(0..HOURS as u32);
            let id = em.vessel_id(oversize_idx, 300);
            let from = spec.filler.oversize_from_m;
            // Every tenth oversized call sits exactly on the cutoff.
            let len = if i % 10 == 0 { from } else { em.length(from, from + 150.0) };
            em.call_on(date, hour, class, id, len);
        }

        let outside = [
            DateWindow {
                start: spec.window.start - Duration::days(365),
                end: spec.window.start - Duration::days(1),
            },
            DateWindow {
                start: spec.window.end + Duration::days(1),
                end: spec.window.end + Duration::days(365),
            },
        ];
        for i in 0..spec.filler.out_of_window {
            let class = all_classes[em.rng.random_range(0..all_classes.len())];
            let date = em.random_date(&outside[i % 2]);
            let hour = em.rng.random_range(0..HOURS as u32);
            let id = em.vessel_id(oversize_idx + 1, 300);
            let len = em.length(3.0, 24.0);
            em.call_on(date, hour, class, id, len);
        }
    }

    let mut calls = em.calls;
    calls.sort_by(|a, b| {
        a.arrival_utc
            .cmp(&b.arrival_utc)
            .then_with(|| a.vessel_id.cmp(&b.vessel_id))
            .then_with(|| a.vessel_class.cmp(&b.vessel_class))
    });
    Ok(calls)
}

fn apportion_pick(rng: &mut ChaCha8Rng, weights: &[f64; HOURS]) -> u32 {
    let sum: f64 = weights.iter().sum();
    let mut x = rng.random_range(0.0..sum);
    for (h, &w) in weights.iter().enumerate() {
        if x < w {
            return h as u32;
        }
        x -= w;
    }
    (HOURS - 1) as u32
}
