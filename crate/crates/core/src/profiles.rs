//! Weekday × hour arrival histograms and the per-hour mean arrival vectors
//! derived from them.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use chrono::{Datelike, Timelike, Weekday};
use thiserror::Error;

use crate::ingest::{DateWindow, PortCall};

pub const HOURS: usize = 24;
pub const DAYS: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("no port calls for vessel class `{0}`")]
    UnknownClass(String),
}

/// Arrival counts for one vessel class. Rows are weekdays starting Monday,
/// columns are hours of the day (floor of the arrival time).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrivalProfile {
    pub vessel_class: String,
    pub counts: [[u32; HOURS]; DAYS],
    /// How many dates of each weekday fall inside the observation window.
    pub days_observed: [u32; DAYS],
}

impl ArrivalProfile {
    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().map(|&n| u64::from(n)).sum()
    }

    pub fn total_days(&self) -> u32 {
        self.days_observed.iter().sum()
    }

    /// Counts per hour summed over all weekdays.
    pub fn hour_totals(&self) -> [u64; HOURS] {
        let mut out = [0u64; HOURS];
        for row in &self.counts {
            for (slot, &n) in out.iter_mut().zip(row) {
                *slot += u64::from(n);
            }
        }
        out
    }
}

/// Number of dates per weekday (Monday first) in an inclusive window.
pub fn weekday_counts(window: &DateWindow) -> [u32; DAYS] {
    let mut out = [0u32; DAYS];
    let days = window.num_days();
    if days == 0 {
        return out;
    }
    let full_weeks = days / 7;
    for slot in out.iter_mut() {
        *slot = full_weeks;
    }
    let first = window.start.weekday().num_days_from_monday();
    for offset in 0..days % 7 {
        out[((first + offset) % 7) as usize] += 1;
    }
    out
}

/// Bins the calls of `vessel_class` by weekday and hour of arrival.
///
/// With `allow_empty` false, a class that matches no call is an error.
pub fn build_arrival_profile(
    calls: &[PortCall],
    vessel_class: &str,
    window: &DateWindow,
    allow_empty: bool,
) -> Result<ArrivalProfile, ProfileError> {
    let mut counts = [[0u32; HOURS]; DAYS];
    let mut seen = false;
    for call in calls.iter().filter(|c| c.vessel_class == vessel_class) {
        let day = call.arrival_utc.weekday().num_days_from_monday() as usize;
        let hour = call.arrival_utc.hour() as usize;
        counts[day][hour] += 1;
        seen = true;
    }
    if !seen && !allow_empty {
        return Err(ProfileError::UnknownClass(vessel_class.to_string()));
    }
    Ok(ArrivalProfile {
        vessel_class: vessel_class.to_string(),
        counts,
        days_observed: weekday_counts(window),
    })
}

/// Which days feed the representative-day average.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Aggregation {
    #[default]
    AllDays,
    Weekday(Weekday),
}

impl fmt::Display for Aggregation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Aggregation::AllDays => f.write_str("alldays"),
            Aggregation::Weekday(day) => {
                let name = match day {
                    Weekday::Mon => "mon",
                    Weekday::Tue => "tue",
                    Weekday::Wed => "wed",
                    Weekday::Thu => "thu",
                    Weekday::Fri => "fri",
                    Weekday::Sat => "sat",
                    Weekday::Sun => "sun",
                };
                f.write_str(name)
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown aggregation `{0}`, expected alldays or mon..sun")]
pub struct ParseAggregationError(String);

impl FromStr for Aggregation {
    type Err = ParseAggregationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "alldays" || lower == "all" {
            return Ok(Aggregation::AllDays);
        }
        lower
            .parse::<Weekday>()
            .map(Aggregation::Weekday)
            .map_err(|_| ParseAggregationError(s.to_string()))
    }
}

/// Expected arrivals in each hour slot of a representative day.
#[derive(Debug, Clone, PartialEq)]
pub struct DailyArrivalVector {
    pub vessel_class: String,
    pub mean_arrivals: [f64; HOURS],
    pub aggregation: Aggregation,
}

impl DailyArrivalVector {
    pub fn zeros(vessel_class: &str, aggregation: Aggregation) -> Self {
        DailyArrivalVector {
            vessel_class: vessel_class.to_string(),
            mean_arrivals: [0.0; HOURS],
            aggregation,
        }
    }

    /// Expected arrivals per representative day.
    pub fn daily_total(&self) -> f64 {
        self.mean_arrivals.iter().sum()
    }
}

/// Averages a profile over the selected days. A weekday that never occurs in
/// the window yields a zero vector.
pub fn daily_arrival_vector(profile: &ArrivalProfile, aggregation: Aggregation) -> DailyArrivalVector {
    let mut mean_arrivals = [0.0; HOURS];
    match aggregation {
        Aggregation::AllDays => {
            let days = profile.total_days();
            if days > 0 {
                let totals = profile.hour_totals();
                for (m, &n) in mean_arrivals.iter_mut().zip(&totals) {
                    *m = n as f64 / f64::from(days);
                }
            }
        }
        Aggregation::Weekday(day) => {
            let d = day.num_days_from_monday() as usize;
            let days = profile.days_observed[d];
            if days > 0 {
                for (m, &n) in mean_arrivals.iter_mut().zip(&profile.counts[d]) {
                    *m = f64::from(n) / f64::from(days);
                }
            }
        }
    }
    DailyArrivalVector {
        vessel_class: profile.vessel_class.clone(),
        mean_arrivals,
        aggregation,
    }
}

/// Writes `class,dow,hour,count` rows for every non-zero cell, ordered by
/// weekday (0 = Monday) then hour.
pub fn write_profile_csv<W: Write>(mut out: W, profile: &ArrivalProfile) -> io::Result<()> {
    writeln!(out, "class,dow,hour,count")?;
    for (dow, row) in profile.counts.iter().enumerate() {
        for (hour, &n) in row.iter().enumerate() {
            if n > 0 {
                writeln!(out, "{},{dow},{hour},{n}", profile.vessel_class)?;
            }
        }
    }
    Ok(())
}
