//! Adoption scenarios: per-class charging policies and fleet fractions
//! combined into representative-day demand curves.

mod file;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::charging::{ChargingError, ChargingProfile};
use crate::profiles::{Aggregation, DailyArrivalVector, HOURS};
use crate::vessel_class;

pub use file::{ScenarioFile, ScenarioFileError};

/// Hourly curve of mean power in kW (equal to kWh per one-hour slot).
pub type HourlyCurve = [f64; HOURS];

/// Slot values within this relative distance of the maximum count as ties.
pub const PEAK_TIE_RELATIVE: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum ScenarioError {
    #[error("no charging policy for vessel class `{0}`")]
    MissingPolicy(String),
    #[error("no arrival vector for vessel class `{0}`")]
    MissingVector(String),
    #[error("adoption fraction for `{class}` must be within [0, 1], got {value}")]
    BadFraction { class: String, value: f64 },
    #[error("sessions per arrival for `{class}` must be finite and >= 0, got {value}")]
    BadSessions { class: String, value: f64 },
    #[error("invalid charging profile for `{class}`: {source}")]
    BadProfile {
        class: String,
        #[source]
        source: ChargingError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChargeMode {
    Slow,
    Rapid,
}

impl ChargeMode {
    pub fn default_profile(self) -> ChargingProfile {
        match self {
            ChargeMode::Slow => ChargingProfile::slow(),
            ChargeMode::Rapid => ChargingProfile::rapid(),
        }
    }
}

impl fmt::Display for ChargeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChargeMode::Slow => "slow",
            ChargeMode::Rapid => "rapid",
        })
    }
}

impl FromStr for ChargeMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "slow" => Ok(ChargeMode::Slow),
            "rapid" => Ok(ChargeMode::Rapid),
            other => Err(format!("unknown charge mode `{other}`, expected slow or rapid")),
        }
    }
}

/// How one vessel class charges after each arrival.
#[derive(Debug, Clone, PartialEq)]
pub struct ChargePolicy {
    pub vessel_class: String,
    pub mode: ChargeMode,
    pub profile: ChargingProfile,
    /// Full charging sessions per arrival; below 1.0 models partial top-ups.
    pub sessions_per_arrival: f64,
}

impl ChargePolicy {
    /// One session per arrival with the mode's default profile.
    pub fn new(vessel_class: &str, mode: ChargeMode) -> Self {
        ChargePolicy {
            vessel_class: vessel_class.to_string(),
            mode,
            profile: mode.default_profile(),
            sessions_per_arrival: 1.0,
        }
    }

    fn validate(&self) -> Result<(), ScenarioError> {
        self.profile
            .validate()
            .map_err(|source| ScenarioError::BadProfile {
                class: self.vessel_class.clone(),
                source,
            })?;
        if !(self.sessions_per_arrival.is_finite() && self.sessions_per_arrival >= 0.0) {
            return Err(ScenarioError::BadSessions {
                class: self.vessel_class.clone(),
                value: self.sessions_per_arrival,
            });
        }
        Ok(())
    }
}

/// Fishing vessels, trawlers, yachts and sailing ships charge slowly once
/// they are back in port; tugs top up with a rapid session on every return.
pub fn default_policies() -> BTreeMap<String, ChargePolicy> {
    use vessel_class::*;
    [
        (FISHING_VESSEL, ChargeMode::Slow),
        (TRAWLER, ChargeMode::Slow),
        (YACHT, ChargeMode::Slow),
        (SAILING_SHIP, ChargeMode::Slow),
        (PUSHER_TUG, ChargeMode::Rapid),
    ]
    .into_iter()
    .map(|(class, mode)| (class.to_string(), ChargePolicy::new(class, mode)))
    .collect()
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScenarioConfig {
    pub adoption: BTreeMap<String, f64>,
    pub policies: BTreeMap<String, ChargePolicy>,
    pub aggregation: Aggregation,
}

impl ScenarioConfig {
    /// Same fraction for every class that has a default policy.
    pub fn uniform(fraction: f64) -> Self {
        let policies = default_policies();
        ScenarioConfig {
            adoption: policies.keys().map(|c| (c.clone(), fraction)).collect(),
            policies,
            aggregation: Aggregation::AllDays,
        }
    }

    pub fn validate(&self) -> Result<(), ScenarioError> {
        for (class, &fraction) in &self.adoption {
            if !(0.0..=1.0).contains(&fraction) {
                return Err(ScenarioError::BadFraction {
                    class: class.clone(),
                    value: fraction,
                });
            }
            self.policies
                .get(class)
                .ok_or_else(|| ScenarioError::MissingPolicy(class.clone()))?
                .validate()?;
        }
        Ok(())
    }

    /// Copy with every adoption fraction multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = self.clone();
        for f in out.adoption.values_mut() {
            *f *= factor;
        }
        out
    }
}

/// Demand of one class with the whole class converted: expected arrivals in
/// each start slot times that slot's session energy spread, times the
/// sessions per arrival.
fn full_adoption_demand(arrivals: &DailyArrivalVector, policy: &ChargePolicy) -> HourlyCurve {
    let mut demand = [0.0; HOURS];
    for (start, &mean) in arrivals.mean_arrivals.iter().enumerate() {
        if mean == 0.0 {
            continue;
        }
        let session = policy.profile.hourly_energy_vector(start);
        for (d, &e) in demand.iter_mut().zip(&session.energy_kwh_by_slot) {
            *d += mean * e;
        }
    }
    demand
}

/// Expected demand (kW per hour slot) of one class at adoption `fraction`.
pub fn class_demand(arrivals: &DailyArrivalVector, policy: &ChargePolicy, fraction: f64) -> HourlyCurve {
    let scale = fraction * policy.sessions_per_arrival;
    let mut demand = full_adoption_demand(arrivals, policy);
    for d in demand.iter_mut() {
        *d *= scale;
    }
    demand
}

/// Per-class and total demand for a scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct DemandCurve {
    pub per_class: BTreeMap<String, HourlyCurve>,
    pub total: HourlyCurve,
    pub peak_kw: f64,
    pub peak_slots: Vec<usize>,
}

impl DemandCurve {
    fn from_per_class(per_class: BTreeMap<String, HourlyCurve>) -> Self {
        let total = sum_curves(per_class.values());
        let (peak_kw, peak_slots) = peak(&total);
        DemandCurve {
            per_class,
            total,
            peak_kw,
            peak_slots,
        }
    }

    /// Energy drawn over the representative day, kWh.
    pub fn daily_energy_kwh(&self) -> f64 {
        self.total.iter().sum()
    }
}

/// Elementwise compensated (Neumaier) sum of curves, in iteration order.
pub fn sum_curves<'a, I>(curves: I) -> HourlyCurve
where
    I: IntoIterator<Item = &'a HourlyCurve>,
{
    let mut sum = [0.0; HOURS];
    let mut comp = [0.0; HOURS];
    for curve in curves {
        for h in 0..HOURS {
            let x = curve[h];
            let t = sum[h] + x;
            if sum[h].abs() >= x.abs() {
                comp[h] += (sum[h] - t) + x;
            } else {
                comp[h] += (x - t) + sum[h];
            }
            sum[h] = t;
        }
    }
    for h in 0..HOURS {
        sum[h] += comp[h];
    }
    sum
}

/// Sums class demands for every class in the scenario's adoption map.
pub fn total_demand(
    cfg: &ScenarioConfig,
    vectors: &BTreeMap<String, DailyArrivalVector>,
) -> Result<DemandCurve, ScenarioError> {
    cfg.validate()?;
    let mut per_class = BTreeMap::new();
    for (class, &fraction) in &cfg.adoption {
        let arrivals = vectors
            .get(class)
            .ok_or_else(|| ScenarioError::MissingVector(class.clone()))?;
        let policy = &cfg.policies[class];
        per_class.insert(class.clone(), class_demand(arrivals, policy, fraction));
    }
    Ok(DemandCurve::from_per_class(per_class))
}

/// Maximum of the curve and every slot (ascending) that attains it.
pub fn peak(curve: &HourlyCurve) -> (f64, Vec<usize>) {
    let max = curve.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let tol = max.abs() * PEAK_TIE_RELATIVE;
    let slots = curve
        .iter()
        .enumerate()
        .filter(|(_, &v)| max - v <= tol)
        .map(|(h, _)| h)
        .collect();
    (max, slots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vessel_class::*;

    fn arrivals_at(slot: usize, mean: f64) -> DailyArrivalVector {
        let mut v = DailyArrivalVector::zeros("X", Aggregation::AllDays);
        v.mean_arrivals[slot] = mean;
        v
    }

    #[test]
    fn default_policy_lookup() {
        let p = default_policies();
        assert_eq!(p[PUSHER_TUG].mode, ChargeMode::Rapid);
        assert_eq!(p[PUSHER_TUG].profile.rated_power_kw, 150.0);
        assert_eq!(p[YACHT].mode, ChargeMode::Slow);
        assert_eq!(p[YACHT].profile.rated_power_kw, 75.0);
        for class in [FISHING_VESSEL, TRAWLER, SAILING_SHIP] {
            assert_eq!(p[class].mode, ChargeMode::Slow);
            assert_eq!(p[class].sessions_per_arrival, 1.0);
        }
        assert!(!p.contains_key("Submarine"));
    }

    #[test]
    fn zero_fraction_is_zero() {
        let policy = ChargePolicy::new("X", ChargeMode::Slow);
        let d = class_demand(&arrivals_at(3, 7.0), &policy, 0.0);
        assert_eq!(d, [0.0; HOURS]);
    }

    #[test]
    fn single_rapid_session() {
        let policy = ChargePolicy::new("X", ChargeMode::Rapid);
        let d = class_demand(&arrivals_at(17, 1.0), &policy, 1.0);
        for (h, &v) in d.iter().enumerate() {
            assert_eq!(v, if h == 17 { 150.0 } else { 0.0 });
        }
    }

    #[test]
    fn half_adoption_of_two_slow_arrivals() {
        let policy = ChargePolicy::new("X", ChargeMode::Slow);
        let d = class_demand(&arrivals_at(16, 2.0), &policy, 0.5);
        assert_eq!(&d[16..20], &[75.0, 75.0, 75.0, 37.5]);
        assert_eq!(d.iter().sum::<f64>(), 262.5);
    }

    #[test]
    fn sessions_per_arrival_scales() {
        let mut policy = ChargePolicy::new("X", ChargeMode::Rapid);
        policy.sessions_per_arrival = 0.4;
        let d = class_demand(&arrivals_at(9, 1.0), &policy, 1.0);
        assert_eq!(d[9], 60.0);
    }

    #[test]
    fn all_zero_fractions_tie_everywhere() {
        let cfg = ScenarioConfig::uniform(0.0);
        let vectors = cfg
            .adoption
            .keys()
            .map(|c| (c.clone(), arrivals_at(5, 1.0)))
            .collect();
        let curve = total_demand(&cfg, &vectors).unwrap();
        assert_eq!(curve.total, [0.0; HOURS]);
        assert_eq!(curve.peak_kw, 0.0);
        assert_eq!(curve.peak_slots, (0..HOURS).collect::<Vec<_>>());
    }

    #[test]
    fn single_class_total_is_class_curve() {
        let mut cfg = ScenarioConfig::default();
        cfg.adoption.insert(TRAWLER.into(), 0.25);
        cfg.policies = default_policies();
        let vectors = BTreeMap::from([(TRAWLER.to_string(), arrivals_at(17, 3.0))]);
        let curve = total_demand(&cfg, &vectors).unwrap();
        assert_eq!(curve.total, curve.per_class[TRAWLER]);
    }

    #[test]
    fn missing_vector_and_policy() {
        let cfg = ScenarioConfig::uniform(1.0);
        assert_eq!(
            total_demand(&cfg, &BTreeMap::new()),
            Err(ScenarioError::MissingVector(FISHING_VESSEL.into()))
        );
        let mut cfg = ScenarioConfig::default();
        cfg.adoption.insert("Canoe".into(), 1.0);
        assert_eq!(
            total_demand(&cfg, &BTreeMap::new()),
            Err(ScenarioError::MissingPolicy("Canoe".into()))
        );
    }

    #[test]
    fn fraction_out_of_range() {
        for bad in [-0.1, 1.5, f64::NAN] {
            let cfg = ScenarioConfig::uniform(bad);
            assert!(matches!(cfg.validate(), Err(ScenarioError::BadFraction { .. })));
        }
    }

    #[test]
    fn peak_examples() {
        assert_eq!(peak(&[0.0; HOURS]), (0.0, (0..HOURS).collect()));
        let mut v = [0.0; HOURS];
        v[17] = 150.0;
        assert_eq!(peak(&v), (150.0, vec![17]));
        v[8] = 150.0;
        assert_eq!(peak(&v), (150.0, vec![8, 17]));
    }

    #[test]
    fn compensated_sum_is_order_insensitive() {
        let mut a = [0.0; HOURS];
        let mut b = [0.0; HOURS];
        let mut c = [0.0; HOURS];
        a[0] = 1e16;
        b[0] = 1.0;
        c[0] = -1e16;
        assert_eq!(sum_curves([&a, &b, &c])[0], 1.0);
        assert_eq!(sum_curves([&a, &c, &b])[0], 1.0);
    }
}
