//! Browser bindings for the demand model. The page in `www/` drives three
//! views: one charging session, a class's weekday × hour arrivals, and the
//! scenario demand curves.

use std::collections::BTreeMap;

use vessel_demand::ingest::filter_calls;
use vessel_demand::profiles::HOURS;
use vessel_demand::scenario::ChargeMode;
use vessel_demand::synthgen::{generate, SynthSpec};
use vessel_demand::*;
use wasm_bindgen::prelude::*;

const POWER_SAMPLES: usize = 241;

/// One charging session: the power curve and its energy per hour slot.
#[wasm_bindgen]
pub struct SessionView {
    times_h: Vec<f64>,
    power_kw: Vec<f64>,
    slot_energy_kwh: Vec<f64>,
    session_energy_kwh: f64,
}

#[wasm_bindgen]
impl SessionView {
    pub fn times_h(&self) -> Vec<f64> {
        self.times_h.clone()
    }

    pub fn power_kw(&self) -> Vec<f64> {
        self.power_kw.clone()
    }

    pub fn slot_energy_kwh(&self) -> Vec<f64> {
        self.slot_energy_kwh.clone()
    }

    pub fn session_energy_kwh(&self) -> f64 {
        self.session_energy_kwh
    }
}

pub fn build_session(rated_kw: f64, ramp_start_h: f64, ramp_end_h: f64, start_slot: usize) -> Result<SessionView, String> {
    let profile = ChargingProfile::new(rated_kw, ramp_start_h, ramp_end_h).map_err(|e| e.to_string())?;
    if start_slot >= HOURS {
        return Err(format!("start slot {start_slot} must be below {HOURS}"));
    }
    let span = (ramp_end_h * 1.15).max(1.0);
    let times_h: Vec<f64> = (0..POWER_SAMPLES)
        .map(|i| span * i as f64 / (POWER_SAMPLES - 1) as f64)
        .collect();
    let power_kw = times_h.iter().map(|&t| profile.instantaneous_power(t)).collect();
    Ok(SessionView {
        times_h,
        power_kw,
        slot_energy_kwh: profile.hourly_energy_vector(start_slot).energy_kwh_by_slot.to_vec(),
        session_energy_kwh: profile.session_energy(),
    })
}

#[wasm_bindgen]
pub fn charging_session(rated_kw: f64, ramp_start_h: f64, ramp_end_h: f64, start_slot: usize) -> Result<SessionView, JsValue> {
    build_session(rated_kw, ramp_start_h, ramp_end_h, start_slot).map_err(|e| JsValue::from_str(&e))
}

/// Demand curves for one scenario.
#[wasm_bindgen]
pub struct DemandView {
    classes: Vec<String>,
    per_class: Vec<f64>,
    total: Vec<f64>,
    peak_kw: f64,
    peak_slots: Vec<u32>,
}

#[wasm_bindgen]
impl DemandView {
    pub fn classes(&self) -> Vec<String> {
        self.classes.clone()
    }

    /// Class curves concatenated, 24 values per class in `classes()` order.
    pub fn per_class_kw(&self) -> Vec<f64> {
        self.per_class.clone()
    }

    pub fn total_kw(&self) -> Vec<f64> {
        self.total.clone()
    }

    pub fn peak_kw(&self) -> f64 {
        self.peak_kw
    }

    pub fn peak_slots(&self) -> Vec<u32> {
        self.peak_slots.clone()
    }
}

/// The synthetic dataset, filtered and binned once per page load.
#[wasm_bindgen]
pub struct Explorer {
    table: TypeFrequencyTable,
    profiles: BTreeMap<String, ArrivalProfile>,
}

impl Explorer {
    pub fn build(seed: u64) -> Result<Explorer, String> {
        let calls = generate(&SynthSpec::default_2019(seed)).map_err(|e| e.to_string())?;
        let filter = FilterConfig::default();
        let (kept, table) = filter_calls(&calls, &filter);
        let mut profiles = BTreeMap::new();
        for class in table.classes() {
            let profile = build_arrival_profile(&kept, class, &filter.window(), false).map_err(|e| e.to_string())?;
            profiles.insert(class.to_string(), profile);
        }
        Ok(Explorer { table, profiles })
    }

    fn profile(&self, class: &str) -> Result<&ArrivalProfile, String> {
        self.profiles
            .get(class)
            .ok_or_else(|| format!("unknown vessel class `{class}`"))
    }

    pub fn scenario(
        &self,
        fractions: &[f64],
        slow: ChargingProfile,
        rapid: ChargingProfile,
        aggregation: Aggregation,
    ) -> Result<DemandView, String> {
        let classes: Vec<String> = self.table.classes().map(String::from).collect();
        if fractions.len() != classes.len() {
            return Err(format!("expected {} fractions, got {}", classes.len(), fractions.len()));
        }
        let defaults = default_policies();
        let mut cfg = ScenarioConfig {
            aggregation,
            ..ScenarioConfig::default()
        };
        let mut vectors = BTreeMap::new();
        for (class, &f) in classes.iter().zip(fractions) {
            let mode = defaults.get(class).map_or(ChargeMode::Slow, |p| p.mode);
            let mut policy = ChargePolicy::new(class, mode);
            policy.profile = match mode {
                ChargeMode::Slow => slow,
                ChargeMode::Rapid => rapid,
            };
            cfg.adoption.insert(class.clone(), f);
            cfg.policies.insert(class.clone(), policy);
            vectors.insert(class.clone(), daily_arrival_vector(self.profile(class)?, aggregation));
        }
        let curve = total_demand(&cfg, &vectors).map_err(|e| e.to_string())?;
        Ok(DemandView {
            classes: curve.per_class.keys().cloned().collect(),
            per_class: curve.per_class.values().flatten().copied().collect(),
            total: curve.total.to_vec(),
            peak_kw: curve.peak_kw,
            peak_slots: curve.peak_slots.iter().map(|&h| h as u32).collect(),
        })
    }
}

#[wasm_bindgen]
impl Explorer {
    #[wasm_bindgen(constructor)]
    pub fn new(seed: u64) -> Result<Explorer, JsValue> {
        Explorer::build(seed).map_err(|e| JsValue::from_str(&e))
    }

    /// Classes in descending call count.
    pub fn classes(&self) -> Vec<String> {
        self.table.classes().map(String::from).collect()
    }

    pub fn call_counts(&self) -> Vec<u32> {
        self.table.entries.iter().map(|(_, n)| *n as u32).collect()
    }

    /// 168 counts, Monday 00:00 first, row-major by weekday.
    pub fn arrival_grid(&self, class: &str) -> Result<Vec<u32>, JsValue> {
        let profile = self.profile(class).map_err(|e| JsValue::from_str(&e))?;
        Ok(profile.counts.iter().flatten().copied().collect())
    }

    /// `fractions` follow `classes()`. `aggregation` is `alldays` or `mon`..`sun`.
    #[allow(clippy::too_many_arguments)]
    pub fn demand(
        &self,
        fractions: &[f64],
        slow_kw: f64,
        slow_t1_h: f64,
        slow_t2_h: f64,
        rapid_kw: f64,
        rapid_t1_h: f64,
        rapid_t2_h: f64,
        aggregation: &str,
    ) -> Result<DemandView, JsValue> {
        let err = |e: String| JsValue::from_str(&e);
        let slow = ChargingProfile::new(slow_kw, slow_t1_h, slow_t2_h).map_err(|e| err(e.to_string()))?;
        let rapid = ChargingProfile::new(rapid_kw, rapid_t1_h, rapid_t2_h).map_err(|e| err(e.to_string()))?;
        let aggregation: Aggregation = aggregation.parse().map_err(|e: vessel_demand::profiles::ParseAggregationError| err(e.to_string()))?;
        self.scenario(fractions, slow, rapid, aggregation).map_err(err)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn session_view_conserves_energy() {
        let v = build_session(75.0, 3.0, 4.0, 22).unwrap();
        assert_eq!(v.session_energy_kwh(), 262.5);
        assert_eq!(v.slot_energy_kwh().iter().sum::<f64>(), 262.5);
        assert_eq!(v.times_h().len(), v.power_kw().len());
        assert!(build_session(75.0, 5.0, 4.0, 0).is_err());
        assert!(build_session(75.0, 3.0, 4.0, 24).is_err());
    }

    #[test]
    fn explorer_matches_cli_pipeline() {
        let ex = Explorer::build(42).unwrap();
        assert_eq!(ex.call_counts(), vec![2056, 1655, 1546, 1176, 553]);
        let grid = ex.arrival_grid("Trawler").unwrap();
        assert_eq!(grid.len(), 168);
        assert_eq!(grid.iter().sum::<u32>(), 553);

        let view = ex
            .scenario(&[1.0; 5], ChargingProfile::slow(), ChargingProfile::rapid(), Aggregation::AllDays)
            .unwrap();
        assert_eq!(view.per_class_kw().len(), 5 * HOURS);
        assert_eq!(view.peak_slots(), vec![17]);
        let tenth = ex
            .scenario(&[0.1; 5], ChargingProfile::slow(), ChargingProfile::rapid(), Aggregation::AllDays)
            .unwrap();
        assert!((tenth.peak_kw() - 0.1 * view.peak_kw()).abs() < 1e-9 * view.peak_kw());
        assert!(ex
            .scenario(&[1.0; 3], ChargingProfile::slow(), ChargingProfile::rapid(), Aggregation::AllDays)
            .is_err());
    }
}
