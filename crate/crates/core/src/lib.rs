//! Electric-vessel charging demand from historical port calls.
//!
//! The pipeline runs [`ingest`] (parse and filter port calls), [`profiles`]
//! (weekday × hour arrival histograms and representative-day means),
//! [`charging`] (the piecewise-linear session profile) and [`scenario`]
//! (adoption fractions and per-class policies summed into demand curves).
//! [`synthgen`] produces a deterministic stand-in dataset.

pub mod charging;
pub mod ingest;
pub mod profiles;
pub mod scenario;
pub mod synthgen;

/// Labels of the five vessel classes that pass the default filters.
pub mod vessel_class {
    pub const SAILING_SHIP: &str = "Sailing ship";
    pub const FISHING_VESSEL: &str = "Fishing vessel";
    pub const PUSHER_TUG: &str = "Pusher/Tug";
    pub const YACHT: &str = "Yacht";
    pub const TRAWLER: &str = "Trawler";

    pub const ALL: [&str; 5] = [SAILING_SHIP, FISHING_VESSEL, PUSHER_TUG, YACHT, TRAWLER];
}

pub use charging::{ChargingProfile, SessionEnergyVector};
pub use ingest::{filter_calls, parse_port_calls, FilterConfig, PortCall, RowError, TypeFrequencyTable};
pub use profiles::{build_arrival_profile, daily_arrival_vector, Aggregation, ArrivalProfile, DailyArrivalVector};
pub use scenario::{class_demand, default_policies, peak, total_demand, ChargeMode, ChargePolicy, DemandCurve, ScenarioConfig};
