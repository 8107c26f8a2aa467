//! Piecewise-linear charging profile: constant power up to `ramp_start_h`,
//! then a linear taper to zero at `ramp_end_h`.

use thiserror::Error;

use crate::profiles::HOURS;

#[derive(Debug, Error, PartialEq)]
pub enum ChargingError {
    #[error("rated power must be positive and finite, got {0} kW")]
    BadRatedPower(f64),
    #[error("ramp times must satisfy 0 <= start <= end (finite), got start {start} h, end {end} h")]
    BadRamp { start: f64, end: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChargingProfile {
    pub rated_power_kw: f64,
    pub ramp_start_h: f64,
    pub ramp_end_h: f64,
}

impl ChargingProfile {
    pub fn new(rated_power_kw: f64, ramp_start_h: f64, ramp_end_h: f64) -> Result<Self, ChargingError> {
        let p = ChargingProfile {
            rated_power_kw,
            ramp_start_h,
            ramp_end_h,
        };
        p.validate()?;
        Ok(p)
    }

    /// 75 kW for three hours, tapering to zero over the fourth.
    pub const fn slow() -> Self {
        ChargingProfile {
            rated_power_kw: 75.0,
            ramp_start_h: 3.0,
            ramp_end_h: 4.0,
        }
    }

    /// 150 kW for one hour, no taper.
    pub const fn rapid() -> Self {
        ChargingProfile {
            rated_power_kw: 150.0,
            ramp_start_h: 1.0,
            ramp_end_h: 1.0,
        }
    }

    pub fn validate(&self) -> Result<(), ChargingError> {
        if !(self.rated_power_kw.is_finite() && self.rated_power_kw > 0.0) {
            return Err(ChargingError::BadRatedPower(self.rated_power_kw));
        }
        let ok = self.ramp_start_h.is_finite()
            && self.ramp_end_h.is_finite()
            && self.ramp_start_h >= 0.0
            && self.ramp_start_h <= self.ramp_end_h;
        if !ok {
            return Err(ChargingError::BadRamp {
                start: self.ramp_start_h,
                end: self.ramp_end_h,
            });
        }
        Ok(())
    }

    /// Power drawn `t` hours after charging starts. Zero outside `(0, ramp_end_h]`.
    pub fn instantaneous_power(&self, t: f64) -> f64 {
        let (p, t1, t2) = (self.rated_power_kw, self.ramp_start_h, self.ramp_end_h);
        if t <= 0.0 || t > t2 {
            0.0
        } else if t <= t1 {
            p
        } else {
            p * (t2 - t) / (t2 - t1)
        }
    }

    /// Energy delivered by one full session, in kWh.
    pub fn session_energy(&self) -> f64 {
        let (p, t1, t2) = (self.rated_power_kw, self.ramp_start_h, self.ramp_end_h);
        p * t1 + p * (t2 - t1) / 2.0
    }

    /// Energy drawn between `a` and `b` hours into the session (`a <= b`).
    pub fn energy_between(&self, a: f64, b: f64) -> f64 {
        let (p, t1, t2) = (self.rated_power_kw, self.ramp_start_h, self.ramp_end_h);
        let mut energy = 0.0;

        let (lo, hi) = (a.max(0.0), b.min(t1));
        if hi > lo {
            energy += p * (hi - lo);
        }

        let (lo, hi) = (a.max(t1), b.min(t2));
        if hi > lo {
            // Trapezoid over the linear taper is exact.
            let p_lo = p * (t2 - lo) / (t2 - t1);
            let p_hi = p * (t2 - hi) / (t2 - t1);
            energy += (hi - lo) * (p_lo + p_hi) / 2.0;
        }
        energy
    }

    /// Number of hour slots a session touches.
    pub fn slots_spanned(&self) -> usize {
        self.ramp_end_h.ceil() as usize
    }

    /// Spreads one session starting at the top of `start_slot` over the hour
    /// slots of a representative day. Sessions longer than a day wrap onto
    /// themselves and accumulate.
    pub fn hourly_energy_vector(&self, start_slot: usize) -> SessionEnergyVector {
        assert!(start_slot < HOURS, "start slot {start_slot} out of range");
        let mut energy = [0.0; HOURS];
        for k in 0..self.slots_spanned() {
            let slot = (start_slot + k) % HOURS;
            energy[slot] += self.energy_between(k as f64, (k + 1) as f64);
        }
        SessionEnergyVector {
            start_slot,
            energy_kwh_by_slot: energy,
        }
    }
}

/// Energy per hour slot (kWh, numerically the slot's mean kW) for one session.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SessionEnergyVector {
    pub start_slot: usize,
    pub energy_kwh_by_slot: [f64; HOURS],
}

impl SessionEnergyVector {
    pub fn total(&self) -> f64 {
        self.energy_kwh_by_slot.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SLOW: ChargingProfile = ChargingProfile::slow();
    const RAPID: ChargingProfile = ChargingProfile::rapid();

    #[test]
    fn power_examples() {
        assert_eq!(SLOW.instantaneous_power(0.5), 75.0);
        assert_eq!(SLOW.instantaneous_power(3.0), 75.0);
        assert_eq!(SLOW.instantaneous_power(4.0), 0.0);
        assert_eq!(SLOW.instantaneous_power(3.5), 37.5);
        assert_eq!(SLOW.instantaneous_power(0.0), 0.0);
        assert_eq!(SLOW.instantaneous_power(-1.0), 0.0);
        assert_eq!(SLOW.instantaneous_power(4.01), 0.0);
    }

    #[test]
    fn degenerate_ramp() {
        assert_eq!(RAPID.instantaneous_power(1.0), 150.0);
        assert_eq!(RAPID.instantaneous_power(1.0 + 1e-12), 0.0);
        assert_eq!(RAPID.session_energy(), 150.0);
        let empty = ChargingProfile::new(40.0, 0.0, 0.0).unwrap();
        assert_eq!(empty.session_energy(), 0.0);
        assert_eq!(empty.hourly_energy_vector(5).energy_kwh_by_slot, [0.0; HOURS]);
    }

    #[test]
    fn session_energy_defaults() {
        assert_eq!(SLOW.session_energy(), 262.5);
        assert_eq!(RAPID.session_energy(), 150.0);
    }

    #[test]
    fn rapid_inside_one_slot() {
        let v = RAPID.hourly_energy_vector(17);
        for (h, &e) in v.energy_kwh_by_slot.iter().enumerate() {
            assert_eq!(e, if h == 17 { 150.0 } else { 0.0 });
        }
    }

    #[test]
    fn slow_wraps_midnight() {
        let v = SLOW.hourly_energy_vector(22).energy_kwh_by_slot;
        assert_eq!(v[22], 75.0);
        assert_eq!(v[23], 75.0);
        assert_eq!(v[0], 75.0);
        assert_eq!(v[1], 37.5);
        assert_eq!(v.iter().sum::<f64>(), 262.5);
    }

    #[test]
    fn session_longer_than_a_day_accumulates() {
        let p = ChargingProfile::new(10.0, 30.0, 30.0).unwrap();
        let v = p.hourly_energy_vector(0).energy_kwh_by_slot;
        assert_eq!(v[0], 20.0);
        assert_eq!(v[5], 20.0);
        assert_eq!(v[6], 10.0);
        assert_eq!(v[23], 10.0);
        assert_eq!(v.iter().sum::<f64>(), 300.0);
    }

    #[test]
    fn validation() {
        assert!(ChargingProfile::new(0.0, 1.0, 2.0).is_err());
        assert!(ChargingProfile::new(-5.0, 1.0, 2.0).is_err());
        assert!(ChargingProfile::new(f64::INFINITY, 1.0, 2.0).is_err());
        assert!(ChargingProfile::new(5.0, 2.0, 1.0).is_err());
        assert!(ChargingProfile::new(5.0, -1.0, 1.0).is_err());
        assert!(ChargingProfile::new(5.0, 1.0, f64::NAN).is_err());
        assert!(SLOW.validate().is_ok() && RAPID.validate().is_ok());
    }

    #[test]
    fn fractional_ramp_end() {
        let p = ChargingProfile::new(100.0, 0.5, 1.5).unwrap();
        let v = p.hourly_energy_vector(3).energy_kwh_by_slot;
        // [0,1]: 50 constant + 0.5 h of taper from 100 to 50 -> 37.5
        assert_eq!(v[3], 87.5);
        assert_eq!(v[4], 12.5);
        assert_eq!(v[3] + v[4], p.session_energy());
    }
}
