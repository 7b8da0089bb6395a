//! Aggregated-flow traffic model: device population sampling and per-window
//! traffic measurement.
//!
//! Devices transmit fixed-size frames periodically and asynchronously on an
//! ideal non-saturated channel (no loss, no collision). A malicious device
//! keeps its type's frame size but transmits `freq_ratio` times as often.
//! All time quantities are milliseconds; traffic is counted over the
//! half-open window `[0, sampling_period_ms)`.

use alloc::vec::Vec;
use rand::Rng;

use crate::catalog::Catalog;
use crate::error::{Error, Result};

/// Full parameter vector of one simulated scenario.
#[derive(Debug, Clone)]
pub struct ScenarioParams {
    /// Devices aggregated behind one flow rule.
    pub devices_per_flow: usize,
    /// Independent probability that a device is malicious.
    pub malicious_prob: f64,
    /// Malicious-to-legitimate transmission-frequency ratio (>= 1).
    pub freq_ratio: f64,
    /// A flow is flagged when measured exceeds `threshold_ratio` times the
    /// expected traffic (strictly).
    pub threshold_ratio: f64,
    /// Counter sampling period of the detector, in ms.
    pub sampling_period_ms: f64,
    pub catalog: Catalog,
}

impl ScenarioParams {
    pub fn new(
        devices_per_flow: usize,
        malicious_prob: f64,
        freq_ratio: f64,
        threshold_ratio: f64,
        sampling_period_ms: f64,
        catalog: Catalog,
    ) -> Result<Self> {
        let params = Self {
            devices_per_flow,
            malicious_prob,
            freq_ratio,
            threshold_ratio,
            sampling_period_ms,
            catalog,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.devices_per_flow == 0 {
            return Err(Error::InvalidInput("devices_per_flow must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.malicious_prob) {
            return Err(Error::InvalidInput("malicious_prob must be in [0, 1]".into()));
        }
        if !(self.freq_ratio >= 1.0) || !self.freq_ratio.is_finite() {
            return Err(Error::InvalidInput("freq_ratio must be >= 1".into()));
        }
        if !(self.threshold_ratio > 0.0) || !self.threshold_ratio.is_finite() {
            return Err(Error::InvalidInput("threshold_ratio must be > 0".into()));
        }
        if !(self.sampling_period_ms > 0.0) || !self.sampling_period_ms.is_finite() {
            return Err(Error::InvalidInput("sampling_period_ms must be > 0".into()));
        }
        Ok(())
    }
}

/// One device inside an aggregated flow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Device {
    pub type_index: usize,
    pub malicious: bool,
    /// Offset of the first frame inside the window, in ms. Uniform over
    /// `[0, effective period)`.
    pub phase_ms: f64,
}

impl Device {
    /// Actual transmission period: the legitimate period for legitimate
    /// devices, shortened by `freq_ratio` for malicious ones.
    pub fn effective_period_ms(&self, params: &ScenarioParams) -> f64 {
        effective_period_ms(
            params.catalog.spec(self.type_index).transmission_period_ms,
            self.malicious,
            params.freq_ratio,
        )
    }
}

/// Effective transmission period of a device with the given legitimate
/// period.
pub fn effective_period_ms(legit_period_ms: f64, malicious: bool, freq_ratio: f64) -> f64 {
    if malicious {
        legit_period_ms / freq_ratio
    } else {
        legit_period_ms
    }
}

/// The device composition of one aggregated flow.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowPopulation {
    pub devices: Vec<Device>,
}

impl FlowPopulation {
    pub fn malicious_count(&self) -> usize {
        self.devices.iter().filter(|d| d.malicious).count()
    }
}

/// Samples one flow population: type from the catalog's type probabilities,
/// malicious flag Bernoulli(`malicious_prob`), phase uniform over the
/// device's effective period.
///
/// Exactly three RNG draws per device, in a fixed order, so a seeded stream
/// reproduces populations bit-for-bit.
pub fn sample_population<R: Rng + ?Sized>(params: &ScenarioParams, rng: &mut R) -> FlowPopulation {
    let mut devices = Vec::with_capacity(params.devices_per_flow);
    sample_population_into(&mut devices, params, rng);
    FlowPopulation { devices }
}

/// Like [`sample_population`] but reusing a caller-owned buffer.
pub fn sample_population_into<R: Rng + ?Sized>(
    devices: &mut Vec<Device>,
    params: &ScenarioParams,
    rng: &mut R,
) {
    devices.clear();
    let probs = params.catalog.type_probabilities();
    for _ in 0..params.devices_per_flow {
        let type_index = sample_type(probs, rng.random::<f64>());
        let malicious = rng.random::<f64>() < params.malicious_prob;
        let period = effective_period_ms(
            params.catalog.spec(type_index).transmission_period_ms,
            malicious,
            params.freq_ratio,
        );
        let phase_ms = rng.random::<f64>() * period;
        devices.push(Device { type_index, malicious, phase_ms });
    }
}

fn sample_type(probs: &[f64], u: f64) -> usize {
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return i;
        }
    }
    probs.len() - 1
}

/// Number of frame arrivals `phase + k * period` (k >= 0) that fall strictly
/// before `window_ms`.
pub fn frames_in_window(period_ms: f64, phase_ms: f64, window_ms: f64) -> u64 {
    debug_assert!(period_ms > 0.0 && phase_ms >= 0.0 && window_ms > 0.0);
    if phase_ms >= window_ms {
        return 0;
    }
    libm::ceil((window_ms - phase_ms) / period_ms) as u64
}

/// Measured and expected traffic of one flow over one sampling window, in
/// bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowMeasurement {
    /// Bits actually transmitted in the window (frame counts times frame
    /// size).
    pub measured_bits: f64,
    /// Bits the flow would carry if every device transmitted at its
    /// legitimate average rate.
    pub expected_bits: f64,
}

/// Counts the traffic of a population over one window.
///
/// Every device contributes to `expected_bits` at its legitimate rate —
/// including malicious ones, whose excess is exactly what detection looks
/// for. The expectation is evaluated as `frame_bits * (window / period)` so
/// that window-divisible periods yield exact equality with the measurement.
pub fn measure_flow(pop: &FlowPopulation, params: &ScenarioParams) -> FlowMeasurement {
    measure_devices(&pop.devices, params)
}

/// [`measure_flow`] over a plain device slice.
pub fn measure_devices(devices: &[Device], params: &ScenarioParams) -> FlowMeasurement {
    let window = params.sampling_period_ms;
    let mut measured = 0.0;
    let mut expected = 0.0;
    for device in devices {
        let spec = params.catalog.spec(device.type_index);
        let frame_bits = f64::from(spec.frame_size_bytes) * 8.0;
        let period = device.effective_period_ms(params);
        measured += frames_in_window(period, device.phase_ms, window) as f64 * frame_bits;
        expected += frame_bits * (window / spec.transmission_period_ms);
    }
    FlowMeasurement { measured_bits: measured, expected_bits: expected }
}
