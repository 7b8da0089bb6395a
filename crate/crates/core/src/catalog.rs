//! IoT device type catalog: periodic-transmitter specifications and their
//! legitimate data rates.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Tolerance for the type-probability normalization check.
pub const PROBABILITY_SUM_TOLERANCE: f64 = 1e-12;

/// One IoT device type: a fixed-size frame transmitted at a fixed period.
///
/// `transmission_period_ms` is a period (a device of the factory-automation
/// catalog's first type sends one 15-byte frame every 50 ms). The latency
/// bound, loss-rate target and the free-text columns are carried as metadata
/// only; nothing in this crate computes with them.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviceTypeSpec {
    /// Index of this type inside its catalog (0-based).
    pub id: usize,
    pub name: String,
    /// Time between consecutive frames of a legitimate device, in ms.
    pub transmission_period_ms: f64,
    /// Payload size of one frame, in bytes.
    pub frame_size_bytes: u32,
    /// QoS latency bound in ms (metadata).
    pub latency_bound_ms: Option<f64>,
    /// QoS packet-loss-rate target (metadata).
    pub reliability_plr: Option<f64>,
    /// Deployment density, free text (metadata).
    pub device_density: Option<String>,
    /// Communication range, free text (metadata).
    pub communication_range: Option<String>,
    /// Mobility class, free text (metadata).
    pub mobility: Option<String>,
}

impl DeviceTypeSpec {
    /// Legitimate data rate in bits per second: one `frame_size_bytes` frame
    /// per `transmission_period_ms`.
    ///
    /// Evaluated as `bits * 1000 / period_ms` so that catalogs with exact
    /// millisecond periods (like the builtin one) produce exact integer
    /// rates.
    pub fn legit_rate_bps(&self) -> f64 {
        f64::from(self.frame_size_bytes) * 8.0 * 1000.0 / self.transmission_period_ms
    }

    fn validate(&self, expected_id: usize) -> Result<()> {
        if self.id != expected_id {
            return Err(Error::InvalidInput(alloc::format!(
                "type id {} does not match its position {expected_id}",
                self.id
            )));
        }
        if !(self.transmission_period_ms > 0.0) || !self.transmission_period_ms.is_finite() {
            return Err(Error::InvalidInput(alloc::format!(
                "type {expected_id}: transmission period must be positive and finite"
            )));
        }
        if self.frame_size_bytes == 0 {
            return Err(Error::InvalidInput(alloc::format!(
                "type {expected_id}: frame size must be positive"
            )));
        }
        Ok(())
    }
}

/// An ordered set of device types together with the probability of a device
/// being of each type.
///
/// Immutable after construction; share freely across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    types: Vec<DeviceTypeSpec>,
    type_probabilities: Vec<f64>,
}

impl Catalog {
    /// Builds a catalog, enforcing the invariants: ids match positions,
    /// periods and frame sizes are positive, probabilities are non-negative
    /// and sum to 1 within [`PROBABILITY_SUM_TOLERANCE`].
    pub fn new(types: Vec<DeviceTypeSpec>, type_probabilities: Vec<f64>) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::InvalidInput("catalog needs at least one type".into()));
        }
        if types.len() != type_probabilities.len() {
            return Err(Error::InvalidInput(alloc::format!(
                "{} types but {} probabilities",
                types.len(),
                type_probabilities.len()
            )));
        }
        for (i, spec) in types.iter().enumerate() {
            spec.validate(i)?;
        }
        let mut sum = 0.0;
        for &p in &type_probabilities {
            if !(p >= 0.0) || !p.is_finite() {
                return Err(Error::InvalidInput("type probabilities must be non-negative".into()));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > PROBABILITY_SUM_TOLERANCE {
            return Err(Error::InvalidInput(alloc::format!(
                "type probabilities sum to {sum}, expected 1"
            )));
        }
        Ok(Self { types, type_probabilities })
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn types(&self) -> &[DeviceTypeSpec] {
        &self.types
    }

    pub fn type_probabilities(&self) -> &[f64] {
        &self.type_probabilities
    }

    pub fn spec(&self, type_index: usize) -> &DeviceTypeSpec {
        &self.types[type_index]
    }

    pub fn probability(&self, type_index: usize) -> f64 {
        self.type_probabilities[type_index]
    }

    /// Legitimate rates of all types, in bits per second.
    pub fn rates_bps(&self) -> Vec<f64> {
        self.types.iter().map(DeviceTypeSpec::legit_rate_bps).collect()
    }

    /// Probability-weighted mean legitimate rate in bits per second.
    pub fn mean_rate_bps(&self) -> f64 {
        self.types
            .iter()
            .zip(&self.type_probabilities)
            .map(|(spec, p)| spec.legit_rate_bps() * p)
            .sum()
    }
}

fn factory_type(
    id: usize,
    name: &str,
    latency_ms: f64,
    period_ms: f64,
    frame_bytes: u32,
) -> DeviceTypeSpec {
    DeviceTypeSpec {
        id,
        name: name.into(),
        transmission_period_ms: period_ms,
        frame_size_bytes: frame_bytes,
        latency_bound_ms: Some(latency_ms),
        reliability_plr: Some(1e-9),
        device_density: Some("0.33 to 3 devices/m^3".into()),
        communication_range: Some("50 to 100 m".into()),
        mobility: Some("< 30 km/h".into()),
    }
}

/// The builtin factory-automation catalog: four periodic device classes with
/// uniform type probabilities. Derived rates are exactly
/// `[2400, 800000, 120000, 24000]` bit/s.
pub fn builtin_factory_catalog() -> Catalog {
    let types = alloc::vec![
        factory_type(0, "manufacturing cell", 5.0, 50.0, 15),
        factory_type(1, "machine tools", 0.25, 0.5, 50),
        factory_type(2, "printing machines", 1.0, 2.0, 30),
        factory_type(3, "packaging machines", 25.0, 5.0, 15),
    ];
    let probs = alloc::vec![0.25; 4];
    Catalog::new(types, probs).expect("builtin catalog is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legit_rates_match_known_values() {
        let cat = builtin_factory_catalog();
        assert_eq!(cat.spec(0).legit_rate_bps(), 2400.0);
        assert_eq!(cat.spec(1).legit_rate_bps(), 800_000.0);
        assert_eq!(cat.rates_bps(), vec![2400.0, 800_000.0, 120_000.0, 24_000.0]);
    }

    #[test]
    fn legit_rate_unit_conversion() {
        let spec = DeviceTypeSpec {
            id: 0,
            name: "hypothetical".into(),
            transmission_period_ms: 1000.0,
            frame_size_bytes: 1,
            latency_bound_ms: None,
            reliability_plr: None,
            device_density: None,
            communication_range: None,
            mobility: None,
        };
        assert_eq!(spec.legit_rate_bps(), 8.0);
    }

    #[test]
    fn builtin_catalog_shape() {
        let cat = builtin_factory_catalog();
        assert_eq!(cat.len(), 4);
        let periods: Vec<f64> =
            cat.types().iter().map(|t| t.transmission_period_ms).collect();
        assert_eq!(periods, vec![50.0, 0.5, 2.0, 5.0]);
        let frames: Vec<u32> = cat.types().iter().map(|t| t.frame_size_bytes).collect();
        assert_eq!(frames, vec![15, 50, 30, 15]);
        assert!(cat.type_probabilities().iter().all(|&p| p == 0.25));
    }

    #[test]
    fn mean_rate_of_builtin_catalog() {
        // Independent recomputation: (2400 + 800000 + 120000 + 24000) / 4.
        let by_hand = (2400.0 + 800_000.0 + 120_000.0 + 24_000.0) / 4.0;
        assert_eq!(by_hand, 236_600.0);
        assert_eq!(builtin_factory_catalog().mean_rate_bps(), 236_600.0);
    }

    #[test]
    fn mean_rate_degenerate_mixtures() {
        let base = builtin_factory_catalog();
        let single = Catalog::new(
            vec![base.spec(1).clone()].into_iter().map(|mut t| { t.id = 0; t }).collect(),
            vec![1.0],
        )
        .unwrap();
        assert_eq!(single.mean_rate_bps(), 800_000.0);

        let point_mass =
            Catalog::new(base.types().to_vec(), vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(point_mass.mean_rate_bps(), 2400.0);
    }

    #[test]
    fn mean_rate_is_linear_in_probabilities() {
        let base = builtin_factory_catalog();
        let a = Catalog::new(base.types().to_vec(), vec![0.7, 0.1, 0.1, 0.1]).unwrap();
        let b = Catalog::new(base.types().to_vec(), vec![0.1, 0.3, 0.3, 0.3]).unwrap();
        let mixed = Catalog::new(base.types().to_vec(), vec![0.4, 0.2, 0.2, 0.2]).unwrap();
        let expect = 0.5 * a.mean_rate_bps() + 0.5 * b.mean_rate_bps();
        assert!((mixed.mean_rate_bps() - expect).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_probabilities() {
        let base = builtin_factory_catalog();
        assert!(Catalog::new(base.types().to_vec(), vec![0.25; 3]).is_err());
        assert!(Catalog::new(base.types().to_vec(), vec![0.3, 0.3, 0.3, 0.3]).is_err());
        assert!(Catalog::new(base.types().to_vec(), vec![-0.25, 0.5, 0.5, 0.25]).is_err());
    }

    #[test]
    fn rejects_bad_specs() {
        let mut types = builtin_factory_catalog().types().to_vec();
        types[2].transmission_period_ms = 0.0;
        assert!(Catalog::new(types, vec![0.25; 4]).is_err());

        let mut types = builtin_factory_catalog().types().to_vec();
        types[1].id = 3;
        assert!(Catalog::new(types, vec![0.25; 4]).is_err());
    }
}
