use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Provenance attached to every emitted artifact.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub tolerances: BTreeMap<String, f64>,
    pub grid_resolutions: BTreeMap<String, usize>,
    pub version: String,
    /// Left out of CSV headers so that repeated runs stay byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_seconds: Option<f64>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            ..Self::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.into(), value.into());
        self
    }

    pub fn tolerance(mut self, key: &str, value: f64) -> Self {
        self.tolerances.insert(key.into(), value);
        self
    }

    pub fn grid(mut self, key: &str, value: usize) -> Self {
        self.grid_resolutions.insert(key.into(), value);
        self
    }

    /// The manifest without timing, as used in CSV headers.
    pub fn deterministic(&self) -> Self {
        Self {
            wall_clock_seconds: None,
            ..self.clone()
        }
    }
}
