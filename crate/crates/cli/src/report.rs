use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// What a command run produced, as printed in `--format json` mode.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the canonical input rendering; absent for corpus commands.
    pub input_digest: Option<String>,
    pub result: Value,
    pub validation: BTreeMap<String, bool>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn validated(&self) -> bool {
        self.validation.values().all(|ok| *ok)
    }
}
