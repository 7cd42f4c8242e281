use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    NotFound,
    BudgetExceeded,
    InvalidInput,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::NotFound | Status::BudgetExceeded => 1,
            Status::InvalidInput => 2,
        }
    }

    pub fn of_error(e: &Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Status::BudgetExceeded,
            Error::WitnessUnknown { .. } | Error::InsufficientWitness(_) => Status::NotFound,
            Error::Domain(_) | Error::OutsideColoring { .. } | Error::Parse(_) => {
                Status::InvalidInput
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub version: String,
    /// SHA-256 of every file read, keyed by its role.
    pub inputs: BTreeMap<String, String>,
    pub budget_limit: Option<u64>,
    pub budget_used: Option<u64>,
}

impl Default for Provenance {
    fn default() -> Self {
        Provenance {
            version: env!("CARGO_PKG_VERSION").to_string(),
            inputs: BTreeMap::new(),
            budget_limit: None,
            budget_used: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub status: Status,
    pub payload: Value,
    pub provenance: Provenance,
}

impl Report {
    pub fn from_error(e: &Error, provenance: Provenance) -> Self {
        let mut payload = json!({ "error": e.to_string() });
        if let Error::BudgetExceeded { limit, stage } = e {
            payload["limit"] = json!(limit);
            payload["stage"] = json!(stage);
        }
        Report {
            status: Status::of_error(e),
            payload,
            provenance,
        }
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
