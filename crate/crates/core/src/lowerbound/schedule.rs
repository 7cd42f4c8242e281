use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// A finite staged enumeration: `(stage, element)` pairs with strictly
/// increasing stages and distinct elements. `x ∈ K[k]` iff `x` is listed at
/// a stage `<= k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EnumerationSchedule {
    entries: Vec<(u64, u64)>,
}

impl EnumerationSchedule {
    pub fn new(entries: Vec<(u64, u64)>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0].0 >= w[1].0) {
            return domain("schedule stages must be strictly increasing");
        }
        let distinct: BTreeSet<u64> = entries.iter().map(|e| e.1).collect();
        if distinct.len() != entries.len() {
            return domain("schedule elements must be pairwise distinct");
        }
        Ok(EnumerationSchedule { entries })
    }

    pub fn empty() -> Self {
        EnumerationSchedule::default()
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    /// `K[k]`.
    pub fn k_at(&self, k: u64) -> BTreeSet<u64> {
        self.entries
            .iter()
            .take_while(|(s, _)| *s <= k)
            .map(|&(_, x)| x)
            .collect()
    }

    /// The full set `K`.
    pub fn k(&self) -> BTreeSet<u64> {
        self.entries.iter().map(|&(_, x)| x).collect()
    }

    pub fn stage_of(&self, x: u64) -> Option<u64> {
        self.entries.iter().find(|e| e.1 == x).map(|e| e.0)
    }

    pub fn contains(&self, x: u64) -> bool {
        self.stage_of(x).is_some()
    }

    pub fn contains_at(&self, x: u64, k: u64) -> bool {
        self.stage_of(x).is_some_and(|s| s <= k)
    }

    pub fn max_stage(&self) -> Option<u64> {
        self.entries.last().map(|e| e.0)
    }

    /// Only the entries enumerated by stage `k`.
    pub fn truncated(&self, k: u64) -> Self {
        EnumerationSchedule {
            entries: self
                .entries
                .iter()
                .copied()
                .take_while(|(s, _)| *s <= k)
                .collect(),
        }
    }

    /// Element to stage, for repeated lookups.
    pub fn stage_map(&self) -> BTreeMap<u64, u64> {
        self.entries.iter().map(|&(s, x)| (x, s)).collect()
    }

    /// One `stage element` pair per line.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|(s, x)| format!("{s} {x}\n"))
            .collect()
    }
}

impl fmt::Display for EnumerationSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for EnumerationSchedule {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (no, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = || {
                Error::Parse(format!(
                    "schedule line {}: expected `stage element`, got {line:?}",
                    no + 1
                ))
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [s, x] = fields.as_slice() else {
                return Err(bad());
            };
            entries.push((s.parse().map_err(|_| bad())?, x.parse().map_err(|_| bad())?));
        }
        EnumerationSchedule::new(entries).map_err(|e| Error::Parse(e.to_string()))
    }
}
