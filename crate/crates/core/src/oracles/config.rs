use std::collections::BTreeSet;

use serde::Serialize;

use super::TableColoring;
use crate::pattern::{instantiate_pattern, LengthPattern, PatternParams};

/// A monochromatic instance of a pattern inside a table coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigWitness {
    pub params: PatternParams,
    pub color: u32,
    pub instance: BTreeSet<usize>,
}

/// The lexicographically least parameters whose instance lies in `[1, n]`
/// and is monochromatic under `c`.
pub fn find_mono_config(c: &TableColoring, pattern: &LengthPattern) -> Option<ConfigWitness> {
    find_mono_config_with(c, pattern, false)
}

pub fn find_mono_config_with(
    c: &TableColoring,
    pattern: &LengthPattern,
    require_distinct: bool,
) -> Option<ConfigWitness> {
    ConfigIndex::new(pattern, c.n(), require_distinct).find(c.table())
}

/// Every admissible `(params, instance)` within `[1, n]`, in parameter order.
pub(crate) struct ConfigIndex {
    entries: Vec<(PatternParams, Vec<usize>)>,
}

impl ConfigIndex {
    pub(crate) fn new(pattern: &LengthPattern, n: usize, require_distinct: bool) -> Self {
        let entries = pattern
            .params_within(n, require_distinct)
            .filter_map(|p| {
                let inst = instantiate_pattern(pattern, &p).ok()?;
                Some((p, inst.into_iter().collect()))
            })
            .collect();
        ConfigIndex { entries }
    }

    /// `table[i - 1]` is the color of `i`.
    pub(crate) fn find(&self, table: &[u32]) -> Option<ConfigWitness> {
        self.entries.iter().find_map(|(params, inst)| {
            let first = table[inst[0] - 1];
            inst.iter()
                .all(|&i| table[i - 1] == first)
                .then(|| ConfigWitness {
                    params: params.clone(),
                    color: first,
                    instance: inst.iter().copied().collect(),
                })
        })
    }
}

/// True iff `c` has no monochromatic instance of `pattern`.
pub fn is_avoiding(c: &TableColoring, pattern: &LengthPattern) -> bool {
    find_mono_config(c, pattern).is_none()
}
