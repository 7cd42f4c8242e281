use serde::Serialize;

use super::config::ConfigIndex;
use super::TableColoring;
use crate::error::{domain, Result};
use crate::pattern::{instantiate_pattern, LengthPattern};
use crate::search::{first_success, Budget, Workers};

/// How colorings of `[1, n]` are explored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Visit every table and test it with [`super::is_avoiding`].
    FullEnumeration,
    /// Extend colorings position by position, cutting a branch as soon as
    /// a monochromatic instance is completed.
    IncrementalDfs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessStatus {
    Exact,
    LowerBoundOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessResult {
    pub status: WitnessStatus,
    pub value: usize,
    /// Avoids the pattern on `[1, value - 1]` when exact, on `[1, value]`
    /// otherwise. Always the lexicographically least avoider.
    pub certificate: TableColoring,
    pub steps: u64,
}

#[derive(Debug, Clone)]
pub struct WitnessOptions {
    pub budget: u64,
    pub workers: Workers,
    pub require_distinct: bool,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            budget: 50_000_000,
            workers: Workers(1),
            require_distinct: false,
        }
    }
}

// Positions 2..=SHARD_DEPTH+1 are fixed per shard; position 1 is pinned to
// color 0 since patterns are invariant under color permutations.
const SHARD_DEPTH: usize = 4;

/// Least `n <= max_n` such that every `r`-coloring of `[1, n]` contains a
/// monochromatic instance of `pattern`.
pub fn witness_number(
    pattern: &LengthPattern,
    r: u32,
    max_n: usize,
    strategy: Strategy,
    opts: &WitnessOptions,
) -> Result<WitnessResult> {
    pattern.validate()?;
    if r == 0 {
        return domain("at least one color is required");
    }
    if max_n == 0 {
        return domain("max_n must be at least 1");
    }
    let instances = Instances::new(pattern, max_n, opts.require_distinct);
    let mut budget = Budget::new(opts.budget);
    let mut last_avoider = TableColoring::new(r, Vec::new())?;
    for n in 1..=max_n {
        let search = Search {
            pattern,
            instances: &instances,
            r,
            n,
            require_distinct: opts.require_distinct,
        };
        match search.least_avoider(strategy, &mut budget, opts.workers)? {
            Some(avoider) => last_avoider = TableColoring::new(r, avoider)?,
            None => {
                return Ok(WitnessResult {
                    status: WitnessStatus::Exact,
                    value: n,
                    certificate: last_avoider,
                    steps: budget.used(),
                })
            }
        }
    }
    Ok(WitnessResult {
        status: WitnessStatus::LowerBoundOnly,
        value: max_n,
        certificate: last_avoider,
        steps: budget.used(),
    })
}

/// Pattern instances within `[1, max_n]`, grouped by largest element.
struct Instances {
    by_max: Vec<Vec<Vec<usize>>>,
}

impl Instances {
    fn new(pattern: &LengthPattern, max_n: usize, require_distinct: bool) -> Self {
        let mut by_max = vec![Vec::new(); max_n + 1];
        let mut seen = std::collections::BTreeSet::new();
        for params in pattern.params_within(max_n, require_distinct) {
            if let Ok(set) = instantiate_pattern(pattern, &params) {
                let inst: Vec<usize> = set.into_iter().collect();
                if seen.insert(inst.clone()) {
                    by_max[*inst.last().unwrap()].push(inst);
                }
            }
        }
        Instances { by_max }
    }

    /// Does assigning position `p` (1-based) complete a monochromatic instance?
    fn completes_mono(&self, table: &[u32], p: usize) -> bool {
        self.by_max[p]
            .iter()
            .any(|inst| inst.iter().all(|&i| table[i - 1] == table[p - 1]))
    }
}

struct Search<'a> {
    pattern: &'a LengthPattern,
    instances: &'a Instances,
    r: u32,
    n: usize,
    require_distinct: bool,
}

impl Search<'_> {
    fn least_avoider(
        &self,
        strategy: Strategy,
        budget: &mut Budget,
        workers: Workers,
    ) -> Result<Option<Vec<u32>>> {
        let depth = SHARD_DEPTH.min(self.n - 1);
        let shards = (self.r as usize).pow(depth as u32);
        let found = first_success(shards, budget, workers, |shard, b| {
            let prefix = self.shard_prefix(shard, depth);
            match strategy {
                Strategy::FullEnumeration => self.enumerate(prefix, b),
                Strategy::IncrementalDfs => self.dfs(prefix, b),
            }
        })?;
        Ok(found.map(|(_, t)| t))
    }

    // Color 0 at position 1, then `shard` written in base r over the next
    // `depth` positions, most significant first.
    fn shard_prefix(&self, mut shard: usize, depth: usize) -> Vec<u32> {
        let mut digits = vec![0u32; depth];
        for d in digits.iter_mut().rev() {
            *d = (shard % self.r as usize) as u32;
            shard /= self.r as usize;
        }
        let mut prefix = vec![0u32];
        prefix.extend(digits);
        prefix
    }

    fn enumerate(&self, prefix: Vec<u32>, budget: &mut Budget) -> Result<Option<Vec<u32>>> {
        let free = self.n - prefix.len();
        let index = ConfigIndex::new(self.pattern, self.n, self.require_distinct);
        let mut table = prefix.clone();
        table.resize(self.n, 0);
        loop {
            budget.tick()?;
            if index.find(&table).is_none() {
                return Ok(Some(table));
            }
            let suffix = &mut table[prefix.len()..];
            // next suffix in lexicographic order
            let mut i = free;
            loop {
                if i == 0 {
                    return Ok(None);
                }
                i -= 1;
                if suffix[i] + 1 < self.r {
                    suffix[i] += 1;
                    suffix[i + 1..].fill(0);
                    break;
                }
            }
        }
    }

    fn dfs(&self, prefix: Vec<u32>, budget: &mut Budget) -> Result<Option<Vec<u32>>> {
        let mut table = Vec::with_capacity(self.n);
        for c in prefix {
            budget.tick()?;
            table.push(c);
            if self.instances.completes_mono(&table, table.len()) {
                return Ok(None);
            }
        }
        if self.extend(&mut table, budget)? {
            Ok(Some(table))
        } else {
            Ok(None)
        }
    }

    fn extend(&self, table: &mut Vec<u32>, budget: &mut Budget) -> Result<bool> {
        if table.len() == self.n {
            return Ok(true);
        }
        for color in 0..self.r {
            budget.tick()?;
            table.push(color);
            if !self.instances.completes_mono(table, table.len()) && self.extend(table, budget)? {
                return Ok(true);
            }
            table.pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::is_avoiding;

    fn both(pattern: &LengthPattern, r: u32, max_n: usize) -> WitnessResult {
        let opts = WitnessOptions::default();
        let full = witness_number(pattern, r, max_n, Strategy::FullEnumeration, &opts).unwrap();
        let dfs = witness_number(pattern, r, max_n, Strategy::IncrementalDfs, &opts).unwrap();
        assert_eq!(full.status, dfs.status);
        assert_eq!(full.value, dfs.value);
        assert_eq!(full.certificate, dfs.certificate);
        dfs
    }

    #[test]
    fn schur_two_colors() {
        let w = both(&LengthPattern::Schur, 2, 10);
        assert_eq!(w.status, WitnessStatus::Exact);
        assert_eq!(w.value, 5);
        assert_eq!(w.certificate.table(), &[0, 1, 1, 0]);
    }

    #[test]
    fn three_term_progressions_two_colors() {
        let w = both(&LengthPattern::Vdw { len: 3 }, 2, 12);
        assert_eq!(w.status, WitnessStatus::Exact);
        assert_eq!(w.value, 9);
        assert_eq!(w.certificate.table(), &[0, 0, 1, 1, 0, 0, 1, 1]);
    }

    #[test]
    fn one_color() {
        let w = both(&LengthPattern::Vdw { len: 3 }, 1, 5);
        assert_eq!((w.status, w.value), (WitnessStatus::Exact, 3));
        assert_eq!(w.certificate.table(), &[0, 0]);
    }

    #[test]
    fn lower_bound_when_max_is_too_small() {
        let w = both(&LengthPattern::Vdw { len: 3 }, 2, 6);
        assert_eq!((w.status, w.value), (WitnessStatus::LowerBoundOnly, 6));
        assert_eq!(w.certificate.n(), 6);
        assert!(is_avoiding(&w.certificate, &LengthPattern::Vdw { len: 3 }));
    }

    #[test]
    fn explicit_singleton_is_immediate() {
        let w = both(&LengthPattern::Explicit([1].into()), 3, 4);
        assert_eq!((w.status, w.value), (WitnessStatus::Exact, 1));
        assert_eq!(w.certificate.n(), 0);
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let opts = WitnessOptions {
            budget: 50,
            ..Default::default()
        };
        for s in [Strategy::FullEnumeration, Strategy::IncrementalDfs] {
            let r = witness_number(&LengthPattern::Vdw { len: 3 }, 2, 12, s, &opts);
            assert!(
                matches!(r, Err(crate::Error::BudgetExceeded { .. })),
                "{s:?}"
            );
        }
    }

    #[test]
    fn workers_do_not_change_results() {
        for s in [Strategy::FullEnumeration, Strategy::IncrementalDfs] {
            let one = witness_number(
                &LengthPattern::Brauer { len: 3, s: 1 },
                2,
                30,
                s,
                &WitnessOptions::default(),
            )
            .unwrap();
            let many = witness_number(
                &LengthPattern::Brauer { len: 3, s: 1 },
                2,
                30,
                s,
                &WitnessOptions {
                    workers: Workers(8),
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(one, many);
        }
    }
}
