use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::homogeneous::{extract_homogeneous, iterated_refinement};
use super::solution::{verify_solution, Solution, VerifyReport};
use super::tuple::{DerivedTupleColoring, TupleColoring};
use crate::apart::{ApartSet, Combinations};
use crate::coloring::Coloring;
use crate::error::{domain, Error, Result};
use crate::oracles::{
    find_mono_config_with, witness_number, Strategy, TableColoring, WitnessOptions, WitnessStatus,
};
use crate::pattern::{instantiate_pattern_with, LengthPattern};
use crate::profile::Natural;
use crate::search::{first_success, Budget, Workers};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMode {
    /// One homogeneous set for the derived tuple coloring `g_k`.
    Pipeline,
    /// `k` successive refinements by `f_i`.
    Iterated,
    /// Exhaustive search over parameters, colors and apart subsets.
    Direct,
}

impl fmt::Display for SolveMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveMode::Pipeline => "pipeline",
            SolveMode::Iterated => "iterated",
            SolveMode::Direct => "direct",
        })
    }
}

impl FromStr for SolveMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pipeline" => Ok(SolveMode::Pipeline),
            "iterated" => Ok(SolveMode::Iterated),
            "direct" => Ok(SolveMode::Direct),
            _ => Err(Error::Parse(format!("unknown solve mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveConfig {
    pub mode: SolveMode,
    pub ground: ApartSet,
    /// Size of the apart set searched for (before any prefix restriction).
    pub target_size: usize,
    /// Step budget shared by every phase of the run.
    pub budget: u64,
    /// Search bound for the pattern's witness number (pipeline, iterated).
    pub max_n: usize,
    /// Extra elements kept per remaining stage in iterated mode.
    pub stage_slack: usize,
    pub require_distinct: bool,
    pub workers: Workers,
}

impl SolveConfig {
    pub fn new(mode: SolveMode, ground: ApartSet, target_size: usize) -> Self {
        SolveConfig {
            mode,
            ground,
            target_size,
            budget: 10_000_000,
            max_n: 32,
            stage_slack: 0,
            require_distinct: false,
            workers: Workers(1),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub solution: Solution,
    pub verify: VerifyReport,
    pub mode: SolveMode,
    pub budget_used: u64,
    /// Witness number used as the Ramsey arity (pipeline, iterated).
    pub core_k: Option<usize>,
    /// Induced coloring `C(i)` of the sum lengths `[1, k]`.
    pub induced: Option<TableColoring>,
    /// The homogeneous set before restriction to the exported prefix.
    pub homogeneous: Option<ApartSet>,
}

/// Searches for a [`Solution`]. `Ok(None)` means the search space was
/// exhausted without success.
pub fn solve<C: Coloring>(
    c: &C,
    pattern: &LengthPattern,
    cfg: &SolveConfig,
) -> Result<Option<SolveOutcome>> {
    pattern.validate()?;
    if cfg.target_size == 0 || cfg.budget == 0 {
        return domain("target size and budget must be positive");
    }
    let mut budget = Budget::new(cfg.budget);
    let found = match cfg.mode {
        SolveMode::Direct => direct(c, pattern, cfg, &mut budget)?.map(|s| (s, None, None, None)),
        SolveMode::Pipeline | SolveMode::Iterated => ramsey(c, pattern, cfg, &mut budget)?,
    };
    let Some((solution, core_k, induced, homogeneous)) = found else {
        return Ok(None);
    };
    let verify = verify_solution(c, &solution);
    if !verify.verified {
        return Err(Error::Domain(format!(
            "internal: produced solution failed verification: {}",
            verify.reason.clone().unwrap_or_default()
        )));
    }
    Ok(Some(SolveOutcome {
        solution,
        verify,
        mode: cfg.mode,
        budget_used: budget.used(),
        core_k,
        induced,
        homogeneous,
    }))
}

type RamseyFound = (
    Solution,
    Option<usize>,
    Option<TableColoring>,
    Option<ApartSet>,
);

fn ramsey<C: Coloring>(
    c: &C,
    pattern: &LengthPattern,
    cfg: &SolveConfig,
    budget: &mut Budget,
) -> Result<Option<RamseyFound>> {
    if c.colors() != 2 {
        return domain(format!("{} mode is defined for 2-colorings only", cfg.mode));
    }
    let opts = WitnessOptions {
        budget: budget.remaining(),
        workers: cfg.workers,
        require_distinct: cfg.require_distinct,
    };
    let w = witness_number(pattern, 2, cfg.max_n, Strategy::IncrementalDfs, &opts)?;
    budget.charge(w.steps)?;
    if w.status != WitnessStatus::Exact {
        return Err(Error::WitnessUnknown {
            pattern: pattern.to_string(),
            max_n: cfg.max_n,
        });
    }
    let k = w.value;
    if cfg.target_size < k {
        return domain(format!(
            "target size {} is below the core arity k = {k}",
            cfg.target_size
        ));
    }

    let (h, exported, colors) = match cfg.mode {
        SolveMode::Pipeline => {
            let g = DerivedTupleColoring::new(c, k)?;
            let Some(h) = extract_homogeneous(&cfg.ground, &g, cfg.target_size, budget)? else {
                return Ok(None);
            };
            let first: Vec<&Natural> = h.elements()[..k].iter().collect();
            let sigma = g.color(&first)?;
            let colors: Vec<u32> = (0..k).map(|i| (sigma >> i & 1) as u32).collect();
            // i-subsets of the first |H| - (k - i) elements extend to k-tuples.
            let exported = h.prefix(h.len() + 1 - k);
            (Some(h), exported, colors)
        }
        _ => {
            let Some(r) =
                iterated_refinement(&cfg.ground, c, k, cfg.target_size, cfg.stage_slack, budget)?
            else {
                return Ok(None);
            };
            (None, r.h, r.colors)
        }
    };

    let induced = TableColoring::new(2, colors)?;
    let cw = find_mono_config_with(&induced, pattern, cfg.require_distinct).ok_or_else(|| {
        Error::Domain(format!(
            "induced coloring of [1, {k}] has no instance of {pattern}"
        ))
    })?;
    let max_len = *cw.instance.last().expect("non-empty instance");
    if exported.len() < max_len {
        return Err(Error::InsufficientWitness(format!(
            "exported set has {} elements but max(A) = {max_len}; raise the target size",
            exported.len()
        )));
    }
    let solution = Solution {
        h: exported.elements().to_vec(),
        pattern: pattern.clone(),
        params: cw.params,
        lengths: cw.instance,
        color: cw.color,
    };
    Ok(Some((solution, Some(k), Some(induced), h)))
}

/// Canonical order: parameters (lexicographic), then color, then subsets of
/// the ground of size `target_size` in lexicographic order.
fn direct<C: Coloring>(
    c: &C,
    pattern: &LengthPattern,
    cfg: &SolveConfig,
    budget: &mut Budget,
) -> Result<Option<Solution>> {
    let ground = &cfg.ground;
    if ground.len() < cfg.target_size {
        return domain(format!(
            "ground has {} elements, target is {}",
            ground.len(),
            cfg.target_size
        ));
    }
    for params in pattern.params_within(cfg.target_size, cfg.require_distinct) {
        let lengths = instantiate_pattern_with(pattern, &params, cfg.require_distinct)?;
        for color in 0..c.colors() {
            let search = SubsetSearch {
                c,
                ground,
                lengths: &lengths,
                color,
                target: cfg.target_size,
            };
            let roots = search.roots(budget)?;
            let hit = first_success(ground.len(), budget, cfg.workers, |first, b| {
                if !roots[first] {
                    return Ok(None);
                }
                search.search_from(first, b)
            })?;
            if let Some((_, idx)) = hit {
                return Ok(Some(Solution {
                    h: ground.select(&idx).elements().to_vec(),
                    pattern: pattern.clone(),
                    params,
                    lengths,
                    color,
                }));
            }
        }
    }
    Ok(None)
}

/// Depth-first search over subsets with forward checking: every candidate
/// kept at a node is compatible with all sums of the current partial set.
struct SubsetSearch<'a, C> {
    c: &'a C,
    ground: &'a ApartSet,
    lengths: &'a BTreeSet<usize>,
    color: u32,
    target: usize,
}

impl<C: Coloring> SubsetSearch<'_, C> {
    fn check(&self, s: &Natural, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        Ok(self.c.color(s)? == self.color)
    }

    // Elements allowed as singletons.
    fn roots(&self, budget: &mut Budget) -> Result<Vec<bool>> {
        self.ground
            .elements()
            .iter()
            .map(|x| {
                if self.lengths.contains(&1) {
                    self.check(x, budget)
                } else {
                    Ok(true)
                }
            })
            .collect()
    }

    fn search_from(&self, first: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
        let roots = self.roots(budget)?;
        let cands: Vec<usize> = (first + 1..self.ground.len())
            .filter(|&j| roots[j])
            .collect();
        let mut chosen = vec![first];
        let cands = self.filter(&chosen, &cands, budget)?;
        Ok(self.extend(&mut chosen, cands, budget)?.then_some(chosen))
    }

    fn extend(
        &self,
        chosen: &mut Vec<usize>,
        cands: Vec<usize>,
        budget: &mut Budget,
    ) -> Result<bool> {
        if chosen.len() == self.target {
            return Ok(true);
        }
        if chosen.len() + cands.len() < self.target {
            return Ok(false);
        }
        for (pos, &e) in cands.iter().enumerate() {
            if chosen.len() + cands.len() - pos < self.target {
                break;
            }
            budget.tick()?;
            chosen.push(e);
            let next = self.filter(chosen, &cands[pos + 1..], budget)?;
            if self.extend(chosen, next, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    // Keeps candidates `j` for which every sum of a length in A made of the
    // newest chosen element, `j`, and other chosen elements has the color.
    fn filter(&self, chosen: &[usize], cands: &[usize], budget: &mut Budget) -> Result<Vec<usize>> {
        let (&newest, older) = chosen.split_last().expect("non-empty");
        let elems = self.ground.elements();
        let mut partials = Vec::new();
        for &len in self.lengths.range(2..) {
            if len - 2 > older.len() {
                break;
            }
            for idx in Combinations::new(older.len(), len - 2) {
                let mut s = elems[newest].clone();
                for i in idx {
                    s += &elems[older[i]];
                }
                partials.push(s);
            }
        }
        let mut kept = Vec::with_capacity(cands.len());
        'cand: for &j in cands {
            for p in &partials {
                if !self.check(&(p + &elems[j]), budget)? {
                    continue 'cand;
                }
            }
            kept.push(j);
        }
        Ok(kept)
    }
}
