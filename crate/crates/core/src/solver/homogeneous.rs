use crate::apart::{ApartSet, Combinations};
use crate::coloring::Coloring;
use crate::error::{domain, Error, Result};
use crate::profile::Natural;
use crate::search::Budget;

use super::tuple::{SumColoring, TupleColoring};

/// The lexicographically first subset of `ground` of size `target_size`
/// whose `arity`-tuples all share one color under `tc`.
///
/// `Ok(None)` means no such subset exists in `ground`; running out of budget
/// is an error.
pub fn extract_homogeneous(
    ground: &ApartSet,
    tc: &dyn TupleColoring,
    target_size: usize,
    budget: &mut Budget,
) -> Result<Option<ApartSet>> {
    let arity = tc.arity();
    if arity == 0 {
        return domain("tuple arity must be positive");
    }
    if target_size < arity {
        return domain(format!("target size {target_size} is below arity {arity}"));
    }
    let mut dfs = HomogeneousDfs {
        ground,
        tc,
        target: target_size,
        chosen: Vec::with_capacity(target_size),
        budget,
    };
    Ok(dfs.run(0, None)?.then(|| ground.select(&dfs.chosen)))
}

struct HomogeneousDfs<'a, 'b> {
    ground: &'a ApartSet,
    tc: &'a dyn TupleColoring,
    target: usize,
    chosen: Vec<usize>,
    budget: &'b mut Budget,
}

impl HomogeneousDfs<'_, '_> {
    fn run(&mut self, from: usize, color: Option<u64>) -> Result<bool> {
        if self.chosen.len() == self.target {
            return Ok(true);
        }
        let need = self.target - self.chosen.len();
        for e in from..self.ground.len() {
            if self.ground.len() - e < need {
                break;
            }
            self.budget.tick()?;
            if let Some(color) = self.admits(e, color)? {
                self.chosen.push(e);
                if self.run(e + 1, color)? {
                    return Ok(true);
                }
                self.chosen.pop();
            }
        }
        Ok(false)
    }

    // Checks every tuple ending in `e`; returns the (possibly newly fixed)
    // color on success.
    fn admits(&mut self, e: usize, mut color: Option<u64>) -> Result<Option<Option<u64>>> {
        let arity = self.tc.arity();
        if self.chosen.len() + 1 < arity {
            return Ok(Some(color));
        }
        let elems = self.ground.elements();
        for idx in Combinations::new(self.chosen.len(), arity - 1) {
            self.budget.tick()?;
            let mut tuple: Vec<&Natural> = idx.iter().map(|&i| &elems[self.chosen[i]]).collect();
            tuple.push(&elems[e]);
            let c = self.tc.color(&tuple)?;
            match color {
                None => color = Some(c),
                Some(k) if k != c => return Ok(None),
                _ => {}
            }
        }
        Ok(Some(color))
    }
}

/// Result of `k` successive homogeneous refinements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub h: ApartSet,
    /// `colors[i - 1]` is the color of every sum of exactly `i` elements of `h`.
    pub colors: Vec<u32>,
}

/// `ground ⊇ H_1 ⊇ ... ⊇ H_k`, where `H_i` is homogeneous for
/// `f_i(x_1..x_i) = c(x_1 + ... + x_i)`.
///
/// Stage `i` keeps `target_size + (k - i) * stage_slack` elements.
pub fn iterated_refinement<C: Coloring>(
    ground: &ApartSet,
    c: &C,
    k: usize,
    target_size: usize,
    stage_slack: usize,
    budget: &mut Budget,
) -> Result<Option<Refinement>> {
    if c.colors() != 2 {
        return domain("iterated refinement is defined for 2-colorings");
    }
    if k == 0 || target_size < k {
        return domain(format!(
            "need k >= 1 and target size >= k (k = {k}, target = {target_size})"
        ));
    }
    let mut current = ground.clone();
    for stage in 1..=k {
        let size = target_size + (k - stage) * stage_slack;
        let f = SumColoring::new(c, stage);
        let next = extract_homogeneous(&current, &f, size, budget).map_err(|e| match e {
            Error::BudgetExceeded { limit, .. } => Error::BudgetExceeded {
                limit,
                stage: Some(stage),
            },
            other => other,
        })?;
        match next {
            Some(h) => current = h,
            None => return Ok(None),
        }
    }
    let colors = (1..=k)
        .map(|i| c.color(&current.sum_of(&(0..i).collect::<Vec<_>>())))
        .collect::<Result<_>>()?;
    Ok(Some(Refinement { h: current, colors }))
}
