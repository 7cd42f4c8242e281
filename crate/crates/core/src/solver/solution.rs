use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::apart::{fs_lengths, is_apart, ApartSet};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::pattern::{instantiate_pattern, LengthPattern, PatternParams};
use crate::profile::Natural;

/// An apart set `h` and pattern parameters such that `FS^A(h)` is
/// monochromatic of `color`, where `A = instantiate_pattern(pattern, params)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// Kept as a raw list so that malformed candidates can be represented
    /// and rejected by [`verify_solution`].
    pub h: Vec<Natural>,
    pub pattern: LengthPattern,
    pub params: PatternParams,
    pub lengths: BTreeSet<usize>,
    pub color: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub verified: bool,
    pub reason: Option<String>,
    /// Distinct colors seen on `FS^A(h)` (empty if checking stopped early).
    pub colors_seen: BTreeSet<u32>,
    pub sums_checked: usize,
}

impl VerifyReport {
    fn reject(reason: impl Into<String>) -> Self {
        VerifyReport {
            verified: false,
            reason: Some(reason.into()),
            colors_seen: BTreeSet::new(),
            sums_checked: 0,
        }
    }
}

pub fn verify_solution<C: Coloring + ?Sized>(c: &C, sol: &Solution) -> VerifyReport {
    match is_apart(&sol.h) {
        Ok(true) => {}
        Ok(false) => return VerifyReport::reject("H is not apart"),
        Err(e) => return VerifyReport::reject(format!("H is malformed: {e}")),
    }
    match instantiate_pattern(&sol.pattern, &sol.params) {
        Ok(a) if a == sol.lengths => {}
        Ok(a) => {
            return VerifyReport::reject(format!(
                "A = {:?} does not match instantiated {a:?}",
                sol.lengths
            ))
        }
        Err(e) => return VerifyReport::reject(e.to_string()),
    }
    let max_len = *sol.lengths.last().expect("instantiated sets are non-empty");
    if sol.h.len() < max_len {
        return VerifyReport::reject(format!("|H| = {} < max(A) = {max_len}", sol.h.len()));
    }
    let h = ApartSet::new(sol.h.clone()).expect("apartness checked above");
    let sums = match fs_lengths(&h, &sol.lengths) {
        Ok(s) => s,
        Err(e) => return VerifyReport::reject(e.to_string()),
    };
    let mut colors_seen = BTreeSet::new();
    let mut reason = None;
    for s in &sums {
        match c.color(s) {
            Ok(k) => {
                colors_seen.insert(k);
                if k != sol.color && reason.is_none() {
                    reason = Some(format!("sum {s} has color {k}, expected {}", sol.color));
                }
            }
            Err(e) => {
                reason = Some(format!("coloring domain exceeded: {e}"));
                break;
            }
        }
    }
    VerifyReport {
        verified: reason.is_none(),
        reason,
        colors_seen,
        sums_checked: sums.len(),
    }
}

/// JSON form of a solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDocument {
    #[serde(rename = "H")]
    pub h: Vec<String>,
    pub pattern: LengthPattern,
    pub params: PatternParams,
    #[serde(rename = "A")]
    pub lengths: BTreeSet<usize>,
    pub color: u32,
    pub coloring_ref: String,
    pub verified: bool,
    pub mode: String,
    pub budget_used: u64,
}

impl SolutionDocument {
    pub fn new(
        sol: &Solution,
        coloring_ref: String,
        verified: bool,
        mode: String,
        budget_used: u64,
    ) -> Self {
        SolutionDocument {
            h: sol.h.iter().map(Natural::to_string).collect(),
            pattern: sol.pattern.clone(),
            params: sol.params.clone(),
            lengths: sol.lengths.clone(),
            color: sol.color,
            coloring_ref,
            verified,
            mode,
            budget_used,
        }
    }

    pub fn solution(&self) -> Result<Solution> {
        let h = self
            .h
            .iter()
            .map(|s| {
                s.parse::<Natural>()
                    .map_err(|_| Error::Parse(format!("bad element {s:?} in H")))
            })
            .collect::<Result<_>>()?;
        Ok(Solution {
            h,
            pattern: self.pattern.clone(),
            params: self.params.clone(),
            lengths: self.lengths.clone(),
            color: self.color,
        })
    }
}
