use serde::Serialize;

use super::{
    check_parity_claims, decode_trace, ClaimsReport, DecodingContext, EnumerationSchedule,
    VsgColoring,
};
use crate::apart::{apart_ground, ApartSet};
use crate::coloring::Coloring;
use crate::error::{domain, Error, Result};
use crate::pattern::{LengthPattern, PatternParams};
use crate::search::Workers;
use crate::solver::{solve, SolutionDocument, SolveConfig, SolveMode};

/// Settings for an end-to-end run: solve `vsg_color` directly over a
/// powers-of-two ground, check the parity claims, then decode `K`.
#[derive(Debug, Clone)]
pub struct ReproduceConfig {
    pub pattern: LengthPattern,
    pub ground_count: usize,
    pub ground_start: u64,
    pub ground_stride: u64,
    pub target_size: usize,
    pub budget: u64,
    pub workers: Workers,
    /// Decode every `x < query_below`.
    pub query_below: u64,
    /// Ground enlargements allowed after a failed attempt.
    pub max_enlargements: usize,
    /// Per enlargement the target grows by this much and the ground by twice it.
    pub enlarge_step: usize,
}

impl ReproduceConfig {
    /// Sizes the run so that `H` is forced to reach above every stage of the
    /// schedule and every queried `x`: the target exceeds the number of
    /// ground exponents below that bound by two, and the ground keeps
    /// `target` exponents above the bound.
    pub fn for_schedule(schedule: &EnumerationSchedule, query_below: u64) -> Self {
        let bound = schedule.max_stage().map_or(0, |s| s + 1).max(query_below) as usize;
        let target_size = bound + 2;
        ReproduceConfig {
            pattern: LengthPattern::Brauer { len: 3, s: 1 },
            ground_count: bound + target_size + 4,
            ground_start: 0,
            ground_stride: 1,
            target_size,
            budget: 20_000_000,
            workers: Workers(1),
            query_below,
            max_enlargements: 3,
            enlarge_step: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryResult {
    pub x: u64,
    pub decoded: Option<bool>,
    pub truth: bool,
    pub m: Option<String>,
    pub n: Option<String>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Attempt {
    pub ground_count: usize,
    pub target_size: usize,
    pub budget_used: u64,
    pub solution: Option<SolutionDocument>,
    pub claims: Option<ClaimsReport>,
    pub queries: Vec<QueryResult>,
    pub decode_errors: usize,
    pub passed: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReproduceReport {
    pub schedule: String,
    pub attempts: Vec<Attempt>,
    pub enlargements: usize,
    pub passed: bool,
}

impl ReproduceReport {
    pub fn last(&self) -> &Attempt {
        self.attempts.last().expect("at least one attempt")
    }
}

pub fn reproduce_lower_bound(
    schedule: &EnumerationSchedule,
    cfg: &ReproduceConfig,
) -> Result<ReproduceReport> {
    if !matches!(cfg.pattern, LengthPattern::Brauer { len, s: 1 } if len >= 3) {
        return domain("decoding needs lengths {a, a+b, a+2b, b}: use brauer:<len >= 3>:1");
    }
    let coloring = VsgColoring::new(schedule.clone());
    let mut attempts = Vec::new();
    let mut ground_count = cfg.ground_count;
    let mut target_size = cfg.target_size;
    for round in 0..=cfg.max_enlargements {
        let attempt = attempt(schedule, &coloring, cfg, ground_count, target_size)?;
        let passed = attempt.passed;
        attempts.push(attempt);
        if passed {
            return Ok(ReproduceReport {
                schedule: schedule.to_text(),
                attempts,
                enlargements: round,
                passed: true,
            });
        }
        ground_count += 2 * cfg.enlarge_step;
        target_size += cfg.enlarge_step;
    }
    Ok(ReproduceReport {
        schedule: schedule.to_text(),
        attempts,
        enlargements: cfg.max_enlargements,
        passed: false,
    })
}

fn attempt(
    schedule: &EnumerationSchedule,
    coloring: &VsgColoring,
    cfg: &ReproduceConfig,
    ground_count: usize,
    target_size: usize,
) -> Result<Attempt> {
    let ground = apart_ground(ground_count, cfg.ground_start, cfg.ground_stride)?;
    let mut solve_cfg = SolveConfig::new(SolveMode::Direct, ground, target_size);
    solve_cfg.budget = cfg.budget;
    solve_cfg.workers = cfg.workers;
    let mut out = Attempt {
        ground_count,
        target_size,
        budget_used: 0,
        solution: None,
        claims: None,
        queries: Vec::new(),
        decode_errors: 0,
        passed: false,
        note: None,
    };
    let Some(found) = solve(coloring, &cfg.pattern, &solve_cfg)? else {
        out.note = Some("no solution in ground".into());
        return Ok(out);
    };
    out.budget_used = found.budget_used;
    let sol = &found.solution;
    out.solution = Some(SolutionDocument::new(
        sol,
        coloring.describe(),
        found.verify.verified,
        found.mode.to_string(),
        found.budget_used,
    ));
    let PatternParams::Pair { a, b } = sol.params else {
        return domain("brauer solutions carry (a, b) parameters");
    };
    let h = ApartSet::new(sol.h.clone())?;
    let claims = check_parity_claims(schedule, &h, a, b)?;
    let ctx = DecodingContext::new(h, a, b, schedule.clone())?;
    for x in 0..cfg.query_below {
        let truth = schedule.contains(x);
        let q = match decode_trace(&ctx, x) {
            Ok(step) => QueryResult {
                x,
                decoded: Some(step.member),
                truth,
                m: Some(step.m.to_string()),
                n: Some(step.n.to_string()),
                error: None,
            },
            Err(e @ Error::InsufficientWitness(_)) => QueryResult {
                x,
                decoded: None,
                truth,
                m: None,
                n: None,
                error: Some(e.to_string()),
            },
            Err(e) => return Err(e),
        };
        if q.decoded != Some(truth) {
            out.decode_errors += 1;
        }
        out.queries.push(q);
    }
    out.passed = found.verify.verified && claims.passed() && out.decode_errors == 0;
    if !claims.passed() {
        out.note = Some("parity claims violated on finite ground".into());
    } else if out.decode_errors > 0 {
        out.note = Some("decoding disagreed with membership".into());
    }
    out.claims = Some(claims);
    Ok(out)
}
