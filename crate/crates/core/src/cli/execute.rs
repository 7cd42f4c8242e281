use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::command::{ClaimsArgs, ColoringSpec, Command, DecodeArgs, SolveArgs, Verb, WitnessArgs};
use super::report::{Provenance, Report, Status};
use crate::apart::{apart_ground, ApartSet};
use crate::coloring::{Coloring, Constant, Parity, PopcountParity};
use crate::error::{Error, Result};
use crate::lowerbound::{
    check_parity_claims, check_sum_identity, classify_gaps, decode_trace, reproduce_lower_bound,
    vsg_color, DecodingContextDocument, EnumerationSchedule, ReproduceConfig, VsgColoring,
};
use crate::oracles::{
    find_mono_config_with, witness_number, TableColoring, WitnessOptions, WitnessStatus,
};
use crate::pattern::PatternParams;
use crate::profile::bit_profile;
use crate::search::Workers;
use crate::solver::{solve, SolutionDocument, SolveConfig};

struct Run {
    prov: Provenance,
    workers: Workers,
    budget: Option<u64>,
}

impl Run {
    fn read(&mut self, role: &str, path: &Path) -> Result<String> {
        let bytes = fs::read(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        self.prov
            .inputs
            .insert(role.to_string(), hex::encode(Sha256::digest(&bytes)));
        String::from_utf8(bytes)
            .map_err(|_| Error::Parse(format!("{} is not UTF-8", path.display())))
    }

    fn schedule(&mut self, path: &Path) -> Result<EnumerationSchedule> {
        self.read("schedule", path)?.parse()
    }

    fn budget(&mut self, default: u64) -> u64 {
        let b = self.budget.unwrap_or(default);
        self.prov.budget_limit = Some(b);
        b
    }
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

/// Runs a parsed command. Failures of the underlying operation become the
/// report's status and an `error` payload.
pub fn execute(cmd: &Command) -> Report {
    let mut run = Run {
        prov: Provenance::default(),
        workers: Workers(cmd.workers as usize),
        budget: cmd.budget_steps,
    };
    match dispatch(&mut run, &cmd.verb) {
        Ok((status, payload)) => Report {
            status,
            payload,
            provenance: run.prov,
        },
        Err(e) => Report::from_error(&e, run.prov),
    }
}

fn dispatch(run: &mut Run, verb: &Verb) -> Result<(Status, Value)> {
    match verb {
        Verb::Profile { n } => {
            let p = bit_profile(n)?;
            Ok((
                Status::Ok,
                json!({ "exponents": p.exponents(), "lambda": p.lambda(), "mu": p.mu(), "gaps": p.gap_list() }),
            ))
        }
        Verb::Witness(w) => witness(run, w),
        Verb::FindConfig(f) => {
            let table: TableColoring = run.read("coloring", &f.coloring)?.parse()?;
            Ok(
                match find_mono_config_with(&table, &f.pattern, f.require_distinct) {
                    Some(found) => (
                        Status::Ok,
                        json!({ "found": true, "params": found.params, "color": found.color, "instance": found.instance }),
                    ),
                    None => (Status::NotFound, json!({ "found": false })),
                },
            )
        }
        Verb::Solve(s) => solve_verb(run, s),
        Verb::Vsg { schedule, n } => {
            let schedule = run.schedule(schedule)?;
            let g = classify_gaps(n, &schedule)?;
            Ok((
                Status::Ok,
                json!({ "SG": g.short_gaps, "VSG": g.very_short_gaps, "color": vsg_color(&schedule, n)? }),
            ))
        }
        Verb::Claims(c) => claims(run, c),
        Verb::Decode(d) => decode(run, d),
    }
}

fn witness(run: &mut Run, w: &WitnessArgs) -> Result<(Status, Value)> {
    let opts = WitnessOptions {
        budget: run.budget(WitnessOptions::default().budget),
        workers: run.workers,
        require_distinct: w.require_distinct,
    };
    let res = witness_number(
        &w.pattern,
        w.colors,
        w.max_n as usize,
        w.strategy.into(),
        &opts,
    )?;
    run.prov.budget_used = Some(res.steps);
    let text = res.certificate.to_text();
    let reparsed: TableColoring = text.parse()?;
    let verified = find_mono_config_with(&reparsed, &w.pattern, w.require_distinct).is_none();
    if let Some(path) = &w.certificate {
        write(path, &format!("{text}\n"))?;
    }
    let exact = res.status == WitnessStatus::Exact;
    Ok((
        if exact { Status::Ok } else { Status::NotFound },
        json!({
            "value": res.value,
            "exact": exact,
            "status": res.status,
            "certificate": text,
            "certificate_verified": verified,
            "steps": res.steps,
        }),
    ))
}

fn coloring(run: &mut Run, spec: &ColoringSpec) -> Result<(Box<dyn Coloring + Send>, String)> {
    Ok(match spec {
        ColoringSpec::Zero => (
            Box::new(Constant {
                colors: 2,
                color: 0,
            }),
            "zero".into(),
        ),
        ColoringSpec::Parity => (Box::new(Parity), "parity".into()),
        ColoringSpec::Popcount => (Box::new(PopcountParity), "popcount".into()),
        ColoringSpec::Table(p) => {
            let t: TableColoring = run.read("coloring", p)?.parse()?;
            (Box::new(t), format!("table:{}", p.display()))
        }
        ColoringSpec::Vsg(p) => {
            let s = run.schedule(p)?;
            (
                Box::new(VsgColoring::new(s)),
                format!("vsg:{}", p.display()),
            )
        }
    })
}

fn solve_verb(run: &mut Run, s: &SolveArgs) -> Result<(Status, Value)> {
    let (c, coloring_ref) = coloring(run, &s.coloring)?;
    let ground = apart_ground(s.ground.count, s.ground.start, s.ground.stride)?;
    let mut cfg = SolveConfig::new(s.mode, ground, s.target);
    cfg.budget = run.budget(cfg.budget);
    cfg.max_n = s.max_n;
    cfg.stage_slack = s.stage_slack;
    cfg.require_distinct = s.require_distinct;
    cfg.workers = run.workers;
    let Some(out) = solve(&c, &s.pattern, &cfg)? else {
        return Ok((Status::NotFound, json!({ "found": false })));
    };
    run.prov.budget_used = Some(out.budget_used);
    let doc = SolutionDocument::new(
        &out.solution,
        coloring_ref,
        out.verify.verified,
        out.mode.to_string(),
        out.budget_used,
    );
    if let Some(path) = &s.out {
        write(
            path,
            &format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("documents serialize")
            ),
        )?;
    }
    Ok((
        Status::Ok,
        json!({
            "found": true,
            "solution": doc,
            "verify": out.verify,
            "core_k": out.core_k,
            "induced": out.induced.map(|t| t.to_text()),
            "homogeneous_size": out.homogeneous.map(|h| h.len()),
        }),
    ))
}

fn claims(run: &mut Run, c: &ClaimsArgs) -> Result<(Status, Value)> {
    let schedule = run.schedule(&c.schedule)?;
    if let (Some(m), Some(n)) = (&c.m, &c.n) {
        let r = check_sum_identity(m, n, &schedule)?;
        return Ok((
            Status::Ok,
            serde_json::to_value(r).expect("reports serialize"),
        ));
    }
    let path = c
        .solution
        .as_ref()
        .ok_or_else(|| Error::Parse("need --m/--n or --solution".into()))?;
    let doc: SolutionDocument = serde_json::from_str(&run.read("solution", path)?)
        .map_err(|e| Error::Parse(format!("solution document: {e}")))?;
    let sol = doc.solution()?;
    let PatternParams::Pair { a, b } = sol.params else {
        return Err(Error::Parse(
            "claims need a solution with (a, b) parameters".into(),
        ));
    };
    let report = check_parity_claims(&schedule, &ApartSet::new(sol.h)?, a, b)?;
    Ok((
        Status::Ok,
        json!({ "a": a, "b": b, "passed": report.passed(), "report": report }),
    ))
}

fn decode(run: &mut Run, d: &DecodeArgs) -> Result<(Status, Value)> {
    let schedule = run.schedule(&d.schedule)?;
    if d.reproduce {
        let upto = d.upto.or(d.x.map(|x| x + 1)).unwrap_or(16);
        let mut cfg = ReproduceConfig::for_schedule(&schedule, upto);
        cfg.budget = run.budget(cfg.budget);
        cfg.workers = run.workers;
        let report = reproduce_lower_bound(&schedule, &cfg)?;
        run.prov.budget_used = Some(report.attempts.iter().map(|a| a.budget_used).sum());
        let status = if report.passed {
            Status::Ok
        } else {
            Status::NotFound
        };
        return Ok((
            status,
            serde_json::to_value(report).expect("reports serialize"),
        ));
    }
    let path = d
        .context
        .as_ref()
        .ok_or_else(|| Error::Parse("need --context or --reproduce".into()))?;
    let doc: DecodingContextDocument = serde_json::from_str(&run.read("context", path)?)
        .map_err(|e| Error::Parse(format!("decoding context: {e}")))?;
    let ctx = doc.context(schedule)?;
    let xs: Vec<u64> = match (d.x, d.upto) {
        (Some(x), _) => vec![x],
        (None, Some(u)) => (0..u).collect(),
        (None, None) => return Err(Error::Parse("need --x or --upto".into())),
    };
    let steps = xs
        .into_iter()
        .map(|x| decode_trace(&ctx, x))
        .collect::<Result<Vec<_>>>()?;
    let members: Vec<u64> = steps.iter().filter(|s| s.member).map(|s| s.x).collect();
    Ok((Status::Ok, json!({ "steps": steps, "members": members })))
}
