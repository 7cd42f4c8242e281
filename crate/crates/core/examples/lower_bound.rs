//! Recovering a simulated c.e. set from a Brauer(3,1) solution for the
//! very-short-gap coloring.
//!
//! `cargo run --release --example lower_bound -- [seed]`

use hindman_lab::lowerbound::{reproduce_lower_bound, EnumerationSchedule, ReproduceConfig};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> hindman_lab::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs: Vec<u64> = (0..16).filter(|_| rng.gen_bool(0.5)).collect();
    xs.shuffle(&mut rng);
    let mut stages: Vec<u64> = (0..24).collect();
    stages.shuffle(&mut rng);
    stages.truncate(xs.len());
    stages.sort_unstable();
    let schedule = EnumerationSchedule::new(stages.into_iter().zip(xs).collect())?;
    print!("schedule (stage element):\n{}", schedule.to_text());

    let cfg = ReproduceConfig::for_schedule(&schedule, 16);
    let report = reproduce_lower_bound(&schedule, &cfg)?;
    let last = report.last();
    let sol = last.solution.as_ref().expect("solved");
    println!("H = {:?}", sol.h);
    println!(
        "params {:?}, A = {:?}, color {}",
        sol.params, sol.lengths, sol.color
    );
    if let Some(c) = &last.claims {
        println!(
            "claims: {} checked, {} without partner, {} violations",
            c.checked,
            c.skipped_no_partner,
            c.violations.len()
        );
    }
    for q in &last.queries {
        println!(
            "x = {:>2}  m = {:>8}  n = {:>12}  decoded {:?}  truth {}",
            q.x,
            q.m.as_deref().unwrap_or("-"),
            q.n.as_deref().unwrap_or("-"),
            q.decoded,
            q.truth
        );
    }
    println!(
        "passed: {} after {} enlargement(s)",
        report.passed, report.enlargements
    );
    Ok(())
}
