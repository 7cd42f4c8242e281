//! Direct search for apart sets whose restricted sums are monochromatic.

use hindman_lab::coloring::{Parity, PopcountParity};
use hindman_lab::solver::{solve, SolveConfig, SolveMode};
use hindman_lab::{apart_ground, Coloring, LengthPattern};

fn show(c: &dyn Coloring, pattern: &str, target: usize) -> hindman_lab::Result<()> {
    let p: LengthPattern = pattern.parse()?;
    let cfg = SolveConfig::new(SolveMode::Direct, apart_ground(20, 0, 1)?, target);
    match solve(&c, &p, &cfg)? {
        Some(o) => println!(
            "{:<10} {pattern:<12} params {:?} A = {:?} color {} H = {:?} ({} steps)",
            c.describe(),
            o.solution.params,
            o.solution.lengths,
            o.solution.color,
            o.solution
                .h
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>(),
            o.budget_used
        ),
        None => println!("{:<10} {pattern:<12} none in ground", c.describe()),
    }
    Ok(())
}

fn main() -> hindman_lab::Result<()> {
    for pattern in ["schur", "vdw:3", "brauer:3:1", "folkman:2"] {
        show(&Parity, pattern, 6)?;
        show(&PopcountParity, pattern, 6)?;
    }
    Ok(())
}
