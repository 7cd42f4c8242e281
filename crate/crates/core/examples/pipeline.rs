//! Ramsey-style solving: a homogeneous set for the derived tuple coloring,
//! then a monochromatic configuration of the induced length coloring.

use hindman_lab::coloring::{FnColoring, PopcountParity};
use hindman_lab::oracles::find_mono_config;
use hindman_lab::solver::{solve, SolveConfig, SolveMode};
use hindman_lab::{apart_ground, LengthPattern};

fn main() -> hindman_lab::Result<()> {
    let schur = LengthPattern::Schur;
    let ground = apart_ground(16, 0, 1)?;
    // Whether the number of one bits is divisible by 3.
    let thirds = FnColoring::new("popcount-mod-3", 2, |n| (n.count_ones() % 3 == 0) as u32);
    for mode in [SolveMode::Pipeline, SolveMode::Iterated] {
        let cfg = SolveConfig::new(mode, ground.clone(), 10);
        let out = solve(&PopcountParity, &schur, &cfg)?.expect("popcount parity is solvable");
        let induced = out.induced.as_ref().expect("ramsey modes record C");
        println!("{mode}: k = {:?}, C = {:?}", out.core_k, induced.table());
        println!(
            "  find_mono_config(C) = {:?}",
            find_mono_config(induced, &schur).map(|w| w.params)
        );
        println!(
            "  H = {:?}, A = {:?}, color {}, budget used {}",
            out.solution
                .h
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>(),
            out.solution.lengths,
            out.solution.color,
            out.budget_used
        );
        match solve(&thirds, &schur, &cfg)? {
            Some(o) => println!(
                "  popcount-mod-3: A = {:?} color {}",
                o.solution.lengths, o.solution.color
            ),
            None => println!("  popcount-mod-3: ground too small"),
        }
    }
    Ok(())
}
