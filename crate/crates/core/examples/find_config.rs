//! Least monochromatic instance of each pattern in a fixed coloring of [1, 16].

use hindman_lab::oracles::{find_mono_config, TableColoring};
use hindman_lab::LengthPattern;

fn main() -> hindman_lab::Result<()> {
    let c: TableColoring = "2 16\n0 0 1 0 1 1 1 0 0 1 1 1 0 1 0 0".parse()?;
    for spec in [
        "schur",
        "vdw:3",
        "vdw:4",
        "brauer:3:1",
        "folkman:2",
        "explicit:3,5",
    ] {
        let p: LengthPattern = spec.parse()?;
        match find_mono_config(&c, &p) {
            Some(w) => println!(
                "{spec:<12} params {:?} color {} instance {:?}",
                w.params, w.color, w.instance
            ),
            None => println!("{spec:<12} avoided"),
        }
    }
    Ok(())
}
