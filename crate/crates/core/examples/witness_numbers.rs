//! Schur, van der Waerden, Brauer and Folkman witness numbers for two colors.
//!
//! `cargo run --release --example witness_numbers`

use std::time::Instant;

use hindman_lab::oracles::{is_avoiding, witness_number, Strategy, WitnessOptions};
use hindman_lab::LengthPattern;

fn main() -> hindman_lab::Result<()> {
    let opts = WitnessOptions::default();
    let patterns = [
        LengthPattern::Schur,
        LengthPattern::Vdw { len: 3 },
        LengthPattern::Brauer { len: 2, s: 2 },
        LengthPattern::Folkman { len: 2 },
        LengthPattern::Brauer { len: 3, s: 1 },
    ];
    for p in &patterns {
        for strategy in [Strategy::IncrementalDfs, Strategy::FullEnumeration] {
            let t = Instant::now();
            let w = witness_number(p, 2, 24, strategy, &opts)?;
            println!(
                "{:<12} {:<17} value {:>2} ({:?}) steps {:>9} in {:?}",
                p.to_string(),
                format!("{strategy:?}"),
                w.value,
                w.status,
                w.steps,
                t.elapsed()
            );
            println!(
                "    certificate {:?} avoids: {}",
                w.certificate.table(),
                is_avoiding(&w.certificate, p)
            );
        }
    }
    Ok(())
}
