//! Finite partition-theorem engine: monochromatic configurations inside
//! colorings of `[1, n]` and witness numbers by exhaustive search.

mod config;
mod table;
mod witness;

pub use config::{find_mono_config, find_mono_config_with, is_avoiding, ConfigWitness};
pub use table::TableColoring;
pub use witness::{witness_number, Strategy, WitnessOptions, WitnessResult, WitnessStatus};
