//! Desk-scale search and verification toolkit for restricted versions of
//! Hindman's finite sums theorem.
//!
//! * [`profile`], [`apart`], [`pattern`], [`coloring`]: binary supports,
//!   apart sets, restricted finite sums `FS^A(H)` and pattern families.
//! * [`oracles`]: monochromatic configurations in colorings of `[1, n]` and
//!   witness numbers (Schur, van der Waerden, Brauer, Folkman).
//! * [`solver`]: apart sets `H` with `FS^A(H)` monochromatic, via Ramsey-style
//!   refinement or direct search.
//! * [`lowerbound`]: the very-short-gap parity coloring over a simulated
//!   enumeration of a c.e. set, its sum identity, and decoding membership
//!   from a solution.
//! * [`cli`]: the `hindman-lab` command driver.

pub mod apart;
pub mod cli;
pub mod coloring;
mod error;
pub mod lowerbound;
pub mod oracles;
pub mod pattern;
pub mod profile;
pub mod search;
pub mod solver;

pub use apart::{apart_ground, fs_exact, fs_lengths, is_apart, ApartSet};
pub use coloring::Coloring;
pub use error::{Error, Result};
pub use pattern::{instantiate_pattern, LengthPattern, PatternParams};
pub use profile::{bit_profile, BitProfile, Natural};
