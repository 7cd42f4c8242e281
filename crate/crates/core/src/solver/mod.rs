//! Apart sets `H` with `FS^A(H)` monochromatic.
//!
//! Three modes are available. `Pipeline` extracts one homogeneous set for the
//! derived tuple coloring `g_k` and reads the induced length coloring off its
//! color; `Iterated` refines the ground `k` times with `f_i(x_1..x_i) =
//! c(x_1 + ... + x_i)`; `Direct` searches apart subsets and parameters
//! outright. In the first two, `k` is the 2-color witness number of the
//! pattern, computed by [`crate::oracles::witness_number`].

mod homogeneous;
mod solution;
mod solve;
mod tuple;

pub use homogeneous::{extract_homogeneous, iterated_refinement, Refinement};
pub use solution::{verify_solution, Solution, SolutionDocument, VerifyReport};
pub use solve::{solve, SolveConfig, SolveMode, SolveOutcome};
pub use tuple::{
    derived_tuple_coloring, DerivedTupleColoring, FnTupleColoring, SumColoring, TupleColoring,
};
