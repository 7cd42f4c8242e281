//! The very-short-gap parity coloring over a simulated computably
//! enumerable set `K`, and recovery of `K` from monochromatic apart sets.
//!
//! A gap `(p, q)` of `n` is short when some `x <= p` lies in `K` but not in
//! `K[q]`, and very short when some `x <= p` lies in `K[μ(n)]` but not in
//! `K[q]`. Only the very short gaps depend on finitely many stages, which is
//! what makes `c(n) = |VSG(n)| mod 2` computable.

mod claims;
mod decode;
mod gaps;
mod reproduce;
mod schedule;

pub use claims::{
    check_parity_claims, check_sum_identity, largeness_conditions, ClaimViolation, ClaimsReport,
    SumIdentityReport,
};
pub use decode::{decode, decode_trace, DecodeStep, DecodingContext, DecodingContextDocument};
pub use gaps::{
    classify_gaps, short_gaps, very_short_gaps, vsg_color, GapClassification, VsgColoring,
};
pub use reproduce::{
    reproduce_lower_bound, Attempt, QueryResult, ReproduceConfig, ReproduceReport,
};
pub use schedule::EnumerationSchedule;
