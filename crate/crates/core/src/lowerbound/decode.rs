use serde::{Deserialize, Serialize};

use super::EnumerationSchedule;
use crate::apart::{fs_exact, ApartSet};
use crate::error::{domain, Error, Result};
use crate::profile::{lambda, mu, Natural};

/// An apart set with lengths `a`, `b` and the schedule it is meant to decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodingContext {
    h: ApartSet,
    a: usize,
    b: usize,
    schedule: EnumerationSchedule,
}

impl DecodingContext {
    pub fn new(h: ApartSet, a: usize, b: usize, schedule: EnumerationSchedule) -> Result<Self> {
        if a == 0 || b == 0 {
            return domain("a and b must be positive");
        }
        if h.len() < a + b {
            return domain(format!("|H| = {} < a + b = {}", h.len(), a + b));
        }
        Ok(DecodingContext { h, a, b, schedule })
    }

    pub fn h(&self) -> &ApartSet {
        &self.h
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn schedule(&self) -> &EnumerationSchedule {
        &self.schedule
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecodeStep {
    pub x: u64,
    #[serde(serialize_with = "crate::profile::serialize_decimal")]
    pub m: Natural,
    #[serde(serialize_with = "crate::profile::serialize_decimal")]
    pub n: Natural,
    /// Number of enumeration stages run.
    pub stages: u64,
    pub member: bool,
}

/// Finds the least `m ∈ FS^{=a}(H)` with `x <= μ(m)`, then the least
/// `n ∈ FS^{=b}(H)` with `m < n` and `μ(m) < λ(n)`, and answers
/// `x ∈ K[λ(n)]`.
pub fn decode_trace(ctx: &DecodingContext, x: u64) -> Result<DecodeStep> {
    let insufficient =
        |what: &str| Error::InsufficientWitness(format!("no {what} in H for x = {x}"));
    let mut m_found = None;
    for m in fs_exact(&ctx.h, ctx.a)? {
        if mu(&m)? >= x {
            m_found = Some(m);
            break;
        }
    }
    let m = m_found.ok_or_else(|| insufficient("m with x <= μ(m)"))?;
    let mu_m = mu(&m)?;
    let mut n_found = None;
    for n in fs_exact(&ctx.h, ctx.b)? {
        if n > m && lambda(&n)? > mu_m {
            n_found = Some(n);
            break;
        }
    }
    let n = n_found.ok_or_else(|| insufficient("n above m"))?;
    let stages = lambda(&n)?;
    Ok(DecodeStep {
        x,
        member: ctx.schedule.contains_at(x, stages),
        m,
        n,
        stages,
    })
}

pub fn decode(ctx: &DecodingContext, x: u64) -> Result<bool> {
    decode_trace(ctx, x).map(|s| s.member)
}

/// JSON form: `{"H": [...], "a": .., "b": .., "schedule_ref": ".."}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodingContextDocument {
    #[serde(rename = "H")]
    pub h: Vec<String>,
    pub a: usize,
    pub b: usize,
    pub schedule_ref: String,
}

impl DecodingContextDocument {
    pub fn new(ctx: &DecodingContext, schedule_ref: String) -> Self {
        DecodingContextDocument {
            h: ctx.h.elements().iter().map(Natural::to_string).collect(),
            a: ctx.a,
            b: ctx.b,
            schedule_ref,
        }
    }

    pub fn context(&self, schedule: EnumerationSchedule) -> Result<DecodingContext> {
        let h = self
            .h
            .iter()
            .map(|s| {
                s.parse::<Natural>()
                    .map_err(|_| Error::Parse(format!("bad element {s:?} in H")))
            })
            .collect::<Result<Vec<_>>>()?;
        DecodingContext::new(ApartSet::new(h)?, self.a, self.b, schedule)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(schedule: EnumerationSchedule) -> DecodingContext {
        DecodingContext::new(ApartSet::from_u64s(&[4, 32, 256]).unwrap(), 1, 1, schedule).unwrap()
    }

    #[test]
    fn decodes_membership() {
        let c = ctx(EnumerationSchedule::new(vec![(2, 0)]).unwrap());
        let step = decode_trace(&c, 0).unwrap();
        assert_eq!(
            (step.m, step.n, step.stages),
            (Natural::from(4u8), Natural::from(32u8), 5)
        );
        assert!(step.member);
        assert!(!decode(&c, 1).unwrap());
    }

    #[test]
    fn empty_k_decodes_false() {
        let c = ctx(EnumerationSchedule::empty());
        for x in 0..6 {
            assert!(!decode(&c, x).unwrap());
        }
    }

    #[test]
    fn finite_h_can_run_out() {
        let c = ctx(EnumerationSchedule::empty());
        // μ(256) = 8 is the largest exponent and nothing lies above it.
        assert!(matches!(decode(&c, 8), Err(Error::InsufficientWitness(_))));
        assert!(matches!(decode(&c, 9), Err(Error::InsufficientWitness(_))));
        assert!(DecodingContext::new(
            ApartSet::from_u64s(&[4]).unwrap(),
            1,
            1,
            EnumerationSchedule::empty()
        )
        .is_err());
    }

    #[test]
    fn document_round_trip() {
        let c = ctx(EnumerationSchedule::new(vec![(2, 0)]).unwrap());
        let doc = DecodingContextDocument::new(&c, "k.txt".into());
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            json,
            r#"{"H":["4","32","256"],"a":1,"b":1,"schedule_ref":"k.txt"}"#
        );
        let back: DecodingContextDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.context(c.schedule().clone()).unwrap(), c);
    }
}
