use std::collections::BTreeSet;

use serde::Serialize;

use super::EnumerationSchedule;
use crate::coloring::Coloring;
use crate::error::Result;
use crate::profile::{BitProfile, Gap, Natural};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapClassification {
    #[serde(serialize_with = "crate::profile::serialize_decimal")]
    pub n: Natural,
    pub short_gaps: BTreeSet<Gap>,
    pub very_short_gaps: BTreeSet<Gap>,
}

/// Short gaps of `n`: `(p, q)` with some `x <= p` in `K \ K[q]`. Needs the
/// whole schedule.
pub fn short_gaps(n: &Natural, schedule: &EnumerationSchedule) -> Result<BTreeSet<Gap>> {
    let profile = BitProfile::of(n)?;
    Ok(profile
        .gaps()
        .filter(|&(p, q)| schedule.entries().iter().any(|&(s, x)| x <= p && s > q))
        .collect())
}

/// Very short gaps of `n`: `(p, q)` with some `x <= p` in `K[μ(n)] \ K[q]`.
/// Reads only the entries enumerated by stage `μ(n)`.
pub fn very_short_gaps(n: &Natural, schedule: &EnumerationSchedule) -> Result<BTreeSet<Gap>> {
    let profile = BitProfile::of(n)?;
    let visible = schedule.truncated(profile.mu());
    Ok(profile
        .gaps()
        .filter(|&(p, q)| visible.entries().iter().any(|&(s, x)| x <= p && s > q))
        .collect())
}

pub fn classify_gaps(n: &Natural, schedule: &EnumerationSchedule) -> Result<GapClassification> {
    Ok(GapClassification {
        n: n.clone(),
        short_gaps: short_gaps(n, schedule)?,
        very_short_gaps: very_short_gaps(n, schedule)?,
    })
}

/// `|VSG(n)| mod 2`.
pub fn vsg_color(schedule: &EnumerationSchedule, n: &Natural) -> Result<u32> {
    Ok((very_short_gaps(n, schedule)?.len() % 2) as u32)
}

/// The 2-coloring `n ↦ |VSG(n)| mod 2`.
#[derive(Debug, Clone)]
pub struct VsgColoring {
    schedule: EnumerationSchedule,
}

impl VsgColoring {
    pub fn new(schedule: EnumerationSchedule) -> Self {
        VsgColoring { schedule }
    }

    pub fn schedule(&self) -> &EnumerationSchedule {
        &self.schedule
    }
}

impl Coloring for VsgColoring {
    fn colors(&self) -> u32 {
        2
    }

    fn color(&self, n: &Natural) -> Result<u32> {
        vsg_color(&self.schedule, n).map_err(|_| crate::Error::OutsideColoring {
            value: n.to_string(),
            domain: "n >= 1".into(),
        })
    }

    fn describe(&self) -> String {
        let pairs: Vec<String> = self
            .schedule
            .entries()
            .iter()
            .map(|(s, x)| format!("{s}:{x}"))
            .collect();
        format!("vsg[{}]", pairs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn k0_at_2() -> EnumerationSchedule {
        EnumerationSchedule::new(vec![(2, 0)]).unwrap()
    }

    #[test]
    fn three() {
        let g = classify_gaps(&nat(3), &k0_at_2()).unwrap();
        assert_eq!(g.short_gaps, [(0, 1)].into());
        assert!(g.very_short_gaps.is_empty());
        assert_eq!(vsg_color(&k0_at_2(), &nat(3)).unwrap(), 0);
    }

    #[test]
    fn eleven() {
        let g = classify_gaps(&nat(11), &k0_at_2()).unwrap();
        assert_eq!(g.short_gaps, [(0, 1)].into());
        assert_eq!(g.very_short_gaps, [(0, 1)].into());
        assert_eq!(vsg_color(&k0_at_2(), &nat(11)).unwrap(), 1);
    }

    #[test]
    fn powers_of_two_have_no_gaps() {
        let s = EnumerationSchedule::new(vec![(0, 0), (1, 1), (9, 2)]).unwrap();
        for e in [0u32, 3, 70] {
            let g = classify_gaps(&(nat(1) << e), &s).unwrap();
            assert!(g.short_gaps.is_empty() && g.very_short_gaps.is_empty());
        }
        assert_eq!(vsg_color(&s, &nat(1)).unwrap(), 0);
        assert!(classify_gaps(&nat(0), &s).is_err());
        assert!(vsg_color(&s, &nat(0)).is_err());
    }

    #[test]
    fn top_gap_is_never_very_short() {
        let s = EnumerationSchedule::new(vec![(4, 0), (6, 1)]).unwrap();
        for n in 1u64..2000 {
            let p = BitProfile::of(&nat(n)).unwrap();
            let top = p.gap_list().last().copied();
            let vsg = very_short_gaps(&nat(n), &s).unwrap();
            if let Some(top) = top {
                assert!(!vsg.contains(&top));
            }
        }
    }

    fn schedule_strategy() -> impl Strategy<Value = EnumerationSchedule> {
        proptest::collection::btree_map(0u64..12, 0u64..30, 0..8).prop_map(|m| {
            let mut by_stage: Vec<(u64, u64)> = m.into_iter().map(|(x, s)| (s, x)).collect();
            by_stage.sort();
            by_stage.dedup_by_key(|e| e.0);
            EnumerationSchedule::new(by_stage).unwrap()
        })
    }

    proptest! {
        #[test]
        fn containment(s in schedule_strategy(), n in 1u64..(1 << 30)) {
            let g = classify_gaps(&nat(n), &s).unwrap();
            let gaps: BTreeSet<Gap> = BitProfile::of(&nat(n)).unwrap().gaps().collect();
            prop_assert!(g.very_short_gaps.is_subset(&g.short_gaps));
            prop_assert!(g.short_gaps.is_subset(&gaps));
        }

        #[test]
        fn vsg_ignores_stages_beyond_mu(s in schedule_strategy(), n in 1u64..(1 << 30)) {
            let mu = BitProfile::of(&nat(n)).unwrap().mu();
            prop_assert_eq!(
                very_short_gaps(&nat(n), &s).unwrap(),
                very_short_gaps(&nat(n), &s.truncated(mu)).unwrap()
            );
        }
    }
}
