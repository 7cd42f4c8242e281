use std::collections::BTreeSet;

use serde::Serialize;

use super::gaps::{short_gaps, very_short_gaps};
use super::EnumerationSchedule;
use crate::apart::ApartSet;
use crate::error::{domain, Result};
use crate::profile::{lambda, mu, Gap, Natural};

/// The three largeness conditions on a partner `n` for `m`:
/// 1. `μ(m) < λ(n)`;
/// 2. every `x <= μ(m)` in `K` is already in `K[λ(n)]`;
/// 3. `μ(m + n) = μ(n)`.
pub fn largeness_conditions(
    m: &Natural,
    n: &Natural,
    schedule: &EnumerationSchedule,
) -> Result<[bool; 3]> {
    let (mu_m, lambda_n, mu_n) = (mu(m)?, lambda(n)?, mu(n)?);
    let cond1 = mu_m < lambda_n;
    let cond2 = !schedule
        .entries()
        .iter()
        .any(|&(s, x)| x <= mu_m && s > lambda_n);
    let cond3 = mu(&(m + n))? == mu_n;
    Ok([cond1, cond2, cond3])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumIdentityReport {
    pub conditions: [bool; 3],
    /// `VSG(m + n)`
    pub lhs: BTreeSet<Gap>,
    /// `SG(m)`
    pub sg_m: BTreeSet<Gap>,
    /// `VSG(n)`
    pub vsg_n: BTreeSet<Gap>,
    pub connecting_gap: Gap,
    pub connecting_gap_very_short: bool,
    /// `VSG(m + n) = SG(m) ⊔ VSG(n)` and the connecting gap is not very short.
    pub holds: bool,
}

/// Evaluates both sides of `VSG(m + n) = SG(m) + VSG(n)`. The identity is
/// guaranteed when all three largeness conditions hold; otherwise the report
/// is informational.
pub fn check_sum_identity(
    m: &Natural,
    n: &Natural,
    schedule: &EnumerationSchedule,
) -> Result<SumIdentityReport> {
    let (mu_m, lambda_n) = (mu(m)?, lambda(n)?);
    if mu_m >= lambda_n {
        return domain(format!(
            "μ(m) = {mu_m} >= λ(n) = {lambda_n}: binary supports would merge"
        ));
    }
    let conditions = largeness_conditions(m, n, schedule)?;
    let lhs = very_short_gaps(&(m + n), schedule)?;
    let sg_m = short_gaps(m, schedule)?;
    let vsg_n = very_short_gaps(n, schedule)?;
    let connecting_gap = (mu_m, lambda_n);
    let connecting_gap_very_short = lhs.contains(&connecting_gap);
    let union: BTreeSet<Gap> = sg_m.union(&vsg_n).copied().collect();
    Ok(SumIdentityReport {
        conditions,
        holds: lhs == union && !connecting_gap_very_short,
        lhs,
        sg_m,
        vsg_n,
        connecting_gap,
        connecting_gap_very_short,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimViolation {
    /// Which sum length family `m` came from: `"a"`, `"b"` or `"a+b"`.
    pub family: String,
    pub m: String,
    pub short_gaps: BTreeSet<Gap>,
    pub identity_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ClaimsReport {
    pub checked: usize,
    /// Checked sums with at least one short gap.
    pub nontrivial: usize,
    pub skipped_no_partner: usize,
    pub identity_failures: usize,
    pub violations: Vec<ClaimViolation>,
}

impl ClaimsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.identity_failures == 0
    }
}

/// For `m` in `FS^{=a}`, `FS^{=b}` and `FS^{=a+b}` of `h` with a partner in
/// `FS^{=b}`, `FS^{=a}`, `FS^{=b}` respectively meeting all three largeness
/// conditions, checks that `|SG(m)|` is even and that the sum identity holds
/// for that partner.
///
/// The partner tried is the sum of the top elements of `h`, which maximizes
/// `λ(n)`.
pub fn check_parity_claims(
    schedule: &EnumerationSchedule,
    h: &ApartSet,
    a: usize,
    b: usize,
) -> Result<ClaimsReport> {
    if a == 0 || b == 0 {
        return domain("a and b must be positive");
    }
    let mut report = ClaimsReport::default();
    for (family, len, partner_len) in [("a", a, b), ("b", b, a), ("a+b", a + b, b)] {
        if partner_len > h.len() {
            continue;
        }
        let partner_start = h.len() - partner_len;
        let partner: Vec<usize> = (partner_start..h.len()).collect();
        let n = h.sum_of(&partner);
        for (idx, m) in h.sums_of_size(len) {
            let top = *idx.last().expect("len >= 1");
            if top >= partner_start || largeness_conditions(&m, &n, schedule)? != [true; 3] {
                report.skipped_no_partner += 1;
                continue;
            }
            report.checked += 1;
            let identity = check_sum_identity(&m, &n, schedule)?;
            if !identity.holds {
                report.identity_failures += 1;
            }
            let sg = short_gaps(&m, schedule)?;
            report.nontrivial += usize::from(!sg.is_empty());
            if sg.len() % 2 != 0 {
                report.violations.push(ClaimViolation {
                    family: family.into(),
                    m: m.to_string(),
                    short_gaps: sg,
                    identity_holds: identity.holds,
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn k0_at(stage: u64) -> EnumerationSchedule {
        EnumerationSchedule::new(vec![(stage, 0)]).unwrap()
    }

    #[test]
    fn largeness_examples() {
        assert_eq!(
            largeness_conditions(&nat(3), &nat(96), &k0_at(2)).unwrap(),
            [true; 3]
        );
        assert!(!largeness_conditions(&nat(3), &nat(3), &k0_at(2)).unwrap()[0]);
        assert!(!largeness_conditions(&nat(3), &nat(32), &k0_at(7)).unwrap()[1]);
    }

    #[test]
    fn identity_on_99() {
        let r = check_sum_identity(&nat(3), &nat(96), &k0_at(2)).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, [(0, 1)].into());
        assert_eq!(r.sg_m, [(0, 1)].into());
        assert!(r.vsg_n.is_empty());
        assert_eq!(r.connecting_gap, (1, 5));
    }

    #[test]
    fn identity_with_empty_k() {
        let r = check_sum_identity(&nat(5), &nat(48), &EnumerationSchedule::empty()).unwrap();
        assert!(r.holds && r.lhs.is_empty() && r.sg_m.is_empty() && r.vsg_n.is_empty());
    }

    #[test]
    fn identity_reports_without_conditions() {
        let r = check_sum_identity(&nat(3), &nat(4), &k0_at(2)).unwrap();
        assert_eq!(r.conditions, [true, true, true]);
        assert!(r.holds);
        // 0 enters at stage 9: gap (0, 1) of 3 is short but K[μ(7) = 2] misses it.
        let r = check_sum_identity(&nat(3), &nat(4), &k0_at(9)).unwrap();
        assert!(!r.conditions[1]);
        assert!(!r.holds);
        assert!(check_sum_identity(&nat(3), &nat(6), &k0_at(2)).is_err());
    }

    #[test]
    fn claims_on_a_clean_set() {
        // K = {0} enumerated at stage 2, H above every stage: no short gaps.
        let h = crate::apart::apart_ground(6, 3, 1).unwrap();
        let r = check_parity_claims(&k0_at(2), &h, 1, 1).unwrap();
        assert!(r.passed());
        assert!(r.checked > 0);
    }

    fn schedule_strategy() -> impl Strategy<Value = EnumerationSchedule> {
        proptest::collection::btree_map(0u64..10, 0u64..24, 0..6).prop_map(|m| {
            let mut by_stage: Vec<(u64, u64)> = m.into_iter().map(|(x, s)| (s, x)).collect();
            by_stage.sort();
            by_stage.dedup_by_key(|e| e.0);
            EnumerationSchedule::new(by_stage).unwrap()
        })
    }

    proptest! {
        #[test]
        fn identity_under_largeness(s in schedule_strategy(), m in 1u64..(1 << 12), hi in 1u64..(1 << 10), shift in 12u32..24) {
            let (m, n) = (nat(m), nat(hi) << shift);
            let conds = largeness_conditions(&m, &n, &s).unwrap();
            prop_assume!(conds == [true; 3]);
            prop_assert!(check_sum_identity(&m, &n, &s).unwrap().holds);
        }
    }
}
