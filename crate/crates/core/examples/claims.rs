//! Short gaps, very short gaps and the sum identity behind the parity claims.

use hindman_lab::lowerbound::{
    check_parity_claims, check_sum_identity, classify_gaps, EnumerationSchedule,
};
use hindman_lab::{ApartSet, Natural};

fn main() -> hindman_lab::Result<()> {
    let schedule: EnumerationSchedule = "2 0\n5 3\n9 1\n".parse()?;
    for n in [11u64, 0b1011_0100_1001, 0b1_0000_0101_0011] {
        let g = classify_gaps(&Natural::from(n), &schedule)?;
        println!(
            "n = {n:#b}: SG {:?}, VSG {:?}",
            g.short_gaps, g.very_short_gaps
        );
    }

    let m = Natural::from(0b1001_0110u64);
    let n = Natural::from(1u64 << 12 | 1 << 10);
    let r = check_sum_identity(&m, &n, &schedule)?;
    println!(
        "m = {m}, n = {n}: conditions {:?}, connecting gap {:?} very short: {}, identity holds: {}",
        r.conditions, r.connecting_gap, r.connecting_gap_very_short, r.holds
    );

    let h = ApartSet::from_u64s(&[1 << 10, 1 << 11, 1 << 12, 1 << 13, 1 << 14, 1 << 15])?;
    let report = check_parity_claims(&schedule, &h, 1, 1)?;
    println!(
        "parity claims on {:?}: {} checked, {} without partner, passed {}",
        h.elements()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>(),
        report.checked,
        report.skipped_no_partner,
        report.passed()
    );
    Ok(())
}
