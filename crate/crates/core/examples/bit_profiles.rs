//! Binary exponents, gaps and apartness.

use hindman_lab::{apart_ground, bit_profile, fs_exact, is_apart, Natural};

fn main() -> hindman_lab::Result<()> {
    for n in [1u64, 10, 11, 96, 1 << 40 | 5] {
        let p = bit_profile(&Natural::from(n))?;
        println!(
            "{n:>14}  exponents {:?}  λ = {}  μ = {}  gaps {:?}",
            p.exponents(),
            p.lambda(),
            p.mu(),
            p.gap_list()
        );
    }

    let h: Vec<Natural> = [3u64, 12, 48].map(Natural::from).to_vec();
    println!("{{3, 12, 48}} apart: {}", is_apart(&h)?);
    let h: Vec<Natural> = [3u64, 6].map(Natural::from).to_vec();
    println!("{{3, 6}} apart: {}", is_apart(&h)?);

    let g = apart_ground(4, 1, 2)?;
    for a in 1..=4 {
        let sums: Vec<String> = fs_exact(&g, a)?.iter().map(|s| s.to_string()).collect();
        println!("FS^={a} of {:?}: {}", g.elements(), sums.join(" "));
    }
    Ok(())
}
