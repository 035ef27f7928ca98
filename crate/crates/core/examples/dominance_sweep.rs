//! Coulomb- vs linear-dominance across tension, angular momentum and dimension.

use cornell_lab::analysis::{analyze, Regime};
use cornell_lab::SystemParams;

fn main() -> cornell_lab::Result<()> {
    for dim in [3, 4] {
        println!("N={dim}");
        for b in [0.01, 1.0, 100.0] {
            let marks: Vec<String> = (0..6)
                .map(|l| {
                    let p = SystemParams::new(1.0, b, 0.5, dim, l)?;
                    let r = analyze(&p)?;
                    let tag = match r.regime {
                        Regime::CoulombDominant => "C",
                        Regime::LinearDominant => "L",
                    };
                    Ok(format!("{tag}{:+.2}", r.margin))
                })
                .collect::<cornell_lab::Result<_>>()?;
            println!("  b={b:<5} l=0..5: {}", marks.join(" "));
        }
    }
    println!("C: r0 > r_dE (linear term perturbative), L: otherwise; number is (r_dE - r0)/r0");
    Ok(())
}
