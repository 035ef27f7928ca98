//! Exactly solvable Coulomb-plus-centrifugal sector: energies, the g map,
//! wavefunctions and peak radii for a few effective angular momenta.

use cornell_lab::coulomb::{coulomb_energy, coulomb_peak_radius, coulomb_wavefunction, g_map};
use cornell_lab::SystemParams;

fn main() -> cornell_lab::Result<()> {
    let base = SystemParams::cornell(1.0, 1.0)?;
    for (dim, l) in [(3, 0), (4, 0), (3, 1), (3, 2)] {
        let p = base.with_dim(dim)?.with_l(l)?;
        let energies: Vec<String> = (0..4)
            .map(|n| format!("{:.6}", coulomb_energy(&p, n)))
            .collect();
        println!(
            "N={dim} l={l} Lambda={:<4} E_n = [{}]  peak r = {:.4}",
            p.lambda().value(),
            energies.join(", "),
            coulomb_peak_radius(&p)?
        );
    }

    let p = base;
    println!("\nground state, a=1, N=3, l=0");
    for r in [0.5, 1.0, 2.0, 4.0, 8.0] {
        println!(
            "  r={r:<4} g={:.3}  u(r)={:.6}",
            g_map(&p, 0, r)?,
            coulomb_wavefunction(&p, 0, r)?
        );
    }
    Ok(())
}
