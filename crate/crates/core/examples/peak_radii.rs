//! Asymptotic peak radius r0 of r^(Lambda+1) Ai(c r) and its b^(-1/3) scaling.

use cornell_lab::asymptotic::AsymptoticModel;
use cornell_lab::SystemParams;

fn main() -> cornell_lab::Result<()> {
    let unit = AsymptoticModel::new(&SystemParams::cornell(1.0, 1.0)?).asymptotic_peak_radius()?;
    println!(
        "{:>6}  {:>3}  {:>10}  {:>16}",
        "b", "l", "r0", "r0(1) b^(-1/3)"
    );
    for b in [0.01_f64, 1.0, 100.0] {
        for l in [0, 1, 2] {
            let p = SystemParams::cornell(1.0, b)?.with_l(l)?;
            let r0 = AsymptoticModel::new(&p).asymptotic_peak_radius()?;
            let scaled = if l == 0 {
                format!("{:.6}", unit * b.powf(-1.0 / 3.0))
            } else {
                String::new()
            };
            println!("{b:>6}  {l:>3}  {r0:>10.6}  {scaled:>16}");
        }
    }
    Ok(())
}
