//! First-order perturbation theory for the linear term against the exact
//! correction: fine for weak confinement, poor once b is of order one.

use cornell_lab::analysis::{analyze, first_order_pt};
use cornell_lab::SystemParams;

fn main() -> cornell_lab::Result<()> {
    println!(
        "{:>6}  {:>10}  {:>10}  {:>8}",
        "b", "<br>", "exact dE", "rel err"
    );
    for b in [0.001, 0.01, 0.03, 0.1, 0.3, 1.0, 3.0] {
        let p = SystemParams::cornell(1.0, b)?;
        let pt = first_order_pt(&p)?;
        let exact = analyze(&p)?.delta_e;
        println!(
            "{b:>6}  {pt:>10.5}  {exact:>10.5}  {:>7.1}%",
            100.0 * (pt - exact).abs() / exact
        );
    }
    Ok(())
}
