//! The reference eigenvalue engine: finite-difference matrix with Richardson
//! extrapolation, cross-checked by Numerov shooting.

use cornell_lab::oracle::{
    auto_grid, shooting_bracket, solve_auto, solve_eigenvalue_shooting, OracleSettings,
};
use cornell_lab::specfun::airy_first_zero;
use cornell_lab::SystemParams;

fn main() -> cornell_lab::Result<()> {
    let settings = OracleSettings::default();
    let cases = [
        ("Cornell a=1 b=1", SystemParams::cornell(1.0, 1.0)?),
        ("pure linear a=0 b=1", SystemParams::cornell(0.0, 1.0)?),
        ("near Coulomb b=1e-8", SystemParams::cornell(1.0, 1e-8)?),
        ("N=4 l=3 b=100", SystemParams::new(1.0, 100.0, 0.5, 4, 3)?),
    ];
    for (name, p) in cases {
        println!("{name}: grid {:?}", auto_grid(&p, 0));
        for n in 0..3 {
            let m = solve_auto(&p, n, &settings)?;
            let s = solve_eigenvalue_shooting(&p, n, shooting_bracket(&p, n))?;
            println!(
                "  n={n} matrix {:.9} (+-{:.1e}, {} nodes)  shooting {:.9}  diff {:.1e}",
                m.energy,
                m.est_error,
                m.node_count,
                s.energy,
                (m.energy - s.energy).abs()
            );
        }
    }
    println!("-a1 = {:.9}", -airy_first_zero());
    Ok(())
}
