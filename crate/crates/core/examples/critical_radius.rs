//! Energy-correction profile and the critical radius where it meets the true
//! correction E_exact - E_ES.

use std::env;

use cornell_lab::analysis::analyze;
use cornell_lab::asymptotic::AsymptoticModel;
use cornell_lab::SystemParams;

fn main() -> cornell_lab::Result<()> {
    let args: Vec<f64> = env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, b) = (
        args.first().copied().unwrap_or(1.0),
        args.get(1).copied().unwrap_or(1.0),
    );
    let p = SystemParams::cornell(a, b)?;
    let res = analyze(&p)?;
    let model = AsymptoticModel::new(&p);

    println!(
        "a={a} b={b}: E_ES={:.9} E_exact={:.9} dE={:.9}",
        res.e_es, res.e_exact, res.delta_e
    );
    println!(
        "r0={:.9}  r_dE={:.16}  regime={}",
        res.r0_asym, res.r_delta_e, res.regime
    );
    println!("\n{:>8}  {:>14}  {:>14}", "r", "dE(r)", "susy form");
    for k in 1..=10 {
        let r = res.r_delta_e * f64::from(k) / 5.0;
        println!(
            "{r:>8.4}  {:>14.9}  {:>14.9}",
            model.delta_e_profile(r)?,
            model.susy_delta_e(r)?
        );
    }
    Ok(())
}
