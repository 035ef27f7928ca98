//! Ai and Ai' across the evaluation regimes, the first zero, and the
//! log-derivative that drives the moderating function.

use cornell_lab::specfun::{airy, airy_first_zero, airy_log_deriv, gamma_fn, laguerre};

fn main() -> cornell_lab::Result<()> {
    println!(
        "{:>8}  {:>22}  {:>22}  {:>12}",
        "x", "Ai(x)", "Ai'(x)", "Ai'/Ai"
    );
    for x in [-12.0, -5.0, -2.0, 0.0, 1.0, 2.5, 5.0, 8.5, 15.0] {
        let v = airy(x)?;
        let ld = airy_log_deriv(x).map_or("-".to_string(), |d| format!("{d:.8}"));
        println!("{x:>8}  {:>22.15e}  {:>22.15e}  {ld:>12}", v.ai, v.ai_prime);
    }
    println!("\nfirst zero of Ai: {:.15}", airy_first_zero());
    println!("Gamma(1/3) = {:.15}", gamma_fn(1.0 / 3.0)?);
    println!("L_3^(1)(2) = {:.15}", laguerre(3, 1.0, 2.0));
    Ok(())
}
