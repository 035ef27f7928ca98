use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for x > 0.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite("gamma_fn"));
    }
    if x <= 0.0 {
        return Err(Error::invalid("x", "x > 0", x));
    }
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x keeps the Lanczos sum in its accurate range
        return Ok(lanczos(x + 1.0) / x);
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut sum = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // split the power so t^{z+1/2} e^{-t} does not overflow before x ~ 171
    let half = t.powf(0.5 * (z + 0.5));
    (2.0 * std::f64::consts::PI).sqrt() * half * (half * (-t).exp()) * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_values() {
        assert!((gamma_fn(1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((gamma_fn(0.5).unwrap() - std::f64::consts::PI.sqrt()).abs() < 1e-15);
        let mut fact = 1.0;
        for n in 1..20 {
            fact *= n as f64;
            let g = gamma_fn(n as f64 + 1.0).unwrap();
            assert!(((g - fact) / fact).abs() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn rejects_poles() {
        assert!(gamma_fn(0.0).is_err());
        assert!(gamma_fn(-1.5).is_err());
        assert!(gamma_fn(f64::NAN).is_err());
    }

    #[test]
    fn recurrence_holds() {
        let mut x = 0.1;
        while x < 29.0 {
            let lhs = gamma_fn(x + 1.0).unwrap();
            let rhs = x * gamma_fn(x).unwrap();
            assert!(((lhs - rhs) / lhs).abs() < 1e-13, "x = {x}");
            x += 0.37;
        }
    }
}
