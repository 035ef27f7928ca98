//! Bracketed scalar root finding.

use crate::error::{Error, Result};

/// Search interval and stopping rule shared by every root solve in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub tol_abs: f64,
    pub max_iter: usize,
}

impl RootBracket {
    pub const DEFAULT_TOL: f64 = 1e-14;
    pub const DEFAULT_MAX_ITER: usize = 200;

    /// Bracket on positive radii, `0 < lo < hi`.
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::NonFinite("root bracket"));
        }
        if lo <= 0.0 {
            return Err(Error::invalid("bracket lo", "0 < lo", lo));
        }
        if hi <= lo {
            return Err(Error::invalid("bracket hi", "lo < hi", hi));
        }
        Ok(Self {
            lo,
            hi,
            tol_abs: Self::DEFAULT_TOL,
            max_iter: Self::DEFAULT_MAX_ITER,
        })
    }

    pub fn with_tolerance(mut self, tol_abs: f64) -> Result<Self> {
        if tol_abs.is_nan() || tol_abs <= 0.0 {
            return Err(Error::invalid("tol", "tol > 0", tol_abs));
        }
        self.tol_abs = tol_abs;
        Ok(self)
    }
}

/// Brent's method: inverse quadratic interpolation guarded by bisection.
///
/// Works on any interval with a sign change (it does not require `lo > 0`).
pub fn brent<F>(mut f: F, lo: f64, hi: f64, tol_abs: f64, max_iter: usize) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa.is_finite() && fb.is_finite()) {
        return Err(Error::NonFinite("brent endpoint"));
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoRoot(format!(
            "no sign change on [{lo}, {hi}] (f = {fa:e}, {fb:e})"
        )));
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol_abs;
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b);
        if !fb.is_finite() {
            return Err(Error::NonFinite("brent iterate"));
        }
    }
    Err(Error::NoConvergence {
        method: "brent",
        iterations: max_iter,
    })
}

/// [`brent`] over a validated [`RootBracket`].
pub fn solve_in<F>(f: F, bracket: &RootBracket) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    brent(f, bracket.lo, bracket.hi, bracket.tol_abs, bracket.max_iter)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_simple_roots() {
        let r = brent(|x| x * x - 2.0, 0.0, 2.0, 1e-15, 100).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
        let r = brent(|x| x.cos() - x, 0.0, 1.0, 1e-15, 100).unwrap();
        assert!((r.cos() - r).abs() < 1e-15);
    }

    #[test]
    fn handles_flat_and_steep_functions() {
        let r = brent(|x| (x - 1.0).powi(3), 0.0, 3.0, 1e-14, 200).unwrap();
        assert!((r - 1.0).abs() < 1e-4);
        let r = brent(|x| (1e3 * (x - 0.3)).tanh(), 0.0, 1.0, 1e-15, 200).unwrap();
        assert!((r - 0.3).abs() < 1e-14);
    }

    #[test]
    fn reports_missing_sign_change() {
        assert!(matches!(
            brent(|x| x * x + 1.0, -1.0, 1.0, 1e-12, 50),
            Err(Error::NoRoot(_))
        ));
    }

    #[test]
    fn bracket_validation() {
        assert!(RootBracket::new(0.0, 1.0).is_err());
        assert!(RootBracket::new(2.0, 1.0).is_err());
        assert!(RootBracket::new(1.0, 2.0)
            .unwrap()
            .with_tolerance(0.0)
            .is_err());
    }
}
