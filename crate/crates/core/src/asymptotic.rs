//! Airy moderating function of the linear term and the energy-correction
//! profile built on it.
//!
//! The ground state is factorized as `Ψ = F(g) f(r)` with `F` the Coulomb
//! function and `f(r) = Ai(c r)`, `c = (2mb)^{1/3}`, which solves
//! `f'' = 2mb r f`. The correction
//!
//! ```text
//! ΔE(r) = (a/(Λ+1) - (Λ+1)/(m r)) f'(r)/f(r)
//! ```
//!
//! depends on r; the radius `r_ΔE` where it equals `E_exact - E_ES` is the
//! critical radius used by [`crate::analysis`] to classify the configuration.

use crate::coulomb::{coulomb_energy, coulomb_peak_radius, ground_superpotential};
use crate::error::{Error, Result};
use crate::params::{EffectiveAngularMomentum, RadialPoint, SystemParams};
use crate::roots::{brent, solve_in};
use crate::specfun::{airy_log_deriv_unchecked, airy_unchecked};

pub use crate::roots::RootBracket;

/// Number of log-spaced samples used to detect multiple crossings.
const SCAN_SAMPLES: usize = 512;

/// `|Ai'(0)/Ai(0)|`.
const LOG_DERIV_ORIGIN: f64 = 0.729_011_132_947_227;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticModel {
    params: SystemParams,
    scale: f64,
}

/// Solution of the critical-radius condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalRadius {
    pub r: f64,
    /// `E_exact - E_ES` that the profile was matched to.
    pub target: f64,
    /// Number of distinct crossings found in the search interval.
    pub root_count: usize,
    pub multiple_roots: bool,
}

impl AsymptoticModel {
    pub fn new(params: &SystemParams) -> Self {
        Self {
            params: *params,
            scale: (2.0 * params.m() * params.b()).cbrt(),
        }
    }

    /// `c = (2mb)^{1/3}`.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn lambda(&self) -> EffectiveAngularMomentum {
        self.params.lambda()
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    /// `Ai(c r)`.
    pub fn f_value(&self, r: f64) -> Result<f64> {
        let r = RadialPoint::new(r)?.get();
        Ok(airy_unchecked(self.scale * r).ai)
    }

    /// `f'/f = c Ai'(c r)/Ai(c r)`, negative for every r > 0.
    pub fn f_log_deriv(&self, r: f64) -> Result<f64> {
        let r = RadialPoint::new(r)?.get();
        Ok(self.log_deriv(r))
    }

    fn log_deriv(&self, r: f64) -> f64 {
        self.scale * airy_log_deriv_unchecked(self.scale * r)
    }

    /// `f''/(2m f) - b r` with `f''` taken from the Airy equation.
    pub fn airy_ode_residual(&self, r: f64) -> Result<f64> {
        let r = RadialPoint::new(r)?.get();
        let c3 = self.scale * self.scale * self.scale;
        Ok(c3 * r / (2.0 * self.params.m()) - self.params.b() * r)
    }

    /// Same residual with `f''` from a five-point central difference of [`Self::f_value`].
    pub fn airy_ode_residual_fd(&self, r: f64) -> Result<f64> {
        let r = RadialPoint::new(r)?.get();
        let h = (1e-2 / self.scale).min(0.25 * r);
        let f = |x: f64| airy_unchecked(self.scale * x).ai;
        let f0 = f(r);
        let fpp = (-f(r + 2.0 * h) + 16.0 * f(r + h) - 30.0 * f0 + 16.0 * f(r - h)
            - f(r - 2.0 * h))
            / (12.0 * h * h);
        Ok(fpp / (2.0 * self.params.m() * f0) - self.params.b() * r)
    }

    /// Maximum `r₀` of `r^{Λ+1} f(r)`: the root of `(Λ+1)/r + f'/f = 0`.
    ///
    /// Independent of the Coulomb strength.
    pub fn asymptotic_peak_radius(&self) -> Result<f64> {
        let nu = self.lambda().value() + 1.0;
        // (Λ+1)/r falls from +∞ while -f'/f rises from c·|Ai'(0)/Ai(0)|
        let hi = nu / (LOG_DERIV_ORIGIN * self.scale);
        let lo = 0.5 * nu / self.log_deriv(hi).abs();
        let bracket = RootBracket::new(lo, hi)?;
        solve_in(|r| nu / r + self.log_deriv(r), &bracket)
    }

    /// Energy-correction profile `ΔE(r)` for the ground state.
    pub fn delta_e_profile(&self, r: f64) -> Result<f64> {
        let r = RadialPoint::new(r)?.get();
        Ok(self.profile(r))
    }

    fn profile(&self, r: f64) -> f64 {
        let nu = self.lambda().value() + 1.0;
        let m = self.params.m();
        (self.params.a() / nu - nu / (m * r)) * self.log_deriv(r)
    }

    /// The same correction from the superpotential split, `-2 W_ES ΔW` with
    /// `ΔW = -f'/(√(2m) f)`.
    ///
    /// The sign follows from `(W + ΔW)² - (W + ΔW)'/√(2m) = V - E` once the
    /// Coulomb part and `ΔW² - ΔW'/√(2m) = b r` are subtracted.
    pub fn susy_delta_e(&self, r: f64) -> Result<f64> {
        let w_es = ground_superpotential(&self.params, r)?;
        let delta_w = -self.f_log_deriv(r)? / (2.0 * self.params.m()).sqrt();
        Ok(-2.0 * w_es * delta_w)
    }

    /// Critical radius where `ΔE(r) = e_exact - E_ES`.
    ///
    /// Default search interval: `(0, (Λ+1)²/(m a))` when a > 0, since the
    /// profile is positive only inside the Coulomb peak; an interval grown
    /// outward from `r₀` when a = 0. If the profile crosses the target more
    /// than once, the crossing nearest `r₀` is returned and flagged.
    pub fn solve_r_delta_e(
        &self,
        e_exact: f64,
        bracket: Option<RootBracket>,
    ) -> Result<CriticalRadius> {
        if !e_exact.is_finite() {
            return Err(Error::NonFinite("e_exact"));
        }
        let a = self.params.a();
        let target = e_exact - coulomb_energy(&self.params, 0);
        if a > 0.0 && target == 0.0 && bracket.is_none() {
            return Ok(CriticalRadius {
                r: coulomb_peak_radius(&self.params)?,
                target,
                root_count: 1,
                multiple_roots: false,
            });
        }
        if target <= 0.0 {
            return Err(Error::NoRoot(format!(
                "energy correction {target:e} must be positive (e_exact below the Coulomb level)"
            )));
        }
        let r0 = self.asymptotic_peak_radius()?;
        let phi = |r: f64| self.profile(r) - target;

        let bracket = match bracket {
            Some(b) => b,
            None if a > 0.0 => {
                let peak = coulomb_peak_radius(&self.params)?;
                let lo = (1e-6f64).min(1e-6 * peak);
                RootBracket::new(lo, peak * (1.0 - 1e-12))?
            }
            None => {
                let (mut lo, mut hi) = (r0, r0);
                let mut grow = 0;
                while phi(lo) <= 0.0 && grow < 200 {
                    lo *= 0.5;
                    grow += 1;
                }
                while phi(hi) >= 0.0 && grow < 400 {
                    hi *= 2.0;
                    grow += 1;
                }
                RootBracket::new(lo, hi)?
            }
        };

        let roots = scan_roots(&phi, &bracket)?;
        let Some(&r) = roots
            .iter()
            .min_by(|x, y| (**x - r0).abs().total_cmp(&(**y - r0).abs()))
        else {
            return Err(Error::NoRoot(format!(
                "profile never reaches ΔE = {target:e} on [{}, {}] (max {:e})",
                bracket.lo,
                bracket.hi,
                self.profile(bracket.lo)
            )));
        };
        Ok(CriticalRadius {
            r,
            target,
            root_count: roots.len(),
            multiple_roots: roots.len() > 1,
        })
    }
}

/// All sign changes of `phi` on a log-spaced sample of the bracket, each refined by Brent.
fn scan_roots<F: Fn(f64) -> f64>(phi: &F, bracket: &RootBracket) -> Result<Vec<f64>> {
    let ratio = (bracket.hi / bracket.lo).ln() / SCAN_SAMPLES as f64;
    let node = |i: usize| {
        if i == SCAN_SAMPLES {
            bracket.hi
        } else {
            bracket.lo * (ratio * i as f64).exp()
        }
    };
    let mut roots = Vec::new();
    let mut x_prev = node(0);
    let mut f_prev = phi(x_prev);
    if f_prev == 0.0 {
        roots.push(x_prev);
    }
    for i in 1..=SCAN_SAMPLES {
        let x = node(i);
        let fx = phi(x);
        if fx == 0.0 {
            roots.push(x);
        } else if f_prev != 0.0 && fx.signum() != f_prev.signum() {
            roots.push(brent(phi, x_prev, x, bracket.tol_abs, bracket.max_iter)?);
        }
        x_prev = x;
        f_prev = fx;
    }
    Ok(roots)
}
