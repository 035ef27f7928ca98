//! The exactly solvable Coulomb-plus-centrifugal sector.
//!
//! Energies `E_n = -m a² / (2 (n+Λ+1)²)` with unnormalized radial functions
//! `e^{-g/2} g^{Λ+1} L_n^{2Λ+1}(g)`, `g(r) = 2 m a r / (n+Λ+1)`. Everything
//! is evaluated in g-space; normalization never enters downstream quantities.

use crate::error::{Error, Result};
use crate::params::{RadialPoint, SystemParams};
use crate::specfun::laguerre;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombState {
    pub n: u32,
    pub energy: f64,
    /// Laguerre order `2Λ + 1`.
    pub alpha: f64,
    /// `dg/dr`.
    pub g_slope: f64,
}

impl CoulombState {
    pub fn new(p: &SystemParams, n: u32) -> Self {
        Self {
            n,
            energy: coulomb_energy(p, n),
            alpha: 2.0 * p.lambda().value() + 1.0,
            g_slope: 2.0 * p.m() * p.a() / principal(p, n),
        }
    }
}

/// `n + Λ + 1`.
fn principal(p: &SystemParams, n: u32) -> f64 {
    f64::from(n) + p.lambda().value() + 1.0
}

fn require_coulomb(p: &SystemParams) -> Result<()> {
    if p.a() > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("a", "a > 0 for the Coulomb map", p.a()))
    }
}

/// Exact Coulomb-sector energy; 0 (the continuum threshold) when a = 0.
pub fn coulomb_energy(p: &SystemParams, n: u32) -> f64 {
    let nu = principal(p, n);
    -p.m() * p.a() * p.a() / (2.0 * nu * nu)
}

pub fn g_map(p: &SystemParams, n: u32, r: f64) -> Result<f64> {
    let r = RadialPoint::new(r)?.get();
    require_coulomb(p)?;
    Ok(2.0 * p.m() * p.a() * r / principal(p, n))
}

pub fn r_of_g(p: &SystemParams, n: u32, g: f64) -> Result<f64> {
    require_coulomb(p)?;
    if g.is_nan() || g <= 0.0 {
        return Err(Error::invalid("g", "g > 0", g));
    }
    Ok(g * principal(p, n) / (2.0 * p.m() * p.a()))
}

/// `R(g) = (n+Λ+1)/g - Λ(Λ+1)/g² - 1/4`.
pub fn big_r_of_g(n: u32, lambda: f64, g: f64) -> Result<f64> {
    if !g.is_finite() {
        return Err(Error::NonFinite("big_r_of_g"));
    }
    if g <= 0.0 {
        return Err(Error::invalid("g", "g > 0", g));
    }
    let nu = f64::from(n) + lambda + 1.0;
    Ok(nu / g - lambda * (lambda + 1.0) / (g * g) - 0.25)
}

/// Unnormalized `e^{-g/2} g^{Λ+1} L_n^{2Λ+1}(g)` at radius r.
pub fn coulomb_wavefunction(p: &SystemParams, n: u32, r: f64) -> Result<f64> {
    let g = g_map(p, n, r)?;
    let lambda = p.lambda().value();
    Ok((-0.5 * g).exp() * g.powf(lambda + 1.0) * laguerre(n, 2.0 * lambda + 1.0, g))
}

/// Maximum of the ground-state Coulomb function, `(Λ+1)² / (m a)`.
///
/// The energy-correction profile vanishes identically here.
pub fn coulomb_peak_radius(p: &SystemParams) -> Result<f64> {
    require_coulomb(p)?;
    let nu = p.lambda().value() + 1.0;
    Ok(nu * nu / (p.m() * p.a()))
}

/// Ground-state superpotential `W = -(1/√(2m)) F' g' / F`,
/// i.e. `(1/√(2m)) (m a/(Λ+1) - (Λ+1)/r)`; the a = 0 limit is kept.
pub fn ground_superpotential(p: &SystemParams, r: f64) -> Result<f64> {
    let r = RadialPoint::new(r)?.get();
    let nu = p.lambda().value() + 1.0;
    Ok((p.m() * p.a() / nu - nu / r) / (2.0 * p.m()).sqrt())
}

/// `⟨r⟩` in the Coulomb ground state, `(2Λ+3)(Λ+1) / (2 m a)`.
pub fn ground_state_mean_radius(p: &SystemParams) -> Result<f64> {
    require_coulomb(p)?;
    let lambda = p.lambda().value();
    Ok((2.0 * lambda + 3.0) * (lambda + 1.0) / (2.0 * p.m() * p.a()))
}
