//! Independent numerical eigenvalues of the full radial Hamiltonian
//!
//! ```text
//! -(1/2m) u'' + [-a/r + Λ(Λ+1)/(2m r²) + b r] u = E u,   u(0) = u(r_max) = 0
//! ```
//!
//! Two unrelated discretizations are provided: a second-order finite
//! difference matrix solved by Sturm-sequence bisection with Richardson
//! extrapolation ([`solve_eigenvalue_matrix`]) and Numerov shooting with
//! log-derivative matching ([`solve_eigenvalue_shooting`]). They share only
//! the grid-sizing policy in [`auto_grid`].

mod matrix;
mod shooting;

pub use matrix::solve_eigenvalue_matrix;
pub use shooting::{shooting_bracket, solve_eigenvalue_shooting};

use crate::coulomb::coulomb_energy;
use crate::error::{Error, Result};
use crate::params::{effective_potential_unchecked, SystemParams};

pub const MIN_POINTS: usize = 500;
/// Hard cap on interior points of the coarsest grid.
pub const MAX_POINTS: usize = 400_000;
/// `∫ κ dr` beyond the turning point; the tail amplitude is about `e^{-36}`.
const TAIL_EXPONENT: f64 = 36.0;
/// Grid points per turning-point radius.
const POINTS_PER_TURNING_RADIUS: f64 = 2000.0;
/// Richardson disagreement above which a result is rejected outright.
pub const MAX_EST_ERROR: f64 = 1e-5;

/// Uniform grid on `[0, r_max]` with `points` interior nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    r_max: f64,
    points: usize,
}

impl RadialGrid {
    pub fn new(r_max: f64, points: usize) -> Result<Self> {
        if !(r_max.is_finite() && r_max > 0.0) {
            return Err(Error::invalid("r_max", "r_max > 0", r_max));
        }
        if points < MIN_POINTS {
            return Err(Error::invalid("points", "points >= 500", points as f64));
        }
        Ok(Self { r_max, points })
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        self.r_max / (self.points + 1) as f64
    }

    /// Same domain with the spacing halved.
    pub fn halved(&self) -> Self {
        Self {
            r_max: self.r_max,
            points: 2 * self.points + 1,
        }
    }

    /// Domain stretched by `factor` at (approximately) the same spacing.
    pub fn stretched(&self, factor: f64) -> Self {
        let h = self.spacing();
        let r_max = self.r_max * factor;
        Self {
            r_max,
            points: ((r_max / h).ceil() as usize)
                .saturating_sub(1)
                .max(MIN_POINTS),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Matrix,
    Shooting,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResult {
    pub energy: f64,
    pub node_count: usize,
    pub grid: RadialGrid,
    pub est_error: f64,
    pub method: Method,
}

/// Accuracy policy for [`solve_auto`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSettings {
    /// Target Richardson error estimate in GeV.
    pub target_error: f64,
    /// Largest coarse-grid size the refinement loop may reach.
    pub max_points: usize,
}

impl Default for OracleSettings {
    fn default() -> Self {
        Self {
            target_error: 1e-6,
            max_points: MAX_POINTS,
        }
    }
}

/// Rough upper estimate of the n-th level, used only to size the grid.
pub(crate) fn energy_estimate(p: &SystemParams, n: u32) -> f64 {
    let m = p.m();
    let b = p.b();
    let cent = p.lambda().centrifugal();
    // a = 0 level: centrifugal-plus-linear minimum plus a WKB linear-well spacing
    let well_min = if cent > 0.0 {
        let r = (cent / (m * b)).cbrt();
        cent / (2.0 * m * r * r) + b * r
    } else {
        0.0
    };
    let wkb = (1.5 * std::f64::consts::PI * (f64::from(n) + 0.75)).powf(2.0 / 3.0);
    let linear = well_min + (b * b / (2.0 * m)).cbrt() * wkb;
    if p.a() > 0.0 {
        let nu = f64::from(n) + p.lambda().value() + 1.0;
        let mean_r = (3.0 * nu * nu - cent) / (2.0 * m * p.a());
        linear.min(coulomb_energy(p, n) + b * mean_r)
    } else {
        linear
    }
}

/// Outermost radius where `V_eff(r) = energy` (the start of the forbidden tail).
pub(crate) fn outer_turning_point(p: &SystemParams, energy: f64) -> f64 {
    let v = |r: f64| effective_potential_unchecked(p, r);
    let cent = p.lambda().centrifugal();
    // r³ V'(r) = a r + b r³ - Λ(Λ+1)/m is increasing, so V rises beyond its zero
    let r_min = if cent > 0.0 {
        let hi = (cent / (p.m() * p.b())).cbrt();
        let slope = |r: f64| p.a() * r + p.b() * r * r * r - cent / p.m();
        bisect(slope, 0.0, hi)
    } else {
        0.0
    };
    let lo = r_min.max(1e-12);
    if v(lo) >= energy {
        return lo;
    }
    let mut hi = lo.max(1.0);
    while v(hi) < energy {
        hi *= 2.0;
    }
    bisect(|r| v(r) - energy, lo, hi)
}

fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * hi {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Radius where `∫_{r_t}^{r} κ dr` reaches `exponent`, `κ = √(2m (V - E))`.
pub(crate) fn tail_end(p: &SystemParams, energy: f64, r_t: f64, exponent: f64) -> f64 {
    let kappa = |r: f64| {
        (2.0 * p.m() * (effective_potential_unchecked(p, r) - energy))
            .max(0.0)
            .sqrt()
    };
    let c = (2.0 * p.m() * p.b()).cbrt();
    let length = r_t + 1.0 / c;
    let mut r = r_t;
    let mut acc = 0.0;
    let mut k_prev = kappa(r);
    while acc < exponent {
        let step = (0.05 / k_prev.max(1.0 / length)).min(0.05 * length);
        let k = kappa(r + step);
        acc += 0.5 * (k + k_prev) * step;
        r += step;
        k_prev = k;
    }
    r
}

#[cfg(test)]
/// Tail exponent `∫ κ dr` from the turning point of `energy` to `r_max`.
pub(crate) fn tail_exponent(p: &SystemParams, energy: f64, r_max: f64) -> f64 {
    let r_t = outer_turning_point(p, energy);
    if r_t >= r_max {
        return 0.0;
    }
    let steps = 4000;
    let h = (r_max - r_t) / steps as f64;
    let kappa = |r: f64| {
        (2.0 * p.m() * (effective_potential_unchecked(p, r) - energy))
            .max(0.0)
            .sqrt()
    };
    (0..steps)
        .map(|i| {
            let r = r_t + (i as f64 + 0.5) * h;
            kappa(r) * h
        })
        .sum()
}

/// Grid sized from the estimated turning point of level `n`.
///
/// `r_max` is placed where the WKB tail exponent reaches 36; the spacing is
/// at most (turning point)/2000.
pub fn auto_grid(p: &SystemParams, n: u32) -> RadialGrid {
    let energy = energy_estimate(p, n);
    let r_t = outer_turning_point(p, energy);
    let r_max = tail_end(p, energy, r_t, TAIL_EXPONENT);
    let h = r_t / POINTS_PER_TURNING_RADIUS;
    let points = ((r_max / h).ceil() as usize)
        .saturating_sub(1)
        .clamp(MIN_POINTS, MAX_POINTS);
    RadialGrid { r_max, points }
}

/// Matrix eigenvalue on an automatically sized grid, refined until the
/// Richardson estimate meets `settings.target_error`.
pub fn solve_auto(p: &SystemParams, n: u32, settings: &OracleSettings) -> Result<EigenResult> {
    let mut grid = auto_grid(p, n);
    let mut stretches = 0;
    let mut best: Option<EigenResult> = None;
    loop {
        match solve_eigenvalue_matrix(p, n, grid) {
            Ok(res) if res.est_error <= settings.target_error => return Ok(res),
            Ok(res) => {
                // Past the rounding floor a finer grid only makes things worse.
                if let Some(prev) = best.filter(|b| b.est_error <= res.est_error) {
                    return Ok(prev);
                }
                let next = grid.halved();
                if next.points > settings.max_points {
                    return Ok(res);
                }
                best = Some(res);
                grid = next;
            }
            Err(Error::GridTooCoarse { .. }) if grid.halved().points <= settings.max_points => {
                grid = grid.halved();
            }
            Err(Error::DomainTooSmall { .. }) if stretches < 6 => {
                grid = grid.stretched(1.5);
                stretches += 1;
            }
            Err(e) => return Err(e),
        }
    }
}
