//! Numerov shooting with node-count bracketing and log-derivative matching.

use super::{auto_grid, EigenResult, Method, RadialGrid, MAX_EST_ERROR};
use crate::error::{Error, Result};
use crate::params::{effective_potential_unchecked, SystemParams};
use crate::roots::brent;

const RENORMALIZE_ABOVE: f64 = 1e100;

/// Numerov integrator for `u'' = k(r) u`, `k = 2m (V_eff(r) - E)`, on a
/// uniform mesh `r_i = i h`, `i = 0..=intervals`.
struct Numerov<'a> {
    p: &'a SystemParams,
    h: f64,
    intervals: usize,
}

impl<'a> Numerov<'a> {
    fn new(p: &'a SystemParams, grid: &RadialGrid) -> Self {
        Self {
            p,
            h: grid.spacing(),
            intervals: grid.points() + 1,
        }
    }

    fn r(&self, i: usize) -> f64 {
        i as f64 * self.h
    }

    fn w(&self, i: usize, e: f64) -> f64 {
        let k = 2.0 * self.p.m() * (effective_potential_unchecked(self.p, self.r(i)) - e);
        1.0 - self.h * self.h * k / 12.0
    }

    /// Regular solution near the origin, `r^{Λ+1} (1 + c₁ r + c₂ r²)`.
    fn series(&self, r: f64, e: f64) -> f64 {
        let lam = self.p.lambda().value();
        let m = self.p.m();
        let s = lam + 1.0;
        let c1 = -m * self.p.a() / s;
        let c2 = (-2.0 * m * self.p.a() * c1 - 2.0 * m * e) / (4.0 * lam + 6.0);
        // scale out r^{Λ+1} relative to r = h so high Λ cannot underflow
        (r / self.h).powf(s) * (1.0 + c1 * r + c2 * r * r)
    }

    /// Outward solution up to index `last`; returns `(u[last-1], u[last], nodes)`
    /// where `nodes` counts sign changes on `u[1..=last]`.
    fn outward(&self, e: f64, last: usize) -> (f64, f64, usize) {
        let mut u_prev = self.series(self.h, e);
        let mut u = self.series(2.0 * self.h, e);
        let mut nodes = usize::from(u.signum() != u_prev.signum());
        let mut w_prev = self.w(1, e);
        let mut w = self.w(2, e);
        for i in 2..last {
            let w_next = self.w(i + 1, e);
            let u_next = ((12.0 - 10.0 * w) * u - w_prev * u_prev) / w_next;
            if u_next.signum() != u.signum() {
                nodes += 1;
            }
            u_prev = u;
            u = u_next;
            w_prev = w;
            w = w_next;
            if u.abs() > RENORMALIZE_ABOVE {
                u_prev /= RENORMALIZE_ABOVE;
                u /= RENORMALIZE_ABOVE;
            }
        }
        (u_prev, u, nodes)
    }

    /// Inward solution from `u[intervals] = 0`; returns `(u[first], u[first+1])`.
    fn inward(&self, e: f64, first: usize) -> (f64, f64) {
        let n = self.intervals;
        let mut u_next = 0.0;
        let mut u = 1.0;
        let mut w_next = self.w(n, e);
        let mut w = self.w(n - 1, e);
        for i in (first..n - 1).rev() {
            let w_prev = self.w(i, e);
            let u_prev = ((12.0 - 10.0 * w) * u - w_next * u_next) / w_prev;
            u_next = u;
            u = u_prev;
            w_next = w;
            w = w_prev;
            if u.abs() > RENORMALIZE_ABOVE {
                u_next /= RENORMALIZE_ABOVE;
                u /= RENORMALIZE_ABOVE;
            }
        }
        (u, u_next)
    }

    /// Number of discrete Dirichlet eigenvalues below `e`.
    fn nodes(&self, e: f64) -> usize {
        self.outward(e, self.intervals).2
    }

    /// Index of the outer classical turning point for energy `e`.
    fn matching_index(&self, e: f64) -> usize {
        let mut idx = 2;
        for i in 2..self.intervals - 1 {
            if effective_potential_unchecked(self.p, self.r(i)) < e {
                idx = i;
            }
        }
        idx.clamp(2, self.intervals - 3)
    }

    /// Log-derivative mismatch at index `i`.
    fn mismatch(&self, e: f64, i: usize) -> f64 {
        let (o0, o1, _) = self.outward(e, i + 1);
        let (i0, i1) = self.inward(e, i);
        (o1 / o0 - i1 / i0) / self.h
    }

    /// Eigenvalue in a bracket whose node counts are `n` and `n + 1`.
    fn eigenvalue(&self, n: usize, mut lo: f64, mut hi: f64) -> Result<f64> {
        let (nodes_lo, nodes_hi) = (self.nodes(lo), self.nodes(hi));
        if nodes_lo != n || nodes_hi != n + 1 {
            return Err(Error::BracketInvalid {
                n: n as u32,
                nodes_lo,
                nodes_hi,
            });
        }
        for _ in 0..200 {
            if hi - lo <= 1e-6 * lo.abs().max(hi.abs()).max(1.0) {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if self.nodes(mid) > n {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let idx = self.matching_index(0.5 * (lo + hi));
        let tol = 4.0 * f64::EPSILON * lo.abs().max(hi.abs());
        match brent(|e| self.mismatch(e, idx), lo, hi, tol, 200) {
            Ok(e) => Ok(e),
            Err(_) => {
                // mismatch pole inside the bracket: finish on node counts
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    if self.nodes(mid) > n {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                Ok(0.5 * (lo + hi))
            }
        }
    }

    /// Widen `[e - δ, e + δ]` until its node counts are `n` and `n + 1`.
    fn bracket_around(&self, n: usize, e: f64) -> (f64, f64) {
        let mut width = 1e-4 * e.abs().max(1.0);
        let (mut lo, mut hi) = (e - width, e + width);
        while self.nodes(lo) > n {
            width *= 2.0;
            lo = e - width;
        }
        while self.nodes(hi) <= n {
            width *= 2.0;
            hi = e + width;
        }
        (lo, hi)
    }
}

/// Energy bracket for level `n` built from node counts alone.
///
/// Counts are taken on the grid [`auto_grid`] picks for this level, so the
/// bracket is independent of the matrix oracle.
pub fn shooting_bracket(p: &SystemParams, n: u32) -> (f64, f64) {
    let grid = auto_grid(p, n);
    let num = Numerov::new(p, &grid);
    let k = n as usize;
    let mut lo = (1..grid.points())
        .map(|i| effective_potential_unchecked(p, num.r(i)))
        .fold(f64::INFINITY, f64::min);
    let mut step = 1.0;
    let mut hi = lo + step;
    while num.nodes(hi) <= k {
        lo = hi;
        step *= 2.0;
        hi = lo + step;
    }
    for _ in 0..200 {
        let (c_lo, c_hi) = (num.nodes(lo), num.nodes(hi));
        if c_lo == k && c_hi == k + 1 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if num.nodes(mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// n-th eigenvalue by Numerov shooting on the automatic grid and on its
/// halved-spacing refinement, combined by h⁴ Richardson extrapolation.
///
/// `e_bracket` must contain exactly the n-th level: the outward solution must
/// have `n` nodes at its lower end and `n + 1` at its upper end, otherwise
/// [`Error::BracketInvalid`] is returned.
pub fn solve_eigenvalue_shooting(
    p: &SystemParams,
    n: u32,
    e_bracket: (f64, f64),
) -> Result<EigenResult> {
    let (lo, hi) = e_bracket;
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::NonFinite("energy bracket"));
    }
    if hi <= lo {
        return Err(Error::invalid("energy bracket", "lo < hi", hi));
    }
    let k = n as usize;
    let grid = auto_grid(p, n);
    let coarse = Numerov::new(p, &grid);
    let e_h = coarse.eigenvalue(k, lo, hi)?;

    let fine = Numerov::new(p, &grid.halved());
    let (lo2, hi2) = fine.bracket_around(k, e_h);
    let e_h2 = fine.eigenvalue(k, lo2, hi2)?;

    let energy = (16.0 * e_h2 - e_h) / 15.0;
    if !energy.is_finite() {
        return Err(Error::NonFinite("shooting eigenvalue"));
    }
    let est_error = (e_h2 - e_h).abs() / 15.0;
    if est_error > MAX_EST_ERROR {
        return Err(Error::GridTooCoarse {
            disagreement: est_error,
        });
    }
    Ok(EigenResult {
        energy,
        node_count: k,
        grid,
        est_error,
        method: Method::Shooting,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::DEFAULT_MASS;

    #[test]
    fn series_start_satisfies_coulomb_limit() {
        // b tiny: hydrogen-like ground state with 2m = a = 1 is u = r e^{-r/2}
        let p = SystemParams::new(1.0, 1e-12, DEFAULT_MASS, 3, 0).unwrap();
        let grid = RadialGrid::new(60.0, 5999).unwrap();
        let num = Numerov::new(&p, &grid);
        let e = -0.25;
        let r = 2.0 * num.h;
        let exact = (r / num.h) * (-0.5 * r).exp();
        assert!((num.series(r, e) - exact).abs() < 1e-6 * exact);
    }

    #[test]
    fn node_count_brackets_levels() {
        let p = SystemParams::new(1.0, 1.0, DEFAULT_MASS, 3, 0).unwrap();
        let num = Numerov::new(&p, &auto_grid(&p, 2));
        assert_eq!(num.nodes(1.0), 0);
        assert_eq!(num.nodes(1.5), 1);
    }

    #[test]
    fn invalid_bracket_is_rejected() {
        let p = SystemParams::new(1.0, 1.0, DEFAULT_MASS, 3, 0).unwrap();
        let err = solve_eigenvalue_shooting(&p, 0, (1.5, 2.0)).unwrap_err();
        assert!(matches!(
            err,
            Error::BracketInvalid {
                n: 0,
                nodes_lo: 1,
                ..
            }
        ));
        assert!(solve_eigenvalue_shooting(&p, 0, (2.0, 1.0)).is_err());
    }

    #[test]
    fn bracket_from_node_counts_is_valid() {
        let p = SystemParams::new(1.0, 1.0, DEFAULT_MASS, 3, 1).unwrap();
        for n in 0..3 {
            let (lo, hi) = shooting_bracket(&p, n);
            let num = Numerov::new(&p, &auto_grid(&p, n));
            assert_eq!(num.nodes(lo), n as usize);
            assert_eq!(num.nodes(hi), n as usize + 1);
        }
    }
}
