//! Central-difference Hamiltonian, Sturm-sequence bisection and Richardson
//! extrapolation over three successively halved grids.

use super::{EigenResult, Method, RadialGrid, MAX_EST_ERROR};
use crate::error::{Error, Result};
use crate::params::{effective_potential_unchecked, SystemParams};

/// Relative amplitude allowed in the outer 1% of the domain.
const TAIL_TOLERANCE: f64 = 1e-8;

/// Symmetric tridiagonal matrix with constant off-diagonal.
struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiagonal {
    fn hamiltonian(p: &SystemParams, grid: &RadialGrid) -> Self {
        let h = grid.spacing();
        let kinetic = 1.0 / (2.0 * p.m() * h * h);
        let diag = (1..=grid.points())
            .map(|i| 2.0 * kinetic + effective_potential_unchecked(p, i as f64 * h))
            .collect();
        Self {
            diag,
            off: -kinetic,
        }
    }

    /// Number of eigenvalues strictly below `lambda`.
    fn count_below(&self, lambda: f64) -> usize {
        let e2 = self.off * self.off;
        let floor = f64::MIN_POSITIVE.sqrt() * self.off.abs();
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diag.iter().enumerate() {
            q = if i == 0 {
                d - lambda
            } else {
                d - lambda - e2 / q
            };
            if q.abs() < floor {
                q = -floor;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn lower_bound(&self) -> f64 {
        self.diag.iter().copied().fold(f64::INFINITY, f64::min) - 2.0 * self.off.abs()
    }

    /// The k-th eigenvalue (0-based), bisecting from an initial guess.
    fn eigenvalue(&self, k: usize, guess: Option<f64>) -> f64 {
        let (mut lo, mut hi) = match guess {
            Some(e) => {
                let mut width = 1e-3 * e.abs().max(1.0);
                let (mut lo, mut hi) = (e - width, e + width);
                while self.count_below(lo) > k {
                    width *= 2.0;
                    lo = e - width;
                }
                while self.count_below(hi) <= k {
                    width *= 2.0;
                    hi = e + width;
                }
                (lo, hi)
            }
            None => {
                let lo = self.lower_bound();
                let mut step = 1.0;
                let mut hi = lo + step;
                while self.count_below(hi) <= k {
                    step *= 2.0;
                    hi = lo + step;
                }
                (lo, hi)
            }
        };
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
                break;
            }
        }
        0.5 * (lo + hi)
    }

    /// Eigenvector for the eigenvalue nearest `shift`, by inverse iteration
    /// with an unpivoted LDLᵀ factorization of `T - shift`.
    fn eigenvector(&self, shift: f64) -> Vec<f64> {
        let n = self.diag.len();
        let e = self.off;
        let tiny = f64::EPSILON * (self.diag.iter().fold(0.0_f64, |a, d| a.max(d.abs())) + e.abs());
        let mut q = vec![0.0; n];
        for i in 0..n {
            let mut qi = self.diag[i] - shift;
            if i > 0 {
                qi -= e * e / q[i - 1];
            }
            if qi.abs() < tiny {
                qi = tiny;
            }
            q[i] = qi;
        }
        let mut x = vec![1.0; n];
        for _ in 0..3 {
            for i in 1..n {
                x[i] -= e / q[i - 1] * x[i - 1];
            }
            x[n - 1] /= q[n - 1];
            for i in (0..n - 1).rev() {
                x[i] = (x[i] - e * x[i + 1]) / q[i];
            }
            let scale = x.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
            x.iter_mut().for_each(|v| *v /= scale);
        }
        x
    }
}

/// Sign changes of `x`, ignoring entries below `1e-10` of the peak amplitude.
fn count_nodes(x: &[f64]) -> usize {
    let peak = x.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
    let mut last = 0.0;
    let mut nodes = 0;
    for &v in x {
        if v.abs() < 1e-10 * peak {
            continue;
        }
        if last != 0.0 && v.signum() != last {
            nodes += 1;
        }
        last = v.signum();
    }
    nodes
}

/// Bisection resolves an eigenvalue only to a few ulps of the largest matrix
/// entry, the kinetic diagonal 1/(m h^2); the extrapolation weights sum to 5/3.
fn roundoff_floor(p: &SystemParams, grid: &RadialGrid) -> f64 {
    let h = grid.spacing();
    4.0 * f64::EPSILON / (p.m() * h * h)
}

/// n-th eigenvalue on `grid`, `grid/2` and `grid/4`, Richardson-extrapolated.
///
/// `energy` is the second-level extrapolant, `est_error` its distance to the
/// first-level one, floored at the rounding noise of the finest matrix. Fails with [`Error::GridTooCoarse`] when that estimate
/// exceeds 1e-5 and with [`Error::DomainTooSmall`] when the eigenvector has
/// not decayed by `r_max`.
pub fn solve_eigenvalue_matrix(p: &SystemParams, n: u32, grid: RadialGrid) -> Result<EigenResult> {
    let k = n as usize;
    if k >= grid.points() {
        return Err(Error::invalid("n", "n < grid points", f64::from(n)));
    }
    let coarse = Tridiagonal::hamiltonian(p, &grid);
    let e0 = coarse.eigenvalue(k, None);

    let vector = coarse.eigenvector(e0);
    let node_count = count_nodes(&vector);
    let tail_len = (vector.len() / 100).max(3);
    let tail = vector[vector.len() - tail_len..]
        .iter()
        .fold(0.0_f64, |a, v| a.max(v.abs()));
    if tail > TAIL_TOLERANCE {
        return Err(Error::DomainTooSmall {
            r_max: grid.r_max(),
            tail,
        });
    }

    let mid_grid = grid.halved();
    let e1 = Tridiagonal::hamiltonian(p, &mid_grid).eigenvalue(k, Some(e0));
    let fine_grid = mid_grid.halved();
    let e2 = Tridiagonal::hamiltonian(p, &fine_grid).eigenvalue(k, Some(e1));

    let r1 = (4.0 * e1 - e0) / 3.0;
    let r2 = (4.0 * e2 - e1) / 3.0;
    if !r2.is_finite() {
        return Err(Error::NonFinite("matrix eigenvalue"));
    }
    let est_error = (r2 - r1).abs().max(roundoff_floor(p, &fine_grid));
    if est_error > MAX_EST_ERROR {
        return Err(Error::GridTooCoarse {
            disagreement: est_error,
        });
    }
    Ok(EigenResult {
        energy: r2,
        node_count,
        grid,
        est_error,
        method: Method::Matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::DEFAULT_MASS;

    #[test]
    fn sturm_count_on_free_particle_box() {
        // -u''/(2m) on [0, 1] with 2m = 1: eigenvalues of the discrete Laplacian are known
        let p = SystemParams::new(0.0, f64::MIN_POSITIVE, DEFAULT_MASS, 3, 0).unwrap();
        let grid = RadialGrid::new(1.0, 999).unwrap();
        let t = Tridiagonal::hamiltonian(&p, &grid);
        let h = grid.spacing();
        for k in 0..5 {
            let exact = 4.0 / (h * h)
                * ((k + 1) as f64 * std::f64::consts::PI * h / 2.0)
                    .sin()
                    .powi(2);
            let e = t.eigenvalue(k, None);
            assert!((e - exact).abs() < 1e-9 * exact, "k={k}: {e} vs {exact}");
            assert_eq!(t.count_below(e - 1e-6), k);
            assert_eq!(t.count_below(e + 1e-6), k + 1);
        }
    }

    #[test]
    fn node_counter_ignores_round_off() {
        assert_eq!(count_nodes(&[1.0, 0.5, -0.5, -1.0, 1e-14, -1e-14, -0.2]), 1);
        assert_eq!(count_nodes(&[0.0, 1.0, -1.0, 1.0]), 2);
    }

    #[test]
    fn small_domain_is_reported() {
        let p = SystemParams::new(1.0, 1.0, DEFAULT_MASS, 3, 0).unwrap();
        let grid = RadialGrid::new(2.0, 2000).unwrap();
        assert!(matches!(
            solve_eigenvalue_matrix(&p, 0, grid),
            Err(Error::DomainTooSmall { .. })
        ));
    }

    #[test]
    fn coarse_grid_is_reported() {
        let p = SystemParams::new(1.0, 1.0, DEFAULT_MASS, 3, 0).unwrap();
        let grid = RadialGrid::new(400.0, 500).unwrap();
        assert!(matches!(
            solve_eigenvalue_matrix(&p, 0, grid),
            Err(Error::GridTooCoarse { .. })
        ));
    }
}
