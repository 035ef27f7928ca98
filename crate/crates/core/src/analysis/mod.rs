//! Per-configuration spectral results, Coulomb-vs-linear dominance and the
//! first-order perturbative baseline.
//!
//! [`analyze`] ties the pieces together: the oracle supplies `E_exact`, the
//! Coulomb sector `E_ES`, and the asymptotic model both `r₀` and the critical
//! radius `r_ΔE` at which the energy-correction profile reaches
//! `E_exact - E_ES`.

mod tables;

pub(crate) use tables::thread_cap;

pub use tables::{
    reproduce_table, reproduce_table_with, table_spec, ColumnCheck, RowComparison, TableReport,
    TableRow, TableSpec, Tolerances, Verdict,
};

use std::fmt;

use crate::asymptotic::AsymptoticModel;
use crate::coulomb::{coulomb_energy, coulomb_peak_radius, ground_state_mean_radius};
use crate::error::{Error, Result, Stage};
use crate::oracle::{solve_auto, OracleSettings};
use crate::params::SystemParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `r₀ > r_ΔE`: the linear term acts as a perturbation.
    CoulombDominant,
    /// `r_ΔE ≥ r₀`: the Coulomb term acts as a perturbation.
    LinearDominant,
}

impl Regime {
    /// Strict test `r₀ > r_ΔE`; equality counts as linear-dominant.
    pub fn classify(r0_asym: f64, r_delta_e: f64) -> Self {
        if r0_asym > r_delta_e {
            Regime::CoulombDominant
        } else {
            Regime::LinearDominant
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::CoulombDominant => "CoulombDominant",
            Regime::LinearDominant => "LinearDominant",
        })
    }
}

/// Everything computed for one ground-state configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralResult {
    pub params: SystemParams,
    pub e_es: f64,
    pub e_exact: f64,
    /// `e_exact - e_es`.
    pub delta_e: f64,
    pub r0_asym: f64,
    /// `None` when a = 0 (no Coulomb sector).
    pub r0_coulomb: Option<f64>,
    pub r_delta_e: f64,
    /// `(r_ΔE - r₀) / r₀`.
    pub margin: f64,
    pub regime: Regime,
    pub multiple_roots: bool,
    /// `None` when a = 0.
    pub pt1_delta_e: Option<f64>,
    /// Richardson error estimate of `e_exact`.
    pub est_error: f64,
}

/// [`analyze_with`] under the default oracle accuracy.
pub fn analyze(p: &SystemParams) -> Result<SpectralResult> {
    analyze_with(p, &OracleSettings::default())
}

pub fn analyze_with(p: &SystemParams, settings: &OracleSettings) -> Result<SpectralResult> {
    let eigen = solve_auto(p, 0, settings).map_err(|e| e.at(Stage::Oracle))?;
    let e_es = coulomb_energy(p, 0);
    let (r0_coulomb, pt1_delta_e) = if p.a() > 0.0 {
        (
            Some(coulomb_peak_radius(p).map_err(|e| e.at(Stage::Coulomb))?),
            Some(first_order_pt(p).map_err(|e| e.at(Stage::Coulomb))?),
        )
    } else {
        (None, None)
    };

    let model = AsymptoticModel::new(p);
    let r0_asym = model
        .asymptotic_peak_radius()
        .map_err(|e| e.at(Stage::Asymptotic))?;
    let critical = model
        .solve_r_delta_e(eigen.energy, None)
        .map_err(|e| e.at(Stage::CriticalRadius))?;

    Ok(SpectralResult {
        params: *p,
        e_es,
        e_exact: eigen.energy,
        delta_e: eigen.energy - e_es,
        r0_asym,
        r0_coulomb,
        r_delta_e: critical.r,
        margin: (critical.r - r0_asym) / r0_asym,
        regime: Regime::classify(r0_asym, critical.r),
        multiple_roots: critical.multiple_roots,
        pt1_delta_e,
        est_error: eigen.est_error,
    })
}

/// First-order shift `b ⟨r⟩` over the Coulomb ground state,
/// `b (2Λ+3)(Λ+1) / (2 m a)`.
pub fn first_order_pt(p: &SystemParams) -> Result<f64> {
    if p.a() <= 0.0 {
        return Err(Error::invalid("a", "a > 0 for the Coulomb baseline", p.a()));
    }
    Ok(p.b() * ground_state_mean_radius(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coulomb::coulomb_wavefunction;
    use crate::params::DEFAULT_MASS;

    fn params(a: f64, b: f64, dim: i32, l: i32) -> SystemParams {
        SystemParams::new(a, b, DEFAULT_MASS, dim, l).unwrap()
    }

    #[test]
    fn classifier_is_strict() {
        assert_eq!(Regime::classify(1.0, 0.5), Regime::CoulombDominant);
        assert_eq!(Regime::classify(1.0, 1.0), Regime::LinearDominant);
        assert_eq!(Regime::classify(1.0, 1.5), Regime::LinearDominant);
    }

    #[test]
    fn first_order_examples() {
        assert!((first_order_pt(&params(1.0, 0.01, 3, 0)).unwrap() - 0.03).abs() < 1e-15);
        assert_eq!(first_order_pt(&params(1.0, 1.0, 3, 0)).unwrap(), 3.0);
        assert!(first_order_pt(&params(0.0, 1.0, 3, 0)).is_err());
    }

    #[test]
    fn first_order_is_linear_in_b() {
        let unit = first_order_pt(&params(1.3, 1.0, 3, 2)).unwrap();
        for b in [1e-6, 0.01, 7.0, 250.0] {
            let v = first_order_pt(&params(1.3, b, 3, 2)).unwrap();
            assert!((v - b * unit).abs() <= 1e-14 * v);
        }
    }

    /// ⟨r⟩ of the Coulomb ground state by composite Simpson quadrature.
    fn mean_radius_quadrature(p: &SystemParams) -> f64 {
        let peak = coulomb_peak_radius(p).unwrap();
        let r_end = 40.0 * peak;
        let intervals = 40_000;
        let h = r_end / intervals as f64;
        let (mut num, mut den) = (0.0, 0.0);
        for i in 1..=intervals {
            let r = i as f64 * h;
            let w = if i == intervals {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            let u = coulomb_wavefunction(p, 0, r).unwrap();
            num += w * r * u * u;
            den += w * u * u;
        }
        num / den
    }

    #[test]
    fn mean_radius_matches_quadrature() {
        for (a, dim, l) in [(1.0, 3, 0), (1.0, 3, 2), (0.4, 4, 1), (2.5, 5, 3)] {
            let p = params(a, 1.0, dim, l);
            let closed = ground_state_mean_radius(&p).unwrap();
            let quad = mean_radius_quadrature(&p);
            assert!(
                (closed - quad).abs() <= 1e-10 * closed,
                "{closed} vs {quad}"
            );
        }
    }

    #[test]
    fn analyze_cornell_ground_state() {
        let res = analyze(&params(1.0, 1.0, 3, 0)).unwrap();
        assert!((res.r_delta_e - 0.799_444_879_410_459_9).abs() < 1e-3);
        assert!((res.r0_asym - 0.884).abs() < 5e-4);
        assert_eq!(res.regime, Regime::CoulombDominant);
        assert!((res.margin + 0.096).abs() < 1e-3);
        assert_eq!(res.delta_e, res.e_exact - res.e_es);
        assert!(res.r_delta_e < res.r0_coulomb.unwrap());
        assert!(!res.multiple_roots);
    }

    #[test]
    fn analyze_pure_linear() {
        let res = analyze(&params(0.0, 1.0, 3, 0)).unwrap();
        assert_eq!(res.r0_coulomb, None);
        assert_eq!(res.pt1_delta_e, None);
        assert_eq!(res.e_es, 0.0);
        assert!((res.e_exact - 2.338_107).abs() < 1e-5);
    }

    #[test]
    fn round_trip_through_profile() {
        for (a, b, l) in [(1.0, 0.01, 0), (1.0, 100.0, 3), (0.5, 1.0, 1)] {
            let p = params(a, b, 3, l);
            let res = analyze(&p).unwrap();
            let profile = AsymptoticModel::new(&p)
                .delta_e_profile(res.r_delta_e)
                .unwrap();
            assert!((profile + res.e_es - res.e_exact).abs() < 1e-9 * res.e_exact.abs().max(1.0));
        }
    }
}
