//! Spectral analysis of the Cornell potential `V(r) = -a/r + b r` in N
//! spatial dimensions.
//!
//! The ground state is split into an exactly solvable Coulomb part and an
//! Airy-function correction for the linear term. An independent eigenvalue
//! oracle supplies the exact energy, and the radius `r_ΔE` at which the
//! correction profile reproduces it is compared with the asymptotic peak `r₀`
//! to decide which term dominates.
//!
//! ```
//! use cornell_lab::{analysis::analyze, SystemParams};
//!
//! let res = analyze(&SystemParams::cornell(1.0, 1.0)?)?;
//! assert!((res.e_exact - 1.397876).abs() < 1e-6);
//! assert!((res.r_delta_e - 0.799445).abs() < 1e-6);
//! # Ok::<(), cornell_lab::Error>(())
//! ```
//!
//! Runnable examples (`cargo run --release --example <name>`):
//!
//! - `airy_functions`: Ai, Ai', the first zero, Γ and Laguerre values
//! - `coulomb_sector`: Coulomb energies, g map, wavefunctions, peak radii
//! - `peak_radii`: `r₀` and its `b^(-1/3)` scaling
//! - `critical_radius`: the correction profile and `r_ΔE` (takes `a b`)
//! - `eigen_oracle`: matrix and shooting eigenvalues side by side
//! - `reproduce_tables`: the three reference tables with verdicts
//! - `perturbation_baseline`: first-order `⟨b r⟩` against the exact correction
//! - `dominance_sweep`: Coulomb/linear dominance over b, ℓ and N
//!
//! The `cornell-lab` binary wraps the same functionality as the `analyze`,
//! `table`, `profile` and `sweep` subcommands.

pub mod analysis;
pub mod asymptotic;
pub mod cli;
pub mod coulomb;
pub mod error;
pub mod oracle;
pub mod params;
pub mod roots;
pub mod specfun;

pub use error::{Error, Result, Stage};
pub use params::{lambda_param, EffectiveAngularMomentum, RadialPoint, SystemParams};
