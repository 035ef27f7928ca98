//! Physical inputs and the reduction of the N-dimensional radial problem to
//! an effective three-dimensional one.
//!
//! With `Ψ(r) = r^{(N-1)/2} R(r)` and `M = N + 2ℓ`, the radial equation in N
//! dimensions takes the 3-D form with ℓ replaced by the effective angular
//! momentum `Λ = (M - 3)/2`. Everything downstream only ever sees Λ.
//!
//! Units are natural (ħ = c = 1): energies in GeV, lengths in 1/GeV.

use std::fmt;

use crate::error::{Error, Result};

/// Mass parameter reproducing the reference tables (2m = 1).
pub const DEFAULT_MASS: f64 = 0.5;

pub const DEFAULT_DIM: i32 = 3;

/// Effective angular momentum `Λ = (N + 2ℓ - 3)/2`.
///
/// Stored as `2Λ` so half-integer values (even N) stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EffectiveAngularMomentum {
    twice: u32,
}

impl EffectiveAngularMomentum {
    pub const fn from_twice(twice: u32) -> Self {
        Self { twice }
    }

    pub const fn twice(self) -> u32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    pub const fn is_half_integer(self) -> bool {
        self.twice % 2 == 1
    }

    /// `Λ(Λ+1)`, exact for every representable Λ.
    pub fn centrifugal(self) -> f64 {
        let t = f64::from(self.twice);
        t * (t + 2.0) / 4.0
    }
}

impl fmt::Display for EffectiveAngularMomentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_half_integer() {
            write!(f, "{}/2", self.twice)
        } else {
            write!(f, "{}", self.twice / 2)
        }
    }
}

/// Λ for spatial dimension `dim` and orbital quantum number `l`.
pub fn lambda_param(dim: i32, l: i32) -> Result<EffectiveAngularMomentum> {
    if dim < 3 {
        return Err(Error::invalid("N", "N >= 3", f64::from(dim)));
    }
    if l < 0 {
        return Err(Error::invalid("l", "l >= 0", f64::from(l)));
    }
    let twice = (dim - 3) as u32 + 2 * l as u32;
    Ok(EffectiveAngularMomentum::from_twice(twice))
}

/// Inputs of one Cornell configuration `V(r) = -a/r + b r` in N dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    a: f64,
    b: f64,
    m: f64,
    dim: u32,
    l: u32,
}

impl SystemParams {
    pub fn new(a: f64, b: f64, m: f64, dim: i32, l: i32) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("m", m)] {
            if !v.is_finite() {
                return Err(Error::invalid(name, "a finite value", v));
            }
        }
        if a < 0.0 {
            return Err(Error::invalid("a", "a >= 0", a));
        }
        if b <= 0.0 {
            return Err(Error::invalid("b", "b > 0", b));
        }
        if m <= 0.0 {
            return Err(Error::invalid("m", "m > 0", m));
        }
        lambda_param(dim, l)?;
        Ok(Self {
            a,
            b,
            m,
            dim: dim as u32,
            l: l as u32,
        })
    }

    /// Three-dimensional s-wave with the default mass.
    pub fn cornell(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, DEFAULT_MASS, DEFAULT_DIM, 0)
    }

    pub fn with_l(self, l: i32) -> Result<Self> {
        Self::new(self.a, self.b, self.m, self.dim as i32, l)
    }

    pub fn with_dim(self, dim: i32) -> Result<Self> {
        Self::new(self.a, self.b, self.m, dim, self.l as i32)
    }

    pub fn with_mass(self, m: f64) -> Result<Self> {
        Self::new(self.a, self.b, m, self.dim as i32, self.l as i32)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn lambda(&self) -> EffectiveAngularMomentum {
        EffectiveAngularMomentum::from_twice(self.dim - 3 + 2 * self.l)
    }
}

/// A strictly positive radius (the origin is a coordinate singularity).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RadialPoint(f64);

impl RadialPoint {
    pub fn new(r: f64) -> Result<Self> {
        if !r.is_finite() {
            return Err(Error::NonFinite("radius"));
        }
        if r <= 0.0 {
            return Err(Error::invalid("r", "r > 0", r));
        }
        Ok(Self(r))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// `-a/r + Λ(Λ+1)/(2m r²) + b r`.
pub fn effective_potential(p: &SystemParams, r: f64) -> Result<f64> {
    let r = RadialPoint::new(r)?.get();
    Ok(effective_potential_unchecked(p, r))
}

pub(crate) fn effective_potential_unchecked(p: &SystemParams, r: f64) -> f64 {
    -p.a / r + p.lambda().centrifugal() / (2.0 * p.m * r * r) + p.b * r
}
