use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Pipeline stage that produced an error inside [`crate::analysis::analyze`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Oracle,
    Coulomb,
    Asymptotic,
    CriticalRadius,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Oracle => "oracle",
            Stage::Coulomb => "coulomb",
            Stage::Asymptotic => "asymptotic",
            Stage::CriticalRadius => "critical-radius",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A physical or geometric input violates its domain.
    #[error("invalid {name}: requires {constraint} (got {value})")]
    InvalidParameter {
        name: &'static str,
        constraint: &'static str,
        value: f64,
    },

    #[error("non-finite input to {0}")]
    NonFinite(&'static str),

    #[error("no root: {0}")]
    NoRoot(String),

    #[error("{method} did not converge within {iterations} iterations")]
    NoConvergence {
        method: &'static str,
        iterations: usize,
    },

    #[error("grid too coarse: Richardson estimates disagree by {disagreement:e} GeV")]
    GridTooCoarse { disagreement: f64 },

    #[error("radial domain too small: tail amplitude {tail:e} at r_max = {r_max}")]
    DomainTooSmall { r_max: f64, tail: f64 },

    #[error("energy bracket invalid: node counts {nodes_lo} and {nodes_hi} for requested n = {n}")]
    BracketInvalid {
        n: u32,
        nodes_lo: usize,
        nodes_hi: usize,
    },

    #[error("{stage} stage failed: {source}")]
    Stage {
        stage: Stage,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, constraint: &'static str, value: f64) -> Self {
        Error::InvalidParameter {
            name,
            constraint,
            value,
        }
    }

    pub(crate) fn at(self, stage: Stage) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// True when the error is caused by bad input rather than a numerical failure.
    pub fn is_domain_error(&self) -> bool {
        match self {
            Error::InvalidParameter { .. } | Error::NonFinite(_) => true,
            Error::Stage { source, .. } => source.is_domain_error(),
            _ => false,
        }
    }
}
