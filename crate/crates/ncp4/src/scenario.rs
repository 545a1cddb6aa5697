//! Scenario files: JSON descriptions of a verification run.

use crate::coeff::{parse_ratio, Coefficient};
use crate::error::{NcError, Result};
use serde::Deserialize;

/// A number in a scenario: integer or "p/q" string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Ratio(String),
}

impl Num {
    pub fn to_coeff<T: Coefficient>(&self) -> Result<T> {
        match self {
            Num::Int(n) => Ok(T::from_int(*n)),
            Num::Ratio(s) => {
                parse_ratio(s).ok_or_else(|| NcError::Scenario(format!("bad number {s:?}")))
            }
        }
    }
}

/// Coefficient arithmetic to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    Float,
}

impl Default for Mode {
    fn default() -> Self {
        Mode::Exact
    }
}

fn default_trials() -> usize {
    5
}

/// Parameters of a verification run.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Matrix coefficient dimension d.
    pub dim: usize,
    /// Series truncation order N.
    pub order: usize,
    /// RNG seed for the randomized trials.
    pub seed: u64,
    #[serde(default)]
    pub mode: Mode,
    /// Parameter triple; defaults to (1/2, 1/3, 1/6).
    #[serde(default)]
    pub alpha: Option<[Num; 3]>,
    /// Randomized repetitions per check.
    #[serde(default = "default_trials")]
    pub trials: usize,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self> {
        let sc: Scenario =
            serde_json::from_str(text).map_err(|e| NcError::Scenario(e.to_string()))?;
        if sc.dim == 0 || sc.order < 4 {
            return Err(NcError::Scenario(
                "dim must be >= 1 and order >= 4".into(),
            ));
        }
        Ok(sc)
    }

    pub fn demo(dim: usize, order: usize, seed: u64) -> Self {
        Scenario {
            dim,
            order,
            seed,
            mode: Mode::Exact,
            alpha: None,
            trials: 3,
        }
    }

    pub fn alphas<T: Coefficient>(&self) -> Result<[T; 3]> {
        match &self.alpha {
            None => Ok([
                T::from_ratio(1, 2),
                T::from_ratio(1, 3),
                T::from_ratio(1, 6),
            ]),
            Some([a, b, c]) => Ok([a.to_coeff()?, b.to_coeff()?, c.to_coeff()?]),
        }
    }
}
