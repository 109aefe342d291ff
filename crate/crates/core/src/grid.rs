//! Evaluation grids and the default intervals used for each family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Family;

/// Which realization a parameter sweep uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    /// m(p) = Γ(1 + pμ), Caputo derivative in x^μ; x ≥ 0 only.
    Fractional,
    /// m(p) = [p]_q!, Jackson derivative.
    Q,
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamKind::Fractional => "gamma",
            ParamKind::Q => "q",
        })
    }
}

/// `count` uniformly spaced points from `start` to `end` inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

pub const DEFAULT_POINTS: usize = 201;
pub const RESIDUAL_POINTS: usize = 33;

impl Grid {
    pub fn new(start: f64, end: f64, count: usize) -> Result<Self> {
        if !(start.is_finite() && end.is_finite()) || start > end {
            return Err(Error::InvalidParameter(format!("bad grid interval [{start}, {end}]")));
        }
        if count == 0 || (count == 1 && start != end) {
            return Err(Error::InvalidParameter(format!("grid needs at least 2 points, got {count}")));
        }
        Ok(Grid { start, end, count })
    }

    /// The family's default interval with [`DEFAULT_POINTS`] points.
    pub fn default_for(family: Family, kind: ParamKind) -> Self {
        let (start, end) = default_interval(family, kind);
        Grid { start, end, count: DEFAULT_POINTS }
    }

    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.end
                } else {
                    self.start + (self.end - self.start) * (i as f64 / last)
                }
            })
            .collect()
    }

    /// Chebyshev extreme points cos(kπ/(count−1)) mapped onto the interval,
    /// in increasing order.
    pub fn chebyshev_points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let (mid, half) = ((self.start + self.end) / 2.0, (self.end - self.start) / 2.0);
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|k| match k {
                0 => self.start,
                _ if k + 1 == self.count => self.end,
                _ if 2 * k + 1 == self.count => mid,
                _ => mid - half * (std::f64::consts::PI * k as f64 / last).cos(),
            })
            .collect()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.end, self.count)
    }
}

/// Parses `start:end:count`.
impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::Parse(format!("grid must look like start:end:count, got {s:?}")));
        };
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| Error::Parse(format!("grid bound {t:?}: {e}")));
        let count = c.trim().parse::<usize>().map_err(|e| Error::Parse(format!("grid count {c:?}: {e}")))?;
        Grid::new(num(a)?, num(b)?, count)
    }
}

/// Plotting interval per family. Fractional polynomials live on x ≥ 0.
pub fn default_interval(family: Family, kind: ParamKind) -> (f64, f64) {
    match (family, kind) {
        (Family::Laguerre, _) => (0.0, 10.0),
        (Family::Hermite, ParamKind::Q) => (-3.0, 3.0),
        (Family::Hermite, ParamKind::Fractional) => (0.0, 3.0),
        (Family::Jacobi, ParamKind::Q) => (-1.0, 1.0),
        (Family::Jacobi, ParamKind::Fractional) => (0.0, 1.0),
        (Family::Bessel, ParamKind::Q) => (-2.0, 1.0),
        (Family::Bessel, ParamKind::Fractional) => (0.0, 1.0),
    }
}
