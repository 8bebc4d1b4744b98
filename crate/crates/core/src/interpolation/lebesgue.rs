//! Lebesgue constants by scanning a barycentric grid on the fundamental triangle.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::kernel::StarredHexInterpolator;
use super::triangle::{TriangleFlavor, TriangleInterpolator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LebesgueOperator {
    /// `ℐ_n*`; its Lebesgue function is `𝒜₂`-invariant and periodic, so `Δ` suffices.
    StarredHex,
    TriangleSine,
    TriangleCosine,
}

/// Estimated Lebesgue constants over a range of `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LebesgueReport {
    pub n_values: Vec<u32>,
    pub constants: Vec<f64>,
    /// `max constant / (log n)²`.
    pub fitted_ratio: f64,
}

impl LebesgueReport {
    pub fn ratios(&self) -> Vec<f64> {
        self.n_values.iter().zip(&self.constants).map(|(n, c)| c / (*n as f64).ln().powi(2)).collect()
    }

    pub fn min_ratio(&self) -> f64 {
        self.ratios().into_iter().fold(f64::INFINITY, f64::min)
    }
}

/// Grid points per edge of `Δ` used unless a density is given.
pub const DEFAULT_DENSITY: u32 = 128;

/// `(a/m, b/m, −(a+b)/m)` for `a, b ≥ 0`, `a + b ≤ m`.
pub fn barycentric_grid(density: u32) -> Vec<[f64; 3]> {
    let m = density as i64;
    let mut out = Vec::with_capacity(((m + 1) * (m + 2) / 2) as usize);
    for a in 0..=m {
        for b in 0..=(m - a) {
            let (x, y) = (a as f64 / m as f64, b as f64 / m as f64);
            out.push([x, y, -x - y]);
        }
    }
    out
}

fn grid_max(grid: &[[f64; 3]], f: impl Fn([f64; 3]) -> Result<f64> + Sync) -> Result<f64> {
    grid.par_iter().map(|t| f(*t)).try_reduce(|| 0.0, |a, b| Ok(a.max(b)))
}

/// Maximum of the Lebesgue function over the grid of the given density.
pub fn lebesgue_constant(op: LebesgueOperator, n: u32, density: u32) -> Result<f64> {
    let grid = barycentric_grid(density);
    match op {
        LebesgueOperator::StarredHex => {
            let ip = StarredHexInterpolator::new(n);
            grid_max(&grid, |t| Ok(ip.lebesgue_function(t)))
        }
        LebesgueOperator::TriangleSine | LebesgueOperator::TriangleCosine => {
            let flavor =
                if op == LebesgueOperator::TriangleSine { TriangleFlavor::Sine } else { TriangleFlavor::Cosine };
            let ip = TriangleInterpolator::new(flavor, n);
            grid_max(&grid, |t| Ok(ip.lebesgue_function(t)))
        }
    }
}

pub fn lebesgue_estimate(op: LebesgueOperator, n_values: &[u32], density: u32) -> Result<LebesgueReport> {
    let constants = n_values.iter().map(|&n| lebesgue_constant(op, n, density)).collect::<Result<Vec<_>>>()?;
    let mut report = LebesgueReport { n_values: n_values.to_vec(), constants, fitted_ratio: 0.0 };
    report.fitted_ratio = report.ratios().into_iter().fold(0.0, f64::max);
    Ok(report)
}
