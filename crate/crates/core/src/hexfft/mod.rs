//! The discrete Fourier transform on the hexagon, computed as a rectangular 2-D DFT after
//! relabeling nodes and frequencies.

mod fft;

pub use fft::{fft2, FftPlan};

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier_core::phi_homo;
use crate::index_sets::k_dagger_set;

/// Periods of `𝕂_n`, divided by `n`.
const PERIODS: [[i64; 3]; 2] = [[2, -1, -1], [-1, 2, -1]];

/// Samples at the reordered nodes, row-major in `(j₁, j₂) ∈ [0, n)²`.
#[derive(Clone, Debug, PartialEq)]
pub struct HexSampleGrid {
    pub n: usize,
    pub values: Vec<Complex64>,
}

/// Coefficients on `𝕂_n†`, row-major in the rectangular bins `(k₁ mod n, k₂ mod n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HexSpectrum {
    pub n: usize,
    /// Homogeneous frequency of each bin.
    pub labels: Vec<[i64; 3]>,
    pub coeffs: Vec<Complex64>,
}

/// `(2j₁ − j₂, 2j₂ − j₁, −j₁ − j₂)`: `n` times the homogeneous node of rectangular index `j`.
pub fn node_map(j: [i64; 2]) -> [i64; 3] {
    [2 * j[0] - j[1], 2 * j[1] - j[0], -j[0] - j[1]]
}

fn in_k_set(v: [i64; 3], n: i64) -> bool {
    [v[0], v[1], -v[2]].iter().all(|&x| -n <= x && x < n)
}

/// The node of `𝕂_n` congruent to `node_map(j)`; its point is the result divided by `n`.
pub fn reorder_index(n: usize, j: [i64; 2]) -> Result<[i64; 3]> {
    let m = n as i64;
    if !(0..m).contains(&j[0]) || !(0..m).contains(&j[1]) {
        return Err(Error::IndexOutOfRange { index: j, n: n as u32 });
    }
    let v = node_map(j);
    for a in -2..=2 {
        for b in -2..=2 {
            let w = [0, 1, 2].map(|i| v[i] + m * (a * PERIODS[0][i] + b * PERIODS[1][i]));
            if in_k_set(w, m) {
                return Ok(w);
            }
        }
    }
    unreachable!("every residue has a representative in the half-open hexagon")
}

/// The member of `𝕂_n†` in each rectangular frequency bin.
pub fn frequency_labels(n: usize) -> Vec<[i64; 3]> {
    let m = n as i64;
    let mut out = vec![[0i64; 3]; n * n];
    for k in k_dagger_set(m, false) {
        let bin = k[0].rem_euclid(m) as usize * n + k[1].rem_euclid(m) as usize;
        out[bin] = k;
    }
    out
}

impl HexSampleGrid {
    pub fn new(n: usize, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != n * n {
            return Err(Error::SampleCountMismatch { expected: n * n, got: values.len() });
        }
        Ok(HexSampleGrid { n, values })
    }

    /// Samples `f` at the unreduced nodes; `f` should be periodic on the hexagon lattice.
    pub fn from_fn(n: usize, f: impl Fn([f64; 3]) -> Complex64) -> Self {
        let values = (0..n * n).map(|i| f(Self::point(n, i))).collect();
        HexSampleGrid { n, values }
    }

    /// Homogeneous node of the flat position `i`, before reduction.
    pub fn point(n: usize, i: usize) -> [f64; 3] {
        node_map([(i / n) as i64, (i % n) as i64]).map(|v| v as f64 / n as f64)
    }
}

impl HexSpectrum {
    pub fn coefficient(&self, k: [i64; 3]) -> Option<Complex64> {
        self.labels.iter().position(|l| *l == k).map(|i| self.coeffs[i])
    }

    /// `Σ_k f̂_k φ_k(t)`.
    pub fn eval(&self, t: [f64; 3]) -> Complex64 {
        self.labels.iter().zip(&self.coeffs).map(|(k, c)| c * phi_homo(*k, t)).sum()
    }
}

/// `f̂_k = n⁻² Σ_j f(j) e^{−2πi(k₁j₁ + k₂j₂)/n}`, in `O(n² log n)`.
pub fn forward(grid: &HexSampleGrid) -> HexSpectrum {
    let n = grid.n;
    let mut coeffs = grid.values.clone();
    fft2(&mut coeffs, n, n, false);
    let scale = 1.0 / (n * n) as f64;
    coeffs.iter_mut().for_each(|c| *c *= scale);
    HexSpectrum { n, labels: frequency_labels(n), coeffs }
}

/// Samples of `Σ_k f̂_k φ_k` at the nodes.
pub fn inverse(spec: &HexSpectrum) -> HexSampleGrid {
    let n = spec.n;
    let mut values = spec.coeffs.clone();
    fft2(&mut values, n, n, true);
    HexSampleGrid { n, values }
}

/// `⟨f, φ_k⟩_n` by direct summation over nodes and frequencies.
pub fn naive_dft(grid: &HexSampleGrid) -> HexSpectrum {
    let n = grid.n;
    let labels = frequency_labels(n);
    let points: Vec<[f64; 3]> = (0..n * n).map(|i| HexSampleGrid::point(n, i)).collect();
    let scale = 1.0 / (n * n) as f64;
    let coeffs = labels
        .iter()
        .map(|k| {
            let s: Complex64 = points.iter().zip(&grid.values).map(|(t, f)| f * phi_homo(*k, *t).conj()).sum();
            s * scale
        })
        .collect();
    HexSpectrum { n, labels, coeffs }
}
