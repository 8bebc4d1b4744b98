//! Interpolation on the fundamental triangle by generalized sines (`ℒ_n`) and cosines (`ℒ_n*`).

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index_sets::{hat_map, hex_c_weight, homo_over, triangle_saturation, upsilon, upsilon_dagger, upsilon_interior};
use crate::lattice_core::{rational_to_f64, Rational};
use crate::triangle_trig::{orbit, tc_raw, ts_raw, A2};

use super::kernel::phi_n_direct;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleFlavor {
    /// `ℒ_n`: generalized sines on the interior nodes `Υ_n°`.
    Sine,
    /// `ℒ_n*`: generalized cosines on all of `Υ_n`.
    Cosine,
}

/// `λ̂_k = c_k̂^{(n)} |k𝒜₂|`.
pub fn lambda_hat(k: [i64; 3], n: i64) -> Rational {
    hex_c_weight(hat_map(k), n) * Rational::from_integer(orbit(k).len() as i128)
}

fn lambda_node(j: [i64; 3], n: i64) -> f64 {
    match triangle_saturation(j, n) {
        0 => 6.0,
        1 => 3.0,
        _ => 1.0,
    }
}

fn frequencies(flavor: TriangleFlavor, n: i64) -> Vec<[i64; 3]> {
    let all = upsilon_dagger(n);
    match flavor {
        TriangleFlavor::Cosine => all,
        TriangleFlavor::Sine => all.into_iter().filter(|k| k[0] > 0 && k[1] > 0).collect(),
    }
}

/// A basis of the interpolation space, each element the sum of `TC_k` (or `TS_k`) over one group.
///
/// On the outer edges of `Υ_n†` the frequencies `(a, b, c)` and `(b, a, c)` agree on every node,
/// so they only enter together.
pub fn triangle_space(flavor: TriangleFlavor, n: i64) -> Vec<Vec<[i64; 3]>> {
    let mut out: Vec<Vec<[i64; 3]>> = Vec::new();
    for k in frequencies(flavor, n) {
        let mirror = [k[1], k[0], k[2]];
        let outer = 2 * k[0] + k[1] == n || k[0] + 2 * k[1] == n;
        if outer && mirror != k {
            if !out.iter().any(|g| g.contains(&k)) {
                out.push(vec![k, mirror]);
            }
        } else {
            out.push(vec![k]);
        }
    }
    out
}

/// `ℒ_n` or `ℒ_n*` with its nodes, frequencies and weights.
#[derive(Clone, Debug)]
pub struct TriangleInterpolator {
    pub flavor: TriangleFlavor,
    pub n: u32,
    pub nodes: Vec<[i64; 3]>,
    /// `λ_j` (cosine) or `6` (sine).
    pub node_weights: Vec<f64>,
    pub freqs: Vec<[i64; 3]>,
    pub lambda_hat: Vec<f64>,
    /// `conj(F_k(j/n))`, node-major.
    conj_at_nodes: Vec<Vec<Complex64>>,
}

impl TriangleInterpolator {
    pub fn new(flavor: TriangleFlavor, n: u32) -> Self {
        let m = n as i64;
        let nodes = match flavor {
            TriangleFlavor::Sine => upsilon_interior(m),
            TriangleFlavor::Cosine => upsilon(m),
        };
        let node_weights = nodes.iter().map(|j| lambda_node(*j, m)).collect();
        let freqs = frequencies(flavor, m);
        let lambda_hat = freqs.iter().map(|k| rational_to_f64(&lambda_hat(*k, m))).collect();
        let mut ip =
            TriangleInterpolator { flavor, n, nodes, node_weights, freqs, lambda_hat, conj_at_nodes: Vec::new() };
        ip.conj_at_nodes = ip
            .nodes
            .iter()
            .map(|j| {
                let t = homo_over(*j, m);
                ip.freqs.iter().map(|k| ip.basis(*k, t).conj()).collect()
            })
            .collect();
        ip
    }

    /// `TS_k(t)` or `TC_k(t)`.
    pub fn basis(&self, k: [i64; 3], t: [f64; 3]) -> Complex64 {
        match self.flavor {
            TriangleFlavor::Sine => ts_raw(k, t),
            TriangleFlavor::Cosine => tc_raw(k, t),
        }
    }

    pub fn node_points(&self) -> Vec<[f64; 3]> {
        self.nodes.iter().map(|j| homo_over(*j, self.n as i64)).collect()
    }

    fn scale(&self) -> f64 {
        1.0 / (self.n * self.n) as f64
    }

    /// `ℓ_j(t)` for node position `j`, from the kernel display.
    pub fn lagrange(&self, j: usize, t: [f64; 3]) -> Complex64 {
        let s: Complex64 = self
            .freqs
            .iter()
            .zip(&self.lambda_hat)
            .zip(&self.conj_at_nodes[j])
            .map(|((k, lh), c)| self.basis(*k, t) * c * lh)
            .sum();
        s * self.node_weights[j] * self.scale()
    }

    /// `ℓ_j(t)` by symmetrizing `Φ_n(· − j/n)` over `𝒜₂`.
    pub fn lagrange_by_projection(&self, j: usize, t: [f64; 3]) -> Complex64 {
        let m = self.n as f64;
        let node = self.nodes[j];
        let s: Complex64 = A2
            .iter()
            .map(|g| {
                let p = g.act(t);
                let v = phi_n_direct(self.n, [0, 1, 2].map(|i| p[i] - node[i] as f64 / m));
                match self.flavor {
                    TriangleFlavor::Sine if g.sign < 0 => -v,
                    _ => v,
                }
            })
            .sum();
        s * self.node_weights[j] / 6.0
    }

    /// Coefficients of the interpolant in `{F_k}`, in the order of `freqs`.
    pub fn coefficients(&self, samples: &[Complex64]) -> Result<Vec<Complex64>> {
        if samples.len() != self.nodes.len() {
            return Err(Error::SampleCountMismatch { expected: self.nodes.len(), got: samples.len() });
        }
        Ok((0..self.freqs.len())
            .map(|k| {
                let s: Complex64 = (0..self.nodes.len())
                    .map(|j| samples[j] * self.conj_at_nodes[j][k] * self.node_weights[j])
                    .sum();
                s * self.lambda_hat[k] * self.scale()
            })
            .collect())
    }

    pub fn eval_coefficients(&self, coeffs: &[Complex64], t: [f64; 3]) -> Complex64 {
        self.freqs.iter().zip(coeffs).map(|(k, c)| c * self.basis(*k, t)).sum()
    }

    pub fn eval(&self, samples: &[Complex64], t: [f64; 3]) -> Result<Complex64> {
        Ok(self.eval_coefficients(&self.coefficients(samples)?, t))
    }

    /// `Σ_j |ℓ_j(t)|`.
    pub fn lebesgue_function(&self, t: [f64; 3]) -> f64 {
        let vals: Vec<Complex64> =
            self.freqs.iter().zip(&self.lambda_hat).map(|(k, lh)| self.basis(*k, t) * lh).collect();
        (0..self.nodes.len())
            .map(|j| {
                let s: Complex64 = vals.iter().zip(&self.conj_at_nodes[j]).map(|(v, c)| v * c).sum();
                (s * self.node_weights[j] * self.scale()).norm()
            })
            .sum()
    }
}
