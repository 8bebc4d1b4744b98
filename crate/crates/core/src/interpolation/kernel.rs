//! The kernel `Φ_n` of the starred hexagonal interpolant and the Dirichlet kernel `Θ_n`.

use std::f64::consts::PI;

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier_core::{phi_homo, TAU};
use crate::index_sets::{congruent_mod_3n, hat_map, hex_c_weight, homo_over, k_dagger_set, k_set, k_set_saturation};
use crate::lattice_core::rational_to_f64;

/// How `Φ_n` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelMethod {
    /// Closed form, `3 | n` only.
    Compact,
    /// Weighted exponential sum over `𝕂_n†*`.
    DirectSum,
}

/// `|sin πtⱼ|` below this counts as a singular line of the compact form.
const SINGULAR: f64 = 1e-8;

fn hat_over_3(t: [f64; 3]) -> [f64; 3] {
    [(t[2] - t[1]) / 3.0, (t[0] - t[2]) / 3.0, (t[1] - t[0]) / 3.0]
}

/// `Φ_n` with its frequencies and weights resolved once.
#[derive(Clone, Debug)]
pub struct StarKernel {
    pub n: u32,
    pub method: KernelMethod,
    /// `(2π/3)·j` and `c_ĵ/n²` for `j ∈ 𝕂_n†*`.
    terms: Vec<([f64; 3], f64)>,
}

impl StarKernel {
    pub fn new(n: u32, method: KernelMethod) -> Result<Self> {
        if method == KernelMethod::Compact && n % 3 != 0 {
            return Err(Error::NotMultipleOf3(n));
        }
        let m = n as i64;
        let scale = 1.0 / (m * m) as f64;
        let terms = k_dagger_set(m, true)
            .into_iter()
            .map(|j| (j.map(|v| TAU * v as f64 / 3.0), rational_to_f64(&hex_c_weight(hat_map(j), m)) * scale))
            .collect();
        Ok(StarKernel { n, method, terms })
    }

    /// The weighted exponential sum.
    pub fn direct(&self, t: [f64; 3]) -> Complex64 {
        self.terms
            .iter()
            .map(|(w, c)| Complex64::from_polar(*c, w[0] * t[0] + w[1] * t[1] + w[2] * t[2]))
            .sum()
    }

    /// On the lines `tⱼ ∈ ℤ` the compact quotient is `0/0`; there the finite sum it stands for is used.
    pub fn eval(&self, t: [f64; 3]) -> f64 {
        match self.method {
            KernelMethod::Compact if t.iter().all(|v| (PI * v).sin().abs() >= SINGULAR) => compact_raw(self.n, t),
            _ => self.direct(t).re,
        }
    }
}

/// `n⁻² Σ_{j ∈ 𝕂_n†*} c_ĵ φ_j(t)`; real up to rounding.
pub fn phi_n_direct(n: u32, t: [f64; 3]) -> Complex64 {
    StarKernel::new(n, KernelMethod::DirectSum).expect("direct sum accepts every n").direct(t)
}

fn compact_raw(n: u32, t: [f64; 3]) -> f64 {
    let s = hat_over_3(t);
    let sn = t.map(|v| (PI * v).sin());
    let c = t.map(|v| (TAU * n as f64 * v / 3.0).cos());
    let mut num = 0.0;
    for i in 0..3 {
        num += (2.0 * (PI * s[i]).cos() + (PI * t[i]).cos()) * sn[i] * c[i];
    }
    let den = sn[0] * sn[1] * sn[2];
    (-0.5 * num / den - (c[0] + c[1] + c[2]) / 3.0) / (n * n) as f64
}

/// Closed form of `Φ_n` for `3 | n`.
pub fn phi_n_compact(n: u32, t: [f64; 3]) -> Result<f64> {
    Ok(StarKernel::new(n, KernelMethod::Compact)?.eval(t))
}

/// `Φ_n(t)` by the chosen method.
pub fn phi_n_kernel(n: u32, t: [f64; 3], method: KernelMethod) -> Result<f64> {
    Ok(StarKernel::new(n, method)?.eval(t))
}

/// `Θ_n(t) = Σ_{j ∈ 𝕂_n†*} φ_j(t)`.
pub fn dirichlet_theta(n: u32, t: [f64; 3]) -> Complex64 {
    k_dagger_set(n as i64, true).into_iter().map(|j| phi_homo(j, t)).sum()
}

/// `Σ φ_j(s)` over the classes `j ≡ 0, 1, 2 (mod 3)` of `𝕂_n*`, where `s = t̂/3`.
/// The three sums add up to `Θ_n(t)`.
pub fn theta_classes(n: u32, t: [f64; 3]) -> [Complex64; 3] {
    let s = hat_over_3(t);
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for j in k_set(n as i64, true) {
        out[j[0].rem_euclid(3) as usize] += phi_homo(j, s);
    }
    out
}

/// `ℐ_n* f(t) = Σ_{j ∈ 𝕂_n*} f(j/n) Φ_n(t − j/n)`.
#[derive(Clone, Debug)]
pub struct StarredHexInterpolator {
    pub n: u32,
    pub nodes: Vec<[i64; 3]>,
    /// Congruence classes `𝒮_j` as lists of node positions.
    pub classes: Vec<Vec<usize>>,
    /// Position of each node's class in `classes`.
    pub class_of: Vec<usize>,
    pub kernel: StarKernel,
}

impl StarredHexInterpolator {
    /// Compact kernel when `3 | n`, the direct sum otherwise.
    pub fn new(n: u32) -> Self {
        let method = if n % 3 == 0 { KernelMethod::Compact } else { KernelMethod::DirectSum };
        StarredHexInterpolator::with_method(n, method).expect("method matches n")
    }

    pub fn with_method(n: u32, method: KernelMethod) -> Result<Self> {
        let kernel = StarKernel::new(n, method)?;
        let m = n as i64;
        let nodes = k_set(m, true);
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; nodes.len()];
        for (i, j) in nodes.iter().enumerate() {
            match classes.iter().position(|c| congruent_mod_3n(nodes[c[0]], *j, m)) {
                Some(c) => {
                    classes[c].push(i);
                    class_of[i] = c;
                }
                None => {
                    class_of[i] = classes.len();
                    classes.push(vec![i]);
                }
            }
        }
        Ok(StarredHexInterpolator { n, nodes, classes, class_of, kernel })
    }

    pub fn node_points(&self) -> Vec<[f64; 3]> {
        self.nodes.iter().map(|j| homo_over(*j, self.n as i64)).collect()
    }

    /// Node `i` lies on the boundary of `𝕂_n*`.
    pub fn is_boundary(&self, i: usize) -> bool {
        k_set_saturation(self.nodes[i], self.n as i64) > 0
    }

    /// `𝒮_j` for node `i`, as node positions.
    pub fn aliases(&self, i: usize) -> &[usize] {
        &self.classes[self.class_of[i]]
    }

    /// `Φ_n(t − j/n)` for every node.
    pub fn kernel_row(&self, t: [f64; 3]) -> Vec<f64> {
        let m = self.n as f64;
        self.nodes.iter().map(|j| self.kernel.eval([0, 1, 2].map(|i| t[i] - j[i] as f64 / m))).collect()
    }

    pub fn eval(&self, samples: &[Complex64], t: [f64; 3]) -> Result<Complex64> {
        if samples.len() != self.nodes.len() {
            return Err(Error::SampleCountMismatch { expected: self.nodes.len(), got: samples.len() });
        }
        Ok(self.kernel_row(t).into_iter().zip(samples).map(|(k, f)| f * k).sum())
    }

    /// `Σ_j |Φ_n(t − j/n)| / |𝒮_j|`: boundary nodes carry their aliasing weight.
    pub fn lebesgue_function(&self, t: [f64; 3]) -> f64 {
        self.kernel_row(t).iter().enumerate().map(|(i, v)| v.abs() / self.aliases(i).len() as f64).sum()
    }

    /// `Σ_𝒮 |Σ_{k ∈ 𝒮} Φ_n(t − k/n)|`, the norm on periodic data.
    pub fn grouped_lebesgue_function(&self, t: [f64; 3]) -> f64 {
        let row = self.kernel_row(t);
        self.classes.iter().map(|c| c.iter().map(|&i| row[i]).sum::<f64>().abs()).sum()
    }
}
