//! Lagrange interpolation on lattice node sets: the generic operator of a lattice pair, the
//! starred hexagonal operator with its compact kernel, the triangle interpolants, and
//! Lebesgue-constant estimates.

mod kernel;
mod lebesgue;
mod triangle;

pub use kernel::{
    dirichlet_theta, phi_n_compact, phi_n_direct, phi_n_kernel, theta_classes, KernelMethod, StarKernel, StarredHexInterpolator,
};
pub use lebesgue::{barycentric_grid, DEFAULT_DENSITY, lebesgue_constant, lebesgue_estimate, LebesgueOperator, LebesgueReport};
pub use triangle::{lambda_hat, triangle_space, TriangleFlavor, TriangleInterpolator};

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier_core::{cis_rational, phi, DiscreteInner, InnerVariant, TrigPoly};
use crate::index_sets::{build_with, IndexSet, Variant};
use crate::lattice_core::LatticeCase;

/// Which interpolation operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// `ℐ_N` on `B⁻ᵀΛ_N` for any lattice pair.
    Generic,
    /// `ℐ_n*` on `𝕂_n*/n`.
    StarredHex,
    /// `ℒ_n` on `Υ_n°/n`.
    TriangleSine,
    /// `ℒ_n*` on `Υ_n/n`.
    TriangleCosine,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::Generic, Flavor::StarredHex, Flavor::TriangleSine, Flavor::TriangleCosine];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Generic => "generic",
            Flavor::StarredHex => "starred-hex",
            Flavor::TriangleSine => "triangle-sine",
            Flavor::TriangleCosine => "triangle-cosine",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

/// `ℐ_N f = Σ_j f(x_j) Ψ(x − x_j)` for one lattice pair.
pub struct GenericInterpolator {
    /// Nodes `B⁻ᵀΛ_N` and the weights `1/|det N|`.
    pub inner: DiscreteInner,
    /// Frequencies `Λ_N†`.
    pub freqs: IndexSet,
}

impl GenericInterpolator {
    pub fn new(case: &LatticeCase) -> Result<Self> {
        let inner = DiscreteInner::new(case, InnerVariant::Open)?;
        let freqs = build_with(&inner.geo, Variant::DaggerOpen);
        Ok(GenericInterpolator { inner, freqs })
    }

    pub fn node_count(&self) -> usize {
        self.inner.nodes.len()
    }

    pub fn node_points(&self) -> Vec<[f64; 2]> {
        self.inner.nodes.iter().map(|m| self.inner.geo.node_point_f64(m.index)).collect()
    }

    /// Coefficients `⟨f, φ_k⟩_N`, `k ∈ Λ_N†`, computed with exact phases.
    pub fn interpolate(&self, samples: &[Complex64]) -> Result<TrigPoly> {
        if samples.len() != self.node_count() {
            return Err(Error::SampleCountMismatch { expected: self.node_count(), got: samples.len() });
        }
        let w = self.inner.weights[0];
        let geo = &self.inner.geo;
        let terms = self
            .freqs
            .iter()
            .map(|k| {
                let c: Complex64 = self
                    .inner
                    .nodes
                    .iter()
                    .zip(samples)
                    .map(|(j, f)| f * cis_rational(-geo.phase(k.index, j.index)))
                    .sum();
                (k.index, c * w)
            })
            .collect();
        Ok(TrigPoly::new(geo.case, terms))
    }

    /// `Ψ(x) = |det N|⁻¹ Σ_{k ∈ Λ_N†} φ_k(x)`.
    pub fn psi(&self, x: [f64; 2]) -> Complex64 {
        let s: Complex64 = self.freqs.iter().map(|k| phi(&self.inner.geo, k.index, x)).sum();
        s * self.inner.weights[0]
    }

    /// `Σ_j f(x_j) Ψ(x − x_j)`, the kernel form of the interpolant.
    pub fn eval_kernel_sum(&self, samples: &[Complex64], x: [f64; 2]) -> Result<Complex64> {
        if samples.len() != self.node_count() {
            return Err(Error::SampleCountMismatch { expected: self.node_count(), got: samples.len() });
        }
        Ok(self
            .node_points()
            .into_iter()
            .zip(samples)
            .map(|(p, f)| f * self.psi([x[0] - p[0], x[1] - p[1]]))
            .sum())
    }
}

/// `ℐ_N f` from its samples on `B⁻ᵀΛ_N`, in the node order of the open index set.
pub fn interp_generic(case: &LatticeCase, samples: &[Complex64]) -> Result<TrigPoly> {
    GenericInterpolator::new(case)?.interpolate(samples)
}

#[cfg(test)]
mod tests;
