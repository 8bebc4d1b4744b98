//! Exponentials on a lattice pair, discrete inner products and the integration oracle.

pub mod oracle;

pub use oracle::{fan, gauss_legendre, integrate_polygon, integrate_polygon_real, polygon_mean};

use num::complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::index_sets::{build_with, IndexSet, Variant};
use crate::lattice_core::{rational_to_f64, Geometry, LatticeCase, Rational};

pub const TAU: f64 = std::f64::consts::TAU;

/// `e^{2πi r}` for an exact rational `r`, reduced to `[−½, ½)` first.
pub fn cis_rational(r: Rational) -> Complex64 {
    let frac = r - r.floor();
    let mut x = rational_to_f64(&frac);
    if x >= 0.5 {
        x -= 1.0;
    }
    Complex64::from_polar(1.0, TAU * x)
}

/// `e^{2πi kᵀA⁻¹x}` for a Cartesian point.
pub fn phi(geo: &Geometry, k: [i64; 2], x: [f64; 2]) -> Complex64 {
    let w = geo.dual_point_f64(k);
    Complex64::from_polar(1.0, TAU * (w[0] * x[0] + w[1] * x[1]))
}

/// `e^{(2πi/3) k·t}` in homogeneous coordinates.
pub fn phi_homo(k: [i64; 3], t: [f64; 3]) -> Complex64 {
    let s = k[0] as f64 * t[0] + k[1] as f64 * t[1] + k[2] as f64 * t[2];
    Complex64::from_polar(1.0, TAU * s / 3.0)
}

/// A finite sum `Σ c_k φ_k` over frequency indices of one lattice pair.
#[derive(Clone, Debug)]
pub struct TrigPoly {
    pub case: LatticeCase,
    pub terms: Vec<([i64; 2], Complex64)>,
}

impl TrigPoly {
    pub fn new(case: LatticeCase, terms: Vec<([i64; 2], Complex64)>) -> Self {
        TrigPoly { case, terms }
    }

    pub fn basis(case: LatticeCase, k: [i64; 2]) -> Self {
        TrigPoly::new(case, vec![(k, Complex64::new(1.0, 0.0))])
    }

    pub fn eval(&self, geo: &Geometry, x: [f64; 2]) -> Complex64 {
        self.terms.iter().map(|(k, c)| c * phi(geo, *k, x)).sum()
    }

    /// Angular frequency vectors `2πA⁻ᵀk` paired with coefficients, for repeated evaluation.
    pub fn compile(&self, geo: &Geometry) -> CompiledPoly {
        CompiledPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let w = geo.dual_point_f64(*k);
                    ([TAU * w[0], TAU * w[1]], *c)
                })
                .collect(),
        }
    }

    /// Value at the node with index `j`, using exact phases.
    pub fn eval_node(&self, geo: &Geometry, j: [i64; 2]) -> Complex64 {
        self.terms.iter().map(|(k, c)| c * cis_rational(geo.phase(*k, j))).sum()
    }

    /// Largest angular frequency `2π|A⁻ᵀk|`.
    pub fn bandwidth(&self, geo: &Geometry) -> f64 {
        self.terms
            .iter()
            .map(|(k, _)| {
                let w = geo.dual_point_f64(*k);
                TAU * w[0].hypot(w[1])
            })
            .fold(0.0, f64::max)
    }
}

/// A [`TrigPoly`] with its frequencies resolved to floating point.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    pub terms: Vec<([f64; 2], Complex64)>,
}

impl CompiledPoly {
    pub fn eval(&self, x: [f64; 2]) -> Complex64 {
        self.terms.iter().map(|(w, c)| c * Complex64::from_polar(1.0, w[0] * x[0] + w[1] * x[1])).sum()
    }
}

/// Which discrete inner product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerVariant {
    /// Sum over the half-open node set.
    Open,
    /// Sum over the closed node set with weights `c`.
    Starred,
}

/// Something that can be evaluated at the nodes of a discrete inner product.
pub enum Evaluand<'a> {
    Poly(&'a TrigPoly),
    /// One value per node, in the order of the node set.
    Samples(&'a [Complex64]),
    Func(&'a (dyn Fn([f64; 2]) -> Complex64 + Sync)),
}

/// The node set and weights of `⟨·,·⟩_N` or its starred variant.
pub struct DiscreteInner {
    pub geo: Geometry,
    pub variant: InnerVariant,
    pub nodes: IndexSet,
    pub weights: Vec<f64>,
}

impl DiscreteInner {
    pub fn new(case: &LatticeCase, variant: InnerVariant) -> Result<Self> {
        let geo = Geometry::new(case)?;
        let det = geo.gens.det_n().abs() as f64;
        let (nodes, weights) = match variant {
            InnerVariant::Open => {
                let s = build_with(&geo, Variant::Open);
                let w = vec![1.0 / det; s.len()];
                (s, w)
            }
            InnerVariant::Starred => {
                let s = build_with(&geo, Variant::Closed);
                let w = s.starred_weights().iter().map(|c| rational_to_f64(c) / det).collect();
                (s, w)
            }
        };
        Ok(DiscreteInner { geo, variant, nodes, weights })
    }

    pub fn sample(&self, f: &Evaluand) -> Result<Vec<Complex64>> {
        match f {
            Evaluand::Poly(p) => Ok(self.nodes.iter().map(|m| p.eval_node(&self.geo, m.index)).collect()),
            Evaluand::Samples(s) => {
                if s.len() != self.nodes.len() {
                    return Err(Error::SampleCountMismatch { expected: self.nodes.len(), got: s.len() });
                }
                Ok(s.to_vec())
            }
            Evaluand::Func(g) => Ok(self
                .nodes
                .iter()
                .map(|m| g(self.geo.node_point_f64(m.index)))
                .collect()),
        }
    }

    /// `Σ w_j f(x_j) conj(g(x_j))` over sampled values.
    pub fn inner_samples(&self, f: &[Complex64], g: &[Complex64]) -> Complex64 {
        self.weights.iter().zip(f.iter().zip(g)).map(|(w, (a, b))| a * b.conj() * w).sum()
    }

    pub fn inner(&self, f: &Evaluand, g: &Evaluand) -> Result<Complex64> {
        Ok(self.inner_samples(&self.sample(f)?, &self.sample(g)?))
    }
}

/// `⟨f, g⟩_N` (or the starred form).
pub fn discrete_inner(case: &LatticeCase, variant: InnerVariant, f: &Evaluand, g: &Evaluand) -> Result<Complex64> {
    DiscreteInner::new(case, variant)?.inner(f, g)
}

/// A Gram matrix with its deviation from the identity.
#[derive(Clone, Debug, Serialize)]
pub struct InnerProductReport {
    #[serde(skip)]
    pub gram: Vec<Vec<Complex64>>,
    pub max_offdiag: f64,
    pub max_diag_deviation: f64,
}

impl InnerProductReport {
    pub fn from_gram(gram: Vec<Vec<Complex64>>) -> Self {
        let mut max_offdiag: f64 = 0.0;
        let mut max_diag_deviation: f64 = 0.0;
        for (i, row) in gram.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i == j {
                    max_diag_deviation = max_diag_deviation.max((v - 1.0).norm());
                } else {
                    max_offdiag = max_offdiag.max(v.norm());
                }
            }
        }
        InnerProductReport { gram, max_offdiag, max_diag_deviation }
    }

    pub fn max_deviation(&self) -> f64 {
        self.max_offdiag.max(self.max_diag_deviation)
    }
}

/// Gram matrix of `{φ_k : k ∈ Λ_N†}` under the discrete inner product, evaluated with exact phases.
pub fn discrete_gram(case: &LatticeCase, variant: InnerVariant) -> Result<InnerProductReport> {
    let ip = DiscreteInner::new(case, variant)?;
    let freqs = build_with(&ip.geo, Variant::DaggerOpen);
    let samples: Vec<Vec<Complex64>> = freqs
        .iter()
        .map(|k| ip.sample(&Evaluand::Poly(&TrigPoly::basis(*case, k.index))))
        .collect::<Result<_>>()?;
    let gram = samples
        .par_iter()
        .map(|a| samples.iter().map(|b| ip.inner_samples(a, b)).collect())
        .collect();
    Ok(InnerProductReport::from_gram(gram))
}

/// `⟨f, g⟩_Ω = (1/|Ω|) ∫_Ω f conj(g)` over the case's fundamental domain.
pub fn continuous_inner_oracle(vertices: &[[f64; 2]], geo: &Geometry, f: &TrigPoly, g: &TrigPoly) -> Result<Complex64> {
    let band = f.bandwidth(geo) + g.bandwidth(geo);
    let (fc, gc) = (f.compile(geo), g.compile(geo));
    polygon_mean(vertices, &|x| fc.eval(x) * gc.eval(x).conj(), band)
}

/// Gram matrix of `{φ_k : k ∈ Λ_N†}` under the continuous inner product on `Ω_A`.
pub fn continuous_gram(case: &LatticeCase) -> Result<InnerProductReport> {
    let geo = Geometry::new(case)?;
    let freqs = build_with(&geo, Variant::DaggerOpen);
    let verts = geo.omega_a.vertices_f64();
    let polys: Vec<TrigPoly> = freqs.iter().map(|k| TrigPoly::basis(*case, k.index)).collect();
    let gram = polys
        .par_iter()
        .map(|a| polys.iter().map(|b| continuous_inner_oracle(&verts, &geo, a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(InnerProductReport::from_gram(gram))
}
