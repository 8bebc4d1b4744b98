//! Cubature rules on the square, rhombus, hexagon and triangle, their exactness checks and
//! the changes of variables that turn them into algebraic rules.

mod rules;
mod space;

pub use rules::{build_rule, chebyshev_image, fold, gaussian_rule_w_half, RuleTag};
pub use space::{BasisFn, ExactnessSpace, Region, SpaceKind};

use num::complex::Complex64;
use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::index_sets::NodeClass;
use crate::lattice_core::{point_to_f64, q, rational_to_f64, HomoPoint, Point, Rational};

/// A cubature weight: exact when the rule is rational, floating point after a substitution
/// with irrational factors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Weight {
    Exact(Rational),
    Approx(f64),
}

impl Weight {
    pub fn to_f64(&self) -> f64 {
        match self {
            Weight::Exact(r) => rational_to_f64(r),
            Weight::Approx(v) => *v,
        }
    }

    pub fn exact(&self) -> Option<Rational> {
        match self {
            Weight::Exact(r) => Some(*r),
            Weight::Approx(_) => None,
        }
    }
}

/// Location of a node.
#[derive(Clone, Debug, PartialEq)]
pub enum NodePoint {
    /// Exact Cartesian point.
    Cart(Point),
    /// Exact homogeneous coordinates `t₁ + t₂ + t₃ = 0`.
    Homo([Rational; 3]),
    /// Floating point image of an exact node.
    Real([f64; 2]),
}

impl NodePoint {
    /// Plane coordinates: Cartesian for homogeneous nodes.
    pub fn plane_f64(&self) -> [f64; 2] {
        match self {
            NodePoint::Cart(p) => point_to_f64(p),
            NodePoint::Homo(t) => HomoPoint { t: *t }.to_f64().to_cartesian(),
            NodePoint::Real(y) => *y,
        }
    }

    /// Coordinates handed to test functions: homogeneous `t`, or `[x₁, x₂, 0]`.
    pub fn region_coords(&self) -> [f64; 3] {
        match self {
            NodePoint::Homo(t) => HomoPoint { t: *t }.to_f64().t,
            _ => {
                let p = self.plane_f64();
                [p[0], p[1], 0.0]
            }
        }
    }

    pub fn homogeneous(&self) -> Option<[Rational; 3]> {
        match self {
            NodePoint::Homo(t) => Some(*t),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub point: NodePoint,
    pub weight: Weight,
    pub class: NodeClass,
}

/// `∫ f ≈ normalization · Σ wᵢ f(xᵢ)`, where the left side is the mean-value functional of
/// the region.
#[derive(Clone, Debug, PartialEq)]
pub struct CubatureRule {
    pub id: RuleTag,
    pub n: u32,
    pub nodes: Vec<Node>,
    pub normalization: Rational,
    pub exactness_space: ExactnessSpace,
    pub region: Region,
}

impl CubatureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.nodes.iter().map(|n| n.weight).collect()
    }

    /// `normalization · Σ wᵢ` when every weight is exact.
    pub fn exact_total(&self) -> Option<Rational> {
        let mut s = Rational::zero();
        for n in &self.nodes {
            s += n.weight.exact()?;
        }
        Some(s * self.normalization)
    }

    pub fn total_f64(&self) -> f64 {
        rational_to_f64(&self.normalization) * self.nodes.iter().map(|n| n.weight.to_f64()).sum::<f64>()
    }

    /// `normalization · Σ wᵢ f(xᵢ)` with `f` in region coordinates.
    pub fn apply<F: Fn([f64; 3]) -> Complex64>(&self, f: F) -> Complex64 {
        let s: Complex64 = self.nodes.iter().map(|n| f(n.point.region_coords()) * n.weight.to_f64()).sum();
        s * rational_to_f64(&self.normalization)
    }

    pub fn count_class(&self, class: NodeClass) -> usize {
        self.nodes.iter().filter(|n| n.class == class).count()
    }

    /// Every node lies in the closed region.
    pub fn all_nodes_inside(&self) -> bool {
        self.nodes.iter().all(|n| self.region.contains(&n.point))
    }
}

/// Outcome of an exactness check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactnessReport {
    pub tested_space: String,
    pub functions: usize,
    pub max_error: f64,
    pub worst_function: Option<String>,
}

impl ExactnessReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_error < tol
    }
}

/// Largest deviation between the rule and the integration oracle over the claimed space.
pub fn verify_exactness(rule: &CubatureRule) -> Result<ExactnessReport> {
    verify_on(rule, &rule.exactness_space)
}

/// As [`verify_exactness`], against an arbitrary space.
pub fn verify_on(rule: &CubatureRule, space: &ExactnessSpace) -> Result<ExactnessReport> {
    let basis = space.basis();
    let errors: Vec<(f64, BasisFn)> = basis
        .par_iter()
        .map(|b| {
            let exact = rule.region.oracle_mean(&|p| b.eval(p), b.bandwidth(rule.region))?;
            Ok(((rule.apply(|p| b.eval(p)) - exact).norm(), *b))
        })
        .collect::<Result<_>>()?;
    let worst = errors.iter().copied().max_by(|a, b| a.0.total_cmp(&b.0));
    Ok(ExactnessReport {
        tested_space: space.to_string(),
        functions: basis.len(),
        max_error: worst.map_or(0.0, |w| w.0),
        worst_function: worst.map(|w| w.1.to_string()),
    })
}

/// `|rule(1) − 1|`: zero for exact weights.
pub fn constant_error(rule: &CubatureRule) -> f64 {
    match rule.exact_total() {
        Some(t) => rational_to_f64(&(t - q(1))).abs(),
        None => (rule.total_f64() - 1.0).abs(),
    }
}
