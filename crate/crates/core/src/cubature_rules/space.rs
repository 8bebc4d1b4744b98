//! Integration regions, exactness spaces and their test functions.

use std::f64::consts::PI;
use std::fmt;

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fourier_core::{phi_homo, polygon_mean, TAU};
use crate::index_sets::{hex_set, k_dagger_set, triangle_points, upsilon_dagger, NodeClass};
use crate::lattice_core::{
    hexagon, int_point, qf, to_homogeneous, Constraint, Domain, HomoPoint, Point, QSqrt3,
};
use crate::triangle_trig::{bracket, chart_bandwidth, hypocycloid_outline, mean_over_delta, orbit, steiner_map, tc_raw};

use super::NodePoint;

/// Region and mean-value functional a rule approximates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    /// `[−½, ½]²`.
    Square,
    /// `[0, ½]²`.
    QuarterSquare,
    /// `Ω_R = {|x₂ ± x₁| ≤ 1}`.
    Rhombus,
    /// `T_R = {0 ≤ x₁, x₂, x₁ + x₂ ≤ 1}`.
    TriangleR,
    /// Regular hexagon, nodes in homogeneous coordinates.
    Hexagon,
    /// Fundamental triangle `Δ`, nodes in homogeneous coordinates.
    Delta,
    /// `[−1, 1]²` with `W₀/π²`.
    ChebSquare,
    /// `[−1, 1]²` with `4W₁/π²`.
    ChebSquareSecond,
    /// `T_S = {y₁ + y₂ ≥ 0} ∩ [−1, 1]²` with `2W₀/π²`.
    ChebTriangle,
    /// Hypocycloid region with normalized `w_{−½}`.
    Deltoid,
    /// Hypocycloid region with normalized `w_{½}`.
    DeltoidHalf,
}

const SQRT3: f64 = 1.732_050_807_568_877_2;

fn slab(a: Point, lo: i128, hi: i128, d: i128) -> Constraint {
    Constraint::new(a, QSqrt3::from_rational(qf(lo, d)), QSqrt3::from_rational(qf(hi, d)))
}

impl Region {
    pub fn name(self) -> &'static str {
        match self {
            Region::Square => "square",
            Region::QuarterSquare => "quarter-square",
            Region::Rhombus => "rhombus",
            Region::TriangleR => "triangle-r",
            Region::Hexagon => "hexagon",
            Region::Delta => "delta",
            Region::ChebSquare => "cheb-square-w0",
            Region::ChebSquareSecond => "cheb-square-w1",
            Region::ChebTriangle => "cheb-triangle-w0",
            Region::Deltoid => "deltoid-w-1/2",
            Region::DeltoidHalf => "deltoid-w1/2",
        }
    }

    /// Regions whose nodes carry exact homogeneous coordinates.
    pub fn is_homogeneous(self) -> bool {
        matches!(self, Region::Hexagon | Region::Delta)
    }

    /// Regions whose rules come from a change of variables.
    pub fn is_algebraic(self) -> bool {
        matches!(
            self,
            Region::ChebSquare | Region::ChebSquareSecond | Region::ChebTriangle | Region::Deltoid | Region::DeltoidHalf
        )
    }

    /// Closed polygon in the chart used for classification: Cartesian, or `(t₁, t₂)` for `Δ`.
    fn chart_domain(self) -> Option<Domain> {
        let (e1, e2, e11) = (int_point(1, 0), int_point(0, 1), int_point(1, 1));
        Some(match self {
            Region::Square => Domain::new(vec![slab(e1, -1, 1, 2), slab(e2, -1, 1, 2)]),
            Region::QuarterSquare => Domain::new(vec![slab(e1, 0, 1, 2), slab(e2, 0, 1, 2)]),
            Region::Rhombus => Domain::new(vec![slab(e11, -1, 1, 1), slab(int_point(-1, 1), -1, 1, 1)]),
            Region::TriangleR | Region::Delta => {
                Domain::new(vec![slab(e1, 0, 2, 1), slab(e2, 0, 2, 1), slab(e11, -1, 1, 1)])
            }
            Region::Hexagon => hexagon(),
            _ => return None,
        })
    }

    fn chart_point(self, p: &NodePoint) -> Option<Point> {
        match (self, p) {
            (Region::Delta, NodePoint::Homo(t)) => {
                Some([QSqrt3::from_rational(t[0]), QSqrt3::from_rational(t[1])])
            }
            (Region::Hexagon, NodePoint::Homo(t)) => Some(HomoPoint { t: *t }.to_cartesian_exact()),
            (_, NodePoint::Cart(x)) => Some(*x),
            _ => None,
        }
    }

    fn faces(self, p: &NodePoint) -> Option<usize> {
        let d = self.chart_domain()?;
        let x = self.chart_point(p)?;
        Some(match self {
            // The third slab of the triangles only carries the hypotenuse.
            Region::TriangleR | Region::Delta => {
                let s = x[0] + x[1];
                (x[0].is_zero() as usize) + (x[1].is_zero() as usize) + (s == QSqrt3::one()) as usize
            }
            _ => d.saturation(&x),
        })
    }

    /// Interior, edge or vertex of the closed region; `None` for algebraic regions.
    pub fn classify(self, p: &NodePoint) -> Option<NodeClass> {
        self.faces(p).map(NodeClass::from_saturation)
    }

    /// Closed-region membership.
    pub fn contains(self, p: &NodePoint) -> bool {
        const EPS: f64 = 1e-12;
        if let (Some(d), Some(x)) = (self.chart_domain(), self.chart_point(p)) {
            return d.contains_closed(&x);
        }
        let y = p.plane_f64();
        let in_box = y.iter().all(|v| v.abs() <= 1.0 + EPS);
        match self {
            Region::ChebSquare | Region::ChebSquareSecond => in_box,
            Region::ChebTriangle => in_box && y[0] + y[1] >= -EPS,
            Region::Deltoid | Region::DeltoidHalf => bracket(y[0], y[1]) >= -EPS,
            _ => false,
        }
    }

    /// Outline in plot coordinates (Cartesian for homogeneous regions).
    pub fn outline(self) -> Vec<[f64; 2]> {
        match self {
            Region::Square => vec![[-0.5, -0.5], [0.5, -0.5], [0.5, 0.5], [-0.5, 0.5]],
            Region::QuarterSquare => vec![[0.0, 0.0], [0.5, 0.0], [0.5, 0.5], [0.0, 0.5]],
            Region::Rhombus => vec![[0.0, -1.0], [1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]],
            Region::TriangleR => vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            Region::Hexagon => hexagon().vertices_f64(),
            Region::Delta => vec![[0.0, 0.0], [2.0 / SQRT3, 0.0], [1.0 / SQRT3, 1.0]],
            Region::ChebSquare | Region::ChebSquareSecond => {
                vec![[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]
            }
            Region::ChebTriangle => vec![[1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]],
            Region::Deltoid | Region::DeltoidHalf => hypocycloid_outline(720),
        }
    }

    /// Mean-value functional of `f`, by pullback onto a polygon where needed.
    ///
    /// `f` receives region coordinates: `[x₁, x₂, 0]`, homogeneous `t`, or `[y₁, y₂, 0]`.
    pub fn oracle_mean(self, f: &(dyn Fn([f64; 3]) -> Complex64 + Sync), bandwidth: f64) -> Result<Complex64> {
        let plane = |v: &[[f64; 2]]| -> Result<Complex64> { polygon_mean(v, &|x: [f64; 2]| f([x[0], x[1], 0.0]), bandwidth) };
        let unit = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        let tr = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        let cospi = |u: [f64; 2]| [(PI * u[0]).cos(), (PI * u[1]).cos(), 0.0];
        match self {
            Region::Square | Region::QuarterSquare | Region::Rhombus | Region::TriangleR => plane(&self.outline()),
            Region::Hexagon => polygon_mean(&hexagon().vertices_f64(), &|x| f(to_homogeneous(x).t), bandwidth),
            Region::Delta => mean_over_delta(&|t| f(t), bandwidth),
            Region::ChebSquare => polygon_mean(&unit, &|u| f(cospi(u)), bandwidth),
            Region::ChebSquareSecond => {
                let g = |u: [f64; 2]| f(cospi(u)) * 4.0 * ((PI * u[0]).sin() * (PI * u[1]).sin()).powi(2);
                polygon_mean(&unit, &g, bandwidth + 4.0 * PI)
            }
            Region::ChebTriangle => polygon_mean(&tr, &|u| f(cospi(u)), bandwidth),
            Region::Deltoid => mean_over_delta(&|t| f(steiner3(t)), bandwidth),
            Region::DeltoidHalf => {
                let b = |t: [f64; 3]| {
                    let y = steiner_map(t);
                    bracket(y[0], y[1])
                };
                let extra = 4.0 * DELTOID_RATE;
                let num = mean_over_delta(&|t| f(steiner3(t)) * b(t), bandwidth + extra)?;
                let den = mean_over_delta(&|t| Complex64::new(b(t), 0.0), extra)?;
                Ok(num / den.re)
            }
        }
    }
}

/// Chart bandwidth contributed by each degree of a polynomial in the Steiner coordinates.
const DELTOID_RATE: f64 = 2.0 * PI / 3.0 * 2.236_067_977_499_79;

fn steiner3(t: [f64; 3]) -> [f64; 3] {
    let y = steiner_map(t);
    [y[0], y[1], 0.0]
}

/// One test function of an exactness space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BasisFn {
    /// `e^{i·s·k·x}` with `s = 2π` or `π`.
    Exp { half: bool, k: [i64; 2] },
    /// `cos(s·k₁x₁)·cos(s·k₂x₂)`.
    CosCos { half: bool, k: [i64; 2] },
    /// `φ_k(t)` on the hexagon.
    HexExp { k: [i64; 3] },
    /// `TC_k(t)` on `Δ`.
    TriCos { k: [i64; 3] },
    /// `y₁^a₁ y₂^a₂`.
    Monomial { a: [u32; 2] },
    /// `T_{k₁}(y₁)·T_{k₂}(y₂)`.
    ChebT { k: [u32; 2] },
}

fn scale(half: bool) -> f64 {
    if half {
        PI
    } else {
        TAU
    }
}

fn cheb_t(k: u32, y: f64) -> f64 {
    (k as f64 * y.clamp(-1.0, 1.0).acos()).cos()
}

impl BasisFn {
    /// Value at a point in region coordinates.
    pub fn eval(&self, p: [f64; 3]) -> Complex64 {
        match *self {
            BasisFn::Exp { half, k } => {
                Complex64::from_polar(1.0, scale(half) * (k[0] as f64 * p[0] + k[1] as f64 * p[1]))
            }
            BasisFn::CosCos { half, k } => {
                let s = scale(half);
                Complex64::new((s * k[0] as f64 * p[0]).cos() * (s * k[1] as f64 * p[1]).cos(), 0.0)
            }
            BasisFn::HexExp { k } => phi_homo(k, p),
            BasisFn::TriCos { k } => tc_raw(k, p),
            BasisFn::Monomial { a } => Complex64::new(p[0].powi(a[0] as i32) * p[1].powi(a[1] as i32), 0.0),
            BasisFn::ChebT { k } => Complex64::new(cheb_t(k[0], p[0]) * cheb_t(k[1], p[1]), 0.0),
        }
    }

    /// Angular bandwidth of the pulled-back integrand used by [`Region::oracle_mean`].
    pub fn bandwidth(&self, region: Region) -> f64 {
        let norm = |a: f64, b: f64| a.hypot(b);
        match *self {
            BasisFn::Exp { half, k } | BasisFn::CosCos { half, k } => {
                scale(half) * norm(k[0] as f64, k[1] as f64)
            }
            BasisFn::HexExp { k } => {
                let (a, b) = ((k[0] - k[2]) as f64 * SQRT3 / 2.0, k[1] as f64 - (k[0] + k[2]) as f64 / 2.0);
                TAU / 3.0 * norm(a, b)
            }
            BasisFn::TriCos { k } => orbit(k).into_iter().map(chart_bandwidth).fold(0.0, f64::max),
            BasisFn::Monomial { a } => match region {
                Region::Deltoid | Region::DeltoidHalf => DELTOID_RATE * (a[0] + a[1]) as f64,
                _ => PI * norm(a[0] as f64, a[1] as f64),
            },
            BasisFn::ChebT { k } => PI * norm(k[0] as f64, k[1] as f64),
        }
    }
}

impl fmt::Display for BasisFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |h: bool| if h { "π" } else { "2π" };
        match self {
            BasisFn::Exp { half, k } => write!(f, "exp(i{}·({},{})·x)", s(*half), k[0], k[1]),
            BasisFn::CosCos { half, k } => write!(f, "cos({0}·{1}x₁)cos({0}·{2}x₂)", s(*half), k[0], k[1]),
            BasisFn::HexExp { k } => write!(f, "φ({},{},{})", k[0], k[1], k[2]),
            BasisFn::TriCos { k } => write!(f, "TC({},{},{})", k[0], k[1], k[2]),
            BasisFn::Monomial { a } => write!(f, "y₁^{} y₂^{}", a[0], a[1]),
            BasisFn::ChebT { k } => write!(f, "T{}(y₁)T{}(y₂)", k[0], k[1]),
        }
    }
}

/// Families of test spaces, each parametrized by one degree `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceKind {
    /// `e^{2πik·x}`, `|k₁|, |k₂| ≤ m`.
    SquareExp,
    /// `e^{2πik·x}`, `|k₁| + |k₂| ≤ m`.
    SquareDiamondExp,
    /// `cos 2πk₁x₁ cos 2πk₂x₂`, `0 ≤ k₁, k₂ ≤ m`.
    SquareCos,
    /// `cos 2πk₁x₁ cos 2πk₂x₂`, `k₁ + k₂ ≤ m`.
    SquareDiamondCos,
    /// `e^{πij·x}`, `|j₁|, |j₂| ≤ m`, `j₁ ≡ j₂ (mod 2)`.
    RhombusExp,
    /// `e^{πij·x}`, `|j₁| + |j₂| ≤ m`, `j₁ ≡ j₂ (mod 2)`.
    RhombusDiamondExp,
    /// `cos πj₁x₁ cos πj₂x₂`, `0 ≤ j₁, j₂ ≤ m`, equal parity.
    RhombusCos,
    /// `cos πj₁x₁ cos πj₂x₂`, `j₁ + j₂ ≤ m`, equal parity.
    RhombusDiamondCos,
    /// `φ_k`, `k ∈ ℍ_m*`.
    HexExp,
    /// `φ_k`, `k ∈ 𝕂_m†*`.
    HexDaggerExp,
    /// `TC_k`, `k` in the cone with `−k₃ ≤ m`.
    TriangleCos,
    /// `TC_k`, `k ∈ Υ_m†`.
    TriangleCosDagger,
    /// `y^a`, `a₁, a₂ ≤ m`.
    ProductPoly,
    /// `y^a`, `a₁ + a₂ ≤ m`.
    TotalPoly,
    /// `T_{k₁}T_{k₂}`, `k₁, k₂ ≤ m`, equal parity.
    ChebParity,
    /// `T_{k₁}T_{k₂}`, `k₁ + k₂ ≤ m`, equal parity.
    ChebParityDiamond,
}

impl SpaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::SquareExp => "square-exp",
            SpaceKind::SquareDiamondExp => "square-diamond-exp",
            SpaceKind::SquareCos => "square-cos",
            SpaceKind::SquareDiamondCos => "square-diamond-cos",
            SpaceKind::RhombusExp => "rhombus-exp",
            SpaceKind::RhombusDiamondExp => "rhombus-diamond-exp",
            SpaceKind::RhombusCos => "rhombus-cos",
            SpaceKind::RhombusDiamondCos => "rhombus-diamond-cos",
            SpaceKind::HexExp => "hex-exp",
            SpaceKind::HexDaggerExp => "hex-dagger-exp",
            SpaceKind::TriangleCos => "triangle-cos",
            SpaceKind::TriangleCosDagger => "triangle-cos-dagger",
            SpaceKind::ProductPoly => "product-poly",
            SpaceKind::TotalPoly => "total-poly",
            SpaceKind::ChebParity => "cheb-parity",
            SpaceKind::ChebParityDiamond => "cheb-parity-diamond",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        ALL_SPACES.into_iter().find(|k| k.name() == s)
    }
}

const ALL_SPACES: [SpaceKind; 16] = [
    SpaceKind::SquareExp,
    SpaceKind::SquareDiamondExp,
    SpaceKind::SquareCos,
    SpaceKind::SquareDiamondCos,
    SpaceKind::RhombusExp,
    SpaceKind::RhombusDiamondExp,
    SpaceKind::RhombusCos,
    SpaceKind::RhombusDiamondCos,
    SpaceKind::HexExp,
    SpaceKind::HexDaggerExp,
    SpaceKind::TriangleCos,
    SpaceKind::TriangleCosDagger,
    SpaceKind::ProductPoly,
    SpaceKind::TotalPoly,
    SpaceKind::ChebParity,
    SpaceKind::ChebParityDiamond,
];

/// A claimed exactness space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactnessSpace {
    pub kind: SpaceKind,
    pub degree: i64,
}

impl fmt::Display for ExactnessSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind.name(), self.degree)
    }
}

fn grid(lo: i64, hi: i64, keep: impl Fn(i64, i64) -> bool) -> Vec<[i64; 2]> {
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in lo..=hi {
            if keep(a, b) {
                out.push([a, b]);
            }
        }
    }
    out
}

impl ExactnessSpace {
    pub fn new(kind: SpaceKind, degree: i64) -> Self {
        ExactnessSpace { kind, degree }
    }

    /// Spanning test functions.
    pub fn basis(&self) -> Vec<BasisFn> {
        let m = self.degree;
        if m < 0 {
            return Vec::new();
        }
        let even = |a: i64, b: i64| (a - b).rem_euclid(2) == 0;
        let u = |k: [i64; 2]| [k[0] as u32, k[1] as u32];
        match self.kind {
            SpaceKind::SquareExp => grid(-m, m, |_, _| true).into_iter().map(|k| BasisFn::Exp { half: false, k }).collect(),
            SpaceKind::SquareDiamondExp => grid(-m, m, |a, b| a.abs() + b.abs() <= m)
                .into_iter()
                .map(|k| BasisFn::Exp { half: false, k })
                .collect(),
            SpaceKind::SquareCos => grid(0, m, |_, _| true).into_iter().map(|k| BasisFn::CosCos { half: false, k }).collect(),
            SpaceKind::SquareDiamondCos => grid(0, m, |a, b| a + b <= m)
                .into_iter()
                .map(|k| BasisFn::CosCos { half: false, k })
                .collect(),
            SpaceKind::RhombusExp => grid(-m, m, even).into_iter().map(|k| BasisFn::Exp { half: true, k }).collect(),
            SpaceKind::RhombusDiamondExp => grid(-m, m, |a, b| even(a, b) && a.abs() + b.abs() <= m)
                .into_iter()
                .map(|k| BasisFn::Exp { half: true, k })
                .collect(),
            SpaceKind::RhombusCos => grid(0, m, even).into_iter().map(|k| BasisFn::CosCos { half: true, k }).collect(),
            SpaceKind::RhombusDiamondCos => grid(0, m, |a, b| even(a, b) && a + b <= m)
                .into_iter()
                .map(|k| BasisFn::CosCos { half: true, k })
                .collect(),
            SpaceKind::HexExp => hex_set(m, true).into_iter().map(|k| BasisFn::HexExp { k }).collect(),
            SpaceKind::HexDaggerExp => k_dagger_set(m, true).into_iter().map(|k| BasisFn::HexExp { k }).collect(),
            SpaceKind::TriangleCos => triangle_points(m).into_iter().map(|k| BasisFn::TriCos { k }).collect(),
            SpaceKind::TriangleCosDagger => upsilon_dagger(m).into_iter().map(|k| BasisFn::TriCos { k }).collect(),
            SpaceKind::ProductPoly => grid(0, m, |_, _| true).into_iter().map(|k| BasisFn::Monomial { a: u(k) }).collect(),
            SpaceKind::TotalPoly => grid(0, m, |a, b| a + b <= m)
                .into_iter()
                .map(|k| BasisFn::Monomial { a: u(k) })
                .collect(),
            SpaceKind::ChebParity => grid(0, m, even).into_iter().map(|k| BasisFn::ChebT { k: u(k) }).collect(),
            SpaceKind::ChebParityDiamond => grid(0, m, |a, b| even(a, b) && a + b <= m)
                .into_iter()
                .map(|k| BasisFn::ChebT { k: u(k) })
                .collect(),
        }
    }
}
