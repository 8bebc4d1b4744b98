//! Rule constructors, symmetry folds and changes of variables.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::index_sets::{hex_c_weight, hex_set, k_set, triangle_points, triangle_saturation, NodeClass};
use crate::lattice_core::{qf, reduce_homogeneous, CaseTag, HomoPoint, QSqrt3, Rational};
use crate::triangle_trig::{bracket, steiner_map, A2};

use super::space::{ExactnessSpace, Region, SpaceKind};
use super::{CubatureRule, Node, NodePoint, Weight};

/// Identifier of a built-in rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleTag {
    SS1,
    SS2a,
    SS2b,
    SS3,
    SS4,
    SS2aW0,
    SS2aW1,
    SS2bW1,
    SrCuba1,
    SrCubaT,
    RS,
    RS2,
    RS2W0,
    RR,
    RR2,
    RR2W0,
    HH,
    HH2,
    HH3a1,
    HH3a2,
    HHW1,
    HHD,
    HHT2,
    HHT2W1,
    GaussWHalf,
}

impl RuleTag {
    pub const ALL: [RuleTag; 25] = [
        RuleTag::SS1,
        RuleTag::SS2a,
        RuleTag::SS2b,
        RuleTag::SS3,
        RuleTag::SS4,
        RuleTag::SS2aW0,
        RuleTag::SS2aW1,
        RuleTag::SS2bW1,
        RuleTag::SrCuba1,
        RuleTag::SrCubaT,
        RuleTag::RS,
        RuleTag::RS2,
        RuleTag::RS2W0,
        RuleTag::RR,
        RuleTag::RR2,
        RuleTag::RR2W0,
        RuleTag::HH,
        RuleTag::HH2,
        RuleTag::HH3a1,
        RuleTag::HH3a2,
        RuleTag::HHW1,
        RuleTag::HHD,
        RuleTag::HHT2,
        RuleTag::HHT2W1,
        RuleTag::GaussWHalf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleTag::SS1 => "SS1",
            RuleTag::SS2a => "SS2a",
            RuleTag::SS2b => "SS2b",
            RuleTag::SS3 => "SS3",
            RuleTag::SS4 => "SS4",
            RuleTag::SS2aW0 => "SS2a-W0",
            RuleTag::SS2aW1 => "SS2a-W1",
            RuleTag::SS2bW1 => "SS2b-W1",
            RuleTag::SrCuba1 => "SR-cuba1",
            RuleTag::SrCubaT => "SR-cubaT",
            RuleTag::RS => "RS",
            RuleTag::RS2 => "RS2",
            RuleTag::RS2W0 => "RS2-W0",
            RuleTag::RR => "RR",
            RuleTag::RR2 => "RR2",
            RuleTag::RR2W0 => "RR2-W0",
            RuleTag::HH => "HH",
            RuleTag::HH2 => "HH2",
            RuleTag::HH3a1 => "HH3a1",
            RuleTag::HH3a2 => "HH3a2",
            RuleTag::HHW1 => "HH-W1",
            RuleTag::HHD => "HHD",
            RuleTag::HHT2 => "HHT2",
            RuleTag::HHT2W1 => "HHT2-W1",
            RuleTag::GaussWHalf => "Gauss-W½",
        }
    }

    /// Lattice pair the rule is derived from.
    pub fn case(self) -> CaseTag {
        use RuleTag::*;
        match self {
            SS1 | SS2a | SS2b | SS3 | SS4 | SS2aW0 | SS2aW1 | SS2bW1 => CaseTag::SquareSquare,
            SrCuba1 | SrCubaT => CaseTag::SquareRhombus,
            RS | RS2 | RS2W0 => CaseTag::RhombicSquare,
            RR | RR2 | RR2W0 => CaseTag::RhombicRhombic,
            HH | HH2 | HH3a1 | HH3a2 | HHW1 | GaussWHalf => CaseTag::HexHex,
            HHD | HHT2 | HHT2W1 => CaseTag::HexHexTranspose,
        }
    }

    fn min_n(self) -> u32 {
        match self {
            RuleTag::SrCuba1 | RuleTag::SrCubaT | RuleTag::GaussWHalf | RuleTag::SS2aW1 | RuleTag::SS2bW1 => 2,
            _ => 1,
        }
    }

    fn odd_only(self) -> bool {
        matches!(self, RuleTag::RR | RuleTag::RR2 | RuleTag::RR2W0)
    }

    pub fn check_n(self, n: u32) -> Result<()> {
        let unsupported = |reason: &str| Error::UnsupportedN { tag: self.name().into(), n, reason: reason.into() };
        if n < self.min_n() {
            return Err(unsupported(&format!("n must be at least {}", self.min_n())));
        }
        if self.odd_only() && n % 2 == 0 {
            return Err(unsupported("n must be odd"));
        }
        Ok(())
    }
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let alias = ["gauss-w1/2", "gauss-whalf", "gauss-w0.5"];
        if alias.iter().any(|a| a.eq_ignore_ascii_case(s)) {
            return Ok(RuleTag::GaussWHalf);
        }
        RuleTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

fn rat(p: i64, d: i64) -> Rational {
    qf(p as i128, d as i128)
}

fn cart(a: Rational, b: Rational) -> NodePoint {
    NodePoint::Cart([QSqrt3::from_rational(a), QSqrt3::from_rational(b)])
}

fn homo(t: [Rational; 3]) -> NodePoint {
    NodePoint::Homo(t)
}

fn assemble(
    id: RuleTag,
    n: u32,
    nodes: Vec<(NodePoint, Weight)>,
    normalization: Rational,
    space: ExactnessSpace,
    region: Region,
) -> CubatureRule {
    let nodes = nodes
        .into_iter()
        .map(|(point, weight)| {
            let class = region.classify(&point).unwrap_or(NodeClass::Interior);
            Node { point, weight, class }
        })
        .collect();
    CubatureRule { id, n, nodes, normalization, exactness_space: space, region }
}

fn sp(kind: SpaceKind, degree: i64) -> ExactnessSpace {
    ExactnessSpace::new(kind, degree)
}

/// Product of `½` per coordinate sitting on `±n`.
fn boundary_weight(k: &[i64], n: i64) -> Rational {
    k.iter().filter(|v| v.abs() == n).fold(Rational::one(), |w, _| w / 2)
}

fn square_grid(lo: i64, hi: i64) -> impl Iterator<Item = [i64; 2]> {
    (lo..=hi).flat_map(move |a| (lo..=hi).map(move |b| [a, b]))
}

fn ss1(n: i64) -> CubatureRule {
    let nodes = square_grid(-n, n - 1)
        .map(|k| (cart(rat(k[0], 2 * n), rat(k[1], 2 * n)), Weight::Exact(Rational::one())))
        .collect();
    assemble(RuleTag::SS1, n as u32, nodes, rat(1, 4 * n * n), sp(SpaceKind::SquareExp, 2 * n - 1), Region::Square)
}

fn ss2a(n: i64) -> CubatureRule {
    let nodes = square_grid(-n, n)
        .map(|k| (cart(rat(k[0], 2 * n), rat(k[1], 2 * n)), Weight::Exact(boundary_weight(&k, n))))
        .collect();
    assemble(RuleTag::SS2a, n as u32, nodes, rat(1, 4 * n * n), sp(SpaceKind::SquareExp, 2 * n - 1), Region::Square)
}

fn ss2b(n: i64) -> CubatureRule {
    let nodes = square_grid(-n, n - 1)
        .map(|k| (cart(rat(2 * k[0] + 1, 4 * n), rat(2 * k[1] + 1, 4 * n)), Weight::Exact(Rational::one())))
        .collect();
    assemble(RuleTag::SS2b, n as u32, nodes, rat(1, 4 * n * n), sp(SpaceKind::SquareExp, 2 * n - 1), Region::Square)
}

fn sr_cuba1(n: i64) -> CubatureRule {
    let nodes = square_grid(-n, n)
        .filter(|k| (k[0] - k[1]).rem_euclid(2) == 0)
        .map(|k| (cart(rat(k[0], 2 * n), rat(k[1], 2 * n)), Weight::Exact(boundary_weight(&k, n))))
        .collect();
    assemble(
        RuleTag::SrCuba1,
        n as u32,
        nodes,
        rat(1, 2 * n * n),
        sp(SpaceKind::SquareDiamondExp, 2 * n - 1),
        Region::Square,
    )
}

fn rs(n: i64) -> CubatureRule {
    let nodes = square_grid(-n, n)
        .filter(|k| (k[1] + k[0]).abs() <= n && (k[1] - k[0]).abs() <= n)
        .map(|k| {
            let w = boundary_weight(&[k[1] + k[0], k[1] - k[0]], n);
            (cart(rat(k[0], n), rat(k[1], n)), Weight::Exact(w))
        })
        .collect();
    assemble(RuleTag::RS, n as u32, nodes, rat(1, 2 * n * n), sp(SpaceKind::RhombusExp, 2 * n - 1), Region::Rhombus)
}

fn rr(n: i64) -> CubatureRule {
    // −n/2 ≤ −k₁ < n/2 and −n/2 ≤ k₂ < n/2, compared after doubling.
    let nodes = square_grid(-n, n)
        .filter(|k| -n <= -2 * k[0] && -2 * k[0] < n && -n <= 2 * k[1] && 2 * k[1] < n)
        .map(|k| (cart(rat(k[0] + k[1], n), rat(k[1] - k[0], n)), Weight::Exact(Rational::one())))
        .collect();
    assemble(
        RuleTag::RR,
        n as u32,
        nodes,
        rat(1, n * n),
        sp(SpaceKind::RhombusDiamondExp, 2 * n - 1),
        Region::Rhombus,
    )
}

fn homo_over(j: [i64; 3], d: i64) -> [Rational; 3] {
    j.map(|v| rat(v, d))
}

fn hh(n: i64) -> CubatureRule {
    let nodes = hex_set(n, true)
        .into_iter()
        .map(|j| (homo(homo_over(j, n)), Weight::Exact(hex_c_weight(j, n))))
        .collect();
    assemble(RuleTag::HH, n as u32, nodes, rat(1, 3 * n * n), sp(SpaceKind::HexExp, 2 * n - 1), Region::Hexagon)
}

fn hh3(n: i64, sign: i64, id: RuleTag) -> Result<CubatureRule> {
    let a = [rat(sign, 3 * n), rat(sign, 3 * n), rat(-2 * sign, 3 * n)];
    let mut nodes = Vec::new();
    for j in hex_set(n, false) {
        let t = homo_over(j, n);
        let shifted = HomoPoint::exact(t[0] + a[0], t[1] + a[1], t[2] + a[2]);
        nodes.push((homo(reduce_homogeneous(&shifted)?.t), Weight::Exact(Rational::one())));
    }
    Ok(assemble(id, n as u32, nodes, rat(1, 3 * n * n), sp(SpaceKind::HexExp, 2 * n - 1), Region::Hexagon))
}

fn hhd(n: i64) -> CubatureRule {
    let nodes = k_set(n, true)
        .into_iter()
        .map(|j| (homo(homo_over(j, n)), Weight::Exact(hex_c_weight(j, n))))
        .collect();
    assemble(RuleTag::HHD, n as u32, nodes, rat(1, n * n), sp(SpaceKind::HexDaggerExp, 2 * n - 1), Region::Hexagon)
}

/// Gaussian rule for `w_{½}` on the hypocycloid region with `n(n+1)/2` nodes.
///
/// The nodes are the images of the interior points of `Δ` on the grid `j/(n+2)`; the weights
/// are proportional to the bracket of `w_{½}` there.
pub fn gaussian_rule_w_half(n: u32) -> Result<CubatureRule> {
    RuleTag::GaussWHalf.check_n(n)?;
    let m = n as i64 + 2;
    let pts: Vec<[f64; 2]> = triangle_points(m)
        .into_iter()
        .filter(|&j| triangle_saturation(j, m) == 0)
        .map(|j| steiner_map(j.map(|v| v as f64 / m as f64)))
        .collect();
    let b: Vec<f64> = pts.iter().map(|y| bracket(y[0], y[1])).collect();
    let total: f64 = b.iter().sum();
    let nodes = pts.into_iter().zip(b).map(|(y, w)| (NodePoint::Real(y), Weight::Approx(w / total))).collect();
    Ok(assemble(
        RuleTag::GaussWHalf,
        n,
        nodes,
        Rational::one(),
        sp(SpaceKind::TotalPoly, 2 * n as i64 - 1),
        Region::DeltoidHalf,
    ))
}

/// Representative of a node's orbit under the symmetry group of the region.
fn orbit_rep(region: Region, p: &NodePoint) -> Option<NodePoint> {
    match (region, p) {
        (Region::Square | Region::Rhombus, NodePoint::Cart(x)) => Some(NodePoint::Cart([x[0].abs(), x[1].abs()])),
        (Region::Hexagon, NodePoint::Homo(t)) => A2.iter().find_map(|g| {
            let s = Rational::from_integer(g.sign as i128);
            let v = [s * t[g.perm[0]], s * t[g.perm[1]], s * t[g.perm[2]]];
            (!v[0].is_negative() && !v[1].is_negative()).then_some(NodePoint::Homo(v))
        }),
        _ => None,
    }
}

fn fold_target(region: Region) -> Option<Region> {
    match region {
        Region::Square => Some(Region::QuarterSquare),
        Region::Rhombus => Some(Region::TriangleR),
        Region::Hexagon => Some(Region::Delta),
        _ => None,
    }
}

fn point_key(p: &NodePoint) -> Vec<Rational> {
    match p {
        NodePoint::Cart(x) => vec![x[0].p, x[0].q, x[1].p, x[1].q],
        NodePoint::Homo(t) => t.to_vec(),
        NodePoint::Real(_) => unreachable!("folds act on exact nodes"),
    }
}

/// Restriction of a symmetric rule to invariant functions: nodes are merged into one
/// representative per orbit in the fundamental region and their weights are summed.
pub fn fold(rule: &CubatureRule, id: RuleTag, space: ExactnessSpace) -> Result<CubatureRule> {
    let target = fold_target(rule.region).ok_or_else(|| Error::NoSubstitution(rule.id.name().into()))?;
    let mut order: Vec<NodePoint> = Vec::new();
    let mut sums: HashMap<Vec<Rational>, Rational> = HashMap::new();
    for node in &rule.nodes {
        let rep = orbit_rep(rule.region, &node.point).ok_or_else(|| Error::NoSubstitution(rule.id.name().into()))?;
        let w = node.weight.exact().ok_or_else(|| Error::NoSubstitution(rule.id.name().into()))?;
        let key = point_key(&rep);
        if !sums.contains_key(&key) {
            order.push(rep);
        }
        *sums.entry(key).or_insert_with(Rational::zero) += w;
    }
    order.sort_by_key(point_key);
    let nodes = order
        .into_iter()
        .map(|p| {
            let w = sums[&point_key(&p)];
            (p, Weight::Exact(w))
        })
        .collect();
    Ok(canonical(assemble(id, rule.n, nodes, rule.normalization, space, target)))
}

/// Pull an integer common factor of the weights into the normalization.
fn canonical(mut rule: CubatureRule) -> CubatureRule {
    let ws: Option<Vec<Rational>> = rule.nodes.iter().map(|n| n.weight.exact()).collect();
    let Some(ws) = ws else { return rule };
    let g = ws.iter().fold(Rational::zero(), |g, w| {
        let num = g.numer().gcd(w.numer());
        let den = g.denom().lcm(w.denom());
        Rational::new(num, den)
    });
    if g.is_integer() && g > Rational::one() {
        for n in &mut rule.nodes {
            n.weight = Weight::Exact(n.weight.exact().unwrap() / g);
        }
        rule.normalization *= g;
    }
    rule
}

fn substitution(region: Region) -> Option<(Region, fn(&NodePoint) -> [f64; 2])> {
    fn cos2(p: &NodePoint) -> [f64; 2] {
        p.plane_f64().map(|x| (TAU * x).cos())
    }
    fn cos1(p: &NodePoint) -> [f64; 2] {
        p.plane_f64().map(|x| (PI * x).cos())
    }
    fn steiner(p: &NodePoint) -> [f64; 2] {
        steiner_map(p.region_coords())
    }
    match region {
        Region::QuarterSquare => Some((Region::ChebSquare, cos2)),
        Region::TriangleR => Some((Region::ChebTriangle, cos1)),
        Region::Delta => Some((Region::Deltoid, steiner)),
        _ => None,
    }
}

fn map_nodes(rule: &CubatureRule, id: RuleTag, space: ExactnessSpace) -> Result<CubatureRule> {
    let (target, f) = substitution(rule.region).ok_or_else(|| Error::NoSubstitution(rule.id.name().into()))?;
    let nodes = rule
        .nodes
        .iter()
        .map(|n| Node { point: NodePoint::Real(f(&n.point)), weight: n.weight, class: n.class })
        .collect();
    Ok(CubatureRule { id, n: rule.n, nodes, normalization: rule.normalization, exactness_space: space, region: target })
}

/// Restriction of a symmetric square rule to `sin 2πk₁x₁ sin 2πk₂x₂ · g`, mapped to the
/// product weight of the second kind. Nodes where a sine vanishes drop out.
fn second_kind(rule: &CubatureRule, id: RuleTag, degree: i64) -> Result<CubatureRule> {
    let folded = fold(rule, id, sp(SpaceKind::SquareCos, 0))?;
    let half = QSqrt3::from_rational(qf(1, 2));
    let mut nodes = Vec::new();
    for n in &folded.nodes {
        let NodePoint::Cart(x) = n.point else { unreachable!("square rules are Cartesian") };
        if x.iter().any(|v| v.is_zero() || *v == half) {
            continue;
        }
        let xf = n.point.plane_f64();
        let s = (TAU * xf[0]).sin() * (TAU * xf[1]).sin();
        let w = 4.0 * n.weight.to_f64() * s * s;
        nodes.push(Node {
            point: NodePoint::Real(xf.map(|v| (TAU * v).cos())),
            weight: Weight::Approx(w),
            class: NodeClass::Interior,
        });
    }
    Ok(CubatureRule {
        id,
        n: rule.n,
        nodes,
        normalization: folded.normalization,
        exactness_space: sp(SpaceKind::ProductPoly, degree),
        region: Region::ChebSquareSecond,
    })
}

/// The algebraic rule obtained from a trigonometric rule by its change of variables,
/// folding first when the input is not yet on the fundamental region.
pub fn chebyshev_image(rule: &CubatureRule) -> Result<CubatureRule> {
    let n = rule.n as i64;
    let stage3 = |id: RuleTag, kind: SpaceKind, degree: i64| -> Result<CubatureRule> {
        if rule.region.is_algebraic() || fold_target(rule.region).is_none() {
            Ok(rule.clone())
        } else {
            fold(rule, id, sp(kind, degree))
        }
    };
    use RuleTag::*;
    let (tri, id, kind, degree) = match rule.id {
        SS2b | SS3 => (stage3(SS3, SpaceKind::SquareCos, 2 * n - 1)?, SS4, SpaceKind::ProductPoly, 2 * n - 1),
        SS2a => (stage3(SS2a, SpaceKind::SquareCos, 2 * n - 1)?, SS2aW0, SpaceKind::ProductPoly, 2 * n - 1),
        SrCuba1 => (stage3(SrCuba1, SpaceKind::SquareDiamondCos, 2 * n - 1)?, SrCubaT, SpaceKind::TotalPoly, 2 * n - 1),
        RS | RS2 => (stage3(RS2, SpaceKind::RhombusCos, 2 * n - 1)?, RS2W0, SpaceKind::ChebParity, 2 * n - 1),
        RR | RR2 => (stage3(RR2, SpaceKind::RhombusDiamondCos, 2 * n - 1)?, RR2W0, SpaceKind::ChebParityDiamond, 2 * n - 1),
        HH | HH2 => (stage3(HH2, SpaceKind::TriangleCos, 2 * n - 1)?, HHW1, SpaceKind::TotalPoly, 2 * n - 1),
        HHD | HHT2 => (stage3(HHT2, SpaceKind::TriangleCosDagger, 2 * n - 1)?, HHT2W1, SpaceKind::TotalPoly, n - 1),
        other => return Err(Error::NoSubstitution(other.name().into())),
    };
    map_nodes(&tri, id, sp(kind, degree))
}

/// Construct a built-in rule.
pub fn build_rule(tag: RuleTag, n: u32) -> Result<CubatureRule> {
    tag.check_n(n)?;
    let m = n as i64;
    use RuleTag::*;
    Ok(match tag {
        SS1 => ss1(m),
        SS2a => ss2a(m),
        SS2b => ss2b(m),
        SS3 => fold(&ss2b(m), SS3, sp(SpaceKind::SquareCos, 2 * m - 1))?,
        SS4 => chebyshev_image(&build_rule(SS3, n)?)?,
        SS2aW0 => chebyshev_image(&ss2a(m))?,
        SS2aW1 => second_kind(&ss2a(m), SS2aW1, 2 * m - 3)?,
        SS2bW1 => second_kind(&ss2b(m), SS2bW1, 2 * m - 3)?,
        SrCuba1 => sr_cuba1(m),
        SrCubaT => chebyshev_image(&sr_cuba1(m))?,
        RS => rs(m),
        RS2 => fold(&rs(m), RS2, sp(SpaceKind::RhombusCos, 2 * m - 1))?,
        RS2W0 => chebyshev_image(&rs(m))?,
        RR => rr(m),
        RR2 => fold(&rr(m), RR2, sp(SpaceKind::RhombusDiamondCos, 2 * m - 1))?,
        RR2W0 => chebyshev_image(&rr(m))?,
        HH => hh(m),
        HH2 => fold(&hh(m), HH2, sp(SpaceKind::TriangleCos, 2 * m - 1))?,
        HH3a1 => hh3(m, 1, HH3a1)?,
        HH3a2 => hh3(m, -1, HH3a2)?,
        HHW1 => chebyshev_image(&hh(m))?,
        HHD => hhd(m),
        HHT2 => fold(&hhd(m), HHT2, sp(SpaceKind::TriangleCosDagger, 2 * m - 1))?,
        HHT2W1 => chebyshev_image(&hhd(m))?,
        GaussWHalf => gaussian_rule_w_half(n)?,
    })
}
