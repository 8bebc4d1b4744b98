//! Versioned JSON form of a cubature rule.

use serde::{Deserialize, Serialize};

use crate::cubature_rules::{build_rule, CubatureRule, ExactnessSpace, Node, NodePoint, RuleTag, SpaceKind, Weight};
use crate::error::{Error, Result};
use crate::index_sets::NodeClass;
use crate::lattice_core::{format_rational, parse_rational, QSqrt3};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub cartesian: [f64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homogeneous: Option<[f64; 3]>,
    /// Exact coordinates: three rationals for homogeneous nodes, two `p+q*sqrt3` strings otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<String>>,
    /// `p/q` for exact weights, scientific notation otherwise.
    pub weight: String,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactnessRecord {
    pub space: String,
    pub max_index_or_degree: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RuleFileV1 {
    pub schema_version: u32,
    pub case: String,
    pub tag: String,
    pub n: u32,
    pub normalization: String,
    pub nodes: Vec<NodeRecord>,
    pub exactness: ExactnessRecord,
}

/// 17 significant digits.
pub fn format_decimal(v: f64) -> String {
    format!("{v:.16e}")
}

fn format_weight(w: &Weight) -> String {
    match w {
        Weight::Exact(r) => format_rational(r),
        Weight::Approx(v) => format_decimal(*v),
    }
}

fn parse_weight(s: &str) -> Result<Weight> {
    if s.contains(['e', 'E', '.']) {
        return s.trim().parse::<f64>().map(Weight::Approx).map_err(|_| Error::Parse(format!("bad weight {s:?}")));
    }
    parse_rational(s).map(Weight::Exact).ok_or_else(|| Error::Parse(format!("bad weight {s:?}")))
}

impl RuleFileV1 {
    pub fn from_rule(rule: &CubatureRule) -> Self {
        let nodes = rule
            .nodes
            .iter()
            .map(|node| {
                let (homogeneous, exact) = match &node.point {
                    NodePoint::Homo(t) => {
                        let f = crate::lattice_core::HomoPoint { t: *t }.to_f64().t;
                        (Some(f), Some(t.iter().map(format_rational).collect()))
                    }
                    NodePoint::Cart(p) => (None, Some(p.iter().map(|c| c.to_string()).collect())),
                    NodePoint::Real(_) => (None, None),
                };
                NodeRecord {
                    cartesian: node.point.plane_f64(),
                    homogeneous,
                    exact,
                    weight: format_weight(&node.weight),
                    class: node.class.name().to_string(),
                }
            })
            .collect();
        RuleFileV1 {
            schema_version: SCHEMA_VERSION,
            case: rule.id.case().name().to_string(),
            tag: rule.id.name().to_string(),
            n: rule.n,
            normalization: format_rational(&rule.normalization),
            nodes,
            exactness: ExactnessRecord {
                space: rule.exactness_space.kind.name().to_string(),
                max_index_or_degree: rule.exactness_space.degree,
            },
        }
    }

    /// Rebuilds the rule from the recorded nodes and weights; the region comes from the tag.
    pub fn to_rule(&self) -> Result<CubatureRule> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema_version {}", self.schema_version)));
        }
        let tag: RuleTag = self.tag.parse()?;
        if tag.case().name() != self.case {
            return Err(Error::Parse(format!("case {} does not match tag {}", self.case, self.tag)));
        }
        let region = build_rule(tag, self.n)?.region;
        let normalization = parse_rational(&self.normalization)
            .ok_or_else(|| Error::Parse(format!("bad normalization {:?}", self.normalization)))?;
        let kind = SpaceKind::parse(&self.exactness.space)
            .ok_or_else(|| Error::Parse(format!("unknown space {:?}", self.exactness.space)))?;
        let nodes = self.nodes.iter().map(|r| parse_node(r, region.is_homogeneous())).collect::<Result<_>>()?;
        Ok(CubatureRule {
            id: tag,
            n: self.n,
            nodes,
            normalization,
            exactness_space: ExactnessSpace { kind, degree: self.exactness.max_index_or_degree },
            region,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("rule files always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn parse_node(r: &NodeRecord, homogeneous: bool) -> Result<Node> {
    let bad = |what: &str| Error::Parse(format!("bad {what} in node {r:?}"));
    let point = match (&r.exact, homogeneous) {
        (Some(e), true) if e.len() == 3 => {
            let t: Vec<_> = e.iter().map(|s| parse_rational(s).ok_or_else(|| bad("homogeneous coordinate"))).collect::<Result<_>>()?;
            if t[0] + t[1] + t[2] != num::Zero::zero() {
                return Err(bad("homogeneous sum"));
            }
            NodePoint::Homo([t[0], t[1], t[2]])
        }
        (Some(e), false) if e.len() == 2 => {
            let p: Vec<QSqrt3> = e.iter().map(|s| s.parse().map_err(|_| bad("coordinate"))).collect::<Result<_>>()?;
            NodePoint::Cart([p[0], p[1]])
        }
        (Some(_), _) => return Err(bad("exact coordinates")),
        (None, _) => NodePoint::Real(r.cartesian),
    };
    let class = NodeClass::parse(&r.class).ok_or_else(|| bad("class"))?;
    Ok(Node { point, weight: parse_weight(&r.weight)?, class })
}
