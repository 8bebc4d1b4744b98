//! Node and frequency index sets with interior/edge/vertex classification.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice_core::{
    point_to_f64, q, rational_to_f64, to_homogeneous_exact, CaseTag, Domain, Geometry, LatticeCase, Mat2, Point,
    Rational,
};

/// Which of the four sets of a lattice pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Node indices `Λ_N`, half-open.
    Open,
    /// Node indices, closed.
    Closed,
    /// Frequencies `Λ_N†`, half-open.
    DaggerOpen,
    /// Frequencies, closed.
    DaggerClosed,
}

impl Variant {
    pub fn is_closed(self) -> bool {
        matches!(self, Variant::Closed | Variant::DaggerClosed)
    }

    pub fn is_dagger(self) -> bool {
        matches!(self, Variant::DaggerOpen | Variant::DaggerClosed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeClass {
    Interior,
    Edge,
    Vertex,
}

impl NodeClass {
    pub fn from_saturation(s: usize) -> Self {
        match s {
            0 => NodeClass::Interior,
            1 => NodeClass::Edge,
            _ => NodeClass::Vertex,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NodeClass::Interior => "interior",
            NodeClass::Edge => "edge",
            NodeClass::Vertex => "vertex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "interior" => Some(NodeClass::Interior),
            "edge" => Some(NodeClass::Edge),
            "vertex" => Some(NodeClass::Vertex),
            _ => None,
        }
    }
}

impl fmt::Display for NodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The label a case conventionally uses for an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    Cart([i64; 2]),
    Homo([i64; 3]),
}

/// One member of an index set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexPoint {
    /// Integer index `j` (node) or `k` (frequency) of the lattice pair.
    pub index: [i64; 2],
    pub label: Label,
    pub class: NodeClass,
}

impl IndexPoint {
    pub fn homo(&self) -> Option<[i64; 3]> {
        match self.label {
            Label::Homo(h) => Some(h),
            Label::Cart(_) => None,
        }
    }

    pub fn cart(&self) -> Option<[i64; 2]> {
        match self.label {
            Label::Cart(c) => Some(c),
            Label::Homo(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IndexSet {
    pub case: LatticeCase,
    pub variant: Variant,
    pub members: Vec<IndexPoint>,
}

impl IndexSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IndexPoint> {
        self.members.iter()
    }

    pub fn count_class(&self, class: NodeClass) -> usize {
        self.members.iter().filter(|m| m.class == class).count()
    }

    /// `c = 1 / #{members congruent to this one}`; all ones for half-open sets.
    pub fn starred_weights(&self) -> Vec<Rational> {
        let n = generator_n(&self.case);
        let keys: Vec<[i64; 2]> = self.members.iter().map(|m| congruence_key(&n, m.index, self.variant.is_dagger())).collect();
        let mut counts: HashMap<[i64; 2], i64> = HashMap::new();
        for k in &keys {
            *counts.entry(*k).or_default() += 1;
        }
        keys.iter().map(|k| Rational::new(1, counts[k] as i128)).collect()
    }

    pub fn position(&self, index: [i64; 2]) -> Option<usize> {
        self.members.iter().position(|m| m.index == index)
    }

    pub fn position_of_label(&self, label: &Label) -> Option<usize> {
        self.members.iter().position(|m| &m.label == label)
    }
}

fn generator_n(case: &LatticeCase) -> [[i64; 2]; 2] {
    Geometry::new(case).expect("built-in cases have integer N").gens.n
}

/// Class key of `j` modulo `N·Z²` (nodes) or `Nᵀ·Z²` (frequencies).
fn congruence_key(n: &[[i64; 2]; 2], j: [i64; 2], dagger: bool) -> [i64; 2] {
    let det = (n[0][0] * n[1][1] - n[0][1] * n[1][0]).abs();
    let adj = if dagger {
        [[n[1][1], -n[1][0]], [-n[0][1], n[0][0]]]
    } else {
        [[n[1][1], -n[0][1]], [-n[1][0], n[0][0]]]
    };
    [
        (adj[0][0] * j[0] + adj[0][1] * j[1]).rem_euclid(det),
        (adj[1][0] * j[0] + adj[1][1] * j[1]).rem_euclid(det),
    ]
}

/// Whether two node indices (or two frequencies when `dagger`) are congruent.
pub fn congruent(case: &LatticeCase, a: [i64; 2], b: [i64; 2], dagger: bool) -> bool {
    let n = generator_n(case);
    congruence_key(&n, a, dagger) == congruence_key(&n, b, dagger)
}

fn integer_box(domain: &Domain, to_index: &Mat2) -> ([i64; 2], [i64; 2]) {
    let m = to_index.to_f64();
    let mut lo = [i64::MAX; 2];
    let mut hi = [i64::MIN; 2];
    for v in domain.vertices_f64() {
        let w = [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]];
        for d in 0..2 {
            lo[d] = lo[d].min(w[d].floor() as i64 - 1);
            hi[d] = hi[d].max(w[d].ceil() as i64 + 1);
        }
    }
    (lo, hi)
}

fn scaled_integer(p: &Point, s: i64, homo: bool) -> Label {
    let r = |v: Rational| -> i64 {
        let w = v * q(s as i128);
        assert!(w.is_integer(), "label is not integral");
        *w.numer() as i64
    };
    if homo {
        let t = to_homogeneous_exact(p);
        Label::Homo(t.map(|c| r(c.as_rational().expect("hexagonal node is rational in homogeneous form"))))
    } else {
        Label::Cart(p.map(|c| r(c.as_rational().expect("node is rational"))))
    }
}

/// Label of a node index.
pub fn node_label(geo: &Geometry, j: [i64; 2]) -> Label {
    let n = geo.case.n as i64;
    match geo.case.tag {
        CaseTag::SquareRhombus => scaled_integer(&geo.node_point(j), 2 * n, false),
        CaseTag::HexHex | CaseTag::HexHexTranspose => scaled_integer(&geo.node_point(j), n, true),
        _ => Label::Cart(j),
    }
}

/// Label of a frequency index; hexagonal frequencies use `(k₁, k₂, −k₁−k₂)`.
pub fn frequency_label(case: &LatticeCase, k: [i64; 2]) -> Label {
    if case.tag.is_homogeneous() {
        Label::Homo([k[0], k[1], -k[0] - k[1]])
    } else {
        Label::Cart(k)
    }
}

/// `Λ_N`, `Λ_N†` and their closures by exact scan of a bounding box.
pub fn build_index_set(case: &LatticeCase, variant: Variant) -> Result<IndexSet> {
    let geo = Geometry::new(case)?;
    Ok(build_with(&geo, variant))
}

pub fn build_with(geo: &Geometry, variant: Variant) -> IndexSet {
    let (domain, to_point, to_index) = if variant.is_dagger() {
        (&geo.omega_b, geo.a_inv_t, geo.gens.a.transpose())
    } else {
        (&geo.omega_a, geo.b_inv_t, geo.gens.b.transpose())
    };
    let (lo, hi) = integer_box(domain, &to_index);
    let mut members = Vec::new();
    for i0 in lo[0]..=hi[0] {
        for i1 in lo[1]..=hi[1] {
            let idx = [i0, i1];
            let p = to_point.apply_int(idx);
            let inside = if variant.is_closed() { domain.contains_closed(&p) } else { domain.contains(&p) };
            if !inside {
                continue;
            }
            let class = if variant.is_closed() {
                NodeClass::from_saturation(domain.saturation(&p))
            } else {
                NodeClass::Interior
            };
            let label = if variant.is_dagger() { frequency_label(&geo.case, idx) } else { node_label(geo, idx) };
            members.push(IndexPoint { index: idx, label, class });
        }
    }
    IndexSet { case: geo.case, variant, members }
}

/// Recompute classes of a closed set from its defining inequalities.
pub fn classify_nodes(set: &IndexSet) -> Result<IndexSet> {
    let geo = Geometry::new(&set.case)?;
    let (domain, to_point) =
        if set.variant.is_dagger() { (&geo.omega_b, geo.a_inv_t) } else { (&geo.omega_a, geo.b_inv_t) };
    let members = set
        .members
        .iter()
        .map(|m| {
            let class = if set.variant.is_closed() {
                NodeClass::from_saturation(domain.saturation(&to_point.apply_int(m.index)))
            } else {
                NodeClass::Interior
            };
            IndexPoint { class, ..*m }
        })
        .collect();
    Ok(IndexSet { case: set.case, variant: set.variant, members })
}

/// Node point of an index as floats.
pub fn node_point_f64(geo: &Geometry, j: [i64; 2]) -> [f64; 2] {
    point_to_f64(&geo.node_point(j))
}

/// `k̂ = (k₃ − k₂, k₁ − k₃, k₂ − k₁)`.
pub fn hat_map(k: [i64; 3]) -> [i64; 3] {
    [k[2] - k[1], k[0] - k[2], k[1] - k[0]]
}

/// `a ≡ b (mod 3n)`: `(a − b)/n` is an integer point with all coordinates congruent mod 3.
pub fn congruent_mod_3n(a: [i64; 3], b: [i64; 3], n: i64) -> bool {
    let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    if d.iter().any(|v| v.rem_euclid(n) != 0) {
        return false;
    }
    let m = d.map(|v| v / n);
    (m[0] - m[1]).rem_euclid(3) == 0 && (m[1] - m[2]).rem_euclid(3) == 0
}

fn homo_scan(r: i64, keep: impl Fn([i64; 3]) -> bool) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            let t = [a, b, -a - b];
            if keep(t) {
                out.push(t);
            }
        }
    }
    out
}

fn within(v: &[i64], n: i64, closed: bool) -> bool {
    v.iter().all(|&x| -n <= x && (if closed { x <= n } else { x < n }))
}

/// `ℍ_n = {−n ≤ j₁, j₂, −j₃ < n}`, or its closure `ℍ_n*`.
pub fn hex_set(n: i64, closed: bool) -> Vec<[i64; 3]> {
    homo_scan(n, |t| within(&[t[0], t[1], -t[2]], n, closed))
}

/// `𝕂_n = ℍ_n ∩ {j ≡ 0 (mod 3)}`, or its closure `𝕂_n*`.
pub fn k_set(n: i64, closed: bool) -> Vec<[i64; 3]> {
    homo_scan(n, |t| within(&[t[0], t[1], -t[2]], n, closed) && (t[0] - t[1]).rem_euclid(3) == 0)
}

/// `𝕂_n† = {−n ≤ k₂ − k₁, k₁ − k₃, k₂ − k₃ < n}`, or its closure `𝕂_n†*`.
pub fn k_dagger_set(n: i64, closed: bool) -> Vec<[i64; 3]> {
    homo_scan(2 * n, |t| within(&[t[1] - t[0], t[0] - t[2], t[1] - t[2]], n, closed))
}

/// Number of bounds of `𝕂_n*` the point attains.
pub fn k_set_saturation(j: [i64; 3], n: i64) -> usize {
    [j[0], j[1], -j[2]].iter().filter(|v| v.abs() == n).count()
}

/// Number of bounds of `𝕂_n†*` the frequency attains.
pub fn k_dagger_saturation(k: [i64; 3], n: i64) -> usize {
    [k[1] - k[0], k[0] - k[2], k[1] - k[2]].iter().filter(|v| v.abs() == n).count()
}

/// `c_j^{(n)}` on the closed hexagon: 1, ½ or ⅓ by class.
pub fn hex_c_weight(j: [i64; 3], n: i64) -> Rational {
    match k_set_saturation(j, n) {
        0 => q(1),
        1 => Rational::new(1, 2),
        _ => Rational::new(1, 3),
    }
}

/// Index sets on the fundamental triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleSets {
    /// `Υ_n = {0 ≤ j₁, j₂, −j₃ ≤ n, j ≡ 0 (mod 3)}`.
    pub upsilon: Vec<[i64; 3]>,
    /// `Υ_n†`, the triangle part of `𝕂_n†*`.
    pub upsilon_dagger: Vec<[i64; 3]>,
    /// Equal-parity points of `[0, n]²`, the square–rhombus triangle set.
    pub xi: Vec<[i64; 2]>,
}

pub fn upsilon(n: i64) -> Vec<[i64; 3]> {
    triangle_points(n).into_iter().filter(|t| (t[0] - t[1]).rem_euclid(3) == 0).collect()
}

/// Interior of `Υ_n`.
pub fn upsilon_interior(n: i64) -> Vec<[i64; 3]> {
    upsilon(n).into_iter().filter(|t| t[0] > 0 && t[1] > 0 && -t[2] < n).collect()
}

pub fn upsilon_dagger(n: i64) -> Vec<[i64; 3]> {
    triangle_points(n)
        .into_iter()
        .filter(|t| 2 * t[0] + t[1] <= n && t[0] + 2 * t[1] <= n)
        .collect()
}

/// `{0 ≤ j₁, j₂, −j₃ ≤ n}`: all lattice points of `nΔ`.
pub fn triangle_points(n: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=(n - a) {
            out.push([a, b, -a - b]);
        }
    }
    out
}

pub fn xi(n: i64) -> Vec<[i64; 2]> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            if (a - b).rem_euclid(2) == 0 {
                out.push([a, b]);
            }
        }
    }
    out
}

pub fn triangle_index_sets(n: i64) -> TriangleSets {
    TriangleSets { upsilon: upsilon(n), upsilon_dagger: upsilon_dagger(n), xi: xi(n) }
}

/// Saturation of a triangle point against `0 ≤ j₁, j₂, −j₃ ≤ n`.
pub fn triangle_saturation(j: [i64; 3], n: i64) -> usize {
    (j[0] == 0) as usize + (j[1] == 0) as usize + (-j[2] == n) as usize
}

/// Floating point homogeneous coordinates `j/d`.
pub fn homo_over(j: [i64; 3], d: i64) -> [f64; 3] {
    j.map(|v| v as f64 / d as f64)
}

/// Exact `j/d` as a rational triple.
pub fn homo_over_exact(j: [i64; 3], d: i64) -> [Rational; 3] {
    j.map(|v| Rational::new(v as i128, d as i128))
}

pub fn rational_triple_to_f64(t: &[Rational; 3]) -> [f64; 3] {
    t.map(|v| rational_to_f64(&v))
}
