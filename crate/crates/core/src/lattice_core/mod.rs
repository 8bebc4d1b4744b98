//! Generator matrices, fundamental domains, homogeneous coordinates and lattice reduction.

mod domain;
mod mat2;
mod qsqrt3;

pub use domain::{polygon_area, Constraint, Domain};
pub use mat2::{apply_f64, dot, int_point, point, point_add, point_sub, point_to_f64, Mat2, Point};
pub use qsqrt3::{format_rational, parse_rational, q, qf, rational_to_f64, QSqrt3, Rational};

use std::fmt;
use std::str::FromStr;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The eight built-in lattice pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    SquareSquare,
    SquareRhombus,
    RhombicSquare,
    RhombicRhombic,
    HexHex,
    HexHexTranspose,
    HexH1,
    HexH2,
}

impl CaseTag {
    pub const ALL: [CaseTag; 8] = [
        CaseTag::SquareSquare,
        CaseTag::SquareRhombus,
        CaseTag::RhombicSquare,
        CaseTag::RhombicRhombic,
        CaseTag::HexHex,
        CaseTag::HexHexTranspose,
        CaseTag::HexH1,
        CaseTag::HexH2,
    ];

    /// Cases whose natural coordinates are homogeneous (regular hexagon).
    pub fn is_homogeneous(self) -> bool {
        matches!(self, CaseTag::HexHex | CaseTag::HexHexTranspose)
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::SquareSquare => "SquareSquare",
            CaseTag::SquareRhombus => "SquareRhombus",
            CaseTag::RhombicSquare => "RhombicSquare",
            CaseTag::RhombicRhombic => "RhombicRhombic",
            CaseTag::HexHex => "HexHex",
            CaseTag::HexHexTranspose => "HexHexTranspose",
            CaseTag::HexH1 => "HexH1",
            CaseTag::HexH2 => "HexH2",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CaseTag::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

/// A lattice pair at scale `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeCase {
    pub tag: CaseTag,
    pub n: u32,
}

impl LatticeCase {
    pub fn new(tag: CaseTag, n: u32) -> Self {
        assert!(n >= 1, "lattice scale must be positive");
        LatticeCase { tag, n }
    }
}

impl fmt::Display for LatticeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.tag, self.n)
    }
}

/// `A`, `B` and the integer matrix `N = BᵀA`.
#[derive(Clone, Debug, PartialEq)]
pub struct Generators {
    pub a: Mat2,
    pub b: Mat2,
    pub n: [[i64; 2]; 2],
}

impl Generators {
    pub fn det_n(&self) -> i64 {
        let n = &self.n;
        n[0][0] * n[1][1] - n[0][1] * n[1][0]
    }
}

fn qs(r: Rational) -> QSqrt3 {
    QSqrt3::from_rational(r)
}

fn rhombus_matrix() -> Mat2 {
    Mat2::from_ints([[1, 1], [-1, 1]])
}

/// The regular hexagon generator `H = [[√3, 0], [−1, 2]]`.
pub fn hex_matrix() -> Mat2 {
    Mat2::new([
        [QSqrt3::sqrt3(), QSqrt3::zero()],
        [QSqrt3::from_int(-1), QSqrt3::from_int(2)],
    ])
}

pub fn h1_matrix() -> Mat2 {
    Mat2::from_ints([[1, 1], [-2, 1]])
}

pub fn h2_matrix() -> Mat2 {
    Mat2::from_ints([[1, 2], [-1, 1]])
}

pub fn generator_matrices(case: &LatticeCase) -> Result<Generators> {
    let n = case.n as i128;
    let (a, b) = match case.tag {
        CaseTag::SquareSquare => (Mat2::identity(), Mat2::identity().scale_rational(q(2 * n))),
        CaseTag::SquareRhombus => (Mat2::identity(), rhombus_matrix().scale_rational(q(n))),
        CaseTag::RhombicSquare => (rhombus_matrix(), Mat2::identity().scale_rational(q(n))),
        CaseTag::RhombicRhombic => (rhombus_matrix(), rhombus_matrix().scale_rational(qf(n, 2))),
        CaseTag::HexHex => (hex_matrix(), hex_matrix().scale_rational(qf(n, 2))),
        CaseTag::HexHexTranspose => {
            let h = hex_matrix();
            let b = h.inverse().expect("H is invertible").transpose().scale_rational(q(n));
            (h, b)
        }
        CaseTag::HexH1 => (h1_matrix(), Mat2::identity().scale_rational(q(n))),
        CaseTag::HexH2 => (h2_matrix(), Mat2::identity().scale_rational(q(n))),
    };
    let nm = b.transpose().mul(&a);
    let n_int = nm.integer_entries().ok_or_else(|| Error::NonIntegerN(case.to_string()))?;
    Ok(Generators { a, b, n: n_int })
}

fn half() -> QSqrt3 {
    qs(qf(1, 2))
}

/// Rows of `E`, oriented so that the hexagon reads `−1 ≤ t₁, t₂, −t₃ < 1`.
fn hex_functionals() -> [Point; 3] {
    let s = QSqrt3::sqrt3() * half();
    [[s, -half()], [QSqrt3::zero(), QSqrt3::one()], [s, half()]]
}

fn square_functionals() -> [Point; 2] {
    [int_point(1, 0), int_point(0, 1)]
}

/// `x₂ + x₁` and `x₂ − x₁`.
fn rhombus_functionals() -> [Point; 2] {
    [int_point(1, 1), int_point(-1, 1)]
}

/// `2y₁ − y₂`, `2y₂ − y₁`, `y₁ + y₂`: the hexagon pulled back to the integer lattice.
fn reference_hexagon() -> Domain {
    Domain::symmetric(&[int_point(2, -1), int_point(-1, 2), int_point(1, 1)], QSqrt3::one())
}

/// Regular hexagon `Ω`, in Cartesian form.
pub fn hexagon() -> Domain {
    Domain::symmetric(&hex_functionals(), QSqrt3::one())
}

/// Rhombus `Ω_R = {−1 ≤ x₂ ± x₁ < 1}`.
pub fn rhombus() -> Domain {
    Domain::symmetric(&rhombus_functionals(), QSqrt3::one())
}

/// `[−½, ½)²`.
pub fn unit_square() -> Domain {
    Domain::symmetric(&square_functionals(), half())
}

/// Fundamental domain of the `A` lattice.
pub fn omega_a(case: &LatticeCase) -> Domain {
    match case.tag {
        CaseTag::SquareSquare | CaseTag::SquareRhombus => unit_square(),
        CaseTag::RhombicSquare | CaseTag::RhombicRhombic => rhombus(),
        CaseTag::HexHex | CaseTag::HexHexTranspose => hexagon(),
        CaseTag::HexH1 => reference_hexagon().image(&h1_matrix()),
        CaseTag::HexH2 => reference_hexagon().image(&h2_matrix()),
    }
}

/// Fundamental domain of the `B` lattice.
pub fn omega_b(case: &LatticeCase) -> Domain {
    let n = case.n as i128;
    match case.tag {
        CaseTag::SquareSquare => Domain::symmetric(&square_functionals(), QSqrt3::from_int(n)),
        CaseTag::SquareRhombus => Domain::symmetric(&rhombus_functionals(), QSqrt3::from_int(n)),
        CaseTag::RhombicSquare | CaseTag::HexH1 | CaseTag::HexH2 => {
            Domain::symmetric(&square_functionals(), qs(qf(n, 2)))
        }
        CaseTag::RhombicRhombic => Domain::symmetric(&rhombus_functionals(), qs(qf(n, 2))),
        CaseTag::HexHex => Domain::symmetric(&hex_functionals(), qs(qf(n, 2))),
        CaseTag::HexHexTranspose => {
            // x₁ and (√3/2)x₂ ± x₁/2, each in [−n/(2√3), n/(2√3)).
            let s = QSqrt3::sqrt3() * half();
            let f = [int_point(1, 0), [half(), s], [-half(), s]];
            Domain::symmetric(&f, QSqrt3::sqrt3() * qs(qf(n, 6)))
        }
    }
}

/// Generators, their inverse transposes and both fundamental domains, computed once.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub case: LatticeCase,
    pub gens: Generators,
    /// `B⁻ᵀ`: node index to node point.
    pub b_inv_t: Mat2,
    /// `A⁻ᵀ`: frequency index to dual point.
    pub a_inv_t: Mat2,
    pub omega_a: Domain,
    pub omega_b: Domain,
    pub b_inv_t_f64: [[f64; 2]; 2],
    pub a_inv_t_f64: [[f64; 2]; 2],
}

impl Geometry {
    pub fn new(case: &LatticeCase) -> Result<Self> {
        let gens = generator_matrices(case)?;
        let b_inv_t = gens.b.inverse().expect("B is invertible").transpose();
        let a_inv_t = gens.a.inverse().expect("A is invertible").transpose();
        Ok(Geometry {
            case: *case,
            gens,
            b_inv_t,
            a_inv_t,
            omega_a: omega_a(case),
            omega_b: omega_b(case),
            b_inv_t_f64: b_inv_t.to_f64(),
            a_inv_t_f64: a_inv_t.to_f64(),
        })
    }

    /// `B⁻ᵀj`.
    pub fn node_point(&self, j: [i64; 2]) -> Point {
        self.b_inv_t.apply_int(j)
    }

    /// `A⁻ᵀk`.
    pub fn dual_point(&self, k: [i64; 2]) -> Point {
        self.a_inv_t.apply_int(k)
    }

    pub fn dual_point_f64(&self, k: [i64; 2]) -> [f64; 2] {
        apply_f64(&self.a_inv_t_f64, [k[0] as f64, k[1] as f64])
    }

    pub fn node_point_f64(&self, j: [i64; 2]) -> [f64; 2] {
        apply_f64(&self.b_inv_t_f64, [j[0] as f64, j[1] as f64])
    }

    /// Exact phase `kᵀN⁻¹j` of `φ_k` at the node with index `j`.
    pub fn phase(&self, k: [i64; 2], j: [i64; 2]) -> Rational {
        let n = &self.gens.n;
        let det = n[0][0] * n[1][1] - n[0][1] * n[1][0];
        let adj_j = [n[1][1] * j[0] - n[0][1] * j[1], -n[1][0] * j[0] + n[0][0] * j[1]];
        qf((k[0] * adj_j[0] + k[1] * adj_j[1]) as i128, det as i128)
    }
}

/// Half-open membership in `Ω_A`.
pub fn domain_contains(case: &LatticeCase, p: &Point) -> bool {
    omega_a(case).contains(p)
}

/// Half-open membership of a homogeneous point in the regular hexagon.
pub fn hexagon_contains(t: &HomoPoint<Rational>) -> bool {
    hexagon().contains(&t.to_cartesian_exact())
}

/// A point on the plane `t₁ + t₂ + t₃ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomoPoint<T = f64> {
    pub t: [T; 3],
}

impl HomoPoint<f64> {
    pub fn new(t1: f64, t2: f64, t3: f64) -> Self {
        HomoPoint { t: [t1, t2, t3] }
    }

    /// Completes `t₃ = −t₁ − t₂`.
    pub fn from_pair(t1: f64, t2: f64) -> Self {
        HomoPoint::new(t1, t2, -t1 - t2)
    }

    pub fn is_consistent(&self) -> bool {
        let m = self.t.iter().fold(0f64, |a, v| a.max(v.abs()));
        (self.t[0] + self.t[1] + self.t[2]).abs() <= 1e-14 * m.max(1.0)
    }

    pub fn to_cartesian(&self) -> [f64; 2] {
        [(self.t[0] - self.t[2]) / 3f64.sqrt(), self.t[1]]
    }

    pub fn sub(&self, o: &HomoPoint) -> HomoPoint {
        HomoPoint::new(self.t[0] - o.t[0], self.t[1] - o.t[1], self.t[2] - o.t[2])
    }

    pub fn add(&self, o: &HomoPoint) -> HomoPoint {
        HomoPoint::new(self.t[0] + o.t[0], self.t[1] + o.t[1], self.t[2] + o.t[2])
    }
}

impl HomoPoint<Rational> {
    pub fn exact(t1: Rational, t2: Rational, t3: Rational) -> Self {
        debug_assert!((t1 + t2 + t3).is_zero());
        HomoPoint { t: [t1, t2, t3] }
    }

    /// `j / d` for an integer homogeneous index.
    pub fn from_index(j: [i64; 3], d: i64) -> Self {
        HomoPoint::exact(qf(j[0] as i128, d as i128), qf(j[1] as i128, d as i128), qf(j[2] as i128, d as i128))
    }

    pub fn to_f64(&self) -> HomoPoint<f64> {
        HomoPoint::new(rational_to_f64(&self.t[0]), rational_to_f64(&self.t[1]), rational_to_f64(&self.t[2]))
    }

    /// `x₁ = (t₁ − t₃)/√3`, `x₂ = t₂`.
    pub fn to_cartesian_exact(&self) -> Point {
        let x1 = QSqrt3::new(Rational::zero(), (self.t[0] - self.t[2]) / q(3));
        [x1, qs(self.t[1])]
    }

    /// Inverse of [`Self::to_cartesian_exact`]; `None` when a coordinate is irrational.
    pub fn from_cartesian_exact(p: &Point) -> Option<Self> {
        let t = to_homogeneous_exact(p);
        Some(HomoPoint::exact(t[0].as_rational()?, t[1].as_rational()?, t[2].as_rational()?))
    }
}

/// `t = E·x`.
pub fn to_homogeneous(x: [f64; 2]) -> HomoPoint {
    let s = 3f64.sqrt() / 2.0;
    HomoPoint::new(s * x[0] - 0.5 * x[1], x[1], -s * x[0] - 0.5 * x[1])
}

pub fn to_homogeneous_exact(p: &Point) -> [QSqrt3; 3] {
    let f = hex_functionals();
    [dot(&f[0], p), dot(&f[1], p), -dot(&f[2], p)]
}

const REDUCTION_RADIUS: i64 = 4;

fn lattice_offsets(radius: i64) -> impl Iterator<Item = [i64; 2]> {
    (0..=radius).flat_map(move |r| {
        (-r..=r).flat_map(move |a| (-r..=r).map(move |b| [a, b])).filter(move |k| k[0].abs().max(k[1].abs()) == r)
    })
}

fn round_coords(a_inv: &[[f64; 2]; 2], p: [f64; 2]) -> [i64; 2] {
    let c = apply_f64(a_inv, p);
    [c[0].round() as i64, c[1].round() as i64]
}

/// Translate `p` by the lattice `L` into the half-open domain `omega`.
pub fn reduce_into(omega: &Domain, l: &Mat2, p: &Point) -> Result<Point> {
    let l_inv = l.inverse().expect("lattice generator is singular").to_f64();
    let k0 = round_coords(&l_inv, point_to_f64(p));
    for off in lattice_offsets(REDUCTION_RADIUS) {
        let k = [k0[0] + off[0], k0[1] + off[1]];
        let cand = point_sub(p, &l.apply_int(k));
        if omega.contains(&cand) {
            return Ok(cand);
        }
    }
    Err(Error::NoReduction { radius: REDUCTION_RADIUS })
}

/// Representative of `p` modulo `A·Z²` inside `Ω_A`.
pub fn reduce_mod_lattice(case: &LatticeCase, p: &Point) -> Result<Point> {
    let g = generator_matrices(case)?;
    reduce_into(&omega_a(case), &g.a, p)
}

/// Reduction of a rational homogeneous point into the hexagon, modulo `t ≡ s (mod 3)`.
pub fn reduce_homogeneous(t: &HomoPoint<Rational>) -> Result<HomoPoint<Rational>> {
    let x = reduce_into(&hexagon(), &hex_matrix(), &t.to_cartesian_exact())?;
    Ok(HomoPoint::from_cartesian_exact(&x).expect("translates of rational points stay rational"))
}

/// Floating-point reduction for sampled points; ties on faces are resolved in floating point.
pub fn reduce_f64(case: &LatticeCase, p: [f64; 2]) -> Result<[f64; 2]> {
    let g = generator_matrices(case)?;
    let a = g.a.to_f64();
    let a_inv = g.a.inverse().expect("generator is invertible").to_f64();
    let omega = omega_a(case);
    let k0 = round_coords(&a_inv, p);
    for off in lattice_offsets(REDUCTION_RADIUS) {
        let k = [(k0[0] + off[0]) as f64, (k0[1] + off[1]) as f64];
        let shift = apply_f64(&a, k);
        let cand = [p[0] - shift[0], p[1] - shift[1]];
        if omega.contains_f64(cand) {
            return Ok(cand);
        }
    }
    Err(Error::NoReduction { radius: REDUCTION_RADIUS })
}

/// `t ≡ s (mod 3)`: all coordinate differences are congruent mod 3.
pub fn congruent_mod3(t: &[i64; 3], s: &[i64; 3]) -> bool {
    let d = [t[0] - s[0], t[1] - s[1], t[2] - s[2]];
    (d[0] - d[1]).rem_euclid(3) == 0 && (d[1] - d[2]).rem_euclid(3) == 0
}

/// Outcome of a tiling check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TilingReport {
    pub samples: usize,
    pub uncovered: usize,
    pub overcovered: usize,
    pub max_cover_deviation: usize,
}

/// Count, for random exact sample points, how many translates `x − L·k` land in `omega`.
pub fn tiling_deviation(omega: &Domain, l: &Mat2, sample_count: usize, seed: u64) -> TilingReport {
    const DEN: i128 = 1024;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = omega.bounding_box();
    let span = [hi[0] - lo[0], hi[1] - lo[1]];
    let l_inv = l.inverse().expect("lattice generator is singular").to_f64();
    let mut report = TilingReport { samples: sample_count, uncovered: 0, overcovered: 0, max_cover_deviation: 0 };
    for _ in 0..sample_count {
        let mut p = [QSqrt3::zero(); 2];
        for d in 0..2 {
            let a = (lo[d] - span[d]) * DEN as f64;
            let b = (hi[d] + span[d]) * DEN as f64;
            let v = rng.gen_range(a.floor() as i128..=b.ceil() as i128);
            p[d] = qs(qf(v, DEN));
        }
        let k0 = round_coords(&l_inv, point_to_f64(&p));
        let count = lattice_offsets(REDUCTION_RADIUS)
            .filter(|off| {
                let k = [k0[0] + off[0], k0[1] + off[1]];
                omega.contains(&point_sub(&p, &l.apply_int(k)))
            })
            .count();
        match count {
            0 => report.uncovered += 1,
            1 => {}
            _ => report.overcovered += 1,
        }
        report.max_cover_deviation = report.max_cover_deviation.max(count.abs_diff(1));
    }
    report
}

/// Tiling check of both `Ω_A` by `A·Z²` and `Ω_B` by `B·Z²`.
pub fn verify_tiling(case: &LatticeCase, sample_count: usize, seed: u64) -> Result<TilingReport> {
    let g = generator_matrices(case)?;
    let ra = tiling_deviation(&omega_a(case), &g.a, sample_count, seed);
    let rb = tiling_deviation(&omega_b(case), &g.b, sample_count, seed.wrapping_add(1));
    Ok(TilingReport {
        samples: ra.samples + rb.samples,
        uncovered: ra.uncovered + rb.uncovered,
        overcovered: ra.overcovered + rb.overcovered,
        max_cover_deviation: ra.max_cover_deviation.max(rb.max_cover_deviation),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat_point(a: i128, b: i128, d: i128) -> Point {
        [qs(qf(a, d)), qs(qf(b, d))]
    }

    #[test]
    fn documented_generators() {
        for n in 1..=4u32 {
            let ni = n as i64;
            let ss = generator_matrices(&LatticeCase::new(CaseTag::SquareSquare, n)).unwrap();
            assert_eq!(ss.n, [[2 * ni, 0], [0, 2 * ni]]);
            assert_eq!(ss.det_n(), 4 * ni * ni);
            let hht = generator_matrices(&LatticeCase::new(CaseTag::HexHexTranspose, n)).unwrap();
            assert_eq!(hht.n, [[ni, 0], [0, ni]]);
            let hh = generator_matrices(&LatticeCase::new(CaseTag::HexHex, n)).unwrap();
            assert_eq!(hh.n, [[2 * ni, -ni], [-ni, 2 * ni]]);
            assert_eq!(hh.det_n(), 3 * ni * ni);
        }
    }

    #[test]
    fn homogeneous_examples() {
        let t = to_homogeneous([0.0, 0.0]);
        assert_eq!(t.t, [0.0, 0.0, 0.0]);
        let t = to_homogeneous([2.0 / 3f64.sqrt(), 0.0]);
        for (a, b) in t.t.iter().zip([1.0, 0.0, -1.0]) {
            assert!((a - b).abs() < 1e-15);
        }
        let t = to_homogeneous([0.0, 1.0]);
        assert_eq!(t.t, [-0.5, 1.0, -0.5]);
        let exact = HomoPoint::exact(q(1), q(0), q(-1));
        assert_eq!(HomoPoint::from_cartesian_exact(&exact.to_cartesian_exact()).unwrap(), exact);
    }

    #[test]
    fn membership_examples() {
        let hh = LatticeCase::new(CaseTag::HexHex, 1);
        let origin = HomoPoint::exact(q(0), q(0), q(0));
        assert!(domain_contains(&hh, &origin.to_cartesian_exact()));
        assert!(hexagon_contains(&HomoPoint::exact(q(-1), q(0), q(1))));
        assert!(!hexagon_contains(&HomoPoint::exact(q(1), q(0), q(-1))));
        let ss = LatticeCase::new(CaseTag::SquareSquare, 1);
        assert!(!domain_contains(&ss, &rat_point(1, 0, 2)));
        assert!(domain_contains(&ss, &rat_point(-1, 0, 2)));
    }

    #[test]
    fn reduction_examples() {
        let ss = LatticeCase::new(CaseTag::SquareSquare, 1);
        assert_eq!(reduce_mod_lattice(&ss, &rat_point(7, -6, 10)).unwrap(), rat_point(-3, 4, 10));
        let r = reduce_homogeneous(&HomoPoint::exact(q(1), q(0), q(-1))).unwrap();
        assert_eq!(r, HomoPoint::exact(q(0), q(-1), q(1)));
    }

    #[test]
    fn tiling_of_every_case() {
        for tag in CaseTag::ALL {
            for n in [1u32, 2, 3] {
                let r = verify_tiling(&LatticeCase::new(tag, n), 500, 7).unwrap();
                assert_eq!(r.max_cover_deviation, 0, "{tag} n={n}: {r:?}");
            }
        }
    }

    #[test]
    fn shrunken_domain_leaves_gaps() {
        let case = LatticeCase::new(CaseTag::HexHex, 1);
        let g = generator_matrices(&case).unwrap();
        let r = tiling_deviation(&omega_a(&case).scaled(qf(9, 10)), &g.a, 2000, 3);
        assert_eq!(r.max_cover_deviation, 1);
        assert!(r.uncovered > 0 && r.overcovered == 0);
    }

    #[test]
    fn domain_areas_match_determinants() {
        for tag in CaseTag::ALL {
            let case = LatticeCase::new(tag, 2);
            let g = generator_matrices(&case).unwrap();
            assert!((omega_a(&case).area() - g.a.det().to_f64().abs()).abs() < 1e-12, "{tag}");
            assert!((omega_b(&case).area() - g.b.det().to_f64().abs()).abs() < 1e-12, "{tag}");
        }
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent_and_exact(a in -4000i128..4000, b in -4000i128..4000, t in 0usize..8, n in 1u32..5) {
            let case = LatticeCase::new(CaseTag::ALL[t], n);
            let g = generator_matrices(&case).unwrap();
            let p = rat_point(a, b, 512);
            let r = reduce_mod_lattice(&case, &p).unwrap();
            prop_assert!(domain_contains(&case, &r));
            prop_assert_eq!(reduce_mod_lattice(&case, &r).unwrap(), r);
            let k = g.a.inverse().unwrap().apply(&point_sub(&p, &r));
            for c in k {
                let v = c.as_rational().expect("lattice coordinates are rational");
                prop_assert!(v.is_integer());
            }
        }
    }
}
