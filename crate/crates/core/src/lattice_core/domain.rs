//! Convex polygons described by slabs `lo ≤ a·x < hi`.

use super::mat2::{dot, point_to_f64, Mat2, Point};
use super::qsqrt3::{QSqrt3, Rational};

/// One slab `lo ≤ a·x < hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub a: Point,
    pub lo: QSqrt3,
    pub hi: QSqrt3,
}

impl Constraint {
    pub fn new(a: Point, lo: QSqrt3, hi: QSqrt3) -> Self {
        Constraint { a, lo, hi }
    }

    fn a_f64(&self) -> [f64; 2] {
        point_to_f64(&self.a)
    }
}

/// Where a point sits relative to a slab.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Below,
    OnLower,
    Inside,
    OnUpper,
    Above,
}

/// Intersection of slabs. Lower faces belong to the domain, upper faces do not.
#[derive(Clone, Debug, PartialEq)]
pub struct Domain {
    pub constraints: Vec<Constraint>,
}

impl Domain {
    pub fn new(constraints: Vec<Constraint>) -> Self {
        Domain { constraints }
    }

    /// The same slab functionals with bounds `[-r, r)`.
    pub fn symmetric(functionals: &[Point], r: QSqrt3) -> Self {
        Domain::new(functionals.iter().map(|a| Constraint::new(*a, -r, r)).collect())
    }

    fn side_exact(c: &Constraint, p: &Point) -> Side {
        let v = dot(&c.a, p);
        Self::classify(v.cmp(&c.lo), v.cmp(&c.hi))
    }

    fn classify(lo: std::cmp::Ordering, hi: std::cmp::Ordering) -> Side {
        use std::cmp::Ordering::*;
        match (lo, hi) {
            (Less, _) => Side::Below,
            (Equal, _) => Side::OnLower,
            (_, Less) => Side::Inside,
            (_, Equal) => Side::OnUpper,
            _ => Side::Above,
        }
    }

    /// Decide in floating point when the margin is comfortable, exactly otherwise.
    fn side(c: &Constraint, p: &Point, pf: [f64; 2]) -> Side {
        const MARGIN: f64 = 1e-9;
        let a = c.a_f64();
        let v = a[0] * pf[0] + a[1] * pf[1];
        let (lo, hi) = (c.lo.to_f64(), c.hi.to_f64());
        let scale = 1.0 + v.abs();
        if v < lo - MARGIN * scale {
            Side::Below
        } else if v > hi + MARGIN * scale {
            Side::Above
        } else if v > lo + MARGIN * scale && v < hi - MARGIN * scale {
            Side::Inside
        } else {
            Self::side_exact(c, p)
        }
    }

    /// Half-open membership.
    pub fn contains(&self, p: &Point) -> bool {
        let pf = point_to_f64(p);
        self.constraints
            .iter()
            .all(|c| matches!(Self::side(c, p, pf), Side::OnLower | Side::Inside))
    }

    /// Membership in the closure.
    pub fn contains_closed(&self, p: &Point) -> bool {
        let pf = point_to_f64(p);
        self.constraints
            .iter()
            .all(|c| !matches!(Self::side(c, p, pf), Side::Below | Side::Above))
    }

    /// Floating-point half-open membership, for points that are not exact.
    pub fn contains_f64(&self, p: [f64; 2]) -> bool {
        self.constraints.iter().all(|c| {
            let a = c.a_f64();
            let v = a[0] * p[0] + a[1] * p[1];
            v >= c.lo.to_f64() && v < c.hi.to_f64()
        })
    }

    /// Number of slab faces the point lies on; zero for interior points.
    pub fn saturation(&self, p: &Point) -> usize {
        self.constraints
            .iter()
            .filter(|c| matches!(Self::side_exact(c, p), Side::OnLower | Side::OnUpper))
            .count()
    }

    /// `{ s·x : x ∈ self }` for `s > 0`.
    pub fn scaled(&self, s: Rational) -> Self {
        let s = QSqrt3::from_rational(s);
        Domain::new(
            self.constraints
                .iter()
                .map(|c| Constraint::new(c.a, c.lo * s, c.hi * s))
                .collect(),
        )
    }

    /// `{ M·x : x ∈ self }`.
    pub fn image(&self, m: &Mat2) -> Self {
        let minv_t = m.inverse().expect("singular map").transpose();
        Domain::new(
            self.constraints
                .iter()
                .map(|c| Constraint::new(minv_t.apply(&c.a), c.lo, c.hi))
                .collect(),
        )
    }

    /// Exact vertices of the closure in counter-clockwise order.
    pub fn vertices(&self) -> Vec<Point> {
        let mut out: Vec<Point> = Vec::new();
        let cs = &self.constraints;
        for i in 0..cs.len() {
            for j in (i + 1)..cs.len() {
                let m = Mat2::new([cs[i].a, cs[j].a]);
                let Some(inv) = m.inverse() else { continue };
                for bi in [cs[i].lo, cs[i].hi] {
                    for bj in [cs[j].lo, cs[j].hi] {
                        let v = inv.apply(&[bi, bj]);
                        if self.contains_closed(&v) && !out.contains(&v) {
                            out.push(v);
                        }
                    }
                }
            }
        }
        let pts: Vec<[f64; 2]> = out.iter().map(point_to_f64).collect();
        let n = pts.len() as f64;
        let cx = pts.iter().map(|p| p[0]).sum::<f64>() / n;
        let cy = pts.iter().map(|p| p[1]).sum::<f64>() / n;
        let mut idx: Vec<usize> = (0..out.len()).collect();
        idx.sort_by(|&a, &b| {
            let ta = (pts[a][1] - cy).atan2(pts[a][0] - cx);
            let tb = (pts[b][1] - cy).atan2(pts[b][0] - cx);
            ta.total_cmp(&tb)
        });
        idx.into_iter().map(|i| out[i]).collect()
    }

    pub fn vertices_f64(&self) -> Vec<[f64; 2]> {
        self.vertices().iter().map(point_to_f64).collect()
    }

    pub fn area(&self) -> f64 {
        polygon_area(&self.vertices_f64())
    }

    /// Axis-aligned bounding box of the closure as `(min, max)`.
    pub fn bounding_box(&self) -> ([f64; 2], [f64; 2]) {
        let v = self.vertices_f64();
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in v {
            for d in 0..2 {
                lo[d] = lo[d].min(p[d]);
                hi[d] = hi[d].max(p[d]);
            }
        }
        (lo, hi)
    }
}

/// Shoelace area of a simple polygon given in order.
pub fn polygon_area(v: &[[f64; 2]]) -> f64 {
    let n = v.len();
    let mut s = 0.0;
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        s += a[0] * b[1] - a[1] * b[0];
    }
    s.abs() / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_core::mat2::int_point;
    use crate::lattice_core::qsqrt3::qf;

    fn unit_square() -> Domain {
        Domain::symmetric(&[int_point(1, 0), int_point(0, 1)], QSqrt3::from_rational(qf(1, 2)))
    }

    #[test]
    fn half_open_faces() {
        let d = unit_square();
        let h = QSqrt3::from_rational(qf(1, 2));
        assert!(d.contains(&[-h, -h]));
        assert!(!d.contains(&[h, QSqrt3::zero()]));
        assert!(d.contains_closed(&[h, h]));
        assert_eq!(d.saturation(&[h, h]), 2);
        assert_eq!(d.saturation(&[h, QSqrt3::zero()]), 1);
    }

    #[test]
    fn vertices_and_area() {
        let d = unit_square();
        assert_eq!(d.vertices().len(), 4);
        assert!((d.area() - 1.0).abs() < 1e-15);
        let rhombus = Domain::symmetric(&[int_point(1, 1), int_point(-1, 1)], QSqrt3::one());
        assert!((rhombus.area() - 2.0).abs() < 1e-15);
        let sheared = unit_square().image(&Mat2::from_ints([[1, 1], [0, 1]]));
        assert!((sheared.area() - 1.0).abs() < 1e-15);
    }
}
