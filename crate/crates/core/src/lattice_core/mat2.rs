use super::qsqrt3::{QSqrt3, Rational};

/// A point with exact coordinates in Q(√3).
pub type Point = [QSqrt3; 2];

pub fn point(x1: QSqrt3, x2: QSqrt3) -> Point {
    [x1, x2]
}

pub fn int_point(x1: i64, x2: i64) -> Point {
    [QSqrt3::from_int(x1 as i128), QSqrt3::from_int(x2 as i128)]
}

pub fn point_to_f64(p: &Point) -> [f64; 2] {
    [p[0].to_f64(), p[1].to_f64()]
}

pub fn point_sub(a: &Point, b: &Point) -> Point {
    [a[0] - b[0], a[1] - b[1]]
}

pub fn point_add(a: &Point, b: &Point) -> Point {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn dot(a: &Point, b: &Point) -> QSqrt3 {
    a[0] * b[0] + a[1] * b[1]
}

/// 2×2 matrix over Q(√3), row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub m: [[QSqrt3; 2]; 2],
}

impl Mat2 {
    pub fn new(m: [[QSqrt3; 2]; 2]) -> Self {
        Mat2 { m }
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Self {
        Mat2::new(m.map(|row| row.map(|v| QSqrt3::from_int(v as i128))))
    }

    pub fn identity() -> Self {
        Mat2::from_ints([[1, 0], [0, 1]])
    }

    pub fn scale(&self, s: QSqrt3) -> Self {
        Mat2::new(self.m.map(|row| row.map(|v| v * s)))
    }

    pub fn scale_rational(&self, s: Rational) -> Self {
        self.scale(QSqrt3::from_rational(s))
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Mat2::new([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    pub fn mul(&self, o: &Mat2) -> Self {
        let (a, b) = (&self.m, &o.m);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Mat2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn det(&self) -> QSqrt3 {
        let m = &self.m;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det().recip()?;
        let m = &self.m;
        Some(Mat2::new([[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]]))
    }

    pub fn apply(&self, v: &Point) -> Point {
        let m = &self.m;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    pub fn apply_int(&self, v: [i64; 2]) -> Point {
        self.apply(&int_point(v[0], v[1]))
    }

    pub fn to_f64(&self) -> [[f64; 2]; 2] {
        self.m.map(|row| row.map(|v| v.to_f64()))
    }

    /// The entries as integers, when all of them are.
    pub fn integer_entries(&self) -> Option<[[i64; 2]; 2]> {
        let mut out = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let r = self.m[i][j].as_rational()?;
                if !r.is_integer() {
                    return None;
                }
                out[i][j] = i64::try_from(r.to_integer()).ok()?;
            }
        }
        Some(out)
    }
}

pub fn apply_f64(m: &[[f64; 2]; 2], v: [f64; 2]) -> [f64; 2] {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_core::qsqrt3::q;

    #[test]
    fn inverse_and_transpose() {
        let h = Mat2::new([
            [QSqrt3::sqrt3(), QSqrt3::zero()],
            [QSqrt3::from_int(-1), QSqrt3::from_int(2)],
        ]);
        assert_eq!(h.det(), QSqrt3::sqrt3() * QSqrt3::from_int(2));
        assert_eq!(h.mul(&h.inverse().unwrap()), Mat2::identity());
        assert_eq!(h.transpose().transpose(), h);
        let singular = Mat2::from_ints([[1, 2], [2, 4]]);
        assert!(singular.inverse().is_none());
        assert_eq!(Mat2::from_ints([[2, -1], [-1, 2]]).det(), QSqrt3::from_rational(q(3)));
    }
}
