//! Generalized cosines and sines on the equilateral triangle, the Steiner map and generalized
//! Chebyshev polynomials.

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier_core::{phi_homo, polygon_mean};

/// One of the six elements of `𝒜₂`: `tσ = sign · (t_{p₀}, t_{p₁}, t_{p₂})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElementA2 {
    pub perm: [usize; 3],
    pub sign: i8,
}

pub const A2: [GroupElementA2; 6] = [
    GroupElementA2 { perm: [0, 1, 2], sign: 1 },
    GroupElementA2 { perm: [1, 2, 0], sign: 1 },
    GroupElementA2 { perm: [2, 0, 1], sign: 1 },
    GroupElementA2 { perm: [0, 2, 1], sign: -1 },
    GroupElementA2 { perm: [2, 1, 0], sign: -1 },
    GroupElementA2 { perm: [1, 0, 2], sign: -1 },
];

impl GroupElementA2 {
    pub fn act(&self, t: [f64; 3]) -> [f64; 3] {
        let s = self.sign as f64;
        [s * t[self.perm[0]], s * t[self.perm[1]], s * t[self.perm[2]]]
    }

    pub fn act_int(&self, k: [i64; 3]) -> [i64; 3] {
        let s = self.sign as i64;
        [s * k[self.perm[0]], s * k[self.perm[1]], s * k[self.perm[2]]]
    }

    /// `(self ∘ other)`: apply `other` first.
    pub fn compose(&self, other: &GroupElementA2) -> GroupElementA2 {
        let p = [other.perm[self.perm[0]], other.perm[self.perm[1]], other.perm[self.perm[2]]];
        GroupElementA2 { perm: p, sign: self.sign * other.sign }
    }
}

/// Distinct images of `k` under `𝒜₂`.
pub fn orbit(k: [i64; 3]) -> Vec<[i64; 3]> {
    let mut out: Vec<[i64; 3]> = Vec::with_capacity(6);
    for g in A2 {
        let v = g.act_int(k);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// `k₁ ≥ 0, k₂ ≥ 0, k₃ ≤ 0`.
pub fn in_cone(k: [i64; 3]) -> bool {
    k[0] + k[1] + k[2] == 0 && k[0] >= 0 && k[1] >= 0
}

pub fn in_cone_interior(k: [i64; 3]) -> bool {
    k[0] + k[1] + k[2] == 0 && k[0] > 0 && k[1] > 0
}

fn three_terms(k: [i64; 3], t: [f64; 3], trig: fn(f64) -> f64) -> Complex64 {
    use std::f64::consts::PI;
    let e = |a: f64, b: f64| Complex64::from_polar(1.0, PI / 3.0 * (k[1] - k[2]) as f64 * (a - b));
    let k1 = k[0] as f64;
    (e(t[1], t[2]) * trig(k1 * PI * t[0]) + e(t[2], t[0]) * trig(k1 * PI * t[1]) + e(t[0], t[1]) * trig(k1 * PI * t[2]))
        / 3.0
}

/// `TC_k(t)` without the cone check.
pub fn tc_raw(k: [i64; 3], t: [f64; 3]) -> Complex64 {
    three_terms(k, t, f64::cos)
}

/// `TS_k(t)` without the cone check.
pub fn ts_raw(k: [i64; 3], t: [f64; 3]) -> Complex64 {
    three_terms(k, t, f64::sin)
}

/// Generalized cosine, `𝒜₂`-invariant.
pub fn tc(k: [i64; 3], t: [f64; 3]) -> Result<Complex64> {
    if !in_cone(k) {
        return Err(Error::IndexOutsideCone(k));
    }
    Ok(tc_raw(k, t))
}

/// Generalized sine, `𝒜₂`-anti-invariant.
pub fn ts(k: [i64; 3], t: [f64; 3]) -> Result<Complex64> {
    if !in_cone_interior(k) {
        return Err(Error::IndexOutsideCone(k));
    }
    Ok(ts_raw(k, t))
}

/// `𝒫⁺f(t) = Σ_σ f(tσ)` or `𝒫⁻f(t) = Σ_σ sign(σ) f(tσ)`.
pub fn project_pm<F>(f: F, sign: i8) -> impl Fn([f64; 3]) -> Complex64
where
    F: Fn([f64; 3]) -> Complex64,
{
    move |t| {
        A2.iter()
            .map(|g| {
                let v = f(g.act(t));
                if sign < 0 && g.sign < 0 {
                    -v
                } else {
                    v
                }
            })
            .sum()
    }
}

/// `𝒫⁺φ_k = P_PLUS · TC_k` and `𝒫⁻φ_k = P_MINUS · TS_k`.
pub const P_PLUS: Complex64 = Complex64::new(6.0, 0.0);
pub const P_MINUS: Complex64 = Complex64::new(0.0, 6.0);

/// `(x, y)` with `x + iy = TC_{0,1,−1}(t)`.
pub fn steiner_map(t: [f64; 3]) -> [f64; 2] {
    let p = std::f64::consts::FRAC_PI_3;
    let (a, b, c) = (p * (t[1] - t[0]), p * (t[2] - t[1]), p * (t[0] - t[2]));
    [4.0 / 3.0 * a.cos() * b.cos() * c.cos() - 1.0 / 3.0, 4.0 / 3.0 * a.sin() * b.sin() * c.sin()]
}

/// `−3(x² + y² + 1)² + 8(x³ − 3xy²) + 4`, positive inside the hypocycloid.
pub fn bracket(x: f64, y: f64) -> f64 {
    let r = x * x + y * y + 1.0;
    -3.0 * r * r + 8.0 * (x * x * x - 3.0 * x * y * y) + 4.0
}

/// `w_α(x, y) = (4/27)^α π^{4α} bracket^α`.
pub fn w_alpha(x: f64, y: f64, alpha: f64) -> Result<f64> {
    let b = bracket(x, y);
    if b < 0.0 && alpha.fract() != 0.0 {
        return Err(Error::NegativeBracket(b));
    }
    if b <= 0.0 && alpha < 0.0 {
        return Err(Error::NegativeBracket(b));
    }
    let c = (4.0 / 27.0f64).powf(alpha) * std::f64::consts::PI.powf(4.0 * alpha);
    Ok(c * b.powf(alpha))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebKind {
    First,
    Second,
}

/// `t̂ = (t₃ − t₂, t₁ − t₃, t₂ − t₁)`.
pub fn hat_t(t: [f64; 3]) -> [f64; 3] {
    [t[2] - t[1], t[0] - t[2], t[1] - t[0]]
}

/// Complete homogeneous symmetric polynomials `h_0..=h_r` in three variables.
fn complete_homogeneous(z: [Complex64; 3], r: usize) -> Vec<Complex64> {
    // h_r(z₁,z₂,z₃) built one variable at a time: h^{(i)}_r = Σ_{a≤r} z_i^a h^{(i−1)}_{r−a}.
    let mut h = vec![Complex64::new(0.0, 0.0); r + 1];
    h[0] = Complex64::new(1.0, 0.0);
    for zi in z {
        for d in 1..=r {
            let prev = h[d - 1];
            h[d] += zi * prev;
        }
    }
    h
}

/// `U_k^m` as the Schur polynomial `s_{(m, m−k)}` at `z_j = e^{2πi t̂_j/3}`.
fn u_schur(k: usize, m: usize, t: [f64; 3]) -> Complex64 {
    let th = hat_t(t);
    let z = th.map(|v| Complex64::from_polar(1.0, std::f64::consts::TAU * v / 3.0));
    let h = complete_homogeneous(z, m + 1);
    let (l1, l2) = (m, m - k);
    let below = if l2 == 0 { Complex64::new(0.0, 0.0) } else { h[l2 - 1] };
    h[l1] * h[l2] - h[l1 + 1] * below
}

/// `TS_{k+1, m−k+1, −m−2} / TS_{1,1,−2}`, with a Richardson-extrapolated limit near zeros of the
/// denominator.
pub fn u_quotient(k: usize, m: usize, t: [f64; 3]) -> Complex64 {
    let (k, m) = (k as i64, m as i64);
    let num = [k + 1, m - k + 1, -m - 2];
    let q = |t: [f64; 3]| ts_raw(num, t) / ts_raw([1, 1, -2], t);
    if ts_raw([1, 1, -2], t).norm() > 1e-8 {
        return q(t);
    }
    let dir = [0.6180339887, -0.2360679775, -0.3819660112];
    let at = |h: f64| {
        let p = [t[0] + h * dir[0], t[1] + h * dir[1], t[2] + h * dir[2]];
        let m = [t[0] - h * dir[0], t[1] - h * dir[1], t[2] - h * dir[2]];
        (q(p) + q(m)) / 2.0
    };
    let h = 1e-3;
    (at(h) * 4.0 - at(2.0 * h)) / 3.0
}

/// `T_k^m = TC_{k, m−k, −m}` or `U_k^m`, for `0 ≤ k ≤ m`.
pub fn generalized_chebyshev(kind: ChebKind, k: usize, m: usize, t: [f64; 3]) -> Complex64 {
    assert!(k <= m, "generalized Chebyshev index needs k ≤ m");
    match kind {
        ChebKind::First => tc_raw([k as i64, (m - k) as i64, -(m as i64)], t),
        ChebKind::Second => u_schur(k, m, t),
    }
}

/// The fundamental triangle `Δ = {0 ≤ t₁, t₂, −t₃ ≤ 1}` in the `(t₁, t₂)` chart.
pub const DELTA_CHART: [[f64; 2]; 3] = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];

pub fn chart_to_homo(p: [f64; 2]) -> [f64; 3] {
    [p[0], p[1], -p[0] - p[1]]
}

/// Mean of `f` over `Δ`; `bandwidth` bounds the angular frequency in the chart.
pub fn mean_over_delta<F>(f: &F, bandwidth: f64) -> Result<Complex64>
where
    F: Fn([f64; 3]) -> Complex64 + Sync,
{
    polygon_mean(&DELTA_CHART, &|p| f(chart_to_homo(p)), bandwidth)
}

/// Angular bandwidth of `φ_k` in the `(t₁, t₂)` chart.
pub fn chart_bandwidth(k: [i64; 3]) -> f64 {
    let a = (k[0] - k[2]) as f64;
    let b = (k[1] - k[2]) as f64;
    std::f64::consts::TAU / 3.0 * a.hypot(b)
}

/// Boundary of the hypocycloid region, the image of `∂Δ`, sampled at `samples` points.
pub fn hypocycloid_outline(samples: usize) -> Vec<[f64; 2]> {
    let per = samples.div_ceil(3);
    let corners = [[0.0, 0.0, 0.0], [1.0, 0.0, -1.0], [0.0, 1.0, -1.0]];
    let mut out = Vec::with_capacity(3 * per);
    for e in 0..3 {
        let (a, b) = (corners[e], corners[(e + 1) % 3]);
        for i in 0..per {
            let s = i as f64 / per as f64;
            out.push(steiner_map([a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1]), a[2] + s * (b[2] - a[2])]));
        }
    }
    out.truncate(samples);
    out
}

/// `φ_k` projected by `𝒫⁺`, used as an independent route to `TC`.
pub fn tc_by_projection(k: [i64; 3], t: [f64; 3]) -> Complex64 {
    project_pm(|s| phi_homo(k, s), 1)(t) / P_PLUS
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_t(rng: &mut ChaCha8Rng) -> [f64; 3] {
        let (a, b) = (rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        [a, b, -a - b]
    }

    fn random_delta(rng: &mut ChaCha8Rng) -> [f64; 3] {
        loop {
            let (a, b): (f64, f64) = (rng.gen(), rng.gen());
            if a + b < 1.0 {
                return [a, b, -a - b];
            }
        }
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn group_is_closed() {
        for a in A2 {
            for b in A2 {
                assert!(A2.contains(&a.compose(&b)));
            }
        }
        let t = [0.1, 0.7, -0.8];
        for a in A2 {
            for b in A2 {
                let lhs = a.compose(&b).act(t);
                let rhs = b.act(a.act(t));
                let direct = a.act(b.act(t));
                assert!(lhs == rhs || lhs == direct);
            }
        }
    }

    #[test]
    fn tc_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let t = random_t(&mut rng);
            assert!(close(tc([0, 0, 0], t).unwrap(), Complex64::new(1.0, 0.0), 1e-15));
        }
        for k in [[2, 1, -3], [0, 4, -4], [5, 0, -5]] {
            assert!(close(tc(k, [0.0; 3]).unwrap(), Complex64::new(1.0, 0.0), 1e-15));
        }
        let v = tc([0, 1, -1], [0.5, 0.5, -1.0]).unwrap();
        assert!(close(v, Complex64::new(-1.0 / 3.0, 0.0), 1e-15));
        assert_eq!(tc([-1, 2, -1], [0.0; 3]), Err(Error::IndexOutsideCone([-1, 2, -1])));
    }

    #[test]
    fn ts_examples() {
        assert!(ts([2, 1, -3], [0.0; 3]).unwrap().norm() < 1e-15);
        assert!(ts([2, 1, -3], [0.0, 0.4, -0.4]).unwrap().norm() < 1e-15);
        assert!(ts([1, 1, -2], [1.0 / 3.0, 1.0 / 3.0, -2.0 / 3.0]).unwrap().norm() > 0.1);
        assert!(ts([0, 1, -1], [0.1, 0.1, -0.2]).is_err());
    }

    #[test]
    fn projection_constants() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let t = random_t(&mut rng);
            let k = [rng.gen_range(0..6), rng.gen_range(0..6), 0];
            let k = [k[0], k[1], -k[0] - k[1]];
            let plus = project_pm(|s| phi_homo(k, s), 1)(t);
            assert!(close(plus, P_PLUS * tc_raw(k, t), 1e-12));
            let minus = project_pm(|s| phi_homo(k, s), -1)(t);
            assert!(close(minus, P_MINUS * ts_raw(k, t), 1e-12));
        }
        let t = [0.2, 0.3, -0.5];
        assert!(project_pm(|_| Complex64::new(2.5, 0.0), -1)(t).norm() < 1e-15);
        let f = |s: [f64; 3]| phi_homo([2, -1, -1], s) * s[0];
        let once = project_pm(f, 1);
        let twice = project_pm(&once, 1)(t);
        assert!(close(twice, once(t) * 6.0, 1e-12));
    }

    #[test]
    fn symmetry_under_a2() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let t = random_t(&mut rng);
            let a = rng.gen_range(1..8);
            let b = rng.gen_range(1..8);
            let k = [a, b, -a - b];
            for g in A2 {
                assert!(close(tc_raw(k, g.act(t)), tc_raw(k, t), 1e-12));
                assert!(close(ts_raw(k, g.act(t)), ts_raw(k, t) * g.sign as f64, 1e-12));
            }
        }
    }

    #[test]
    fn steiner_examples() {
        let close2 = |a: [f64; 2], b: [f64; 2]| (a[0] - b[0]).abs() < 1e-15 && (a[1] - b[1]).abs() < 1e-15;
        assert!(close2(steiner_map([0.0, 0.0, 0.0]), [1.0, 0.0]));
        assert!(close2(steiner_map([1.0, 1.0, -2.0]), [1.0, 0.0]));
        assert!(close2(steiner_map([0.5, 0.5, -1.0]), [-1.0 / 3.0, 0.0]));
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..100 {
            let t = random_delta(&mut rng);
            let xy = steiner_map(t);
            let z = tc_raw([0, 1, -1], t);
            assert!((z.re - xy[0]).abs() < 1e-14 && (z.im - xy[1]).abs() < 1e-14);
        }
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(1.0, 0.0), 0.0);
        assert_eq!(bracket(0.0, 0.0), 1.0);
        assert!(w_alpha(2.0, 0.0, -0.5).is_err());
        assert!((w_alpha(0.0, 0.0, 1.0).unwrap() - 4.0 / 27.0 * std::f64::consts::PI.powi(4)).abs() < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10_000 {
            let t = random_delta(&mut rng);
            let [x, y] = steiner_map(t);
            assert!(bracket(x, y) >= -1e-12);
        }
        for _ in 0..100 {
            let t = random_delta(&mut rng);
            if t[0] > 1e-3 && t[1] > 1e-3 && -t[2] < 1.0 - 1e-3 {
                let [x, y] = steiner_map(t);
                assert!(bracket(x, y) > 0.0);
            }
        }
    }

    #[test]
    fn chebyshev_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let t = random_t(&mut rng);
            assert!(close(generalized_chebyshev(ChebKind::First, 0, 0, t), Complex64::new(1.0, 0.0), 1e-15));
            assert!(close(generalized_chebyshev(ChebKind::Second, 0, 0, t), Complex64::new(1.0, 0.0), 1e-15));
            let [x, y] = steiner_map(t);
            assert!(close(generalized_chebyshev(ChebKind::First, 0, 1, t), Complex64::new(x, y), 1e-14));
        }
    }

    #[test]
    fn schur_form_matches_quotient() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let t = random_delta(&mut rng);
            for m in 0..7 {
                for k in 0..=m {
                    let a = generalized_chebyshev(ChebKind::Second, k, m, t);
                    let b = u_quotient(k, m, t);
                    assert!(close(a, b, 1e-9 * (1.0 + a.norm())), "k={k} m={m}");
                }
            }
        }
        // On a wall and at a corner the quotient needs its limit.
        for t in [[0.0, 0.3, -0.3], [0.0, 0.0, 0.0], [1.0 / 3.0, 1.0 / 3.0, -2.0 / 3.0]] {
            for m in 0..5 {
                for k in 0..=m {
                    let a = generalized_chebyshev(ChebKind::Second, k, m, t);
                    assert!(close(a, u_quotient(k, m, t), 1e-6 * (1.0 + a.norm())), "k={k} m={m} t={t:?}");
                }
            }
        }
    }

    #[test]
    fn tc_orthogonal_over_triangle() {
        let ks: Vec<[i64; 3]> = crate::index_sets::triangle_points(3);
        for a in &ks {
            for b in &ks {
                let band = chart_bandwidth(*a) + chart_bandwidth(*b);
                let v = mean_over_delta(&|t| tc_raw(*a, t) * tc_raw(*b, t).conj(), band).unwrap();
                if a != b {
                    assert!(v.norm() < 1e-10, "{a:?} {b:?} {v}");
                } else {
                    assert!(v.re > 0.1);
                }
            }
        }
    }

    #[test]
    fn tc_by_projection_agrees() {
        let t = [0.21, -0.4, 0.19];
        for k in [[0, 0, 0], [3, 1, -4], [2, 2, -4]] {
            assert!(close(tc_by_projection(k, t), tc_raw(k, t), 1e-13));
        }
    }

    #[test]
    fn outline_lies_on_zero_bracket() {
        let pts = hypocycloid_outline(720);
        assert_eq!(pts.len(), 720);
        for p in pts {
            assert!(bracket(p[0], p[1]).abs() < 1e-12);
        }
    }
}
