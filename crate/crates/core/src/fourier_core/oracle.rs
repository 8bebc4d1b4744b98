//! High-order integration over convex polygons.
//!
//! Triangles are mapped onto the unit square by the collapsed (Duffy) map and integrated with a
//! tensor Gauss–Legendre rule whose order follows the oscillation of the integrand.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::complex::Complex64;

use crate::error::{Error, Result};

/// Gauss–Legendre nodes and weights on `[0, 1]`.
pub fn gauss_legendre(m: usize) -> Arc<(Vec<f64>, Vec<f64>)> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<(Vec<f64>, Vec<f64>)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().unwrap().get(&m) {
        return r.clone();
    }
    let r = Arc::new(compute_gauss_legendre(m));
    cache.lock().unwrap().insert(m, r.clone());
    r
}

fn compute_gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; m];
    let mut w = vec![0.0; m];
    let mf = m as f64;
    for i in 0..(m + 1) / 2 {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (mf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=m {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = mf * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let wt = 2.0 / ((1.0 - z * z) * dp * dp);
        // Map from [-1, 1] to [0, 1].
        x[i] = (1.0 - z) / 2.0;
        x[m - 1 - i] = (1.0 + z) / 2.0;
        w[i] = wt / 2.0;
        w[m - 1 - i] = wt / 2.0;
    }
    (x, w)
}

pub type Triangle = [[f64; 2]; 3];

fn diameter(t: &Triangle) -> f64 {
    let d = |a: [f64; 2], b: [f64; 2]| ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt();
    d(t[0], t[1]).max(d(t[1], t[2])).max(d(t[0], t[2]))
}

fn signed_area(t: &Triangle) -> f64 {
    ((t[1][0] - t[0][0]) * (t[2][1] - t[0][1]) - (t[2][0] - t[0][0]) * (t[1][1] - t[0][1])) / 2.0
}

fn midpoint(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0]
}

fn split4(t: &Triangle) -> [Triangle; 4] {
    let (a, b, c) = (t[0], t[1], t[2]);
    let (ab, bc, ca) = (midpoint(a, b), midpoint(b, c), midpoint(c, a));
    [[a, ab, ca], [ab, b, bc], [ca, bc, c], [ab, bc, ca]]
}

/// Largest `bandwidth·diameter` a single tensor rule is asked to resolve.
const MAX_PHASE_SPAN: f64 = 48.0;

fn rule_order(bandwidth: f64, diam: f64) -> usize {
    12 + (0.75 * bandwidth * diam).ceil() as usize
}

/// Order of the comparison rule used for the accuracy check.
fn check_order(m: usize) -> usize {
    m + (m / 3).max(8)
}

fn tensor_triangle<F: Fn([f64; 2]) -> Complex64 + ?Sized>(t: &Triangle, f: &F, m: usize) -> Complex64 {
    let gl = gauss_legendre(m);
    let (x, w) = (&gl.0, &gl.1);
    let jac = 2.0 * signed_area(t).abs();
    let e1 = [t[1][0] - t[0][0], t[1][1] - t[0][1]];
    let e2 = [t[2][0] - t[1][0], t[2][1] - t[1][1]];
    let mut s = Complex64::new(0.0, 0.0);
    for (u, wu) in x.iter().zip(w) {
        let mut inner = Complex64::new(0.0, 0.0);
        for (v, wv) in x.iter().zip(w) {
            let p = [t[0][0] + u * (e1[0] + v * e2[0]), t[0][1] + u * (e1[1] + v * e2[1])];
            inner += f(p) * wv;
        }
        s += inner * (wu * u);
    }
    s * jac
}

/// Returns the base-order value and the value at the higher check order.
fn adaptive_triangle<F: Fn([f64; 2]) -> Complex64 + ?Sized>(
    t: &Triangle,
    f: &F,
    bandwidth: f64,
) -> (Complex64, Complex64) {
    let d = diameter(t);
    if bandwidth * d > MAX_PHASE_SPAN {
        return split4(t)
            .iter()
            .map(|c| adaptive_triangle(c, f, bandwidth))
            .fold((Complex64::default(), Complex64::default()), |a, b| (a.0 + b.0, a.1 + b.1));
    }
    let m = rule_order(bandwidth, d);
    (tensor_triangle(t, f, m), tensor_triangle(t, f, check_order(m)))
}

/// Fan triangulation of a convex polygon given in order.
pub fn fan(vertices: &[[f64; 2]]) -> Vec<Triangle> {
    (1..vertices.len().saturating_sub(1)).map(|i| [vertices[0], vertices[i], vertices[i + 1]]).collect()
}

/// `∫_P f` over a convex polygon, where `bandwidth` bounds the angular frequency of `f`.
///
/// The value is recomputed with a higher-order rule; a change above `1e-12·(1 + |I|)` is an error.
pub fn integrate_polygon<F>(vertices: &[[f64; 2]], f: &F, bandwidth: f64) -> Result<Complex64>
where
    F: Fn([f64; 2]) -> Complex64 + Sync + ?Sized,
{
    let (mut coarse, mut fine) = (Complex64::default(), Complex64::default());
    for t in fan(vertices) {
        let (c, h) = adaptive_triangle(&t, f, bandwidth);
        coarse += c;
        fine += h;
    }
    let delta = (coarse - fine).norm();
    if delta > 1e-12 * (1.0 + fine.norm()) {
        return Err(Error::OracleAccuracy { delta });
    }
    Ok(fine)
}

/// `(1/|P|) ∫_P f`.
pub fn polygon_mean<F>(vertices: &[[f64; 2]], f: &F, bandwidth: f64) -> Result<Complex64>
where
    F: Fn([f64; 2]) -> Complex64 + Sync + ?Sized,
{
    let area: f64 = fan(vertices).iter().map(signed_area).sum::<f64>().abs();
    Ok(integrate_polygon(vertices, f, bandwidth)? / area)
}

/// Real-valued convenience wrapper around [`integrate_polygon`].
pub fn integrate_polygon_real<F>(vertices: &[[f64; 2]], f: &F, bandwidth: f64) -> Result<f64>
where
    F: Fn([f64; 2]) -> f64 + Sync + ?Sized,
{
    Ok(integrate_polygon(vertices, &|p| Complex64::new(f(p), 0.0), bandwidth)?.re)
}
