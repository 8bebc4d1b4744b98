//! Interpolants checked against dense collocation solves.

use lattika::fourier_core::phi;
use lattika::index_sets::homo_over;
use lattika::interpolation::{triangle_space, GenericInterpolator, TriangleFlavor, TriangleInterpolator};
use lattika::lattice_core::{CaseTag, LatticeCase};
use lattika::num::complex::Complex64;
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_samples(rng: &mut ChaCha8Rng, len: usize) -> DVector<Complex64> {
    DVector::from_fn(len, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

#[test]
fn generic_coefficients_solve_the_collocation_system() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for tag in CaseTag::ALL {
        let Ok(ip) = GenericInterpolator::new(&LatticeCase::new(tag, 2)) else { continue };
        let geo = &ip.inner.geo;
        let points = ip.node_points();
        let freqs: Vec<[i64; 2]> = ip.freqs.iter().map(|k| k.index).collect();
        assert_eq!(points.len(), freqs.len(), "{tag}");
        let v = DMatrix::from_fn(points.len(), freqs.len(), |r, c| phi(geo, freqs[c], points[r]));
        let s = random_samples(&mut rng, points.len());
        let solved = v.clone().lu().solve(&s).expect("collocation matrix is invertible");
        let poly = ip.interpolate(s.as_slice()).unwrap();
        for (k, c) in &poly.terms {
            let i = freqs.iter().position(|f| f == k).unwrap();
            assert!((solved[i] - c).norm() < 1e-10, "{tag} k={k:?}");
        }
        let scaled = v.adjoint() * &v / Complex64::from(points.len() as f64);
        assert!((scaled - DMatrix::identity(freqs.len(), freqs.len())).norm() < 1e-10, "{tag}");
    }
}

#[test]
fn triangle_interpolants_match_dense_solve() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for flavor in [TriangleFlavor::Sine, TriangleFlavor::Cosine] {
        for n in 2..=7u32 {
            let ip = TriangleInterpolator::new(flavor, n);
            let groups = triangle_space(flavor, n as i64);
            let basis = |g: &[[i64; 3]], t: [f64; 3]| g.iter().map(|k| ip.basis(*k, t)).sum::<Complex64>();
            let nodes = ip.nodes.clone();
            if nodes.is_empty() {
                continue;
            }
            assert_eq!(nodes.len(), groups.len(), "{flavor:?} n={n}");
            let m = DMatrix::from_fn(nodes.len(), groups.len(), |r, c| basis(&groups[c], homo_over(nodes[r], n as i64)));
            let s = random_samples(&mut rng, nodes.len());
            let c = m.lu().solve(&s).expect("unisolvent");
            for _ in 0..20 {
                let (a, b) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let t = [a, b, -a - b];
                let dense: Complex64 = groups.iter().zip(c.iter()).map(|(g, ci)| ci * basis(g, t)).sum();
                let fast = ip.eval(s.as_slice(), t).unwrap();
                assert!((dense - fast).norm() < 1e-9, "{flavor:?} n={n}: {dense} vs {fast}");
            }
        }
    }
}
