use num::complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::index_sets::{congruent_mod_3n, homo_over, k_dagger_set, k_set};
use crate::fourier_core::phi_homo;
use crate::lattice_core::{rational_to_f64, CaseTag, Geometry};
use crate::triangle_trig::{tc_raw, A2};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn random_t(rng: &mut ChaCha8Rng) -> [f64; 3] {
    let a = rng.gen_range(-1.0..1.0);
    let b = rng.gen_range(-1.0..1.0);
    [a, b, -a - b]
}

fn generic_cases(max_n: u32) -> Vec<GenericInterpolator> {
    let mut out = Vec::new();
    for tag in CaseTag::ALL {
        for n in 1..=max_n {
            if let Ok(ip) = GenericInterpolator::new(&LatticeCase::new(tag, n)) {
                out.push(ip);
            }
        }
    }
    out
}

#[test]
fn flavor_names_round_trip() {
    for f in Flavor::ALL {
        assert_eq!(Flavor::parse(f.name()).unwrap(), f);
    }
    assert!(matches!(Flavor::parse("spline"), Err(Error::UnknownTag(_))));
}

#[test]
fn generic_reproduces_constants() {
    for ip in generic_cases(4) {
        let p = ip.interpolate(&vec![c(1.0); ip.node_count()]).unwrap();
        for x in [[0.1, 0.2], [-0.3, 0.05], [0.0, 0.0]] {
            assert!((p.eval(&ip.inner.geo, x) - 1.0).norm() < 1e-11, "{}", ip.inner.geo.case);
        }
    }
}

#[test]
fn generic_is_nodal_delta() {
    for ip in generic_cases(5) {
        let pts = ip.node_points();
        for i in 0..ip.node_count() {
            let mut s = vec![c(0.0); ip.node_count()];
            s[i] = c(1.0);
            let p = ip.interpolate(&s).unwrap().compile(&ip.inner.geo);
            for (m, x) in pts.iter().enumerate() {
                let want = if m == i { 1.0 } else { 0.0 };
                assert!((p.eval(*x) - want).norm() < 1e-11, "{} node {i} at {m}", ip.inner.geo.case);
            }
        }
    }
}

#[test]
fn generic_recovers_basis_functions() {
    for ip in generic_cases(3) {
        let geo = &ip.inner.geo;
        for k in ip.freqs.iter().take(6) {
            let s: Vec<Complex64> = ip.node_points().iter().map(|x| phi(geo, k.index, *x)).collect();
            let p = ip.interpolate(&s).unwrap();
            for (idx, coef) in &p.terms {
                let want = if *idx == k.index { 1.0 } else { 0.0 };
                assert!((coef - want).norm() < 1e-11);
            }
        }
    }
}

#[test]
fn generic_kernel_sum_matches_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for ip in generic_cases(3) {
        let s: Vec<Complex64> =
            (0..ip.node_count()).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let p = ip.interpolate(&s).unwrap();
        let x = [rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5)];
        let a = p.eval(&ip.inner.geo, x);
        let b = ip.eval_kernel_sum(&s, x).unwrap();
        assert!((a - b).norm() < 1e-10);
    }
}

#[test]
fn generic_rejects_wrong_sample_count() {
    let ip = GenericInterpolator::new(&LatticeCase::new(CaseTag::SquareSquare, 2)).unwrap();
    let err = ip.interpolate(&[c(1.0)]).unwrap_err();
    assert!(matches!(err, Error::SampleCountMismatch { got: 1, .. }));
    assert!(interp_generic(&LatticeCase::new(CaseTag::SquareSquare, 2), &[]).is_err());
}

#[test]
fn kernel_is_one_at_origin() {
    for n in 1..=9 {
        assert!((phi_n_direct(n, [0.0; 3]) - 1.0).norm() < 1e-12);
    }
}

#[test]
fn kernel_at_nodes_detects_congruence() {
    for n in [3u32, 4, 6] {
        let m = n as i64;
        let nodes = k_set(m, true);
        for j in &nodes {
            for k in &nodes {
                let v = phi_n_direct(n, [0, 1, 2].map(|i| (k[i] - j[i]) as f64 / n as f64));
                let want = if congruent_mod_3n(*k, *j, m) { 1.0 } else { 0.0 };
                assert!((v - want).norm() < 1e-11, "n={n} j={j:?} k={k:?}");
            }
        }
    }
}

#[test]
fn compact_kernel_matches_direct_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [3u32, 6, 9] {
        let direct = StarKernel::new(n, KernelMethod::DirectSum).unwrap();
        let compact = StarKernel::new(n, KernelMethod::Compact).unwrap();
        for _ in 0..1000 {
            let t = random_t(&mut rng);
            let d = direct.direct(t);
            assert!(d.im.abs() < 1e-12);
            assert!((compact.eval(t) - d.re).abs() < 1e-9, "n={n} t={t:?}");
        }
    }
}

#[test]
fn compact_kernel_on_singular_lines() {
    for n in [3u32, 6] {
        for t in [[0.0, 0.25, -0.25], [1.0, -0.5, -0.5], [0.3, -0.3, 0.0], [0.0, 0.0, 0.0]] {
            let a = phi_n_compact(n, t).unwrap();
            assert!((a - phi_n_direct(n, t).re).abs() < 1e-12);
        }
    }
}

#[test]
fn compact_kernel_needs_multiple_of_three() {
    assert!(matches!(phi_n_compact(4, [0.1, 0.2, -0.3]), Err(Error::NotMultipleOf3(4))));
    assert!(StarredHexInterpolator::with_method(5, KernelMethod::Compact).is_err());
}

#[test]
fn theta_at_origin() {
    for n in 1..=7u32 {
        let v = dirichlet_theta(n, [0.0; 3]);
        assert!((v - k_dagger_set(n as i64, true).len() as f64).norm() < 1e-9);
        if n % 3 == 0 {
            assert!((v - (n * n + n + 1) as f64).norm() < 1e-9);
        }
    }
}

#[test]
fn kernel_is_mean_of_consecutive_dirichlet_kernels() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 2..=9u32 {
        for _ in 0..10 {
            let t = random_t(&mut rng);
            let m = n as i64;
            let mut want = 0.5 * (dirichlet_theta(n, t) + dirichlet_theta(n - 1, t));
            if n % 3 == 0 {
                want -= tc_raw([m / 3, m / 3, -2 * m / 3], t);
            }
            assert!((phi_n_direct(n, t) * (n * n) as f64 - want).norm() < 1e-9, "n={n}");
        }
    }
}

#[test]
fn theta_is_real_and_even() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let t = random_t(&mut rng);
        let v = dirichlet_theta(5, t);
        assert!(v.im.abs() < 1e-10);
        assert!((v - dirichlet_theta(5, t.map(|x| -x))).norm() < 1e-10);
    }
}

#[test]
fn theta_classes_partition_the_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in [2u32, 3, 5] {
        for _ in 0..20 {
            let t = random_t(&mut rng);
            let s: Complex64 = theta_classes(n, t).iter().sum();
            assert!((s - dirichlet_theta(n, t)).norm() < 1e-9);
        }
    }
}

#[test]
fn starred_hex_interpolates_with_boundary_aliases() {
    for n in [3u32, 4, 6] {
        let ip = StarredHexInterpolator::new(n);
        let pts = ip.node_points();
        for i in 0..ip.nodes.len() {
            let mut s = vec![c(0.0); ip.nodes.len()];
            s[i] = c(1.0);
            for (m, p) in pts.iter().enumerate() {
                let v = ip.eval(&s, *p).unwrap();
                let want = if ip.class_of[m] == ip.class_of[i] { 1.0 } else { 0.0 };
                assert!((v - want).norm() < 1e-10, "n={n} i={i} m={m}");
            }
        }
    }
}

#[test]
fn starred_hex_classes() {
    let ip = StarredHexInterpolator::new(3);
    for i in 0..ip.nodes.len() {
        let size = ip.aliases(i).len();
        if ip.is_boundary(i) {
            assert!(size == 2 || size == 3, "{:?}", ip.nodes[i]);
        } else {
            assert_eq!(size, 1);
        }
    }
    assert_eq!(ip.classes.len(), 9);
}

#[test]
fn starred_hex_reproduces_periodic_data() {
    let n = 6u32;
    let ip = StarredHexInterpolator::new(n);
    let k = [2i64, -1, -1];
    // Each alias class contributes its summed samples, so periodic data is spread evenly over it.
    let s: Vec<Complex64> =
        ip.node_points().iter().enumerate().map(|(i, t)| phi_homo(k, *t) / ip.aliases(i).len() as f64).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..20 {
        let t = random_t(&mut rng);
        assert!((ip.eval(&s, t).unwrap() - phi_homo(k, t)).norm() < 1e-10);
    }
}

#[test]
fn lambda_hat_table() {
    let n = 6;
    let table = [
        ([0, 0, 0], 1.0),
        ([1, 1, -2], 6.0),
        ([2, 1, -3], 6.0),
        ([2, 2, -4], 2.0),
        ([3, 0, -3], 1.5),
        ([0, 3, -3], 1.5),
        ([1, 0, -1], 3.0),
    ];
    for (k, want) in table {
        assert_eq!(rational_to_f64(&lambda_hat(k, n)), want, "{k:?}");
    }
    for (k, want) in [([1, 4, -5], 3.0), ([4, 1, -5], 3.0), ([3, 3, -6], 2.0), ([2, 2, -4], 6.0), ([0, 4, -4], 3.0)] {
        assert_eq!(rational_to_f64(&lambda_hat(k, 9)), want, "{k:?}");
    }
}

#[test]
fn triangle_space_dimension_matches_nodes() {
    for n in 1..=12u32 {
        for flavor in [TriangleFlavor::Sine, TriangleFlavor::Cosine] {
            let ip = TriangleInterpolator::new(flavor, n);
            assert_eq!(triangle_space(flavor, n as i64).len(), ip.nodes.len(), "{flavor:?} n={n}");
        }
    }
}

#[test]
fn triangle_interpolants_are_nodal() {
    for n in [3u32, 4, 6] {
        for flavor in [TriangleFlavor::Sine, TriangleFlavor::Cosine] {
            let ip = TriangleInterpolator::new(flavor, n);
            let pts = ip.node_points();
            for j in 0..ip.nodes.len() {
                for (m, p) in pts.iter().enumerate() {
                    let want = if m == j { 1.0 } else { 0.0 };
                    assert!((ip.lagrange(j, *p) - want).norm() < 1e-10, "{flavor:?} n={n} j={j} m={m}");
                }
            }
        }
    }
}

#[test]
fn lagrange_matches_projected_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in [3u32, 5] {
        for flavor in [TriangleFlavor::Sine, TriangleFlavor::Cosine] {
            let ip = TriangleInterpolator::new(flavor, n);
            for _ in 0..5 {
                let t = random_t(&mut rng);
                for j in 0..ip.nodes.len() {
                    let a = ip.lagrange(j, t);
                    let b = ip.lagrange_by_projection(j, t);
                    assert!((a - b).norm() < 1e-10, "{flavor:?} n={n} j={j}");
                }
            }
        }
    }
}

#[test]
fn triangle_interpolant_reproduces_its_space() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for flavor in [TriangleFlavor::Sine, TriangleFlavor::Cosine] {
        let n = 6u32;
        let ip = TriangleInterpolator::new(flavor, n);
        let space = triangle_space(flavor, n as i64);
        for _ in 0..20 {
            let group = &space[rng.gen_range(0..space.len())];
            let f = |t: [f64; 3]| -> Complex64 { group.iter().map(|k| ip.basis(*k, t)).sum() };
            let s: Vec<Complex64> = ip.node_points().iter().map(|p| f(*p)).collect();
            for _ in 0..5 {
                let t = random_t(&mut rng);
                assert!((ip.eval(&s, t).unwrap() - f(t)).norm() < 1e-9, "{flavor:?} {group:?}");
            }
        }
    }
}

#[test]
fn triangle_interpolant_is_symmetric() {
    let ip = TriangleInterpolator::new(TriangleFlavor::Cosine, 4);
    let s: Vec<Complex64> = (0..ip.nodes.len()).map(|i| c(i as f64 * 0.3 - 1.0)).collect();
    let t = [0.21, 0.13, -0.34];
    let v = ip.eval(&s, t).unwrap();
    for g in A2 {
        assert!((ip.eval(&s, g.act(t)).unwrap() - v).norm() < 1e-10);
    }
}

#[test]
fn triangle_rejects_wrong_sample_count() {
    let ip = TriangleInterpolator::new(TriangleFlavor::Sine, 6);
    assert!(matches!(ip.coefficients(&[]), Err(Error::SampleCountMismatch { got: 0, .. })));
}

#[test]
fn lebesgue_constants_exceed_one() {
    for op in [LebesgueOperator::StarredHex, LebesgueOperator::TriangleSine, LebesgueOperator::TriangleCosine] {
        assert!(lebesgue_constant(op, 3, 24).unwrap() >= 1.0 - 1e-12, "{op:?}");
    }
}

#[test]
fn lebesgue_grid_is_stable_under_refinement() {
    for op in [LebesgueOperator::StarredHex, LebesgueOperator::TriangleCosine] {
        let a = lebesgue_constant(op, 6, 60).unwrap();
        let b = lebesgue_constant(op, 6, 120).unwrap();
        assert!((a - b).abs() / b < 0.02, "{op:?}: {a} vs {b}");
    }
}

#[test]
fn lebesgue_report_ratios() {
    let r = lebesgue_estimate(LebesgueOperator::TriangleCosine, &[3, 6], 30).unwrap();
    assert_eq!(r.constants.len(), 2);
    assert!(r.min_ratio() <= r.fitted_ratio);
    assert_eq!(barycentric_grid(4).len(), 15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn starred_kernel_is_invariant(a in -1.0f64..1.0, b in -1.0f64..1.0, g in 0usize..6) {
        let t = [a, b, -a - b];
        let k = StarKernel::new(6, KernelMethod::Compact).unwrap();
        prop_assert!((k.eval(A2[g].act(t)) - k.eval(t)).abs() < 1e-9);
    }

    #[test]
    fn starred_kernel_is_periodic(a in -1.0f64..1.0, b in -1.0f64..1.0) {
        let t = [a, b, -a - b];
        let shift = [1.0, 1.0, -2.0];
        let k = StarKernel::new(4, KernelMethod::DirectSum).unwrap();
        let u = [t[0] + shift[0], t[1] + shift[1], t[2] + shift[2]];
        prop_assert!((k.eval(u) - k.eval(t)).abs() < 1e-9);
    }

    #[test]
    fn cosine_interpolant_reproduces_constants(a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let ip = TriangleInterpolator::new(TriangleFlavor::Cosine, 5);
        let s = vec![c(1.0); ip.nodes.len()];
        prop_assert!((ip.eval(&s, [a, b, -a - b]).unwrap() - 1.0).norm() < 1e-10);
    }
}

#[test]
fn node_points_are_scaled_indices() {
    let ip = StarredHexInterpolator::new(3);
    assert_eq!(ip.node_points()[0], homo_over(ip.nodes[0], 3));
    let _ = Geometry::new(&LatticeCase::new(CaseTag::HexHex, 2)).unwrap();
}

