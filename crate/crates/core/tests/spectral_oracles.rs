//! Spectra checked against nalgebra's Schur and SVD routines, used here as
//! independent oracles.

use bicomplex::linalg::{
    approx_eig_witness, approx_point_spectrum, eigenvalues, kernel_bc, point_spectrum,
    sampled_operator_norm, BcMatrix, CMatrix, EigenOptions, SpectralConfig, Svd,
};
use bicomplex::{sample, Bicomplex};
use nalgebra::DMatrix;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type C = Complex<f64>;

fn to_na(a: &CMatrix<f64>) -> DMatrix<C> {
    DMatrix::from_fn(a.rows(), a.cols(), |r, c| a[(r, c)])
}

fn na_eigenvalues(a: &CMatrix<f64>) -> Vec<C> {
    to_na(a).schur().eigenvalues().expect("complex Schur form").iter().copied().collect()
}

fn na_sigma_min(a: &CMatrix<f64>) -> f64 {
    to_na(a).singular_values().iter().copied().fold(f64::INFINITY, f64::min)
}

fn na_sigma_max(a: &CMatrix<f64>) -> f64 {
    to_na(a).singular_values().iter().copied().fold(0.0, f64::max)
}

/// Match two eigenvalue multisets greedily.
fn same_multiset(a: &[C], b: &[C], tol: f64) -> bool {
    let mut used = vec![false; b.len()];
    a.len() == b.len()
        && a.iter().all(|x| {
            match (0..b.len()).filter(|&j| !used[j]).min_by(|&i, &j| {
                (b[i] - x).norm().partial_cmp(&(b[j] - x).norm()).unwrap()
            }) {
                Some(j) if (b[j] - x).norm() <= tol => {
                    used[j] = true;
                    true
                }
                _ => false,
            }
        })
}

#[test]
fn eigenvalues_agree_with_schur() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for n in 1..=10 {
        for _ in 0..10 {
            let a = sample::complex_matrix::<f64, _>(&mut rng, n);
            let ours = eigenvalues(&a, &EigenOptions::default()).unwrap();
            let theirs = na_eigenvalues(&a);
            assert!(same_multiset(&ours, &theirs, 1e-9), "n={n}: {ours:?} vs {theirs:?}");
            let scale = na_sigma_max(&a);
            for l in &ours {
                assert!(na_sigma_min(&a.shifted(*l)) <= 1e-12 * scale.max(1.0));
            }
        }
    }
}

#[test]
fn singular_values_agree_with_nalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for n in 1..=8 {
        let a = sample::complex_matrix::<f64, _>(&mut rng, n);
        let ours = Svd::new(&a).singular_values;
        let mut theirs: Vec<f64> = to_na(&a).singular_values().iter().copied().collect();
        theirs.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (x, y) in ours.iter().zip(&theirs) {
            assert!((x - y).abs() < 1e-12, "{ours:?} vs {theirs:?}");
        }
    }
}

#[test]
fn cartesian_and_componentwise_application_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for trial in 0..100 {
        let n = 1 + trial % 8;
        let t = sample::bc_matrix::<f64, _>(&mut rng, n);
        let x = sample::bc_vector::<f64, _>(&mut rng, n);
        let a = t.apply(&x).unwrap();
        let b = t.apply_componentwise(&x).unwrap();
        assert!(a.max_abs_diff(&b) <= 1e-12 * a.abs().max(1.0));
        let (t1, t2) = t.decompose();
        let back = BcMatrix::from_components(&t1, &t2).unwrap();
        assert!(back.max_abs_diff(&t) <= 1e-14 * 4.0);
    }
}

#[test]
fn product_components_multiply() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let t = sample::bc_matrix::<f64, _>(&mut rng, 4);
    let s = sample::bc_matrix::<f64, _>(&mut rng, 4);
    let (t1, t2) = t.decompose();
    let (s1, s2) = s.decompose();
    let (p1, p2) = t.matmul(&s).unwrap().decompose();
    assert!(p1.max_abs_diff(&(&t1 * &s1)) < 1e-13);
    assert!(p2.max_abs_diff(&(&t2 * &s2)) < 1e-13);
    let norm_ts = t.matmul(&s).unwrap().operator_norm_d();
    assert!(norm_ts.leq_prime_tol(&(t.operator_norm_d() * s.operator_norm_d()), 1e-12));
}

fn probe_grid(rng: &mut ChaCha8Rng, s1: &[C], s2: &[C]) -> Vec<Bicomplex<f64>> {
    let mut probes = Vec::new();
    let rand_c = |rng: &mut ChaCha8Rng| C::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
    for a in s1 {
        for b in s2 {
            probes.push(Bicomplex::from_idempotent(*a, *b).unwrap());
        }
        probes.push(Bicomplex::from_idempotent(*a, rand_c(rng)).unwrap());
    }
    for b in s2 {
        probes.push(Bicomplex::from_idempotent(rand_c(rng), *b).unwrap());
    }
    while probes.len() < 60 {
        probes.push(Bicomplex::from_idempotent(rand_c(rng), rand_c(rng)).unwrap());
    }
    probes
}

#[test]
fn spectra_agree_with_singular_value_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let cfg = SpectralConfig::default();
    for trial in 0..20 {
        let n = 2 + trial % 3;
        let t = sample::bc_matrix::<f64, _>(&mut rng, n);
        let p = point_spectrum(&t, &cfg).unwrap();
        let ap = approx_point_spectrum(&t, &cfg).unwrap();
        let (t1, t2) = t.decompose();
        let (n1, n2) = (na_sigma_max(&t1), na_sigma_max(&t2));
        for l in probe_grid(&mut rng, &p.s1, &p.s2) {
            let small1 = na_sigma_min(&t1.shifted(l.z1())) < cfg.tol.eig * n1;
            let small2 = na_sigma_min(&t2.shifted(l.z2())) < cfg.tol.eig * n2;
            assert_eq!(ap.contains(&l, cfg.tol.eig), small1 && small2);
            assert_eq!(p.contains(&l, cfg.tol.eig), small1 || small2);
            assert_eq!(p.contains(&l, cfg.tol.eig), !kernel_bc(&t, &l, &cfg).is_empty());
            if ap.contains(&l, cfg.tol.eig) {
                assert!(p.contains(&l, cfg.tol.eig));
            }
        }
    }
}

#[test]
fn kernel_vectors_are_eigenvectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let cfg = SpectralConfig::default();
    let t = sample::bc_matrix::<f64, _>(&mut rng, 3);
    let p = point_spectrum(&t, &cfg).unwrap();
    let l = Bicomplex::from_idempotent(p.s1[0], C::new(5.0, 0.0)).unwrap();
    let ker = kernel_bc(&t, &l, &cfg);
    assert!(!ker.is_empty());
    for v in &ker {
        let r = t.shifted(l).apply(v).unwrap();
        assert!(r.abs() < 1e-12, "{}", r.abs());
    }
}

#[test]
fn unboundedness_of_point_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let cfg = SpectralConfig::default();
    let t = sample::bc_matrix::<f64, _>(&mut rng, 3);
    let p = point_spectrum(&t, &cfg).unwrap();
    let far = p.member_beyond(1e6).unwrap();
    assert!(far.norm_d().a2() > 1e6);
    assert!(p.contains(&far, cfg.tol.eig));
}

fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<C> {
    let a = to_na(&sample::complex_matrix::<f64, _>(rng, n));
    a.qr().q()
}

#[test]
fn witness_residual_for_normal_operators() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let cfg = SpectralConfig::default();
    for n in 2..=5 {
        let build = |rng: &mut ChaCha8Rng| {
            let u = random_unitary(rng, n);
            let d = DMatrix::from_diagonal(&nalgebra::DVector::from_fn(n, |_, _| {
                C::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0))
            }));
            let m = &u * d * u.adjoint();
            CMatrix::from_fn(n, n, |r, c| m[(r, c)])
        };
        let (a, b) = (build(&mut rng), build(&mut rng));
        let t = BcMatrix::from_components(&a, &b).unwrap();
        let ap = approx_point_spectrum(&t, &cfg).unwrap();
        for l in ap.product_members() {
            let w = approx_eig_witness(&t, &l, &cfg).unwrap();
            assert!(w.x.is_hyperbolic_unit(1e-12));
            assert!(w.residual.a1() < 1e-9 && w.residual.a2() < 1e-9, "{:?}", w.residual);
        }
    }
}

#[test]
fn operator_norm_matches_supremum() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for n in 1..=4 {
        let t = sample::bc_matrix::<f64, _>(&mut rng, n);
        let exact = t.operator_norm_d();
        let sampled = sampled_operator_norm(&t, 10_000, &mut rng).unwrap();
        assert!(sampled.leq_prime_tol(&exact, 1e-12));
        assert!(sampled.a1() >= 0.95 * exact.a1());
        assert!(sampled.a2() >= 0.95 * exact.a2());
        let (t1, t2) = t.decompose();
        assert!((exact.a1() - na_sigma_max(&t1)).abs() < 1e-12);
        assert!((exact.a2() - na_sigma_max(&t2)).abs() < 1e-12);
    }
}

#[test]
fn single_precision_spectra() {
    let cfg = SpectralConfig::<f32>::default();
    let t = BcMatrix::<f32>::diagonal(&[
        Bicomplex::from_idempotent(Complex::new(1.0, 0.0), Complex::new(3.0, 0.0)).unwrap(),
        Bicomplex::from_idempotent(Complex::new(2.0, 0.0), Complex::new(4.0, 0.0)).unwrap(),
    ]);
    let w = bicomplex::linalg::sigma_p_not_in_ap_demo(&t, &cfg).unwrap();
    assert!(w.passed());
}
