use std::collections::BTreeSet;

use bicomplex::algebra::{
    all_ideals, brute_force_maximal_oracle, is_maximal, maximal_ideals, BcAlgebra,
    DivisionAlgebraElem, FnAlgebra, IdealSpec, PointwiseAlgebra,
};
use bicomplex::{Bicomplex, Side};
use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn structural_forms_match_exhaustive_oracle() {
    for n in 1..=3 {
        let fast: BTreeSet<IdealSpec> = maximal_ideals(n).into_iter().collect();
        let oracle: BTreeSet<IdealSpec> = brute_force_maximal_oracle(n).unwrap().into_iter().collect();
        assert_eq!(fast, oracle, "n = {n}");
        assert_eq!(fast.len(), 2 * n);
        for m in &fast {
            assert!(m.full_component().is_some());
            assert_eq!(is_maximal(m, n), Ok(true));
        }
    }
}

#[test]
fn structural_and_lattice_maximality_agree() {
    for n in 1..=3 {
        let ideals = all_ideals(n).unwrap();
        let oracle: BTreeSet<IdealSpec> = brute_force_maximal_oracle(n).unwrap().into_iter().collect();
        for i in ideals.iter().filter(|i| i.is_proper()) {
            assert_eq!(is_maximal(i, n).unwrap(), oracle.contains(i), "{i:?}");
        }
    }
}

/// Inclusion by subset test agrees with sampled element membership.
#[test]
fn inclusion_agrees_with_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 2;
    let ideals = all_ideals(n).unwrap();
    for i in &ideals {
        for j in &ideals {
            let sampled = (0..20).all(|_| j.contains(&i.random_member::<f64, _>(n, &mut rng), 1e-12));
            assert_eq!(i.is_subset_of(j), sampled, "{i:?} ⊆ {j:?}");
        }
    }
}

#[test]
fn point_ideals_are_maximal_forms() {
    let x = FnAlgebra::new(["a", "b", "c"]).unwrap();
    let max: BTreeSet<IdealSpec> = x.maximal_ideals().into_iter().collect();
    for p in &x.points {
        let a = x.second_component_vanishing(p).unwrap();
        let b = x.first_component_vanishing(p).unwrap();
        assert!(max.contains(&a) && max.contains(&b));
        assert_eq!(a.full_component(), Some(Side::E1));
        assert_eq!(b.full_component(), Some(Side::E2));
        // M_x lies strictly inside both
        let m = x.vanishing_ideal(p).unwrap();
        assert!(m.is_subset_of(&a) && m.is_subset_of(&b) && m != a);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let f = BcAlgebra::<f64>::random_element(&x, &mut rng);
    assert_eq!(x.eval(&f, "b").unwrap(), f.entries()[1]);
    assert_eq!(x.as_pointwise(), PointwiseAlgebra::new(3));
}

#[test]
fn division_spectrum_ignores_free_coordinate() {
    let a = Complex::new(0.5, -1.5);
    for side in [Side::E1, Side::E2] {
        let x = DivisionAlgebraElem::new(side, a);
        let s = x.spectrum();
        let moduli = [0.0, 1.0, 2.5, 10.0, 1e2, 1e3, 1e4, 1e5, 5e5, 1e6];
        for r in moduli {
            let free = Complex::new(r, -r / 2.0);
            let (in_l, out_l) = match side {
                Side::E1 => (
                    Bicomplex::from_idempotent(a, free).unwrap(),
                    Bicomplex::from_idempotent(a + 1.0, free).unwrap(),
                ),
                Side::E2 => (
                    Bicomplex::from_idempotent(free, a).unwrap(),
                    Bicomplex::from_idempotent(free, a + 1.0).unwrap(),
                ),
            };
            assert!(s.contains(&in_l, 1e-10) && x.in_spectrum_direct(&in_l, 1e-10));
            assert!(!s.contains(&out_l, 1e-10) && !x.in_spectrum_direct(&out_l, 1e-10));
        }
    }
}
