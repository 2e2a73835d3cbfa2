mod common;

use proptest::prelude::*;
use spinstar::hilbert::{relabel_permutation, QubitLabel};
use spinstar::linalg;
use spinstar::model::{self, appendix_energy, build_hamiltonian, Branch, LevelLabel, Scheme, SpinStarParams};
use QubitLabel::*;

fn scheme() -> impl Strategy<Value = Scheme> {
    prop_oneof![Just(Scheme::Homogeneous), Just(Scheme::TypeA), Just(Scheme::TypeB)]
}

fn swap13(l: QubitLabel) -> QubitLabel {
    match l {
        S1 => S3,
        S3 => S1,
        o => o,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hamiltonian_conserves_excitations(s in scheme(), c in 0.0f64..10.0, x in 0.05f64..8.0) {
        let h = build_hamiltonian(&SpinStarParams::new(s, c, x).unwrap());
        prop_assert!(h.commutator(&model::total_sigma_z()).max_abs() <= 1e-12);
        prop_assert!(h.hermiticity_deviation() == 0.0);
    }

    #[test]
    fn type_a_mirror_symmetry(c in 0.0f64..10.0, x in 0.05f64..8.0) {
        let h = build_hamiltonian(&SpinStarParams::type_a(c, x).unwrap());
        let perm = relabel_permutation(&QubitLabel::ALL, swap13).unwrap();
        prop_assert_eq!(h.permute_basis(&perm).max_abs_diff(&h), 0.0);
    }

    #[test]
    fn homogeneous_permutation_symmetry(c in 0.0f64..10.0) {
        let h = build_hamiltonian(&SpinStarParams::homogeneous(c).unwrap());
        let cycle = |l| match l { S1 => S2, S2 => S3, S3 => S1, o => o };
        for map in [&swap13 as &dyn Fn(QubitLabel) -> QubitLabel, &cycle] {
            let perm = relabel_permutation(&QubitLabel::ALL, map).unwrap();
            prop_assert_eq!(h.permute_basis(&perm).max_abs_diff(&h), 0.0);
        }
    }

    #[test]
    fn spectrum_is_symmetric_about_zero(s in scheme(), c in 0.0f64..10.0, x in 0.05f64..8.0) {
        let e = model::spectrum(&SpinStarParams::new(s, c, x).unwrap()).unwrap();
        let v = e.values();
        for k in 0..16 {
            prop_assert!((v[k] + v[15 - k]).abs() <= 1e-10 * (1.0 + c * (1.0 + x * x)));
        }
    }

    #[test]
    fn analytic_multiset_matches(c in 0.0f64..10.0, x in 0.05f64..8.0, omega0 in 0.5f64..2.0) {
        let levels = model::analytic_spectrum_type_a(c, x, omega0).unwrap();
        let mut analytic: Vec<f64> = levels.iter().map(|l| l.energy).collect();
        analytic.sort_by(f64::total_cmp);
        let numeric = model::spectrum(&SpinStarParams::type_a(c, x).unwrap()).unwrap();
        for (a, n) in analytic.iter().zip(numeric.values()) {
            prop_assert!((a - omega0 * n).abs() <= 1e-10 * omega0 * (1.0 + c * (1.0 + x)));
        }
        for l in &levels {
            prop_assert!((linalg::vector_norm(&l.vector) - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn crossing_curve_levels_meet(x in 0.2f64..8.0) {
        let c = model::crossing_curve_c_of_x(x).unwrap();
        let e2 = appendix_energy(LevelLabel::E2(Branch::Minus), c, x, 1.0);
        let e4 = appendix_energy(LevelLabel::E4(Branch::Minus), c, x, 1.0);
        prop_assert!((e2 - e4).abs() <= 1e-9);
    }
}

#[test]
fn parameter_validation() {
    assert!(SpinStarParams::new(Scheme::TypeA, -1.0, 1.0).is_err());
    assert!(SpinStarParams::new(Scheme::TypeA, 1.0, 0.0).is_err());
    assert!(SpinStarParams::new(Scheme::TypeB, f64::NAN, 1.0).is_err());
    assert!(SpinStarParams::type_a(1.0, 1.0).unwrap().with_omega0(0.0).is_err());
    assert_eq!(SpinStarParams::homogeneous(2.0).unwrap().x(), 1.0);
    assert_eq!(SpinStarParams::type_b(2.0, 3.0).unwrap().couplings(), [2.0, 6.0, 18.0]);
    assert!("Z".parse::<Scheme>().is_err());
}

#[test]
fn homogeneous_ground_energy_at_unit_coupling() {
    let e = model::spectrum(&SpinStarParams::homogeneous(1.0).unwrap()).unwrap();
    assert!((e.values()[0] + 3f64.sqrt() + 1.0).abs() < 1e-12);
}

#[test]
fn ground_state_at_type_a_maximum_is_psi2_minus() {
    let e = model::spectrum(&SpinStarParams::type_a(6.0, 2.46).unwrap()).unwrap();
    let psi = model::analytic_spectrum_type_a(6.0, 2.46, 1.0)
        .unwrap()
        .into_iter()
        .find(|l| l.label == LevelLabel::E2(Branch::Minus))
        .unwrap()
        .vector;
    assert!(model::ground_overlap(&e, &psi, 1e-9) > 1.0 - 1e-10);
    assert!(model::ground_overlap(&e, &model::printed_psi_m_a(), 1e-9) < 0.9);
}
