mod common;

use proptest::prelude::*;
use spinstar::entanglement::{
    bipartite_negativity, closed_form_negativity, concurrence, rho2minus, tripartite_negativity,
};
use spinstar::hilbert::{partial_trace, relabel_permutation, DensityMatrix, QubitLabel};
use spinstar::linalg::{self, C64};
use QubitLabel::*;

fn relabel(rho: &DensityMatrix, map: impl Fn(QubitLabel) -> QubitLabel) -> DensityMatrix {
    let perm = relabel_permutation(rho.labels(), map).unwrap();
    DensityMatrix::new(rho.op().permute_basis(&perm), rho.labels().to_vec()).unwrap()
}

fn swap(a: QubitLabel, b: QubitLabel) -> impl Fn(QubitLabel) -> QubitLabel {
    move |l| if l == a { b } else if l == b { a } else { l }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_unitaries_preserve_negativity(seed in any::<u64>(), pure in any::<bool>()) {
        let mut rng = common::rng(seed);
        let rho = if pure { common::random_pure(&QubitLabel::OUTER, &mut rng) } else { common::random_density(&QubitLabel::OUTER, &mut rng) };
        let u = common::random_local_unitary(3, &mut rng);
        let a = tripartite_negativity(&rho).unwrap();
        let b = tripartite_negativity(&rho.conjugate(&u).unwrap()).unwrap();
        prop_assert!((a.n123 - b.n123).abs() <= 1e-10, "{:?} vs {:?}", a, b);
    }

    #[test]
    fn biseparable_states_have_zero_tripartite_negativity(seed in any::<u64>(), cut in 0usize..3) {
        let mut rng = common::rng(seed);
        let single = common::random_density(&[S1], &mut rng);
        let pair = common::random_density(&[S2, S3], &mut rng);
        let rho = single.tensor(&pair).unwrap();
        let rho = match cut {
            0 => rho,
            1 => relabel(&rho, swap(S1, S2)),
            _ => relabel(&rho, swap(S1, S3)),
        };
        let n = tripartite_negativity(&rho).unwrap();
        prop_assert!(n.n123 <= 1e-10, "{:?}", n);
        let isolated = [n.n1_23, n.n2_13, n.n3_12][cut];
        prop_assert_eq!(isolated, 0.0);
    }

    #[test]
    fn pure_state_schmidt_convention(seed in any::<u64>()) {
        let rho = common::random_pure(&QubitLabel::OUTER, &mut common::rng(seed));
        for part in QubitLabel::OUTER {
            let reduced = partial_trace(&rho, &[part]).unwrap();
            let e = linalg::eigh(reduced.op()).unwrap();
            let s: f64 = e.values().iter().map(|l| l.max(0.0).sqrt()).sum();
            let n = bipartite_negativity(&rho, &[part]).unwrap();
            prop_assert!((n - (s * s - 1.0)).abs() <= 1e-10);
        }
    }

    #[test]
    fn relabelling_permutes_breakdown(seed in any::<u64>()) {
        let rho = common::random_density(&QubitLabel::OUTER, &mut common::rng(seed));
        let a = tripartite_negativity(&rho).unwrap();
        let b = tripartite_negativity(&relabel(&rho, swap(S1, S3))).unwrap();
        prop_assert!((a.n1_23 - b.n3_12).abs() <= 1e-10);
        prop_assert!((a.n3_12 - b.n1_23).abs() <= 1e-10);
        prop_assert!((a.n2_13 - b.n2_13).abs() <= 1e-10);
        prop_assert!((a.n123 - b.n123).abs() <= 1e-10);
    }

    #[test]
    fn concurrence_bounds(seed in any::<u64>()) {
        let rho = common::random_density(&[S1, S2], &mut common::rng(seed));
        let c = concurrence(&rho).unwrap();
        prop_assert!((0.0..=1.0).contains(&c));
    }

    #[test]
    fn pure_concurrence_formula(seed in any::<u64>()) {
        let psi = common::random_vector(4, &mut common::rng(seed));
        let rho = DensityMatrix::from_pure(&psi, vec![S1, S2]).unwrap();
        let want = 2.0 * (psi[0] * psi[3] - psi[1] * psi[2]).norm();
        prop_assert!((concurrence(&rho).unwrap() - want).abs() <= 1e-10);
    }

    #[test]
    fn concurrence_lu_invariant(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let rho = common::random_density(&[S1, S2], &mut rng);
        let u = common::random_local_unitary(2, &mut rng);
        let a = concurrence(&rho).unwrap();
        let b = concurrence(&rho.conjugate(&u).unwrap()).unwrap();
        prop_assert!((a - b).abs() <= 1e-10);
    }

    #[test]
    fn closed_form_equals_numeric(x in 0.5f64..5.5) {
        let numeric = tripartite_negativity(&rho2minus(x).unwrap().rho).unwrap().n123;
        prop_assert!((closed_form_negativity(x).unwrap() - numeric).abs() <= 1e-8);
    }
}

#[test]
fn werner_family_concurrence() {
    // p|Φ+><Φ+| + (1-p) I/4 has C = max(0, (3p-1)/2).
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let phi = [C64::new(s, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(s, 0.0)];
    for p in [0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0] {
        let op = &linalg::ComplexMatrix::projector(&phi).scale_real(p) + &linalg::ComplexMatrix::identity(4).scale_real((1.0 - p) / 4.0);
        let rho = DensityMatrix::new(op, vec![S1, S2]).unwrap();
        let want = ((3.0 * p - 1.0) / 2.0f64).max(0.0);
        assert!((concurrence(&rho).unwrap() - want).abs() <= 1e-10, "p={p}");
        let neg = bipartite_negativity(&rho, &[S1]).unwrap();
        assert!((neg - want).abs() <= 1e-10, "p={p}");
    }
}

#[test]
fn closed_form_rejects_non_positive_x() {
    assert!(closed_form_negativity(0.0).is_err());
    assert!(closed_form_negativity(-1.0).is_err());
}
