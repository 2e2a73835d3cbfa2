//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each. Exits non-zero if
//! any criterion fails.

mod common;

use std::process::{Command, ExitCode};

use rand::Rng;
use spinstar::entanglement::{
    closed_form_negativity, concurrence, psi_m_b_vector, rho2minus, tripartite_negativity,
};
use spinstar::hilbert::{partial_trace, relabel_permutation, QubitLabel};
use spinstar::linalg;
use spinstar::model::{
    self, appendix_energy, build_hamiltonian, crossing_curve_c_of_x, Branch, LevelLabel, Scheme, SpinStarParams,
};
use spinstar::sweeps::{self, find_level_crossing, find_negativity_maximum, Axis, Point, DEFAULT_CROSSING_TOL, LOW_T};
use spinstar::thermal::{gibbs_state, Temperature};
use QubitLabel::*;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_spinstar")).args(args).output().expect("spawn spinstar")
}

fn csv_column(out: &[u8], k: usize) -> Vec<f64> {
    String::from_utf8_lossy(out)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').nth(k).unwrap().parse().unwrap())
        .collect()
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

fn homogeneous_crossings() -> Outcome {
    let o = cli(&["crossing", "--scheme", "hom", "--t", "0", "--bracket", "0.1:10"]);
    if o.status.code() != Some(0) {
        return outcome(false, format!("exit {:?}", o.status.code()));
    }
    let cs = csv_column(&o.stdout, 0);
    let pass = cs.len() == 2 && (cs[0] - 0.60).abs() <= 0.02 && (cs[1] - 3.732).abs() <= 0.02;
    outcome(pass, format!("crossings {cs:?}; want 0.60±0.02 and 3.732±0.02 (lower crossing is exactly 1/√3 = 0.577350)"))
}

fn crossing_curve_identity() -> Outcome {
    let worst = linspace(0.2, 8.0, 100)
        .map(|x| {
            let c = crossing_curve_c_of_x(x).unwrap();
            let e2 = appendix_energy(LevelLabel::E2(Branch::Minus), c, x, 1.0);
            let e4 = appendix_energy(LevelLabel::E4(Branch::Minus), c, x, 1.0);
            (e2 - e4).abs()
        })
        .fold(0.0, f64::max);
    outcome(worst <= 1e-9, format!("max |E2- - E4-| on the curve = {worst:.3e} (tol 1e-9)"))
}

fn type_a_landmarks() -> Outcome {
    let xs = find_level_crossing(Scheme::TypeA, Point::new(6.0, 1.0, LOW_T), Axis::X, (0.1, 8.0), DEFAULT_CROSSING_TOL).unwrap();
    let (xm, _) = find_negativity_maximum(Scheme::TypeA, 6.0, LOW_T, (0.6, 5.4)).unwrap();
    let near = |target: f64| xs.iter().any(|x| (x - target).abs() <= 0.02);
    let (lo, hi, max) = (near(0.43), near(5.5), (xm - 2.46).abs() <= 0.05);
    outcome(
        lo && hi && max,
        format!(
            "crossings {xs:?} (0.43±0.02: {}, 5.5±0.02: {}); x_M = {xm:.6} (2.46±0.05: {})",
            ok(lo),
            ok(hi),
            ok(max)
        ),
    )
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "MISS"
    }
}

fn type_a_x3_crossing() -> Outcome {
    let cs = find_level_crossing(Scheme::TypeA, Point::new(1.0, 3.0, 0.0), Axis::C, (0.1, 10.0), DEFAULT_CROSSING_TOL).unwrap();
    let closed = 1.0 / ((3.0 + 17f64.sqrt()) / 2.0 - 11f64.sqrt());
    let hit = cs.iter().copied().find(|c| (c - 4.08).abs() <= 0.01);
    let pass = hit.is_some_and(|c| (c - closed).abs() <= 1e-6);
    outcome(pass, format!("crossings {cs:?}; closed form {closed:.9}"))
}

fn type_b_maximum() -> Outcome {
    let (xm, n) = find_negativity_maximum(Scheme::TypeB, 6.0, LOW_T, (0.8, 4.0)).unwrap();
    let e = model::spectrum(&SpinStarParams::type_b(6.0, xm).unwrap()).unwrap();
    let psi = psi_m_b_vector();
    let ov = model::ground_overlap(&e, &psi, 1e-9);
    let mirror = relabel_permutation(&QubitLabel::ALL, |l| match l {
        S1 => S3,
        S3 => S1,
        o => o,
    })
    .unwrap();
    let mut mirrored = vec![linalg::ZERO; 16];
    for (i, &p) in mirror.iter().enumerate() {
        mirrored[p] = psi[i];
    }
    let ov_mirror = model::ground_overlap(&e, &mirrored, 1e-9);
    let pos = (xm - 1.91).abs() <= 0.05;
    outcome(
        pos && ov >= 0.999,
        format!("x_M = {xm:.6}, N = {n:.6} (1.91±0.05: {}); ground-state overlap {ov:.6} (need 0.999); with spins 1<->3 exchanged {ov_mirror:.6}", ok(pos)),
    )
}

fn closed_form_vs_numeric() -> Outcome {
    let worst = linspace(0.5, 5.5, 200)
        .map(|x| (closed_form_negativity(x).unwrap() - tripartite_negativity(&rho2minus(x).unwrap().rho).unwrap().n123).abs())
        .fold(0.0, f64::max);
    outcome(worst <= 1e-8, format!("max deviation {worst:.3e} over 200 points (tol 1e-8)"))
}

fn concurrence_anchors() -> Outcome {
    let pairs = |x: f64| {
        let rho = rho2minus(x).unwrap().rho;
        let c = |a, b| concurrence(&partial_trace(&rho, &[a, b]).unwrap()).unwrap();
        (c(S1, S2), c(S1, S3), c(S2, S3), tripartite_negativity(&rho).unwrap().n123)
    };
    let (c12, c13, c23, _) = pairs(1.0);
    let spread = (c12 - c13).abs().max((c12 - c23).abs()).max((c13 - c23).abs());
    let anchor = spread <= 1e-10 && [c12, c13, c23].iter().all(|c| (0.31..=0.35).contains(c));
    let mut region = true;
    let mut min_n = f64::MAX;
    for x in linspace(3.6, 5.4, 61) {
        let (c12, _, c23, n) = pairs(x);
        region &= c12 == 0.0 && c23 == 0.0 && n > 0.05;
        min_n = min_n.min(n);
    }
    outcome(
        anchor && region,
        format!("x=1: C12={c12:.6} C13={c13:.6} C23={c23:.6} (spread {spread:.1e}); on [3.6,5.4] C12=C23=0: {}, min N123 {min_n:.4}", ok(region)),
    )
}

fn appendix_validation() -> Outcome {
    let report = model::validate_appendix(&model::default_validation_grid()).unwrap();
    let text = report.to_string();
    let (eig, proj) = (report.max_eigenvalue_deviation(), report.max_projector_deviation());
    let recorded = text.contains("Ψ4-/Ψ5- pairing:") && text.contains("Ψ_M^(A)") && text.contains("numerics support:");
    outcome(
        eig <= 1e-10 && proj <= 1e-8 && recorded && report.points.len() == 100,
        format!(
            "{} points; eigenvalue dev {eig:.2e}, projector dev {proj:.2e}; Ψ4-/Ψ5- swapped: {}; Ψ_M^(A) supports closed-form Ψ2-: {}",
            report.points.len(),
            report.psi4_psi5_swapped(),
            report.psi_m_a_supports_appendix()
        ),
    )
}

fn thermal_properties() -> Outcome {
    let mut rng = common::rng(0x5eed_0009);
    let mut failures = Vec::new();
    for i in 0..500 {
        let scheme = [Scheme::Homogeneous, Scheme::TypeA, Scheme::TypeB][rng.gen_range(0..3)];
        let c = rng.gen_range(0.0..10.0);
        let x = rng.gen_range(0.1..8.0);
        let t = 10f64.powf(rng.gen_range(-2.0..1.0));
        let h = build_hamiltonian(&SpinStarParams::new(scheme, c, x).unwrap());
        let rho = gibbs_state(&h, Temperature::new(t).unwrap()).unwrap();
        let hotter = gibbs_state(&h, Temperature::new(t * rng.gen_range(1.01..4.0)).unwrap()).unwrap();
        let hot = gibbs_state(&h, Temperature::new(100.0).unwrap()).unwrap();
        let n_hot = tripartite_negativity(&partial_trace(&hot, &QubitLabel::OUTER).unwrap()).unwrap().n123;
        let checks = [
            (rho.op().trace().re - 1.0).abs() <= 1e-12,
            linalg::min_eigenvalue(rho.op()).unwrap() >= -1e-10,
            rho.op().commutator(&h).max_abs() <= 1e-10,
            hotter.purity() <= rho.purity() + 1e-12,
            n_hot <= 1e-6,
        ];
        if checks.iter().any(|c| !c) {
            failures.push(format!("#{i} ({scheme}, c={c:.3}, x={x:.3}, t={t:.4}): {checks:?}"));
        }
    }
    outcome(failures.is_empty(), format!("500 tuples, {} failing {:?}", failures.len(), failures.first()))
}

fn negativity_properties() -> Outcome {
    let mut rng = common::rng(0x5eed_0010);
    let mut lu_worst = 0.0f64;
    for _ in 0..200 {
        let rho = if rng.gen_bool(0.5) {
            common::random_pure(&QubitLabel::OUTER, &mut rng)
        } else {
            common::random_density(&QubitLabel::OUTER, &mut rng)
        };
        let u = common::random_local_unitary(3, &mut rng);
        let a = tripartite_negativity(&rho).unwrap().n123;
        let b = tripartite_negativity(&rho.conjugate(&u).unwrap()).unwrap().n123;
        lu_worst = lu_worst.max((a - b).abs());
    }
    let mut bisep_worst = 0.0f64;
    for k in 0..200 {
        let single = common::random_density(&[S1], &mut rng);
        let pair = common::random_density(&[S2, S3], &mut rng);
        let rho = single.tensor(&pair).unwrap();
        let target = [S1, S2, S3][k % 3];
        let perm = relabel_permutation(&QubitLabel::OUTER, |l| if l == S1 { target } else if l == target { S1 } else { l }).unwrap();
        let rho = spinstar::hilbert::DensityMatrix::new(rho.op().permute_basis(&perm), QubitLabel::OUTER.to_vec()).unwrap();
        bisep_worst = bisep_worst.max(tripartite_negativity(&rho).unwrap().n123);
    }
    let mut sym_worst = 0.0f64;
    for c in linspace(0.0, 10.0, 21) {
        for t in linspace(0.01, 3.0, 11) {
            let r = sweeps::evaluate_point(
                Scheme::Homogeneous,
                1.0,
                Point::new(c, 1.0, t),
                &[sweeps::Observable::N1_23, sweeps::Observable::N2_13, sweeps::Observable::N3_12],
            )
            .unwrap();
            sym_worst = sym_worst.max((r[0] - r[1]).abs()).max((r[1] - r[2]).abs());
        }
    }
    outcome(
        lu_worst <= 1e-10 && bisep_worst <= 1e-10 && sym_worst <= 1e-10,
        format!("LU max dev {lu_worst:.2e}; bi-separable max N123 {bisep_worst:.2e}; homogeneous cut spread {sym_worst:.2e}"),
    )
}

fn determinism() -> Outcome {
    let cases: [&[&str]; 3] = [
        &["sweep", "--scheme", "A", "--c", "6", "--axis", "x:0.1:8:40", "--axis", "t:0.01:2:5", "--obs", "N123,N1_23,C12,C13,GAP,PURITY"],
        &["figure", "--id", "concurrences", "--curve-points", "60"],
        &["crossing", "--scheme", "A", "--c", "6"],
    ];
    let mut same = true;
    for args in cases {
        let (a, b) = (cli(args), cli(args));
        same &= a.status.code() == Some(0) && a.stdout == b.stdout && !a.stdout.is_empty();
    }
    outcome(same, format!("{} argv pairs compared byte for byte", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("homogeneous crossings", homogeneous_crossings),
        ("crossing-curve identity", crossing_curve_identity),
        ("type-A landmarks at c=6", type_a_landmarks),
        ("type-A x=3 crossing", type_a_x3_crossing),
        ("type-B maximum and ground state", type_b_maximum),
        ("closed-form vs numerical negativity", closed_form_vs_numeric),
        ("concurrence anchors", concurrence_anchors),
        ("closed-form eigensystem validation", appendix_validation),
        ("thermal-state properties", thermal_properties),
        ("negativity properties", negativity_properties),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!("[{}] {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
