#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinstar::hilbert::{DensityMatrix, QubitLabel};
use spinstar::linalg::{self, ComplexMatrix, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_c64(rng: &mut impl Rng) -> C64 {
    // Box-Muller
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    let r = (-2.0 * u1.ln()).sqrt();
    let th = 2.0 * std::f64::consts::PI * u2;
    C64::new(r * th.cos(), r * th.sin())
}

pub fn random_vector(dim: usize, rng: &mut impl Rng) -> Vec<C64> {
    linalg::normalized(&(0..dim).map(|_| gaussian_c64(rng)).collect::<Vec<_>>())
}

pub fn random_hermitian(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(dim, |_, _| gaussian_c64(rng));
    (&g + &g.adjoint()).scale_real(0.5)
}

/// Haar-ish unitary from Gram-Schmidt on Gaussian columns.
pub fn random_unitary(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<C64> = (0..dim).map(|_| gaussian_c64(rng)).collect();
        for q in &cols {
            let p = linalg::inner(q, &v);
            for (vi, qi) in v.iter_mut().zip(q) {
                *vi -= p * qi;
            }
        }
        let n = linalg::vector_norm(&v);
        if n > 1e-8 {
            cols.push(v.iter().map(|z| z / n).collect());
        }
    }
    ComplexMatrix::from_fn(dim, |r, c| cols[c][r])
}

/// Random full-rank mixed state of the given labels.
pub fn random_density(labels: &[QubitLabel], rng: &mut impl Rng) -> DensityMatrix {
    let dim = 1 << labels.len();
    let g = ComplexMatrix::from_fn(dim, |_, _| gaussian_c64(rng));
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_real(1.0 / tr), labels.to_vec()).unwrap()
}

pub fn random_pure(labels: &[QubitLabel], rng: &mut impl Rng) -> DensityMatrix {
    DensityMatrix::from_pure(&random_vector(1 << labels.len(), rng), labels.to_vec()).unwrap()
}

/// `U_1 ⊗ U_2 ⊗ U_3`
pub fn random_local_unitary(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    (1..n).fold(random_unitary(2, rng), |acc, _| acc.kron(&random_unitary(2, rng)))
}
