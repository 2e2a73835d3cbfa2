//! Gibbs states `e^{-H/t}/Z` and their zero-temperature limit.

use crate::error::{Error, Result};
use crate::hilbert::{DensityMatrix, QubitLabel};
use crate::linalg::{self, ComplexMatrix, EigenSystem};

/// Dimensionless temperature `k_B T / ω₀`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature(f64);

impl Temperature {
    pub fn new(t: f64) -> Result<Self> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::Domain(format!("temperature must be finite and >= 0, got {t}")));
        }
        Ok(Self(t))
    }

    pub const ZERO: Temperature = Temperature(0.0);

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }
}

/// Default energy window (units of ω₀) for the ground manifold.
pub const DEFAULT_DEGENERACY_TOL: f64 = 1e-9;

fn labels_for_dim(dim: usize) -> Result<Vec<QubitLabel>> {
    match dim {
        16 => Ok(QubitLabel::ALL.to_vec()),
        8 => Ok(QubitLabel::OUTER.to_vec()),
        _ => Err(Error::Contract(format!(
            "cannot infer qubit labels for a {dim}-dimensional Hamiltonian; use gibbs_state_from_spectrum"
        ))),
    }
}

/// Gibbs state of a 16x16 star Hamiltonian (or an 8x8 outer-spin one).
pub fn gibbs_state(h: &ComplexMatrix, t: Temperature) -> Result<DensityMatrix> {
    if t.is_zero() {
        return Err(Error::Contract("gibbs_state needs t > 0; use ground_manifold_state at t = 0".into()));
    }
    let labels = labels_for_dim(h.dim())?;
    gibbs_state_from_spectrum(&linalg::eigh(h)?, t, labels)
}

/// Gibbs state from an existing eigensystem. Weights are shifted by the
/// lowest eigenvalue so small `t` cannot overflow.
pub fn gibbs_state_from_spectrum(e: &EigenSystem, t: Temperature, labels: Vec<QubitLabel>) -> Result<DensityMatrix> {
    if t.is_zero() {
        return Err(Error::Contract("gibbs_state needs t > 0; use ground_manifold_state at t = 0".into()));
    }
    let e0 = e.ground_energy();
    let tv = t.value();
    let z: f64 = e.values().iter().map(|&l| (-(l - e0) / tv).exp()).sum();
    let op = linalg::spectral_map(e, |l| (-(l - e0) / tv).exp() / z)?;
    Ok(DensityMatrix::from_trusted(op, labels))
}

/// Equal-weight mixture over the eigenspace `{λ : λ − λ_min <= degeneracy_tol}`.
pub fn ground_manifold_state(h: &ComplexMatrix, degeneracy_tol: f64) -> Result<DensityMatrix> {
    let labels = labels_for_dim(h.dim())?;
    ground_manifold_from_spectrum(&linalg::eigh(h)?, degeneracy_tol, labels)
}

pub fn ground_manifold_from_spectrum(e: &EigenSystem, degeneracy_tol: f64, labels: Vec<QubitLabel>) -> Result<DensityMatrix> {
    if degeneracy_tol.is_nan() || degeneracy_tol <= 0.0 {
        return Err(Error::Contract(format!("degeneracy tolerance must be > 0, got {degeneracy_tol}")));
    }
    let g = e.ground_degeneracy(degeneracy_tol);
    let op = e.projector(0..g).scale_real(1.0 / g as f64);
    Ok(DensityMatrix::from_trusted(op, labels))
}

/// Routes `t = 0` to the ground manifold and `t > 0` to the Gibbs state.
pub fn thermal_state_from_spectrum(e: &EigenSystem, t: Temperature, labels: Vec<QubitLabel>) -> Result<DensityMatrix> {
    if t.is_zero() {
        ground_manifold_from_spectrum(e, DEFAULT_DEGENERACY_TOL, labels)
    } else {
        gibbs_state_from_spectrum(e, t, labels)
    }
}

/// `tr(ρ H)`
pub fn energy_expectation(rho: &DensityMatrix, h: &ComplexMatrix) -> f64 {
    (rho.op() * h).trace().re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{partial_trace, superposition, trace_distance};
    use crate::model::{build_hamiltonian, SpinStarParams};

    fn h(c: f64) -> ComplexMatrix {
        build_hamiltonian(&SpinStarParams::homogeneous(c).unwrap())
    }

    #[test]
    fn temperature_validation() {
        assert!(Temperature::new(-0.1).is_err());
        assert!(Temperature::new(f64::NAN).is_err());
        assert!(Temperature::new(0.0).unwrap().is_zero());
    }

    #[test]
    fn infinite_temperature_is_maximally_mixed() {
        let rho = gibbs_state(&h(2.0), Temperature::new(1e6).unwrap()).unwrap();
        let mixed = ComplexMatrix::identity(16).scale_real(1.0 / 16.0);
        assert!(rho.op().max_abs_diff(&mixed) <= 1e-5);
    }

    #[test]
    fn free_spins_freeze_into_vacuum() {
        let rho = gibbs_state(&h(0.0), Temperature::new(0.01).unwrap()).unwrap();
        let mut vac = ComplexMatrix::zeros(16);
        vac[(0, 0)] = linalg::ONE;
        assert!(trace_distance(rho.op(), &vac).unwrap() <= 1e-8);
    }

    #[test]
    fn a3_plateau_reduced_state() {
        let rho = gibbs_state(&h(6.0), Temperature::new(0.01).unwrap()).unwrap();
        let outer = partial_trace(&rho, &QubitLabel::OUTER).unwrap();
        let third = 1.0 / 3f64.sqrt();
        let w = superposition(&[("100", third), ("010", third), ("001", third)]).unwrap();
        let wt = superposition(&[("011", third), ("101", third), ("110", third)]).unwrap();
        let target = DensityMatrix::mixture(&[(0.5, &w), (0.5, &wt)], QubitLabel::OUTER.to_vec()).unwrap();
        assert!(trace_distance(outer.op(), target.op()).unwrap() <= 1e-3);
    }

    #[test]
    fn zero_temperature_errors() {
        assert!(matches!(gibbs_state(&h(1.0), Temperature::ZERO), Err(Error::Contract(_))));
        assert!(ground_manifold_state(&h(1.0), 0.0).is_err());
    }

    #[test]
    fn ground_manifold_cases() {
        let vac = ground_manifold_state(&h(0.0), DEFAULT_DEGENERACY_TOL).unwrap();
        assert!((vac.op()[(0, 0)].re - 1.0).abs() < 1e-14);
        assert!((vac.purity() - 1.0).abs() < 1e-12);

        let g = ground_manifold_state(&h(1.0), DEFAULT_DEGENERACY_TOL).unwrap();
        assert!((g.purity() - 1.0).abs() < 1e-12);

        // Rank of the mixture at the upper homogeneous crossing.
        let c = crate::model::crossing_curve_c_of_x(1.0).unwrap();
        let g = ground_manifold_state(&h(c), DEFAULT_DEGENERACY_TOL).unwrap();
        assert!(g.purity() <= 0.5 + 1e-12, "purity {}", g.purity());
    }

    #[test]
    fn ground_manifold_is_low_temperature_limit() {
        let hm = h(2.0);
        let e = linalg::eigh(&hm).unwrap();
        let gap = e.gap();
        assert!(gap > 1e-3);
        let g = ground_manifold_state(&hm, DEFAULT_DEGENERACY_TOL).unwrap();
        let cold = gibbs_state(&hm, Temperature::new(1e-6 * gap).unwrap()).unwrap();
        assert!(trace_distance(g.op(), cold.op()).unwrap() <= 1e-6);
    }
}
