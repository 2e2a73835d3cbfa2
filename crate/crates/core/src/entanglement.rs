//! Negativities, tripartite negativity, Wootters concurrence, the ρ^{2−}(x)
//! family with its closed-form negativity, and the named reference states.
//!
//! **Negativity convention.** Throughout this crate the negativity of a
//! bipartition is `||ρ^{T_I}||_1 − 1`, the sum of absolute eigenvalues of the
//! partial transpose minus one. This is twice the "halved" negativity used
//! by many other libraries; a Bell state has negativity 1 here.

use std::fmt;

use crate::error::{Error, Result};
use crate::hilbert::{partial_transpose, pauli, superposition, DensityMatrix, QubitLabel};
use crate::linalg::{self, ComplexMatrix, C64, ZERO};
use crate::model::middle_weight;

/// Partial-transpose eigenvalues above `-NEGATIVITY_FLOOR` are treated as
/// rounding noise of a non-negative eigenvalue.
pub const NEGATIVITY_FLOOR: f64 = 1e-12;

/// Negativity of the bipartition `part | rest`, in the trace-norm-minus-one
/// convention.
pub fn bipartite_negativity(rho: &DensityMatrix, part: &[QubitLabel]) -> Result<f64> {
    let pt = partial_transpose(rho, part)?;
    let e = linalg::eigh(&pt)?;
    // ||A||_1 - tr A = 2 Σ|negative eigenvalues| for unit-trace A.
    let negative: f64 = e.values().iter().filter(|&&v| v <= -NEGATIVITY_FLOOR).map(|v| -v).sum();
    Ok(clamp_rounding(2.0 * negative))
}

fn clamp_rounding(v: f64) -> f64 {
    if v < 0.0 && v > -1e-10 {
        0.0
    } else {
        v.max(0.0)
    }
}

/// The three one-versus-rest negativities of a three-qubit state and their
/// geometric mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripartiteNegativityBreakdown {
    pub n1_23: f64,
    pub n2_13: f64,
    pub n3_12: f64,
    pub n123: f64,
}

impl TripartiteNegativityBreakdown {
    pub fn from_parts(n1_23: f64, n2_13: f64, n3_12: f64) -> Self {
        let n123 = geometric_mean3(n1_23, n2_13, n3_12);
        Self { n1_23, n2_13, n3_12, n123 }
    }
}

/// Cube root of the product; exactly zero if any factor is zero.
pub fn geometric_mean3(a: f64, b: f64, c: f64) -> f64 {
    if a == 0.0 || b == 0.0 || c == 0.0 {
        0.0
    } else {
        (a * b * c).cbrt()
    }
}

/// Tripartite negativity of a three-qubit state. `n1_23` isolates the first
/// label of `rho`, `n2_13` the second and `n3_12` the third.
pub fn tripartite_negativity(rho: &DensityMatrix) -> Result<TripartiteNegativityBreakdown> {
    let labels = rho.labels();
    if labels.len() != 3 {
        return Err(Error::Contract(format!("tripartite negativity needs 3 qubits, got {}", labels.len())));
    }
    let n = |l: QubitLabel| bipartite_negativity(rho, &[l]);
    Ok(TripartiteNegativityBreakdown::from_parts(n(labels[0])?, n(labels[1])?, n(labels[2])?))
}

/// Wootters concurrence of a two-qubit state.
///
/// The `μ_i` are the eigenvalues of `√(√ρ ρ̃ √ρ)`, `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
/// They equal the singular values of `√ρ̃ √ρ`, which are read off as the
/// positive half of the spectrum of the Hermitian dilation
/// `[[0, B], [B^†, 0]]`, `B = √ρ̃ √ρ`. This avoids square roots of
/// rounding-level eigenvalues.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.labels().len() != 2 {
        return Err(Error::Contract(format!("concurrence needs 2 qubits, got {}", rho.labels().len())));
    }
    let e = linalg::eigh(rho.op())?;
    let sqrt_rho = linalg::spectral_map(&e, |l| l.max(0.0).sqrt())?;
    let y = pauli::sigma_y();
    let yy = y.kron(&y);
    let sqrt_tilde = &(&yy * &sqrt_rho.conj()) * &yy;
    let b = &sqrt_tilde * &sqrt_rho;

    let dilation = ComplexMatrix::from_fn(8, |r, c| match (r < 4, c < 4) {
        (true, false) => b[(r, c - 4)],
        (false, true) => b[(c, r - 4)].conj(),
        _ => ZERO,
    });
    let d = linalg::eigh(&dilation)?;
    let mu: Vec<f64> = d.values()[4..].iter().rev().map(|v| v.abs()).collect();
    Ok((mu[0] - mu[1] - mu[2] - mu[3]).clamp(0.0, 1.0))
}

/// Half-and-half mixture of the two Werner-like states obtained by tracing
/// the centre out of the type-A level Ψ₂⁻(x).
#[derive(Debug, Clone)]
pub struct Rho2MinusFamily {
    pub x: f64,
    pub aleph: f64,
    pub w1: Vec<C64>,
    pub w2: Vec<C64>,
    pub rho: DensityMatrix,
}

pub fn rho2minus(x: f64) -> Result<Rho2MinusFamily> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("rho2minus needs x > 0, got {x}")));
    }
    let k = middle_weight(x);
    let aleph = 1.0 / (2.0 + k * k).sqrt();
    let w1 = superposition(&[("011", aleph), ("110", aleph), ("101", k * aleph)])?;
    let w2 = superposition(&[("100", aleph), ("001", aleph), ("010", k * aleph)])?;
    let op = &ComplexMatrix::projector(&w1).scale_real(0.5) + &ComplexMatrix::projector(&w2).scale_real(0.5);
    let rho = DensityMatrix::new(op, QubitLabel::OUTER.to_vec())?;
    Ok(Rho2MinusFamily { x, aleph, w1, w2, rho })
}

/// Coefficients `[c0, c1, c2, c3]` of the cubic `c0 + c1 λ + c2 λ² + c3 λ³`
/// whose roots enter the closed-form negativity of ρ^{2−}(x).
pub fn rho2minus_cubic(x: f64) -> [f64; 4] {
    let s = (8.0 + x * x).sqrt();
    let x2 = x * x;
    let x3 = x2 * x;
    [
        -10.0 * x + x3 + (2.0 + x2) * s,
        -32.0 * x - 4.0 * x3 - 48.0 * s - 4.0 * x2 * s,
        128.0 * x + 16.0 * x3 - 384.0 * s - 48.0 * x2 * s,
        1024.0 * s + 128.0 * x2 * s,
    ]
}

/// Closed-form tripartite negativity of ρ^{2−}(x).
pub fn closed_form_negativity(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("closed-form negativity needs x > 0, got {x}")));
    }
    let [c0, c1, c2, c3] = rho2minus_cubic(x);
    let roots = linalg::cubic_real_roots(c0, c1, c2, c3).map_err(|e| match e {
        Error::ComplexRoots { discriminant } => Error::Domain(format!(
            "closed-form negativity undefined at x = {x}: root cubic has complex roots (discriminant {discriminant:e})"
        )),
        other => other,
    })?;
    let s = (8.0 + x * x).sqrt();
    let abs_sum: f64 = roots.iter().map(|r| r.abs()).sum();
    let first = x + s - (2.0 * (20.0 + x * (x + s))).sqrt();
    let second = x - 3.0 * s + 8.0 * s * abs_sum;
    let inner = -first * second * second / (8.0 + x * x).powf(1.5);
    Ok(inner.cbrt() / 2f64.powf(5.0 / 3.0))
}

/// Reference states used by the analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NamedState {
    /// `(|100> + |010> + |001>)/√3`
    W,
    /// `(|011> + |101> + |110>)/√3`
    WTilde,
    /// `|000><000|`
    RhoA1,
    /// `(|W><W| + |000><000|)/2`
    RhoA2,
    /// `(|W><W| + |W̃><W̃|)/2`
    RhoA3,
    Rho2Minus(f64),
    /// Quoted four-spin type-B ground state at the negativity maximum.
    PsiMB,
}

impl NamedState {
    /// Accepts `W`, `W_TILDE`, `RHO_A1`, `RHO_A2`, `RHO_A3`, `RHO_2MINUS`
    /// (requires `x`) and `PSI_M_B`.
    pub fn parse(name: &str, x: Option<f64>) -> Result<Self> {
        match name {
            "W" => Ok(NamedState::W),
            "W_TILDE" => Ok(NamedState::WTilde),
            "RHO_A1" => Ok(NamedState::RhoA1),
            "RHO_A2" => Ok(NamedState::RhoA2),
            "RHO_A3" => Ok(NamedState::RhoA3),
            "RHO_2MINUS" => x
                .map(NamedState::Rho2Minus)
                .ok_or_else(|| Error::Contract("RHO_2MINUS needs an x value".into())),
            "PSI_M_B" => Ok(NamedState::PsiMB),
            other => Err(Error::Contract(format!("unknown named state '{other}'"))),
        }
    }
}

impl fmt::Display for NamedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedState::W => f.write_str("W"),
            NamedState::WTilde => f.write_str("W_TILDE"),
            NamedState::RhoA1 => f.write_str("RHO_A1"),
            NamedState::RhoA2 => f.write_str("RHO_A2"),
            NamedState::RhoA3 => f.write_str("RHO_A3"),
            NamedState::Rho2Minus(x) => write!(f, "RHO_2MINUS({x})"),
            NamedState::PsiMB => f.write_str("PSI_M_B"),
        }
    }
}

pub fn w_vector() -> Vec<C64> {
    let a = 1.0 / 3f64.sqrt();
    superposition(&[("100", a), ("010", a), ("001", a)]).expect("well-formed kets")
}

pub fn w_tilde_vector() -> Vec<C64> {
    let a = 1.0 / 3f64.sqrt();
    superposition(&[("011", a), ("101", a), ("110", a)]).expect("well-formed kets")
}

/// The quoted type-B state `0.292(|1100>−|0011>) + 0.471(|1001>−|0110>) +
/// 0.439(|1010>−|0101>)`, renormalised to unit norm.
pub fn psi_m_b_vector() -> Vec<C64> {
    let v = superposition(&[
        ("1100", 0.292),
        ("0011", -0.292),
        ("1001", 0.471),
        ("0110", -0.471),
        ("1010", 0.439),
        ("0101", -0.439),
    ])
    .expect("well-formed kets");
    linalg::normalized(&v)
}

pub fn named_state(state: NamedState) -> Result<DensityMatrix> {
    let outer = QubitLabel::OUTER.to_vec();
    let vac = superposition(&[("000", 1.0)])?;
    match state {
        NamedState::W => DensityMatrix::from_pure(&w_vector(), outer),
        NamedState::WTilde => DensityMatrix::from_pure(&w_tilde_vector(), outer),
        NamedState::RhoA1 => DensityMatrix::from_pure(&vac, outer),
        NamedState::RhoA2 => DensityMatrix::mixture(&[(0.5, &w_vector()), (0.5, &vac)], outer),
        NamedState::RhoA3 => DensityMatrix::mixture(&[(0.5, &w_vector()), (0.5, &w_tilde_vector())], outer),
        NamedState::Rho2Minus(x) => Ok(rho2minus(x)?.rho),
        NamedState::PsiMB => DensityMatrix::from_pure(&psi_m_b_vector(), QubitLabel::ALL.to_vec()),
    }
}
