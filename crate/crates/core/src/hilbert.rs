//! Qubit labels, density matrices and the subsystem operations on them.
//!
//! Basis convention: a ket `|b_0 b_1 ... b_{n-1}>` over labels
//! `[l_0, l_1, ..., l_{n-1}]` has index `sum_k b_k 2^(n-1-k)`, so the first
//! label is the most significant bit. For the full star this is
//! `|σ_C σ_1 σ_2 σ_3> -> 8σ_C + 4σ_1 + 2σ_2 + σ_3`. `|0>` is spin down
//! (σ_z = -1) and `|1>` spin up.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, C64, ONE, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QubitLabel {
    C,
    S1,
    S2,
    S3,
}

impl QubitLabel {
    pub const ALL: [QubitLabel; 4] = [QubitLabel::C, QubitLabel::S1, QubitLabel::S2, QubitLabel::S3];
    pub const OUTER: [QubitLabel; 3] = [QubitLabel::S1, QubitLabel::S2, QubitLabel::S3];
}

impl fmt::Display for QubitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QubitLabel::C => "C",
            QubitLabel::S1 => "S1",
            QubitLabel::S2 => "S2",
            QubitLabel::S3 => "S3",
        })
    }
}

impl FromStr for QubitLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" | "c" => Ok(QubitLabel::C),
            "S1" | "s1" | "1" => Ok(QubitLabel::S1),
            "S2" | "s2" | "2" => Ok(QubitLabel::S2),
            "S3" | "s3" | "3" => Ok(QubitLabel::S3),
            other => Err(Error::Contract(format!("unknown qubit label '{other}'"))),
        }
    }
}

/// Single-qubit operators in the `(|0>, |1>) = (down, up)` basis.
pub mod pauli {
    use super::*;

    pub fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::from_diagonal(&[-1.0, 1.0])
    }

    /// `|1><0|`
    pub fn sigma_plus() -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(2);
        m[(1, 0)] = ONE;
        m
    }

    /// `|0><1|`
    pub fn sigma_minus() -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 1)] = ONE;
        m
    }

    pub fn sigma_x() -> ComplexMatrix {
        &sigma_plus() + &sigma_minus()
    }

    /// `i(σ_- - σ_+)`, i.e. `i|0><1| - i|1><0|` in this basis.
    pub fn sigma_y() -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 1)] = C64::new(0.0, 1.0);
        m[(1, 0)] = C64::new(0.0, -1.0);
        m
    }
}

/// Checks that `labels` is non-empty and strictly increasing.
fn check_canonical(labels: &[QubitLabel]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::InvalidSubset("empty label list".into()));
    }
    if labels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSubset(format!("labels {labels:?} are not in canonical order C < S1 < S2 < S3")));
    }
    Ok(())
}

/// Sorts and validates a subset of `labels`.
fn canonical_subset(subset: &[QubitLabel], labels: &[QubitLabel]) -> Result<Vec<QubitLabel>> {
    if subset.is_empty() {
        return Err(Error::InvalidSubset("empty subset".into()));
    }
    let mut sorted = subset.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSubset(format!("duplicate labels in {subset:?}")));
    }
    if let Some(&missing) = sorted.iter().find(|l| !labels.contains(l)) {
        return Err(Error::UnknownLabel(missing));
    }
    Ok(sorted)
}

/// Bit mask of `label` inside a register ordered as `labels`.
fn bit_of(label: QubitLabel, labels: &[QubitLabel]) -> Option<usize> {
    let n = labels.len();
    labels.iter().position(|&l| l == label).map(|k| 1usize << (n - 1 - k))
}

/// Index of a computational-basis ket written as a bit string, e.g. `"0101"`.
pub fn basis_index(bits: &str) -> Result<usize> {
    if bits.is_empty() || bits.len() > 8 {
        return Err(Error::Contract(format!("ket '{bits}' must have 1..=8 bits")));
    }
    bits.chars().try_fold(0usize, |acc, ch| match ch {
        '0' => Ok(acc << 1),
        '1' => Ok((acc << 1) | 1),
        _ => Err(Error::Contract(format!("ket '{bits}' contains a non-binary digit"))),
    })
}

/// Unnormalised superposition `sum amp |bits>`; all kets must have equal length.
pub fn superposition(terms: &[(&str, f64)]) -> Result<Vec<C64>> {
    let width = terms.first().map(|(k, _)| k.len()).ok_or_else(|| Error::Contract("empty superposition".into()))?;
    let mut v = vec![ZERO; 1 << width];
    for &(ket, amp) in terms {
        if ket.len() != width {
            return Err(Error::Contract(format!("ket '{ket}' does not have {width} bits")));
        }
        v[basis_index(ket)?] += C64::new(amp, 0.0);
    }
    Ok(v)
}

/// Hermitian, unit-trace, positive semidefinite operator over ordered qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    op: ComplexMatrix,
    labels: Vec<QubitLabel>,
}

impl DensityMatrix {
    pub const HERMITIAN_TOL: f64 = 1e-12;
    pub const TRACE_TOL: f64 = 1e-12;
    pub const PSD_TOL: f64 = 1e-10;

    /// Validates every density-matrix invariant.
    pub fn new(op: ComplexMatrix, labels: Vec<QubitLabel>) -> Result<Self> {
        check_canonical(&labels)?;
        if op.dim() != 1 << labels.len() {
            return Err(Error::DimensionMismatch { expected: 1 << labels.len(), actual: op.dim() });
        }
        if !op.is_finite() {
            return Err(Error::NonFinite("density matrix"));
        }
        let herm = op.hermiticity_deviation();
        if herm > Self::HERMITIAN_TOL {
            return Err(Error::InvalidDensity(format!("Hermiticity defect {herm:e}")));
        }
        let tr = op.trace();
        if (tr - ONE).norm() > Self::TRACE_TOL {
            return Err(Error::InvalidDensity(format!("trace {tr} differs from 1")));
        }
        let min = linalg::min_eigenvalue(&op)?;
        if min < -Self::PSD_TOL {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self { op, labels })
    }

    /// Skips the spectral checks; used where the construction guarantees them.
    pub(crate) fn from_trusted(op: ComplexMatrix, labels: Vec<QubitLabel>) -> Self {
        debug_assert_eq!(op.dim(), 1 << labels.len());
        Self { op, labels }
    }

    /// `|psi><psi| / <psi|psi>`
    pub fn from_pure(psi: &[C64], labels: Vec<QubitLabel>) -> Result<Self> {
        let norm = linalg::vector_norm(psi);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidDensity("zero or non-finite state vector".into()));
        }
        Self::new(ComplexMatrix::projector(&linalg::normalized(psi)), labels)
    }

    /// Convex combination of normalised pure states; weights are renormalised.
    pub fn mixture(terms: &[(f64, &[C64])], labels: Vec<QubitLabel>) -> Result<Self> {
        let total: f64 = terms.iter().map(|(w, _)| w).sum();
        if terms.is_empty() || total <= 0.0 || terms.iter().any(|(w, _)| *w < 0.0) {
            return Err(Error::InvalidDensity("mixture weights must be non-negative with positive sum".into()));
        }
        let dim = terms[0].1.len();
        if terms.iter().any(|(_, psi)| psi.len() != dim) {
            let actual = terms.iter().map(|t| t.1.len()).find(|&l| l != dim).unwrap_or(dim);
            return Err(Error::DimensionMismatch { expected: dim, actual });
        }
        let mut op = ComplexMatrix::zeros(dim);
        for (w, psi) in terms {
            op = &op + &ComplexMatrix::projector(&linalg::normalized(psi)).scale_real(w / total);
        }
        Self::new(op, labels)
    }

    pub fn op(&self) -> &ComplexMatrix {
        &self.op
    }

    pub fn into_op(self) -> ComplexMatrix {
        self.op
    }

    pub fn labels(&self) -> &[QubitLabel] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    pub fn purity(&self) -> f64 {
        (&self.op * &self.op).trace().re
    }

    /// `U ρ U^†` for a unitary `u` of matching dimension.
    pub fn conjugate(&self, u: &ComplexMatrix) -> Result<Self> {
        if u.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), actual: u.dim() });
        }
        let op = &(u * &self.op) * &u.adjoint();
        Self::new(op, self.labels.clone())
    }

    /// Tensor product; the two label sets must be disjoint and their
    /// concatenation canonical.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        check_canonical(&labels)?;
        Ok(Self::from_trusted(self.op.kron(&other.op), labels))
    }
}

/// Embeds a 2x2 operator at `site`, with identities on the other factors.
pub fn embed_single_site(op2: &ComplexMatrix, site: QubitLabel, labels: &[QubitLabel]) -> Result<ComplexMatrix> {
    if op2.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, actual: op2.dim() });
    }
    check_canonical(labels)?;
    let bit = bit_of(site, labels).ok_or(Error::UnknownLabel(site))?;
    let dim = 1usize << labels.len();
    Ok(ComplexMatrix::from_fn(dim, |r, c| {
        if (r & !bit) != (c & !bit) {
            ZERO
        } else {
            op2[(usize::from(r & bit != 0), usize::from(c & bit != 0))]
        }
    }))
}

/// Spreads the bits of a kept-subsystem index onto the full register.
fn scatter(index: usize, masks: &[usize]) -> usize {
    let k = masks.len();
    masks.iter().enumerate().fold(0, |acc, (pos, &mask)| if index & (1 << (k - 1 - pos)) != 0 { acc | mask } else { acc })
}

/// Traces out every label not in `keep`.
pub fn partial_trace(rho: &DensityMatrix, keep: &[QubitLabel]) -> Result<DensityMatrix> {
    let keep = canonical_subset(keep, rho.labels())?;
    let labels = rho.labels();
    let keep_masks: Vec<usize> = keep.iter().map(|&l| bit_of(l, labels).unwrap()).collect();
    let traced: Vec<QubitLabel> = labels.iter().copied().filter(|l| !keep.contains(l)).collect();
    let traced_masks: Vec<usize> = traced.iter().map(|&l| bit_of(l, labels).unwrap()).collect();

    let out_dim = 1usize << keep.len();
    let env_dim = 1usize << traced.len();
    let rows: Vec<usize> = (0..out_dim).map(|i| scatter(i, &keep_masks)).collect();
    let envs: Vec<usize> = (0..env_dim).map(|e| scatter(e, &traced_masks)).collect();
    let op = ComplexMatrix::from_fn(out_dim, |r, c| envs.iter().map(|&e| rho.op()[(rows[r] | e, rows[c] | e)]).sum());
    Ok(DensityMatrix::from_trusted(op, keep))
}

/// Transposes the indices of the labels in `part`, leaving the rest alone.
pub fn partial_transpose(rho: &DensityMatrix, part: &[QubitLabel]) -> Result<ComplexMatrix> {
    let part = canonical_subset(part, rho.labels())?;
    if part.len() == rho.labels().len() {
        return Err(Error::InvalidSubset("partial transpose needs a proper subset".into()));
    }
    Ok(partial_transpose_op(rho.op(), &part, rho.labels()))
}

/// Index-level partial transpose of any operator on `labels`.
pub(crate) fn partial_transpose_op(op: &ComplexMatrix, part: &[QubitLabel], labels: &[QubitLabel]) -> ComplexMatrix {
    let mask = part.iter().filter_map(|&l| bit_of(l, labels)).fold(0, |m, b| m | b);
    ComplexMatrix::from_fn(op.dim(), |r, c| {
        let r2 = (r & !mask) | (c & mask);
        let c2 = (c & !mask) | (r & mask);
        op[(r2, c2)]
    })
}

/// Basis permutation induced by relabelling qubits: the returned vector
/// maps each basis index to the index of the same bit pattern after every
/// label `l` has been moved to the position of `mapping(l)`.
pub fn relabel_permutation(labels: &[QubitLabel], mapping: impl Fn(QubitLabel) -> QubitLabel) -> Result<Vec<usize>> {
    check_canonical(labels)?;
    let targets: Vec<usize> = labels
        .iter()
        .map(|&l| bit_of(mapping(l), labels).ok_or(Error::UnknownLabel(mapping(l))))
        .collect::<Result<_>>()?;
    let mut seen = 0usize;
    for &t in &targets {
        if seen & t != 0 {
            return Err(Error::Contract("relabelling is not a bijection".into()));
        }
        seen |= t;
    }
    let sources: Vec<usize> = labels.iter().map(|&l| bit_of(l, labels).unwrap()).collect();
    Ok((0..1usize << labels.len())
        .map(|i| sources.iter().zip(&targets).fold(0, |acc, (&s, &t)| if i & s != 0 { acc | t } else { acc }))
        .collect())
}

/// `½ ||a - b||_1` between two operators on the same space.
pub fn trace_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    Ok(0.5 * linalg::trace_norm_hermitian(&(a - b))?)
}
