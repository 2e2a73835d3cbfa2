//! Dense complex matrices, a cyclic Jacobi eigensolver for Hermitian input,
//! spectral matrix functions and a three-real-root cubic solver.
//!
//! Everything here is sized for the 16-dimensional spin-star Hilbert space;
//! nothing is blocked or vectorised.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// `tol_abs + tol_rel * scale` comparison used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub const fn new(abs: f64, rel: f64) -> Self {
        Self { abs, rel }
    }

    pub fn bound(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale
    }

    pub fn allows(&self, diff: f64, scale: f64) -> bool {
        diff <= self.bound(scale)
    }
}

/// Square, row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from rows; fails unless the rows form a square array.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let dim = rows.len();
        for row in rows {
            if row.len() != dim {
                return Err(Error::NotSquare { rows: dim, cols: row.len() });
            }
        }
        Ok(Self { dim, data: rows.iter().flatten().copied().collect() })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<C64>> =
            rows.iter().map(|r| r.iter().map(|&v| C64::new(v, 0.0)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(d, 0.0);
        }
        m
    }

    /// `|a><b|`
    pub fn outer(a: &[C64], b: &[C64]) -> Self {
        assert_eq!(a.len(), b.len(), "outer product of vectors with different lengths");
        Self::from_fn(a.len(), |r, c| a[r] * b[c].conj())
    }

    pub fn projector(v: &[C64]) -> Self {
        Self::outer(v, v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)])
    }

    pub fn conj(&self) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry-wise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// max |A_jk - conj(A_kj)|
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for r in 0..self.dim {
            for c in r..self.dim {
                dev = dev.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z * s).collect() }
    }

    /// Kronecker product; `self` supplies the most significant index.
    pub fn kron(&self, other: &Self) -> Self {
        let n = other.dim;
        Self::from_fn(self.dim * n, |r, c| self[(r / n, c / n)] * other[(r % n, c % n)])
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|r| self.data[r * self.dim..(r + 1) * self.dim].iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `A B - B A`
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Conjugates `self` by a basis permutation: the result maps basis
    /// state `perm[i]` the way `self` maps `i`.
    pub fn permute_basis(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dim);
        let mut out = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out[(perm[r], perm[c])] = self[(r, c)];
            }
        }
        out
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.dim + c]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix product dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == ZERO {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * rhs.data[k * n + c];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix sum dimension mismatch");
        ComplexMatrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix difference dimension mismatch");
        ComplexMatrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|c| {
                    let z = self[(r, c)];
                    format!("{:+.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `<a|b>`
pub fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn vector_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn normalized(v: &[C64]) -> Vec<C64> {
    let n = vector_norm(v);
    v.iter().map(|z| z / n).collect()
}

/// Eigenvalues sorted ascending, each paired with a unit eigenvector.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    values: Vec<f64>,
    vectors: Vec<Vec<C64>>,
}

impl EigenSystem {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &[Vec<C64>] {
        &self.vectors
    }

    pub fn vector(&self, k: usize) -> &[C64] {
        &self.vectors[k]
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn ground_energy(&self) -> f64 {
        self.values[0]
    }

    /// E1 - E0 over the full spectrum (zero when the ground level is degenerate).
    pub fn gap(&self) -> f64 {
        self.values[1] - self.values[0]
    }

    /// Number of levels within `tol` of the lowest one.
    pub fn ground_degeneracy(&self, tol: f64) -> usize {
        let e0 = self.values[0];
        self.values.iter().take_while(|&&e| e - e0 <= tol).count()
    }

    /// Sum of `v_k v_k^†` over the given level indices.
    pub fn projector(&self, levels: impl IntoIterator<Item = usize>) -> ComplexMatrix {
        let n = self.dim();
        let mut p = ComplexMatrix::zeros(n);
        for k in levels {
            let v = &self.vectors[k];
            for r in 0..n {
                for c in 0..n {
                    p[(r, c)] += v[r] * v[c].conj();
                }
            }
        }
        p
    }

    /// Groups level indices into clusters whose neighbouring eigenvalues
    /// differ by at most `tol`.
    pub fn clusters(&self, tol: f64) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (k, &e) in self.values.iter().enumerate() {
            match out.last_mut() {
                Some(last) if e - self.values[*last.last().unwrap()] <= tol => last.push(k),
                _ => out.push(vec![k]),
            }
        }
        out
    }
}

/// Tunables for [`eigh_with`].
#[derive(Debug, Clone, Copy)]
pub struct EighConfig {
    /// Allowed Hermiticity defect, scaled by the largest entry.
    pub hermitian_tol: Tolerance,
    /// Stop once the off-diagonal Frobenius norm falls below `convergence * ||A||_F`.
    pub convergence: f64,
    pub max_sweeps: usize,
}

impl Default for EighConfig {
    fn default() -> Self {
        Self { hermitian_tol: Tolerance::new(1e-12, 1e-12), convergence: 1e-13, max_sweeps: 64 }
    }
}

pub fn eigh(a: &ComplexMatrix) -> Result<EigenSystem> {
    eigh_with(a, &EighConfig::default())
}

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot `a_pq`, then applies a
/// real Givens rotation to the resulting real symmetric 2x2 block. The
/// accumulated unitary holds the eigenvectors in its columns.
pub fn eigh_with(a: &ComplexMatrix, config: &EighConfig) -> Result<EigenSystem> {
    if !a.is_finite() {
        return Err(Error::NonFinite("eigensolver input"));
    }
    let deviation = a.hermiticity_deviation();
    if !config.hermitian_tol.allows(deviation, a.max_abs()) {
        return Err(Error::NotHermitian { deviation });
    }

    let n = a.dim();
    // Work on the exactly Hermitian part.
    let mut m = ComplexMatrix::from_fn(n, |r, c| 0.5 * (a[(r, c)] + a[(c, r)].conj()));
    for i in 0..n {
        m[(i, i)] = C64::new(m[(i, i)].re, 0.0);
    }
    let mut v = ComplexMatrix::identity(n);
    let threshold = config.convergence * m.frobenius_norm();

    let mut converged = false;
    let mut off = off_diagonal_norm(&m);
    for _ in 0..config.max_sweeps {
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
        off = off_diagonal_norm(&m);
    }
    if !converged && off > threshold {
        return Err(Error::NoConvergence { sweeps: config.max_sweeps, residual: off });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re).then(i.cmp(&j)));
    let values = order.iter().map(|&k| m[(k, k)].re).collect();
    let vectors = order.iter().map(|&k| (0..n).map(|r| v[(r, k)]).collect()).collect();
    Ok(EigenSystem { values, vectors })
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.dim();
    let mut s = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += m[(r, c)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let g = m[(p, q)];
    let mag = g.norm();
    if mag == 0.0 {
        return;
    }
    let phase = g / mag;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = m.dim();

    // Columns: A <- A U with U = diag(1, conj(phase)) * [[c, s], [-s, c]].
    let sp = phase.conj() * s;
    let cp = phase.conj() * c;
    for k in 0..n {
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        m[(k, p)] = akp * c - akq * sp;
        m[(k, q)] = akp * s + akq * cp;
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * sp;
        v[(k, q)] = vkp * s + vkq * cp;
    }
    // Rows: A <- U^† A.
    let se = phase * s;
    let ce = phase * c;
    for k in 0..n {
        let apk = m[(p, k)];
        let aqk = m[(q, k)];
        m[(p, k)] = apk * c - aqk * se;
        m[(q, k)] = apk * s + aqk * ce;
    }
    m[(p, q)] = ZERO;
    m[(q, p)] = ZERO;
    m[(p, p)] = C64::new(app - t * mag, 0.0);
    m[(q, q)] = C64::new(aqq + t * mag, 0.0);
}

/// `sum_k f(lambda_k) v_k v_k^†`
pub fn spectral_map(e: &EigenSystem, f: impl Fn(f64) -> f64) -> Result<ComplexMatrix> {
    let n = e.dim();
    let mut out = ComplexMatrix::zeros(n);
    for (lambda, v) in e.values.iter().zip(&e.vectors) {
        let w = f(*lambda);
        if !w.is_finite() {
            return Err(Error::NonFinite("spectral map"));
        }
        if w == 0.0 {
            continue;
        }
        for r in 0..n {
            let vr = v[r] * w;
            for c in 0..n {
                out[(r, c)] += vr * v[c].conj();
            }
        }
    }
    Ok(out)
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
pub fn trace_norm_hermitian(a: &ComplexMatrix) -> Result<f64> {
    Ok(eigh(a)?.values.iter().map(|v| v.abs()).sum())
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(a: &ComplexMatrix) -> Result<f64> {
    Ok(eigh(a)?.values[0])
}

/// Real roots of `c0 + c1 λ + c2 λ² + c3 λ³`, ascending.
///
/// Uses the trigonometric form of the depressed cubic, followed by Newton
/// polishing against the original coefficients. A complex-conjugate pair is
/// reported as [`Error::ComplexRoots`].
pub fn cubic_real_roots(c0: f64, c1: f64, c2: f64, c3: f64) -> Result<[f64; 3]> {
    if ![c0, c1, c2, c3].iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite("cubic coefficients"));
    }
    if c3 == 0.0 {
        return Err(Error::DegenerateCubic);
    }
    let a = c2 / c3;
    let b = c1 / c3;
    let c = c0 / c3;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    let scale = a.abs().max(b.abs().sqrt()).max(c.abs().cbrt()).max(f64::MIN_POSITIVE);
    let discriminant = -(4.0 * p * p * p + 27.0 * q * q);

    let mut roots = if p.abs() <= 1e-14 * scale * scale {
        if q.abs() <= 1e-14 * scale * scale * scale {
            [shift; 3]
        } else {
            return Err(Error::ComplexRoots { discriminant });
        }
    } else {
        if p > 0.0 {
            return Err(Error::ComplexRoots { discriminant });
        }
        let arg = 1.5 * q / p * (-3.0 / p).sqrt();
        if arg.abs() > 1.0 + 1e-9 {
            return Err(Error::ComplexRoots { discriminant });
        }
        let phi = arg.clamp(-1.0, 1.0).acos() / 3.0;
        let m = 2.0 * (-p / 3.0).sqrt();
        [0.0, 1.0, 2.0].map(|k| m * (phi - 2.0 * PI * k / 3.0).cos() + shift)
    };

    let poly = |x: f64| ((c3 * x + c2) * x + c1) * x + c0;
    let deriv = |x: f64| (3.0 * c3 * x + 2.0 * c2) * x + c1;
    for r in roots.iter_mut() {
        for _ in 0..4 {
            let fx = poly(*r);
            let d = deriv(*r);
            if fx == 0.0 || d == 0.0 {
                break;
            }
            let next = *r - fx / d;
            if poly(next).abs() < fx.abs() {
                *r = next;
            } else {
                break;
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}
