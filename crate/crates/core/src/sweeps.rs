//! Parameter grids over `(c, x, t)`, level-crossing location, the negativity
//! maximum search and the data behind each figure.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::entanglement::{self, closed_form_negativity, concurrence, rho2minus, tripartite_negativity};
use crate::error::{Error, Result};
use crate::hilbert::{partial_trace, QubitLabel};
use crate::linalg;
use crate::model::{build_hamiltonian, Scheme, SpinStarParams};
use crate::thermal::{thermal_state_from_spectrum, Temperature, DEFAULT_DEGENERACY_TOL};

/// Temperature used for "low temperature" curves.
pub const LOW_T: f64 = 0.01;
pub const DEFAULT_CROSSING_TOL: f64 = 1e-9;
/// Samples of the coarse scan preceding crossing bisection.
pub const CROSSING_SCAN_POINTS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    C,
    X,
    T,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::C => "c",
            Axis::X => "x",
            Axis::T => "t",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c" | "C" => Ok(Axis::C),
            "x" | "X" => Ok(Axis::X),
            "t" | "T" => Ok(Axis::T),
            other => Err(Error::Contract(format!("unknown axis '{other}' (expected c, x or t)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Observable {
    N123,
    N1_23,
    N2_13,
    N3_12,
    C12,
    C13,
    C23,
    E0,
    E1,
    Gap,
    Purity,
}

impl Observable {
    pub const ALL: [Observable; 11] = [
        Observable::N123,
        Observable::N1_23,
        Observable::N2_13,
        Observable::N3_12,
        Observable::C12,
        Observable::C13,
        Observable::C23,
        Observable::E0,
        Observable::E1,
        Observable::Gap,
        Observable::Purity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Observable::N123 => "N123",
            Observable::N1_23 => "N1_23",
            Observable::N2_13 => "N2_13",
            Observable::N3_12 => "N3_12",
            Observable::C12 => "C12",
            Observable::C13 => "C13",
            Observable::C23 => "C23",
            Observable::E0 => "E0",
            Observable::E1 => "E1",
            Observable::Gap => "GAP",
            Observable::Purity => "PURITY",
        }
    }

    /// Parses a comma-separated list such as `N123,C12,GAP`.
    pub fn parse_list(s: &str) -> Result<Vec<Observable>> {
        let list = s.split(',').map(|t| t.trim().parse()).collect::<Result<Vec<_>>>()?;
        if list.is_empty() {
            return Err(Error::Contract("empty observable list".into()));
        }
        Ok(list)
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Observable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Observable::ALL
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Contract(format!("unknown observable '{s}'")))
    }
}

/// Linearly spaced axis, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec {
    pub axis: Axis,
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl AxisSpec {
    pub fn new(axis: Axis, min: f64, max: f64, points: usize) -> Self {
        Self { axis, min, max, points }
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| if i + 1 == n { self.max } else { self.min + (self.max - self.min) * i as f64 / (n - 1) as f64 })
            .collect()
    }
}

impl FromStr for AxisSpec {
    type Err = Error;

    /// `name:min:max:N`
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(Error::Contract(format!("axis '{s}' is not of the form name:min:max:N")));
        }
        let num = |p: &str| p.parse::<f64>().map_err(|_| Error::Contract(format!("bad number '{p}' in axis '{s}'")));
        let points = parts[3].parse::<usize>().map_err(|_| Error::Contract(format!("bad point count in axis '{s}'")))?;
        Ok(Self::new(parts[0].parse()?, num(parts[1])?, num(parts[2])?, points))
    }
}

/// A single `(c, x, t)` parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub c: f64,
    pub x: f64,
    pub t: f64,
}

impl Point {
    pub fn new(c: f64, x: f64, t: f64) -> Self {
        Self { c, x, t }
    }

    fn with(mut self, axis: Axis, v: f64) -> Self {
        match axis {
            Axis::C => self.c = v,
            Axis::X => self.x = v,
            Axis::T => self.t = v,
        }
        self
    }

    fn get(&self, axis: Axis) -> f64 {
        match axis {
            Axis::C => self.c,
            Axis::X => self.x,
            Axis::T => self.t,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={}, x={}, t={}", self.c, self.x, self.t)
    }
}

/// Grid description. Axes not swept take their value from `fixed`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub scheme: Scheme,
    pub omega0: f64,
    pub fixed: Point,
    pub axes: Vec<AxisSpec>,
    pub observables: Vec<Observable>,
}

impl SweepSpec {
    pub fn new(scheme: Scheme, fixed: Point, axes: Vec<AxisSpec>, observables: Vec<Observable>) -> Self {
        Self { scheme, omega0: 1.0, fixed, axes, observables }
    }

    pub fn with_omega0(mut self, omega0: f64) -> Self {
        self.omega0 = omega0;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.axes.len() > 2 {
            return Err(Error::Contract(format!("at most two swept axes, got {}", self.axes.len())));
        }
        if self.axes.len() == 2 && self.axes[0].axis == self.axes[1].axis {
            return Err(Error::Contract(format!("axis '{}' swept twice", self.axes[0].axis)));
        }
        if self.observables.is_empty() {
            return Err(Error::Contract("no observables requested".into()));
        }
        if !(self.omega0.is_finite() && self.omega0 > 0.0) {
            return Err(Error::Domain(format!("omega0 must be > 0, got {}", self.omega0)));
        }
        for a in &self.axes {
            if a.points < 2 {
                return Err(Error::Contract(format!("axis '{}' needs at least 2 points", a.axis)));
            }
            if !(a.min.is_finite() && a.max.is_finite()) || a.min > a.max {
                return Err(Error::Contract(format!("axis '{}' range [{}, {}] is invalid", a.axis, a.min, a.max)));
            }
            if a.axis == Axis::X && self.scheme == Scheme::Homogeneous {
                return Err(Error::Contract("the homogeneous scheme has no x axis".into()));
            }
        }
        let (lo, hi) = (self.corner(|a| a.min), self.corner(|a| a.max));
        for p in [lo, hi] {
            check_point(self.scheme, p)?;
        }
        Ok(())
    }

    fn corner(&self, pick: impl Fn(&AxisSpec) -> f64) -> Point {
        self.axes.iter().fold(self.fixed, |p, a| p.with(a.axis, pick(a)))
    }

    /// Grid points in row-major order, first axis outermost.
    pub fn points(&self) -> Vec<Point> {
        match self.axes.as_slice() {
            [] => vec![self.fixed],
            [a] => a.values().into_iter().map(|v| self.fixed.with(a.axis, v)).collect(),
            [a, b, ..] => {
                let bv = b.values();
                a.values()
                    .into_iter()
                    .flat_map(|u| bv.iter().map(move |&v| (u, v)))
                    .map(|(u, v)| self.fixed.with(a.axis, u).with(b.axis, v))
                    .collect()
            }
        }
    }
}

fn check_point(scheme: Scheme, p: Point) -> Result<()> {
    SpinStarParams::new(scheme, p.c, p.x)?;
    Temperature::new(p.t)?;
    Ok(())
}

/// Evaluated grid with column names (swept axes first, then observables).
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub spec: SweepSpec,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub provenance: Vec<String>,
}

impl SweepTable {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }
}

/// Observables at a single point. Energies are scaled by `omega0`.
pub fn evaluate_point(scheme: Scheme, omega0: f64, p: Point, observables: &[Observable]) -> Result<Vec<f64>> {
    use QubitLabel::*;
    let params = SpinStarParams::new(scheme, p.c, p.x)?;
    let spectrum = linalg::eigh(&build_hamiltonian(&params))?;
    let full = thermal_state_from_spectrum(&spectrum, Temperature::new(p.t)?, QubitLabel::ALL.to_vec())?;
    let needs_outer = observables
        .iter()
        .any(|o| !matches!(o, Observable::E0 | Observable::E1 | Observable::Gap | Observable::Purity));
    let outer = if needs_outer { Some(partial_trace(&full, &QubitLabel::OUTER)?) } else { None };
    let needs_negativity = observables
        .iter()
        .any(|o| matches!(o, Observable::N123 | Observable::N1_23 | Observable::N2_13 | Observable::N3_12));
    let neg = match (&outer, needs_negativity) {
        (Some(r), true) => Some(tripartite_negativity(r)?),
        _ => None,
    };
    let pair = |a: QubitLabel, b: QubitLabel| -> Result<f64> {
        concurrence(&partial_trace(outer.as_ref().expect("outer state"), &[a, b])?)
    };
    let mut out = Vec::with_capacity(observables.len());
    for &o in observables {
        let v = match o {
            Observable::N123 => neg.expect("negativities").n123,
            Observable::N1_23 => neg.expect("negativities").n1_23,
            Observable::N2_13 => neg.expect("negativities").n2_13,
            Observable::N3_12 => neg.expect("negativities").n3_12,
            Observable::C12 => pair(S1, S2)?,
            Observable::C13 => pair(S1, S3)?,
            Observable::C23 => pair(S2, S3)?,
            Observable::E0 => omega0 * spectrum.values()[0],
            Observable::E1 => omega0 * spectrum.values()[1],
            Observable::Gap => omega0 * spectrum.gap(),
            Observable::Purity => full.purity(),
        };
        out.push(v);
    }
    if let Some(i) = out.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(observables[i].name()));
    }
    Ok(out)
}

/// Tripartite negativity of the outer spins in the thermal state.
pub fn n123_at(scheme: Scheme, p: Point) -> Result<f64> {
    Ok(evaluate_point(scheme, 1.0, p, &[Observable::N123])?[0])
}

fn provenance(spec: &SweepSpec) -> Vec<String> {
    let fixed = [Axis::C, Axis::X, Axis::T]
        .into_iter()
        .filter(|&ax| !spec.axes.iter().any(|a| a.axis == ax))
        .map(|ax| format!(" {ax}={}", spec.fixed.get(ax)))
        .collect::<String>();
    let mut lines = vec![
        format!("spinstar {}", env!("CARGO_PKG_VERSION")),
        format!("scheme={} omega0={}{fixed}", spec.scheme, spec.omega0),
    ];
    for a in &spec.axes {
        lines.push(format!("axis {}:{}:{}:{}", a.axis, a.min, a.max, a.points));
    }
    lines.push("negativity convention: N = ||rho^T_I||_1 - 1 (trace norm of the partial transpose minus one; Bell state = 1)".into());
    lines.push(format!(
        "units: c, t and energies in units of omega0; t=0 means the equal-weight ground-manifold state (degeneracy tol {DEFAULT_DEGENERACY_TOL:e})"
    ));
    lines
}

fn gather<T: Send>(points: &[Point], f: impl Fn(Point) -> Result<T> + Sync + Send) -> Result<Vec<T>> {
    let results: Vec<Result<T>> = points.par_iter().map(|&p| f(p)).collect();
    results
        .into_iter()
        .zip(points)
        .map(|(r, p)| r.map_err(|e| Error::SweepPoint { coords: p.to_string(), source: Box::new(e) }))
        .collect()
}

pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate()?;
    let points = spec.points();
    let values = gather(&points, |p| evaluate_point(spec.scheme, spec.omega0, p, &spec.observables))?;
    let columns = spec
        .axes
        .iter()
        .map(|a| a.axis.name().to_string())
        .chain(spec.observables.iter().map(|o| o.name().to_string()))
        .collect();
    let rows = points
        .iter()
        .zip(values)
        .map(|(p, v)| spec.axes.iter().map(|a| p.get(a.axis)).chain(v).collect())
        .collect();
    Ok(SweepTable { spec: spec.clone(), columns, rows, provenance: provenance(spec) })
}

struct GroundSample {
    at: f64,
    projector: linalg::ComplexMatrix,
    rank: usize,
    vector: Vec<linalg::C64>,
    gap: f64,
}

fn ground_sample(scheme: Scheme, fixed: Point, axis: Axis, v: f64) -> Result<GroundSample> {
    let p = fixed.with(axis, v);
    let e = linalg::eigh(&build_hamiltonian(&SpinStarParams::new(scheme, p.c, p.x)?))?;
    let rank = e.ground_degeneracy(DEFAULT_DEGENERACY_TOL);
    Ok(GroundSample { at: v, projector: e.projector(0..rank), rank, vector: e.vector(0).to_vec(), gap: e.gap() })
}

/// Normalised overlap of two ground manifolds.
fn manifold_overlap(a: &GroundSample, b: &GroundSample) -> f64 {
    (&a.projector * &b.projector).trace().re / a.rank.max(b.rank) as f64
}

fn vector_overlap(a: &GroundSample, b: &GroundSample) -> f64 {
    linalg::inner(&a.vector, &b.vector).norm_sqr()
}

/// Points in `bracket` where the ground level changes character.
///
/// A coarse scan flags neighbouring samples with nearly orthogonal ground
/// manifolds; each flagged interval is bisected, keeping the end whose ground
/// manifold the midpoint resembles. A point is kept only if its gap
/// `E_1 − E_0` (units of ω₀) is at most `tol`.
pub fn find_level_crossing(scheme: Scheme, fixed: Point, axis: Axis, bracket: (f64, f64), tol: f64) -> Result<Vec<f64>> {
    if axis == Axis::T {
        return Err(Error::Contract("level crossings are located along c or x, not t".into()));
    }
    if axis == Axis::X && scheme == Scheme::Homogeneous {
        return Err(Error::Contract("the homogeneous scheme has no x axis".into()));
    }
    let (lo, hi) = bracket;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Contract(format!("invalid bracket [{lo}, {hi}]")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Contract(format!("tolerance must be > 0, got {tol}")));
    }
    check_point(scheme, fixed.with(axis, lo))?;

    let grid = AxisSpec::new(axis, lo, hi, CROSSING_SCAN_POINTS).values();
    let samples = grid
        .par_iter()
        .map(|&v| ground_sample(scheme, fixed, axis, v))
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let mut found = Vec::new();
    for w in samples.windows(2) {
        if manifold_overlap(&w[0], &w[1]) >= 0.5 {
            continue;
        }
        let (mut a, mut b) = (ground_sample(scheme, fixed, axis, w[0].at)?, ground_sample(scheme, fixed, axis, w[1].at)?);
        for _ in 0..200 {
            let mid = 0.5 * (a.at + b.at);
            if mid <= a.at || mid >= b.at {
                break;
            }
            let m = ground_sample(scheme, fixed, axis, mid)?;
            if vector_overlap(&a, &m) >= vector_overlap(&b, &m) {
                a = m;
            } else {
                b = m;
            }
        }
        let at = 0.5 * (a.at + b.at);
        if ground_sample(scheme, fixed, axis, at)?.gap <= tol {
            found.push(at);
        }
    }
    found.sort_by(f64::total_cmp);
    Ok(found)
}

/// Samples checked for unimodality before the golden-section refinement.
pub const MAXIMUM_SCAN_POINTS: usize = 65;

/// Location and value of the maximum of `N123(x)` at fixed `(c, t)`.
///
/// The bracket is sampled first; an interior sample lying below both ends
/// raises [`Error::NotUnimodal`]. Golden-section search then refines
/// around the best sample to `1e-6` of the bracket width.
pub fn find_negativity_maximum(scheme: Scheme, c: f64, t: f64, bracket: (f64, f64)) -> Result<(f64, f64)> {
    if scheme == Scheme::Homogeneous {
        return Err(Error::Contract("negativity maximum over x needs scheme A or B".into()));
    }
    let (lo, hi) = bracket;
    if !(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo < hi) {
        return Err(Error::Contract(format!("invalid bracket [{lo}, {hi}]")));
    }
    let f = |x: f64| n123_at(scheme, Point::new(c, x, t));
    check_point(scheme, Point::new(c, lo, t))?;

    let xs = AxisSpec::new(Axis::X, lo, hi, MAXIMUM_SCAN_POINTS).values();
    let ys = gather(&xs.iter().map(|&x| Point::new(c, x, t)).collect::<Vec<_>>(), |p| f(p.x))?;
    let (ya, yb) = (ys[0], ys[ys.len() - 1]);
    let floor = ya.min(yb);
    if let Some(i) = (1..ys.len() - 1).find(|&i| ys[i] < floor - 1e-12) {
        return Err(Error::NotUnimodal { lo, hi, at: xs[i], interior: ys[i] });
    }
    let best = (0..ys.len()).fold(0, |b, i| if ys[i] > ys[b] { i } else { b });
    let mut a = xs[best.saturating_sub(1)];
    let mut b = xs[(best + 1).min(xs.len() - 1)];

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let target = 1e-6 * (hi - lo);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    while b - a > target {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2)?;
        }
    }
    let xm = 0.5 * (a + b);
    let candidates = [(xm, f(xm)?), (xs[best], ys[best])];
    let (x_best, n_best) = candidates.into_iter().fold((f64::NAN, f64::NEG_INFINITY), |acc, c| if c.1 > acc.1 { c } else { acc });
    Ok((x_best, n_best))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    NegHom,
    CCost,
    LowT,
    UnhomACCost,
    Psi2Minus,
    Concurrences,
    UnhomAXCost,
    UnhomATCost,
}

impl FigureId {
    pub const ALL: [FigureId; 8] = [
        FigureId::NegHom,
        FigureId::CCost,
        FigureId::LowT,
        FigureId::UnhomACCost,
        FigureId::Psi2Minus,
        FigureId::Concurrences,
        FigureId::UnhomAXCost,
        FigureId::UnhomATCost,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::NegHom => "neghom",
            FigureId::CCost => "ccost",
            FigureId::LowT => "lowt",
            FigureId::UnhomACCost => "unhom-a-ccost",
            FigureId::Psi2Minus => "psi2minus",
            FigureId::Concurrences => "concurrences",
            FigureId::UnhomAXCost => "unhom-a-xcost",
            FigureId::UnhomATCost => "unhom-a-tcost",
        }
    }

    pub fn is_surface(self) -> bool {
        matches!(self, FigureId::NegHom | FigureId::UnhomACCost | FigureId::UnhomAXCost | FigureId::UnhomATCost)
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Contract(format!("unknown figure id '{s}'")))
    }
}

/// Resolution and coupling overrides for [`reproduce_figure`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureOptions {
    /// Points per axis on surfaces.
    pub surface_points: usize,
    pub curve_points: usize,
    /// Replaces the fixed coupling of figures that have one.
    pub c: Option<f64>,
}

impl Default for FigureOptions {
    fn default() -> Self {
        Self { surface_points: 200, curve_points: 400, c: None }
    }
}

pub const SURFACE_C: (f64, f64) = (0.0, 10.0);
pub const SURFACE_X: (f64, f64) = (0.1, 8.0);
pub const SURFACE_T: (f64, f64) = (0.01, 2.0);
pub const CCOST_T: (f64, f64) = (0.01, 3.0);

pub fn figure_spec(id: FigureId, opts: &FigureOptions) -> SweepSpec {
    let s = opts.surface_points;
    let n = opts.curve_points;
    let c6 = opts.c.unwrap_or(6.0);
    let ax = |a: Axis, r: (f64, f64), k: usize| AxisSpec::new(a, r.0, r.1, k);
    let obs = vec![Observable::N123];
    match id {
        FigureId::NegHom => SweepSpec::new(
            Scheme::Homogeneous,
            Point::new(0.0, 1.0, 0.0),
            vec![ax(Axis::C, SURFACE_C, s), ax(Axis::T, SURFACE_T, s)],
            obs,
        ),
        FigureId::CCost => SweepSpec::new(
            Scheme::Homogeneous,
            Point::new(opts.c.unwrap_or(10.0), 1.0, 0.0),
            vec![ax(Axis::T, CCOST_T, n)],
            obs,
        ),
        FigureId::LowT => SweepSpec::new(Scheme::Homogeneous, Point::new(0.0, 1.0, LOW_T), vec![ax(Axis::C, SURFACE_C, n)], obs),
        FigureId::UnhomACCost => SweepSpec::new(
            Scheme::TypeA,
            Point::new(c6, 1.0, 0.0),
            vec![ax(Axis::X, SURFACE_X, s), ax(Axis::T, SURFACE_T, s)],
            obs,
        ),
        FigureId::Psi2Minus => SweepSpec::new(Scheme::TypeA, Point::new(c6, 1.0, LOW_T), vec![ax(Axis::X, SURFACE_X, n)], obs),
        FigureId::Concurrences => SweepSpec::new(
            Scheme::TypeA,
            Point::new(c6, 1.0, LOW_T),
            vec![ax(Axis::X, SURFACE_X, n)],
            vec![Observable::N123, Observable::C12, Observable::C13, Observable::C23],
        ),
        FigureId::UnhomAXCost => SweepSpec::new(
            Scheme::TypeA,
            Point::new(0.0, 3.0, 0.0),
            vec![ax(Axis::C, SURFACE_C, s), ax(Axis::T, SURFACE_T, s)],
            obs,
        ),
        FigureId::UnhomATCost => SweepSpec::new(
            Scheme::TypeA,
            Point::new(0.0, 1.0, LOW_T),
            vec![ax(Axis::C, SURFACE_C, s), ax(Axis::X, SURFACE_X, s)],
            obs,
        ),
    }
}

/// Data behind a figure.
///
/// `psi2minus` has columns `x, N_CLOSED, N123` (closed form of ρ^{2−}(x),
/// thermal state). `concurrences` has `x, C12, C13, C23, N123` for ρ^{2−}(x)
/// followed by the thermal-state columns with a `_THERMAL` suffix.
pub fn reproduce_figure(id: FigureId, opts: &FigureOptions) -> Result<SweepTable> {
    let spec = figure_spec(id, opts);
    let mut table = run_sweep(&spec)?;
    table.provenance.insert(1, format!("figure {id}"));
    match id {
        FigureId::Psi2Minus => {
            let xs = table.column("x").expect("x axis");
            let closed = xs.iter().map(|&x| closed_form_negativity(x)).collect::<Result<Vec<_>>>()?;
            for (row, n) in table.rows.iter_mut().zip(closed) {
                row.insert(1, n);
            }
            table.columns.insert(1, "N_CLOSED".into());
        }
        FigureId::Concurrences => {
            let xs = table.column("x").expect("x axis");
            let family = gather(&xs.iter().map(|&x| Point::new(0.0, x, 0.0)).collect::<Vec<_>>(), |p| rho2minus_observables(p.x))?;
            for c in table.columns.iter_mut().skip(1) {
                c.push_str("_THERMAL");
            }
            for (row, f) in table.rows.iter_mut().zip(family) {
                let thermal = row.split_off(1);
                row.extend(f);
                row.extend(thermal);
            }
            let mut cols = vec!["x".to_string(), "C12".into(), "C13".into(), "C23".into(), "N123".into()];
            cols.extend(table.columns.drain(1..));
            table.columns = cols;
        }
        _ => {}
    }
    Ok(table)
}

/// `[C12, C13, C23, N123]` of ρ^{2−}(x).
pub fn rho2minus_observables(x: f64) -> Result<Vec<f64>> {
    use QubitLabel::*;
    let rho = rho2minus(x)?.rho;
    let c = |a, b| concurrence(&partial_trace(&rho, &[a, b])?);
    Ok(vec![c(S1, S2)?, c(S1, S3)?, c(S2, S3)?, entanglement::tripartite_negativity(&rho)?.n123])
}
