use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use spinstar::model::{self, Scheme, SpinStarParams};
use spinstar::output::{table_to_string, write_csv};
use spinstar::sweeps::{self, Axis, AxisSpec, FigureId, FigureOptions, Observable, Point, SweepSpec};
use spinstar::{Error, ErrorKind, Result};

#[derive(Parser)]
#[command(name = "spinstar", version, about = "Thermal tripartite negativity of a four-spin star network")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The 16 sorted energies of H, in units of omega0 times --omega0.
    Spectrum(Common),
    /// Observables on a 0-, 1- or 2-axis grid.
    Sweep(Common),
    /// Ground-level crossings along c (or x when --c is fixed).
    Crossing(Common),
    /// Maximum of N123 over x at fixed c and t.
    Maximize(Common),
    /// Data behind a figure.
    Figure(Common),
    /// Closed-form type-A eigensystem against numerical diagonalisation.
    Verify(Common),
}

#[derive(Args, Clone, Default)]
struct Common {
    #[arg(long, default_value = "hom")]
    scheme: String,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    t: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    omega0: f64,
    /// name:min:max:N, repeatable up to twice.
    #[arg(long)]
    axis: Vec<String>,
    /// Comma-separated observables.
    #[arg(long, default_value = "N123")]
    obs: String,
    #[arg(long)]
    id: Option<String>,
    /// lo:hi
    #[arg(long)]
    bracket: Option<String>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = 200)]
    surface_points: usize,
    #[arg(long, default_value_t = 400)]
    curve_points: usize,
}

impl Common {
    fn scheme(&self) -> Result<Scheme> {
        self.scheme.parse()
    }

    fn bracket(&self) -> Result<Option<(f64, f64)>> {
        let Some(b) = &self.bracket else { return Ok(None) };
        let bad = || Error::Contract(format!("bracket '{b}' is not of the form lo:hi"));
        let (lo, hi) = b.split_once(':').ok_or_else(bad)?;
        Ok(Some((lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?)))
    }

    fn echo(&self, command: &str) -> Vec<String> {
        let opt = |v: Option<f64>| v.map_or("-".to_string(), |v| v.to_string());
        vec![
            format!("spinstar {}", env!("CARGO_PKG_VERSION")),
            format!(
                "command={command} scheme={} c={} x={} t={} omega0={}",
                self.scheme,
                opt(self.c),
                opt(self.x),
                opt(self.t),
                self.omega0
            ),
            NEGATIVITY_NOTE.to_string(),
        ]
    }
}

const NEGATIVITY_NOTE: &str =
    "negativity convention: N = ||rho^T_I||_1 - 1 (trace norm of the partial transpose minus one; Bell state = 1)";

fn require(v: Option<f64>, name: &str) -> Result<f64> {
    v.ok_or_else(|| Error::Contract(format!("--{name} is required")))
}

fn params(a: &Common) -> Result<SpinStarParams> {
    let scheme = a.scheme()?;
    let c = require(a.c, "c")?;
    let x = if scheme == Scheme::Homogeneous { a.x.unwrap_or(1.0) } else { require(a.x, "x")? };
    SpinStarParams::new(scheme, c, x)?.with_omega0(a.omega0)
}

fn csv(comments: Vec<String>, columns: &[&str], rows: &[Vec<f64>]) -> Result<String> {
    let mut buf = Vec::new();
    let cols: Vec<String> = columns.iter().map(|s| s.to_string()).collect();
    write_csv(&mut buf, &comments, &cols, rows)?;
    Ok(String::from_utf8(buf).expect("ASCII output"))
}

fn spectrum(a: &Common) -> Result<String> {
    let p = params(a)?;
    let e = model::spectrum(&p)?;
    let rows: Vec<Vec<f64>> = e.values().iter().enumerate().map(|(k, &v)| vec![k as f64, p.omega0() * v]).collect();
    csv(a.echo("spectrum"), &["k", "E"], &rows)
}

fn sweep(a: &Common) -> Result<String> {
    let scheme = a.scheme()?;
    let axes = a.axis.iter().map(|s| s.parse()).collect::<Result<Vec<AxisSpec>>>()?;
    let swept = |ax: Axis| axes.iter().any(|s| s.axis == ax);
    let fixed = |ax: Axis, v: Option<f64>| -> Result<f64> {
        match (swept(ax), v) {
            (true, Some(_)) => Err(Error::Contract(format!("--{ax} is both fixed and swept"))),
            (true, None) => Ok(f64::NAN),
            (false, Some(v)) => Ok(v),
            (false, None) if ax == Axis::X && scheme == Scheme::Homogeneous => Ok(1.0),
            (false, None) => Err(Error::Contract(format!("--{ax} must be fixed or swept"))),
        }
    };
    let point = Point::new(fixed(Axis::C, a.c)?, fixed(Axis::X, a.x)?, fixed(Axis::T, a.t)?);
    let spec = SweepSpec::new(scheme, point, axes, Observable::parse_list(&a.obs)?).with_omega0(a.omega0);
    table_to_string(&sweeps::run_sweep(&spec)?)
}

fn crossing(a: &Common) -> Result<String> {
    let scheme = a.scheme()?;
    let axis = match (scheme, a.c, a.x) {
        (Scheme::Homogeneous, None, _) => Axis::C,
        (Scheme::Homogeneous, Some(_), _) => return Err(Error::Contract("homogeneous crossings are located along c; omit --c".into())),
        (_, None, Some(_)) => Axis::C,
        (_, Some(_), None) => Axis::X,
        _ => return Err(Error::Contract("fix exactly one of --c and --x; the other is swept".into())),
    };
    let bracket = a.bracket()?.unwrap_or(if axis == Axis::C { (0.1, 10.0) } else { (0.1, 8.0) });
    let fixed = Point::new(a.c.unwrap_or(1.0), a.x.unwrap_or(1.0), a.t.unwrap_or(0.0));
    let tol = a.tol.unwrap_or(sweeps::DEFAULT_CROSSING_TOL);
    let points = sweeps::find_level_crossing(scheme, fixed, axis, bracket, tol)?;
    let mut rows = Vec::new();
    for v in points {
        let (c, x) = if axis == Axis::C { (v, fixed.x) } else { (fixed.c, v) };
        let e = model::spectrum(&SpinStarParams::new(scheme, c, x)?)?;
        rows.push(vec![v, a.omega0 * e.values()[0], a.omega0 * e.gap()]);
    }
    let mut comments = a.echo("crossing");
    comments.push(format!("bracket {}:{} tol={tol}", bracket.0, bracket.1));
    csv(comments, &[axis.name(), "E0", "GAP"], &rows)
}

fn maximize(a: &Common) -> Result<String> {
    let scheme = a.scheme()?;
    let default = if scheme == Scheme::TypeB { (0.8, 4.0) } else { (0.6, 5.4) };
    let bracket = a.bracket()?.unwrap_or(default);
    let c = require(a.c, "c")?;
    let t = a.t.unwrap_or(sweeps::LOW_T);
    let (xm, n) = sweeps::find_negativity_maximum(scheme, c, t, bracket)?;
    let mut comments = a.echo("maximize");
    comments.push(format!("bracket {}:{}", bracket.0, bracket.1));
    csv(comments, &["x_M", "N123"], &[vec![xm, n]])
}

fn figure(a: &Common) -> Result<String> {
    let id: FigureId = a.id.as_deref().ok_or_else(|| Error::Contract("--id is required".into()))?.parse()?;
    let opts = FigureOptions { surface_points: a.surface_points, curve_points: a.curve_points, c: a.c };
    let mut t = sweeps::reproduce_figure(id, &opts)?;
    t.provenance.insert(2, NEGATIVITY_NOTE.to_string());
    t.provenance.dedup();
    table_to_string(&t)
}

fn verify() -> Result<String> {
    Ok(model::validate_appendix(&model::default_validation_grid())?.to_string())
}

fn run(cli: &Cli) -> Result<String> {
    let common = match &cli.command {
        Command::Spectrum(a) | Command::Sweep(a) | Command::Crossing(a) | Command::Maximize(a) | Command::Figure(a) | Command::Verify(a) => a,
    };
    if !(common.omega0.is_finite() && common.omega0 > 0.0) {
        return Err(Error::Domain(format!("--omega0 must be finite and > 0, got {}", common.omega0)));
    }
    match &cli.command {
        Command::Spectrum(a) => spectrum(a),
        Command::Sweep(a) => sweep(a),
        Command::Crossing(a) => crossing(a),
        Command::Maximize(a) => maximize(a),
        Command::Figure(a) => figure(a),
        Command::Verify(_) => verify(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e.kind() {
                ErrorKind::Numerical => ExitCode::from(1),
                ErrorKind::Contract | ErrorKind::Domain => ExitCode::from(2),
            }
        }
    }
}
