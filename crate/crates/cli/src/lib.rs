//! Command-line front end for the elastic Neumann–Poincaré toolkit.
//!
//! Subcommands:
//!
//! * `material`: derived material constants (JSON);
//! * `sphere-exact`: closed-form sphere counting curve (CSV) or fit (JSON);
//! * `universal-matrix`: table of `M_ι(θ)` (JSON, real and imaginary parts);
//! * `coeffs`: asymptotic counting coefficients of a surface (JSON);
//! * `discretize`: Nyström spectrum (CSV) and cluster summary (JSON);
//! * `audit-subsymbol`: term-wise comparison report (plain text or JSON).
//!
//! Exit codes: 0 on success, 2 on configuration errors, 3 when a numerical
//! diagnostic fails. Floating-point output carries 17 significant digits.
//! Thread count is taken from `RAYON_NUM_THREADS` only; outputs do not
//! depend on it.

mod json;

pub use json::{float17, to_json_17};

use clap::{Args, Parser, Subcommand, ValueEnum};
use elastic_core::{Iota, LameMaterial};
use geometry::Surface;
use np_discretization::{
    assemble_np, cluster_counts, np_spectrum, single_layer_positivity, CountingWindow, DiscretizationError,
    NystromConfig,
};
use serde::Serialize;
use spectral_asymptotics::{
    coefficients, coefficients_with_refinement, counting_curve, fit_tau_minus2, log_grid_descending, sphere_exact_eigs,
    AsymptoticCoefficients, AsymptoticsError, CoefficientConfig, Side,
};
use std::path::{Path, PathBuf};
use symbol_calculus::{audit_report, universal_matrix, CircleDirection};
use thiserror::Error;

/// Top-level arguments.
#[derive(Debug, Parser)]
#[command(name = "elastic-np", version, about = "Spectral asymptotics of the elastic Neumann–Poincaré operator")]
pub struct Cli {
    /// The command to run.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derived material constants.
    Material(MaterialArgs),
    /// Counting curve of the closed-form sphere spectrum.
    SphereExact(SphereArgs),
    /// Universal matrix M_ι(θ) on a uniform θ grid.
    UniversalMatrix(UniversalArgs),
    /// Asymptotic counting coefficients of a surface.
    Coeffs(CoeffArgs),
    /// Nyström discretization spectrum of a sphere or ellipsoid.
    Discretize(DiscretizeArgs),
    /// Term-wise audit of the re-derived subsymbol against reference forms.
    AuditSubsymbol(AuditArgs),
}

/// Lamé constants.
#[derive(Debug, Clone, Copy, Args)]
pub struct MaterialArgs {
    /// Lamé λ.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub lambda: f64,
    /// Lamé μ (shear modulus).
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// JSON document.
    Json,
    /// Comma-separated values.
    Csv,
    /// Plain text.
    Text,
}

/// Essential-spectrum point selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OmegaArg {
    /// ω = −𝕜.
    Minus,
    /// ω = 0.
    Zero,
    /// ω = +𝕜.
    Plus,
}

impl From<OmegaArg> for Iota {
    fn from(o: OmegaArg) -> Iota {
        match o {
            OmegaArg::Minus => Iota::Minus,
            OmegaArg::Zero => Iota::Zero,
            OmegaArg::Plus => Iota::Plus,
        }
    }
}

/// Counting-window side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    /// Eigenvalues above ω.
    Above,
    /// Eigenvalues below ω.
    Below,
}

/// Which sphere eigenvalues enter the count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesArg {
    /// All three series.
    All,
    /// Only the series accumulating at the chosen ω.
    Own,
}

/// Arguments of `sphere-exact`.
#[derive(Debug, Clone, Args)]
pub struct SphereArgs {
    #[command(flatten)]
    pub material: MaterialArgs,
    /// Essential point.
    #[arg(long, value_enum, default_value_t = OmegaArg::Zero)]
    pub omega: OmegaArg,
    /// Window side.
    #[arg(long, value_enum, default_value_t = SideArg::Above)]
    pub side: SideArg,
    /// Series included in the count.
    #[arg(long, value_enum, default_value_t = SeriesArg::All)]
    pub series: SeriesArg,
    /// Largest index n of the closed-form series.
    #[arg(long, default_value_t = 2000)]
    pub nmax: usize,
    /// Smallest τ.
    #[arg(long, default_value_t = 3e-4)]
    pub tau_min: f64,
    /// Largest τ.
    #[arg(long, default_value_t = 1e-2)]
    pub tau_max: f64,
    /// Number of log-spaced τ values.
    #[arg(long, default_value_t = 31)]
    pub tau_points: usize,
    /// Outer window width τ± (default 0.9·𝕜).
    #[arg(long)]
    pub reference: Option<f64>,
    /// `csv` (curve) or `json` (curve and τ⁻² fit).
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Arguments of `universal-matrix`.
#[derive(Debug, Clone, Args)]
pub struct UniversalArgs {
    #[command(flatten)]
    pub material: MaterialArgs,
    /// ι ∈ {−1, 0, 1}.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub iota: i32,
    /// Number of uniformly spaced θ values.
    #[arg(long, default_value_t = 32)]
    pub n_theta: usize,
    /// Output file (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Arguments of `coeffs`.
#[derive(Debug, Clone, Args)]
pub struct CoeffArgs {
    /// Surface: inline JSON or a path to a JSON file.
    #[arg(long)]
    pub surface: String,
    #[command(flatten)]
    pub material: MaterialArgs,
    /// ι ∈ {−1, 0, 1}.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub iota: i32,
    /// Surface quadrature resolution.
    #[arg(long, default_value_t = 64)]
    pub n_surface: usize,
    /// Cotangent-circle resolution.
    #[arg(long, default_value_t = 256)]
    pub n_theta: usize,
    /// If set, also compute at doubled resolution and fail (exit 3) when a
    /// coefficient moves by more than this relative amount.
    #[arg(long)]
    pub refine_tol: Option<f64>,
    /// Output file (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Arguments of `discretize`.
#[derive(Debug, Clone, Args)]
pub struct DiscretizeArgs {
    /// Surface: inline JSON or a path to a JSON file (sphere or ellipsoid).
    #[arg(long)]
    pub surface: String,
    #[command(flatten)]
    pub material: MaterialArgs,
    /// Approximate number of nodes N (the grid has 2·n_theta² nodes).
    #[arg(long, default_value_t = 1000)]
    pub nodes: usize,
    /// Explicit polar resolution (overrides `--nodes`).
    #[arg(long)]
    pub n_theta: Option<usize>,
    /// Inner counting distance, as a fraction of 𝕜.
    #[arg(long, default_value_t = 0.02)]
    pub tau_min: f64,
    /// Outer counting distance, as a fraction of 𝕜 (< ½).
    #[arg(long, default_value_t = 0.4)]
    pub tau_max: f64,
    /// Eigenvalue CSV (`re,im`) destination.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Cluster JSON destination (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Arguments of `audit-subsymbol`.
#[derive(Debug, Clone, Args)]
pub struct AuditArgs {
    /// `text` or `json`.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Output file (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// CLI failure, mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments, surface or file (exit 2).
    #[error("configuration error: {0}")]
    Config(String),
    /// A numerical diagnostic failed (exit 3).
    #[error("numerical diagnostic failed: {0}")]
    Numerical(String),
}

impl CliError {
    /// Process exit code.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl From<AsymptoticsError> for CliError {
    fn from(e: AsymptoticsError) -> Self {
        match e {
            AsymptoticsError::InvalidGrid(_) | AsymptoticsError::WindowOverlap { .. } | AsymptoticsError::Geometry(_) => {
                CliError::Config(e.to_string())
            }
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<DiscretizationError> for CliError {
    fn from(e: DiscretizationError) -> Self {
        match e {
            DiscretizationError::Numerics(_) => CliError::Numerical(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

/// One file produced by a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    /// Destination; `None` means standard output.
    pub path: Option<PathBuf>,
    /// Contents.
    pub contents: String,
}

fn material(m: MaterialArgs) -> Result<LameMaterial, CliError> {
    LameMaterial::new(m.lambda, m.mu).map_err(|e| CliError::Config(e.to_string()))
}

fn iota(v: i32) -> Result<Iota, CliError> {
    Iota::from_value(v).ok_or_else(|| CliError::Config(format!("iota must be -1, 0 or 1 (got {v})")))
}

/// Parses a surface given inline (starting with `{`) or as a file path.
pub fn load_surface(arg: &str) -> Result<Surface, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg))
            .map_err(|e| CliError::Config(format!("cannot read surface file {arg}: {e}")))?
    };
    Surface::from_json(&text).map_err(|e| CliError::Config(e.to_string()))
}

#[derive(Serialize)]
struct MaterialReport {
    lambda: f64,
    mu: f64,
    kappa: f64,
    em: f64,
    lambda_prime: f64,
    mu_prime: f64,
    omega: [f64; 3],
}

#[derive(Serialize)]
struct MatrixEntry {
    theta: f64,
    re: [[f64; 3]; 3],
    im: [[f64; 3]; 3],
}

#[derive(Serialize)]
struct UniversalTable {
    iota: i32,
    lambda: f64,
    mu: f64,
    entries: Vec<MatrixEntry>,
}

#[derive(Serialize)]
struct CoeffReport {
    #[serde(flatten)]
    coefficients: AsymptoticCoefficients,
    two_path_total: f64,
    two_path_residual: f64,
    split_defect: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    refined: Option<AsymptoticCoefficients>,
}

#[derive(Serialize)]
struct DiscretizeReport {
    lambda: f64,
    mu: f64,
    config: NystromConfig,
    nodes: usize,
    spectrum: np_discretization::SpectrumSummary,
    top_cluster: Vec<f64>,
    counts: Vec<np_discretization::ClusterCount>,
    window: CountingWindow,
    single_layer: np_discretization::PositivityReport,
}

/// Runs one parsed command and returns its artifacts without writing them.
pub fn run(cli: &Cli) -> Result<Vec<Artifact>, CliError> {
    match &cli.command {
        Command::Material(m) => {
            let mat = material(*m)?;
            let r = MaterialReport {
                lambda: mat.lambda,
                mu: mat.mu,
                kappa: mat.kappa,
                em: mat.em,
                lambda_prime: mat.lambda_prime,
                mu_prime: mat.mu_prime,
                omega: Iota::ALL.map(|i| mat.omega(i)),
            };
            Ok(vec![Artifact { path: None, contents: to_json_17(&r) }])
        }
        Command::SphereExact(a) => sphere_exact(a),
        Command::UniversalMatrix(a) => {
            let mat = material(a.material)?;
            let io = iota(a.iota)?;
            if a.n_theta == 0 {
                return Err(CliError::Config("n_theta must be positive".into()));
            }
            let entries = CircleDirection::uniform(a.n_theta)
                .iter()
                .map(|d| {
                    let m = universal_matrix(io, d, &mat);
                    MatrixEntry {
                        theta: d.theta,
                        re: m.0.map(|r| r.map(|z| z.re)),
                        im: m.0.map(|r| r.map(|z| z.im)),
                    }
                })
                .collect();
            let t = UniversalTable { iota: io.value(), lambda: mat.lambda, mu: mat.mu, entries };
            Ok(vec![Artifact { path: a.output.clone(), contents: to_json_17(&t) }])
        }
        Command::Coeffs(a) => {
            let mat = material(a.material)?;
            let io = iota(a.iota)?;
            let surface = load_surface(&a.surface)?;
            let cfg = CoefficientConfig { n_surface: a.n_surface, n_theta: a.n_theta };
            let (c, refined) = match a.refine_tol {
                Some(tol) => {
                    let (c, f) = coefficients_with_refinement(&surface, io, &mat, cfg, tol)?;
                    (c, Some(f))
                }
                None => (coefficients(&surface, io, &mat, cfg)?, None),
            };
            let r = CoeffReport {
                two_path_total: c.two_path_total(),
                two_path_residual: c.two_path_defect(),
                split_defect: c.split_defect(),
                coefficients: c,
                refined,
            };
            Ok(vec![Artifact { path: a.output.clone(), contents: to_json_17(&r) }])
        }
        Command::Discretize(a) => discretize(a),
        Command::AuditSubsymbol(a) => {
            let report = audit_report().map_err(|e| CliError::Numerical(e.to_string()))?;
            let contents = match a.format {
                Format::Json => to_json_17(&report),
                Format::Text => report.to_string(),
                Format::Csv => return Err(CliError::Config("audit-subsymbol supports text or json".into())),
            };
            Ok(vec![Artifact { path: a.output.clone(), contents }])
        }
    }
}

fn sphere_exact(a: &SphereArgs) -> Result<Vec<Artifact>, CliError> {
    let mat = material(a.material)?;
    let io: Iota = a.omega.into();
    if a.nmax == 0 {
        return Err(CliError::Config("nmax must be positive".into()));
    }
    let spectrum = sphere_exact_eigs(&mat, a.nmax);
    let values = match a.series {
        SeriesArg::All => spectrum.all(),
        SeriesArg::Own => spectrum.series(io),
    };
    let taus = log_grid_descending(a.tau_max, a.tau_min, a.tau_points)?;
    let side = match a.side {
        SideArg::Above => Side::Above,
        SideArg::Below => Side::Below,
    };
    let reference = a.reference.unwrap_or(0.9 * mat.kappa);
    let essential = Iota::ALL.map(|i| mat.omega(i));
    let curve = counting_curve(&values, mat.omega(io), side, &taus, reference, &essential)?;
    let contents = match a.format {
        Format::Csv => curve.to_csv(),
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                curve: &'a spectral_asymptotics::CountingCurve,
                fit: Option<spectral_asymptotics::TauFit>,
                fit_error: Option<String>,
            }
            let (fit, fit_error) = match fit_tau_minus2(&curve) {
                Ok(f) => (Some(f), None),
                Err(e) => (None, Some(e.to_string())),
            };
            to_json_17(&Out { curve: &curve, fit, fit_error })
        }
        Format::Text => return Err(CliError::Config("sphere-exact supports csv or json".into())),
    };
    Ok(vec![Artifact { path: a.output.clone(), contents }])
}

fn discretize(a: &DiscretizeArgs) -> Result<Vec<Artifact>, CliError> {
    let mat = material(a.material)?;
    let surface = load_surface(&a.surface)?;
    let config = a.n_theta.map_or(NystromConfig::for_nodes(a.nodes), NystromConfig::new);
    let window = CountingWindow { tau_min: a.tau_min * mat.kappa, tau_max: a.tau_max * mat.kappa };
    if !(a.tau_min >= 0.0 && a.tau_min < a.tau_max && a.tau_max < 0.5) {
        return Err(CliError::Config(format!(
            "counting window fractions must satisfy 0 ≤ tau_min < tau_max < 0.5 (got {}, {})",
            a.tau_min, a.tau_max
        )));
    }
    let system = assemble_np(&surface, &mat, config)?;
    let sample = np_spectrum(&system)?;
    let counts = cluster_counts(&sample, &mat, window)?;
    let positivity = single_layer_positivity(&system.single_layer);
    let report = DiscretizeReport {
        lambda: mat.lambda,
        mu: mat.mu,
        config,
        nodes: system.nodes(),
        spectrum: sample.summary(),
        top_cluster: sample.top_cluster(1e-2),
        counts,
        window,
        single_layer: positivity,
    };
    let mut out = vec![Artifact { path: a.output.clone(), contents: to_json_17(&report) }];
    if let Some(p) = &a.csv {
        out.push(Artifact { path: Some(p.clone()), contents: sample.to_csv() });
    }
    if !positivity.positive_definite {
        return Err(CliError::Numerical(format!(
            "discretized single layer is not positive definite (min pivot ratio {:e})",
            positivity.min_pivot_ratio
        )));
    }
    Ok(out)
}

/// Writes artifacts; standard-output artifacts are returned concatenated.
pub fn write_artifacts(artifacts: &[Artifact]) -> Result<String, CliError> {
    let mut stdout = String::new();
    for a in artifacts {
        match &a.path {
            Some(p) => std::fs::write(p, &a.contents)
                .map_err(|e| CliError::Config(format!("cannot write {}: {e}", p.display())))?,
            None => stdout.push_str(&a.contents),
        }
    }
    Ok(stdout)
}
