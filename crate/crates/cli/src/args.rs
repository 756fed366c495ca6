use clap::{Args, Parser, Subcommand, ValueEnum};

/// Vacuum stress-energy engine: renormalized stress tensors, plate and
/// wedge pressures, and reduced energies of a scalar field near flat
/// boundaries.
///
/// Angles are radians; lengths are in the units fixed by the
/// configuration scale (the plate separation `a`, or `1/m` for the
/// massive families). The environment variable CASIMIR_TRUNC_ORDER
/// overrides the number of retained series coefficients (default 16).
#[derive(Parser)]
#[command(name = "casimir", version, about, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Renormalized stress tensor at one point (JSON).
    Eval(EvalArgs),
    /// Stress tensors on a coordinate grid (CSV on stdout).
    Grid(GridArgs),
    /// Reduced bulk energy of a parallel-plane configuration (JSON).
    Energy(EnergyArgs),
    /// Boundary pressure by both prescriptions (JSON).
    Pressure(PressureArgs),
    /// Run the verification suite, or re-check a grid CSV.
    Verify(VerifyArgs),
    /// Cross-check the residue engine against the contour quadrature.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConfigKind {
    /// Massless field between parallel hyperplanes.
    Parallel,
    /// Massive field on a half-space.
    Halfspace,
    /// Massive field in a rectangular wedge (two perpendicular planes).
    Rectwedge,
    /// Massless field in an angular wedge.
    Wedge,
    /// Cosmic string (periodic wedge).
    String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BcArg {
    Dd,
    Dn,
    Nn,
    Periodic,
}

impl BcArg {
    pub fn mode(self) -> casimir_core::BoundaryMode {
        match self {
            BcArg::Dd => casimir_core::BoundaryMode::DirichletDirichlet,
            BcArg::Dn => casimir_core::BoundaryMode::DirichletNeumann,
            BcArg::Nn => casimir_core::BoundaryMode::NeumannNeumann,
            BcArg::Periodic => casimir_core::BoundaryMode::Periodic,
        }
    }
}

#[derive(Args)]
pub struct ConfigArgs {
    /// Configuration family.
    #[arg(long, value_enum)]
    pub config: ConfigKind,
    /// Boundary conditions (parallel planes and angular wedge).
    #[arg(long, value_enum, default_value = "dd")]
    pub bc: BcArg,
    /// Spatial dimension (parallel planes; odd, >= 3).
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    /// Plate separation.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Curvature coupling.
    #[arg(long, default_value_t = 1.0 / 6.0, allow_negative_numbers = true)]
    pub xi: f64,
    /// Wedge opening angle (radians).
    #[arg(long, default_value_t = std::f64::consts::PI / 2.0)]
    pub alpha: f64,
    /// Face condition on x1 = 0: -1 Dirichlet, +1 Neumann.
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    pub alpha1: i8,
    /// Face condition on x2 = 0: -1 Dirichlet, +1 Neumann.
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    pub alpha2: i8,
    /// Field mass (massive families).
    #[arg(long, default_value_t = 1.0)]
    pub m: f64,
    /// Zeta mass scale.
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,
}

#[derive(Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    /// Distance from the first plane.
    #[arg(long)]
    pub x1: Option<f64>,
    /// Distance from the second plane (rectangular wedge).
    #[arg(long)]
    pub x2: Option<f64>,
    /// Radial coordinate (wedge and string).
    #[arg(long)]
    pub rho: Option<f64>,
    /// Angular coordinate (wedge and string).
    #[arg(long)]
    pub theta: Option<f64>,
}

#[derive(Args)]
pub struct GridArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    /// Grid over x1 as start:stop:count.
    #[arg(long, value_parser = parse_range)]
    pub x1_grid: Option<Range>,
    /// Grid over x2 as start:stop:count.
    #[arg(long, value_parser = parse_range)]
    pub x2_grid: Option<Range>,
    /// Grid over rho as start:stop:count.
    #[arg(long, value_parser = parse_range)]
    pub rho_grid: Option<Range>,
    /// Grid over theta as start:stop:count.
    #[arg(long, value_parser = parse_range)]
    pub theta_grid: Option<Range>,
}

#[derive(Args)]
pub struct EnergyArgs {
    /// Boundary conditions.
    #[arg(long, value_enum, default_value = "dd")]
    pub bc: BcArg,
    /// Spatial dimension (odd, >= 3).
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    /// Plate separation.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlateArg {
    Pi0,
    Pia,
}

#[derive(Args)]
pub struct PressureArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    /// Plate selector for parallel planes.
    #[arg(long, value_enum, default_value = "pi0")]
    pub plate: PlateArg,
    /// Radial coordinate on the wedge face.
    #[arg(long, default_value_t = 1.0)]
    pub rho: f64,
    /// Distance from the corner along the face x1 = 0 (rectangular wedge).
    #[arg(long, default_value_t = 1.0)]
    pub x2: f64,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Replace every pinned tolerance.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Only run checks whose id contains this substring.
    #[arg(long)]
    pub only: Option<String>,
    /// Re-check a grid CSV instead of running the suite.
    #[arg(long)]
    pub csv: Option<std::path::PathBuf>,
    /// Suppress per-check lines; print the summary only.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Args)]
pub struct OracleArgs {
    /// Reduced kernel to probe.
    #[arg(long, value_enum, default_value = "dd")]
    pub kernel: BcArg,
    /// Use the cylinder trace instead of the diagonal kernel.
    #[arg(long)]
    pub trace: bool,
    /// Plate separation.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Diagonal point.
    #[arg(long, default_value_t = 0.5)]
    pub x1: f64,
    /// Continuation parameter (half-integer values hit the residue path).
    #[arg(long, default_value_t = -1.5, allow_negative_numbers = true)]
    pub s: f64,
    /// Keyhole radius.
    #[arg(long, default_value_t = 0.5)]
    pub r0: f64,
    /// Ray truncation point.
    #[arg(long, default_value_t = 40.0)]
    pub t_max: f64,
    /// Points on the circle.
    #[arg(long, default_value_t = 128)]
    pub n_circle: usize,
    /// Panels per ray.
    #[arg(long, default_value_t = 64)]
    pub n_panels: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Range {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count as f64 - 1.0);
        (0..self.count)
            .map(|i| self.start + step * i as f64)
            .collect()
    }
}

fn parse_range(s: &str) -> Result<Range, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err("expected start:stop:count".into());
    }
    let start: f64 = parts[0].parse().map_err(|e| format!("start: {e}"))?;
    let stop: f64 = parts[1].parse().map_err(|e| format!("stop: {e}"))?;
    let count: usize = parts[2].parse().map_err(|e| format!("count: {e}"))?;
    if count == 0 {
        return Err("count must be positive".into());
    }
    Ok(Range { start, stop, count })
}
