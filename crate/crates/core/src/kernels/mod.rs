//! Closed-form cylinder kernels for every supported configuration,
//! delivered both as jets around `t = 0` (for residue extraction) and as
//! plain numeric evaluators (for oracles).
//!
//! All kernels are built from their resummed closed forms; the
//! eigenfunction sums survive only as convergence-controlled oracles.

mod parallel;
mod wedge;

pub use parallel::{
    reduced_cylinder_jet, reduced_cylinder_trace, reduced_kernel_eigensum, reduced_kernel_numeric,
    reduced_trace_numeric,
};
pub use wedge::{
    wedge_mod_cylinder_jet, wedge_tilde_diag_numeric, wedge_tilde_eigensum, WedgeVar,
    EIGENSUM_TERM_CAP,
};

use crate::error::{Error, Result};

/// Boundary conditions for the two-face configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryMode {
    DirichletDirichlet,
    /// Dirichlet on the first face, Neumann on the second.
    DirichletNeumann,
    NeumannNeumann,
    /// Torus identification of the two faces; the constant zero mode is
    /// removed from the reduced spectrum.
    Periodic,
}

impl BoundaryMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundaryMode::DirichletDirichlet => "dd",
            BoundaryMode::DirichletNeumann => "dn",
            BoundaryMode::NeumannNeumann => "nn",
            BoundaryMode::Periodic => "periodic",
        }
    }
}

impl std::str::FromStr for BoundaryMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dd" | "dirichlet" => Ok(BoundaryMode::DirichletDirichlet),
            "dn" | "dirichlet-neumann" => Ok(BoundaryMode::DirichletNeumann),
            "nn" | "neumann" => Ok(BoundaryMode::NeumannNeumann),
            "periodic" | "p" => Ok(BoundaryMode::Periodic),
            other => Err(Error::UnknownKey(format!("boundary mode '{other}'"))),
        }
    }
}

/// Interior point of a wedge of opening angle `alpha` in cylindrical
/// coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WedgeGeometry {
    pub alpha: f64,
    pub rho: f64,
    pub theta: f64,
}

impl WedgeGeometry {
    /// Strict interior point: `rho > 0`, `0 < theta < alpha`.
    pub fn interior(alpha: f64, rho: f64, theta: f64) -> Result<Self> {
        Self::validate_alpha(alpha)?;
        if !(rho > 0.0) {
            return Err(Error::GeometryViolation(format!(
                "rho must be positive, got {rho}"
            )));
        }
        if !(theta > 0.0 && theta < alpha) {
            return Err(Error::GeometryViolation(format!(
                "theta must lie strictly inside (0, {alpha}), got {theta}"
            )));
        }
        Ok(Self { alpha, rho, theta })
    }

    /// Point on the face `theta = alpha`, used by the boundary-first
    /// pressure prescription.
    pub fn on_face_alpha(alpha: f64, rho: f64) -> Result<Self> {
        Self::validate_alpha(alpha)?;
        if !(rho > 0.0) {
            return Err(Error::GeometryViolation(format!(
                "rho must be positive, got {rho}"
            )));
        }
        Ok(Self {
            alpha,
            rho,
            theta: alpha,
        })
    }

    fn validate_alpha(alpha: f64) -> Result<()> {
        if !(alpha > 0.0 && alpha <= 2.0 * std::f64::consts::PI) {
            return Err(Error::GeometryViolation(format!(
                "opening angle must lie in (0, 2 pi], got {alpha}"
            )));
        }
        Ok(())
    }
}
