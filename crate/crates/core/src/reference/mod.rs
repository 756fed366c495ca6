//! Closed-form reference values for the verification suite.
//!
//! Every formula the engine is expected to reproduce is coded here
//! directly from its printed form, with no shared code path into the
//! residue/regular-part machinery: the verification suite compares the
//! two routes and must never feed one into the other.

mod massive;
mod parallel;
mod wedge;

pub use massive::*;
pub use parallel::*;
pub use wedge::*;

use crate::error::{Error, Result};

/// Reference scalar looked up by name, for the command-line inspector.
/// Names mirror the verification-report identifiers.
pub fn by_name(key: &str, params: &[(&str, f64)]) -> Result<f64> {
    let get = |name: &str| -> Result<f64> {
        params
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::UnknownKey(format!("missing parameter '{name}' for '{key}'")))
    };
    match key {
        "parallel-dd-energy" => parallel_energy_dd(get("a")?),
        "parallel-dn-energy" => parallel_energy_dn(get("a")?),
        "parallel-periodic-energy" => parallel_energy_periodic(get("a")?),
        "parallel-dd-amplitude" => Ok(parallel_dd_amplitude(get("a")?)),
        "parallel-dn-amplitude" => Ok(parallel_dn_amplitude(get("a")?)),
        "wedge-dirichlet-pressure" => Ok(wedge_pressure_dirichlet(get("alpha")?, get("rho")?)),
        "wedge-dn-pressure" => Ok(wedge_pressure_dn(get("alpha")?, get("rho")?, get("xi")?)),
        "wedge-neumann-pressure" => Ok(wedge_pressure_neumann(
            get("alpha")?,
            get("rho")?,
            get("xi")?,
        )),
        other => Err(Error::UnknownKey(other.to_string())),
    }
}

fn parallel_energy_dd(a: f64) -> Result<f64> {
    Ok(-std::f64::consts::PI.powi(2) / (1440.0 * a.powi(3)))
}

fn parallel_energy_dn(a: f64) -> Result<f64> {
    Ok(7.0 * std::f64::consts::PI.powi(2) / (11520.0 * a.powi(3)))
}

fn parallel_energy_periodic(a: f64) -> Result<f64> {
    Ok(-std::f64::consts::PI.powi(2) / (90.0 * a.powi(3)))
}
