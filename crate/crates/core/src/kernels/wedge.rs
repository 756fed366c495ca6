//! Modified cylinder kernels for the three-dimensional wedge and the
//! cosmic string, as jets over Laurent series in `t`.
//!
//! The kernels live on the diagonal of cylindrical coordinates
//! `q = (rho, theta, z)`, `p = (rho', theta', z')`, perturbed by up to
//! six nilpotent splittings. The building blocks are
//!
//! `r_minus = sqrt((rho - rho')^2 + (z - z')^2 + t^2)` (branch `+t`),
//! `r_plus  = sqrt((rho + rho')^2 + (z - z')^2 + t^2)`,
//! `e^v = (r_plus + r_minus) / (r_plus - r_minus)`,
//!
//! and powers `e^(p v) = (1 + w)^p` with `w = e^v - 1`, taken through
//! `log1p`/`pow_real`. The angular boundary condition enters through the
//! resummed geometric series in `e^(-pi v / alpha)`.

use num_complex::Complex64;

use super::{BoundaryMode, WedgeGeometry};
use crate::error::{Error, Result};
use crate::jet::{jet_cos, JetSeries};
use crate::series::LaurentSeries;

/// Term cap for the eigenfunction-sum oracles.
pub const EIGENSUM_TERM_CAP: usize = 10_000;

/// The six perturbation slots of the wedge kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WedgeVar {
    Rho,
    Theta,
    Z,
    RhoP,
    ThetaP,
    ZP,
}

impl WedgeVar {
    pub const ALL: [WedgeVar; 6] = [
        WedgeVar::Rho,
        WedgeVar::Theta,
        WedgeVar::Z,
        WedgeVar::RhoP,
        WedgeVar::ThetaP,
        WedgeVar::ZP,
    ];
}

/// Maps active perturbation slots onto jet variables.
struct ActiveVars {
    slots: Vec<WedgeVar>,
}

impl ActiveVars {
    fn coeff_of(&self, var: WedgeVar) -> Vec<f64> {
        self.slots
            .iter()
            .map(|&s| if s == var { 1.0 } else { 0.0 })
            .collect()
    }

    /// Linear jet `center + d(var)` (the splitting is absent when the
    /// slot is inactive).
    fn lift(&self, center: f64, var: WedgeVar, len: usize) -> JetSeries {
        JetSeries::linear_form(self.slots.len(), center, &self.coeff_of(var), len)
    }

    /// Nilpotent combination `c1 d(v1) + c2 d(v2)`.
    fn combo(&self, pairs: &[(WedgeVar, f64)], len: usize) -> JetSeries {
        let mut coeffs = vec![0.0; self.slots.len()];
        for (i, &s) in self.slots.iter().enumerate() {
            for &(v, c) in pairs {
                if s == v {
                    coeffs[i] += c;
                }
            }
        }
        JetSeries::linear_form(self.slots.len(), 0.0, &coeffs, len)
    }
}

/// Jet of the modified cylinder kernel on the diagonal at `geom`, with
/// the listed perturbation slots active. The jet's Laurent expansions
/// start no lower than `t^-2`; deeper poles indicate a construction
/// error and are rejected.
pub fn wedge_mod_cylinder_jet(
    mode: BoundaryMode,
    geom: &WedgeGeometry,
    active: &[WedgeVar],
    len: usize,
) -> Result<JetSeries> {
    let vars = ActiveVars {
        slots: active.to_vec(),
    };
    let alpha = geom.alpha;
    let rho = geom.rho;
    let theta = geom.theta;
    let n = vars.slots.len();

    let t2 = JetSeries::from_series(n, LaurentSeries::monomial(2, 1.0, len));
    let d_rho = vars.combo(&[(WedgeVar::Rho, 1.0), (WedgeVar::RhoP, -1.0)], len);
    let d_z = vars.combo(&[(WedgeVar::Z, 1.0), (WedgeVar::ZP, -1.0)], len);
    let s_rho = vars.combo(&[(WedgeVar::Rho, 1.0), (WedgeVar::RhoP, 1.0)], len);

    // r_minus = sqrt(t^2 + (drho)^2 + (dz)^2), the +t branch
    let r_minus = t2
        .add_jet(&d_rho.mul_jet(&d_rho))
        .add_jet(&d_z.mul_jet(&d_z))
        .sqrt()?;
    // r_plus = sqrt(t^2 + (2 rho + drho + drho')^2 + (dz)^2)
    let two_rho = JetSeries::linear_form(n, 2.0 * rho, &vec![0.0; n], len).add_jet(&s_rho);
    let r_plus = t2
        .add_jet(&two_rho.mul_jet(&two_rho))
        .add_jet(&d_z.mul_jet(&d_z))
        .sqrt()?;

    // e^v = (r+ + r-) / (r+ - r-) = 1 + w
    let w = r_minus
        .scaled(2.0)
        .mul_jet(&r_plus.sub_jet(&r_minus).inverted()?);
    let ev = JetSeries::from_constant(n, 1.0, len).add_jet(&w);
    let sinh_v = ev.sub_jet(&ev.inverted()?).scaled(0.5);

    let rho_jet = vars.lift(rho, WedgeVar::Rho, len);
    let rhop_jet = vars.lift(rho, WedgeVar::RhoP, len);
    let inv_rho2_sinh = rho_jet.mul_jet(&rhop_jet).mul_jet(&sinh_v).inverted()?;

    let p = std::f64::consts::PI / alpha;
    let d_theta = vars.combo(&[(WedgeVar::Theta, 1.0), (WedgeVar::ThetaP, -1.0)], len);
    let s_theta = vars.combo(&[(WedgeVar::Theta, 1.0), (WedgeVar::ThetaP, 1.0)], len);

    let kernel = match mode {
        BoundaryMode::DirichletDirichlet | BoundaryMode::NeumannNeumann => {
            let ep = ev.pow_real(p)?;
            let ep_inv = ep.inverted()?;
            let cosh_pv = ep.add_jet(&ep_inv).scaled(0.5);
            let cos_diff = jet_cos(0.0, &d_theta.scaled(p), len);
            let cos_sum = jet_cos(2.0 * p * theta, &s_theta.scaled(p), len);
            let inv_d1 = cosh_pv.sub_jet(&cos_diff).inverted()?;
            let inv_d2 = cosh_pv.sub_jet(&cos_sum).inverted()?;
            let f = if mode == BoundaryMode::DirichletDirichlet {
                cos_diff
                    .sub_jet(&ep_inv)
                    .mul_jet(&inv_d1)
                    .sub_jet(&cos_sum.sub_jet(&ep_inv).mul_jet(&inv_d2))
            } else {
                ep.sub_jet(&cos_diff)
                    .mul_jet(&inv_d1)
                    .add_jet(&ep.sub_jet(&cos_sum).mul_jet(&inv_d2))
            };
            inv_rho2_sinh
                .mul_jet(&f)
                .scaled(1.0 / (4.0 * std::f64::consts::PI * alpha))
        }
        BoundaryMode::DirichletNeumann => {
            let ep = ev.pow_real(p)?;
            let cosh_pv = ep.add_jet(&ep.inverted()?).scaled(0.5);
            let eh = ev.pow_real(0.5 * p)?;
            let sinh_hv = eh.sub_jet(&eh.inverted()?).scaled(0.5);
            let cos_diff_h = jet_cos(0.0, &d_theta.scaled(0.5 * p), len);
            let cos_sum_h = jet_cos(p * theta, &s_theta.scaled(0.5 * p), len);
            let cos_diff = jet_cos(0.0, &d_theta.scaled(p), len);
            let cos_sum = jet_cos(2.0 * p * theta, &s_theta.scaled(p), len);
            let f = cos_diff_h
                .mul_jet(&cosh_pv.sub_jet(&cos_diff).inverted()?)
                .sub_jet(&cos_sum_h.mul_jet(&cosh_pv.sub_jet(&cos_sum).inverted()?))
                .mul_jet(&sinh_hv);
            inv_rho2_sinh
                .mul_jet(&f)
                .scaled(1.0 / (2.0 * std::f64::consts::PI * alpha))
        }
        BoundaryMode::Periodic => {
            let er = ev.pow_real(2.0 * p)?;
            let er_inv = er.inverted()?;
            let cosh_rv = er.add_jet(&er_inv).scaled(0.5);
            let sinh_rv = er.sub_jet(&er_inv).scaled(0.5);
            let cos_diff = jet_cos(0.0, &d_theta.scaled(2.0 * p), len);
            let f = sinh_rv.mul_jet(&cosh_rv.sub_jet(&cos_diff).inverted()?);
            inv_rho2_sinh
                .mul_jet(&f)
                .scaled(1.0 / (2.0 * std::f64::consts::PI * alpha))
        }
    };

    // Empirical pole-order guard: no kernel in the catalog may develop a
    // pole deeper than t^-2 (the value vanishes identically on Dirichlet
    // faces, which is fine).
    let norm = kernel.scalar_part().normalized();
    let all_zero = norm.coeffs().iter().all(|&c| c == 0.0);
    if !all_zero && norm.min_order() < -2 {
        return Err(Error::TruncationMarginExceeded {
            wanted: norm.min_order(),
            trunc_order: norm.trunc_order(),
            slack: 0,
            margin: -2,
        });
    }
    Ok(kernel)
}

/// Closed-form diagonal kernel at complex `t`, the analytic continuation
/// with `r_minus = t` (valid for `|t| < 2 rho`).
pub fn wedge_tilde_diag_numeric(
    mode: BoundaryMode,
    geom: &WedgeGeometry,
    t: Complex64,
) -> Complex64 {
    let alpha = geom.alpha;
    let rho = geom.rho;
    let p = std::f64::consts::PI / alpha;
    let r_plus = (4.0 * rho * rho + t * t).sqrt();
    let ev = (r_plus + t) / (r_plus - t);
    let v = ev.ln();
    let sinh_v = (ev - 1.0 / ev) * 0.5;
    let pref = 1.0 / (rho * rho * sinh_v);
    let phi = 2.0 * p * geom.theta;
    match mode {
        BoundaryMode::DirichletDirichlet => {
            let q = (-p * v).exp();
            let c = (p * v).cosh();
            pref / (4.0 * std::f64::consts::PI * alpha)
                * ((1.0 - q) / (c - 1.0) - (phi.cos() - q) / (c - phi.cos()))
        }
        BoundaryMode::NeumannNeumann => {
            let e = (p * v).exp();
            let c = (p * v).cosh();
            pref / (4.0 * std::f64::consts::PI * alpha)
                * ((e - 1.0) / (c - 1.0) + (e - phi.cos()) / (c - phi.cos()))
        }
        BoundaryMode::DirichletNeumann => {
            let c = (p * v).cosh();
            let sh = (0.5 * p * v).sinh();
            pref / (2.0 * std::f64::consts::PI * alpha)
                * (sh / (c - 1.0) - sh * (0.5 * phi).cos() / (c - phi.cos()))
        }
        BoundaryMode::Periodic => {
            let c = (2.0 * p * v).cosh();
            let sh = (2.0 * p * v).sinh();
            pref / (2.0 * std::f64::consts::PI * alpha) * (sh / (c - 1.0))
        }
    }
}

/// Eigenfunction-series oracle for the modified cylinder kernel at two
/// (possibly distinct) points; converges geometrically in `e^(-lambda v)`
/// and refuses to exceed [`EIGENSUM_TERM_CAP`] terms.
pub fn wedge_tilde_eigensum(
    mode: BoundaryMode,
    alpha: f64,
    q: (f64, f64, f64),
    p: (f64, f64, f64),
    t: f64,
) -> f64 {
    let (rho, theta, z) = q;
    let (rhop, thetap, zp) = p;
    let r_minus = ((rho - rhop).powi(2) + (z - zp).powi(2) + t * t).sqrt();
    let r_plus = ((rho + rhop).powi(2) + (z - zp).powi(2) + t * t).sqrt();
    let v = ((r_plus + r_minus) / (r_plus - r_minus)).ln();
    let sinh_v = v.sinh();
    let pref = 1.0 / (std::f64::consts::PI * alpha * rho * rhop * sinh_v);

    let mut acc = 0.0;
    match mode {
        BoundaryMode::DirichletDirichlet => {
            for n in 1..=EIGENSUM_TERM_CAP {
                let lam = n as f64 * std::f64::consts::PI / alpha;
                let term = (lam * theta).sin() * (lam * thetap).sin() * (-lam * v).exp();
                acc += term;
                if (lam * v) > 40.0 {
                    break;
                }
            }
            pref * acc
        }
        BoundaryMode::DirichletNeumann => {
            for n in 0..EIGENSUM_TERM_CAP {
                let lam = (n as f64 + 0.5) * std::f64::consts::PI / alpha;
                acc += (lam * theta).sin() * (lam * thetap).sin() * (-lam * v).exp();
                if (lam * v) > 40.0 {
                    break;
                }
            }
            pref * acc
        }
        BoundaryMode::NeumannNeumann => {
            acc = 1.0;
            for n in 1..=EIGENSUM_TERM_CAP {
                let lam = n as f64 * std::f64::consts::PI / alpha;
                acc += (lam * theta).cos() * (lam * thetap).cos() * (-lam * v).exp();
                if (lam * v) > 40.0 {
                    break;
                }
            }
            pref * acc
        }
        BoundaryMode::Periodic => {
            acc = 1.0;
            for n in 1..=EIGENSUM_TERM_CAP {
                let lam = 2.0 * n as f64 * std::f64::consts::PI / alpha;
                acc += 2.0 * (lam * (theta - thetap)).cos() * (-lam * v).exp();
                if (lam * v) > 40.0 {
                    break;
                }
            }
            0.5 * pref * acc
        }
    }
}
