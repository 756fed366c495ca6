//! Printed closed forms for the massless wedge and cosmic string.

use std::f64::consts::PI;

use crate::observables::{Frame, StressTensor};

/// Profile functions (A, B, C, E) of the Dirichlet wedge.
///
/// The C profile carries sin^2 in the numerator: together with B and E
/// it is then the unique set compatible with covariant conservation
/// (`C' = -2E` and `E' = -(3B + C)` for the angle-stripped profiles),
/// which the residue engine obeys identically.
pub fn wedge_dirichlet_profiles(alpha: f64, rho: f64, theta: f64) -> (f64, f64, f64, f64) {
    let s = (PI * theta / alpha).sin();
    let r4 = rho.powi(4);
    let a4 = alpha.powi(4);
    let a = (PI.powi(4) - a4) / (1440.0 * PI * PI * a4 * r4);
    let b = (9.0 * PI.powi(4) - 3.0 * PI * PI * (2.0 * PI * PI + alpha * alpha) * s * s
        + alpha * alpha * (PI * PI - alpha * alpha) * s.powi(4))
        / (24.0 * PI * PI * a4 * s.powi(4) * r4);
    let c = (3.0 * PI * PI - (PI * PI - alpha * alpha) * s * s)
        / (8.0 * PI * PI * alpha * alpha * s * s * r4);
    let e = 3.0 * PI * (PI * theta / alpha).cos() / (8.0 * alpha.powi(3) * s.powi(3) * r4);
    (a, b, c, e)
}

/// Profile functions (A, B, C, E) of the Dirichlet-Neumann wedge
/// (Dirichlet at theta = 0, Neumann at theta = alpha).
///
/// As for the Dirichlet profiles, the sign of B is fixed by covariant
/// conservation against C and E.
pub fn wedge_dn_profiles(alpha: f64, rho: f64, theta: f64) -> (f64, f64, f64, f64) {
    let u = PI * theta / alpha;
    let s = u.sin();
    let r4 = rho.powi(4);
    let a4 = alpha.powi(4);
    let a2 = alpha * alpha;
    let p2 = PI * PI;
    let a = (7.0 * PI.powi(4) + 8.0 * a4) / (11520.0 * p2 * a4 * r4);
    let b = (3.0 * p2 * u.cos() * (11.0 * p2 - 2.0 * a2 + (p2 + 2.0 * a2) * (2.0 * u).cos())
        - 2.0 * a2 * (p2 + 2.0 * a2) * s.powi(4))
        / (96.0 * p2 * a4 * s.powi(4) * r4);
    let c = (6.0 * p2 * u.cos() + (p2 + 2.0 * a2) * s * s) / (16.0 * p2 * a2 * s * s * r4);
    let e = 3.0 * PI * (3.0 + (2.0 * u).cos()) / (32.0 * alpha.powi(3) * s.powi(3) * r4);
    (a, b, c, e)
}

/// Extra Neumann profile `G = (pi^2 - alpha^2) / (12 pi^2 alpha^2 rho^4)`.
pub fn wedge_neumann_g(alpha: f64, rho: f64) -> f64 {
    (PI * PI - alpha * alpha) / (12.0 * PI * PI * alpha * alpha * rho.powi(4))
}

/// Cosmic-string profiles: `A = ((2 pi)^4 - alpha^4) / (1440 pi^2 alpha^4
/// rho^4)`, `G = ((2 pi)^2 - alpha^2) / (24 pi^2 alpha^2 rho^4)`.
pub fn string_profiles(alpha: f64, rho: f64) -> (f64, f64) {
    let r4 = rho.powi(4);
    let a = ((2.0 * PI).powi(4) - alpha.powi(4)) / (1440.0 * PI * PI * alpha.powi(4) * r4);
    let g = ((2.0 * PI).powi(2) - alpha * alpha) / (24.0 * PI * PI * alpha * alpha * r4);
    (a, g)
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    rho: f64,
    theta: f64,
    a: f64,
    conf_sign: f64,
    nc_sign: f64,
    b: f64,
    c: f64,
    e: f64,
) -> StressTensor {
    let mut t = StressTensor::zero(Frame::Cylindrical { rho, theta }, 3);
    t.set_sym(0, 0, conf_sign * -a + nc_sign * (b + c));
    t.set_sym(1, 1, conf_sign * a - nc_sign * b);
    t.set_sym(
        2,
        2,
        conf_sign * -3.0 * a * rho * rho - nc_sign * rho * rho * c,
    );
    t.set_sym(3, 3, conf_sign * a - nc_sign * (b + c));
    t.set_sym(1, 2, nc_sign * rho * e);
    t
}

/// Dirichlet wedge tensor in the cylindrical frame.
pub fn wedge_dirichlet_tensor(alpha: f64, rho: f64, theta: f64, xi: f64) -> StressTensor {
    let (a, b, c, e) = wedge_dirichlet_profiles(alpha, rho, theta);
    assemble(rho, theta, a, 1.0, xi - 1.0 / 6.0, b, c, e)
}

/// Dirichlet-Neumann wedge tensor (conformal part with flipped sign).
pub fn wedge_dn_tensor(alpha: f64, rho: f64, theta: f64, xi: f64) -> StressTensor {
    let (a, b, c, e) = wedge_dn_profiles(alpha, rho, theta);
    assemble(rho, theta, a, -1.0, xi - 1.0 / 6.0, b, c, e)
}

/// Neumann wedge tensor: Dirichlet conformal part, opposite-sign
/// non-conformal profiles plus the G term.
pub fn wedge_neumann_tensor(alpha: f64, rho: f64, theta: f64, xi: f64) -> StressTensor {
    let (a, b, c, e) = wedge_dirichlet_profiles(alpha, rho, theta);
    let mut t = assemble(rho, theta, a, 1.0, -(xi - 1.0 / 6.0), b, c, e);
    let g = wedge_neumann_g(alpha, rho);
    let dx = xi - 1.0 / 6.0;
    t.components[0][0] += dx * g * -2.0;
    t.components[1][1] += -(dx * g);
    t.components[2][2] += dx * g * 3.0 * rho * rho;
    t.components[3][3] += dx * g * 2.0;
    t
}

/// Cosmic-string tensor (angle-independent).
pub fn string_tensor(alpha: f64, rho: f64, theta: f64, xi: f64) -> StressTensor {
    let (a, g) = string_profiles(alpha, rho);
    let dx = xi - 1.0 / 6.0;
    let mut t = StressTensor::zero(Frame::Cylindrical { rho, theta }, 3);
    t.set_sym(0, 0, -a - 2.0 * dx * g);
    t.set_sym(1, 1, a - dx * g);
    t.set_sym(2, 2, -3.0 * a * rho * rho + 3.0 * dx * g * rho * rho);
    t.set_sym(3, 3, a + 2.0 * dx * g);
    t
}

/// Boundary-first wedge pressures on the face theta = alpha (the theta
/// component; the others vanish).
pub fn wedge_pressure_dirichlet(alpha: f64, rho: f64) -> f64 {
    -(PI.powi(4) - alpha.powi(4)) / (480.0 * PI * PI * alpha.powi(4) * rho.powi(3))
}

pub fn wedge_pressure_dn(alpha: f64, rho: f64, xi: f64) -> f64 {
    ((7.0 * PI.powi(4) + 8.0 * alpha.powi(4)) / (480.0 * alpha.powi(4))
        - (xi - 1.0 / 6.0) * (PI * PI + 2.0 * alpha * alpha) / (alpha * alpha))
        / (8.0 * PI * PI * rho.powi(3))
}

pub fn wedge_pressure_neumann(alpha: f64, rho: f64, xi: f64) -> f64 {
    -((PI.powi(4) - alpha.powi(4)) / (120.0 * alpha.powi(4))
        - (xi - 1.0 / 6.0) * (PI * PI - alpha * alpha) / (alpha * alpha))
        / (4.0 * PI * PI * rho.powi(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn dirichlet_amplitude_vanishes_at_pi() {
        let (a, _, _, _) = wedge_dirichlet_profiles(PI, 1.0, 0.4);
        assert!(a.abs() < 1e-18);
    }

    #[test]
    fn amplitude_value() {
        // A at alpha = pi/3, rho = 1: (pi^4 - (pi/3)^4) / (1440 pi^2 (pi/3)^4)
        let (a, _, _, _) = wedge_dirichlet_profiles(PI / 3.0, 1.0, 0.1);
        let expect = (PI.powi(4) - (PI / 3.0).powi(4)) / (1440.0 * PI * PI * (PI / 3.0).powi(4));
        assert_relative_eq!(a, expect, max_relative = 1e-14);
    }

    #[test]
    fn string_vanishes_at_two_pi() {
        let (a, g) = string_profiles(2.0 * PI, 1.0);
        assert!(a.abs() < 1e-18 && g.abs() < 1e-18);
        let t = string_tensor(2.0 * PI, 0.7, 1.0, 0.3);
        assert!(t.max_abs() < 1e-18);
    }

    #[test]
    fn dn_pressure_at_conformal_coupling() {
        let p = wedge_pressure_dn(1.0, 1.0, 1.0 / 6.0);
        let expect = (7.0 * PI.powi(4) + 8.0) / (3840.0 * PI * PI);
        assert_relative_eq!(p, expect, max_relative = 1e-14);
    }
}
