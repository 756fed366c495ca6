//! Printed closed forms for the massive half-space and rectangular
//! wedge at d = 3, plus their zero-mass limits.

use std::f64::consts::PI;

use crate::error::Result;
use crate::observables::{Frame, StressTensor};
use crate::specfun::bessel_k;

fn k1(z: f64) -> Result<f64> {
    bessel_k(1, z)
}

fn k2(z: f64) -> Result<f64> {
    bessel_k(2, z)
}

fn k3(z: f64) -> Result<f64> {
    bessel_k(3, z)
}

/// Half-space bounded by one plane at `x1 = 0` with image weight
/// `alpha1` (`-1` Dirichlet, `+1` Neumann).
///
/// The coupling-dependent part carries the diag(-1, 0, 1, 1) structure
/// of its own zero-mass limit: opposite signs in the energy density and
/// the transverse pressures.
pub fn halfspace_tensor(alpha1: f64, m: f64, kappa: f64, xi: f64, x1: f64) -> Result<StressTensor> {
    let z = 2.0 * m * x1;
    let lg = (m / (2.0 * kappa)).ln();
    let m4 = m.powi(4);
    let nc = alpha1 * (xi - 1.0 / 6.0) * m4 / (PI * PI) * (z * k1(z)? + 3.0 * k2(z)?) / (z * z);

    let t00 = m4 / (384.0 * PI * PI) * (3.0 * (4.0 * lg + 1.0) + 32.0 * alpha1 * k1(z)? / z) - nc;
    let t11 = -m4 / (128.0 * PI * PI) * (4.0 * lg - 3.0);
    let t22 = -m4 / (384.0 * PI * PI) * (3.0 * (4.0 * lg - 3.0) + 32.0 * alpha1 * k1(z)? / z) + nc;

    Ok(StressTensor::diagonal(
        Frame::Cartesian,
        3,
        [t00, t11, t22, t22],
    ))
}

/// Half-space pressure on the plane: `p_i = -delta_i1 T_11`.
pub fn halfspace_pressure(m: f64, kappa: f64) -> f64 {
    let lg = (m / (2.0 * kappa)).ln();
    m.powi(4) / (128.0 * PI * PI) * (4.0 * lg - 3.0)
}

/// Rectangular wedge bounded by the half-planes `x1 = 0` and `x2 = 0`
/// with image weights `alpha1`, `alpha2`.
pub fn rectwedge_tensor(
    alpha1: f64,
    alpha2: f64,
    m: f64,
    kappa: f64,
    xi: f64,
    x1: f64,
    x2: f64,
) -> Result<StressTensor> {
    let m4 = m.powi(4);
    let lg = (m / (2.0 * kappa)).ln();
    let rho = (x1 * x1 + x2 * x2).sqrt();
    let z1 = 2.0 * m * x1;
    let z2 = 2.0 * m * x2;
    let zr = 2.0 * m * rho;
    let a12 = alpha1 * alpha2;
    let dx = xi - 1.0 / 6.0;

    // shared combinations
    let f1 = |z: f64| -> Result<f64> { Ok(k1(z)? / z) };
    let fm = |z: f64| -> Result<f64> { Ok((z * k1(z)? - k2(z)?) / (z * z)) };
    let fp = |z: f64| -> Result<f64> { Ok((z * k1(z)? + 3.0 * k2(z)?) / (z * z)) };
    let f2p = |z: f64| -> Result<f64> { Ok((z * k1(z)? + 2.0 * k2(z)?) / (z * z)) };

    let sum_f1 = alpha1 * f1(z1)? + alpha2 * f1(z2)?;
    let sum_fp = alpha1 * fp(z1)? + alpha2 * fp(z2)?;

    let t00_c =
        m4 / (384.0 * PI * PI) * (3.0 * (4.0 * lg + 1.0) + 32.0 * sum_f1 + 32.0 * a12 * fm(zr)?);
    let t00_n = -m4 / (PI * PI) * (sum_fp + a12 * f2p(zr)?);

    let t33_c =
        -m4 / (384.0 * PI * PI) * (3.0 * (4.0 * lg - 3.0) + 32.0 * sum_f1 + 32.0 * a12 * fm(zr)?);
    let t33_n = m4 / (PI * PI) * (sum_fp + a12 * f2p(zr)?);

    // exchange partner of coordinate i (1 <-> 2)
    let swap_alpha = [alpha2, alpha1];
    let swap_z = [z2, z1];
    let x = [x1, x2];

    let mut t = StressTensor::diagonal(Frame::Cartesian, 3, [0.0; 4]);
    t.set_sym(0, 0, t00_c + dx * t00_n);
    t.set_sym(3, 3, t33_c + dx * t33_n);
    for i in 0..2 {
        let c = -m4 / (384.0 * PI * PI)
            * (3.0 * (4.0 * lg - 3.0)
                + 32.0 * swap_alpha[i] * f1(swap_z[i])?
                + 32.0 * a12 * (fp(zr)? - 4.0 * m * m * x[i] * x[i] * k3(zr)? / zr.powi(3)));
        let n = m4 / (PI * PI)
            * (swap_alpha[i] * fp(swap_z[i])?
                + a12 * (fp(zr)? - 4.0 * m * m * x[i] * x[i] * k3(zr)? / zr.powi(3)));
        t.set_sym(i + 1, i + 1, c + dx * n);
    }
    // off-diagonal 12-component: only the double-image term contributes
    let c12 =
        -m4 / (384.0 * PI * PI) * 32.0 * a12 * (-4.0 * m * m * x1 * x2 * k3(zr)? / zr.powi(3));
    let n12 = m4 / (PI * PI) * a12 * (-4.0 * m * m * x1 * x2 * k3(zr)? / zr.powi(3));
    t.set_sym(1, 2, c12 + dx * n12);
    Ok(t)
}

/// Pressure at a point of the face `x1 = 0` of the rectangular wedge,
/// `x2` from the edge; the only non-vanishing component is along x1.
pub fn rectwedge_pressure(
    alpha1: f64,
    alpha2: f64,
    m: f64,
    kappa: f64,
    xi: f64,
    x2: f64,
) -> Result<f64> {
    let z = 2.0 * m * x2;
    let lg = (m / (2.0 * kappa)).ln();
    let m4 = m.powi(4);
    let conformal = m4 / (384.0 * PI * PI)
        * (3.0 * (4.0 * lg - 3.0)
            + 32.0 * alpha2 * ((1.0 + alpha1) * z * k1(z)? + 3.0 * alpha1 * k2(z)?) / (z * z));
    let nonconformal =
        -(xi - 1.0 / 6.0) * m4 / (PI * PI) * (1.0 + alpha1) * alpha2 * (z * k1(z)? + 3.0 * k2(z)?)
            / (z * z);
    Ok(conformal + nonconformal)
}

/// Zero-mass limit of the half-space tensor:
/// `(xi - 1/6) (3 alpha1 / 8 pi^2 x1^4) diag(-1, 0, 1, 1)`.
pub fn halfspace_massless_tensor(alpha1: f64, xi: f64, x1: f64) -> StressTensor {
    let amp = (xi - 1.0 / 6.0) * 3.0 * alpha1 / (8.0 * PI * PI * x1.powi(4));
    StressTensor::diagonal(Frame::Cartesian, 3, [-amp, 0.0, amp, amp])
}

/// Zero-mass limit of the rectangular-wedge tensor.
pub fn rectwedge_massless_tensor(
    alpha1: f64,
    alpha2: f64,
    xi: f64,
    x1: f64,
    x2: f64,
) -> StressTensor {
    let rho2 = x1 * x1 + x2 * x2;
    let rho4 = rho2 * rho2;
    let a12 = alpha1 * alpha2;
    let dx = xi - 1.0 / 6.0;

    let a1 = 1.0 - 4.0 * x2 * x2 / rho2;
    let a2 = 1.0 - 4.0 * x1 * x1 / rho2;
    let b = 4.0 * x1 * x2 / rho2;
    let c0 = alpha1 / x1.powi(4) + alpha2 / x2.powi(4) + a12 / rho4;
    let c1 = alpha2 / x2.powi(4);
    let c2 = alpha1 / x1.powi(4);

    let lead = a12 / (96.0 * PI * PI * rho4);
    let sub = a12 / (8.0 * PI * PI * rho4);
    let mut t = StressTensor::zero(Frame::Cartesian, 3);
    t.set_sym(0, 0, -lead + dx * sub);
    t.set_sym(1, 1, lead * a1 - dx * sub * a1);
    t.set_sym(2, 2, lead * a2 - dx * sub * a2);
    t.set_sym(3, 3, lead - dx * sub);
    t.set_sym(1, 2, lead * b - dx * sub * b);
    // the extra diagonal (xi - 1/6) (3 / 8 pi^2) diag(-C0, C1, C2, C0)
    let extra = dx * 3.0 / (8.0 * PI * PI);
    t.components[0][0] += -extra * c0;
    t.components[1][1] += extra * c1;
    t.components[2][2] += extra * c2;
    t.components[3][3] += extra * c0;
    t
}

/// Zero-mass limit of the rectangular-wedge pressure on `x1 = 0`:
/// `p1 = alpha1 alpha2 / (32 pi^2 x2^4)
///       - (xi - 1/6) 3 (1 + alpha1) alpha2 / (8 pi^2 x2^4)`.
pub fn rectwedge_massless_pressure(alpha1: f64, alpha2: f64, xi: f64, x2: f64) -> f64 {
    alpha1 * alpha2 / (32.0 * PI * PI * x2.powi(4))
        - (xi - 1.0 / 6.0) * 3.0 * (1.0 + alpha1) * alpha2 / (8.0 * PI * PI * x2.powi(4))
}
