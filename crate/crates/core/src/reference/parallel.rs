//! Printed closed forms for the massless parallel-hyperplane family at
//! d = 3.

use std::f64::consts::PI;

use crate::observables::{Frame, StressTensor};

/// Conformal amplitude of the Dirichlet-Dirichlet (and Neumann-Neumann)
/// slab: `A = pi^2 / (1440 a^4)`.
pub fn parallel_dd_amplitude(a: f64) -> f64 {
    PI * PI / (1440.0 * a.powi(4))
}

/// Non-conformal profile of the DD/NN slab:
/// `B = (pi^2 / 8 a^4) (3 - 2 sin^2(pi x1 / a)) / sin^4(pi x1 / a)`.
pub fn parallel_dd_profile(a: f64, x1: f64) -> f64 {
    let s2 = (PI * x1 / a).sin().powi(2);
    PI * PI / (8.0 * a.powi(4)) * (3.0 - 2.0 * s2) / (s2 * s2)
}

/// Conformal amplitude of the Dirichlet-Neumann slab:
/// `A = 7 pi^2 / (11520 a^4)`.
pub fn parallel_dn_amplitude(a: f64) -> f64 {
    7.0 * PI * PI / (11520.0 * a.powi(4))
}

/// Non-conformal profile of the DN slab:
/// `B = (pi^2 / 64 a^4) (23 cos(pi x1/a) + cos(3 pi x1/a)) / sin^4(pi x1/a)`.
pub fn parallel_dn_profile(a: f64, x1: f64) -> f64 {
    let c = PI * x1 / a;
    PI * PI / (64.0 * a.powi(4)) * (23.0 * c.cos() + (3.0 * c).cos()) / c.sin().powi(4)
}

fn split_tensor(a_amp: f64, conf_sign: [f64; 4], b: f64, xi: f64) -> StressTensor {
    let mut t = StressTensor::diagonal(
        Frame::Cartesian,
        3,
        [
            a_amp * conf_sign[0],
            a_amp * conf_sign[1],
            a_amp * conf_sign[2],
            a_amp * conf_sign[3],
        ],
    );
    let nc = [-1.0, 0.0, 1.0, 1.0];
    for (i, &w) in nc.iter().enumerate() {
        t.components[i][i] -= (xi - 1.0 / 6.0) * b * w;
    }
    t
}

/// Full renormalized slab tensor, Dirichlet on both plates:
/// `A diag(-1,-3,1,1) - (xi - 1/6) B diag(-1,0,1,1)`.
pub fn parallel_dd_tensor(a: f64, xi: f64, x1: f64) -> StressTensor {
    split_tensor(
        parallel_dd_amplitude(a),
        [-1.0, -3.0, 1.0, 1.0],
        parallel_dd_profile(a, x1),
        xi,
    )
}

/// Neumann on both plates: conformal part as DD, non-conformal sign
/// flipped.
pub fn parallel_nn_tensor(a: f64, xi: f64, x1: f64) -> StressTensor {
    split_tensor(
        parallel_dd_amplitude(a),
        [-1.0, -3.0, 1.0, 1.0],
        -parallel_dd_profile(a, x1),
        xi,
    )
}

/// Dirichlet at x1 = 0, Neumann at x1 = a:
/// `A diag(1,3,-1,-1) - (xi - 1/6) B diag(-1,0,1,1)`.
pub fn parallel_dn_tensor(a: f64, xi: f64, x1: f64) -> StressTensor {
    split_tensor(
        parallel_dn_amplitude(a),
        [1.0, 3.0, -1.0, -1.0],
        parallel_dn_profile(a, x1),
        xi,
    )
}

/// Periodic identification: `(pi^2 / 90 a^4) diag(-1,-3,1,1)`, coupling
/// independent.
pub fn parallel_periodic_tensor(a: f64) -> StressTensor {
    let amp = PI * PI / (90.0 * a.powi(4));
    StressTensor::diagonal(Frame::Cartesian, 3, [-amp, -3.0 * amp, amp, amp])
}

/// Plate pressure (component along the inward slab axis) for the DD/NN
/// slab: `+3A` on the plate at x1 = 0, `-3A` at x1 = a.
pub fn parallel_dd_pressure(a: f64, at_zero: bool) -> f64 {
    let p = 3.0 * parallel_dd_amplitude(a);
    if at_zero {
        p
    } else {
        -p
    }
}

/// DN slab: opposite sign, with the DN amplitude.
pub fn parallel_dn_pressure(a: f64, at_zero: bool) -> f64 {
    let p = 3.0 * parallel_dn_amplitude(a);
    if at_zero {
        -p
    } else {
        p
    }
}
