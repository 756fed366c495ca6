//! Rank-two tensor transport between the Cartesian and cylindrical
//! frames, with the convention `x1 = rho sin(theta)`, `x2 = rho
//! cos(theta)`, `x3 = z`.

use super::{Frame, StressTensor};
use crate::error::{Error, Result};

/// Transforms the covariant components to the target frame. The
/// cylindrical chart must carry the point `(rho, theta)`.
pub fn frame_transform(t: &StressTensor, target: Frame) -> Result<StressTensor> {
    match (t.frame, target) {
        (Frame::Cartesian, Frame::Cartesian) => Ok(t.clone()),
        (Frame::Cylindrical { .. }, Frame::Cylindrical { .. }) => Ok(t.clone()),
        (Frame::Cylindrical { rho, theta }, Frame::Cartesian) => {
            // dq^a/dx^mu for q = (t, rho, theta, z), x = (t, x1, x2, x3)
            let j = [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, theta.sin(), theta.cos(), 0.0],
                [0.0, theta.cos() / rho, -theta.sin() / rho, 0.0],
                [0.0, 0.0, 0.0, 1.0],
            ];
            Ok(push(t, &j, Frame::Cartesian))
        }
        (Frame::Cartesian, Frame::Cylindrical { rho, theta }) => {
            if !(rho > 0.0) {
                return Err(Error::GeometryViolation(format!(
                    "cylindrical chart requires rho > 0, got {rho}"
                )));
            }
            // dx^mu/dq^a
            let j = [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, theta.sin(), rho * theta.cos(), 0.0],
                [0.0, theta.cos(), -rho * theta.sin(), 0.0],
                [0.0, 0.0, 0.0, 1.0],
            ];
            Ok(push(t, &j, Frame::Cylindrical { rho, theta }))
        }
    }
}

/// `T'_{mu nu} = J^a_mu J^b_nu T_ab`.
fn push(t: &StressTensor, j: &[[f64; 4]; 4], frame: Frame) -> StressTensor {
    let mut out = StressTensor::zero(frame, t.spatial_dim);
    for mu in 0..4 {
        for nu in 0..4 {
            let mut acc = 0.0;
            for a in 0..4 {
                for b in 0..4 {
                    acc += j[a][mu] * j[b][nu] * t.components[a][b];
                }
            }
            out.components[mu][nu] = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn identity_transform() {
        let t = StressTensor::diagonal(Frame::Cartesian, 3, [1.0, 2.0, 3.0, 4.0]);
        let u = frame_transform(&t, Frame::Cartesian).unwrap();
        assert_eq!(t, u);
    }

    #[test]
    fn axis_alignment_at_theta_zero() {
        // theta = 0: the rho direction is the x2 axis.
        let rho = 1.7;
        let mut t = StressTensor::zero(Frame::Cylindrical { rho, theta: 0.0 }, 3);
        t.set_sym(1, 1, 5.0); // T_rho rho
        t.set_sym(2, 2, 3.0 * rho * rho); // T_theta theta
        t.set_sym(3, 3, 7.0);
        let cart = frame_transform(&t, Frame::Cartesian).unwrap();
        assert_relative_eq!(cart.get(2, 2), 5.0, max_relative = 1e-14); // x2 <- rho
        assert_relative_eq!(cart.get(1, 1), 3.0, max_relative = 1e-14); // x1 <- rho theta
        assert_relative_eq!(cart.get(3, 3), 7.0, max_relative = 1e-14);
    }

    #[test]
    fn round_trip_is_identity() {
        let (rho, theta) = (0.9, 0.8);
        let mut t = StressTensor::zero(Frame::Cartesian, 3);
        t.set_sym(0, 0, -1.0);
        t.set_sym(1, 1, 2.0);
        t.set_sym(2, 2, -0.4);
        t.set_sym(3, 3, 0.7);
        t.set_sym(1, 2, 0.33);
        t.set_sym(1, 3, -0.21);
        let cyl = frame_transform(&t, Frame::Cylindrical { rho, theta }).unwrap();
        let back = frame_transform(&cyl, Frame::Cartesian).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_relative_eq!(back.get(i, j), t.get(i, j), epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn metric_trace_is_frame_invariant() {
        let (rho, theta) = (1.2, PI / 5.0);
        let mut t = StressTensor::zero(Frame::Cylindrical { rho, theta }, 3);
        t.set_sym(0, 0, -2.0);
        t.set_sym(1, 1, 1.0);
        t.set_sym(2, 2, 0.5 * rho * rho);
        t.set_sym(3, 3, 0.25);
        t.set_sym(1, 2, 0.4);
        let cart = frame_transform(&t, Frame::Cartesian).unwrap();
        assert_relative_eq!(t.metric_trace(), cart.metric_trace(), max_relative = 1e-13);
    }
}
