//! Renormalized observables: stress-energy tensors, conformal splits,
//! boundary pressures and reduced energies for the five configuration
//! families.

mod frame;
mod massive;
mod parallel;
mod wedge;

pub use frame::frame_transform;
pub use massive::{
    pressure_halfspace, pressure_rectwedge, stress_halfspace_massive, stress_rectwedge_massive,
    CORNER_CUTOFF_FACTOR,
};
pub use parallel::{
    pressure_parallel, reduced_diag_series, reduced_energy_parallel, stress_parallel, Plate,
};
pub use wedge::{pressure_wedge, stress_wedge};

use crate::error::{Error, Result};
use crate::kernels::BoundaryMode;

/// Critical conformal coupling in `d` spatial dimensions.
pub fn xi_critical(d: usize) -> f64 {
    (d as f64 - 1.0) / (4.0 * d as f64)
}

/// Dirichlet or Neumann condition on one flat face; the sign is the
/// image-charge weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceBc {
    Dirichlet,
    Neumann,
}

impl FaceBc {
    pub fn sign(&self) -> f64 {
        match self {
            FaceBc::Dirichlet => -1.0,
            FaceBc::Neumann => 1.0,
        }
    }

    pub fn from_sign(s: f64) -> Result<Self> {
        if s == -1.0 {
            Ok(FaceBc::Dirichlet)
        } else if s == 1.0 {
            Ok(FaceBc::Neumann)
        } else {
            Err(Error::DomainViolation(format!(
                "face sign must be -1 (Dirichlet) or +1 (Neumann), got {s}"
            )))
        }
    }
}

/// Coordinate frame of a stress tensor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Frame {
    /// Inertial coordinates (t, x1, x2, x3).
    Cartesian,
    /// Coordinates (t, rho, theta, z) with spatial metric diag(1, rho^2, 1).
    Cylindrical { rho: f64, theta: f64 },
}

/// Symmetric rank-two tensor in signature (-,+,+,+). For parallel-plane
/// configurations in spatial dimension d > 3 the transverse directions
/// are all equal; row/column 2 stands for each of them and
/// `spatial_dim` records the multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct StressTensor {
    pub components: [[f64; 4]; 4],
    pub frame: Frame,
    pub spatial_dim: usize,
}

impl StressTensor {
    pub fn zero(frame: Frame, spatial_dim: usize) -> Self {
        Self {
            components: [[0.0; 4]; 4],
            frame,
            spatial_dim,
        }
    }

    pub fn diagonal(frame: Frame, spatial_dim: usize, diag: [f64; 4]) -> Self {
        let mut t = Self::zero(frame, spatial_dim);
        for (i, &v) in diag.iter().enumerate() {
            t.components[i][i] = v;
        }
        t
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.components[i][j]
    }

    /// Sets `T_ij` and `T_ji`.
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.components[i][j] = v;
        self.components[j][i] = v;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.components[i][j] += rhs.components[i][j];
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scaled(-1.0))
    }

    pub fn scaled(&self, c: f64) -> Self {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.components[i][j] *= c;
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        let mut m: f64 = 0.0;
        for row in &self.components {
            for &v in row {
                m = m.max(v.abs());
            }
        }
        m
    }

    /// `g^{mu nu} T_{mu nu}` with the inverse metric of the tensor's
    /// frame; transverse multiplicity is honored for d > 3.
    pub fn metric_trace(&self) -> f64 {
        let c = &self.components;
        match self.frame {
            Frame::Cartesian => {
                if self.spatial_dim <= 3 {
                    -c[0][0] + c[1][1] + c[2][2] + c[3][3]
                } else {
                    -c[0][0] + c[1][1] + (self.spatial_dim as f64 - 1.0) * c[2][2]
                }
            }
            Frame::Cylindrical { rho, .. } => -c[0][0] + c[1][1] + c[2][2] / (rho * rho) + c[3][3],
        }
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..4 {
            for j in 0..4 {
                if self.components[i][j] != self.components[j][i] {
                    return false;
                }
            }
        }
        true
    }
}

/// Conformal/non-conformal decomposition at the critical coupling:
/// `total = conformal + (xi - xi_d) * nonconformal`.
#[derive(Debug, Clone)]
pub struct ConformalSplit {
    pub conformal: StressTensor,
    pub nonconformal: StressTensor,
    pub xi: f64,
    pub xi_d: f64,
}

impl ConformalSplit {
    /// Reassembles the total tensor at the recorded coupling.
    pub fn total(&self) -> StressTensor {
        self.conformal
            .add(&self.nonconformal.scaled(self.xi - self.xi_d))
    }

    /// Builds a split from an engine callable that evaluates the total
    /// tensor at a given coupling; every supported observable is affine
    /// in the coupling, so two evaluations determine the split exactly.
    pub fn from_engine(
        xi: f64,
        xi_d: f64,
        mut engine: impl FnMut(f64) -> Result<StressTensor>,
    ) -> Result<Self> {
        let conformal = engine(xi_d)?;
        let at_plus_one = engine(xi_d + 1.0)?;
        let nonconformal = at_plus_one.sub(&conformal);
        Ok(Self {
            conformal,
            nonconformal,
            xi,
            xi_d,
        })
    }
}

/// Which of the two prescriptions produced a pressure value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prescription {
    /// Evaluate the regularized stress on the boundary, then continue.
    BoundaryFirst,
    /// Renormalize at interior points, then move to the boundary.
    InteriorLimit,
}

/// Pressure vector in the local frame of the face.
#[derive(Debug, Clone)]
pub struct PressureResult {
    pub vector: [f64; 3],
    pub prescription: Prescription,
    pub finite: bool,
    /// Fitted power of the distance to the face when the interior-limit
    /// prescription diverges.
    pub divergence_exponent: Option<f64>,
}

impl PressureResult {
    pub fn finite(prescription: Prescription, vector: [f64; 3]) -> Self {
        Self {
            vector,
            prescription,
            finite: true,
            divergence_exponent: None,
        }
    }
}

/// Physical setup selector.
#[derive(Debug, Clone, PartialEq)]
pub enum Configuration {
    ParallelPlanes {
        d: usize,
        a: f64,
        bc: BoundaryMode,
    },
    HalfSpaceMassive {
        face: FaceBc,
        m: f64,
        kappa: f64,
    },
    RectWedgeMassive {
        face1: FaceBc,
        face2: FaceBc,
        m: f64,
        kappa: f64,
    },
    AngularWedge {
        mode: BoundaryMode,
        alpha: f64,
    },
    /// The wedge with periodic angular identification.
    CosmicString {
        alpha: f64,
    },
}

impl Configuration {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Configuration::ParallelPlanes { d, a, .. } => {
                if d % 2 == 0 || d < 3 {
                    return Err(Error::EvenDimensionUnsupported(d));
                }
                if !(a > 0.0) {
                    return Err(Error::GeometryViolation(format!(
                        "plate separation must be positive, got {a}"
                    )));
                }
                Ok(())
            }
            Configuration::HalfSpaceMassive { m, kappa, .. }
            | Configuration::RectWedgeMassive { m, kappa, .. } => {
                if !(m > 0.0) {
                    return Err(Error::GeometryViolation(format!(
                        "mass must be positive, got {m}"
                    )));
                }
                if !(kappa > 0.0) {
                    return Err(Error::GeometryViolation(format!(
                        "mass scale kappa must be positive, got {kappa}"
                    )));
                }
                Ok(())
            }
            Configuration::AngularWedge { alpha, .. } | Configuration::CosmicString { alpha } => {
                if !(alpha > 0.0 && alpha <= 2.0 * std::f64::consts::PI) {
                    return Err(Error::GeometryViolation(format!(
                        "opening angle must lie in (0, 2 pi], got {alpha}"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Critical coupling of the configuration's spatial dimension.
    pub fn xi_d(&self) -> f64 {
        match *self {
            Configuration::ParallelPlanes { d, .. } => xi_critical(d),
            _ => xi_critical(3),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<StressTensor>();
        assert_send_sync::<ConformalSplit>();
        assert_send_sync::<Configuration>();
        assert_send_sync::<PressureResult>();
        assert_send_sync::<crate::series::LaurentSeries>();
        assert_send_sync::<crate::jet::JetSeries>();
    }

    #[test]
    fn critical_coupling() {
        assert_eq!(xi_critical(3), 1.0 / 6.0);
        assert_eq!(xi_critical(5), 0.2);
    }

    #[test]
    fn split_reassembles() {
        let engine = |xi: f64| {
            Ok(StressTensor::diagonal(
                Frame::Cartesian,
                3,
                [1.0 + xi, 2.0 - 3.0 * xi, 0.5 * xi, 0.0],
            ))
        };
        let split = ConformalSplit::from_engine(0.25, 1.0 / 6.0, engine).unwrap();
        let direct = StressTensor::diagonal(Frame::Cartesian, 3, [1.25, 2.0 - 0.75, 0.125, 0.0]);
        assert!(split.total().sub(&direct).max_abs() < 1e-14);
    }

    #[test]
    fn validation_rejects_even_dimension() {
        let cfg = Configuration::ParallelPlanes {
            d: 4,
            a: 1.0,
            bc: BoundaryMode::DirichletDirichlet,
        };
        assert!(matches!(
            cfg.validate(),
            Err(Error::EvenDimensionUnsupported(4))
        ));
    }
}
