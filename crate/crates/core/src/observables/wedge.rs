//! Massless field in a three-dimensional wedge (and the cosmic string):
//! cylindrical-frame stress tensor and boundary pressures through residue
//! extraction on the modified cylinder kernel.
//!
//! With `S` the kernel jet on the diagonal, the renormalized components
//! are residues at `t = 0` of
//!
//! `T_00: t^-3 [ (1/2 + 2 xi) S + (1/4 - xi) t^2 Lap S ]`
//! `T_ij: t^-3 [ (1/4 - xi) d_ij (2 S - t^2 Lap S)
//!               + t^2 ((1/2 - xi) D_qp - xi Nabla_qq) S ]`
//!
//! where `Lap = d_rho d_rho' + rho^-2 d_theta d_theta' + d_z d_z'` is the
//! metric contraction of mixed derivatives and `Nabla` carries the
//! cylindrical Christoffel corrections.

use super::{xi_critical, ConformalSplit, Frame, Prescription, PressureResult, StressTensor};
use crate::continuation::residue_weighted_checked;
use crate::error::Result;
use crate::jet::JetSeries;
use crate::kernels::{wedge_mod_cylinder_jet, BoundaryMode, WedgeGeometry, WedgeVar};
use crate::series::{default_len, LaurentSeries};

/// Relative probe distances (in units of alpha) for the interior-limit
/// divergence fit.
const PROBE_FRACTIONS: [f64; 3] = [0.1, 0.05, 0.025];

/// Slope threshold below which the interior limit is declared divergent.
const DIVERGENCE_SLOPE: f64 = -0.5;

struct KernelDerivatives {
    value: LaurentSeries,
    /// Metric contraction of the mixed q-p second derivatives.
    laplacian: LaurentSeries,
    /// Mixed q-p second derivatives, indexed by (rho, theta, z) = (0, 1, 2).
    mixed: [[LaurentSeries; 3]; 3],
    /// Covariant q-q second derivatives.
    covariant: [[LaurentSeries; 3]; 3],
}

fn jet_builder(
    mode: BoundaryMode,
    geom: &WedgeGeometry,
    len: usize,
) -> impl Fn(&[WedgeVar]) -> Result<JetSeries> + '_ {
    move |active| wedge_mod_cylinder_jet(mode, geom, active, len)
}

/// Assembles all kernel derivatives from pairwise jets (one or two
/// perturbation slots active at a time).
fn derivatives(mode: BoundaryMode, geom: &WedgeGeometry) -> Result<KernelDerivatives> {
    let len = default_len();
    let jet = jet_builder(mode, geom, len);
    let rho = geom.rho;

    let value = jet(&[])?.scalar_part();

    let d_rr = jet(&[WedgeVar::Rho, WedgeVar::RhoP])?.partial_pair(0, 1);
    let d_tt = jet(&[WedgeVar::Theta, WedgeVar::ThetaP])?.partial_pair(0, 1);
    let d_zz = jet(&[WedgeVar::Z, WedgeVar::ZP])?.partial_pair(0, 1);
    let d_rt = jet(&[WedgeVar::Rho, WedgeVar::ThetaP])?.partial_pair(0, 1);
    let d_zt = jet(&[WedgeVar::Z, WedgeVar::ThetaP])?.partial_pair(0, 1);
    let d_rz = jet(&[WedgeVar::Rho, WedgeVar::ZP])?.partial_pair(0, 1);

    let laplacian = d_rr
        .add_series(&d_tt.scaled(1.0 / (rho * rho)))
        .add_series(&d_zz);

    // pure-q second derivatives and the first derivatives entering the
    // Christoffel corrections
    let j_r = jet(&[WedgeVar::Rho])?;
    let q_rr = j_r.partial_pair(0, 0);
    let dq_r = j_r.partial_first(0);
    let j_t = jet(&[WedgeVar::Theta])?;
    let q_tt = j_t.partial_pair(0, 0);
    let dq_t = j_t.partial_first(0);
    let q_zz = jet(&[WedgeVar::Z])?.partial_pair(0, 0);
    let q_rt = jet(&[WedgeVar::Rho, WedgeVar::Theta])?.partial_pair(0, 1);
    let q_rz = jet(&[WedgeVar::Rho, WedgeVar::Z])?.partial_pair(0, 1);
    let q_tz = jet(&[WedgeVar::Theta, WedgeVar::Z])?.partial_pair(0, 1);

    // Nabla_rho rho = d_rho rho; Nabla_theta theta = d_theta theta + rho d_rho;
    // Nabla_rho theta = d_rho theta - (1/rho) d_theta; z rows are flat.
    let n_tt = q_tt.add_series(&dq_r.scaled(rho));
    let n_rt = q_rt.sub_series(&dq_t.scaled(1.0 / rho));

    let mixed = [
        [d_rr.clone(), d_rt.clone(), d_rz.clone()],
        [d_rt, d_tt, d_zt.clone()],
        [d_rz, d_zt, d_zz],
    ];
    let covariant = [
        [q_rr, n_rt.clone(), q_rz.clone()],
        [n_rt, n_tt, q_tz.clone()],
        [q_rz, q_tz, q_zz],
    ];
    Ok(KernelDerivatives {
        value,
        laplacian,
        mixed,
        covariant,
    })
}

/// One spatial component from the assembled derivatives. The isotropic
/// part carries the spatial metric of the cylindrical chart,
/// `g = diag(1, rho^2, 1)`.
fn component_ij(kd: &KernelDerivatives, rho: f64, xi: f64, i: usize, j: usize) -> Result<f64> {
    let mut bracket = kd.mixed[i][j]
        .scaled(0.5 - xi)
        .sub_series(&kd.covariant[i][j].scaled(xi))
        .shifted(2);
    if i == j {
        let g_ii = if i == 1 { rho * rho } else { 1.0 };
        bracket = bracket.add_series(
            &kd.value
                .scaled(2.0)
                .sub_series(&kd.laplacian.shifted(2))
                .scaled((0.25 - xi) * g_ii),
        );
    }
    residue_weighted_checked(&bracket, 3)
}

fn tensor_at(mode: BoundaryMode, geom: &WedgeGeometry, xi: f64) -> Result<StressTensor> {
    let kd = derivatives(mode, geom)?;
    let bracket_00 = kd
        .value
        .scaled(0.5 + 2.0 * xi)
        .add_series(&kd.laplacian.scaled(0.25 - xi).shifted(2));
    let t00 = residue_weighted_checked(&bracket_00, 3)?;

    let mut t = StressTensor::zero(
        Frame::Cylindrical {
            rho: geom.rho,
            theta: geom.theta,
        },
        3,
    );
    t.set_sym(0, 0, t00);
    for i in 0..3 {
        for j in i..3 {
            t.set_sym(i + 1, j + 1, component_ij(&kd, geom.rho, xi, i, j)?);
        }
    }
    Ok(t)
}

/// Renormalized stress tensor at an interior point of the wedge, in the
/// cylindrical frame (rows ordered t, rho, theta, z).
pub fn stress_wedge(mode: BoundaryMode, geom: &WedgeGeometry, xi: f64) -> Result<ConformalSplit> {
    // constructor of WedgeGeometry guarantees an interior point for the
    // stress path; the pressure path uses its own face constructor
    ConformalSplit::from_engine(xi, xi_critical(3), |xi| tensor_at(mode, geom, xi))
}

/// Pressure on the face `theta = alpha` by both prescriptions. The
/// boundary-first route is finite; the interior-limit route diverges for
/// every coupling with a non-vanishing non-conformal part, and is
/// returned with the fitted power of the distance to the face.
pub fn pressure_wedge(
    mode: BoundaryMode,
    alpha: f64,
    rho: f64,
    xi: f64,
) -> Result<(PressureResult, PressureResult)> {
    let face = WedgeGeometry::on_face_alpha(alpha, rho)?;
    let kd = derivatives(mode, &face)?;
    // p_i = T_i theta / rho on the face (outer normal n^theta = 1/rho)
    let p_rho = component_ij(&kd, rho, xi, 0, 1)? / rho;
    let p_theta = component_ij(&kd, rho, xi, 1, 1)? / rho;
    let p_z = component_ij(&kd, rho, xi, 2, 1)? / rho;
    let boundary = PressureResult::finite(Prescription::BoundaryFirst, [p_rho, p_theta, p_z]);

    // Interior limit: renormalize at theta = alpha (1 - fraction), then
    // fit |p| against the distance on a log-log scale.
    let mut probes = Vec::new();
    for &f in &PROBE_FRACTIONS {
        let g = WedgeGeometry::interior(alpha, rho, alpha * (1.0 - f))?;
        let t = tensor_at(mode, &g, xi)?;
        let vec = [t.get(1, 2) / rho, t.get(2, 2) / rho, t.get(3, 2) / rho];
        let mag = vec.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        probes.push((alpha * f, vec, mag));
    }
    let slope = log_log_slope(&probes);
    let innermost = probes.last().expect("probes are non-empty");
    let divergent = slope < DIVERGENCE_SLOPE;
    let interior = PressureResult {
        vector: innermost.1,
        prescription: Prescription::InteriorLimit,
        finite: !divergent,
        divergence_exponent: divergent.then_some(slope),
    };
    Ok((boundary, interior))
}

/// Least-squares slope of ln(magnitude) against ln(distance).
fn log_log_slope(probes: &[(f64, [f64; 3], f64)]) -> f64 {
    let n = probes.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(dist, _, mag) in probes {
        let x = dist.ln();
        let y = mag.max(1e-300).ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}
