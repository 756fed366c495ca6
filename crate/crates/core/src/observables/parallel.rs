//! Massless field between parallel hyperplanes (odd spatial dimension):
//! stress tensor, reduced bulk energy and plate pressures through residue
//! extraction on the reduced cylinder kernel.

use super::{xi_critical, ConformalSplit, Frame, Prescription, PressureResult, StressTensor};
use crate::continuation::residue_weighted_checked;
use crate::error::{Error, Result};
use crate::kernels::{reduced_cylinder_jet, reduced_cylinder_trace, BoundaryMode};
use crate::series::{default_len, LaurentSeries};
use crate::specfun::gamma_value;

/// `C_d = (-pi)^(-(d-1)/2) Gamma((d+1)/2)` for odd `d`.
fn c_d(d: usize) -> f64 {
    let half = (d - 1) / 2;
    let sign = if half.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * std::f64::consts::PI.powi(-(half as i32))
        * gamma_value((d as f64 + 1.0) / 2.0).expect("positive half-integer")
}

fn check_dimension(d: usize) -> Result<()> {
    if d.is_multiple_of(2) || d < 3 {
        return Err(Error::EvenDimensionUnsupported(d));
    }
    Ok(())
}

/// Total renormalized tensor at coupling `xi`; `x1` may lie on a plate
/// (used by the boundary-first pressure), interior validation is done by
/// the public entry points.
fn tensor_at(bc: BoundaryMode, d: usize, a: f64, xi: f64, x1: f64) -> Result<StressTensor> {
    let len = default_len();
    let jet = reduced_cylinder_jet(bc, a, x1, len)?;
    let kernel = jet.scalar_part();
    let dxy = jet.partial_pair(0, 1);
    let dxx = jet.partial_pair(0, 0);

    let df = d as f64;
    let cd = c_d(d);
    let p = d as i32 + 1;

    // energy density and transverse block share one bracket
    let bracket_00 = kernel
        .scaled((xi - (df - 2.0) / (4.0 * df)) * df)
        .add_series(&dxy.scaled((0.25 - xi) / (df - 1.0)).shifted(2));
    let res_00 = residue_weighted_checked(&bracket_00, p)?;

    let bracket_11 = kernel.scaled((0.25 - xi) * df).add_series(
        &dxy.scaled(0.25)
            .sub_series(&dxx.scaled(xi))
            .scaled(1.0 / (df - 1.0))
            .shifted(2),
    );
    let res_11 = residue_weighted_checked(&bracket_11, p)?;

    let mut t = StressTensor::zero(Frame::Cartesian, d);
    t.set_sym(0, 0, -cd * res_00);
    t.set_sym(1, 1, -cd * res_11);
    t.set_sym(2, 2, cd * res_00);
    t.set_sym(3, 3, cd * res_00);
    Ok(t)
}

/// Renormalized stress-energy tensor at an interior point of the slab,
/// split into conformal and non-conformal parts.
pub fn stress_parallel(
    bc: BoundaryMode,
    d: usize,
    a: f64,
    xi: f64,
    x1: f64,
) -> Result<ConformalSplit> {
    check_dimension(d)?;
    if !(x1 > 0.0 && x1 < a) {
        return Err(Error::GeometryViolation(format!(
            "x1 = {x1} not strictly inside (0, {a})"
        )));
    }
    ConformalSplit::from_engine(xi, xi_critical(d), |xi| tensor_at(bc, d, a, xi, x1))
}

/// Renormalized reduced bulk energy (energy per unit plate area). The
/// reduced boundary energy vanishes identically for all supported
/// boundary conditions and is not computed.
pub fn reduced_energy_parallel(bc: BoundaryMode, d: usize, a: f64) -> Result<f64> {
    check_dimension(d)?;
    let len = default_len();
    let trace = reduced_cylinder_trace(bc, a, len);
    let res = residue_weighted_checked(&trace, d as i32 + 1)?;
    let df = d as f64;
    // (-1)^(d+1) Gamma(d+1) Gamma(-d/2) / (2 (4 pi)^(d/2))
    let sign = if (d + 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let pref = sign * gamma_value(df + 1.0)? * gamma_value(-df / 2.0)?
        / (2.0 * (4.0 * std::f64::consts::PI).powf(df / 2.0));
    Ok(pref * res)
}

/// Plate selector for the pressure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plate {
    /// The plane `x1 = 0`, outer normal `(-1, 0, ..., 0)`.
    AtZero,
    /// The plane `x1 = a`, outer normal `(+1, 0, ..., 0)`.
    AtA,
}

/// Pressure on a plate by both prescriptions. The periodic configuration
/// has no boundary.
pub fn pressure_parallel(
    bc: BoundaryMode,
    d: usize,
    a: f64,
    xi: f64,
    plate: Plate,
) -> Result<(PressureResult, PressureResult)> {
    check_dimension(d)?;
    if bc == BoundaryMode::Periodic {
        return Err(Error::GeometryViolation(
            "the periodic configuration has no boundary plates".into(),
        ));
    }
    let (x_face, normal) = match plate {
        Plate::AtZero => (0.0, -1.0),
        Plate::AtA => (a, 1.0),
    };

    // Boundary first: regularized T_11 evaluated on the plate, then
    // continued (the continuation is regular, so this is the residue
    // value itself).
    let t11_boundary = tensor_at(bc, d, a, xi, x_face)?.get(1, 1);
    let boundary = PressureResult::finite(
        Prescription::BoundaryFirst,
        [normal * t11_boundary, 0.0, 0.0],
    );

    // Interior limit: extrapolation of T_11(x1) toward the plate. The
    // slab T_11 is position independent (covariant conservation), so
    // moderate probe distances are used; very small distances would
    // degrade the conditioning of the kernel expansion instead.
    let probe = |dist: f64| -> Result<f64> {
        let x = match plate {
            Plate::AtZero => dist,
            Plate::AtA => a - dist,
        };
        Ok(tensor_at(bc, d, a, xi, x)?.get(1, 1))
    };
    let f1 = probe(0.2 * a)?;
    let f2 = probe(0.15 * a)?;
    let f3 = probe(0.1 * a)?;
    // Neville extrapolation to zero distance over the three nodes
    let n12 = (0.2 * f2 - 0.15 * f1) / (0.2 - 0.15);
    let n23 = (0.15 * f3 - 0.1 * f2) / (0.15 - 0.1);
    let t11_limit = (0.2 * n23 - 0.1 * n12) / (0.2 - 0.1);
    let interior =
        PressureResult::finite(Prescription::InteriorLimit, [normal * t11_limit, 0.0, 0.0]);

    let scale = t11_boundary.abs().max(1e-300);
    let rel = (t11_boundary - t11_limit).abs() / scale;
    debug_assert!(rel < 1e-10, "prescriptions disagree by {rel}");
    Ok((boundary, interior))
}

/// Laurent data used by the oracle subcommand and the continuation
/// cross-checks: the diagonal kernel as a plain series.
pub fn reduced_diag_series(bc: BoundaryMode, a: f64, x1: f64) -> Result<LaurentSeries> {
    Ok(reduced_cylinder_jet(bc, a, x1, default_len())?.scalar_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn c_d_values() {
        assert_relative_eq!(c_d(3), -1.0 / PI, max_relative = 1e-13);
        assert_relative_eq!(c_d(5), 2.0 / (PI * PI), max_relative = 1e-13);
    }

    #[test]
    fn dd_tensor_reproduces_classical_values() {
        // A diag(-1,-3,1,1) - (xi - 1/6) B diag(-1,0,1,1),
        // A = pi^2/1440, B = (pi^2/8)(3 - 2 sin^2)/sin^4 at a = 1.
        let a = 1.0;
        for &x1 in &[0.2, 0.5, 0.8] {
            for &xi in &[0.0, 1.0 / 6.0, 0.25] {
                let split =
                    stress_parallel(BoundaryMode::DirichletDirichlet, 3, a, xi, x1).unwrap();
                let total = split.total();
                let s2 = (PI * x1).sin().powi(2);
                let big_a = PI * PI / 1440.0;
                let big_b = PI * PI / 8.0 * (3.0 - 2.0 * s2) / (s2 * s2);
                let expect_00 = -big_a + (xi - 1.0 / 6.0) * big_b;
                let expect_11 = -3.0 * big_a;
                let expect_22 = big_a - (xi - 1.0 / 6.0) * big_b;
                assert_relative_eq!(total.get(0, 0), expect_00, max_relative = 1e-10);
                assert_relative_eq!(total.get(1, 1), expect_11, max_relative = 1e-10);
                assert_relative_eq!(total.get(2, 2), expect_22, max_relative = 1e-10);
                assert_relative_eq!(total.get(3, 3), expect_22, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn periodic_tensor_is_xi_independent() {
        for &xi in &[0.0, 1.0 / 6.0, 0.3] {
            let split = stress_parallel(BoundaryMode::Periodic, 3, 1.0, xi, 0.42).unwrap();
            let total = split.total();
            assert_relative_eq!(total.get(0, 0), -PI * PI / 90.0, max_relative = 1e-11);
            assert_relative_eq!(total.get(1, 1), -3.0 * PI * PI / 90.0, max_relative = 1e-11);
            assert_relative_eq!(total.get(2, 2), PI * PI / 90.0, max_relative = 1e-11);
        }
    }

    #[test]
    fn reduced_energies() {
        assert_relative_eq!(
            reduced_energy_parallel(BoundaryMode::DirichletDirichlet, 3, 1.0).unwrap(),
            -PI * PI / 1440.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            reduced_energy_parallel(BoundaryMode::DirichletNeumann, 3, 1.0).unwrap(),
            7.0 * PI * PI / 11520.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            reduced_energy_parallel(BoundaryMode::Periodic, 3, 1.0).unwrap(),
            -PI * PI / 90.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            reduced_energy_parallel(BoundaryMode::NeumannNeumann, 3, 1.0).unwrap(),
            reduced_energy_parallel(BoundaryMode::DirichletDirichlet, 3, 1.0).unwrap(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn plate_pressures() {
        let a3 = PI * PI / 1440.0;
        let (b, i) =
            pressure_parallel(BoundaryMode::DirichletDirichlet, 3, 1.0, 0.1, Plate::AtZero)
                .unwrap();
        assert_relative_eq!(b.vector[0], 3.0 * a3, max_relative = 1e-10);
        assert_relative_eq!(i.vector[0], 3.0 * a3, max_relative = 1e-9);

        let (b, _) =
            pressure_parallel(BoundaryMode::DirichletDirichlet, 3, 1.0, 0.1, Plate::AtA).unwrap();
        assert_relative_eq!(b.vector[0], -3.0 * a3, max_relative = 1e-10);

        // Dirichlet-Neumann: opposite sign, A = 7 pi^2 / 11520.
        let a_dn = 7.0 * PI * PI / 11520.0;
        let (b, _) =
            pressure_parallel(BoundaryMode::DirichletNeumann, 3, 1.0, 0.25, Plate::AtZero).unwrap();
        assert_relative_eq!(b.vector[0], -3.0 * a_dn, max_relative = 1e-10);
    }

    #[test]
    fn scaling_in_plate_separation() {
        // T(a, x1) == a^-4 T(1, x1/a)
        let a = 1.7;
        let x1 = 0.6;
        let s_a = stress_parallel(BoundaryMode::DirichletDirichlet, 3, a, 0.21, x1)
            .unwrap()
            .total();
        let s_1 = stress_parallel(BoundaryMode::DirichletDirichlet, 3, 1.0, 0.21, x1 / a)
            .unwrap()
            .total();
        for i in 0..4 {
            assert_relative_eq!(
                s_a.get(i, i),
                s_1.get(i, i) / a.powi(4),
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn d5_properties() {
        // closed forms are only printed for d = 3; for d = 5 check the
        // structural properties: tracelessness at the critical coupling
        // and a^-(d+1) scaling.
        let xi5 = xi_critical(5);
        let t = stress_parallel(BoundaryMode::DirichletDirichlet, 5, 1.0, xi5, 0.31)
            .unwrap()
            .total();
        assert!(t.metric_trace().abs() <= 1e-10 * t.max_abs().max(1e-300));

        let a = 1.3;
        let s_a = stress_parallel(BoundaryMode::DirichletDirichlet, 5, a, 0.1, 0.4 * a)
            .unwrap()
            .total();
        let s_1 = stress_parallel(BoundaryMode::DirichletDirichlet, 5, 1.0, 0.1, 0.4)
            .unwrap()
            .total();
        assert_relative_eq!(
            s_a.get(0, 0),
            s_1.get(0, 0) / a.powi(6),
            max_relative = 1e-9
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            stress_parallel(BoundaryMode::DirichletDirichlet, 4, 1.0, 0.0, 0.5),
            Err(Error::EvenDimensionUnsupported(4))
        ));
        assert!(matches!(
            stress_parallel(BoundaryMode::DirichletDirichlet, 3, 1.0, 0.0, 1.5),
            Err(Error::GeometryViolation(_))
        ));
    }
}
