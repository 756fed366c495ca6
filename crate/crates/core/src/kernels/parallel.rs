//! Reduced one-dimensional cylinder kernels for the parallel-hyperplane
//! configurations on the interval `(0, a)`.

use num_complex::Complex64;

use super::BoundaryMode;
use crate::error::{Error, Result};
use crate::jet::{jet_cos, JetSeries};
use crate::series::{cosh_ct, exp_ct, sinh_ct, LaurentSeries};

/// Kernel on the diagonal, expanded in `t` and to second order in the
/// point splittings `dx` (variable 0, on the first argument) and `dy`
/// (variable 1, on the second argument).
///
/// Built from the resummed cosh/cos/exp closed forms, never from the
/// eigenfunction sum. `x1` may sit on the boundary; stress evaluation
/// restricts to the interior, the boundary-first pressure prescription
/// does not.
pub fn reduced_cylinder_jet(bc: BoundaryMode, a: f64, x1: f64, len: usize) -> Result<JetSeries> {
    check_interval(a, x1)?;
    let c = std::f64::consts::PI / a;
    let diff = JetSeries::linear_form(2, 0.0, &[c, -c], len); // c (dx - dy)
    let sum = JetSeries::linear_form(2, 0.0, &[c, c], len); // c (dx + dy), around 2 c x1
    let phi = 2.0 * c * x1;

    match bc {
        BoundaryMode::DirichletDirichlet | BoundaryMode::NeumannNeumann => {
            let cosh = JetSeries::from_series(2, cosh_ct(c, len));
            let e = JetSeries::from_series(2, exp_ct(-c, len));
            let f_diff = fraction(&jet_cos(0.0, &diff, len), &e, &cosh)?;
            let f_sum = fraction(&jet_cos(phi, &sum, len), &e, &cosh)?;
            let combined = if bc == BoundaryMode::DirichletDirichlet {
                f_diff.sub_jet(&f_sum)
            } else {
                f_diff.add_jet(&f_sum)
            };
            Ok(combined.scaled(0.5 / a))
        }
        BoundaryMode::DirichletNeumann => {
            let cosh = JetSeries::from_series(2, cosh_ct(c, len));
            let sh_half = JetSeries::from_series(2, sinh_ct(0.5 * c, len));
            let half_diff = diff.scaled(0.5);
            let half_sum = sum.scaled(0.5);
            let n_diff = sh_half.mul_jet(&jet_cos(0.0, &half_diff, len));
            let n_sum = sh_half.mul_jet(&jet_cos(0.5 * phi, &half_sum, len));
            let d_diff = cosh.sub_jet(&jet_cos(0.0, &diff, len));
            let d_sum = cosh.sub_jet(&jet_cos(phi, &sum, len));
            let f = n_diff
                .mul_jet(&d_diff.inverted()?)
                .sub_jet(&n_sum.mul_jet(&d_sum.inverted()?));
            Ok(f.scaled(1.0 / a))
        }
        BoundaryMode::Periodic => {
            let cp = 2.0 * c;
            let diff_p = JetSeries::linear_form(2, 0.0, &[cp, -cp], len);
            let cosh = JetSeries::from_series(2, cosh_ct(cp, len));
            let e = JetSeries::from_series(2, exp_ct(-cp, len));
            let f = fraction(&jet_cos(0.0, &diff_p, len), &e, &cosh)?;
            Ok(f.scaled(1.0 / a))
        }
    }
}

/// `(cos_jet - e^{-ct}) / (cosh(ct) - cos_jet)`.
fn fraction(cos_jet: &JetSeries, e: &JetSeries, cosh: &JetSeries) -> Result<JetSeries> {
    let num = cos_jet.sub_jet(e);
    let den = cosh.sub_jet(cos_jet);
    Ok(num.mul_jet(&den.inverted()?))
}

/// Laurent expansion about `t = 0` of the reduced cylinder trace.
pub fn reduced_cylinder_trace(bc: BoundaryMode, a: f64, len: usize) -> LaurentSeries {
    let c = std::f64::consts::PI / a;
    let one = LaurentSeries::constant(1.0, len);
    match bc {
        // 1 / (e^{ct} - 1); the Neumann spectrum coincides with the
        // Dirichlet one, so the traces are equal.
        BoundaryMode::DirichletDirichlet | BoundaryMode::NeumannNeumann => exp_ct(c, len)
            .sub_series(&one)
            .inverted()
            .expect("leading coefficient c is nonzero"),
        // e^{ct/2} / (e^{ct} - 1) = 1 / (2 sinh(ct/2))
        BoundaryMode::DirichletNeumann => exp_ct(0.5 * c, len).mul_series(
            &exp_ct(c, len)
                .sub_series(&one)
                .inverted()
                .expect("leading coefficient c is nonzero"),
        ),
        // 2 / (e^{2ct} - 1)
        BoundaryMode::Periodic => exp_ct(2.0 * c, len)
            .sub_series(&one)
            .inverted()
            .expect("leading coefficient is nonzero")
            .scaled(2.0),
    }
}

/// Direct closed-form evaluation of the reduced kernel at complex `t`.
pub fn reduced_kernel_numeric(bc: BoundaryMode, a: f64, x: f64, y: f64, t: Complex64) -> Complex64 {
    let c = std::f64::consts::PI / a;
    let ct = c * t;
    match bc {
        BoundaryMode::DirichletDirichlet => {
            let f = |phi: f64| (phi.cos() - (-ct).exp()) / (ct.cosh() - phi.cos());
            (f(c * (x - y)) - f(c * (x + y))) / (2.0 * a)
        }
        BoundaryMode::NeumannNeumann => {
            let f = |phi: f64| (phi.cos() - (-ct).exp()) / (ct.cosh() - phi.cos());
            (f(c * (x - y)) + f(c * (x + y))) / (2.0 * a)
        }
        BoundaryMode::DirichletNeumann => {
            let sh = (0.5 * ct).sinh();
            let f = |phi: f64| sh * (0.5 * phi).cos() / (ct.cosh() - phi.cos());
            (f(c * (x - y)) - f(c * (x + y))) / a
        }
        BoundaryMode::Periodic => {
            let cp = 2.0 * c;
            let cpt = cp * t;
            let phi = cp * (x - y);
            (phi.cos() - (-cpt).exp()) / ((cpt.cosh() - phi.cos()) * a)
        }
    }
}

/// Closed-form reduced cylinder trace at complex `t`.
pub fn reduced_trace_numeric(bc: BoundaryMode, a: f64, t: Complex64) -> Complex64 {
    let c = std::f64::consts::PI / a;
    let one = Complex64::new(1.0, 0.0);
    match bc {
        BoundaryMode::DirichletDirichlet | BoundaryMode::NeumannNeumann => {
            one / ((c * t).exp() - one)
        }
        BoundaryMode::DirichletNeumann => (0.5 * c * t).exp() / ((c * t).exp() - one),
        BoundaryMode::Periodic => 2.0 * one / ((2.0 * c * t).exp() - one),
    }
}

/// Eigenfunction partial sum, the slow but independent oracle.
pub fn reduced_kernel_eigensum(
    bc: BoundaryMode,
    a: f64,
    x: f64,
    y: f64,
    t: f64,
    terms: usize,
) -> f64 {
    let mut acc = 0.0;
    match bc {
        BoundaryMode::DirichletDirichlet => {
            for n in 1..=terms {
                let lam = n as f64 * std::f64::consts::PI / a;
                acc += 2.0 / a * (lam * x).sin() * (lam * y).sin() * (-lam * t).exp();
            }
        }
        BoundaryMode::NeumannNeumann => {
            for n in 1..=terms {
                let lam = n as f64 * std::f64::consts::PI / a;
                acc += 2.0 / a * (lam * x).cos() * (lam * y).cos() * (-lam * t).exp();
            }
        }
        BoundaryMode::DirichletNeumann => {
            for n in 0..terms {
                let lam = (n as f64 + 0.5) * std::f64::consts::PI / a;
                acc += 2.0 / a * (lam * x).sin() * (lam * y).sin() * (-lam * t).exp();
            }
        }
        BoundaryMode::Periodic => {
            for n in 1..=terms {
                let lam = 2.0 * n as f64 * std::f64::consts::PI / a;
                acc += 2.0 / a * (lam * (x - y)).cos() * (-lam * t).exp();
            }
        }
    }
    acc
}

fn check_interval(a: f64, x1: f64) -> Result<()> {
    if !(a > 0.0) {
        return Err(Error::GeometryViolation(format!(
            "plate separation must be positive, got {a}"
        )));
    }
    if !(0.0..=a).contains(&x1) {
        return Err(Error::GeometryViolation(format!(
            "x1 = {x1} outside the closed slab [0, {a}]"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::{central_first, central_mixed_second};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const LEN: usize = 16;

    fn numeric_diag(bc: BoundaryMode, a: f64, x: f64, t: f64) -> f64 {
        reduced_kernel_numeric(bc, a, x, x, Complex64::new(t, 0.0)).re
    }

    #[test]
    fn dd_diagonal_expansion() {
        // At x1 = a/2 the diagonal kernel is csch(pi t / a):
        // 1/(pi t) - (pi/6) t + 7 pi^3/360 t^3 - ...
        let jet = reduced_cylinder_jet(BoundaryMode::DirichletDirichlet, 1.0, 0.5, LEN).unwrap();
        let s = jet.scalar_part();
        assert_eq!(s.normalized().min_order(), -1);
        assert_relative_eq!(s.coefficient(-1).unwrap(), 1.0 / PI, max_relative = 1e-13);
        assert_relative_eq!(s.coefficient(0).unwrap(), 0.0, epsilon = 1e-14);
        assert_relative_eq!(s.coefficient(1).unwrap(), -PI / 6.0, max_relative = 1e-13);
        assert_relative_eq!(
            s.coefficient(3).unwrap(),
            7.0 * PI.powi(3) / 360.0,
            max_relative = 1e-12
        );
        // and matches the numeric kernel at small t
        let t = 0.05;
        assert_relative_eq!(
            s.eval(t),
            numeric_diag(BoundaryMode::DirichletDirichlet, 1.0, 0.5, t),
            max_relative = 1e-10
        );
    }

    #[test]
    fn dd_t_coefficient_structure() {
        // t-coefficient of the diagonal DD kernel: -pi (3 - sin^2) / (12 a^2 sin^2),
        // cross-checked against the eigenfunction sum at small t.
        for &(a, x) in &[(1.0, 0.3), (2.0, 0.7), (1.0, 0.5)] {
            let jet = reduced_cylinder_jet(BoundaryMode::DirichletDirichlet, a, x, LEN).unwrap();
            let s2 = (PI * x / a).sin().powi(2);
            let expect = -PI * (3.0 - s2) / (12.0 * a * a * s2);
            assert_relative_eq!(
                jet.scalar_part().coefficient(1).unwrap(),
                expect,
                max_relative = 1e-12
            );
        }
        let t = 0.02;
        let series = reduced_cylinder_jet(BoundaryMode::DirichletDirichlet, 1.0, 0.3, LEN)
            .unwrap()
            .scalar_part();
        let oracle =
            reduced_kernel_eigensum(BoundaryMode::DirichletDirichlet, 1.0, 0.3, 0.3, t, 4000);
        assert_relative_eq!(series.eval(t), oracle, max_relative = 1e-10);
    }

    #[test]
    fn periodic_diagonal_is_coth_minus_one() {
        // (1/a)(coth(pi t / a) - 1)
        let a = 1.0;
        let jet = reduced_cylinder_jet(BoundaryMode::Periodic, a, 0.37, LEN).unwrap();
        let s = jet.scalar_part();
        // coth(y) - 1 = 1/y - 1 + y/3 - y^3/45, y = pi t
        assert_relative_eq!(s.coefficient(-1).unwrap(), 1.0 / PI, max_relative = 1e-13);
        assert_relative_eq!(s.coefficient(0).unwrap(), -1.0, max_relative = 1e-13);
        assert_relative_eq!(s.coefficient(1).unwrap(), PI / 3.0, max_relative = 1e-13);
        assert_relative_eq!(
            s.coefficient(3).unwrap(),
            -PI.powi(3) / 45.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn jet_sum_matches_numeric_kernel_at_small_t() {
        let t = 0.05;
        for &bc in &[
            BoundaryMode::DirichletDirichlet,
            BoundaryMode::DirichletNeumann,
            BoundaryMode::NeumannNeumann,
            BoundaryMode::Periodic,
        ] {
            let (a, x1) = (1.2, 0.41);
            let jet = reduced_cylinder_jet(bc, a, x1, LEN).unwrap();
            assert_relative_eq!(
                jet.scalar_part().eval(t),
                numeric_diag(bc, a, x1, t),
                max_relative = 1e-6
            );
        }
    }

    #[test]
    fn jet_partials_match_finite_differences() {
        // The evaluation point t = 0.6 sits well inside the expansion's
        // convergence disc (radius 2 min(x1, a - x1) = 1.3 here); a wider
        // window keeps the summation error below the comparison tolerance.
        let t = 0.6;
        let step = 1e-4;
        let len = 32;
        for &bc in &[
            BoundaryMode::DirichletDirichlet,
            BoundaryMode::DirichletNeumann,
            BoundaryMode::NeumannNeumann,
            BoundaryMode::Periodic,
        ] {
            let (a, x1) = (1.3, 0.65);
            let jet = reduced_cylinder_jet(bc, a, x1, len).unwrap();
            let f = |x: f64, y: f64| reduced_kernel_numeric(bc, a, x, y, Complex64::new(t, 0.0)).re;
            let fd = central_mixed_second(|dx, dy| f(x1 + dx, x1 + dy), 0.0, 0.0, step);
            let jet_val = jet.partial_pair(0, 1).eval(t);
            assert_relative_eq!(jet_val, fd, max_relative = 1e-6);

            let fd_xx = crate::jet::central_second(|dx| f(x1 + dx, x1), 0.0, step);
            assert_relative_eq!(jet.partial_pair(0, 0).eval(t), fd_xx, max_relative = 1e-6);
        }
    }

    #[test]
    fn traces_match_bernoulli_structure() {
        // DD at a = 1: 1/(e^{pi t} - 1) = 1/(pi t) - 1/2 + (pi/12) t - ...
        let tr = reduced_cylinder_trace(BoundaryMode::DirichletDirichlet, 1.0, LEN);
        assert_relative_eq!(tr.coefficient(-1).unwrap(), 1.0 / PI, max_relative = 1e-13);
        assert_relative_eq!(tr.coefficient(0).unwrap(), -0.5, max_relative = 1e-13);
        assert_relative_eq!(tr.coefficient(1).unwrap(), PI / 12.0, max_relative = 1e-13);
        assert_relative_eq!(
            tr.coefficient(3).unwrap(),
            -PI.powi(3) / 720.0,
            max_relative = 1e-12
        );

        // Neumann trace coincides with the Dirichlet one.
        let nn = reduced_cylinder_trace(BoundaryMode::NeumannNeumann, 1.0, LEN);
        for k in tr.min_order()..tr.trunc_order() {
            assert_relative_eq!(
                tr.coefficient(k).unwrap(),
                nn.coefficient(k).unwrap(),
                epsilon = 1e-15
            );
        }

        // Periodic at a = 1: 2/(e^{2 pi t} - 1) has leading term 1/(pi t).
        let p = reduced_cylinder_trace(BoundaryMode::Periodic, 1.0, LEN);
        assert_relative_eq!(p.coefficient(-1).unwrap(), 1.0 / PI, max_relative = 1e-13);

        // DN at a = 1: 1/(2 sinh(pi t / 2)).
        let dn = reduced_cylinder_trace(BoundaryMode::DirichletNeumann, 1.0, LEN);
        assert_relative_eq!(dn.coefficient(-1).unwrap(), 1.0 / PI, max_relative = 1e-13);
        assert_relative_eq!(dn.coefficient(0).unwrap(), 0.0, epsilon = 1e-14);
        assert_relative_eq!(dn.coefficient(1).unwrap(), -PI / 24.0, max_relative = 1e-12);
        assert_relative_eq!(
            dn.coefficient(3).unwrap(),
            7.0 * PI.powi(3) / 5760.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn trace_matches_numeric_trace() {
        for &bc in &[
            BoundaryMode::DirichletDirichlet,
            BoundaryMode::DirichletNeumann,
            BoundaryMode::Periodic,
        ] {
            let tr = reduced_cylinder_trace(bc, 1.4, LEN);
            let t = 0.08;
            let numeric = reduced_trace_numeric(bc, 1.4, Complex64::new(t, 0.0)).re;
            assert_relative_eq!(tr.eval(t), numeric, max_relative = 1e-10);
        }
    }

    #[test]
    fn large_t_decay_and_boundary_values() {
        // Diagonal DD kernel at x = a/2 decays like e^{-pi t / a}.
        let a = 1.0;
        let v1 = numeric_diag(BoundaryMode::DirichletDirichlet, a, 0.5, 6.0);
        let v2 = numeric_diag(BoundaryMode::DirichletDirichlet, a, 0.5, 7.0);
        assert_relative_eq!(v2 / v1, (-PI).exp(), max_relative = 1e-4);

        // Dirichlet kernels vanish on their faces.
        assert!(numeric_diag(BoundaryMode::DirichletDirichlet, a, 1e-9, 0.7).abs() < 1e-8);
        // Neumann kernels have vanishing normal derivative on the face,
        // probed through the first-order jet terms in the boundary limit.
        let jet = reduced_cylinder_jet(BoundaryMode::NeumannNeumann, a, 0.0, LEN).unwrap();
        let d = jet.partial_first(0).eval(0.3) + jet.partial_first(1).eval(0.3);
        assert!(d.abs() < 1e-12, "normal derivative {d}");
        let fd = central_first(
            |x| numeric_diag(BoundaryMode::NeumannNeumann, a, x, 0.7),
            1e-3,
            1e-4,
        );
        assert!(fd.abs() < 1e-2);
    }

    #[test]
    fn eigensum_agrees_with_closed_form_off_diagonal() {
        let (a, x, y, t) = (1.0, 0.3, 0.62, 0.5);
        for &bc in &[
            BoundaryMode::DirichletDirichlet,
            BoundaryMode::DirichletNeumann,
            BoundaryMode::NeumannNeumann,
            BoundaryMode::Periodic,
        ] {
            let closed = reduced_kernel_numeric(bc, a, x, y, Complex64::new(t, 0.0)).re;
            let sum = reduced_kernel_eigensum(bc, a, x, y, t, 200);
            assert_relative_eq!(closed, sum, max_relative = 1e-8, epsilon = 1e-12);
        }
    }

    #[test]
    fn rejects_points_outside_slab() {
        assert!(matches!(
            reduced_cylinder_jet(BoundaryMode::DirichletDirichlet, 1.0, 1.2, LEN),
            Err(Error::GeometryViolation(_))
        ));
        assert!(matches!(
            reduced_cylinder_jet(BoundaryMode::DirichletDirichlet, -1.0, 0.2, LEN),
            Err(Error::GeometryViolation(_))
        ));
    }
}
