//! Independent contour oracle for the wedge stress components.
//!
//! The engine computes residues of jet expansions built in the series
//! ring. This suite recomputes selected components with none of that
//! machinery: the modified cylinder kernel is evaluated in closed form
//! at complex `t` on a circle around the origin (off the diagonal where
//! needed), spatial derivatives are taken by central finite differences,
//! and the residue is the plain trapezoid average over the circle (the
//! integrand is single-valued and analytic in an annulus, so the
//! trapezoid rule converges spectrally).

use num_complex::Complex64;
use std::f64::consts::PI;

use casimir_core::kernels::{BoundaryMode, WedgeGeometry};
use casimir_core::observables::stress_wedge;

#[derive(Clone, Copy)]
struct Point {
    rho: f64,
    theta: f64,
    z: f64,
}

/// Closed-form modified cylinder kernel at complex `t`, both points free.
/// The branch of `r_minus` is the analytic continuation of the `+t`
/// branch: `t sqrt(1 + d^2/t^2)` with the principal square root of a
/// value near 1.
fn tilde(mode: BoundaryMode, alpha: f64, q: Point, p: Point, t: Complex64) -> Complex64 {
    let d2 = (q.rho - p.rho).powi(2) + (q.z - p.z).powi(2);
    let r_minus = t * (1.0 + d2 / (t * t)).sqrt();
    let r_plus = ((q.rho + p.rho).powi(2) + (q.z - p.z).powi(2) + t * t).sqrt();
    let ev = (r_plus + r_minus) / (r_plus - r_minus);
    let v = ev.ln();
    let sinh_v = (ev - 1.0 / ev) * 0.5;
    let pref = 1.0 / (q.rho * p.rho * sinh_v);
    let pv = PI / alpha * v;
    let diff = PI / alpha * (q.theta - p.theta);
    let sum = PI / alpha * (q.theta + p.theta);
    match mode {
        BoundaryMode::DirichletDirichlet => {
            let qq = (-pv).exp();
            let c = pv.cosh();
            pref / (4.0 * PI * alpha)
                * ((diff.cos() - qq) / (c - diff.cos()) - (sum.cos() - qq) / (c - sum.cos()))
        }
        BoundaryMode::NeumannNeumann => {
            let e = pv.exp();
            let c = pv.cosh();
            pref / (4.0 * PI * alpha)
                * ((e - diff.cos()) / (c - diff.cos()) + (e - sum.cos()) / (c - sum.cos()))
        }
        BoundaryMode::DirichletNeumann => {
            let c = pv.cosh();
            let sh = (0.5 * pv).sinh();
            pref / (2.0 * PI * alpha)
                * (sh * (0.5 * diff).cos() / (c - diff.cos())
                    - sh * (0.5 * sum).cos() / (c - sum.cos()))
        }
        BoundaryMode::Periodic => {
            let c = (2.0 * pv).cosh();
            let sh = (2.0 * pv).sinh();
            pref / (2.0 * PI * alpha) * (sh / (c - (2.0 * diff).cos()))
        }
    }
}

/// `Res(t^-3 f(t); 0)` by the trapezoid rule on a circle of radius `r0`.
fn circle_residue(f: impl Fn(Complex64) -> Complex64, r0: f64, n: usize) -> f64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let phi = 2.0 * PI * k as f64 / n as f64;
        let t = r0 * Complex64::new(phi.cos(), phi.sin());
        // t^-3 f(t) * dt/(2 pi i) = t^-2 f(t) / n summed over the nodes
        acc += f(t) / (t * t);
    }
    (acc / n as f64).re
}

struct FdKernel {
    mode: BoundaryMode,
    alpha: f64,
    base: Point,
    h: f64,
}

impl FdKernel {
    fn at(&self, dq: [f64; 3], dp: [f64; 3], t: Complex64) -> Complex64 {
        let q = Point {
            rho: self.base.rho + dq[0],
            theta: self.base.theta + dq[1],
            z: self.base.z + dq[2],
        };
        let p = Point {
            rho: self.base.rho + dp[0],
            theta: self.base.theta + dp[1],
            z: self.base.z + dp[2],
        };
        tilde(self.mode, self.alpha, q, p, t)
    }

    fn value(&self, t: Complex64) -> Complex64 {
        self.at([0.0; 3], [0.0; 3], t)
    }

    /// Mixed second derivative, one index on each point.
    fn mixed(&self, i: usize, j: usize, t: Complex64) -> Complex64 {
        let h = self.h;
        let stencil = |sq: f64, sp: f64| {
            let mut dq = [0.0; 3];
            let mut dp = [0.0; 3];
            dq[i] = sq * h;
            dp[j] = sp * h;
            self.at(dq, dp, t)
        };
        (stencil(1.0, 1.0) - stencil(1.0, -1.0) - stencil(-1.0, 1.0) + stencil(-1.0, -1.0))
            / (4.0 * h * h)
    }

    /// Second derivative with both indices on the first point.
    fn same(&self, i: usize, j: usize, t: Complex64) -> Complex64 {
        let h = self.h;
        if i == j {
            let mut dq = [0.0; 3];
            dq[i] = h;
            let plus = self.at(dq, [0.0; 3], t);
            dq[i] = -h;
            let minus = self.at(dq, [0.0; 3], t);
            (plus - 2.0 * self.value(t) + minus) / (h * h)
        } else {
            let stencil = |si: f64, sj: f64| {
                let mut dq = [0.0; 3];
                dq[i] = si * h;
                dq[j] += sj * h;
                self.at(dq, [0.0; 3], t)
            };
            (stencil(1.0, 1.0) - stencil(1.0, -1.0) - stencil(-1.0, 1.0) + stencil(-1.0, -1.0))
                / (4.0 * h * h)
        }
    }

    fn first(&self, i: usize, t: Complex64) -> Complex64 {
        let h = self.h;
        let mut dq = [0.0; 3];
        dq[i] = h;
        let plus = self.at(dq, [0.0; 3], t);
        dq[i] = -h;
        let minus = self.at(dq, [0.0; 3], t);
        (plus - minus) / (2.0 * h)
    }
}

/// Components assembled exactly as the engine's residue formulas, but
/// from the finite-difference kernel.
fn oracle_components(
    mode: BoundaryMode,
    alpha: f64,
    rho: f64,
    theta: f64,
    xi: f64,
    r0: f64,
) -> (f64, f64, f64) {
    let fd = FdKernel {
        mode,
        alpha,
        base: Point { rho, theta, z: 0.0 },
        h: 1e-3,
    };
    let n = 64;
    let lap =
        |t: Complex64| fd.mixed(0, 0, t) + fd.mixed(1, 1, t) / (rho * rho) + fd.mixed(2, 2, t);
    let t00 = circle_residue(
        |t| (0.5 + 2.0 * xi) * fd.value(t) + (0.25 - xi) * t * t * lap(t),
        r0,
        n,
    );
    // theta-theta: (1/4 - xi) rho^2 (2 T - t^2 Lap T)
    //              + t^2 ((1/2 - xi) d_theta theta' - xi Nabla_theta theta)
    let t_thth = circle_residue(
        |t| {
            let nabla_tt = fd.same(1, 1, t) + rho * fd.first(0, t);
            (0.25 - xi) * rho * rho * (2.0 * fd.value(t) - t * t * lap(t))
                + t * t * ((0.5 - xi) * fd.mixed(1, 1, t) - xi * nabla_tt)
        },
        r0,
        n,
    );
    // rho-theta: t^2 ((1/2 - xi) d_rho theta' - xi (d_rho theta - (1/rho) d_theta))
    let t_rhth = circle_residue(
        |t| {
            let nabla_rt = fd.same(0, 1, t) - fd.first(1, t) / rho;
            t * t * ((0.5 - xi) * fd.mixed(0, 1, t) - xi * nabla_rt)
        },
        r0,
        n,
    );
    (t00, t_thth, t_rhth)
}

#[test]
fn wedge_components_match_the_series_free_contour_oracle() {
    // Geometries cover acute and obtuse openings; the circle radius must
    // stay inside the kernel's annulus of analyticity, bounded by
    // 2 rho |sin(theta + k alpha)| and 2 rho |sin(k alpha)|.
    let cases = [
        (BoundaryMode::DirichletDirichlet, PI / 3.0, 1.0, 0.45, 0.22),
        (BoundaryMode::DirichletNeumann, PI / 3.0, 1.0, 0.45, 0.22),
        (BoundaryMode::NeumannNeumann, 1.5 * PI, 0.8, 1.1, 0.3),
        (BoundaryMode::DirichletDirichlet, 1.5 * PI, 0.8, 1.1, 0.3),
        (BoundaryMode::Periodic, 1.9, 1.0, 0.8, 0.3),
    ];
    for (mode, alpha, rho, theta, r0) in cases {
        let xi = 0.21;
        let geom = WedgeGeometry::interior(alpha, rho, theta).unwrap();
        let engine = stress_wedge(mode, &geom, xi).unwrap().total();
        let (t00, t_thth, t_rhth) = oracle_components(mode, alpha, rho, theta, xi, r0);
        let scale = engine.max_abs();
        assert!(
            (engine.get(0, 0) - t00).abs() <= 2e-5 * scale,
            "{mode:?} alpha={alpha}: T00 {} vs oracle {t00}",
            engine.get(0, 0)
        );
        assert!(
            (engine.get(2, 2) - t_thth).abs() <= 2e-5 * scale,
            "{mode:?} alpha={alpha}: T_thth {} vs oracle {t_thth}",
            engine.get(2, 2)
        );
        assert!(
            (engine.get(1, 2) - t_rhth).abs() <= 2e-5 * scale,
            "{mode:?} alpha={alpha}: T_rhth {} vs oracle {t_rhth}",
            engine.get(1, 2)
        );
    }
}
