//! Keyhole quadrature of the Hankel-contour representation
//!
//! `D_s = e^(-2 i pi s) Gamma(1 - 2s) / (2 pi i) * closed-contour integral
//! of t^(2s-1) T(t) dt`,
//!
//! for kernels `T` that are meromorphic with their only pole at the
//! origin and vanish exponentially for `Re t -> +inf`. The contour is a
//! circle of radius `r0` around the origin plus two straight rays along
//! the positive real axis out to `t_max`. Complex powers use the branch
//! with `arg t` running from 0 on the inbound (upper) ray to `2 pi` on
//! the outbound (lower) ray; the ray contributions then combine into a
//! factor `e^(4 i pi s) - 1`, which vanishes at half-integer `s` where
//! the representation degenerates to a pure residue.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::gamma_value;

/// Contour geometry and resolution.
#[derive(Debug, Clone, Copy)]
pub struct HankelParams {
    pub r0: f64,
    pub t_max: f64,
    /// Gauss-Legendre points on the circle. The integrand is smooth but
    /// not periodic across the branch cut (its value jumps by the phase
    /// `e^(4 i pi s)`), so an open quadrature over the angle is used
    /// rather than the trapezoid rule.
    pub n_circle: usize,
    /// Gauss-Legendre panels per ray.
    pub n_panels: usize,
    /// Nodes per panel.
    pub panel_points: usize,
}

impl Default for HankelParams {
    fn default() -> Self {
        // r0 and t_max chosen so that kernels with plate separation up to
        // a = 2 have tails below 1e-16 at the truncation point.
        Self {
            r0: 0.5,
            t_max: 40.0,
            n_circle: 128,
            n_panels: 64,
            panel_points: 8,
        }
    }
}

impl HankelParams {
    fn doubled(&self) -> Self {
        Self {
            n_circle: self.n_circle * 2,
            n_panels: self.n_panels * 2,
            ..*self
        }
    }
}

/// Evaluates the continued Dirichlet-kernel value at `s` for a numeric
/// kernel, at a single resolution.
pub fn hankel_quadrature(
    kernel: &dyn Fn(Complex64) -> Complex64,
    s: Complex64,
    params: &HankelParams,
) -> f64 {
    let i = Complex64::new(0.0, 1.0);
    let two_s = 2.0 * s;

    // Circle: t = r0 e^(i phi), t^(2s-1) dt = i r0^(2s) e^(2 i s phi) dphi,
    // with arg t running from 0 to 2 pi.
    let (nodes, weights) = gauss_legendre(params.n_circle);
    let mut circle = Complex64::new(0.0, 0.0);
    for (&u, &w) in nodes.iter().zip(weights.iter()) {
        let phi = PI * (u + 1.0);
        let t = params.r0 * Complex64::new(phi.cos(), phi.sin());
        circle += w * (i * two_s * phi).exp() * kernel(t);
    }
    circle *= i * Complex64::new(params.r0, 0.0).powc(two_s) * PI;

    // Rays: (e^(4 i pi s) - 1) * int_{r0}^{t_max} x^(2s-1) T(x) dx.
    let ray_factor = (i * 4.0 * PI * s).exp() - 1.0;
    let mut ray = Complex64::new(0.0, 0.0);
    if ray_factor.norm() > 1e-14 {
        let (nodes, weights) = gauss_legendre(params.panel_points);
        let h = (params.t_max - params.r0) / params.n_panels as f64;
        for p in 0..params.n_panels {
            let a = params.r0 + p as f64 * h;
            for (&u, &w) in nodes.iter().zip(weights.iter()) {
                let x = a + 0.5 * h * (u + 1.0);
                let xc = Complex64::new(x, 0.0);
                ray += 0.5 * h * w * xc.powc(two_s - 1.0) * kernel(xc);
            }
        }
        ray *= ray_factor;
    }

    let contour = circle + ray;
    let prefactor = (-i * 2.0 * PI * s).exp() * gamma_1m2s(s) / (2.0 * PI * i);
    (prefactor * contour).re
}

/// Two-resolution evaluation; errs when node doubling moves the result
/// by more than `tol` relative.
pub fn hankel_quadrature_converged(
    kernel: &dyn Fn(Complex64) -> Complex64,
    s: Complex64,
    params: &HankelParams,
    tol: f64,
) -> Result<f64> {
    let coarse = hankel_quadrature(kernel, s, params);
    let fine = hankel_quadrature(kernel, s, &params.doubled());
    let diff = (fine - coarse).abs() / fine.abs().max(1e-300);
    if diff > tol {
        return Err(Error::QuadratureNotConverged(diff));
    }
    Ok(fine)
}

/// `Gamma(1 - 2s)` for the (real, in practice) values of `s` the engine
/// uses; the reflection formula covers the right half-plane.
fn gamma_1m2s(s: Complex64) -> Complex64 {
    let x = 1.0 - 2.0 * s.re;
    debug_assert!(s.im == 0.0, "only real s is exercised");
    if x > 0.0 {
        Complex64::new(gamma_value(x).expect("positive argument"), 0.0)
    } else {
        // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
        let g = gamma_value(1.0 - x).expect("positive argument");
        Complex64::new(PI / ((PI * x).sin() * g), 0.0)
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on
/// the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Legendre polynomial `P_n(x)` and its derivative.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (nodes, weights) = gauss_legendre(8);
        // exact for degree <= 15
        let integral: f64 = nodes
            .iter()
            .zip(&weights)
            .map(|(&x, &w)| w * (x.powi(10) + 3.0 * x.powi(3)))
            .sum();
        assert_relative_eq!(integral, 2.0 / 11.0, max_relative = 1e-13);
    }

    /// A single eigenvalue omega = 1: T(t) = e^-t, so the continued
    /// kernel must equal omega^(-2s) = 1 for every s.
    #[test]
    fn single_mode_identity() {
        let kernel = |t: Complex64| (-t).exp();
        let params = HankelParams::default();
        for &s in &[0.3, 0.8, -0.4, -0.75, 1.2] {
            let v = hankel_quadrature(&kernel, Complex64::new(s, 0.0), &params);
            assert_relative_eq!(v, 1.0, max_relative = 1e-8);
        }
        // omega = 2: D_s = 2^(-2s)
        let kernel2 = |t: Complex64| (-2.0 * t).exp();
        for &s in &[0.45, -0.6, -1.5] {
            let v = hankel_quadrature(&kernel2, Complex64::new(s, 0.0), &params);
            assert_relative_eq!(v, 2.0f64.powf(-2.0 * s), max_relative = 1e-8);
        }
    }

    #[test]
    fn residue_and_quadrature_agree_at_three_half_integers() {
        // Tr A^(n/2) = (-1)^n Gamma(n+1) Res(t^-(n+1) T(t); 0) must match
        // the contour evaluation for the interval trace.
        let len = 16;
        let trace = crate::kernels::reduced_cylinder_trace(
            crate::kernels::BoundaryMode::DirichletDirichlet,
            1.0,
            len,
        );
        let kernel = |t: Complex64| {
            crate::kernels::reduced_trace_numeric(
                crate::kernels::BoundaryMode::DirichletDirichlet,
                1.0,
                t,
            )
        };
        let params = HankelParams::default();
        for n in [1i32, 3, 5] {
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let residue_route = sign * fact * trace.coefficient(n).unwrap();
            let s = Complex64::new(-(n as f64) / 2.0, 0.0);
            let quad = hankel_quadrature(&kernel, s, &params);
            assert_relative_eq!(residue_route, quad, max_relative = 1e-6);
        }
    }

    #[test]
    fn node_doubling_self_convergence() {
        let kernel = |t: Complex64| (-t).exp() / t; // pole at the origin
        let params = HankelParams::default();
        let v =
            hankel_quadrature_converged(&kernel, Complex64::new(-0.3, 0.0), &params, 1e-8).unwrap();
        let fine = hankel_quadrature(&kernel, Complex64::new(-0.3, 0.0), &params.doubled());
        assert_relative_eq!(v, fine, max_relative = 1e-12);
    }
}
