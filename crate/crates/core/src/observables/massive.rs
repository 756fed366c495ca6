//! Massive field bounded by perpendicular planes (d = 3): half-space and
//! rectangular wedge. Components are assembled as Laurent expansions in
//! the zeta regulator `u` from Bessel-type kernels and gamma expansions,
//! then renormalized by the regular part at `u = 0`.
//!
//! Image distances on the diagonal follow the reflection pattern of the
//! faces: a "+" pair on coordinate i contributes `(2 x_i)^2` to the
//! squared distance, a "-" pair contributes zero. Terms whose distance
//! vanishes are continued through `G_nu(0) = 2^(nu-1) Gamma(nu)`; all
//! others evaluate to Bessel values at integer order.

use super::{
    xi_critical, ConformalSplit, FaceBc, Frame, Prescription, PressureResult, StressTensor,
};
use crate::continuation::{gamma_half_argument, power_series_in_u, GKernel, UExpansion};
use crate::error::{Error, Result};
use crate::series::LaurentSeries;

const D: usize = 3;
const U_LEN: usize = 8;

/// Corner cutoff for the rectangular-wedge pressure, in units of `1/m`.
pub const CORNER_CUTOFF_FACTOR: f64 = 1e-6;

/// One reflection term of the image expansion.
struct ImageTerm {
    weight: f64,
    /// `plus[i]`: the pair on coordinate `i` carries `x_i + y_i`.
    plus: Vec<bool>,
}

fn image_terms(faces: &[FaceBc]) -> Vec<ImageTerm> {
    match faces {
        [f1] => vec![
            ImageTerm {
                weight: f1.sign(),
                plus: vec![true],
            },
            ImageTerm {
                weight: 1.0,
                plus: vec![false],
            },
        ],
        [f1, f2] => vec![
            ImageTerm {
                weight: f1.sign() * f2.sign(),
                plus: vec![true, true],
            },
            ImageTerm {
                weight: f2.sign(),
                plus: vec![false, true],
            },
            ImageTerm {
                weight: f1.sign(),
                plus: vec![true, false],
            },
            ImageTerm {
                weight: 1.0,
                plus: vec![false, false],
            },
        ],
        _ => unreachable!("supported face counts are 1 and 2"),
    }
}

/// `G_((u+c)/2)(z2)` as a series in `u`: a Bessel constant for `z2 > 0`
/// (its `u`-derivatives never meet a pole, so they cannot reach the
/// regular part), the gamma continuation `2^(nu-1) Gamma(nu)` at
/// coincident images.
fn g_series(c: f64, z2: f64) -> Result<LaurentSeries> {
    if z2 > 0.0 {
        let val = GKernel::new(c / 2.0, z2).eval()?;
        Ok(LaurentSeries::constant(val, U_LEN))
    } else {
        let pow = power_series_in_u(2.0, 0.5, U_LEN).scaled(2.0f64.powf(c / 2.0 - 1.0));
        Ok(pow.mul_series(&gamma_half_argument(c, U_LEN)))
    }
}

/// First-degree polynomial `a0 + a1 u` as a series.
fn poly_u(a0: f64, a1: f64) -> LaurentSeries {
    let mut s = LaurentSeries::constant(a0, U_LEN);
    s = s.add_series(&LaurentSeries::monomial(1, a1, U_LEN));
    s
}

struct Assembly<'a> {
    faces: &'a [FaceBc],
    coords: &'a [f64],
    m: f64,
    xi: f64,
}

impl Assembly<'_> {
    fn d1(&self) -> usize {
        self.faces.len()
    }

    /// Squared mass-weighted image distance of a term on the diagonal.
    fn z2(&self, term: &ImageTerm) -> f64 {
        let s: f64 = term
            .plus
            .iter()
            .zip(self.coords)
            .map(|(&p, &x)| if p { 4.0 * x * x } else { 0.0 })
            .sum();
        self.m * self.m * s
    }

    fn w(&self, term: &ImageTerm, i: usize) -> f64 {
        if term.plus[i] {
            2.0 * self.coords[i]
        } else {
            0.0
        }
    }

    /// `sum_l d_{x^l y^l} G_((u+c)/2)` on the diagonal.
    fn contracted_mixed(&self, term: &ImageTerm, c: f64) -> Result<LaurentSeries> {
        let z2 = self.z2(term);
        let m2 = self.m * self.m;
        let (n_plus, n_minus) =
            term.plus.iter().fold(
                (0usize, 0usize),
                |(p, m_), &b| {
                    if b {
                        (p + 1, m_)
                    } else {
                        (p, m_ + 1)
                    }
                },
            );
        let sum_sigma = n_minus as f64 - n_plus as f64;
        let sw2: f64 = (0..self.d1()).map(|i| self.w(term, i).powi(2)).sum();
        let g1 = g_series(c - 2.0, z2)?.scaled(m2 * sum_sigma);
        let g2 = g_series(c - 4.0, z2)?.scaled(m2 * m2 * sw2);
        Ok(g1.add_series(&g2))
    }

    /// `d_{x^i y^j} G_((u+c)/2)` on the diagonal.
    fn mixed_pair(&self, term: &ImageTerm, c: f64, i: usize, j: usize) -> Result<LaurentSeries> {
        let z2 = self.z2(term);
        let m2 = self.m * self.m;
        let sigma = |k: usize| if term.plus[k] { -1.0 } else { 1.0 };
        let delta = if i == j { 1.0 } else { 0.0 };
        let g1 = g_series(c - 2.0, z2)?.scaled(sigma(i) * delta * m2);
        let g2 =
            g_series(c - 4.0, z2)?.scaled(-sigma(j) * m2 * m2 * self.w(term, i) * self.w(term, j));
        Ok(g1.add_series(&g2))
    }

    /// `d_{x^i x^j} G_((u+c)/2)` on the diagonal.
    fn same_side_pair(
        &self,
        term: &ImageTerm,
        c: f64,
        i: usize,
        j: usize,
    ) -> Result<LaurentSeries> {
        let z2 = self.z2(term);
        let m2 = self.m * self.m;
        let delta = if i == j { 1.0 } else { 0.0 };
        let g1 = g_series(c - 2.0, z2)?.scaled(-delta * m2);
        let g2 = g_series(c - 4.0, z2)?.scaled(m2 * m2 * self.w(term, i) * self.w(term, j));
        Ok(g1.add_series(&g2))
    }

    /// Shared prefactor `2^((1-u)/2) m^(d+1) (2 pi)^(-d/2) (m/kappa)^(-u)
    /// / Gamma((u+1)/2)`.
    fn prefactor(&self, kappa: f64) -> LaurentSeries {
        let df = D as f64;
        let scalar = 2.0f64.sqrt()
            * self.m.powi(D as i32 + 1)
            * (2.0 * std::f64::consts::PI).powf(-df / 2.0);
        let two_pow = power_series_in_u(2.0, -0.5, U_LEN);
        let kappa_pow = power_series_in_u(self.m / kappa, -1.0, U_LEN);
        let inv_gamma = gamma_half_argument(1.0, U_LEN)
            .inverted()
            .expect("Gamma(1/2) is nonzero");
        two_pow
            .mul_series(&kappa_pow)
            .mul_series(&inv_gamma)
            .scaled(scalar)
    }

    const C_MINUS: f64 = -(D as f64) - 1.0; // G_((u-d-1)/2)
    const C_PLUS: f64 = -(D as f64) + 1.0; // G_((u-d+1)/2)

    /// Energy density bracket of one image term.
    fn bracket_00(&self, term: &ImageTerm) -> Result<LaurentSeries> {
        let df = D as f64;
        let d1 = self.d1() as f64;
        let g_minus = g_series(Self::C_MINUS, self.z2(term))?;
        let g_plus = g_series(Self::C_PLUS, self.z2(term))?;
        let c1 = poly_u(
            (df - d1 - 1.0) / 4.0 - (df - d1 + 1.0) * self.xi,
            0.25 + self.xi,
        );
        let lap = self.contracted_mixed(term, Self::C_PLUS)?;
        let c2 = 0.25 - self.xi;
        Ok(c1.mul_series(&g_minus).add_series(
            &g_plus
                .add_series(&lap.scaled(1.0 / (self.m * self.m)))
                .scaled(c2),
        ))
    }

    /// Bracket for components along the bounded coordinates.
    fn bracket_ij(&self, term: &ImageTerm, i: usize, j: usize) -> Result<LaurentSeries> {
        let df = D as f64;
        let d1 = self.d1() as f64;
        let z2 = self.z2(term);
        let delta = if i == j { 1.0 } else { 0.0 };
        let g_minus = g_series(Self::C_MINUS, z2)?;
        let g_plus = g_series(Self::C_PLUS, z2)?;
        let m2 = self.m * self.m;

        let quarter_minus_xi = 0.25 - self.xi;
        // -(1/4 - xi) delta_ij [ (d - d1 + 1 - u) G_minus + G_plus + Laplacian/m^2 ]
        let mut acc = poly_u(df - d1 + 1.0, -1.0)
            .mul_series(&g_minus)
            .add_series(&g_plus)
            .add_series(&self.contracted_mixed(term, Self::C_PLUS)?.scaled(1.0 / m2))
            .scaled(-quarter_minus_xi * delta);
        // + (1/2 - xi)/m^2 d_{x^i y^j} G_plus - xi/m^2 d_{x^i x^j} G_plus
        acc = acc.add_series(
            &self
                .mixed_pair(term, Self::C_PLUS, i, j)?
                .scaled((0.5 - self.xi) / m2),
        );
        acc = acc.add_series(
            &self
                .same_side_pair(term, Self::C_PLUS, i, j)?
                .scaled(-self.xi / m2),
        );
        Ok(acc)
    }

    /// Bracket for the translation-invariant transverse components.
    fn bracket_transverse(&self, term: &ImageTerm) -> Result<LaurentSeries> {
        let df = D as f64;
        let d1 = self.d1() as f64;
        let g_minus = g_series(Self::C_MINUS, self.z2(term))?;
        let g_plus = g_series(Self::C_PLUS, self.z2(term))?;
        let c1 = poly_u(
            (df - d1 - 1.0) / 4.0 - (df - d1 + 1.0) * self.xi,
            -0.25 + self.xi,
        );
        let lap = self.contracted_mixed(term, Self::C_PLUS)?;
        let inner = c1.mul_series(&g_minus).add_series(
            &g_plus
                .add_series(&lap.scaled(1.0 / (self.m * self.m)))
                .scaled(0.25 - self.xi),
        );
        Ok(inner.scaled(-1.0))
    }

    /// Renormalized component from an assembled bracket sum.
    fn renormalize(
        &self,
        kappa: f64,
        brackets: impl Fn(&ImageTerm) -> Result<LaurentSeries>,
    ) -> Result<f64> {
        let mut sum = LaurentSeries::zero(U_LEN);
        for term in image_terms(self.faces) {
            sum = sum.add_series(&brackets(&term)?.scaled(term.weight));
        }
        let full = self.prefactor(kappa).mul_series(&sum);
        UExpansion::new(full, kappa, self.m)?.rp_at_zero()
    }
}

fn massive_tensor_at(
    faces: &[FaceBc],
    coords: &[f64],
    m: f64,
    kappa: f64,
    xi: f64,
) -> Result<StressTensor> {
    let asm = Assembly {
        faces,
        coords,
        m,
        xi,
    };
    let mut t = StressTensor::zero(Frame::Cartesian, D);
    t.set_sym(0, 0, asm.renormalize(kappa, |term| asm.bracket_00(term))?);
    let d1 = faces.len();
    for i in 0..d1 {
        for j in i..d1 {
            let v = asm.renormalize(kappa, |term| asm.bracket_ij(term, i, j))?;
            t.set_sym(i + 1, j + 1, v);
        }
    }
    let transverse = asm.renormalize(kappa, |term| asm.bracket_transverse(term))?;
    for k in (d1 + 1)..=D {
        t.set_sym(k, k, transverse);
    }
    Ok(t)
}

fn check_mass_scale(m: f64, kappa: f64) -> Result<()> {
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

/// Massive half-space `x1 > 0`, Dirichlet or Neumann on the plane.
pub fn stress_halfspace_massive(
    face: FaceBc,
    m: f64,
    kappa: f64,
    xi: f64,
    x1: f64,
) -> Result<ConformalSplit> {
    check_mass_scale(m, kappa)?;
    if !(x1 > 0.0) {
        return Err(Error::GeometryViolation(format!(
            "x1 must be positive, got {x1}"
        )));
    }
    ConformalSplit::from_engine(xi, xi_critical(D), |xi| {
        massive_tensor_at(&[face], &[x1], m, kappa, xi)
    })
}

/// Massive rectangular wedge `x1 > 0, x2 > 0` bounded by two
/// perpendicular half-planes.
pub fn stress_rectwedge_massive(
    face1: FaceBc,
    face2: FaceBc,
    m: f64,
    kappa: f64,
    xi: f64,
    x1: f64,
    x2: f64,
) -> Result<ConformalSplit> {
    check_mass_scale(m, kappa)?;
    if !(x1 > 0.0 && x2 > 0.0) {
        return Err(Error::GeometryViolation(format!(
            "interior point requires x1, x2 > 0, got ({x1}, {x2})"
        )));
    }
    ConformalSplit::from_engine(xi, xi_critical(D), |xi| {
        massive_tensor_at(&[face1, face2], &[x1, x2], m, kappa, xi)
    })
}

/// Pressure on the half-space boundary plane by both prescriptions:
/// `p_i = -T_i1` evaluated on the plane / in the interior limit.
pub fn pressure_halfspace(
    face: FaceBc,
    m: f64,
    kappa: f64,
    xi: f64,
) -> Result<(PressureResult, PressureResult)> {
    check_mass_scale(m, kappa)?;
    let t_boundary = massive_tensor_at(&[face], &[0.0], m, kappa, xi)?;
    let boundary = PressureResult::finite(
        Prescription::BoundaryFirst,
        [-t_boundary.get(1, 1), 0.0, 0.0],
    );
    let interior_t11 = richardson_limit(
        |x| Ok(massive_tensor_at(&[face], &[x], m, kappa, xi)?.get(1, 1)),
        1e-2 / m,
    )?;
    let interior = PressureResult::finite(Prescription::InteriorLimit, [-interior_t11, 0.0, 0.0]);
    Ok((boundary, interior))
}

/// Pressure at a point of the face `x1 = 0` of the rectangular wedge,
/// `x2` away from the corner. Points closer to the corner than
/// `CORNER_CUTOFF_FACTOR / m` are rejected: the pressure diverges like
/// the inverse fourth power of the distance there and the outer normal
/// is ill-defined on the edge itself.
pub fn pressure_rectwedge(
    face1: FaceBc,
    face2: FaceBc,
    m: f64,
    kappa: f64,
    xi: f64,
    x2: f64,
) -> Result<(PressureResult, PressureResult)> {
    check_mass_scale(m, kappa)?;
    let cutoff = CORNER_CUTOFF_FACTOR / m;
    if x2 < cutoff {
        return Err(Error::CornerPoint(x2, cutoff));
    }
    let faces = [face1, face2];
    let t_boundary = massive_tensor_at(&faces, &[0.0, x2], m, kappa, xi)?;
    let boundary = PressureResult::finite(
        Prescription::BoundaryFirst,
        [
            -t_boundary.get(1, 1),
            -t_boundary.get(1, 2),
            -t_boundary.get(1, 3),
        ],
    );
    // The probe distance balances extrapolation truncation (wants small
    // h) against the floating-point cancellation of the image terms
    // whose Bessel arguments shrink with h (wants large h); 0.04 of the
    // shorter length scale keeps both near the 1e-6 level.
    let h = 0.04 * x2.min(1.0 / m);
    let p1 = richardson_limit(
        |x| Ok(massive_tensor_at(&faces, &[x, x2], m, kappa, xi)?.get(1, 1)),
        h,
    )?;
    let p2 = richardson_limit(
        |x| Ok(massive_tensor_at(&faces, &[x, x2], m, kappa, xi)?.get(1, 2)),
        h,
    )?;
    let interior = PressureResult::finite(Prescription::InteriorLimit, [-p1, -p2, 0.0]);
    Ok((boundary, interior))
}

/// Polynomial (Neville) extrapolation toward zero probe distance from
/// four nodes h, h/2, h/4, h/8; exact through cubic behavior.
fn richardson_limit(f: impl Fn(f64) -> Result<f64>, h: f64) -> Result<f64> {
    let mut vals = [f(h)?, f(0.5 * h)?, f(0.25 * h)?, f(0.125 * h)?];
    let n = vals.len();
    for level in 1..n {
        let w = 2.0f64.powi(level as i32);
        for i in 0..n - level {
            vals[i] = (w * vals[i + 1] - vals[i]) / (w - 1.0);
        }
    }
    Ok(vals[0])
}
