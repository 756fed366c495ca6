//! Analytic-continuation engines.
//!
//! Massless configurations renormalize through residues of cylinder-kernel
//! Laurent expansions at `t = 0`; massive configurations through the
//! regular part at `u = 0` of Laurent expansions in the zeta regulator.
//! An independent keyhole-contour quadrature ([`hankel_quadrature`])
//! cross-checks the residue route.

mod hankel;

pub use hankel::{gauss_legendre, hankel_quadrature, hankel_quadrature_converged, HankelParams};

use crate::error::{Error, Result};
use crate::series::LaurentSeries;
use crate::specfun::{bessel_k, gamma_laurent, gamma_value};

/// Guard coefficients required between an extracted order and the
/// truncation order.
pub const EXTRACTION_MARGIN: i32 = 4;

/// `Res(t^-p s(t); 0)`, i.e. the coefficient of `t^(p-1)` in `s`.
pub fn residue_weighted(s: &LaurentSeries, p: i32) -> Result<f64> {
    s.coefficient(p - 1)
}

/// As [`residue_weighted`], but additionally demands the target order to
/// sit at least [`EXTRACTION_MARGIN`] slots below the truncation order.
pub fn residue_weighted_checked(s: &LaurentSeries, p: i32) -> Result<f64> {
    let wanted = p - 1;
    let slack = s.trunc_order() - 1 - wanted;
    if slack < EXTRACTION_MARGIN {
        return Err(Error::TruncationMarginExceeded {
            wanted,
            trunc_order: s.trunc_order(),
            slack,
            margin: EXTRACTION_MARGIN,
        });
    }
    s.coefficient(wanted)
}

/// Laurent expansion of a regularized observable in the zeta regulator
/// `u` around 0, together with the mass scale it was assembled with.
#[derive(Debug, Clone)]
pub struct UExpansion {
    pub series: LaurentSeries,
    pub scale_kappa: f64,
    pub mass: f64,
}

impl UExpansion {
    pub fn new(series: LaurentSeries, scale_kappa: f64, mass: f64) -> Result<Self> {
        let norm = series.normalized();
        if norm.min_order() < -1 {
            return Err(Error::DeepPole(norm.min_order()));
        }
        Ok(Self {
            series,
            scale_kappa,
            mass,
        })
    }

    /// Regular part at `u = 0`: the `u^0` coefficient. For an expansion
    /// that is regular at the origin this is plain evaluation at `u = 0`.
    /// The extraction demands the same guard margin below the truncation
    /// order as the residue route.
    pub fn rp_at_zero(&self) -> Result<f64> {
        let slack = self.series.trunc_order() - 1;
        if slack < EXTRACTION_MARGIN {
            return Err(Error::TruncationMarginExceeded {
                wanted: 0,
                trunc_order: self.series.trunc_order(),
                slack,
                margin: EXTRACTION_MARGIN,
            });
        }
        self.series.coefficient(0)
    }
}

/// Regular part at zero of a regulator expansion.
pub fn rp_at_zero(e: &UExpansion) -> Result<f64> {
    e.rp_at_zero()
}

/// The combination `G_nu(z2) = z2^(nu/2) K_nu(sqrt(z2))`, whose
/// derivatives shift the order down: `d/dz2 G_nu = -(1/2) G_(nu-1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GKernel {
    /// Order; integer-valued at `u = 0` for every supported configuration.
    pub nu: f64,
    /// Argument `(m N)^2 >= 0`, the squared mass-weighted image distance.
    pub z2: f64,
}

impl GKernel {
    pub fn new(nu: f64, z2: f64) -> Self {
        Self { nu, z2 }
    }

    /// Point value. For `z2 > 0` the order must be integer (where the
    /// engine needs values, it is); `K_-n = K_n` handles negative orders.
    /// At `z2 = 0` the value is `2^(nu-1) Gamma(nu)`, valid for `nu > 0`.
    pub fn eval(&self) -> Result<f64> {
        if self.z2 > 0.0 {
            let rounded = self.nu.round();
            if (self.nu - rounded).abs() > 1e-9 {
                return Err(Error::DomainViolation(format!(
                    "G_nu point evaluation requires integer order, got nu = {}",
                    self.nu
                )));
            }
            let n = rounded.abs() as u32;
            let z = self.z2.sqrt();
            Ok(z.powf(self.nu) * bessel_k(n, z)?)
        } else if self.nu > 0.0 {
            Ok(2.0f64.powf(self.nu - 1.0) * gamma_value(self.nu)?)
        } else {
            Err(Error::DomainViolation(format!(
                "G_nu(0) requires Re nu > 0 before continuation, got nu = {}",
                self.nu
            )))
        }
    }

    /// The order-shifted kernel produced by `n` derivatives in `z2`; the
    /// accompanying `(-1/2)^n` factor is tracked by the caller.
    pub fn derivative_shift(&self, n: i32) -> GKernel {
        GKernel::new(self.nu - n as f64, self.z2)
    }
}

/// `Gamma((u + c) / 2)` as a Laurent series in `u`, to `depth` terms.
pub fn gamma_half_argument(c: f64, depth: usize) -> LaurentSeries {
    // Gamma(c/2 + w) with w = u/2.
    gamma_laurent(c / 2.0, depth).series.rescaled_variable(0.5)
}

/// `a^(b u)` as a series in `u` (a > 0): `exp(b ln(a) u)`.
pub fn power_series_in_u(a: f64, b: f64, len: usize) -> LaurentSeries {
    crate::series::exp_ct(b * a.ln(), len)
}
