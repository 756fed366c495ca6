//! Truncated Laurent series over `f64`.
//!
//! A [`LaurentSeries`] stores the coefficients of `t^k` for
//! `min_order <= k < trunc_order`. Powers below `min_order` are exactly
//! zero; powers at or above `trunc_order` are *unknown*. Every operation
//! propagates the truncation window so that no coefficient is ever
//! fabricated: the window of a sum is the intersection of the input
//! windows, the window of a product shifts and tightens accordingly.
//!
//! Requesting a coefficient at or above the truncation order is an error
//! ([`Error::OutOfTruncationWindow`]), not a silent zero.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Truncation length used when no explicit override is given.
pub const DEFAULT_LEN: usize = 16;

/// Number of retained coefficients per series, overridable through the
/// `CASIMIR_TRUNC_ORDER` environment variable (clamped to at least 8).
pub fn default_len() -> usize {
    use std::sync::OnceLock;
    static LEN: OnceLock<usize> = OnceLock::new();
    *LEN.get_or_init(|| {
        std::env::var("CASIMIR_TRUNC_ORDER")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .map(|n| n.max(8))
            .unwrap_or(DEFAULT_LEN)
    })
}

/// Truncated Laurent series in one formal variable.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentSeries {
    min_order: i32,
    /// `coeffs[k]` is the coefficient of `t^(min_order + k)`.
    coeffs: Vec<f64>,
}

impl LaurentSeries {
    /// Series with the given window start and coefficients.
    pub fn new(min_order: i32, coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "series window must be non-empty");
        Self { min_order, coeffs }
    }

    /// The zero series with window `[0, len)`.
    pub fn zero(len: usize) -> Self {
        Self::new(0, vec![0.0; len])
    }

    /// The constant `c` with window `[0, len)`.
    pub fn constant(c: f64, len: usize) -> Self {
        let mut coeffs = vec![0.0; len];
        coeffs[0] = c;
        Self::new(0, coeffs)
    }

    /// `c * t^order` with window `[order, order + len)`.
    pub fn monomial(order: i32, c: f64, len: usize) -> Self {
        let mut coeffs = vec![0.0; len];
        coeffs[0] = c;
        Self::new(order, coeffs)
    }

    /// Taylor series with window `[0, len)` and `coeff(k) = f(k)`.
    pub fn from_taylor(len: usize, f: impl Fn(usize) -> f64) -> Self {
        Self::new(0, (0..len).map(f).collect())
    }

    pub fn min_order(&self) -> i32 {
        self.min_order
    }

    /// First order whose coefficient is unknown.
    pub fn trunc_order(&self) -> i32 {
        self.min_order + self.coeffs.len() as i32
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `t^k`. Orders below the window are exactly zero;
    /// orders at or past the truncation order are unknown and rejected.
    pub fn coefficient(&self, k: i32) -> Result<f64> {
        if k >= self.trunc_order() {
            return Err(Error::OutOfTruncationWindow {
                wanted: k,
                min_order: self.min_order,
                trunc_order: self.trunc_order(),
            });
        }
        if k < self.min_order {
            return Ok(0.0);
        }
        Ok(self.coeffs[(k - self.min_order) as usize])
    }

    /// Coefficient of `t^-1`.
    pub fn residue(&self) -> Result<f64> {
        self.coefficient(-1)
    }

    /// Strips leading coefficients that are exactly zero. Returns the
    /// zero series unchanged.
    pub fn normalized(&self) -> Self {
        let lead = self.coeffs.iter().position(|&c| c != 0.0);
        match lead {
            None | Some(0) => self.clone(),
            Some(k) => Self::new(self.min_order + k as i32, self.coeffs[k..].to_vec()),
        }
    }

    fn leading(&self) -> Result<(i32, f64)> {
        let norm = self.normalized();
        if norm.coeffs[0] == 0.0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok((norm.min_order, norm.coeffs[0]))
    }

    /// Multiplies by the exact monomial `t^shift`.
    pub fn shifted(&self, shift: i32) -> Self {
        Self::new(self.min_order + shift, self.coeffs.clone())
    }

    /// Restricts the window to `[min_order, new_trunc)`.
    pub fn truncated(&self, new_trunc: i32) -> Self {
        assert!(new_trunc > self.min_order, "window would be empty");
        let keep = ((new_trunc - self.min_order) as usize).min(self.coeffs.len());
        Self::new(self.min_order, self.coeffs[..keep].to_vec())
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self::new(self.min_order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `t -> lambda * t`, i.e. multiplies `coeff(k)` by `lambda^k`.
    pub fn rescaled_variable(&self, lambda: f64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * lambda.powi(self.min_order + i as i32))
            .collect();
        Self::new(self.min_order, coeffs)
    }

    fn binary_window(&self, rhs: &Self) -> (i32, i32) {
        let min = self.min_order.min(rhs.min_order);
        let trunc = self.trunc_order().min(rhs.trunc_order());
        assert!(
            trunc > min,
            "disjoint truncation windows: [{},{}) vs [{},{})",
            self.min_order,
            self.trunc_order(),
            rhs.min_order,
            rhs.trunc_order()
        );
        (min, trunc)
    }

    pub fn add_series(&self, rhs: &Self) -> Self {
        let (min, trunc) = self.binary_window(rhs);
        let coeffs = (min..trunc)
            .map(|k| self.coefficient(k).unwrap_or(0.0) + rhs.coefficient(k).unwrap_or(0.0))
            .collect();
        Self::new(min, coeffs)
    }

    pub fn sub_series(&self, rhs: &Self) -> Self {
        self.add_series(&rhs.scaled(-1.0))
    }

    pub fn mul_series(&self, rhs: &Self) -> Self {
        let min = self.min_order + rhs.min_order;
        let len = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![0.0; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 || i >= len {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::new(min, coeffs)
    }

    /// Multiplicative inverse. The leading retained coefficient must be
    /// nonzero after stripping exact zeros.
    pub fn inverted(&self) -> Result<Self> {
        let norm = self.normalized();
        if norm.coeffs[0] == 0.0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let n = norm.coeffs.len();
        let lead = norm.coeffs[0];
        let mut inv = vec![0.0; n];
        inv[0] = 1.0 / lead;
        for k in 1..n {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += norm.coeffs[j] * inv[k - j];
            }
            inv[k] = -acc / lead;
        }
        Ok(Self::new(-norm.min_order, inv))
    }

    pub fn div_series(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_series(&rhs.inverted()?))
    }

    /// `(1 + w)^beta` of the tail `w` (no constant term) via the power
    /// recurrence; `self` must be normalized with leading coefficient 1.
    fn pow_tail(tail: &[f64], beta: f64) -> Vec<f64> {
        let n = tail.len();
        let mut out = vec![0.0; n];
        out[0] = 1.0;
        for k in 1..n {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += ((beta + 1.0) * j as f64 - k as f64) * tail[j] * out[k - j];
            }
            out[k] = acc / k as f64;
        }
        out
    }

    /// Square root with the branch fixed by a positive leading
    /// coefficient (the branch on the real positive axis). Requires even
    /// leading order.
    pub fn sqrt(&self) -> Result<Self> {
        let (order, lead) = self.leading()?;
        if order % 2 != 0 {
            return Err(Error::OddLeadingOrder(order));
        }
        if lead <= 0.0 {
            return Err(Error::NegativeLeadingCoefficient(lead));
        }
        let norm = self.normalized();
        let tail: Vec<f64> = norm.coeffs.iter().map(|c| c / lead).collect();
        let out = Self::pow_tail(&tail, 0.5);
        Ok(Self::new(order / 2, out).scaled(lead.sqrt()))
    }

    /// Real power of a series with positive leading coefficient and
    /// nonnegative leading order; the leading factor is raised as a scalar.
    pub fn pow_real(&self, beta: f64) -> Result<Self> {
        let (order, lead) = self.leading()?;
        if order < 0 {
            return Err(Error::DomainViolation(format!(
                "pow_real requires a nonnegative leading order, got {order}"
            )));
        }
        if order > 0 {
            return Err(Error::DomainViolation(format!(
                "pow_real requires a nonzero constant term; leading order is {order}"
            )));
        }
        if lead <= 0.0 {
            return Err(Error::DomainViolation(format!(
                "pow_real requires a positive constant term, got {lead}"
            )));
        }
        let norm = self.normalized();
        let tail: Vec<f64> = norm.coeffs.iter().map(|c| c / lead).collect();
        let out = Self::pow_tail(&tail, beta);
        Ok(Self::new(0, out).scaled(lead.powf(beta)))
    }

    /// Exponential. The constant term is exponentiated as a scalar, so the
    /// argument may not contain negative powers.
    pub fn exp(&self) -> Result<Self> {
        let norm = self.normalized();
        if norm.min_order < 0 {
            return Err(Error::DomainViolation(format!(
                "exp requires min_order >= 0, got {}",
                norm.min_order
            )));
        }
        // Re-anchor at order 0 so the constant term is visible.
        let n = norm.len() + norm.min_order as usize;
        let mut a = vec![0.0; n];
        for (i, &c) in norm.coeffs.iter().enumerate() {
            a[i + norm.min_order as usize] = c;
        }
        let c0 = a[0];
        let mut out = vec![0.0; n];
        out[0] = 1.0;
        for k in 1..n {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += j as f64 * a[j] * out[k - j];
            }
            out[k] = acc / k as f64;
        }
        Ok(Self::new(0, out).scaled(c0.exp()))
    }

    /// `ln(1 + w)` for an argument `w` with `min_order >= 1`.
    pub fn log1p(&self) -> Result<Self> {
        let norm = self.normalized();
        if norm.min_order < 1 && norm.coeffs.iter().any(|&c| c != 0.0) {
            return Err(Error::DomainViolation(format!(
                "log1p requires min_order >= 1, got {}",
                norm.min_order
            )));
        }
        let n = norm.len() + norm.min_order.max(0) as usize;
        let mut w = vec![0.0; n];
        for (i, &c) in norm.coeffs.iter().enumerate() {
            w[i + norm.min_order as usize] = c;
        }
        let mut out = vec![0.0; n];
        for k in 1..n {
            let mut acc = 0.0;
            for j in 1..k {
                acc += j as f64 * out[j] * w[k - j];
            }
            out[k] = w[k] - acc / k as f64;
        }
        Ok(Self::new(0, out))
    }

    /// Term-by-term derivative in the formal variable.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * (self.min_order + i as i32) as f64)
            .collect();
        Self::new(self.min_order - 1, coeffs)
    }

    /// Sums the retained terms at a real point.
    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc * t.powi(self.min_order)
    }

    /// Sums the retained terms at a complex point.
    pub fn eval_complex(&self, t: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc * t.powi(self.min_order)
    }

    /// Largest absolute coefficient, for relative comparisons.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: Self) -> LaurentSeries {
        self.add_series(rhs)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: Self) -> LaurentSeries {
        self.sub_series(rhs)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: Self) -> LaurentSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        self.scaled(-1.0)
    }
}

/// `cosh(c t)` with window `[0, len)`.
pub fn cosh_ct(c: f64, len: usize) -> LaurentSeries {
    LaurentSeries::from_taylor(len, |k| {
        if k % 2 == 0 {
            c.powi(k as i32) / factorial(k)
        } else {
            0.0
        }
    })
}

/// `sinh(c t)` with window `[0, len)`.
pub fn sinh_ct(c: f64, len: usize) -> LaurentSeries {
    LaurentSeries::from_taylor(len, |k| {
        if k % 2 == 1 {
            c.powi(k as i32) / factorial(k)
        } else {
            0.0
        }
    })
}

/// `exp(c t)` with window `[0, len)`.
pub fn exp_ct(c: f64, len: usize) -> LaurentSeries {
    LaurentSeries::from_taylor(len, |k| c.powi(k as i32) / factorial(k))
}

pub(crate) fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}
