//! Nilpotent jets over Laurent series.
//!
//! A [`JetSeries`] is a truncated multivariate polynomial of total degree
//! at most 2 in perturbation variables `d_0 .. d_(n-1)`, with
//! [`LaurentSeries`] coefficients. Products discard total degree above 2,
//! so third and higher derivatives are never (incorrectly) produced.
//! Evaluating a closed-form kernel on jet-valued coordinates and reading
//! off monomial coefficients yields its exact first and second partial
//! derivatives on the diagonal.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::series::LaurentSeries;

pub const MAX_JET_VARS: usize = 6;
pub const MAX_JET_DEGREE: u8 = 2;

/// Exponent vector of one monomial in the perturbation variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiIndex(pub [u8; MAX_JET_VARS]);

impl MultiIndex {
    pub fn zero() -> Self {
        MultiIndex([0; MAX_JET_VARS])
    }

    pub fn unit(var: usize) -> Self {
        let mut m = Self::zero();
        m.0[var] = 1;
        m
    }

    /// Index of `d_i d_j` (or `d_i^2` when `i == j`).
    pub fn pair(i: usize, j: usize) -> Self {
        let mut m = Self::zero();
        m.0[i] += 1;
        m.0[j] += 1;
        m
    }

    pub fn degree(&self) -> u8 {
        self.0.iter().sum()
    }

    fn checked_add(&self, rhs: &Self) -> Option<Self> {
        let mut out = [0u8; MAX_JET_VARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(rhs.0.iter())) {
            *o = a + b;
        }
        let m = MultiIndex(out);
        (m.degree() <= MAX_JET_DEGREE).then_some(m)
    }

    fn factorial(&self) -> f64 {
        self.0
            .iter()
            .map(|&e| match e {
                0 | 1 => 1.0,
                2 => 2.0,
                _ => unreachable!("jet degree is capped at 2"),
            })
            .product()
    }
}

/// Degree-2 jet with Laurent-series coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct JetSeries {
    num_vars: usize,
    terms: BTreeMap<MultiIndex, LaurentSeries>,
}

impl JetSeries {
    pub fn new(num_vars: usize) -> Self {
        assert!(num_vars <= MAX_JET_VARS);
        Self {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    /// Jet with only a scalar (degree-0) part.
    pub fn from_series(num_vars: usize, s: LaurentSeries) -> Self {
        let mut jet = Self::new(num_vars);
        jet.terms.insert(MultiIndex::zero(), s);
        jet
    }

    pub fn from_constant(num_vars: usize, c: f64, len: usize) -> Self {
        Self::from_series(num_vars, LaurentSeries::constant(c, len))
    }

    /// The lifted coordinate `center + d_var`.
    pub fn variable(num_vars: usize, center: f64, var: usize, len: usize) -> Self {
        assert!(var < num_vars);
        let mut jet = Self::from_constant(num_vars, center, len);
        jet.terms
            .insert(MultiIndex::unit(var), LaurentSeries::constant(1.0, len));
        jet
    }

    /// `center + sum_i coeffs[i] * d_i`, the generic nilpotent linear form.
    pub fn linear_form(num_vars: usize, center: f64, coeffs: &[f64], len: usize) -> Self {
        assert_eq!(coeffs.len(), num_vars);
        let mut jet = Self::new(num_vars);
        if center != 0.0 {
            jet.terms
                .insert(MultiIndex::zero(), LaurentSeries::constant(center, len));
        }
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0.0 {
                jet.terms
                    .insert(MultiIndex::unit(i), LaurentSeries::constant(c, len));
            }
        }
        jet
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &LaurentSeries)> {
        self.terms.iter()
    }

    /// Degree-0 coefficient, i.e. the kernel value on the diagonal.
    pub fn scalar_part(&self) -> LaurentSeries {
        self.term(&MultiIndex::zero())
    }

    fn window_len(&self) -> usize {
        self.terms
            .values()
            .map(|s| s.len())
            .min()
            .unwrap_or(crate::series::default_len())
    }

    fn term(&self, m: &MultiIndex) -> LaurentSeries {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| LaurentSeries::zero(self.window_len()))
    }

    fn insert_add(&mut self, m: MultiIndex, s: LaurentSeries) {
        match self.terms.get_mut(&m) {
            Some(existing) => *existing = existing.add_series(&s),
            None => {
                self.terms.insert(m, s);
            }
        }
    }

    pub fn add_jet(&self, rhs: &Self) -> Self {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = self.clone();
        for (m, s) in &rhs.terms {
            out.insert_add(*m, s.clone());
        }
        out
    }

    pub fn sub_jet(&self, rhs: &Self) -> Self {
        self.add_jet(&rhs.scaled(-1.0))
    }

    pub fn scaled(&self, c: f64) -> Self {
        let mut out = Self::new(self.num_vars);
        for (m, s) in &self.terms {
            out.terms.insert(*m, s.scaled(c));
        }
        out
    }

    pub fn mul_scalar_series(&self, s: &LaurentSeries) -> Self {
        let mut out = Self::new(self.num_vars);
        for (m, t) in &self.terms {
            out.terms.insert(*m, t.mul_series(s));
        }
        out
    }

    /// Jet product; monomials of total degree above 2 are discarded
    /// (nilpotency of order 3).
    pub fn mul_jet(&self, rhs: &Self) -> Self {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = Self::new(self.num_vars);
        for (ma, sa) in &self.terms {
            for (mb, sb) in &rhs.terms {
                if let Some(m) = ma.checked_add(mb) {
                    out.insert_add(m, sa.mul_series(sb));
                }
            }
        }
        out
    }

    /// The nilpotent part (all terms of degree >= 1).
    fn nilpotent(&self) -> Self {
        let mut out = Self::new(self.num_vars);
        for (m, s) in &self.terms {
            if m.degree() > 0 {
                out.terms.insert(*m, s.clone());
            }
        }
        out
    }

    /// Applies a scalar function through its degree-2 Taylor expansion
    /// around the scalar part: `f(A + N) = f0 + f1 N + (f2/2) N^2`.
    fn apply_taylor2(&self, f0: LaurentSeries, f1: LaurentSeries, f2: LaurentSeries) -> Self {
        let n = self.nilpotent();
        let mut out = Self::from_series(self.num_vars, f0);
        out = out.add_jet(&n.mul_scalar_series(&f1));
        let n2 = n.mul_jet(&n);
        out.add_jet(&n2.mul_scalar_series(&f2.scaled(0.5)))
    }

    pub fn inverted(&self) -> Result<Self> {
        let a = self.scalar_part();
        let ia = a.inverted()?;
        let ia2 = ia.mul_series(&ia);
        let ia3 = ia2.mul_series(&ia);
        Ok(self.apply_taylor2(ia, ia2.scaled(-1.0), ia3.scaled(2.0)))
    }

    pub fn sqrt(&self) -> Result<Self> {
        let a = self.scalar_part();
        let r = a.sqrt()?;
        let ir = r.inverted()?;
        let f1 = ir.scaled(0.5);
        let f2 = ir.mul_series(&a.inverted()?).scaled(-0.25);
        Ok(self.apply_taylor2(r, f1, f2))
    }

    pub fn exp(&self) -> Result<Self> {
        let e = self.scalar_part().exp()?;
        Ok(self.apply_taylor2(e.clone(), e.clone(), e))
    }

    pub fn log1p(&self) -> Result<Self> {
        let a = self.scalar_part();
        let f0 = a.log1p()?;
        let one_plus_a = LaurentSeries::constant(1.0, a.len().max(1)).add_series(&a);
        let f1 = one_plus_a.inverted()?;
        let f2 = f1.mul_series(&f1).scaled(-1.0);
        Ok(self.apply_taylor2(f0, f1, f2))
    }

    pub fn pow_real(&self, beta: f64) -> Result<Self> {
        let a = self.scalar_part();
        let f0 = a.pow_real(beta)?;
        let ia = a.inverted()?;
        let f1 = f0.mul_series(&ia).scaled(beta);
        let f2 = f0
            .mul_series(&ia.mul_series(&ia))
            .scaled(beta * (beta - 1.0));
        Ok(self.apply_taylor2(f0, f1, f2))
    }

    /// Mixed partial derivative for the given exponent vector: the
    /// monomial coefficient times the multi-index factorial.
    pub fn partial(&self, m: MultiIndex) -> LaurentSeries {
        self.term(&m).scaled(m.factorial())
    }

    pub fn partial_pair(&self, i: usize, j: usize) -> LaurentSeries {
        self.partial(MultiIndex::pair(i, j))
    }

    pub fn partial_first(&self, i: usize) -> LaurentSeries {
        self.partial(MultiIndex::unit(i))
    }
}

/// `cos(angle + N)` for a nilpotent jet `N` (no degree-0 part).
pub fn jet_cos(angle: f64, n: &JetSeries, len: usize) -> JetSeries {
    apply_nilpotent_taylor(n, angle.cos(), -angle.sin(), -angle.cos(), len)
}

/// `sin(angle + N)` for a nilpotent jet `N`.
pub fn jet_sin(angle: f64, n: &JetSeries, len: usize) -> JetSeries {
    apply_nilpotent_taylor(n, angle.sin(), angle.cos(), -angle.sin(), len)
}

fn apply_nilpotent_taylor(n: &JetSeries, f0: f64, f1: f64, f2: f64, len: usize) -> JetSeries {
    debug_assert!(
        n.terms().all(|(m, _)| m.degree() > 0),
        "argument must be nilpotent"
    );
    let mut out = JetSeries::from_constant(n.num_vars(), f0, len);
    out = out.add_jet(&n.scaled(f1));
    let n2 = n.mul_jet(n);
    out.add_jet(&n2.scaled(f2 * 0.5))
}

/// Finite-difference oracle for mixed second partials, used by tests that
/// cross-check jet derivatives against direct numeric evaluation.
pub fn central_mixed_second(f: impl Fn(f64, f64) -> f64, x: f64, y: f64, step: f64) -> f64 {
    (f(x + step, y + step) - f(x + step, y - step) - f(x - step, y + step) + f(x - step, y - step))
        / (4.0 * step * step)
}

/// Finite-difference second derivative in a single variable.
pub fn central_second(f: impl Fn(f64) -> f64, x: f64, step: f64) -> f64 {
    (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step)
}

/// Finite-difference first derivative.
pub fn central_first(f: impl Fn(f64) -> f64, x: f64, step: f64) -> f64 {
    (f(x + step) - f(x - step)) / (2.0 * step)
}

impl std::ops::Add for &JetSeries {
    type Output = JetSeries;
    fn add(self, rhs: Self) -> JetSeries {
        self.add_jet(rhs)
    }
}

impl std::ops::Sub for &JetSeries {
    type Output = JetSeries;
    fn sub(self, rhs: Self) -> JetSeries {
        self.sub_jet(rhs)
    }
}

impl std::ops::Mul for &JetSeries {
    type Output = JetSeries;
    fn mul(self, rhs: Self) -> JetSeries {
        self.mul_jet(rhs)
    }
}
