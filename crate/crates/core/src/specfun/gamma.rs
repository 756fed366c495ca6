//! Gamma function: point values and local Laurent expansions.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::series::LaurentSeries;

/// Lanczos coefficients (g = 7, n = 9).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Bernoulli numbers B_2 .. B_16 for the Stirling series.
const BERNOULLI_EVEN: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Gamma function via the Lanczos approximation, with the reflection
/// formula for arguments below 1/2. Accurate to roughly 13 significant
/// digits away from the poles.
pub fn gamma_value(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::PoleAt(x));
    }
    Ok(gamma_unchecked(x))
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        PI / ((PI * x).sin() * gamma_unchecked(1.0 - x))
    } else {
        let z = x - 1.0;
        let mut acc = LANCZOS[0];
        for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc
    }
}

/// Natural log of |Gamma(x)| for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::DomainViolation(format!(
            "ln_gamma requires x > 0, got {x}"
        )));
    }
    Ok(gamma_unchecked(x).ln())
}

/// Local expansion of the gamma function around `center`:
/// `Gamma(center + w)` as a Laurent series in `w`.
///
/// At a nonpositive integer `-n` the expansion starts at `w^-1` with
/// residue `(-1)^n / n!`; elsewhere it is a Taylor series whose constant
/// term is `Gamma(center)`.
#[derive(Debug, Clone)]
pub struct GammaExpansion {
    pub center: f64,
    pub series: LaurentSeries,
}

/// Builds `Gamma(center + w)` to `depth` retained coefficients.
///
/// The recurrence `Gamma(z) = Gamma(z + n) / (z (z+1) ... (z+n-1))` shifts
/// the argument to a base point `B = center + n >= 12`, where the Stirling
/// series for `ln Gamma(B + w)` converges to machine precision; the shift
/// polynomial is then divided out in the series ring. A factor that
/// vanishes (center at a nonpositive integer) contributes the pole.
pub fn gamma_laurent(center: f64, depth: usize) -> GammaExpansion {
    assert!(depth >= 2, "expansion depth must be at least 2");
    // Guard coefficients: rational factors below cost one order each.
    let work = depth + 4;
    let shift = ((12.0 - center).ceil() as i32).max(0);
    let base = center + shift as f64;

    let series = ln_gamma_series(base, work)
        .exp()
        .expect("exp of a Taylor series");
    let mut denom = LaurentSeries::constant(1.0, work);
    for j in 0..shift {
        let c = center + j as f64;
        let factor = if c == 0.0 {
            LaurentSeries::monomial(1, 1.0, work)
        } else {
            LaurentSeries::constant(c, work).add_series(&LaurentSeries::monomial(1, 1.0, work))
        };
        denom = denom.mul_series(&factor);
    }
    let full = series
        .div_series(&denom)
        .expect("shift polynomial has a nonzero leading coefficient");
    GammaExpansion {
        center,
        series: full.truncated(full.min_order() + depth as i32),
    }
}

/// `ln Gamma(base + w)` as a Taylor series in `w`, for `base >= 12`,
/// assembled in the series ring from the Stirling expansion.
fn ln_gamma_series(base: f64, len: usize) -> LaurentSeries {
    let z = LaurentSeries::constant(base, len).add_series(&LaurentSeries::monomial(1, 1.0, len));
    let ln_z = LaurentSeries::constant(base.ln(), len).add_series(
        &LaurentSeries::monomial(1, 1.0 / base, len)
            .log1p()
            .expect("argument has min_order 1"),
    );
    // (z - 1/2) ln z - z + ln(2 pi)/2 + sum B_2j / (2j (2j-1) z^(2j-1))
    let half_log_2pi = 0.5 * (2.0 * PI).ln();
    let mut acc = z
        .sub_series(&LaurentSeries::constant(0.5, len))
        .mul_series(&ln_z)
        .sub_series(&z)
        .add_series(&LaurentSeries::constant(half_log_2pi, len));
    let inv_z = z.inverted().expect("base is positive");
    let inv_z2 = inv_z.mul_series(&inv_z);
    let mut inv_pow = inv_z; // z^-(2j-1)
    for (j, &b2j) in BERNOULLI_EVEN.iter().enumerate() {
        let two_j = 2.0 * (j + 1) as f64;
        acc = acc.add_series(&inv_pow.scaled(b2j / (two_j * (two_j - 1.0))));
        inv_pow = inv_pow.mul_series(&inv_z2);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn classical_values() {
        assert_relative_eq!(gamma_value(1.0).unwrap(), 1.0, max_relative = 1e-13);
        assert_relative_eq!(gamma_value(0.5).unwrap(), PI.sqrt(), max_relative = 1e-13);
        assert_relative_eq!(gamma_value(5.0).unwrap(), 24.0, max_relative = 1e-13);
    }

    #[test]
    fn recurrence_and_reflection() {
        for &x in &[0.1, 0.37, 1.7, 2.3, 4.9, 8.2, -0.4, -2.6] {
            let lhs = gamma_value(x + 1.0).unwrap();
            let rhs = x * gamma_value(x).unwrap();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
        }
        for &x in &[0.23, 0.41, 0.77, -1.3] {
            let lhs = gamma_value(x).unwrap() * gamma_value(1.0 - x).unwrap();
            let rhs = PI / (PI * x).sin();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
        }
        assert!(matches!(gamma_value(0.0), Err(Error::PoleAt(_))));
        assert!(matches!(gamma_value(-3.0), Err(Error::PoleAt(_))));
    }

    #[test]
    fn expansion_at_one_gives_euler_gamma() {
        let exp = gamma_laurent(1.0, 6);
        assert_eq!(exp.series.min_order(), 0);
        assert_relative_eq!(
            exp.series.coefficient(0).unwrap(),
            1.0,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            exp.series.coefficient(1).unwrap(),
            -EULER_GAMMA,
            max_relative = 1e-12
        );
        // coefficient of w^2 is (gamma^2 + pi^2/6) / 2
        assert_relative_eq!(
            exp.series.coefficient(2).unwrap(),
            (EULER_GAMMA * EULER_GAMMA + PI * PI / 6.0) / 2.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn pole_residues_match_closed_form() {
        for n in 0..6usize {
            let exp = gamma_laurent(-(n as f64), 5);
            assert_eq!(exp.series.min_order(), -1, "pole at -{n}");
            let residue = exp.series.coefficient(-1).unwrap();
            let expect = (-1.0f64).powi(n as i32) / crate::series::factorial(n);
            assert_relative_eq!(residue, expect, max_relative = 1e-13);
        }
    }

    #[test]
    fn constant_term_at_minus_two_matches_numeric_limit() {
        // lim_{x -> -2} Gamma(x) - (1/2)/(x + 2), extrapolated from three
        // offsets (the offsets stay moderate: close to the pole the
        // reflection-formula sine loses relative accuracy).
        let exp = gamma_laurent(-2.0, 5);
        let c0 = exp.series.coefficient(0).unwrap();
        let f = |eps: f64| gamma_value(-2.0 + eps).unwrap() - 0.5 / eps;
        let eps = 1e-3;
        let (f1, f2, f3) = (f(eps), f(eps / 2.0), f(eps / 4.0));
        let (g1, g2) = (2.0 * f2 - f1, 2.0 * f3 - f2);
        let limit = (4.0 * g2 - g1) / 3.0;
        assert_relative_eq!(c0, limit, max_relative = 1e-7);
    }

    #[test]
    fn taylor_expansion_matches_point_values() {
        for &c in &[0.5, 1.5, -0.5, -2.5, 3.2] {
            let exp = gamma_laurent(c, 16);
            for &w in &[0.05, -0.08, 0.1] {
                let predicted = exp.series.eval(w);
                let direct = gamma_value(c + w).unwrap();
                assert_relative_eq!(predicted, direct, max_relative = 1e-9);
            }
        }
    }
}
