use thiserror::Error;

/// Errors shared by the series algebra, special functions, kernel catalog
/// and observable assembly.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Inversion of a series whose retained coefficients are all zero.
    #[error("cannot invert a series with zero leading coefficient")]
    ZeroLeadingCoefficient,

    /// Square root of a series whose leading order is odd.
    #[error("series square root requires an even leading order, got {0}")]
    OddLeadingOrder(i32),

    /// Square root of a series with a negative leading coefficient.
    #[error("series square root requires a positive leading coefficient, got {0}")]
    NegativeLeadingCoefficient(f64),

    /// Precondition violation for an elementary series/scalar function.
    #[error("domain violation: {0}")]
    DomainViolation(String),

    /// A coefficient at or above the truncation order was requested.
    /// Coefficients there are unknown, not zero.
    #[error("coefficient of order {wanted} is outside the truncation window [{min_order}, {trunc_order})")]
    OutOfTruncationWindow {
        wanted: i32,
        min_order: i32,
        trunc_order: i32,
    },

    /// A residue or regular-part extraction would read too close to the
    /// truncation order to be trustworthy.
    #[error("extraction at order {wanted} leaves only {slack} guard coefficients below the truncation order {trunc_order} (need {margin})")]
    TruncationMarginExceeded {
        wanted: i32,
        trunc_order: i32,
        slack: i32,
        margin: i32,
    },

    /// Gamma evaluated at a nonpositive integer.
    #[error("gamma function pole at {0}")]
    PoleAt(f64),

    /// Bessel K evaluated at a nonpositive argument.
    #[error("modified Bessel function K requires a positive argument, got {0}")]
    NonPositiveArgument(f64),

    /// A point or parameter set outside the configuration's domain.
    #[error("geometry violation: {0}")]
    GeometryViolation(String),

    /// Contour quadrature failed its two-resolution consistency check.
    #[error("Hankel quadrature did not converge: resolutions differ by {0:.3e}")]
    QuadratureNotConverged(f64),

    /// A regulator expansion with a pole deeper than first order; no such
    /// expansion arises for the supported configurations.
    #[error("regulator expansion has a pole of order {0}; only simple poles are supported")]
    DeepPole(i32),

    /// Parallel-plane formulas are derived for odd spatial dimension only.
    #[error("spatial dimension {0} is unsupported; d must be odd and >= 3")]
    EvenDimensionUnsupported(usize),

    /// Pressure requested on a corner point, where the outer normal (and
    /// with it the notion of pressure) is ill-defined.
    #[error(
        "pressure is undefined on the corner (face coordinate {0:.3e} below the cutoff {1:.3e})"
    )]
    CornerPoint(f64, f64),

    /// Unknown reference-formula identifier.
    #[error("unknown reference key: {0}")]
    UnknownKey(String),
}

pub type Result<T> = std::result::Result<T, Error>;
