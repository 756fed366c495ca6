//! Semi-analytic engine for the renormalized vacuum observables of a
//! scalar field near flat boundaries: parallel hyperplanes, massive
//! perpendicular half-planes, three-dimensional wedges and the cosmic
//! string.
//!
//! What would normally be done with symbolic residue and Laurent-series
//! manipulations is carried out in an exact-truncation series ring:
//! closed-form cylinder kernels are expanded as nilpotent jets over
//! Laurent series in the kernel variable, renormalized values drop out
//! as residues (massless configurations) or as regular parts of
//! expansions in the zeta regulator (massive configurations), and an
//! independent keyhole-contour quadrature cross-checks the residue path.

// `!(x > 0.0)` guards reject NaN along with the out-of-domain sign.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod continuation;
pub mod error;
pub mod jet;
pub mod kernels;
pub mod observables;
pub mod reference;
pub mod series;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use jet::{JetSeries, MultiIndex};
pub use kernels::{BoundaryMode, WedgeGeometry};
pub use observables::{
    frame_transform, pressure_halfspace, pressure_parallel, pressure_rectwedge, pressure_wedge,
    reduced_energy_parallel, stress_halfspace_massive, stress_parallel, stress_rectwedge_massive,
    stress_wedge, xi_critical, Configuration, ConformalSplit, FaceBc, Frame, Plate, Prescription,
    PressureResult, StressTensor,
};
pub use series::LaurentSeries;
