//! Randomized cross-module invariants: properties that should hold at
//! arbitrary admissible parameters, not just at the registry's pinned
//! points.

use casimir_core::kernels::{BoundaryMode, WedgeGeometry};
use casimir_core::observables::{
    frame_transform, stress_halfspace_massive, stress_parallel, stress_wedge, xi_critical, FaceBc,
    Frame,
};
use proptest::prelude::*;

const MODES: [BoundaryMode; 4] = [
    BoundaryMode::DirichletDirichlet,
    BoundaryMode::DirichletNeumann,
    BoundaryMode::NeumannNeumann,
    BoundaryMode::Periodic,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn slab_tensor_is_affine_in_the_coupling(
        x1 in 0.15f64..0.85,
        xi in -0.3f64..0.6,
        mode_idx in 0usize..4,
    ) {
        let bc = MODES[mode_idx];
        let t0 = stress_parallel(bc, 3, 1.0, 0.0, x1).unwrap().total();
        let t1 = stress_parallel(bc, 3, 1.0, 1.0, x1).unwrap().total();
        let t_xi = stress_parallel(bc, 3, 1.0, xi, x1).unwrap().total();
        let predicted = t0.add(&t1.sub(&t0).scaled(xi));
        let scale = t_xi.max_abs().max(1e-300);
        prop_assert!(predicted.sub(&t_xi).max_abs() / scale < 1e-11);
    }

    #[test]
    fn slab_scaling_law(
        a in 0.5f64..2.0,
        frac in 0.2f64..0.8,
        xi in 0.0f64..0.4,
    ) {
        let big = stress_parallel(BoundaryMode::DirichletDirichlet, 3, a, xi, frac * a)
            .unwrap()
            .total();
        let unit = stress_parallel(BoundaryMode::DirichletDirichlet, 3, 1.0, xi, frac)
            .unwrap()
            .total();
        for i in 0..4 {
            let expect = unit.get(i, i) / a.powi(4);
            prop_assert!((big.get(i, i) - expect).abs() <= 1e-10 * unit.max_abs());
        }
    }

    #[test]
    fn wedge_trace_vanishes_at_critical_coupling(
        alpha in 0.6f64..5.8,
        rho in 0.5f64..2.0,
        frac in 0.15f64..0.85,
        mode_idx in 0usize..4,
    ) {
        let mode = MODES[mode_idx];
        let geom = WedgeGeometry::interior(alpha, rho, frac * alpha).unwrap();
        let t = stress_wedge(mode, &geom, xi_critical(3)).unwrap().total();
        prop_assert!(t.metric_trace().abs() <= 1e-10 * t.max_abs().max(1e-300));
    }

    #[test]
    fn wedge_tensor_symmetry_and_static_block(
        alpha in 0.6f64..5.8,
        rho in 0.5f64..2.0,
        frac in 0.15f64..0.85,
        xi in 0.0f64..0.3,
    ) {
        let geom = WedgeGeometry::interior(alpha, rho, frac * alpha).unwrap();
        let t = stress_wedge(BoundaryMode::DirichletNeumann, &geom, xi)
            .unwrap()
            .total();
        prop_assert!(t.is_symmetric());
        for i in 1..4 {
            prop_assert_eq!(t.get(0, i), 0.0);
        }
        // z never mixes with rho or theta on the diagonal
        prop_assert!(t.get(1, 3).abs() <= 1e-12 * t.max_abs());
        prop_assert!(t.get(2, 3).abs() <= 1e-12 * t.max_abs());
    }

    #[test]
    fn frame_round_trip_on_wedge_output(
        alpha in 0.8f64..3.0,
        rho in 0.5f64..2.0,
        frac in 0.2f64..0.8,
    ) {
        let geom = WedgeGeometry::interior(alpha, rho, frac * alpha).unwrap();
        let t = stress_wedge(BoundaryMode::DirichletDirichlet, &geom, 0.21)
            .unwrap()
            .total();
        let cart = frame_transform(&t, Frame::Cartesian).unwrap();
        let back = frame_transform(
            &cart,
            Frame::Cylindrical {
                rho,
                theta: frac * alpha,
            },
        )
        .unwrap();
        let scale = t.max_abs();
        for i in 0..4 {
            for j in 0..4 {
                prop_assert!((back.get(i, j) - t.get(i, j)).abs() <= 1e-12 * scale);
            }
        }
    }

    #[test]
    fn halfspace_kappa_enters_only_through_the_logarithm(
        m in 0.4f64..2.0,
        x1 in 0.4f64..1.6,
        kappa in 0.3f64..3.0,
    ) {
        // T(kappa) - T(kappa') must be proportional to ln(kappa'/kappa)
        // times a coupling-independent diagonal matrix.
        let xi = 0.23;
        let t1 = stress_halfspace_massive(FaceBc::Dirichlet, m, kappa, xi, x1)
            .unwrap()
            .total();
        let t2 = stress_halfspace_massive(FaceBc::Dirichlet, m, 2.0 * kappa, xi, x1)
            .unwrap()
            .total();
        let diff = t2.sub(&t1);
        let expect = m.powi(4) / (32.0 * std::f64::consts::PI.powi(2)) * 2.0f64.ln();
        prop_assert!((diff.get(0, 0) + expect).abs() <= 1e-10 * expect.abs());
        prop_assert!((diff.get(1, 1) - expect).abs() <= 1e-10 * expect.abs());
        prop_assert!((diff.get(2, 2) - expect).abs() <= 1e-10 * expect.abs());
    }
}
