//! Verification registry: every acceptance criterion as an executable
//! check with its tolerance pinned in code. The `verify` subcommand and
//! the acceptance test suite both run this registry.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::continuation::{
    hankel_quadrature, hankel_quadrature_converged, residue_weighted_checked, HankelParams,
};
use crate::error::Error;
use crate::kernels::{reduced_kernel_numeric, reduced_trace_numeric, BoundaryMode, WedgeGeometry};
use crate::observables::{
    frame_transform, pressure_halfspace, pressure_parallel, pressure_rectwedge, pressure_wedge,
    reduced_energy_parallel, stress_halfspace_massive, stress_parallel, stress_rectwedge_massive,
    stress_wedge, xi_critical, FaceBc, Frame, Plate, StressTensor,
};
use crate::reference;
use crate::specfun::bessel_k;

/// How a check's deviation is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Relative,
    Absolute,
    /// Pass/fail condition without a numeric distance (e.g. "flagged
    /// divergent", "error raised").
    Flag,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: String,
    pub criterion: u8,
    pub engine: f64,
    pub reference: f64,
    pub error: f64,
    pub tol: f64,
    pub kind: ErrorKind,
    pub pass: bool,
    pub note: Option<String>,
}

impl CheckResult {
    pub fn line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let kind = match self.kind {
            ErrorKind::Relative => "rel",
            ErrorKind::Absolute => "abs",
            ErrorKind::Flag => "flag",
        };
        format!(
            "[{status}] c{:02} {:<58} engine={:+.10e} reference={:+.10e} {kind}_err={:.3e} tol={:.1e}{}",
            self.criterion,
            self.id,
            self.engine,
            self.reference,
            self.error,
            self.tol,
            self.note
                .as_ref()
                .map(|n| format!("  ({n})"))
                .unwrap_or_default()
        )
    }
}

struct Registry {
    filter: Option<String>,
    tol_override: Option<f64>,
    results: Vec<CheckResult>,
}

impl Registry {
    fn wants(&self, id: &str) -> bool {
        match &self.filter {
            Some(f) => id.contains(f.as_str()),
            None => true,
        }
    }

    fn push_value(
        &mut self,
        criterion: u8,
        id: &str,
        kind: ErrorKind,
        tol: f64,
        outcome: Result<(f64, f64), Error>,
    ) {
        if !self.wants(id) {
            return;
        }
        let tol = self.tol_override.unwrap_or(tol);
        let result = match outcome {
            Ok((engine, reference)) => {
                let error = match kind {
                    ErrorKind::Relative => (engine - reference).abs() / reference.abs().max(1e-300),
                    ErrorKind::Absolute => (engine - reference).abs(),
                    ErrorKind::Flag => {
                        if engine == reference {
                            0.0
                        } else {
                            1.0
                        }
                    }
                };
                CheckResult {
                    id: id.to_string(),
                    criterion,
                    engine,
                    reference,
                    error,
                    tol,
                    kind,
                    pass: error <= tol,
                    note: None,
                }
            }
            Err(e) => CheckResult {
                id: id.to_string(),
                criterion,
                engine: f64::NAN,
                reference: f64::NAN,
                error: f64::INFINITY,
                tol,
                kind,
                pass: false,
                note: Some(format!("error: {e}")),
            },
        };
        self.results.push(result);
    }
}

fn tensor_rel_err(engine: &StressTensor, reference: &StressTensor) -> f64 {
    let scale = reference.max_abs().max(1e-300);
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((engine.get(i, j) - reference.get(i, j)).abs() / scale);
        }
    }
    worst
}

fn tensor_abs_err(engine: &StressTensor, reference: &StressTensor) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((engine.get(i, j) - reference.get(i, j)).abs());
        }
    }
    worst
}

/// Runs the registry; `filter` restricts to checks whose id contains the
/// substring, `tol_override` replaces every pinned tolerance.
pub fn run_all(filter: Option<&str>, tol_override: Option<f64>) -> Vec<CheckResult> {
    let mut reg = Registry {
        filter: filter.map(|s| s.to_string()),
        tol_override,
        results: Vec::new(),
    };

    criterion_1_parallel_dd(&mut reg);
    criterion_2_parallel_other(&mut reg);
    criterion_3_energies(&mut reg);
    criterion_4_plate_pressures(&mut reg);
    criterion_5_halfspace(&mut reg);
    criterion_6_rectwedge(&mut reg);
    criterion_7_zero_mass(&mut reg);
    criterion_8_wedge_tensors(&mut reg);
    criterion_9_wedge_pressures(&mut reg);
    criterion_10_cross_configuration(&mut reg);
    criterion_11_cosmic_string(&mut reg);
    criterion_12_oracle_equivalence(&mut reg);
    criterion_13_property_suites(&mut reg);

    reg.results
}

// --- criterion 1: parallel planes, Dirichlet both sides, d = 3 ---

fn criterion_1_parallel_dd(reg: &mut Registry) {
    for &x1 in &[0.2, 0.5, 0.8] {
        for &xi in &[0.0, 1.0 / 6.0, 0.25] {
            let id = format!("parallel-dd-tensor-x{x1}-xi{xi:.4}");
            let outcome =
                stress_parallel(BoundaryMode::DirichletDirichlet, 3, 1.0, xi, x1).map(|split| {
                    let engine = split.total();
                    let reference = reference::parallel_dd_tensor(1.0, xi, x1);
                    let err = tensor_rel_err(&engine, &reference);
                    (err, 0.0)
                });
            reg.push_value(1, &id, ErrorKind::Absolute, 1e-10, outcome);
        }
    }
}

// --- criterion 2: the other boundary conditions at d = 3 ---

fn criterion_2_parallel_other(reg: &mut Registry) {
    for &x1 in &[0.25, 0.6] {
        for &xi in &[0.0, 1.0 / 6.0, 0.25] {
            for (name, bc) in [
                ("dn", BoundaryMode::DirichletNeumann),
                ("nn", BoundaryMode::NeumannNeumann),
            ] {
                let id = format!("parallel-{name}-tensor-x{x1}-xi{xi:.4}");
                let outcome = stress_parallel(bc, 3, 1.0, xi, x1).map(|split| {
                    let engine = split.total();
                    let reference = match bc {
                        BoundaryMode::DirichletNeumann => {
                            reference::parallel_dn_tensor(1.0, xi, x1)
                        }
                        _ => reference::parallel_nn_tensor(1.0, xi, x1),
                    };
                    (tensor_rel_err(&engine, &reference), 0.0)
                });
                reg.push_value(2, &id, ErrorKind::Absolute, 1e-10, outcome);
            }
        }
    }
    for &xi in &[0.0, 0.3] {
        let id = format!("parallel-periodic-tensor-xi{xi:.4}");
        let outcome = stress_parallel(BoundaryMode::Periodic, 3, 1.0, xi, 0.37).map(|split| {
            let engine = split.total();
            let reference = reference::parallel_periodic_tensor(1.0);
            (tensor_rel_err(&engine, &reference), 0.0)
        });
        reg.push_value(2, &id, ErrorKind::Absolute, 1e-10, outcome);
    }
    let outcome = stress_parallel(BoundaryMode::Periodic, 3, 1.0, 0.11, 0.7)
        .map(|split| (split.total().get(0, 0), -PI * PI / 90.0));
    reg.push_value(
        2,
        "parallel-periodic-energy-density",
        ErrorKind::Relative,
        1e-10,
        outcome,
    );
}

// --- criterion 3: reduced energies ---

fn criterion_3_energies(reg: &mut Registry) {
    let cases = [
        ("dd", BoundaryMode::DirichletDirichlet, -PI * PI / 1440.0),
        (
            "dn",
            BoundaryMode::DirichletNeumann,
            7.0 * PI * PI / 11520.0,
        ),
        ("periodic", BoundaryMode::Periodic, -PI * PI / 90.0),
        ("nn", BoundaryMode::NeumannNeumann, -PI * PI / 1440.0),
    ];
    for (name, bc, expect) in cases {
        let id = format!("energy-{name}");
        let outcome = reduced_energy_parallel(bc, 3, 1.0).map(|e| (e, expect));
        reg.push_value(3, &id, ErrorKind::Relative, 1e-12, outcome);
    }
}

// --- criterion 4: plate pressures, both prescriptions ---

fn criterion_4_plate_pressures(reg: &mut Registry) {
    let cases = [
        ("dd", BoundaryMode::DirichletDirichlet),
        ("nn", BoundaryMode::NeumannNeumann),
        ("dn", BoundaryMode::DirichletNeumann),
    ];
    for (name, bc) in cases {
        for (plate_name, plate, at_zero) in
            [("pi0", Plate::AtZero, true), ("pia", Plate::AtA, false)]
        {
            let id = format!("pressure-parallel-{name}-{plate_name}");
            let outcome = pressure_parallel(bc, 3, 1.0, 0.19, plate).map(|(b, _)| {
                let expect = match bc {
                    BoundaryMode::DirichletNeumann => reference::parallel_dn_pressure(1.0, at_zero),
                    _ => reference::parallel_dd_pressure(1.0, at_zero),
                };
                (b.vector[0], expect)
            });
            reg.push_value(4, &id, ErrorKind::Relative, 1e-10, outcome);

            let id = format!("pressure-parallel-{name}-{plate_name}-prescriptions");
            let outcome =
                pressure_parallel(bc, 3, 1.0, 0.19, plate).map(|(b, i)| (i.vector[0], b.vector[0]));
            reg.push_value(4, &id, ErrorKind::Relative, 1e-10, outcome);
        }
    }
}

// --- criterion 5: massive half-space ---

fn criterion_5_halfspace(reg: &mut Registry) {
    let outcome = stress_halfspace_massive(FaceBc::Dirichlet, 1.0, 1.0, 0.17, 1.0).map(|s| {
        (
            s.total().get(1, 1),
            -(4.0 * 0.5f64.ln() - 3.0) / (128.0 * PI * PI),
        )
    });
    reg.push_value(
        5,
        "halfspace-t11-log-formula",
        ErrorKind::Relative,
        1e-9,
        outcome,
    );

    for face in [FaceBc::Dirichlet, FaceBc::Neumann] {
        for &x1 in &[0.5, 1.0, 2.0] {
            for &xi in &[1.0 / 6.0, 0.25] {
                let id = format!(
                    "halfspace-tensor-{}-x{x1}-xi{xi:.4}",
                    if face == FaceBc::Dirichlet { "d" } else { "n" }
                );
                let outcome = stress_halfspace_massive(face, 1.0, 1.0, xi, x1).and_then(|split| {
                    let engine = split.total();
                    let reference = reference::halfspace_tensor(face.sign(), 1.0, 1.0, xi, x1)?;
                    Ok((tensor_rel_err(&engine, &reference), 0.0))
                });
                reg.push_value(5, &id, ErrorKind::Absolute, 1e-9, outcome);
            }
        }
    }
}

// --- criterion 6: massive rectangular wedge ---

fn criterion_6_rectwedge(reg: &mut Registry) {
    let signs = [
        (FaceBc::Dirichlet, FaceBc::Dirichlet),
        (FaceBc::Dirichlet, FaceBc::Neumann),
        (FaceBc::Neumann, FaceBc::Dirichlet),
        (FaceBc::Neumann, FaceBc::Neumann),
    ];
    for (f1, f2) in signs {
        for &(x1, x2) in &[(1.0, 1.0), (0.5, 1.5)] {
            let id = format!(
                "rectwedge-tensor-{}{}-x{x1}-{x2}",
                if f1 == FaceBc::Dirichlet { "d" } else { "n" },
                if f2 == FaceBc::Dirichlet { "d" } else { "n" }
            );
            let xi = 0.23;
            let outcome =
                stress_rectwedge_massive(f1, f2, 1.0, 1.0, xi, x1, x2).and_then(|split| {
                    let reference =
                        reference::rectwedge_tensor(f1.sign(), f2.sign(), 1.0, 1.0, xi, x1, x2)?;
                    Ok((tensor_rel_err(&split.total(), &reference), 0.0))
                });
            reg.push_value(6, &id, ErrorKind::Absolute, 1e-9, outcome);
        }

        let id = format!(
            "rectwedge-pressure-{}{}",
            if f1 == FaceBc::Dirichlet { "d" } else { "n" },
            if f2 == FaceBc::Dirichlet { "d" } else { "n" }
        );
        let xi = 1.0 / 6.0;
        let outcome = pressure_rectwedge(f1, f2, 1.0, 1.0, xi, 1.0).and_then(|(b, _)| {
            let expect = reference::rectwedge_pressure(f1.sign(), f2.sign(), 1.0, 1.0, xi, 1.0)?;
            Ok((b.vector[0], expect))
        });
        reg.push_value(6, &id, ErrorKind::Relative, 1e-9, outcome);
    }

    // xi-dependent pressure on a Neumann first face
    let xi = 0.25;
    let outcome = pressure_rectwedge(FaceBc::Neumann, FaceBc::Dirichlet, 1.0, 1.0, xi, 1.0)
        .and_then(|(b, _)| {
            let expect = reference::rectwedge_pressure(1.0, -1.0, 1.0, 1.0, xi, 1.0)?;
            Ok((b.vector[0], expect))
        });
    reg.push_value(
        6,
        "rectwedge-pressure-nd-xi0.25",
        ErrorKind::Relative,
        1e-9,
        outcome,
    );

    let outcome =
        pressure_rectwedge(FaceBc::Dirichlet, FaceBc::Neumann, 1.0, 1.0, 0.2, 1.2).map(|(b, i)| {
            let scale = b.vector[0].abs().max(1e-300);
            ((b.vector[0] - i.vector[0]).abs() / scale, 0.0)
        });
    reg.push_value(
        6,
        "rectwedge-prescription-agreement",
        ErrorKind::Absolute,
        1e-5,
        outcome,
    );

    let outcome =
        match pressure_rectwedge(FaceBc::Dirichlet, FaceBc::Dirichlet, 1.0, 1.0, 0.1, 1e-9) {
            Err(Error::CornerPoint(_, _)) => Ok((1.0, 1.0)),
            Err(e) => Err(e),
            Ok(_) => Ok((0.0, 1.0)),
        };
    reg.push_value(
        6,
        "rectwedge-corner-rejected",
        ErrorKind::Flag,
        0.0,
        outcome,
    );
}

// --- criterion 7: zero-mass limits ---

fn criterion_7_zero_mass(reg: &mut Registry) {
    let m = 1e-3;
    let xi = 0.25;
    for face in [FaceBc::Dirichlet, FaceBc::Neumann] {
        let id = format!(
            "zero-mass-halfspace-{}",
            if face == FaceBc::Dirichlet { "d" } else { "n" }
        );
        let outcome = stress_halfspace_massive(face, m, 1.0, xi, 1.0).map(|split| {
            let reference = reference::halfspace_massless_tensor(face.sign(), xi, 1.0);
            (tensor_abs_err(&split.total(), &reference), 0.0)
        });
        reg.push_value(7, &id, ErrorKind::Absolute, 1e-5, outcome);
    }

    let outcome =
        stress_rectwedge_massive(FaceBc::Dirichlet, FaceBc::Neumann, m, 1.0, xi, 1.0, 1.0).map(
            |split| {
                let reference = reference::rectwedge_massless_tensor(-1.0, 1.0, xi, 1.0, 1.0);
                (tensor_abs_err(&split.total(), &reference), 0.0)
            },
        );
    reg.push_value(
        7,
        "zero-mass-rectwedge-dn",
        ErrorKind::Absolute,
        1e-5,
        outcome,
    );

    let outcome = pressure_halfspace(FaceBc::Dirichlet, m, 1.0, xi)
        .map(|(b, _)| (b.vector[0].abs().max(b.vector[1].abs()), 0.0));
    reg.push_value(
        7,
        "zero-mass-halfspace-pressure",
        ErrorKind::Absolute,
        1e-5,
        outcome,
    );

    for (name, f1, f2) in [
        ("dd", FaceBc::Dirichlet, FaceBc::Dirichlet),
        ("nd", FaceBc::Neumann, FaceBc::Dirichlet),
    ] {
        let id = format!("zero-mass-rectwedge-pressure-{name}");
        let outcome = pressure_rectwedge(f1, f2, m, 1.0, xi, 1.0).map(|(b, _)| {
            let expect = reference::rectwedge_massless_pressure(f1.sign(), f2.sign(), xi, 1.0);
            (b.vector[0], expect)
        });
        reg.push_value(7, &id, ErrorKind::Absolute, 1e-5, outcome);
    }
}

// --- criterion 8: wedge stress tensors ---

fn criterion_8_wedge_tensors(reg: &mut Registry) {
    let points = [(PI / 3.0, 1.0, PI / 6.0), (1.5 * PI, 0.7, 1.0)];
    for (idx, &(alpha, rho, theta)) in points.iter().enumerate() {
        for &xi in &[0.0, 0.25] {
            for (name, mode) in [
                ("dirichlet", BoundaryMode::DirichletDirichlet),
                ("dn", BoundaryMode::DirichletNeumann),
                ("neumann", BoundaryMode::NeumannNeumann),
            ] {
                let id = format!("wedge-tensor-{name}-p{idx}-xi{xi:.2}");
                let outcome = WedgeGeometry::interior(alpha, rho, theta)
                    .and_then(|geom| stress_wedge(mode, &geom, xi))
                    .map(|split| {
                        let reference = match mode {
                            BoundaryMode::DirichletDirichlet => {
                                reference::wedge_dirichlet_tensor(alpha, rho, theta, xi)
                            }
                            BoundaryMode::DirichletNeumann => {
                                reference::wedge_dn_tensor(alpha, rho, theta, xi)
                            }
                            _ => reference::wedge_neumann_tensor(alpha, rho, theta, xi),
                        };
                        (tensor_rel_err(&split.total(), &reference), 0.0)
                    });
                reg.push_value(8, &id, ErrorKind::Absolute, 1e-8, outcome);
            }
        }
    }

    // conformal part of the Neumann wedge equals the Dirichlet one
    let geom = WedgeGeometry::interior(1.9, 1.1, 0.8);
    let outcome = geom.and_then(|geom| {
        let nn = stress_wedge(BoundaryMode::NeumannNeumann, &geom, 0.2)?;
        let dd = stress_wedge(BoundaryMode::DirichletDirichlet, &geom, 0.2)?;
        Ok((tensor_rel_err(&nn.conformal, &dd.conformal), 0.0))
    });
    reg.push_value(
        8,
        "wedge-conformal-nn-equals-dd",
        ErrorKind::Absolute,
        1e-10,
        outcome,
    );
}

// --- criterion 9: wedge pressures ---

fn criterion_9_wedge_pressures(reg: &mut Registry) {
    let alpha = 1.2;
    for &rho in &[0.5, 1.0, 2.0] {
        let outcome = pressure_wedge(BoundaryMode::DirichletDirichlet, alpha, rho, 0.09)
            .map(|(b, _)| (b.vector[1], reference::wedge_pressure_dirichlet(alpha, rho)));
        reg.push_value(
            9,
            &format!("wedge-pressure-dirichlet-rho{rho}"),
            ErrorKind::Relative,
            1e-8,
            outcome,
        );

        let xi = 0.21;
        let outcome = pressure_wedge(BoundaryMode::DirichletNeumann, alpha, rho, xi)
            .map(|(b, _)| (b.vector[1], reference::wedge_pressure_dn(alpha, rho, xi)));
        reg.push_value(
            9,
            &format!("wedge-pressure-dn-rho{rho}"),
            ErrorKind::Relative,
            1e-8,
            outcome,
        );

        let outcome = pressure_wedge(BoundaryMode::NeumannNeumann, alpha, rho, xi).map(|(b, _)| {
            (
                b.vector[1],
                reference::wedge_pressure_neumann(alpha, rho, xi),
            )
        });
        reg.push_value(
            9,
            &format!("wedge-pressure-neumann-rho{rho}"),
            ErrorKind::Relative,
            1e-8,
            outcome,
        );
    }

    // interior-limit prescription: divergent, with exponent <= -2
    for (name, mode) in [
        ("dirichlet", BoundaryMode::DirichletDirichlet),
        ("dn", BoundaryMode::DirichletNeumann),
        ("neumann", BoundaryMode::NeumannNeumann),
    ] {
        let id = format!("wedge-pressure-{name}-interior-divergent");
        let outcome = pressure_wedge(mode, alpha, 1.0, 0.0).map(|(_, i)| {
            let diverges_steeply =
                !i.finite && i.divergence_exponent.map(|s| s <= -2.0).unwrap_or(false);
            (if diverges_steeply { 1.0 } else { 0.0 }, 1.0)
        });
        reg.push_value(9, &id, ErrorKind::Flag, 0.0, outcome);
    }
}

// --- criterion 10: cross-configuration consistency ---

fn criterion_10_cross_configuration(reg: &mut Registry) {
    let xi = 0.25;
    // wedge at alpha = pi against the massless half-space forms
    for (name, mode, alpha1) in [
        ("dirichlet", BoundaryMode::DirichletDirichlet, -1.0),
        ("neumann", BoundaryMode::NeumannNeumann, 1.0),
    ] {
        let id = format!("cross-halfplane-{name}");
        let theta = 0.3 * PI;
        let rho = 1.1;
        let outcome = WedgeGeometry::interior(PI, rho, theta)
            .and_then(|geom| stress_wedge(mode, &geom, xi))
            .and_then(|split| {
                let cart = frame_transform(&split.total(), Frame::Cartesian)?;
                // distance from the plane: x1 = rho sin(theta)
                let reference = reference::halfspace_massless_tensor(alpha1, xi, rho * theta.sin());
                Ok((tensor_rel_err(&cart, &reference), 0.0))
            });
        reg.push_value(10, &id, ErrorKind::Absolute, 1e-8, outcome);
    }

    // wedge at alpha = pi/2 against the massless rectangular-wedge forms;
    // with x1 = rho sin(theta) the face theta = 0 is the face x1 = 0, so
    // the Dirichlet side of the DN wedge carries alpha1.
    for (name, mode, a1, a2) in [
        ("dd", BoundaryMode::DirichletDirichlet, -1.0, -1.0),
        ("nn", BoundaryMode::NeumannNeumann, 1.0, 1.0),
        ("dn", BoundaryMode::DirichletNeumann, -1.0, 1.0),
    ] {
        let id = format!("cross-rectwedge-{name}");
        let theta: f64 = 0.22 * PI;
        let rho: f64 = 0.9;
        let outcome = WedgeGeometry::interior(PI / 2.0, rho, theta)
            .and_then(|geom| stress_wedge(mode, &geom, xi))
            .and_then(|split| {
                let cart = frame_transform(&split.total(), Frame::Cartesian)?;
                let (x1, x2) = (rho * theta.sin(), rho * theta.cos());
                let reference = reference::rectwedge_massless_tensor(a1, a2, xi, x1, x2);
                Ok((tensor_rel_err(&cart, &reference), 0.0))
            });
        reg.push_value(10, &id, ErrorKind::Absolute, 1e-8, outcome);
    }
}

// --- criterion 11: cosmic string ---

fn criterion_11_cosmic_string(reg: &mut Registry) {
    let outcome = WedgeGeometry::interior(2.0 * PI, 1.0, 1.3)
        .and_then(|geom| stress_wedge(BoundaryMode::Periodic, &geom, 0.23))
        .map(|split| (split.total().max_abs(), 0.0));
    reg.push_value(
        11,
        "string-full-angle-vanishes",
        ErrorKind::Absolute,
        1e-10,
        outcome,
    );

    for &alpha in &[PI / 2.0, PI, 1.5 * PI] {
        for &xi in &[0.0, 0.25] {
            let id = format!("string-tensor-alpha{alpha:.3}-xi{xi:.2}");
            let (rho, theta) = (0.8, 0.4 * alpha);
            let outcome = WedgeGeometry::interior(alpha, rho, theta)
                .and_then(|geom| stress_wedge(BoundaryMode::Periodic, &geom, xi))
                .map(|split| {
                    let reference = reference::string_tensor(alpha, rho, theta, xi);
                    (tensor_rel_err(&split.total(), &reference), 0.0)
                });
            reg.push_value(11, &id, ErrorKind::Absolute, 1e-9, outcome);
        }
    }
}

// --- criterion 12: residue engine against the contour oracle ---

fn criterion_12_oracle_equivalence(reg: &mut Registry) {
    let params = HankelParams::default();
    let s = Complex64::new(-1.5, 0.0);

    for (name, bc, x1) in [
        ("dd", BoundaryMode::DirichletDirichlet, 0.3),
        ("periodic", BoundaryMode::Periodic, 0.45),
    ] {
        let id = format!("oracle-hankel-{name}");
        let outcome = crate::observables::reduced_diag_series(bc, 1.0, x1).and_then(|series| {
            // D_(-3/2) = -Gamma(4) Res(t^-4 T) from the series route
            let residue_route = -6.0 * residue_weighted_checked(&series, 4)?;
            let kernel = move |t: Complex64| reduced_kernel_numeric(bc, 1.0, x1, x1, t);
            let quad_route = hankel_quadrature(&kernel, s, &params);
            Ok((residue_route, quad_route))
        });
        reg.push_value(12, &id, ErrorKind::Relative, 1e-6, outcome);
    }

    let outcome = (|| {
        let kernel = |t: Complex64| reduced_trace_numeric(BoundaryMode::DirichletDirichlet, 1.0, t);
        let v = hankel_quadrature_converged(&kernel, s, &params, 1e-8)?;
        let fine = hankel_quadrature(
            &kernel,
            s,
            &HankelParams {
                n_circle: params.n_circle * 2,
                n_panels: params.n_panels * 2,
                ..params
            },
        );
        Ok(((v - fine).abs() / fine.abs().max(1e-300), 0.0))
    })();
    reg.push_value(
        12,
        "oracle-self-convergence",
        ErrorKind::Absolute,
        1e-8,
        outcome,
    );
}

// --- criterion 13: property suites ---

fn criterion_13_property_suites(reg: &mut Registry) {
    // tracelessness at the critical coupling for the massless families
    // (the mass term contributes a genuine trace for the massive ones,
    // which instead approach tracelessness in the zero-mass limit)
    let outcome = (|| {
        let mut worst = 0.0f64;
        for bc in [
            BoundaryMode::DirichletDirichlet,
            BoundaryMode::DirichletNeumann,
            BoundaryMode::Periodic,
        ] {
            let t = stress_parallel(bc, 3, 1.0, xi_critical(3), 0.3)?.total();
            worst = worst.max(t.metric_trace().abs() / t.max_abs().max(1e-300));
        }
        for mode in [
            BoundaryMode::DirichletDirichlet,
            BoundaryMode::DirichletNeumann,
            BoundaryMode::NeumannNeumann,
            BoundaryMode::Periodic,
        ] {
            let geom = WedgeGeometry::interior(1.3, 0.9, 0.55)?;
            let t = stress_wedge(mode, &geom, xi_critical(3))?.total();
            worst = worst.max(t.metric_trace().abs() / t.max_abs().max(1e-300));
        }
        Ok((worst, 0.0))
    })();
    reg.push_value(
        13,
        "property-tracelessness",
        ErrorKind::Absolute,
        1e-10,
        outcome,
    );

    // zero-mass limit of the massive trace
    let outcome = (|| {
        let t =
            stress_halfspace_massive(FaceBc::Dirichlet, 1e-3, 1.0, xi_critical(3), 1.0)?.total();
        Ok((t.metric_trace().abs(), 0.0))
    })();
    reg.push_value(
        13,
        "property-trace-zero-mass-limit",
        ErrorKind::Absolute,
        1e-5,
        outcome,
    );

    // affinity in the coupling
    let outcome = (|| {
        let geom = WedgeGeometry::interior(2.1, 1.0, 0.9)?;
        let t0 = stress_wedge(BoundaryMode::DirichletDirichlet, &geom, 0.0)?.total();
        let t1 = stress_wedge(BoundaryMode::DirichletDirichlet, &geom, 1.0 / 6.0)?.total();
        let t2 = stress_wedge(BoundaryMode::DirichletDirichlet, &geom, 0.25)?.total();
        // affine: t2 = t0 + (0.25/ (1/6)) (t1 - t0)
        let predicted = t0.add(&t1.sub(&t0).scaled(0.25 / (1.0 / 6.0)));
        let scale = t2.max_abs().max(1e-300);
        Ok((predicted.sub(&t2).max_abs() / scale, 0.0))
    })();
    reg.push_value(
        13,
        "property-xi-affinity",
        ErrorKind::Absolute,
        1e-11,
        outcome,
    );

    // scaling in the macroscopic length
    let outcome = (|| {
        let s2 = stress_parallel(BoundaryMode::DirichletNeumann, 3, 2.0, 0.1, 0.8)?.total();
        let s1 = stress_parallel(BoundaryMode::DirichletNeumann, 3, 1.0, 0.1, 0.4)?.total();
        let mut worst = (s2.get(0, 0) - s1.get(0, 0) / 16.0).abs() / s2.max_abs();
        let g1 = WedgeGeometry::interior(1.9, 1.0, 0.7)?;
        let g2 = WedgeGeometry::interior(1.9, 2.0, 0.7)?;
        let w1 = stress_wedge(BoundaryMode::DirichletDirichlet, &g1, 0.1)?.total();
        let w2 = stress_wedge(BoundaryMode::DirichletDirichlet, &g2, 0.1)?.total();
        worst = worst.max((w2.get(0, 0) - w1.get(0, 0) / 16.0).abs() / w2.max_abs());
        worst = worst.max((w2.get(1, 2) - w1.get(1, 2) / 8.0).abs() / w2.max_abs());
        let (pb1, _) = pressure_wedge(BoundaryMode::DirichletDirichlet, 1.9, 1.0, 0.1)?;
        let (pb2, _) = pressure_wedge(BoundaryMode::DirichletDirichlet, 1.9, 2.0, 0.1)?;
        worst = worst
            .max((pb2.vector[1] - pb1.vector[1] / 8.0).abs() / pb1.vector[1].abs().max(1e-300));
        Ok((worst, 0.0))
    })();
    reg.push_value(13, "property-scaling", ErrorKind::Absolute, 1e-10, outcome);

    // covariant conservation of the wedge tensor by finite differences
    let outcome = (|| {
        let (alpha, xi) = (1.2, 0.05);
        let (rho, theta) = (1.0, 0.5);
        let h = 1e-4;
        let at = |r: f64, th: f64| -> Result<StressTensor, Error> {
            let geom = WedgeGeometry::interior(alpha, r, th)?;
            Ok(stress_wedge(BoundaryMode::DirichletDirichlet, &geom, xi)?.total())
        };
        let t0 = at(rho, theta)?;
        let tr_p = at(rho + h, theta)?;
        let tr_m = at(rho - h, theta)?;
        let tt_p = at(rho, theta + h)?;
        let tt_m = at(rho, theta - h)?;
        let d_rho = |i: usize, j: usize| (tr_p.get(i, j) - tr_m.get(i, j)) / (2.0 * h);
        let d_theta = |i: usize, j: usize| (tt_p.get(i, j) - tt_m.get(i, j)) / (2.0 * h);
        // rho component of the covariant divergence
        let div_rho = d_rho(1, 1) + d_theta(2, 1) / (rho * rho) + t0.get(1, 1) / rho
            - t0.get(2, 2) / rho.powi(3);
        let scale = t0.get(1, 1).abs() / rho; // typical gradient magnitude
        Ok((div_rho.abs() / scale, 0.0))
    })();
    reg.push_value(
        13,
        "property-conservation",
        ErrorKind::Absolute,
        1e-5,
        outcome,
    );

    // Bessel recurrence across the evaluation branches
    let outcome = (|| {
        let mut worst = 0.0f64;
        for &x in &[0.3, 1.0, 5.0, 10.0, 20.0] {
            for nu in 1..=2u32 {
                let lhs = x * bessel_k(nu + 1, x)? - x * bessel_k(nu - 1, x)?;
                let rhs = 2.0 * nu as f64 * bessel_k(nu, x)?;
                worst = worst.max((lhs - rhs).abs() / rhs.abs());
            }
        }
        Ok((worst, 0.0))
    })();
    reg.push_value(
        13,
        "property-bessel-recurrence",
        ErrorKind::Absolute,
        1e-12,
        outcome,
    );

    // jet derivatives against finite differences of the numeric kernel;
    // the summation point t = 0.6 needs a window wide enough to converge
    // inside the expansion disc of radius 2 min(x1, a - x1) = 1
    let outcome = (|| {
        let jet =
            crate::kernels::reduced_cylinder_jet(BoundaryMode::DirichletNeumann, 1.0, 0.5, 40)?;
        let t = 0.6;
        let engine = jet.partial_pair(0, 1).eval(t);
        let f = |dx: f64, dy: f64| {
            reduced_kernel_numeric(
                BoundaryMode::DirichletNeumann,
                1.0,
                0.5 + dx,
                0.5 + dy,
                Complex64::new(t, 0.0),
            )
            .re
        };
        let fd = crate::jet::central_mixed_second(f, 0.0, 0.0, 1e-4);
        Ok((engine, fd))
    })();
    reg.push_value(
        13,
        "property-jet-vs-finite-difference",
        ErrorKind::Relative,
        1e-6,
        outcome,
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_restricts_checks() {
        let all = run_all(Some("energy-"), None);
        assert!(!all.is_empty());
        assert!(all.iter().all(|c| c.id.contains("energy-")));
    }

    #[test]
    fn tolerance_override_applies() {
        let strict = run_all(Some("energy-dd"), Some(1e-30));
        assert!(strict.iter().all(|c| !c.pass));
    }
}
