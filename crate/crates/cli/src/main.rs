mod args;
mod gridcsv;
mod output;

use anyhow::{anyhow, bail, Result};
use clap::Parser;
use num_complex::Complex64;

use args::{BcArg, Cli, Command, ConfigArgs, ConfigKind, EvalArgs, OracleArgs, PlateArg};
use casimir_core::continuation::{hankel_quadrature, residue_weighted_checked, HankelParams};
use casimir_core::kernels::{reduced_kernel_numeric, reduced_trace_numeric};
use casimir_core::observables::reduced_diag_series;
use casimir_core::{
    pressure_halfspace, pressure_parallel, pressure_rectwedge, pressure_wedge,
    reduced_energy_parallel, stress_halfspace_massive, stress_parallel, stress_rectwedge_massive,
    stress_wedge, ConformalSplit, FaceBc, Plate, PressureResult, WedgeGeometry,
};
use output::{frame_label, metric_label, tensor_json, Json};

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            let obj = Json::Obj(vec![(
                "error",
                Json::Obj(vec![("message", Json::Str(format!("{e:#}")))]),
            )]);
            println!("{}", obj.render());
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Eval(args) => eval(args),
        Command::Grid(args) => gridcsv::grid(args),
        Command::Energy(args) => energy(args),
        Command::Pressure(args) => pressure(args),
        Command::Verify(args) => verify(args),
        Command::Oracle(args) => oracle(args),
    }
}

fn face(sign: i8) -> Result<FaceBc> {
    FaceBc::from_sign(sign as f64).map_err(|e| anyhow!(e))
}

/// Stable identifier of the governing closed-form family, emitted under
/// the `paper_eq` key of every serialized result.
pub fn formula_id(cfg: &ConfigArgs) -> String {
    match cfg.config {
        ConfigKind::Parallel => format!("parallel-{}-d{}", bc_name(cfg.bc), cfg.d),
        ConfigKind::Halfspace => "halfspace-massive".into(),
        ConfigKind::Rectwedge => "rectwedge-massive".into(),
        ConfigKind::Wedge => format!("wedge-{}", bc_name(cfg.bc)),
        ConfigKind::String => "cosmic-string".into(),
    }
}

pub fn bc_name(bc: BcArg) -> &'static str {
    match bc {
        BcArg::Dd => "dd",
        BcArg::Dn => "dn",
        BcArg::Nn => "nn",
        BcArg::Periodic => "periodic",
    }
}

pub struct EvalPoint {
    pub x1: Option<f64>,
    pub x2: Option<f64>,
    pub rho: Option<f64>,
    pub theta: Option<f64>,
}

/// Library-level configuration descriptor for validation.
fn configuration(cfg: &ConfigArgs) -> Result<casimir_core::Configuration> {
    use casimir_core::Configuration as C;
    Ok(match cfg.config {
        ConfigKind::Parallel => C::ParallelPlanes {
            d: cfg.d,
            a: cfg.a,
            bc: cfg.bc.mode(),
        },
        ConfigKind::Halfspace => C::HalfSpaceMassive {
            face: face(cfg.alpha1)?,
            m: cfg.m,
            kappa: cfg.kappa,
        },
        ConfigKind::Rectwedge => C::RectWedgeMassive {
            face1: face(cfg.alpha1)?,
            face2: face(cfg.alpha2)?,
            m: cfg.m,
            kappa: cfg.kappa,
        },
        ConfigKind::Wedge => C::AngularWedge {
            mode: cfg.bc.mode(),
            alpha: cfg.alpha,
        },
        ConfigKind::String => C::CosmicString { alpha: cfg.alpha },
    })
}

pub fn evaluate(cfg: &ConfigArgs, point: &EvalPoint) -> Result<ConformalSplit> {
    configuration(cfg)?.validate()?;
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| anyhow!("--{name} is required for this configuration"))
    };
    let split = match cfg.config {
        ConfigKind::Parallel => {
            stress_parallel(cfg.bc.mode(), cfg.d, cfg.a, cfg.xi, need(point.x1, "x1")?)?
        }
        ConfigKind::Halfspace => stress_halfspace_massive(
            face(cfg.alpha1)?,
            cfg.m,
            cfg.kappa,
            cfg.xi,
            need(point.x1, "x1")?,
        )?,
        ConfigKind::Rectwedge => stress_rectwedge_massive(
            face(cfg.alpha1)?,
            face(cfg.alpha2)?,
            cfg.m,
            cfg.kappa,
            cfg.xi,
            need(point.x1, "x1")?,
            need(point.x2, "x2")?,
        )?,
        ConfigKind::Wedge | ConfigKind::String => {
            let geom = WedgeGeometry::interior(
                cfg.alpha,
                need(point.rho, "rho")?,
                need(point.theta, "theta")?,
            )?;
            let mode = if cfg.config == ConfigKind::String {
                casimir_core::BoundaryMode::Periodic
            } else {
                cfg.bc.mode()
            };
            stress_wedge(mode, &geom, cfg.xi)?
        }
    };
    Ok(split)
}

fn eval(args: EvalArgs) -> Result<()> {
    let point = EvalPoint {
        x1: args.x1,
        x2: args.x2,
        rho: args.rho,
        theta: args.theta,
    };
    let split = evaluate(&args.config, &point)?;
    let total = split.total();
    if !total.is_symmetric() {
        bail!("internal error: produced tensor is not symmetric");
    }
    let mut fields = vec![
        ("paper_eq", Json::Str(formula_id(&args.config))),
        ("frame", Json::Str(frame_label(&total.frame).into())),
        ("metric", Json::Str(metric_label(&total.frame).into())),
        ("xi", Json::Num(split.xi)),
        ("xi_d", Json::Num(split.xi_d)),
    ];
    let mut coords = Vec::new();
    for (k, v) in [
        ("x1", point.x1),
        ("x2", point.x2),
        ("rho", point.rho),
        ("theta", point.theta),
    ] {
        if let Some(v) = v {
            coords.push((k, Json::Num(v)));
        }
    }
    fields.push(("point", Json::Obj(coords)));
    fields.push(("conformal", tensor_json(&split.conformal)));
    fields.push(("nonconformal", tensor_json(&split.nonconformal)));
    fields.push(("total", tensor_json(&total)));
    println!("{}", Json::Obj(fields).render());
    Ok(())
}

fn energy(args: args::EnergyArgs) -> Result<()> {
    let e = reduced_energy_parallel(args.bc.mode(), args.d, args.a)?;
    let obj = Json::Obj(vec![
        (
            "paper_eq",
            Json::Str(format!("parallel-{}-reduced-energy", bc_name(args.bc))),
        ),
        ("d", Json::Num(args.d as f64)),
        ("a", Json::Num(args.a)),
        ("reduced_energy", Json::Num(e)),
    ]);
    println!("{}", obj.render());
    Ok(())
}

fn pressure_json(p: &PressureResult) -> Json {
    Json::Obj(vec![
        (
            "vector",
            Json::Arr(p.vector.iter().map(|&v| Json::Num(v)).collect()),
        ),
        ("finite", Json::Bool(p.finite)),
        (
            "divergence_exponent",
            p.divergence_exponent.map(Json::Num).unwrap_or(Json::Null),
        ),
    ])
}

fn pressure(args: args::PressureArgs) -> Result<()> {
    let cfg = &args.config;
    let (id, boundary, interior) = match cfg.config {
        ConfigKind::Parallel => {
            let (plate, name) = match args.plate {
                PlateArg::Pi0 => (Plate::AtZero, "pi0"),
                PlateArg::Pia => (Plate::AtA, "pia"),
            };
            let (b, i) = pressure_parallel(cfg.bc.mode(), cfg.d, cfg.a, cfg.xi, plate)?;
            (
                format!("parallel-{}-pressure-{name}", bc_name(cfg.bc)),
                b,
                i,
            )
        }
        ConfigKind::Halfspace => {
            let (b, i) = pressure_halfspace(face(cfg.alpha1)?, cfg.m, cfg.kappa, cfg.xi)?;
            ("halfspace-pressure".to_string(), b, i)
        }
        ConfigKind::Rectwedge => {
            let (b, i) = pressure_rectwedge(
                face(cfg.alpha1)?,
                face(cfg.alpha2)?,
                cfg.m,
                cfg.kappa,
                cfg.xi,
                args.x2,
            )?;
            ("rectwedge-pressure".to_string(), b, i)
        }
        ConfigKind::String => bail!("the cosmic string has no boundary"),
        ConfigKind::Wedge => {
            let (b, i) = pressure_wedge(cfg.bc.mode(), cfg.alpha, args.rho, cfg.xi)?;
            (format!("wedge-{}-face-pressure", bc_name(cfg.bc)), b, i)
        }
    };
    let agreement = boundary
        .vector
        .iter()
        .zip(interior.vector.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    let scale = boundary
        .vector
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(1e-300);
    let obj = Json::Obj(vec![
        ("paper_eq", Json::Str(id)),
        ("xi", Json::Num(cfg.xi)),
        ("boundary_first", pressure_json(&boundary)),
        ("interior_limit", pressure_json(&interior)),
        (
            "prescription_agreement_rel",
            if interior.finite {
                Json::Num(agreement / scale)
            } else {
                Json::Null
            },
        ),
    ]);
    println!("{}", obj.render());
    Ok(())
}

fn verify(args: args::VerifyArgs) -> Result<()> {
    if let Some(path) = &args.csv {
        return gridcsv::verify_csv(path, args.tolerance.unwrap_or(1e-9));
    }
    let results = casimir_core::verify::run_all(args.only.as_deref(), args.tolerance);
    if results.is_empty() {
        bail!("no checks match the filter");
    }
    let mut failed = 0usize;
    for r in &results {
        if !r.pass {
            failed += 1;
        }
        if !args.quiet {
            println!("{}", r.line());
        }
    }
    println!(
        "{} checks, {} passed, {} failed",
        results.len(),
        results.len() - failed,
        failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}

fn oracle(args: OracleArgs) -> Result<()> {
    let bc = args.kernel.mode();
    let series = if args.trace {
        casimir_core::kernels::reduced_cylinder_trace(
            bc,
            args.a,
            casimir_core::series::default_len(),
        )
    } else {
        reduced_diag_series(bc, args.a, args.x1)?
    };
    // At half-integer s = -n/2 the continuation is the residue value
    // (-1)^n n! Res(t^-(n+1) T; 0); elsewhere only the quadrature applies.
    let n = (-2.0 * args.s).round();
    let residue_route = if (2.0 * args.s + n).abs() < 1e-12 && n >= 0.0 {
        let n = n as i32;
        let fact: f64 = (1..=n).map(|k| k as f64).product();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        Some(sign * fact * residue_weighted_checked(&series, n + 1)?)
    } else {
        None
    };

    let params = HankelParams {
        r0: args.r0,
        t_max: args.t_max,
        n_circle: args.n_circle,
        n_panels: args.n_panels,
        ..HankelParams::default()
    };
    let s = Complex64::new(args.s, 0.0);
    let (a, x1, trace) = (args.a, args.x1, args.trace);
    let kernel = move |t: Complex64| {
        if trace {
            reduced_trace_numeric(bc, a, t)
        } else {
            reduced_kernel_numeric(bc, a, x1, x1, t)
        }
    };
    let coarse = hankel_quadrature(&kernel, s, &params);
    let fine = hankel_quadrature(
        &kernel,
        s,
        &HankelParams {
            n_circle: params.n_circle * 2,
            n_panels: params.n_panels * 2,
            ..params
        },
    );

    let obj = Json::Obj(vec![
        ("paper_eq", Json::Str("hankel-contour-oracle".into())),
        ("kernel", Json::Str(bc.as_str().into())),
        ("trace", Json::Bool(args.trace)),
        ("s", Json::Num(args.s)),
        ("quadrature", Json::Num(fine)),
        (
            "self_convergence",
            Json::Num((fine - coarse).abs() / fine.abs().max(1e-300)),
        ),
        (
            "residue_route",
            residue_route.map(Json::Num).unwrap_or(Json::Null),
        ),
        (
            "rel_difference",
            residue_route
                .map(|r| Json::Num((r - fine).abs() / fine.abs().max(1e-300)))
                .unwrap_or(Json::Null),
        ),
    ]);
    println!("{}", obj.render());
    Ok(())
}
