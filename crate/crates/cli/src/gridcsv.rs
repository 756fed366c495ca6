//! Grid sweeps as CSV, and the reader that re-verifies a sweep. Rows are
//! self-describing (configuration columns precede the components), so a
//! grid file can be fed back through `verify --csv`.

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;

use crate::args::{BcArg, ConfigArgs, ConfigKind, GridArgs, Range};
use crate::output::{csv_cell, frame_label};
use crate::{bc_name, evaluate, formula_id, EvalPoint};
use casimir_core::StressTensor;

pub const HEADER: &str = "config,bc,d,a,alpha,alpha1,alpha2,m,kappa,xi,xi_d,frame,x1,x2,rho,theta,\
t00,t11,t22,t33,t12,c00,c11,c22,c33,c12,n00,n11,n22,n33,n12,paper_eq";

fn config_name(kind: ConfigKind) -> &'static str {
    match kind {
        ConfigKind::Parallel => "parallel",
        ConfigKind::Halfspace => "halfspace",
        ConfigKind::Rectwedge => "rectwedge",
        ConfigKind::Wedge => "wedge",
        ConfigKind::String => "string",
    }
}

/// Independent components in row order; off-diagonal slot is the
/// (1,2)-block (x1-x2 or rho-theta depending on the frame).
fn components(t: &StressTensor) -> [f64; 5] {
    [
        t.get(0, 0),
        t.get(1, 1),
        t.get(2, 2),
        t.get(3, 3),
        t.get(1, 2),
    ]
}

fn points_for(cfg: &ConfigArgs, args: &GridArgs) -> Result<Vec<EvalPoint>> {
    let need = |r: &Option<Range>, name: &str| {
        r.ok_or_else(|| anyhow!("--{name} is required for this configuration"))
    };
    let pts = match cfg.config {
        ConfigKind::Parallel | ConfigKind::Halfspace => need(&args.x1_grid, "x1-grid")?
            .points()
            .into_iter()
            .map(|x1| EvalPoint {
                x1: Some(x1),
                x2: None,
                rho: None,
                theta: None,
            })
            .collect(),
        ConfigKind::Rectwedge => {
            let xs = need(&args.x1_grid, "x1-grid")?.points();
            let ys = need(&args.x2_grid, "x2-grid")?.points();
            xs.iter()
                .flat_map(|&x1| {
                    ys.iter().map(move |&x2| EvalPoint {
                        x1: Some(x1),
                        x2: Some(x2),
                        rho: None,
                        theta: None,
                    })
                })
                .collect()
        }
        ConfigKind::Wedge | ConfigKind::String => {
            let rs = need(&args.rho_grid, "rho-grid")?.points();
            let ts = need(&args.theta_grid, "theta-grid")?.points();
            rs.iter()
                .flat_map(|&rho| {
                    ts.iter().map(move |&theta| EvalPoint {
                        x1: None,
                        x2: None,
                        rho: Some(rho),
                        theta: Some(theta),
                    })
                })
                .collect()
        }
    };
    Ok(pts)
}

fn row(cfg: &ConfigArgs, point: &EvalPoint) -> Result<String> {
    let split = evaluate(cfg, point)?;
    let total = split.total();
    if !total.is_symmetric() {
        bail!("internal error: produced tensor is not symmetric");
    }
    let t = components(&total);
    let c = components(&split.conformal);
    let n = components(&split.nonconformal);
    let mut cells: Vec<String> = vec![
        config_name(cfg.config).to_string(),
        bc_name(cfg.bc).to_string(),
        cfg.d.to_string(),
        csv_cell(Some(cfg.a)),
        csv_cell(Some(cfg.alpha)),
        cfg.alpha1.to_string(),
        cfg.alpha2.to_string(),
        csv_cell(Some(cfg.m)),
        csv_cell(Some(cfg.kappa)),
        csv_cell(Some(split.xi)),
        csv_cell(Some(split.xi_d)),
        frame_label(&total.frame).to_string(),
        csv_cell(point.x1),
        csv_cell(point.x2),
        csv_cell(point.rho),
        csv_cell(point.theta),
    ];
    cells.extend(t.iter().map(|&v| csv_cell(Some(v))));
    cells.extend(c.iter().map(|&v| csv_cell(Some(v))));
    cells.extend(n.iter().map(|&v| csv_cell(Some(v))));
    cells.push(formula_id(cfg));
    Ok(cells.join(","))
}

pub fn grid(args: GridArgs) -> Result<()> {
    let points = points_for(&args.config, &args)?;
    // deterministic ordering: points are indexed before the parallel map
    let rows: Vec<Result<String>> = points.par_iter().map(|p| row(&args.config, p)).collect();
    println!("{HEADER}");
    for r in rows {
        println!("{}", r?);
    }
    Ok(())
}

/// Re-verifies a grid CSV: every row is recomputed from its
/// configuration columns and compared at the given relative tolerance;
/// the split identity `total = conformal + (xi - xi_d) nonconformal` is
/// checked as well.
pub fn verify_csv(path: &std::path::Path, tol: f64) -> Result<()> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| anyhow!("empty file"))?;
    if header.trim() != HEADER {
        bail!("unrecognized header row");
    }
    let mut checked = 0usize;
    let mut failed = 0usize;
    for (lineno, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != HEADER.split(',').count() {
            bail!("line {}: wrong column count", lineno + 2);
        }
        let get_f = |idx: usize| -> Result<f64> {
            cells[idx]
                .parse::<f64>()
                .map_err(|e| anyhow!("line {}: column {}: {}", lineno + 2, idx, e))
        };
        let opt_f = |idx: usize| -> Option<f64> { cells[idx].parse::<f64>().ok() };
        let bc = match cells[1] {
            "dd" => BcArg::Dd,
            "dn" => BcArg::Dn,
            "nn" => BcArg::Nn,
            "periodic" => BcArg::Periodic,
            other => bail!("line {}: unknown bc '{other}'", lineno + 2),
        };
        let kind = match cells[0] {
            "parallel" => ConfigKind::Parallel,
            "halfspace" => ConfigKind::Halfspace,
            "rectwedge" => ConfigKind::Rectwedge,
            "wedge" => ConfigKind::Wedge,
            "string" => ConfigKind::String,
            other => bail!("line {}: unknown config '{other}'", lineno + 2),
        };
        let cfg = ConfigArgs {
            config: kind,
            bc,
            d: cells[2].parse().context("d column")?,
            a: get_f(3)?,
            alpha: get_f(4)?,
            alpha1: cells[5].parse().context("alpha1 column")?,
            alpha2: cells[6].parse().context("alpha2 column")?,
            m: get_f(7)?,
            kappa: get_f(8)?,
            xi: get_f(9)?,
        };
        let point = EvalPoint {
            x1: opt_f(12),
            x2: opt_f(13),
            rho: opt_f(14),
            theta: opt_f(15),
        };
        let split = evaluate(&cfg, &point)?;
        let total = split.total();
        let expect_total = components(&total);
        let expect_conf = components(&split.conformal);
        let expect_nc = components(&split.nonconformal);
        let scale = expect_total
            .iter()
            .chain(&expect_conf)
            .chain(&expect_nc)
            .fold(0.0f64, |m, v| m.max(v.abs()))
            .max(1e-300);

        let mut row_ok = true;
        for (block, expect) in [(16, expect_total), (21, expect_conf), (26, expect_nc)] {
            for (k, &e) in expect.iter().enumerate() {
                let v = get_f(block + k)?;
                if (v - e).abs() > tol * scale {
                    row_ok = false;
                }
            }
        }
        // split identity on the stored numbers themselves
        let xi = get_f(9)?;
        let xi_d = get_f(10)?;
        for k in 0..5 {
            let t = get_f(16 + k)?;
            let c = get_f(21 + k)?;
            let n = get_f(26 + k)?;
            if (t - (c + (xi - xi_d) * n)).abs() > tol * scale {
                row_ok = false;
            }
        }
        checked += 1;
        if !row_ok {
            failed += 1;
            println!("[FAIL] line {}", lineno + 2);
        }
    }
    println!("{checked} rows checked, {failed} failed");
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}
