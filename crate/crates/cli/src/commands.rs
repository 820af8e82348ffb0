//! Implementations of the eight subcommands. All tabular output goes to
//! stdout: CSV with a header row and shortest round-trip floats, JSON with
//! a top-level `"schema": 1` field and stable key order.

use crate::classes::{parse_mode_string, ModeClass};
use crate::error::{usage, CliError};
use ads_spin1::dkp_algebra::{build_beta, build_massless_projector, verify_all, Matrix10};
use ads_spin1::maxwell_rs::build_photon_mode;
use ads_spin1::radial_modes::{
    build_j0_mode, build_j_wave, build_jminus_wave, build_jplus_wave,
};
use ads_spin1::special_functions::verify_recursions;
use ads_spin1::spectrum::{build_level_table, energy_massive, energy_massless_dkp};
use ads_spin1::verifier::{
    applicable_equations, default_grid, log_grid, max_applicable_residual, residual_system,
};
use ads_spin1::{tolerances, EquationId, RadialBundle, ResidualReport, WaveType};
use ads_spin1::five_dim::{
    conformal_to_embedding, embedding_to_conformal, embedding_to_static, random_static_points,
    static_to_embedding, EmbeddingPoint,
};
use serde::Serialize;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Failed(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

/// Parses `min,max,points` into a log-spaced grid; `None` gives the default.
pub fn parse_grid(arg: Option<&str>) -> Result<Vec<f64>, CliError> {
    let Some(raw) = arg else {
        return Ok(default_grid());
    };
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 3 {
        return Err(usage(format!("--grid expects min,max,points, got '{raw}'")));
    }
    let min: f64 = parts[0]
        .parse()
        .map_err(|_| usage(format!("--grid: bad min '{}'", parts[0])))?;
    let max: f64 = parts[1]
        .parse()
        .map_err(|_| usage(format!("--grid: bad max '{}'", parts[1])))?;
    let points: usize = parts[2]
        .parse()
        .map_err(|_| usage(format!("--grid: bad point count '{}'", parts[2])))?;
    if !(min > 0.0) {
        return Err(usage("--grid: min must be > 0"));
    }
    if max <= min {
        return Err(usage("--grid: max must exceed min"));
    }
    if points < 2 {
        return Err(usage("--grid: at least 2 points"));
    }
    Ok(log_grid(min, max, points))
}

/// Tolerance priority: --tol flag, then ADS_SPIN1_TOL, then the default.
pub fn effective_tol(flag: Option<f64>) -> Result<f64, CliError> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var("ADS_SPIN1_TOL") {
            Ok(raw) => raw
                .parse::<f64>()
                .map_err(|_| usage(format!("ADS_SPIN1_TOL is not a number: '{raw}'")))?,
            Err(_) => tolerances::DEFAULT_VERIFY,
        },
    };
    if !(tol > 0.0) {
        return Err(usage("tolerance must be > 0"));
    }
    Ok(tol)
}

pub fn check_rho(rho: f64) -> Result<(), CliError> {
    if rho > 0.0 {
        Ok(())
    } else {
        Err(usage("--curvature-radius must be > 0"))
    }
}

// ---------------------------------------------------------------- spectrum

#[derive(Serialize)]
struct SpectrumOut {
    schema: u32,
    mass_sq: f64,
    massless: bool,
    wave_type: &'static str,
    n: u32,
    j: u32,
    nu: u32,
    epsilon: f64,
}

pub fn spectrum(
    mass_sq: Option<f64>,
    massless: bool,
    wave_type: &str,
    n: u32,
    j: u32,
    format: OutputFormat,
    rho: f64,
) -> Result<(), CliError> {
    check_rho(rho)?;
    let wt = WaveType::from_str(wave_type).map_err(|e| usage(e.to_string()))?;
    let (mass, epsilon) = if massless {
        if wt != WaveType::J {
            return Err(usage("--massless covers the tensor family only (--type j)"));
        }
        (0.0, energy_massless_dkp(n, j).map_err(|e| usage(e.to_string()))?)
    } else {
        let m = mass_sq.ok_or_else(|| usage("spectrum requires --mass-sq or --massless"))?;
        (m, energy_massive(m, n, j, wt).map_err(|e| usage(e.to_string()))?)
    };
    let nu = wt.orbital_index(j).map_err(|e| usage(e.to_string()))?;
    let out = SpectrumOut {
        schema: 1,
        mass_sq: mass,
        massless,
        wave_type: wt.as_str(),
        n,
        j,
        nu,
        epsilon: epsilon / rho,
    };
    match format {
        OutputFormat::Csv => {
            println!("mass_sq,wave_type,n,j,nu,epsilon");
            println!(
                "{},{},{},{},{},{}",
                out.mass_sq, out.wave_type, out.n, out.j, out.nu, out.epsilon
            );
            Ok(())
        }
        OutputFormat::Json => print_json(&out),
    }
}

// ------------------------------------------------------------------- table

#[derive(Serialize)]
struct TableRowOut {
    #[serde(rename = "N")]
    level: u32,
    wave_type: &'static str,
    n: u32,
    j: u32,
    epsilon: f64,
}

#[derive(Serialize)]
struct TableOut {
    schema: u32,
    n_max: u32,
    mass_sq: f64,
    rows: Vec<TableRowOut>,
}

pub fn table(n_max: u32, mass_sq: f64, format: OutputFormat, rho: f64) -> Result<(), CliError> {
    check_rho(rho)?;
    let raw = build_level_table(n_max);
    let mut rows = Vec::with_capacity(raw.rows.len());
    for row in &raw.rows {
        let epsilon = row.epsilon(mass_sq).map_err(|e| usage(e.to_string()))?;
        rows.push(TableRowOut {
            level: row.level,
            wave_type: row.wave_type.as_str(),
            n: row.n,
            j: row.j,
            epsilon: epsilon / rho,
        });
    }
    let out = TableOut { schema: 1, n_max, mass_sq, rows };
    match format {
        OutputFormat::Csv => {
            println!("N,wave_type,n,j,epsilon");
            for r in &out.rows {
                println!("{},{},{},{},{}", r.level, r.wave_type, r.n, r.j, r.epsilon);
            }
            Ok(())
        }
        OutputFormat::Json => print_json(&out),
    }
}

// -------------------------------------------------------------------- mode

#[derive(Serialize)]
struct ModeOut {
    schema: u32,
    spec: ads_spin1::ModeSpec,
    formalism: &'static str,
    grid: Vec<f64>,
    components: serde_json::Value,
}

fn component_table(bundle: &RadialBundle, grid: &[f64]) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for label in bundle.nonzero_labels() {
        let f = bundle.component(label).expect("nonzero label resolves");
        let values: Vec<serde_json::Value> = grid
            .iter()
            .map(|&r| {
                let v = f.eval(r);
                serde_json::json!([v.re, v.im])
            })
            .collect();
        map.insert(label.to_string(), serde_json::Value::Array(values));
    }
    serde_json::Value::Object(map)
}

fn print_component_csv(bundle: &RadialBundle, grid: &[f64], rho: f64) {
    let labels = bundle.nonzero_labels();
    let mut header = String::from("r");
    for label in &labels {
        header.push_str(&format!(",{label}_re,{label}_im"));
    }
    println!("{header}");
    for &r in grid {
        let mut line = format!("{}", r * rho);
        for label in &labels {
            let v = bundle.component(label).expect("nonzero label resolves").eval(r);
            line.push_str(&format!(",{},{}", v.re, v.im));
        }
        println!("{line}");
    }
}

#[allow(clippy::too_many_arguments)]
pub fn mode(
    class: &str,
    mass_sq: Option<f64>,
    n: u32,
    j: Option<u32>,
    grid_arg: Option<&str>,
    format: OutputFormat,
    rho: f64,
) -> Result<(), CliError> {
    check_rho(rho)?;
    let class = ModeClass::parse(class)?;
    let j = match (class.needs_j(), j) {
        (true, Some(j)) => j,
        (true, None) => return Err(usage(format!("mode class {class:?} requires --j"))),
        (false, _) => 0,
    };
    let bundle = class.build(mass_sq, n, j)?;
    let grid = parse_grid(grid_arg)?;
    match format {
        OutputFormat::Csv => {
            print_component_csv(&bundle, &grid, rho);
            Ok(())
        }
        OutputFormat::Json => print_json(&ModeOut {
            schema: 1,
            spec: bundle.spec,
            formalism: bundle.formalism.as_str(),
            grid: grid.iter().map(|&r| r * rho).collect(),
            components: component_table(&bundle, &grid),
        }),
    }
}

// ------------------------------------------------------------------ photon

#[derive(Serialize)]
struct PhotonOut {
    schema: u32,
    n: u32,
    j: u32,
    m: i32,
    omega: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    a: f64,
    b: f64,
    grid: Vec<f64>,
    components: serde_json::Value,
}

pub fn photon(
    n: u32,
    j: u32,
    m: i32,
    grid_arg: Option<&str>,
    format: OutputFormat,
    rho: f64,
) -> Result<(), CliError> {
    check_rho(rho)?;
    let mode = build_photon_mode(n, j, m).map_err(|e| usage(e.to_string()))?;
    let grid = parse_grid(grid_arg)?;
    let out = PhotonOut {
        schema: 1,
        n,
        j,
        m,
        omega: mode.omega / rho,
        alpha: mode.hyp.alpha,
        beta: mode.hyp.beta,
        gamma: mode.hyp.gamma,
        a: mode.a,
        b: mode.b,
        grid: grid.iter().map(|&r| r * rho).collect(),
        components: component_table(mode.bundle(), &grid),
    };
    match format {
        OutputFormat::Csv => {
            let labels = ["G", "F", "f1", "f2", "f3"];
            let mut header = String::from("r,omega,alpha,beta,gamma,a,b");
            for label in labels {
                header.push_str(&format!(",{label}_re,{label}_im"));
            }
            println!("{header}");
            for &r in &grid {
                let mut line = format!(
                    "{},{},{},{},{},{},{}",
                    r * rho,
                    out.omega,
                    out.alpha,
                    out.beta,
                    out.gamma,
                    out.a,
                    out.b
                );
                for label in labels {
                    let v = mode.component(label).expect("photon component").eval(r);
                    line.push_str(&format!(",{},{}", v.re, v.im));
                }
                println!("{line}");
            }
            Ok(())
        }
        OutputFormat::Json => print_json(&out),
    }
}

// ------------------------------------------------------------------ verify

#[derive(Serialize)]
struct VerifyOut {
    schema: u32,
    mode: String,
    tol: f64,
    pass: bool,
    reports: Vec<ResidualReport>,
}

pub fn verify(
    mode_str: &str,
    equations: &str,
    grid_arg: Option<&str>,
    tol_flag: Option<f64>,
) -> Result<(), CliError> {
    let bundle = parse_mode_string(mode_str)?;
    let grid = parse_grid(grid_arg)?;
    let tol = effective_tol(tol_flag)?;
    let ids: Vec<EquationId> = if equations.eq_ignore_ascii_case("all") {
        applicable_equations(&bundle)
    } else {
        let mut ids = Vec::new();
        for raw in equations.split(',') {
            ids.push(
                EquationId::from_str(raw.trim())
                    .map_err(|e| usage(e.to_string()))?,
            );
        }
        ids
    };
    let mut reports = Vec::with_capacity(ids.len());
    for id in ids {
        reports.push(residual_system(&bundle, id, &grid).map_err(|e| usage(e.to_string()))?);
    }
    let pass = reports.iter().all(|r| r.passes(tol));
    let failed = reports.iter().filter(|r| !r.passes(tol)).count();
    print_json(&VerifyOut { schema: 1, mode: mode_str.to_string(), tol, pass, reports })?;
    if pass {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "verification failed: {failed} equation(s) above tolerance {tol:e}"
        )))
    }
}

// ------------------------------------------------------------------- embed

#[derive(Serialize)]
struct EmbedRow {
    chart: &'static str,
    coords: [f64; 4],
    xi: [f64; 5],
    constraint: f64,
    roundtrip: f64,
}

#[derive(Serialize)]
struct EmbedOut {
    schema: u32,
    points: Vec<EmbedRow>,
}

fn parse_tuple4(flag: &str, raw: &str) -> Result<[f64; 4], CliError> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 4 {
        return Err(usage(format!("--{flag} expects four comma-separated values, got '{raw}'")));
    }
    let mut out = [0.0; 4];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| usage(format!("--{flag}: bad number '{part}'")))?;
    }
    Ok(out)
}

fn max_xi_diff(a: &EmbeddingPoint, b: &EmbeddingPoint) -> f64 {
    a.xi.iter().zip(b.xi).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn static_row(coords: [f64; 4]) -> Result<EmbedRow, CliError> {
    let [t, r, theta, phi] = coords;
    let p = static_to_embedding(t, r, theta, phi).map_err(|e| usage(e.to_string()))?;
    let (t2, r2, th2, ph2) = embedding_to_static(&p);
    let back = static_to_embedding(t2, r2, th2, ph2).map_err(|e| usage(e.to_string()))?;
    Ok(EmbedRow {
        chart: "static",
        coords,
        xi: p.xi,
        constraint: p.constraint_residual(),
        roundtrip: max_xi_diff(&p, &back),
    })
}

fn conformal_row(coords: [f64; 4]) -> Result<EmbedRow, CliError> {
    let p = conformal_to_embedding(coords).map_err(|e| usage(e.to_string()))?;
    let x = embedding_to_conformal(&p).map_err(|e| usage(e.to_string()))?;
    let back = conformal_to_embedding(x).map_err(|e| usage(e.to_string()))?;
    Ok(EmbedRow {
        chart: "conformal",
        coords,
        xi: p.xi,
        constraint: p.constraint_residual(),
        roundtrip: max_xi_diff(&p, &back),
    })
}

pub fn embed(
    static_points: &[String],
    conformal_points: &[String],
    count: Option<usize>,
    seed: u64,
    format: OutputFormat,
) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for raw in static_points {
        rows.push(static_row(parse_tuple4("static", raw)?)?);
    }
    for raw in conformal_points {
        rows.push(conformal_row(parse_tuple4("conformal", raw)?)?);
    }
    if let Some(count) = count {
        for coords in random_static_points(count, seed) {
            rows.push(static_row(coords)?);
        }
    }
    if rows.is_empty() {
        return Err(usage("embed needs --static, --conformal, or --count"));
    }
    match format {
        OutputFormat::Csv => {
            println!("chart,c0,c1,c2,c3,xi0,xi1,xi2,xi3,xi5,constraint,roundtrip");
            for row in &rows {
                let c = row.coords.map(|v| v.to_string()).join(",");
                let xi = row.xi.map(|v| v.to_string()).join(",");
                println!("{},{},{},{},{}", row.chart, c, xi, row.constraint, row.roundtrip);
            }
            Ok(())
        }
        OutputFormat::Json => print_json(&EmbedOut { schema: 1, points: rows }),
    }
}

// ------------------------------------------------------------ dump-algebra

type MatrixJson = Vec<Vec<[f64; 2]>>;

#[derive(Serialize)]
struct AlgebraOut {
    schema: u32,
    metric: [f64; 4],
    beta: Vec<MatrixJson>,
    projector: MatrixJson,
}

fn matrix_json(m: &Matrix10) -> MatrixJson {
    (0..10)
        .map(|r| (0..10).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
        .collect()
}

pub fn dump_algebra() -> Result<(), CliError> {
    let beta: Vec<MatrixJson> = (0..4)
        .map(|a| matrix_json(&build_beta(a).expect("beta index in range")))
        .collect();
    print_json(&AlgebraOut {
        schema: 1,
        metric: ads_spin1::METRIC_DIAG,
        beta,
        projector: matrix_json(&build_massless_projector()),
    })
}

// ---------------------------------------------------------------- selftest

/// Fixed grids and a fixed mode sweep keep two runs byte-identical.
pub fn selftest() -> Result<(), CliError> {
    let mut all_ok = true;
    let mut section = |name: &str, max: f64, tol: f64| {
        let ok = max < tol;
        all_ok &= ok;
        println!("{name}: max residual {max:e} (tolerance {tol:e}) [{}]", if ok { "ok" } else { "FAIL" });
    };

    let algebra = verify_all().map_err(|e| CliError::Failed(e.to_string()))?;
    section("algebra identities", algebra.per_equation_max, tolerances::ALGEBRA);

    let theta: Vec<f64> = (0..50)
        .map(|i| 0.2 + (std::f64::consts::PI - 0.4) * i as f64 / 49.0)
        .collect();
    let mut worst = 0.0_f64;
    for j in 1..=6u32 {
        for m in -(j as i32)..=(j as i32) {
            let report =
                verify_recursions(j, m, &theta).map_err(|e| CliError::Failed(e.to_string()))?;
            worst = worst.max(report.per_equation_max);
        }
    }
    section("rotation recursions", worst, tolerances::RECURSION_RESIDUAL);

    let grid = default_grid();
    let mut worst = 0.0_f64;
    for mass_sq in [0.75, 2.0, 6.0] {
        for n in 0..=2u32 {
            let mut bundles = vec![build_j0_mode(mass_sq, n)];
            for j in 0..=3u32 {
                bundles.push(build_jplus_wave(mass_sq, n, j));
                if j >= 1 {
                    bundles.push(build_j_wave(mass_sq, n, j));
                    bundles.push(build_jminus_wave(mass_sq, n, j));
                }
            }
            for bundle in bundles {
                let bundle = bundle.map_err(|e| CliError::Failed(e.to_string()))?;
                let r = max_applicable_residual(&bundle, &grid)
                    .map_err(|e| CliError::Failed(e.to_string()))?;
                worst = worst.max(r);
            }
        }
    }
    section("quantized-mode residuals", worst, tolerances::DEFAULT_VERIFY);

    if all_ok {
        println!("selftest: PASS");
        Ok(())
    } else {
        println!("selftest: FAIL");
        Err(CliError::Failed("selftest failed".into()))
    }
}
