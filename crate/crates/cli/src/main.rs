//! Command-line front end: deterministic CSV tables (and presentational SVG
//! plots) for every quantity the library computes.

mod svg;
mod table;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::fmt::Display;
use std::path::PathBuf;

use diamond_entropy::entropy::{
    correction_coefficients, entropy_full, entropy_tilde, entropy_tilde_limit,
    entropy_tilde_pi_norm, frullani_pi_extract, Convention,
};
use diamond_entropy::graph::{GraphError, GraphSpec};
use diamond_entropy::grid::map_collect;
use diamond_entropy::heat::{
    theta_segment, trace_asymptotic_with, trace_direct, MIN_DIRECT_TIME,
};
use diamond_entropy::spectral_zeta::{pole_tower, zeta_closed};

use table::{fmt_sig, Table};

#[derive(Parser)]
#[command(
    name = "diamond-entropy",
    version,
    about = "Spectral zeta, heat-kernel traces and boundary entropy on diamond graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed-form spectral zeta function
    Zeta(ZetaArgs),
    /// List the pole tower with residue coefficients
    Poles(PolesArgs),
    /// Heat-kernel trace: direct summation against the pole expansion
    Heat(HeatArgs),
    /// Entanglement entropy with log-periodic corrections
    Entropy(EntropyArgs),
    /// Sweep the dimensionless entropy over the decimation factor
    Scan(ScanArgs),
    /// Sweep the correction prefactors Pi_c, Pi_s over the decimation factor
    Corrections(CorrectionsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Paper,
    Replica,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Paper => Convention::Paper,
            ConventionArg::Replica => Convention::Replica,
        }
    }
}

impl Display for ConventionArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConventionArg::Paper => "paper",
            ConventionArg::Replica => "replica",
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Normalization {
    /// zeta_R(d_s) Gamma(d_s/2) / (2 ln 2l), saturating at sqrt(pi)/(2 ln 2)
    Bracket,
    /// A_s / d_s — carries the pi^{-d_s} of the spectral area
    Area,
}

#[derive(Args)]
struct OutputArgs {
    /// Write here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ZetaArgs {
    #[arg(long)]
    l: u32,
    /// Argument s as `re` or `re,im`
    #[arg(long, conflicts_with_all = ["s_min", "s_max", "points"])]
    s: Option<String>,
    #[arg(long, requires = "s_max", requires = "points")]
    s_min: Option<f64>,
    #[arg(long)]
    s_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct PolesArgs {
    #[arg(long)]
    l: u32,
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct HeatArgs {
    #[arg(long)]
    l: u32,
    #[arg(long)]
    t_min: f64,
    #[arg(long)]
    t_max: Option<f64>,
    #[arg(long, default_value_t = 16)]
    points: usize,
    /// Oscillatory orders in the asymptotic trace
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Absolute tolerance of the direct summation
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Check the exact self-similarity identity instead of cross-validating
    #[arg(long)]
    check_decimation: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct EntropyArgs {
    #[arg(long)]
    l: u32,
    #[arg(long, conflicts_with_all = ["eps_min", "eps_max", "points"])]
    epsilon: Option<f64>,
    #[arg(long, requires = "eps_max", requires = "points")]
    eps_min: Option<f64>,
    #[arg(long)]
    eps_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = ConventionArg::Paper)]
    convention: ConventionArg,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 3)]
    l_min: u32,
    #[arg(long, default_value_t = 1000)]
    l_max: u32,
    /// Log-spaced grid size (distinct integers, strictly increasing)
    #[arg(long, default_value_t = 40, conflicts_with = "linear_step")]
    log_steps: usize,
    /// Step through every `linear-step`-th integer instead
    #[arg(long)]
    linear_step: Option<u32>,
    #[arg(long, value_enum, default_value_t = Normalization::Bracket)]
    normalization: Normalization,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CorrectionsArgs {
    #[arg(long, default_value_t = 3)]
    l_min: u32,
    #[arg(long, default_value_t = 200)]
    l_max: u32,
    /// Correction orders, e.g. `--n 1,2,3,4`
    #[arg(long, value_delimiter = ',', default_values_t = vec![1usize, 2, 3, 4])]
    n: Vec<usize>,
    #[arg(long, default_value_t = 60, conflicts_with = "linear_step")]
    log_steps: usize,
    #[arg(long)]
    linear_step: Option<u32>,
    /// Add quadrature-oracle columns Pi_c_quad, Pi_s_quad
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[command(flatten)]
    out: OutputArgs,
}

enum CliError {
    Usage(String),
    Numeric(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn usage<E: Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn numeric<E: Display>(e: E) -> CliError {
    CliError::Numeric(e.to_string())
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Numeric(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Zeta(a) => cmd_zeta(a),
        Command::Poles(a) => cmd_poles(a),
        Command::Heat(a) => cmd_heat(a),
        Command::Entropy(a) => cmd_entropy(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Corrections(a) => cmd_corrections(a),
    }
}

fn graph(l: u32) -> Result<GraphSpec, CliError> {
    GraphSpec::new(l).map_err(|e| match e {
        GraphError::InvalidDecimation(_) => usage(e),
        other => numeric(other),
    })
}

fn emit(out: &OutputArgs, content: String) -> Result<(), CliError> {
    match &out.output {
        Some(path) => std::fs::write(path, content)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn log_grid_f64(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>, CliError> {
    if lo.is_nan() || hi.is_nan() || lo <= 0.0 || hi < lo {
        return Err(CliError::Usage(format!(
            "grid needs 0 < min <= max, got [{lo}, {hi}]"
        )));
    }
    if points == 0 {
        return Err(CliError::Usage("points must be >= 1".into()));
    }
    if points == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..points)
        .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (points - 1) as f64).exp())
        .collect())
}

/// Strictly increasing integers, log-spaced between the bounds.
fn integer_log_grid(l_min: u32, l_max: u32, steps: usize) -> Result<Vec<u32>, CliError> {
    if l_min < 3 {
        return Err(CliError::Usage(format!(
            "decimation sweep needs l >= 3, got l-min = {l_min}"
        )));
    }
    if l_max < l_min {
        return Err(CliError::Usage(format!(
            "l-max = {l_max} is below l-min = {l_min}"
        )));
    }
    let range = (l_max - l_min + 1) as usize;
    if steps == 0 || steps > range {
        return Err(CliError::Usage(format!(
            "log-steps must be in 1..={range} for this range, got {steps}"
        )));
    }
    let mut grid = Vec::with_capacity(steps);
    let mut prev: u32 = 0;
    for i in 0..steps {
        let f = if steps == 1 {
            0.0
        } else {
            i as f64 / (steps - 1) as f64
        };
        let target = ((l_min as f64).ln() + f * ((l_max as f64).ln() - (l_min as f64).ln())).exp();
        let room = (steps - 1 - i) as u32;
        let cand = (target.round() as u32)
            .clamp(l_min, l_max - room)
            .max(if i == 0 { l_min } else { prev + 1 });
        grid.push(cand);
        prev = cand;
    }
    Ok(grid)
}

fn decimation_grid(
    l_min: u32,
    l_max: u32,
    log_steps: usize,
    linear_step: Option<u32>,
) -> Result<Vec<u32>, CliError> {
    match linear_step {
        None => integer_log_grid(l_min, l_max, log_steps),
        Some(0) => Err(CliError::Usage("linear-step must be >= 1".into())),
        Some(step) => {
            if l_min < 3 {
                return Err(CliError::Usage(format!(
                    "decimation sweep needs l >= 3, got l-min = {l_min}"
                )));
            }
            if l_max < l_min {
                return Err(CliError::Usage(format!(
                    "l-max = {l_max} is below l-min = {l_min}"
                )));
            }
            Ok((l_min..=l_max).step_by(step as usize).collect())
        }
    }
}

fn cmd_zeta(a: ZetaArgs) -> Result<(), CliError> {
    let g = graph(a.l)?;
    let args: Vec<Complex64> = match (&a.s, a.s_min) {
        (Some(text), _) => vec![parse_complex(text)?],
        (None, Some(lo)) => {
            let hi = a.s_max.expect("clap requires s-max with s-min");
            let points = a.points.expect("clap requires points with s-min");
            if hi < lo {
                return Err(CliError::Usage(format!("s-max = {hi} below s-min = {lo}")));
            }
            if points == 0 {
                return Err(CliError::Usage("points must be >= 1".into()));
            }
            (0..points)
                .map(|i| {
                    let f = if points == 1 {
                        0.0
                    } else {
                        i as f64 / (points - 1) as f64
                    };
                    Complex64::new(lo + (hi - lo) * f, 0.0)
                })
                .collect()
        }
        (None, None) => return Err(CliError::Usage("pass --s or --s-min/--s-max/--points".into())),
    };
    let rows = map_collect(&args, |s| zeta_closed(&g, *s).map(|v| (*s, v)));
    let mut t = Table::new("l,s_re,s_im,zeta_re,zeta_im");
    for row in rows {
        let (s, v) = row.map_err(numeric)?;
        t.row(&[
            a.l.to_string(),
            fmt_sig(s.re),
            fmt_sig(s.im),
            fmt_sig(v.re),
            fmt_sig(v.im),
        ]);
    }
    emit(&a.out, t.into_string())
}

fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let parse = |p: &str| -> Result<f64, CliError> {
        p.trim()
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("cannot parse `{p}` as a number")))
    };
    match text.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse(re)?, parse(im)?)),
        None => Ok(Complex64::new(parse(text)?, 0.0)),
    }
}

fn cmd_poles(a: PolesArgs) -> Result<(), CliError> {
    let g = graph(a.l)?;
    let tower = pole_tower(&g, a.n_max).map_err(numeric)?;
    let mut t = Table::new("l,n,s_re,s_im,delta_re,delta_im");
    for n in 0..=a.n_max {
        let p = tower.poles()[n];
        t.row(&[
            a.l.to_string(),
            n.to_string(),
            fmt_sig(p.re),
            fmt_sig(p.im),
            fmt_sig(tower.delta_re()[n]),
            fmt_sig(tower.delta_im()[n]),
        ]);
    }
    t.comment(&format!("zeta0 = {}", fmt_sig(tower.zeta0())));
    t.comment(&format!("spectral_area = {}", fmt_sig(tower.spectral_area())));
    emit(&a.out, t.into_string())
}

fn cmd_heat(a: HeatArgs) -> Result<(), CliError> {
    let g = graph(a.l)?;
    if a.tol <= 0.0 {
        return Err(CliError::Usage("tol must be positive".into()));
    }
    let hi = a.t_max.unwrap_or(a.t_min);
    let ts = log_grid_f64(a.t_min, hi, a.points)?;
    let tower = pole_tower(&g, a.n_max + 1).map_err(numeric)?;

    if a.check_decimation {
        let lf = g.decimation() as f64;
        let rows = map_collect(&ts, |&t| -> Result<[String; 4], String> {
            let t_scaled = t / (lf * lf);
            if t_scaled < MIN_DIRECT_TIME {
                return Ok([
                    fmt_sig(t),
                    "refused".into(),
                    "refused".into(),
                    "refused".into(),
                ]);
            }
            let reference = trace_direct(&g, t_scaled, 1e-18)
                .map_err(|e| e.to_string())?
                .value
                .max(1.0);
            let tol = (1e-16 * reference).max(1e-300);
            let lhs = trace_direct(&g, t_scaled, tol).map_err(|e| e.to_string())?.value;
            let rhs = 2.0 * theta_segment(t_scaled, tol).map_err(|e| e.to_string())?
                + 2.0
                    * lf
                    * (trace_direct(&g, t, tol).map_err(|e| e.to_string())?.value
                        - theta_segment(t, tol).map_err(|e| e.to_string())?);
            Ok([
                fmt_sig(t),
                fmt_sig(lhs),
                fmt_sig(rhs),
                fmt_sig(((lhs - rhs) / lhs).abs()),
            ])
        });
        let mut t = Table::new("t,K_scaled,identity_rhs,residual");
        for row in rows {
            t.row(&row.map_err(CliError::Numeric)?);
        }
        return emit(&a.out, t.into_string());
    }

    let rows = map_collect(&ts, |&t| -> Result<[String; 5], String> {
        let asym = trace_asymptotic_with(&g, t, a.n_max, &tower).map_err(|e| e.to_string())?;
        if t < MIN_DIRECT_TIME {
            return Ok([
                fmt_sig(t),
                "refused".into(),
                fmt_sig(asym.value),
                "refused".into(),
                "refused".into(),
            ]);
        }
        let direct = trace_direct(&g, t, a.tol).map_err(|e| e.to_string())?;
        let rel = ((direct.value - asym.value) / direct.value).abs();
        Ok([
            fmt_sig(t),
            fmt_sig(direct.value),
            fmt_sig(asym.value),
            fmt_sig(rel),
            fmt_sig(direct.error_estimate),
        ])
    });
    let mut t = Table::new("t,K_direct,K_asymptotic,rel_err,tail_bound");
    for row in rows {
        t.row(&row.map_err(CliError::Numeric)?);
    }
    emit(&a.out, t.into_string())
}

fn cmd_entropy(a: EntropyArgs) -> Result<(), CliError> {
    let g = graph(a.l)?;
    let convention: Convention = a.convention.into();
    let eps_grid: Vec<f64> = match (a.epsilon, a.eps_min) {
        (Some(e), _) => vec![e],
        (None, Some(lo)) => log_grid_f64(
            lo,
            a.eps_max.expect("clap requires eps-max"),
            a.points.expect("clap requires points"),
        )?,
        (None, None) => {
            return Err(CliError::Usage(
                "pass --epsilon or --eps-min/--eps-max/--points".into(),
            ))
        }
    };
    for &e in &eps_grid {
        if e <= 0.0 {
            return Err(CliError::Usage(format!("epsilon must be positive, got {e}")));
        }
    }
    let rows = map_collect(&eps_grid, |&eps| {
        entropy_full(&g, eps, a.n_max, convention)
    });
    let mut t = Table::new("l,epsilon,d_s,convention,n_max,leading,S_E_tilde,osc_sum,total");
    for row in rows {
        let r = row.map_err(numeric)?;
        t.row(&[
            a.l.to_string(),
            fmt_sig(r.epsilon),
            fmt_sig(r.d_s),
            a.convention.to_string(),
            a.n_max.to_string(),
            fmt_sig(r.leading),
            fmt_sig(r.tilde),
            fmt_sig(r.oscillatory_sum()),
            fmt_sig(r.total),
        ]);
    }
    emit(&a.out, t.into_string())
}

fn cmd_scan(a: ScanArgs) -> Result<(), CliError> {
    let ls = decimation_grid(a.l_min, a.l_max, a.log_steps, a.linear_step)?;
    let rows = map_collect(&ls, |&l| {
        let g = GraphSpec::new(l).expect("grid is validated above");
        let tilde = match a.normalization {
            Normalization::Bracket => entropy_tilde(&g),
            Normalization::Area => entropy_tilde_pi_norm(&g),
        };
        (l, g.spectral_dim(), tilde)
    });
    let (asym_label, asym_value) = match a.normalization {
        Normalization::Bracket => ("asymptote sqrt(pi)/(2 ln 2)", entropy_tilde_limit()),
        Normalization::Area => (
            "asymptote sqrt(pi)/(2 pi ln 2)",
            diamond_entropy::heat::limit_spectral_area(),
        ),
    };

    if matches!(a.format, OutputFormat::Svg) {
        let plot = svg::Plot {
            title: "Dimensionless boundary entropy vs decimation factor".into(),
            x_label: "l (log scale)".into(),
            y_label: "S_E_tilde".into(),
            log_x: true,
            series: vec![svg::Series {
                label: "S_E_tilde".into(),
                points: rows.iter().map(|&(l, _, v)| (l as f64, v)).collect(),
                dashed: false,
            }],
            hline: Some((asym_value, format!("{:.5}", asym_value))),
        };
        return emit(&a.out, plot.render());
    }

    let mut t = Table::new("l,d_s,S_E_tilde");
    for (l, ds, tilde) in rows {
        t.row(&[l.to_string(), fmt_sig(ds), fmt_sig(tilde)]);
    }
    t.comment(&format!("{asym_label} = {}", fmt_sig(asym_value)));
    emit(&a.out, t.into_string())
}

fn cmd_corrections(a: CorrectionsArgs) -> Result<(), CliError> {
    if a.n.is_empty() {
        return Err(CliError::Usage("pass at least one order via --n".into()));
    }
    for &n in &a.n {
        if n == 0 {
            return Err(CliError::Usage("orders must satisfy n >= 1".into()));
        }
    }
    let ls = decimation_grid(a.l_min, a.l_max, a.log_steps, a.linear_step)?;
    let tasks: Vec<(u32, usize)> = ls
        .iter()
        .flat_map(|&l| a.n.iter().map(move |&n| (l, n)))
        .collect();
    let rows = map_collect(&tasks, |&(l, n)| -> Result<Vec<String>, String> {
        let g = GraphSpec::new(l).expect("grid is validated above");
        let c = correction_coefficients(&g, n).map_err(|e| e.to_string())?;
        let mut cells = vec![
            l.to_string(),
            n.to_string(),
            fmt_sig(c.pi_c),
            fmt_sig(c.pi_s),
        ];
        if a.verify {
            let (pc, ps) = frullani_pi_extract(&g, n, 0.05).map_err(|e| e.to_string())?;
            cells.push(fmt_sig(pc));
            cells.push(fmt_sig(ps));
        }
        Ok(cells)
    });

    if matches!(a.format, OutputFormat::Svg) {
        let mut series = Vec::new();
        for (which, dashed) in [("Pi_c", false), ("Pi_s", true)] {
            for &n in &a.n {
                let pts: Vec<(f64, f64)> = tasks
                    .iter()
                    .zip(rows.iter())
                    .filter_map(|(&(l, rn), row)| match row {
                        Ok(cells) if rn == n => {
                            let idx = if which == "Pi_c" { 2 } else { 3 };
                            cells[idx].parse::<f64>().ok().map(|v| (l as f64, v))
                        }
                        _ => None,
                    })
                    .collect();
                series.push(svg::Series {
                    label: format!("{which} n={n}"),
                    points: pts,
                    dashed,
                });
            }
        }
        let plot = svg::Plot {
            title: "Log-periodic correction prefactors".into(),
            x_label: "l".into(),
            y_label: "Pi_c (solid), Pi_s (dashed)".into(),
            log_x: false,
            series,
            hline: None,
        };
        return emit(&a.out, plot.render());
    }

    let header = if a.verify {
        "l,n,Pi_c,Pi_s,Pi_c_quad,Pi_s_quad"
    } else {
        "l,n,Pi_c,Pi_s"
    };
    let mut t = Table::new(header);
    for row in rows {
        t.row(&row.map_err(CliError::Numeric)?);
    }
    emit(&a.out, t.into_string())
}
