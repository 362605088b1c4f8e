//! Command-line front end: argument parsing, unit conversion at the boundary,
//! and CSV or JSON emission of the library's headline quantities.
//!
//! Exit codes: 0 success, 2 invalid input, 3 numerical failure (a quadrature
//! that would not converge, or a verification that missed its tolerance).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minlen_core::deformation::{DeformationParameters, ETA_MIN};
use minlen_core::flux::{self, TubeQuadratureSpec, TUBE_ANGULAR_NODES, TUBE_REFINEMENT_LEVELS};
use minlen_core::hydrogen::{energy_level, QuantumNumbers, RadialGrid, SphericalPoint};
use minlen_core::moment;
use minlen_core::perturbation::{correction_expansion, matrix_element_v, MatrixElementRequest};
use minlen_core::units::{self, BOHR_RADIUS_M};
use minlen_core::Error;
use serde_json::Value;

/// Pass thresholds for `flux-check`.
const RELATIVE_TOLERANCE: f64 = 1e-8;
const CROSS_TERM_TOLERANCE: f64 = 1e-9;
const DIVERGENCE_TOLERANCE: f64 = 1e-12;
/// Largest accepted `|V_{nn'} - V_{n'n}|` in `matrix`.
const SYMMETRY_TOLERANCE: f64 = 1e-10;

/// A command failure: a library error, or an unwritable output target.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl Failure {
    /// 2 for invalid inputs, 3 for numerical breakdown.
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(error) if error.is_numerical() => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "minlen",
    version,
    about = "Orbital magnetic moment of hydrogen under a minimal-length deformation"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Omit the generation-timestamp comment from CSV output.
    #[arg(long, global = true)]
    pub no_header_timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the relative moment correction varsigma = eta 4 dx^2 / n^2.
    Varsigma(VarsigmaArgs),
    /// Emit varsigma(eta) curves for a list of n values, as plot-ready CSV.
    #[command(name = "figure1")]
    Figure1(Figure1Args),
    /// Integrate the current tube numerically and compare with the closed form.
    FluxCheck(FluxCheckArgs),
    /// Compare the deformation correction against the relativistic one.
    Compare(CompareArgs),
    /// Print perturbation matrix elements V_{nn'} and admixture coefficients.
    Matrix(MatrixArgs),
}

/// Minimal-length input, taken in meters or directly in Bohr radii.
#[derive(Debug, Args)]
pub struct LengthArgs {
    /// Minimal length in meters.
    #[arg(long, default_value_t = 1e-16)]
    pub delta_x_min: f64,
    /// Minimal length in Bohr radii; takes precedence over --delta-x-min.
    #[arg(long, conflicts_with = "delta_x_min")]
    pub delta_x_min_au: Option<f64>,
}

impl LengthArgs {
    fn atomic(&self) -> Result<f64, Error> {
        match self.delta_x_min_au {
            Some(value) => {
                if !value.is_finite() || value < 0.0 {
                    return Err(Error::Domain {
                        name: "delta_x_min_au",
                        value,
                        domain: "[0, inf)",
                    });
                }
                Ok(value)
            }
            None => units::length_to_atomic(self.delta_x_min),
        }
    }

    fn meters(&self) -> f64 {
        match self.delta_x_min_au {
            Some(value) => value * BOHR_RADIUS_M,
            None => self.delta_x_min,
        }
    }
}

#[derive(Debug, Args)]
pub struct VarsigmaArgs {
    #[command(flatten)]
    pub length: LengthArgs,
    /// Deformation ratio beta / (beta + beta'); repeatable, fractions allowed.
    #[arg(long, value_parser = parse_eta, default_values_t = [1.0])]
    pub eta: Vec<f64>,
    /// Principal quantum number; repeatable.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..), default_values_t = [2u32])]
    pub n: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct Figure1Args {
    #[command(flatten)]
    pub length: LengthArgs,
    /// Principal quantum numbers, one varsigma column each.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..), default_values_t = [2u32, 3, 4])]
    pub n: Vec<u32>,
    /// Number of evenly spaced eta samples on [1/3, 1].
    #[arg(long, default_value_t = 33, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(2..=100_000))]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct FluxCheckArgs {
    #[command(flatten)]
    pub length: LengthArgs,
    /// Deformation ratio beta / (beta + beta'); fractions allowed.
    #[arg(long, value_parser = parse_eta, default_value = "1")]
    pub eta: f64,
    /// Principal quantum number.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Orbital quantum number.
    #[arg(long, default_value_t = 1)]
    pub l: u32,
    /// Magnetic quantum number; must be nonzero for a circulating state.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub m: i32,
    /// Truncation of the wavefunction-correction expansion.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    /// Radial quadrature nodes.
    #[arg(long, env = "MINLEN_GRID_NODES", default_value_t = 200,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(16..=100_000))]
    pub grid_nodes: usize,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub length: LengthArgs,
    /// Deformation ratio beta / (beta + beta'); fractions allowed.
    #[arg(long, value_parser = parse_eta, default_value = "1")]
    pub eta: f64,
    /// Principal quantum number.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Magnetic quantum number.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub m: i32,
    /// Relative measurement error of the Bohr magneton.
    #[arg(long, default_value_t = moment::BOHR_MAGNETON_RELATIVE_ERROR)]
    pub epsilon_bohr: f64,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub length: LengthArgs,
    /// Deformation ratio beta / (beta + beta'); fractions allowed.
    #[arg(long, value_parser = parse_eta, default_value = "1")]
    pub eta: f64,
    /// Principal quantum number of the base state.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Orbital quantum number; 1/r^3 divergence excludes s states.
    #[arg(long, default_value_t = 1)]
    pub l: u32,
    /// Largest n' in the table.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    /// Radial quadrature nodes.
    #[arg(long, env = "MINLEN_GRID_NODES", default_value_t = 200,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(16..=100_000))]
    pub grid_nodes: usize,
}

/// Parses eta, accepting plain decimals and fractions such as `1/3`.
fn parse_eta(raw: &str) -> Result<f64, String> {
    let not_a_number = || format!("`{raw}` is not a number or fraction");
    let value = match raw.split_once('/') {
        Some((numerator, denominator)) => {
            let n: f64 = numerator.trim().parse().map_err(|_| not_a_number())?;
            let d: f64 = denominator.trim().parse().map_err(|_| not_a_number())?;
            if d == 0.0 {
                return Err(format!("`{raw}` divides by zero"));
            }
            n / d
        }
        None => raw.trim().parse().map_err(|_| not_a_number())?,
    };
    if (ETA_MIN..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(format!("eta = {value} lies outside [1/3, 1]"))
    }
}

/// One output value; knows its CSV and JSON spellings.
#[derive(Debug, Clone)]
enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Ints(Vec<i64>),
    Floats(Vec<f64>),
    Empty,
}

/// Scientific notation with ten significant digits. Negative zero would
/// print a spurious sign, so it is normalized first.
fn sci(value: f64) -> String {
    let value = if value == 0.0 { 0.0 } else { value };
    format!("{value:.9e}")
}

fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => sci(*v),
            Cell::Text(v) => csv_field(v),
            Cell::Ints(v) => v
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            Cell::Floats(v) => v.iter().map(|x| sci(*x)).collect::<Vec<_>>().join(";"),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => Value::from(if *v == 0.0 { 0.0 } else { *v }),
            Cell::Text(v) => Value::from(v.as_str()),
            Cell::Ints(v) => Value::from(v.clone()),
            Cell::Floats(v) => Value::from(v.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

/// What a command computed, ready for either output format.
struct Report {
    /// Echoed parameters; the JSON `inputs` object, and leading rows of
    /// key-value CSV reports.
    inputs: Vec<(&'static str, Cell)>,
    body: Body,
    tolerances: Vec<(&'static str, f64)>,
    verdict: String,
    exit: i32,
}

enum Body {
    /// Wide table: one CSV row per entry.
    Table {
        columns: Vec<String>,
        rows: Vec<Vec<Cell>>,
    },
    /// Key-value report rendered as `quantity,value` rows.
    Pairs(Vec<(&'static str, Cell)>),
}

fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn render_csv(report: &Report, with_timestamp: bool) -> String {
    let mut out = String::new();
    if with_timestamp {
        out.push_str("# generated ");
        out.push_str(&timestamp());
        out.push('\n');
    }
    match &report.body {
        Body::Table { columns, rows } => {
            out.push_str(&columns.join(","));
            out.push('\n');
            for row in rows {
                let fields: Vec<String> = row.iter().map(Cell::csv).collect();
                out.push_str(&fields.join(","));
                out.push('\n');
            }
        }
        Body::Pairs(pairs) => {
            out.push_str("quantity,value\n");
            for (key, cell) in report.inputs.iter().chain(pairs.iter()) {
                out.push_str(&format!("{key},{}\n", cell.csv()));
            }
            for (key, value) in &report.tolerances {
                out.push_str(&format!("tolerance_{key},{}\n", sci(*value)));
            }
            out.push_str(&format!("verdict,{}\n", report.verdict));
        }
    }
    out
}

fn render_json(report: &Report) -> String {
    let inputs: serde_json::Map<String, Value> = report
        .inputs
        .iter()
        .map(|(key, cell)| ((*key).to_string(), cell.json()))
        .collect();
    let results: Value = match &report.body {
        Body::Table { columns, rows } => {
            let objects: Vec<Value> = rows
                .iter()
                .map(|row| {
                    columns
                        .iter()
                        .zip(row)
                        .map(|(key, cell)| (key.clone(), cell.json()))
                        .collect::<serde_json::Map<_, _>>()
                        .into()
                })
                .collect();
            serde_json::json!({ "rows": objects })
        }
        Body::Pairs(pairs) => pairs
            .iter()
            .map(|(key, cell)| ((*key).to_string(), cell.json()))
            .collect::<serde_json::Map<_, _>>()
            .into(),
    };
    let tolerances: serde_json::Map<String, Value> = report
        .tolerances
        .iter()
        .map(|(key, value)| ((*key).to_string(), Value::from(*value)))
        .collect();
    let top = serde_json::json!({
        "inputs": inputs,
        "results": results,
        "tolerances": tolerances,
        "verdict": report.verdict,
    });
    let mut text = serde_json::to_string_pretty(&top).expect("plain values serialize");
    text.push('\n');
    text
}

fn cmd_varsigma(args: &VarsigmaArgs) -> Result<Report, Failure> {
    let dx_au = args.length.atomic()?;
    let dx_m = args.length.meters();
    let mut rows = Vec::new();
    for &eta in &args.eta {
        for &n in &args.n {
            let value = moment::varsigma(dx_au, eta, n)?;
            rows.push(vec![
                Cell::Float(dx_m),
                Cell::Float(eta),
                Cell::Int(i64::from(n)),
                Cell::Float(value),
            ]);
        }
    }
    Ok(Report {
        inputs: vec![
            ("delta_x_min_m", Cell::Float(dx_m)),
            ("eta", Cell::Floats(args.eta.clone())),
            (
                "n",
                Cell::Ints(args.n.iter().map(|&n| i64::from(n)).collect()),
            ),
        ],
        body: Body::Table {
            columns: ["delta_x_min_m", "eta", "n", "varsigma"]
                .map(String::from)
                .to_vec(),
            rows,
        },
        tolerances: Vec::new(),
        verdict: "ok".to_string(),
        exit: 0,
    })
}

fn cmd_figure1(args: &Figure1Args) -> Result<Report, Failure> {
    let dx_au = args.length.atomic()?;
    let dx_m = args.length.meters();
    let mut ns = args.n.clone();
    ns.sort_unstable();
    ns.dedup();

    let mut columns = vec!["eta".to_string()];
    columns.extend(ns.iter().map(|n| format!("varsigma_n{n}")));

    let mut rows = Vec::new();
    let last = args.samples - 1;
    for i in 0..args.samples {
        let t = i as f64 / last as f64;
        // Endpoints land exactly on 1/3 and 1.
        let eta = (1.0 - t) * ETA_MIN + t;
        let mut row = vec![Cell::Float(eta)];
        for &n in &ns {
            row.push(Cell::Float(moment::varsigma(dx_au, eta, n)?));
        }
        rows.push(row);
    }
    Ok(Report {
        inputs: vec![
            ("delta_x_min_m", Cell::Float(dx_m)),
            ("n", Cell::Ints(ns.iter().map(|&n| i64::from(n)).collect())),
            ("samples", Cell::Int(args.samples as i64)),
        ],
        body: Body::Table { columns, rows },
        tolerances: Vec::new(),
        verdict: "ok".to_string(),
        exit: 0,
    })
}

fn cmd_flux_check(args: &FluxCheckArgs) -> Result<Report, Failure> {
    let q = QuantumNumbers::new(args.n, args.l, args.m)?;
    if args.m == 0 {
        return Err(Error::Domain {
            name: "m",
            value: 0.0,
            domain: "m != 0 (the probe state must circulate)",
        }
        .into());
    }
    let dx_au = args.length.atomic()?;
    let params = DeformationParameters::from_minimal_length(dx_au, args.eta)?;
    let spec = TubeQuadratureSpec::for_state(
        args.n,
        args.grid_nodes,
        TUBE_ANGULAR_NODES,
        TUBE_REFINEMENT_LEVELS,
    )?;
    let expansion = correction_expansion(q, params, args.n_max, args.grid_nodes)?;

    let closed = moment::magnetic_moment_closed(args.n, args.m, params)?;
    let decomposition = flux::moment_decomposition(q, params, Some(&expansion), &spec)?;
    let quadrature = decomposition.total();
    let relative = ((quadrature - closed) / closed).abs();
    let cross_bohr = units::moment_to_bohr_magnetons(decomposition.cross);

    let mut divergence_max: f64 = 0.0;
    let step = 1e-3;
    for scale in [0.6, 1.2, 2.5] {
        let r = scale * f64::from(args.n * args.n);
        for theta in [1.0, std::f64::consts::FRAC_PI_2, 2.1] {
            let point = SphericalPoint::new(r, theta, 0.4)?;
            let div = flux::divergence_check(q, params, Some(&expansion), point, step)?;
            divergence_max = divergence_max.max(div.abs());
        }
    }

    let pass = relative <= RELATIVE_TOLERANCE
        && cross_bohr.abs() <= CROSS_TERM_TOLERANCE
        && divergence_max <= DIVERGENCE_TOLERANCE;
    Ok(Report {
        inputs: vec![
            ("n", Cell::Int(i64::from(args.n))),
            ("l", Cell::Int(i64::from(args.l))),
            ("m", Cell::Int(i64::from(args.m))),
            ("eta", Cell::Float(args.eta)),
            ("delta_x_min_m", Cell::Float(args.length.meters())),
            ("n_max", Cell::Int(i64::from(args.n_max))),
            ("grid_nodes", Cell::Int(args.grid_nodes as i64)),
        ],
        body: Body::Pairs(vec![
            ("closed_mu_z_au", Cell::Float(closed)),
            (
                "closed_mu_z_bohr_magnetons",
                Cell::Float(units::moment_to_bohr_magnetons(closed)),
            ),
            ("quadrature_mu_z_au", Cell::Float(quadrature)),
            (
                "quadrature_mu_z_bohr_magnetons",
                Cell::Float(units::moment_to_bohr_magnetons(quadrature)),
            ),
            ("relative_discrepancy", Cell::Float(relative)),
            ("cross_term_bohr_magnetons", Cell::Float(cross_bohr)),
            ("divergence_max", Cell::Float(divergence_max)),
        ]),
        tolerances: vec![
            ("relative_discrepancy", RELATIVE_TOLERANCE),
            ("cross_term_bohr_magnetons", CROSS_TERM_TOLERANCE),
            ("divergence_max", DIVERGENCE_TOLERANCE),
        ],
        verdict: if pass { "pass" } else { "fail" }.to_string(),
        exit: if pass { 0 } else { 3 },
    })
}

fn cmd_compare(args: &CompareArgs) -> Result<Report, Failure> {
    let dx_au = args.length.atomic()?;
    let params = DeformationParameters::from_minimal_length(dx_au, args.eta)?;
    let result = moment::comparison_report(args.n, args.m, params, args.epsilon_bohr)?;
    let verdict = if result.below_measurement_precision {
        "below measurement precision"
    } else {
        "not below measurement precision"
    };
    Ok(Report {
        inputs: vec![
            ("n", Cell::Int(i64::from(args.n))),
            ("m", Cell::Int(i64::from(args.m))),
            ("eta", Cell::Float(args.eta)),
            ("delta_x_min_m", Cell::Float(args.length.meters())),
            ("epsilon_bohr", Cell::Float(args.epsilon_bohr)),
        ],
        body: Body::Pairs(vec![
            ("mu_z_au", Cell::Float(result.mu_z_au)),
            (
                "mu_z_bohr_magnetons",
                Cell::Float(result.mu_z_bohr_magnetons),
            ),
            ("deformation_correction", Cell::Float(result.varsigma)),
            (
                "relativistic_correction",
                Cell::Float(-result.relativistic_fraction),
            ),
            (
                "signs",
                Cell::Text("deformation:+ relativistic:-".to_string()),
            ),
            (
                "varsigma_to_epsilon",
                Cell::Float(result.varsigma_to_epsilon),
            ),
        ]),
        tolerances: vec![("epsilon_bohr", args.epsilon_bohr)],
        verdict: verdict.to_string(),
        exit: 0,
    })
}

fn cmd_matrix(args: &MatrixArgs) -> Result<Report, Failure> {
    if args.l == 0 {
        return Err(Error::DivergentExpectation.into());
    }
    QuantumNumbers::new(args.n, args.l, 0)?;
    if args.n_max < args.l + 1 {
        return Err(Error::Domain {
            name: "n_max",
            value: f64::from(args.n_max),
            domain: "[l+1, inf)",
        }
        .into());
    }
    let dx_au = args.length.atomic()?;
    let params = DeformationParameters::from_minimal_length(dx_au, args.eta)?;

    let mut rows = Vec::new();
    let mut worst: f64 = 0.0;
    for n_prime in (args.l + 1)..=args.n_max {
        let grid = RadialGrid::for_pair(args.n, n_prime, args.grid_nodes);
        let forward = matrix_element_v(&MatrixElementRequest {
            n: args.n,
            n_prime,
            l: args.l,
            params,
            grid: &grid,
        })?;
        let reverse = matrix_element_v(&MatrixElementRequest {
            n: n_prime,
            n_prime: args.n,
            l: args.l,
            params,
            grid: &grid,
        })?;
        let residual = forward - reverse;
        worst = worst.max(residual.abs());
        let coefficient = if n_prime == args.n {
            Cell::Empty
        } else {
            Cell::Float(forward / (energy_level::<f64>(args.n) - energy_level::<f64>(n_prime)))
        };
        rows.push(vec![
            Cell::Int(i64::from(n_prime)),
            Cell::Float(forward),
            Cell::Float(residual),
            coefficient,
        ]);
    }
    let pass = worst <= SYMMETRY_TOLERANCE;
    Ok(Report {
        inputs: vec![
            ("n", Cell::Int(i64::from(args.n))),
            ("l", Cell::Int(i64::from(args.l))),
            ("eta", Cell::Float(args.eta)),
            ("delta_x_min_m", Cell::Float(args.length.meters())),
            ("n_max", Cell::Int(i64::from(args.n_max))),
            ("grid_nodes", Cell::Int(args.grid_nodes as i64)),
        ],
        body: Body::Table {
            columns: ["n_prime", "v_element", "symmetry_residual", "c_coefficient"]
                .map(String::from)
                .to_vec(),
            rows,
        },
        tolerances: vec![("symmetry_residual", SYMMETRY_TOLERANCE)],
        verdict: if pass { "pass" } else { "fail" }.to_string(),
        exit: if pass { 0 } else { 3 },
    })
}

/// Runs a parsed invocation, writing to `--out` or the given stream.
/// Returns the process exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let report = match &cli.command {
        Command::Varsigma(args) => cmd_varsigma(args)?,
        Command::Figure1(args) => cmd_figure1(args)?,
        Command::FluxCheck(args) => cmd_flux_check(args)?,
        Command::Compare(args) => cmd_compare(args)?,
        Command::Matrix(args) => cmd_matrix(args)?,
    };
    let text = match cli.format {
        Format::Csv => render_csv(&report, !cli.no_header_timestamp),
        Format::Json => render_json(&report),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(report.exit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_parser_accepts_fractions_and_rejects_out_of_range() {
        assert_eq!(parse_eta("1/3").unwrap(), ETA_MIN);
        assert_eq!(parse_eta("0.5").unwrap(), 0.5);
        assert_eq!(parse_eta(" 2 / 6 ").unwrap(), ETA_MIN);
        assert!(parse_eta("0.2").is_err());
        assert!(parse_eta("1.01").is_err());
        assert!(parse_eta("1/0").is_err());
        assert!(parse_eta("x").is_err());
    }

    #[test]
    fn scientific_format_keeps_ten_significant_digits() {
        assert_eq!(sci(3.5710644e-12), "3.571064400e-12");
        assert_eq!(sci(0.0), "0.000000000e0");
        assert_eq!(sci(-1.0), "-1.000000000e0");
    }

    #[test]
    fn csv_fields_with_separators_are_quoted() {
        assert_eq!(csv_field("plain text"), "plain text");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn command_line_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
