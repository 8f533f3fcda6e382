//! `orbitdual`: partition dualities, infinitesimal characters, Richardson
//! induction and mild-unipotence checks from the command line.
//!
//! Exit codes: 0 success, 2 domain error (JSON error object on stdout),
//! 1 internal error, 64 usage error.

mod config;
mod golden;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use orbitdual::checker::{
    brute_force_mild_oracle, mild_check_classical, mild_check_exceptional, CheckOptions, CheckReport,
};
use orbitdual::dualities::{apply, DualityMap};
use orbitdual::induction::{induce_zero_factor, orbit_dimension};
use orbitdual::infchar::{
    dominant, is_antisymmetric, metaplectic_infchar, positive_half, q_unipotent_infchar, rho_plus, rho_s, xi_r,
    xi_rvec, QUnipotentSpec, Variant,
};
use orbitdual::rational::{parse_rational, Rational};
use orbitdual::rootsys::{
    build_root_system, centralizer_levi, integral_pseudo_levi, lattice_preset, BallEnumerator, LatticePreset,
    LeviDecomposition,
};
use orbitdual::{ClassicalFamily, Lattice, LieType, Partition, Vector};

use config::{FileConfig, Overrides};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub enum CliError {
    Domain(orbitdual::Error),
    Usage(String),
    Io(String),
    /// Golden-suite mismatches; the table is already printed.
    Mismatch,
    /// Some batch entries failed; their errors are already in the output.
    BatchErrors,
}

impl From<orbitdual::Error> for CliError {
    fn from(e: orbitdual::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "orbitdual", version, about = "Nilpotent orbit dualities and mild-unipotence checks")]
struct Cli {
    /// JSON file with checker limits (`jobs`, `max_points`, `witness_limit`).
    #[arg(long, global = true, env = "ORBITDUAL_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// X-collapse of a partition.
    Collapse {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        partition: String,
    },
    /// Springer-type bijections and the LS / BV dualities.
    Dual {
        #[arg(long)]
        map: String,
        #[arg(long = "type", default_value = "A")]
        family: String,
        #[arg(long)]
        partition: String,
        /// Skip the domain check of the map.
        #[arg(long)]
        unchecked: bool,
    },
    /// Infinitesimal characters attached to partitions.
    Infchar(InfcharArgs),
    /// Integral pseudo-Levi of a character and the centralizer in each factor.
    Levi {
        #[arg(long = "type")]
        lie_type: String,
        #[arg(long)]
        vector: String,
    },
    /// Richardson orbit induced from the zero orbit of a Levi.
    Induce {
        #[arg(long)]
        ambient: String,
        /// Comma-separated blocks `glK` and at most one `resK`.
        #[arg(long)]
        levi: String,
    },
    /// Mild-unipotence check of one character or a batch file.
    CheckMild(CheckArgs),
    /// Golden suite over the worked examples and desk theorems.
    VerifyPaper {
        /// Only run groups or cases whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// Corrupt the first expectation (negative control).
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
    },
    /// Points of `shift + L` inside a ball for the invariant form of a type.
    Enumerate {
        #[arg(long = "type")]
        lie_type: String,
        #[arg(long)]
        vector: String,
        #[arg(long, default_value = "root")]
        lattice: String,
        #[arg(long)]
        radius_sq: String,
        /// Include the boundary sphere.
        #[arg(long)]
        closed: bool,
        #[arg(long, env = "ORBITDUAL_MAX_POINTS")]
        max_points: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    RhoPlus,
    Xi,
    RhoS,
    QUnipotent,
    Metaplectic,
}

#[derive(Args)]
struct InfcharArgs {
    #[arg(long, value_enum)]
    construction: Construction,
    #[arg(long)]
    partition: String,
    /// One value, or one per row.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    /// One shift per row.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, default_value = "default")]
    variant: String,
    #[arg(long = "type")]
    lie_type: Option<String>,
}

#[derive(Clone, Copy, ValueEnum, Serialize, Deserialize, Default, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
enum Mode {
    #[default]
    Classical,
    Exceptional,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum TableFormat {
    Table,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long = "type", required_unless_present = "batch")]
    lie_type: Option<String>,
    #[arg(long, required_unless_present = "batch", allow_hyphen_values = true)]
    vector: Option<String>,
    #[arg(long, default_value = "root")]
    lattice: String,
    #[arg(long, value_enum, default_value_t = Mode::Classical)]
    mode: Mode,
    /// JSON array of `{"type", "vector", "lattice"?, "mode"?}` objects.
    #[arg(long, conflicts_with_all = ["lie_type", "vector"])]
    batch: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, env = "ORBITDUAL_JOBS")]
    jobs: Option<usize>,
    #[arg(long, env = "ORBITDUAL_MAX_POINTS")]
    max_points: Option<u64>,
    #[arg(long, env = "ORBITDUAL_WITNESS_LIMIT")]
    witness_limit: Option<usize>,
    /// Scan every lattice point instead of sign/permutation representatives.
    #[arg(long)]
    no_canonicalize: bool,
}

#[derive(Serialize)]
struct Versioned<T: Serialize> {
    schema_version: u32,
    #[serde(flatten)]
    body: T,
}

fn emit<T: Serialize>(body: T) -> CliResult {
    let text = serde_json::to_string_pretty(&Versioned { schema_version: SCHEMA_VERSION, body })
        .map_err(|e| CliError::Io(e.to_string()))?;
    let mut out = std::io::stdout().lock();
    writeln!(out, "{text}").map_err(|e| CliError::Io(e.to_string()))
}

fn parse<T: std::str::FromStr<Err = orbitdual::Error>>(s: &str) -> CliResult<T> {
    Ok(s.parse()?)
}

fn rationals(s: &str) -> CliResult<Vec<Rational>> {
    Ok(s.split(',').map(parse_rational).collect::<orbitdual::Result<_>>()?)
}

fn load_lattice(spec: &str, t: LieType) -> CliResult<Lattice> {
    let lattice = match spec.strip_prefix('@') {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read lattice {path}: {e}")))?;
            Lattice::from_json(&text)?
        }
        None => lattice_preset(t, parse::<LatticePreset>(spec)?)?,
    };
    lattice.check_dim(t)?;
    Ok(lattice)
}

fn collapse(family: &str, partition: &str) -> CliResult {
    let f: ClassicalFamily = parse(family)?;
    let d: Partition = parse(partition)?;
    let out = if f == ClassicalFamily::A { d.clone() } else { d.collapse(f)? };
    #[derive(Serialize)]
    struct Out {
        input: Partition,
        #[serde(rename = "type")]
        family: ClassicalFamily,
        output: Partition,
    }
    emit(Out { input: d, family: f, output: out })
}

fn dual(map: &str, family: &str, partition: &str, unchecked: bool) -> CliResult {
    let m: DualityMap = parse(map)?;
    let f: ClassicalFamily = parse(family)?;
    let d: Partition = parse(partition)?;
    let output = apply(m, &d, f, !unchecked)?;
    #[derive(Serialize)]
    struct Out {
        input: Partition,
        map: DualityMap,
        #[serde(rename = "type")]
        family: ClassicalFamily,
        checked: bool,
        output: Partition,
    }
    emit(Out { input: d, map: m, family: f, checked: !unchecked, output })
}

fn infchar(a: &InfcharArgs) -> CliResult {
    let q: Partition = parse(&a.partition)?;
    let variant: Variant = parse(&a.variant)?;
    let lie_type: Option<LieType> = a.lie_type.as_deref().map(parse).transpose()?;
    let family = lie_type.and_then(|t| t.classical_family());
    let need = |name: &str, v: &Option<String>| -> CliResult<Vec<Rational>> {
        v.as_deref().map(rationals).transpose()?.ok_or_else(|| CliError::Usage(format!("--{name} is required")))
    };
    let (raw, dom) = match a.construction {
        Construction::RhoPlus => {
            let raw = rho_plus(q.parts(), q.size())?;
            let dom = family.map_or_else(|| raw.sorted_desc(), |f| dominant(&raw, f));
            (raw, dom)
        }
        Construction::Xi => {
            let r = need("r", &a.r)?;
            let raw = if r.len() == 1 { xi_r(&q, r[0])? } else { xi_rvec(&q, &r)? };
            let dom = raw.sorted_desc();
            (raw, dom)
        }
        Construction::RhoS => {
            let s = need("s", &a.s)?;
            let raw = rho_s(&q, &s)?;
            let dom = match (lie_type, family) {
                (Some(t), Some(f)) if f != ClassicalFamily::A => {
                    if is_antisymmetric(&q, &s).is_none() {
                        return Err(orbitdual::Error::DomainViolation(
                            "rho_s lies in a classical Cartan only for antisymmetric (q, s)".into(),
                        )
                        .into());
                    }
                    let half = positive_half(&raw, t.dim());
                    dominant(&half, f)
                }
                _ => raw.sorted_desc(),
            };
            (raw, dom)
        }
        Construction::QUnipotent => {
            let t = lie_type.ok_or_else(|| CliError::Usage("--type is required for q-unipotent".into()))?;
            let c = q_unipotent_infchar(&QUnipotentSpec { rows: q.parts().to_vec(), g_type: t, variant })?;
            (c.raw, c.dominant)
        }
        Construction::Metaplectic => {
            let c = metaplectic_infchar(&q)?;
            (c.raw, c.dominant)
        }
    };
    if let (Some(t), Construction::QUnipotent | Construction::RhoPlus | Construction::RhoS) = (lie_type, a.construction) {
        t.check_dim(&dom)?;
    }
    #[derive(Serialize)]
    struct Out {
        construction: String,
        partition: Partition,
        #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
        lie_type: Option<LieType>,
        multiset: Vector,
        dominant: Vector,
    }
    let construction = a.construction.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    emit(Out { construction, partition: q, lie_type, multiset: raw, dominant: dom })
}

fn levi(lie_type: &str, vector: &str) -> CliResult {
    let t: LieType = parse(lie_type)?;
    let lambda: Vector = parse(vector)?;
    let factors = integral_pseudo_levi(&lambda, t)?;
    #[derive(Serialize)]
    struct Factor {
        name: String,
        label: String,
        family: ClassicalFamily,
        coords: Vec<usize>,
        signs: Vec<i8>,
        centralizer: String,
        levi: LeviDecomposition,
        induced_orbit: Partition,
    }
    let out: Vec<Factor> = factors
        .into_iter()
        .map(|f| {
            let l = centralizer_levi(&f.local(&lambda), &f);
            let orbit = induce_zero_factor(&l)?;
            Ok(Factor {
                name: f.name(),
                label: f.label.to_string(),
                family: f.family,
                coords: f.coords.clone(),
                signs: f.signs.clone(),
                centralizer: l.name(),
                levi: l,
                induced_orbit: orbit,
            })
        })
        .collect::<orbitdual::Result<_>>()?;
    #[derive(Serialize)]
    struct Out {
        #[serde(rename = "type")]
        lie_type: LieType,
        lambda: Vector,
        pseudo_levi: Vec<Factor>,
    }
    emit(Out { lie_type: t, lambda, pseudo_levi: out })
}

/// `gl2,gl2,res2` into block sizes and a residual rank.
fn levi_blocks(spec: &str) -> CliResult<(Vec<usize>, usize)> {
    let mut blocks = Vec::new();
    let mut residual = None;
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let bad = || orbitdual::Error::Parse(format!("bad Levi block {tok:?}; use glK or resK"));
        if let Some(k) = tok.strip_prefix("gl") {
            blocks.push(k.parse::<usize>().map_err(|_| bad())?);
        } else if let Some(k) = tok.strip_prefix("res") {
            if residual.replace(k.parse::<usize>().map_err(|_| bad())?).is_some() {
                return Err(orbitdual::Error::InvalidDecomposition("more than one residual block".into()).into());
            }
        } else {
            return Err(bad().into());
        }
    }
    Ok((blocks, residual.unwrap_or(0)))
}

fn induce(ambient: &str, spec: &str) -> CliResult {
    let t: LieType = parse(ambient)?;
    let family = t.classical_family().ok_or_else(|| orbitdual::Error::NonClassicalType(t.to_string()))?;
    let (blocks, residual) = levi_blocks(spec)?;
    let levi = LeviDecomposition::from_sizes(family, &blocks, residual)?;
    if levi.ambient_rank != t.dim() {
        return Err(orbitdual::Error::InvalidDecomposition(format!(
            "blocks cover {} coordinates, {t} has {}",
            levi.ambient_rank,
            t.dim()
        ))
        .into());
    }
    let partition = induce_zero_factor(&levi)?;
    #[derive(Serialize)]
    struct Out {
        ambient: LieType,
        levi: String,
        partition: Partition,
        dimension: u64,
    }
    let dimension = orbit_dimension(family, &partition);
    emit(Out { ambient: t, levi: levi.name(), partition, dimension })
}

fn run_check(t: LieType, lambda: &Vector, lattice: &Lattice, mode: Mode, opts: &CheckOptions) -> CliResult<CheckReport> {
    Ok(match mode {
        Mode::Classical => mild_check_classical(lambda, t, lattice, opts)?,
        Mode::Exceptional => mild_check_exceptional(lambda, t, lattice, opts)?,
        Mode::Oracle => brute_force_mild_oracle(lambda, t, lattice, opts)?,
    })
}

#[derive(Deserialize)]
struct BatchItem {
    #[serde(rename = "type")]
    lie_type: String,
    vector: String,
    #[serde(default)]
    lattice: Option<String>,
    #[serde(default)]
    mode: Option<Mode>,
}

#[derive(Serialize)]
struct BatchRow {
    #[serde(rename = "type")]
    lie_type: String,
    vector: String,
    lattice: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorBody>,
}

#[derive(Serialize, Clone)]
struct ErrorBody {
    kind: String,
    message: String,
}

impl ErrorBody {
    fn of(e: &CliError) -> Self {
        match e {
            CliError::Domain(d) => ErrorBody { kind: d.kind().into(), message: d.to_string() },
            CliError::Usage(m) => ErrorBody { kind: "usage".into(), message: m.clone() },
            CliError::Io(m) => ErrorBody { kind: "io".into(), message: m.clone() },
            CliError::Mismatch => ErrorBody { kind: "mismatch".into(), message: "golden mismatch".into() },
            CliError::BatchErrors => ErrorBody { kind: "batch".into(), message: "some batch entries failed".into() },
        }
    }
}

const CSV_HEADER: [&str; 11] = [
    "type",
    "vector",
    "lattice",
    "mode",
    "verdict",
    "norm_sq_lambda",
    "points_scanned",
    "witness_count",
    "first_witness",
    "wall_time",
    "error",
];

fn csv_record(row: &BatchRow) -> Vec<String> {
    let r = row.report.as_ref();
    let str_of = |v: serde_json::Value| v.as_str().map(String::from).unwrap_or_else(|| v.to_string());
    vec![
        row.lie_type.clone(),
        row.vector.clone(),
        row.lattice.clone(),
        r.map(|r| str_of(serde_json::json!(r.mode))).unwrap_or_default(),
        r.map(|r| format!("{:?}", r.verdict)).unwrap_or_default(),
        r.map(|r| orbitdual::rational::format_rational(&r.norm_sq_lambda)).unwrap_or_default(),
        r.map(|r| r.points_scanned.to_string()).unwrap_or_default(),
        r.map(|r| r.witness_count.to_string()).unwrap_or_default(),
        r.and_then(|r| r.witnesses.first()).map(|w| w.nu.to_string()).unwrap_or_default(),
        r.map(|r| format!("{:.6}", r.wall_time)).unwrap_or_default(),
        row.error.as_ref().map(|e| format!("{}: {}", e.kind, e.message)).unwrap_or_default(),
    ]
}

fn write_csv(rows: &[BatchRow]) -> CliResult {
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for row in rows {
        w.write_record(csv_record(row)).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}

fn check_mild(a: &CheckArgs, file: &FileConfig) -> CliResult {
    let overrides = Overrides {
        jobs: a.jobs,
        max_points: a.max_points,
        witness_limit: a.witness_limit,
        no_canonicalize: a.no_canonicalize,
    };
    let opts = config::resolve(&overrides, file)?;
    let one = |lie_type: &str, vector: &str, lattice: &str, mode: Mode| -> CliResult<CheckReport> {
        let t: LieType = parse(lie_type)?;
        let lambda: Vector = parse(vector)?;
        let l = load_lattice(lattice, t)?;
        run_check(t, &lambda, &l, mode, &opts)
    };
    let Some(path) = &a.batch else {
        let (t, v) = (a.lie_type.as_deref().unwrap_or_default(), a.vector.as_deref().unwrap_or_default());
        let report = one(t, v, &a.lattice, a.mode)?;
        return match a.format {
            Format::Json => emit(report),
            Format::Csv => write_csv(&[BatchRow {
                lie_type: t.into(),
                vector: v.into(),
                lattice: a.lattice.clone(),
                report: Some(report),
                error: None,
            }]),
        };
    };
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let items: Vec<BatchItem> =
        serde_json::from_str(&text).map_err(|e| orbitdual::Error::Parse(format!("batch file: {e}")))?;
    let mut rows = Vec::with_capacity(items.len());
    let mut failed = false;
    for it in items {
        let lattice = it.lattice.unwrap_or_else(|| a.lattice.clone());
        let res = one(&it.lie_type, &it.vector, &lattice, it.mode.unwrap_or(a.mode));
        if let Err(CliError::Io(m)) = res {
            return Err(CliError::Io(m));
        }
        failed |= res.is_err();
        let (report, error) = match res {
            Ok(r) => (Some(r), None),
            Err(e) => (None, Some(ErrorBody::of(&e))),
        };
        rows.push(BatchRow { lie_type: it.lie_type, vector: it.vector, lattice, report, error });
    }
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                results: &'a [BatchRow],
            }
            emit(Out { results: &rows })?
        }
        Format::Csv => write_csv(&rows)?,
    }
    if failed {
        return Err(CliError::BatchErrors);
    }
    Ok(())
}

fn enumerate(
    lie_type: &str,
    vector: &str,
    lattice: &str,
    radius_sq: &str,
    closed: bool,
    max_points: Option<u64>,
    file: &FileConfig,
) -> CliResult {
    let t: LieType = parse(lie_type)?;
    let shift: Vector = parse(vector)?;
    t.check_dim(&shift)?;
    let l = load_lattice(lattice, t)?;
    let r2 = parse_rational(radius_sq)?;
    let cap = max_points.or(file.max_points).unwrap_or(orbitdual::checker::DEFAULT_MAX_POINTS);
    let rs = build_root_system(t);
    let en = BallEnumerator::new(&shift, &l, &rs.form, &r2, !closed)?;
    let mut points = Vec::new();
    en.for_each(|c, scaled| {
        if points.len() as u64 >= cap {
            return Err(orbitdual::Error::PointCapExceeded { cap });
        }
        points.push((en.point(c), en.norm(scaled)));
        Ok(())
    })?;
    #[derive(Serialize)]
    struct Point {
        nu: Vector,
        #[serde(with = "orbitdual::rational::as_string")]
        norm_sq: Rational,
    }
    #[derive(Serialize)]
    struct Out {
        #[serde(rename = "type")]
        lie_type: LieType,
        lattice: Lattice,
        shift: Vector,
        #[serde(with = "orbitdual::rational::as_string")]
        radius_sq: Rational,
        strict: bool,
        count: usize,
        points: Vec<Point>,
    }
    let points: Vec<Point> = points.into_iter().map(|(nu, norm_sq)| Point { nu, norm_sq }).collect();
    emit(Out { lie_type: t, lattice: l, shift, radius_sq: r2, strict: !closed, count: points.len(), points })
}

fn verify_paper(filter: Option<&str>, inject_fault: bool, format: TableFormat) -> CliResult {
    if let Some(f) = filter {
        let known = golden::group_names();
        if golden::run(Some(f), false).is_empty() && !known.iter().any(|g| g.contains(f)) {
            return Err(CliError::Usage(format!("no golden case matches {f:?}; groups: {}", known.join(", "))));
        }
    }
    let rows = golden::run(filter, inject_fault);
    match format {
        TableFormat::Table => println!("{}", golden::table(&rows)),
        TableFormat::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                passed: bool,
                cases: &'a [golden::Row],
            }
            emit(Out { passed: rows.iter().all(|r| r.ok), cases: &rows })?
        }
    }
    if rows.iter().all(|r| r.ok) {
        Ok(())
    } else {
        Err(CliError::Mismatch)
    }
}

fn dispatch(cli: Cli) -> CliResult {
    let file = FileConfig::load(cli.config.as_deref())?;
    match cli.command {
        Command::Collapse { family, partition } => collapse(&family, &partition),
        Command::Dual { map, family, partition, unchecked } => dual(&map, &family, &partition, unchecked),
        Command::Infchar(a) => infchar(&a),
        Command::Levi { lie_type, vector } => levi(&lie_type, &vector),
        Command::Induce { ambient, levi } => induce(&ambient, &levi),
        Command::CheckMild(a) => check_mild(&a, &file),
        Command::VerifyPaper { filter, inject_fault, format } => verify_paper(filter.as_deref(), inject_fault, format),
        Command::Enumerate { lie_type, vector, lattice, radius_sq, closed, max_points } => {
            enumerate(&lie_type, &vector, &lattice, &radius_sq, closed, max_points, &file)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    // Panic messages would otherwise interleave with the JSON error object.
    std::panic::set_hook(Box::new(|_| {}));
    match catch_unwind(AssertUnwindSafe(|| dispatch(cli))) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError::Usage(m))) => {
            eprintln!("error: {m}");
            ExitCode::from(64)
        }
        Ok(Err(CliError::Mismatch)) => ExitCode::from(1),
        Ok(Err(CliError::BatchErrors)) => ExitCode::from(2),
        Ok(Err(e @ CliError::Domain(_))) => {
            let _ = emit(serde_json::json!({ "error": ErrorBody::of(&e) }));
            ExitCode::from(2)
        }
        Ok(Err(e @ CliError::Io(_))) => {
            let _ = emit(serde_json::json!({ "error": ErrorBody::of(&e) }));
            ExitCode::from(1)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "internal error".into());
            let _ = emit(serde_json::json!({ "error": { "kind": "internal", "message": msg } }));
            ExitCode::from(1)
        }
    }
}
