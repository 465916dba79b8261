use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lgv_reciprocity::netfile::{MatrixFile, NetworkFile};
use lgv_reciprocity::{
    check_dyck_reciprocity, check_schur_reciprocity, d_value, format_rational,
    oracle_nonintersecting_sum, parse_rational, proctor_count, schur_eval, Engine, EvalPoint,
    Partition, PlanarNetwork, Rational, RationalPolynomial, SkewShape, SubsetIndex,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "lgvr",
    version,
    about = "Exact non-intersecting path counts and their reciprocity checks"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a network file for structural problems.
    Validate(FileArgs),
    /// Print the path matrix of a network.
    PathMatrix(FileArgs),
    /// f(I, J; n) on the n-fold glued network (any integer n).
    Count(CountArgs),
    /// The linear recurrence satisfied by f(I, J; n).
    Recurrence(PairArgs),
    /// Compare f(I, J; -n) with its complementary count for n = 1..=nmax.
    Check(CheckArgs),
    /// f(I, J; n) by brute-force enumeration of non-intersecting tuples.
    Oracle(OracleArgs),
    /// d(m, k; n): m-fans of (2k+1)-bounded Dyck paths of semilength n.
    Dyck(DyckArgs),
    /// Compare d(m, k; -n) with d(k, m; n + 1) for n = 1..=nmax.
    DyckCheck(DyckCheckArgs),
    /// The skew Schur function s_{λ/μ} at z repeated n times.
    Schur(SchurArgs),
    /// Compare s_{λ/μ}(z^{-n}) with the transposed shape at z reversed.
    SchurCheck(SchurCheckArgs),
    /// Proctor's product count of plane partitions of staircase shape.
    Proctor(ProctorArgs),
}

#[derive(Args)]
struct FileArgs {
    /// Network JSON file.
    file: PathBuf,
}

#[derive(Args)]
struct PairArgs {
    /// Network JSON file.
    file: PathBuf,
    /// 1-based source indices, comma separated (may be empty).
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    sources: IndexList,
    /// 1-based sink indices, comma separated (may be empty).
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    sinks: IndexList,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Number of glued copies; negative values use the reciprocity extension.
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Largest n to check.
    #[arg(long)]
    nmax: u64,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Number of glued copies.
    #[arg(long)]
    n: u64,
}

#[derive(Args)]
struct DyckArgs {
    /// Number of paths in the fan.
    #[arg(long)]
    m: usize,
    /// Height bound parameter; paths stay at or below 2k+1.
    #[arg(long)]
    k: usize,
    /// Semilength; negative values use the reciprocity extension.
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
}

#[derive(Args)]
struct DyckCheckArgs {
    /// Number of paths in the fan.
    #[arg(long)]
    m: usize,
    /// Height bound parameter; paths stay at or below 2k+1.
    #[arg(long)]
    k: usize,
    /// Largest n to check.
    #[arg(long)]
    nmax: u64,
}

#[derive(Args)]
struct ShapeArgs {
    /// Outer partition λ, comma separated.
    #[arg(long, value_parser = parse_list)]
    lambda: IndexList,
    /// Inner partition μ, comma separated.
    #[arg(long, value_parser = parse_list, default_value = "")]
    mu: IndexList,
    /// Evaluation point, comma separated rationals such as 1,1/2.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    z: EvalPoint,
}

#[derive(Args)]
struct SchurArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Number of repetitions of z; negative values use the reciprocity extension.
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
}

#[derive(Args)]
struct SchurCheckArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Largest n to check.
    #[arg(long)]
    nmax: u64,
}

#[derive(Args)]
struct ProctorArgs {
    /// Size of the staircase shape.
    #[arg(long)]
    n: usize,
    /// Largest allowed entry.
    #[arg(long)]
    m: usize,
}

/// Comma-separated nonnegative integers, parsed as one flag value.
#[derive(Clone, Debug)]
struct IndexList(Vec<usize>);

/// The empty string is the empty list.
fn parse_list(text: &str) -> Result<IndexList, String> {
    if text.trim().is_empty() {
        return Ok(IndexList(Vec::new()));
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| format!("`{part}`: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(IndexList)
}

fn parse_point(text: &str) -> Result<EvalPoint, String> {
    if text.trim().is_empty() {
        return Ok(EvalPoint::default());
    }
    text.split(',')
        .map(|part| parse_rational(part.trim()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map(EvalPoint::new)
}

/// Text and JSON renderings of one command's result.
struct Report {
    text: String,
    json: Value,
    passed: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            passed: true,
        }
    }
}

type CmdResult = Result<Report, String>;

fn r(value: &Rational) -> Value {
    Value::String(format_rational(value))
}

fn rationals(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(r).collect())
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<PlanarNetwork, String> {
    lgv_reciprocity::parse_network_file(&read(path)?)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn subsets(net: &PlanarNetwork, pair: &PairArgs) -> Result<(SubsetIndex, SubsetIndex), String> {
    let m = net.boundary_size();
    let i = SubsetIndex::from_unsorted(pair.sources.0.clone(), m)
        .map_err(|e| format!("--sources: {e}"))?;
    let j =
        SubsetIndex::from_unsorted(pair.sinks.0.clone(), m).map_err(|e| format!("--sinks: {e}"))?;
    if i.len() != j.len() {
        return Err(format!(
            "--sources has {} entries but --sinks has {}",
            i.len(),
            j.len()
        ));
    }
    Ok((i, j))
}

fn shape(args: &ShapeArgs) -> Result<SkewShape, String> {
    let outer = Partition::new(args.lambda.0.clone()).map_err(|e| format!("--lambda: {e}"))?;
    let inner = Partition::new(args.mu.0.clone()).map_err(|e| format!("--mu: {e}"))?;
    SkewShape::new(outer, inner).map_err(|e| e.to_string())
}

fn polynomial_json(p: &RationalPolynomial) -> Value {
    rationals(p.coefficients())
}

fn validate(args: &FileArgs) -> CmdResult {
    let text = read(&args.file)?;
    let file: NetworkFile = serde_json::from_str(&text)
        .map_err(|e| format!("{}: parse error: {e}", args.file.display()))?;
    let spec = file
        .to_spec()
        .map_err(|e| format!("{}: {e}", args.file.display()))?;
    let report = spec.validate();
    let violations: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    let json = json!({
        "valid": report.is_valid(),
        "vertices": spec.vertices.len(),
        "edges": spec.edges.len(),
        "sources": spec.sources.len(),
        "sinks": spec.sinks.len(),
        "violations": violations,
    });
    let text = if report.is_valid() {
        format!(
            "valid: {} vertices, {} edges, {} source/sink pairs\n",
            spec.vertices.len(),
            spec.edges.len(),
            spec.sources.len()
        )
    } else {
        let mut out = String::from("invalid:\n");
        for v in &violations {
            out.push_str(&format!("  {v}\n"));
        }
        out
    };
    Ok(Report {
        text,
        json,
        passed: report.is_valid(),
    })
}

fn path_matrix(args: &FileArgs) -> CmdResult {
    let pm = load(&args.file)?.path_matrix();
    let json = serde_json::to_value(MatrixFile::from_matrix(&pm)).expect("plain data serializes");
    Ok(Report::ok(pm.to_string(), json))
}

fn count(args: &CountArgs) -> CmdResult {
    let net = load(&args.pair.file)?;
    let (i, j) = subsets(&net, &args.pair)?;
    let value = Engine::new(&net)
        .f_at(&i, &j, args.n)
        .map_err(|e| e.to_string())?;
    let json =
        json!({"sources": i.elements(), "sinks": j.elements(), "n": args.n, "value": r(&value)});
    Ok(Report::ok(format!("{}\n", format_rational(&value)), json))
}

fn recurrence(args: &PairArgs) -> CmdResult {
    let net = load(&args.file)?;
    let (i, j) = subsets(&net, args)?;
    let rec = Engine::new(&net)
        .f_recurrence(&i, &j)
        .map_err(|e| e.to_string())?;
    let gf = rec.generating_function().map_err(|e| e.to_string())?;
    let join = |vs: &[Rational]| vs.iter().map(format_rational).collect::<Vec<_>>().join(" ");
    let text = format!(
        "order: {}\nalpha: {}\ninitial: {}\nP(x) = {}\nQ(x) = {}\n",
        rec.order(),
        join(rec.coefficients()),
        join(rec.initial_values()),
        gf.numerator,
        gf.denominator
    );
    let json = json!({
        "sources": i.elements(),
        "sinks": j.elements(),
        "order": rec.order(),
        "alpha": rationals(rec.coefficients()),
        "initial": rationals(rec.initial_values()),
        "numerator": polynomial_json(&gf.numerator),
        "denominator": polynomial_json(&gf.denominator),
    });
    Ok(Report::ok(text, json))
}

fn check(args: &CheckArgs) -> CmdResult {
    let net = load(&args.pair.file)?;
    let (i, j) = subsets(&net, &args.pair)?;
    let engine = Engine::new(&net).named(args.pair.file.display().to_string());
    let report = engine
        .check_reciprocity(&i, &j, args.nmax)
        .map_err(|e| e.to_string())?;
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|rec| {
            json!({
                "n": rec.n,
                "lhs": r(&rec.lhs),
                "sign": r(&rec.sign),
                "det_power": r(&rec.det_power),
                "complementary": r(&rec.complementary),
                "rhs": r(&rec.rhs),
                "pass": rec.pass,
            })
        })
        .collect();
    let json = json!({
        "network": report.network,
        "sources": i.elements(),
        "sinks": j.elements(),
        "det": r(engine.det()),
        "n_max": args.nmax,
        "passed": report.passed(),
        "records": records,
    });
    Ok(Report {
        text: format!("{report}\n"),
        json,
        passed: report.passed(),
    })
}

fn oracle(args: &OracleArgs) -> CmdResult {
    let net = load(&args.pair.file)?;
    let (i, j) = subsets(&net, &args.pair)?;
    let glued = net.glue_power(args.n as usize);
    let value = oracle_nonintersecting_sum(&glued, &i, &j).map_err(|e| e.to_string())?;
    let json =
        json!({"sources": i.elements(), "sinks": j.elements(), "n": args.n, "value": r(&value)});
    Ok(Report::ok(format!("{}\n", format_rational(&value)), json))
}

fn dyck(args: &DyckArgs) -> CmdResult {
    let value = d_value(args.m, args.k, args.n).map_err(|e| e.to_string())?;
    let json = json!({"m": args.m, "k": args.k, "n": args.n, "value": r(&value)});
    Ok(Report::ok(format!("{}\n", format_rational(&value)), json))
}

fn dyck_check(args: &DyckCheckArgs) -> CmdResult {
    let report = check_dyck_reciprocity(args.m, args.k, args.nmax).map_err(|e| e.to_string())?;
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|rec| {
            json!({
                "n": rec.n,
                "backward": r(&rec.backward),
                "inverse_power": r(&rec.inverse_power),
                "swapped": r(&rec.swapped),
                "pass": rec.pass,
            })
        })
        .collect();
    let json = json!({"m": args.m, "k": args.k, "n_max": args.nmax, "passed": report.passed(), "records": records});
    Ok(Report {
        text: format!("{report}\n"),
        json,
        passed: report.passed(),
    })
}

fn shape_json(s: &SkewShape, z: &EvalPoint) -> (Value, Value, Value) {
    (
        json!(s.outer().parts()),
        json!(s.inner().parts()),
        rationals(z.values()),
    )
}

fn schur(args: &SchurArgs) -> CmdResult {
    let s = shape(&args.shape)?;
    let value = schur_eval(&s, &args.shape.z, args.n).map_err(|e| e.to_string())?;
    let (lambda, mu, z) = shape_json(&s, &args.shape.z);
    let json = json!({"lambda": lambda, "mu": mu, "z": z, "n": args.n, "value": r(&value)});
    Ok(Report::ok(format!("{}\n", format_rational(&value)), json))
}

fn schur_check(args: &SchurCheckArgs) -> CmdResult {
    let s = shape(&args.shape)?;
    let report =
        check_schur_reciprocity(&s, &args.shape.z, args.nmax).map_err(|e| e.to_string())?;
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|rec| {
            json!({
                "n": rec.n,
                "lhs": r(&rec.lhs),
                "lhs_backward": r(&rec.lhs_backward),
                "sign": r(&rec.sign),
                "transposed": r(&rec.transposed),
                "transposed_unreversed": r(&rec.transposed_unreversed),
                "pass": rec.pass,
            })
        })
        .collect();
    let (lambda, mu, z) = shape_json(&s, &args.shape.z);
    let json = json!({
        "lambda": lambda,
        "mu": mu,
        "z": z,
        "n_max": args.nmax,
        "passed": report.passed(),
        "records": records,
    });
    Ok(Report {
        text: format!("{report}\n"),
        json,
        passed: report.passed(),
    })
}

fn proctor(args: &ProctorArgs) -> CmdResult {
    if args.n == 0 {
        return Err("--n must be at least 1".into());
    }
    let value = proctor_count(args.n, args.m);
    let json = json!({"n": args.n, "m": args.m, "value": r(&value)});
    Ok(Report::ok(format!("{}\n", format_rational(&value)), json))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate(a) => validate(a),
        Command::PathMatrix(a) => path_matrix(a),
        Command::Count(a) => count(a),
        Command::Recurrence(a) => recurrence(a),
        Command::Check(a) => check(a),
        Command::Oracle(a) => oracle(a),
        Command::Dyck(a) => dyck(a),
        Command::DyckCheck(a) => dyck_check(a),
        Command::Schur(a) => schur(a),
        Command::SchurCheck(a) => schur_check(a),
        Command::Proctor(a) => proctor(a),
    };
    match result {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("json values serialize")
                );
            } else {
                print!("{}", report.text);
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
