//! Command-line front end: parameter selection, sequence tables,
//! compose/decompose between the canonical forms, element order, and the
//! verification suites.
//!
//! Output is a pure function of argv: no environment lookups, no color, no
//! timestamps. Field elements cross the boundary as integer encodings.
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation
//! error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use psl2_ogs::decomp::{bn_decompose, matrix_to_ogs, ogs_compose, ogs_to_bn, BnForm, OgsForm};
use psl2_ogs::verify::{run_suite, Suite};
use psl2_ogs::{Field, OgsParams, ProjMatrix, SeqTables};

#[derive(Parser)]
#[command(
    name = "psl2-ogs",
    version,
    about = "Canonical decompositions and recursive sequence tables for PSL2(q)",
    color = clap::ColorChoice::Never
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the selected parameters (p, kappa, modulus, q, t, a, b) as JSON
    Params(ParamsArgs),
    /// Emit the sequence tables as TSV or JSON
    Tables(TablesArgs),
    /// Compose a power-word form (k, ell, x, y) into a matrix
    Compose(ComposeArgs),
    /// Decompose a matrix into both canonical forms
    Decompose(DecomposeArgs),
    /// Order of a matrix in PSL2(q)
    Order(OrderArgs),
    /// Run a verification suite over GF(q)
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FieldArgs {
    /// Field order (a prime power)
    #[arg(long)]
    q: u64,
    /// Override the parameter a (integer encoding)
    #[arg(long)]
    a: Option<u64>,
    /// Override the parameter b (integer encoding; odd q only)
    #[arg(long)]
    b: Option<u64>,
}

impl FieldArgs {
    fn tables(&self) -> Result<SeqTables, String> {
        let field = Field::from_order(self.q).map_err(|e| e.to_string())?;
        let params = OgsParams::select_with(&field, self.a, self.b).map_err(|e| e.to_string())?;
        SeqTables::build(params).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct ParamsArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args)]
struct TablesArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Output format
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComposeArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Power of u(a)s, 0 <= k < t
    #[arg(long)]
    k: u64,
    /// Involution exponent, 0 or 1 (0 in characteristic 2)
    #[arg(long)]
    ell: u8,
    /// Trailing unipotent coordinate (integer encoding)
    #[arg(long)]
    x: u64,
    /// Trailing diagonal coordinate (nonzero integer encoding)
    #[arg(long)]
    y: u64,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Matrix entries m11,m12,m21,m22 as integer encodings
    #[arg(long)]
    matrix: String,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OrderArgs {
    /// Field order (a prime power)
    #[arg(long)]
    q: u64,
    /// Matrix entries m11,m12,m21,m22 as integer encodings
    #[arg(long)]
    matrix: String,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Field order (a prime power)
    #[arg(long)]
    q: u64,
    /// Suite to run
    #[arg(long, default_value = "all")]
    suite: String,
    /// Emit the report as JSON instead of one line per check
    #[arg(long)]
    json: bool,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Params(args) => {
            let text = cmd_params(&args.field)?;
            emit(args.out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Tables(args) => {
            let tables = args.field.tables()?;
            let text = match args.format {
                Format::Tsv => tables_tsv(&tables),
                Format::Json => pretty(&tables_json(&tables)),
            };
            emit(args.out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compose(args) => {
            let text = cmd_compose(&args)?;
            emit(args.out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose(args) => {
            let text = cmd_decompose(&args)?;
            emit(args.out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Order(args) => {
            let text = cmd_order(&args)?;
            emit(args.out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let suite = Suite::from_str(&args.suite)?;
            let report = run_suite(args.q, suite).map_err(|e| e.to_string())?;
            let text = if args.json {
                pretty(&report.to_json())
            } else {
                report_lines(&report)
            };
            emit(args.out.as_deref(), &text)?;
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {path:?}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_params(field_args: &FieldArgs) -> Result<String, String> {
    let tables = field_args.tables()?;
    let field = tables.field();
    let mut obj = json!({
        "p": field.p(),
        "kappa": field.kappa(),
        "modulus": field.params().modulus(),
        "q": field.q(),
        "t": tables.t(),
        "a": tables.params().a().encode(),
    });
    if let Some(b) = tables.params().b() {
        obj["b"] = json!(b.encode());
    }
    Ok(pretty(&obj))
}

/// One row per index from -1 to t-1; cells a sequence does not define stay
/// blank.
fn tables_tsv(tables: &SeqTables) -> String {
    let t = tables.t() as i64;
    let odd = !tables.field().char_two();
    let mut out = String::from("index\ta_k\tb_k\talpha\tbeta\tgamma\n");
    for idx in -1..t {
        let a_cell = if idx >= 1 {
            tables.a_k(idx as u64).encode().to_string()
        } else {
            String::new()
        };
        let b_cell = if odd && idx >= 0 {
            tables.b_l(idx as u64).encode().to_string()
        } else {
            String::new()
        };
        let alpha_cell = tables.alpha(idx).encode().to_string();
        let beta_cell = if odd {
            tables.beta(idx).encode().to_string()
        } else {
            String::new()
        };
        let gamma_cell = if odd {
            tables.gamma(idx).encode().to_string()
        } else {
            String::new()
        };
        writeln!(
            out,
            "{idx}\t{a_cell}\t{b_cell}\t{alpha_cell}\t{beta_cell}\t{gamma_cell}"
        )
        .expect("string write");
    }
    out
}

fn indexed_map<'a>(
    first_index: i64,
    values: impl Iterator<Item = &'a psl2_ogs::FieldElement>,
) -> Value {
    let mut map = serde_json::Map::new();
    for (offset, e) in values.enumerate() {
        map.insert((first_index + offset as i64).to_string(), json!(e.encode()));
    }
    Value::Object(map)
}

fn tables_json(tables: &SeqTables) -> Value {
    let mut obj = json!({
        "q": tables.field().q(),
        "t": tables.t(),
        "a": tables.params().a().encode(),
    });
    if let Some(b) = tables.params().b() {
        obj["b"] = json!(b.encode());
    }
    obj["a_seq"] = indexed_map(1, tables.a_seq().iter());
    if let Some(b_seq) = tables.b_seq() {
        obj["b_seq"] = indexed_map(0, b_seq.iter());
    }
    obj["alpha"] = indexed_map(-1, tables.alpha_seq().iter());
    if let Some(beta) = tables.beta_seq() {
        obj["beta"] = indexed_map(-1, beta.iter());
    }
    if let Some(gamma) = tables.gamma_seq() {
        obj["gamma"] = indexed_map(-1, gamma.iter());
    }
    obj
}

fn bn_json(bn: &BnForm) -> Value {
    match bn {
        BnForm::InB { x, y } => json!({ "x": x.encode(), "y": y.encode() }),
        BnForm::OutB { a_tilde, x, y } => {
            json!({ "a": a_tilde.encode(), "x": x.encode(), "y": y.encode() })
        }
    }
}

fn ogs_json(form: &OgsForm) -> Value {
    json!({
        "k": form.k(),
        "ell": form.ell(),
        "x": form.x().encode(),
        "y": form.y().encode(),
    })
}

fn cmd_compose(args: &ComposeArgs) -> Result<String, String> {
    let tables = args.field.tables()?;
    let field = tables.field();
    let x = field.decode(args.x).map_err(|e| e.to_string())?;
    let y = field.decode(args.y).map_err(|e| e.to_string())?;
    let form = OgsForm::new(&tables, args.k, args.ell, x, y).map_err(|e| e.to_string())?;
    let matrix = ogs_compose(&tables, &form).map_err(|e| e.to_string())?;
    let bn = ogs_to_bn(&tables, &form).map_err(|e| e.to_string())?;
    Ok(pretty(&json!({
        "matrix": matrix.encodings(),
        "bn": bn_json(&bn),
    })))
}

fn parse_matrix(field: &Field, text: &str) -> Result<ProjMatrix, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(format!(
            "expected 4 comma-separated entries m11,m12,m21,m22, got {}",
            parts.len()
        ));
    }
    let mut enc = [0u64; 4];
    for (slot, part) in enc.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|e| format!("bad matrix entry '{part}': {e}"))?;
    }
    ProjMatrix::from_encodings(field, enc).map_err(|e| e.to_string())
}

fn cmd_decompose(args: &DecomposeArgs) -> Result<String, String> {
    let tables = args.field.tables()?;
    let matrix = parse_matrix(tables.field(), &args.matrix)?;
    let bn = bn_decompose(&matrix);
    let ogs = matrix_to_ogs(&tables, &matrix).map_err(|e| e.to_string())?;
    Ok(pretty(&json!({
        "bn": bn_json(&bn),
        "ogs": ogs_json(&ogs),
    })))
}

fn cmd_order(args: &OrderArgs) -> Result<String, String> {
    let field = Field::from_order(args.q).map_err(|e| e.to_string())?;
    let matrix = parse_matrix(&field, &args.matrix)?;
    Ok(pretty(&json!({
        "q": args.q,
        "matrix": matrix.encodings(),
        "order": matrix.element_order(),
    })))
}

fn report_lines(report: &psl2_ogs::CheckReport) -> String {
    let mut out = String::new();
    let mut passed = 0;
    let mut failed = 0;
    let mut skipped = 0;
    for check in &report.checks {
        if let Some(reason) = &check.skipped {
            skipped += 1;
            writeln!(out, "SKIP {} ({reason})", check.name).expect("string write");
        } else if check.pass {
            passed += 1;
            writeln!(out, "PASS {}", check.name).expect("string write");
        } else {
            failed += 1;
            let ce = check.counterexample.as_ref().expect("failures carry one");
            writeln!(out, "FAIL {}", check.name).expect("string write");
            writeln!(out, "  inputs:   {}", ce.inputs).expect("string write");
            writeln!(out, "  expected: {}", ce.expected).expect("string write");
            writeln!(out, "  actual:   {}", ce.actual).expect("string write");
        }
    }
    writeln!(
        out,
        "suite {} on GF({}): {} passed, {} failed, {} skipped",
        report.suite, report.q, passed, failed, skipped
    )
    .expect("string write");
    out
}
