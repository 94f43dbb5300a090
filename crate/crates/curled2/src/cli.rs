//! Argument parsing and output rendering. Every subcommand is a thin
//! adapter over the core library.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use curled2_core::classify::{canonical_matrix, classify};
use curled2_core::iso::{self, find_isomorphism};
use curled2_core::poly::{coeffs_in_x_basis, ec_defect, MultiPoly, X_MONOMIALS};
use curled2_core::verify::{enumerate_ecc, partition_classes, VerifyConfig, DEFAULT_SEED};
use curled2_core::{EcMethod, Error, FieldSpec, StructureMatrix};
use serde_json::{json, Map, Value};

use crate::report::VerificationReport;

/// Process result: exit code and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "curled2", version, about = "Classify two-dimensional endo-commutative curled algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the properties of an algebra.
    Check(AlgebraArgs),
    /// Canonical form and basis-change witness of an EC curled algebra.
    Classify(AlgebraArgs),
    /// Search GL2 for an isomorphism between two algebras.
    Iso(IsoArgs),
    /// Family sizes and isomorphism classes of curled EC C-forms.
    Enumerate(Common),
    /// Run every verification check for a field.
    Verify(VerifyArgs),
    /// Coefficients of x²y² - (xy)² in the nine degree-(2,2) monomials.
    Derive(AlgebraArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
struct Common {
    /// F<p> for a prime p <= 97, F4, or Q.
    #[arg(long)]
    field: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    #[command(flatten)]
    common: Common,
    /// `[[a1,b1],[a2,b2],[a3,b3],[a4,b4]]` or `C(a,b,c,d;eps,delta)`.
    #[arg(long)]
    algebra: String,
}

#[derive(Debug, Args)]
struct IsoArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Seed for the sampled checks.
    #[arg(long, env = "CURLED2_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Record per-check wall-clock times (makes output run-dependent).
    #[arg(long)]
    timings: bool,
}

/// A command result and its exit code. `text` overrides the generic
/// rendering of `value`.
struct Rendered {
    value: Value,
    text: Option<String>,
    code: u8,
}

impl Rendered {
    fn ok(value: Value) -> Self {
        Rendered {
            value,
            text: None,
            code: EXIT_OK,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotClassifiable(_) => EXIT_FAILED,
        Error::Internal(_) => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, Error> {
    s.parse()
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Output { code, stdout, stderr };
        }
    };
    let (format, result) = match &cli.command {
        Command::Check(a) => (a.common.format, cmd_check(a)),
        Command::Classify(a) => (a.common.format, cmd_classify(a)),
        Command::Iso(a) => (a.common.format, cmd_iso(a)),
        Command::Enumerate(c) => (c.format, cmd_enumerate(c)),
        Command::Verify(v) => (v.common.format, cmd_verify(v)),
        Command::Derive(a) => (a.common.format, cmd_derive(a)),
    };
    match result {
        Ok(r) => Output {
            code: r.code,
            stdout: r.text.unwrap_or_else(|| render(&r.value, format)),
            stderr: String::new(),
        },
        Err(e) => {
            let code = exit_code(&e);
            let value = json!({ "error": e.to_string() });
            Output {
                code,
                stdout: render(&value, format),
                stderr: format!("curled2: {e}\n"),
            }
        }
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("JSON value serialises");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut lines = Vec::new();
            table_lines(v, "", &mut lines);
            let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            lines.iter().map(|(k, val)| format!("{k:<width$}  {val}\n")).collect()
        }
    }
}

fn table_lines(v: &Value, prefix: &str, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                table_lines(val, &key, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
            for (i, val) in items.iter().enumerate() {
                table_lines(val, &format!("{prefix}[{i}]"), out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn parse_algebra(field: FieldSpec, text: &str) -> Result<StructureMatrix, Error> {
    StructureMatrix::parse(field, text)
}

fn cmd_check(args: &AlgebraArgs) -> Result<Rendered, Error> {
    let field = parse_field(&args.common.field)?;
    let a = parse_algebra(field, &args.algebra)?;
    // curledness is undefined in the library's sense over F2
    let curled = match a.is_curled() {
        Ok(c) => Value::Bool(c),
        Err(Error::UnsupportedField { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    let unit = a.find_unit();
    let value = json!({
        "field": field.to_string(),
        "algebra": a.to_string(),
        "curled": curled,
        "endo_commutative": a.is_endo_commutative(EcMethod::Criterion)?,
        "commutative": a.is_commutative(),
        "anticommutative": a.is_anticommutative(),
        "zeropotent": a.is_zeropotent(),
        "associative": a.is_associative(),
        "unital": unit.is_some(),
        "unit": unit.map(|u| u.to_string()),
        "rank": iso::rank(&a),
    });
    Ok(Rendered::ok(value))
}

fn cmd_classify(args: &AlgebraArgs) -> Result<Rendered, Error> {
    let field = parse_field(&args.common.field)?;
    let a = parse_algebra(field, &args.algebra)?;
    let c = classify(&a)?;
    let value = json!({
        "field": field.to_string(),
        "algebra": a.to_string(),
        "label": c.label.to_string(),
        "witness": c.witness.to_string(),
        "canonical": canonical_matrix(&c.label, field).to_string(),
    });
    Ok(Rendered::ok(value))
}

fn cmd_iso(args: &IsoArgs) -> Result<Rendered, Error> {
    let field = parse_field(&args.common.field)?;
    let a = parse_algebra(field, &args.a)?;
    let b = parse_algebra(field, &args.b)?;
    let found = find_isomorphism(&a, &b)?;
    let value = json!({
        "field": field.to_string(),
        "a": a.to_string(),
        "b": b.to_string(),
        "isomorphic": found.is_some(),
        "witness": found.as_ref().map_or_else(|| "none".to_string(), ToString::to_string),
    });
    let code = if found.is_some() { EXIT_OK } else { EXIT_FAILED };
    Ok(Rendered { value, text: None, code })
}

fn cmd_enumerate(args: &Common) -> Result<Rendered, Error> {
    let field = parse_field(&args.field)?;
    let fam = enumerate_ecc(field)?;
    let [s00, s10, s01, s11] = fam.sizes();
    let mut classes: Vec<(String, Value)> = partition_classes(field)?
        .into_iter()
        .map(|c| {
            let label = c.canonical.first().map(ToString::to_string).unwrap_or_else(|| "?".into());
            let v = json!({
                "label": label,
                "representative": c.representative.to_string(),
                "size": c.members.len(),
            });
            (label, v)
        })
        .collect();
    classes.sort_by(|x, y| x.0.cmp(&y.0));
    let value = json!({
        "field": field.to_string(),
        "families": { "ecc00": s00, "ecc10": s10, "ecc01": s01, "ecc11": s11 },
        "total": s00 + s10 + s01 + s11,
        "class_count": classes.len(),
        "classes": classes.into_iter().map(|(_, v)| v).collect::<Vec<_>>(),
    });
    Ok(Rendered::ok(value))
}

fn cmd_verify(args: &VerifyArgs) -> Result<Rendered, Error> {
    let field = parse_field(&args.common.field)?;
    let cfg = VerifyConfig {
        seed: args.seed,
        ..VerifyConfig::default()
    };
    let report = VerificationReport::run(field, &cfg, args.timings)?;
    let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
    // serialised directly to keep the report's field order
    let text = match args.common.format {
        Format::Json => report.to_json() + "\n",
        Format::Table => report.to_table(),
    };
    Ok(Rendered {
        value: Value::Null,
        text: Some(text),
        code,
    })
}

fn monomial_names() -> Vec<String> {
    let one = FieldSpec::Rationals.one();
    X_MONOMIALS
        .iter()
        .map(|e| MultiPoly::monomial(one.clone(), *e).to_string())
        .collect()
}

fn cmd_derive(args: &AlgebraArgs) -> Result<Rendered, Error> {
    let field = parse_field(&args.common.field)?;
    let a = parse_algebra(field, &args.algebra)?;
    let (de, df) = ec_defect(&a);
    let coeffs = |p: &MultiPoly| -> Result<Vec<String>, Error> {
        Ok(coeffs_in_x_basis(p)?.iter().map(ToString::to_string).collect())
    };
    let mut m = Map::new();
    m.insert("field".into(), field.to_string().into());
    m.insert("algebra".into(), a.to_string().into());
    m.insert("monomials".into(), json!(monomial_names()));
    m.insert("e_coefficients".into(), json!(coeffs(&de)?));
    m.insert("f_coefficients".into(), json!(coeffs(&df)?));
    m.insert("endo_commutative".into(), (de.is_zero() && df.is_zero()).into());
    Ok(Rendered::ok(Value::Object(m)))
}
