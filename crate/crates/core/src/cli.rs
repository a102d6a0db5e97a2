//! Command-line front end: argument definitions, the report document and
//! the four commands. Commands return a [`CmdOutput`] instead of printing so
//! they can be driven from tests.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 the input does
//! not build as a biFrobenius algebra or some applicable check fails.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algcoalg::{convolution_inverse, ConvolutionInverse, LinearEndo};
use crate::bifrob::{
    contracted_integral_condition, full_report, modularity, semisimplicity_verdict, trace_nakayama,
    trace_s2, BiFrobeniusAlgebra, BuildError, Verdict,
};
use crate::field::{FieldSpec, Scalar};
use crate::file::{self, AlgebraFile, LoadedInput};
use crate::fixtures;
use crate::linalg::Matrix;
use crate::report::{Outcome, VerificationReport, Witness, WitnessValue};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bifrob", version, about = "Exact verification of biFrobenius algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct InputOptions {
    /// Reinterpret a file over Q in F_p.
    #[arg(long, value_name = "P")]
    pub field_override: Option<u64>,
    /// Print nothing; only the exit code matters.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and run every applicable check; exit 0 iff all pass.
    Check {
        path: PathBuf,
        #[command(flatten)]
        opts: InputOptions,
    },
    /// Full report with derived data, check ledger and summary.
    Report {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        opts: InputOptions,
    },
    /// Convolution inverse of the identity map, or "none".
    ConvInverse {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        opts: InputOptions,
    },
    /// Built-in examples.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixturesAction {
    List {
        #[arg(long, default_value_t = 0)]
        characteristic: u64,
    },
    Emit {
        name: String,
        #[arg(long, default_value_t = 0)]
        characteristic: u64,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CmdOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, stderr: String) -> Self {
        CmdOutput {
            code,
            stdout: String::new(),
            stderr,
        }
    }

    fn quieted(mut self, quiet: bool) -> Self {
        if quiet {
            self.stdout.clear();
            self.stderr.clear();
        }
        self
    }
}

pub fn run(cli: Cli) -> CmdOutput {
    match cli.command {
        Command::Check { path, opts } => cmd_check(&path, &opts),
        Command::Report { path, format, opts } => cmd_report(&path, format, &opts),
        Command::ConvInverse { path, format, opts } => cmd_conv_inverse(&path, format, &opts),
        Command::Fixtures { action } => cmd_fixtures(action),
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CmdOutput> {
    std::fs::read(path)
        .map_err(|e| CmdOutput::error(EXIT_INPUT, format!("cannot read {}: {e}\n", path.display())))
}

pub fn cmd_check(path: &Path, opts: &InputOptions) -> CmdOutput {
    match read(path) {
        Ok(bytes) => check_source(&bytes, opts),
        Err(out) => out.quieted(opts.quiet),
    }
}

pub fn cmd_report(path: &Path, format: Format, opts: &InputOptions) -> CmdOutput {
    match read(path) {
        Ok(bytes) => report_source(&bytes, format, opts),
        Err(out) => out.quieted(opts.quiet),
    }
}

pub fn cmd_conv_inverse(path: &Path, format: Format, opts: &InputOptions) -> CmdOutput {
    match read(path) {
        Ok(bytes) => conv_inverse_source(&bytes, format, opts),
        Err(out) => out.quieted(opts.quiet),
    }
}

fn load(bytes: &[u8], opts: &InputOptions) -> Result<LoadedInput, CmdOutput> {
    let fail = |msg: String| CmdOutput::error(EXIT_INPUT, format!("parse error: {msg}\n"));
    let text = std::str::from_utf8(bytes).map_err(|e| fail(format!("input is not UTF-8: {e}")))?;
    file::parse(text)
        .and_then(|f| f.load(opts.field_override))
        .map_err(|e| fail(e.to_string()))
}

fn build(input: &LoadedInput) -> Result<BiFrobeniusAlgebra, BuildError> {
    BiFrobeniusAlgebra::build(
        input.algebra.clone(),
        input.coalgebra.clone(),
        input.integral.clone(),
        input.cointegral.clone(),
    )
}

fn build_failure(e: &BuildError) -> String {
    format!("build failed [{}]: {e}\n", e.invariant())
}

pub fn check_source(bytes: &[u8], opts: &InputOptions) -> CmdOutput {
    let input = match load(bytes, opts) {
        Ok(i) => i,
        Err(out) => return out.quieted(opts.quiet),
    };
    let b = match build(&input) {
        Ok(b) => b,
        Err(e) => return CmdOutput::error(EXIT_FAILED, build_failure(&e)).quieted(opts.quiet),
    };
    let report = full_report(&b);
    let (pass, fail, skip) = tally(&report);
    let mut out = String::new();
    for e in report.failures() {
        let w = e.witness().expect("failed entries carry a witness");
        writeln!(out, "[FAIL] {} {w}", e.id).unwrap();
    }
    let code = if fail == 0 {
        writeln!(out, "ok: {pass} passed, {skip} skipped").unwrap();
        EXIT_OK
    } else {
        writeln!(out, "FAILED: {fail} failed, {pass} passed, {skip} skipped").unwrap();
        EXIT_FAILED
    };
    CmdOutput {
        code,
        stdout: out,
        stderr: String::new(),
    }
    .quieted(opts.quiet)
}

fn tally(r: &VerificationReport) -> (usize, usize, usize) {
    r.entries.iter().fold((0, 0, 0), |(p, f, s), e| match e.outcome {
        Outcome::Pass => (p + 1, f, s),
        Outcome::Fail(_) => (p, f + 1, s),
        Outcome::Skipped(_) => (p, f, s + 1),
    })
}

pub fn report_source(bytes: &[u8], format: Format, opts: &InputOptions) -> CmdOutput {
    let input = match load(bytes, opts) {
        Ok(i) => i,
        Err(out) => return out.quieted(opts.quiet),
    };
    let doc = report_document(bytes, &input);
    let stdout = match format {
        Format::Json => render_json(&doc),
        Format::Text => render_text(&doc),
    };
    CmdOutput::ok(stdout).quieted(opts.quiet)
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("values serialize");
    s.push('\n');
    s
}

fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

/// Row-major; column `j` holds the image of `e_j`.
fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_json(m.row(i))).collect())
}

fn witness_value_json(v: &WitnessValue) -> Value {
    match v {
        WitnessValue::Scalar(s) => scalar_json(s),
        WitnessValue::Vector(v) => vector_json(v),
        WitnessValue::Matrix(m) => matrix_json(m),
        WitnessValue::Text(t) => Value::String(t.clone()),
    }
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "indices": w.indices,
        "lhs": witness_value_json(&w.lhs),
        "rhs": witness_value_json(&w.rhs),
    })
}

fn checks_json(r: &VerificationReport) -> Value {
    Value::Array(
        r.entries
            .iter()
            .map(|e| match &e.outcome {
                Outcome::Pass => json!({"id": e.id, "status": "pass"}),
                Outcome::Fail(w) => json!({"id": e.id, "status": "fail", "witness": witness_json(w)}),
                Outcome::Skipped(reason) => {
                    json!({"id": e.id, "status": "skipped", "reason": reason})
                }
            })
            .collect(),
    )
}

fn conv_inverse_json(c: &ConvolutionInverse) -> Value {
    match c {
        ConvolutionInverse::TwoSided(g) => json!({"kind": "two-sided", "matrix": matrix_json(g.matrix())}),
        ConvolutionInverse::OneSidedOnly { right, left } => {
            json!({"kind": "one-sided", "right": right, "left": left})
        }
        ConvolutionInverse::NotInvertible => json!({"kind": "none"}),
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// The full report as a JSON value. Keys are sorted on serialization.
pub fn report_document(bytes: &[u8], input: &LoadedInput) -> Value {
    let mut doc = json!({
        "tool": {"name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION")},
        "input": {"name": input.name, "sha256": sha256_hex(bytes)},
        "field": input.field.to_string(),
        "characteristic": input.field.characteristic(),
        "dim": input.algebra.dim(),
        "basis": input.algebra.basis_names(),
    });
    let obj = doc.as_object_mut().expect("object");
    match build(input) {
        Err(e) => {
            obj.insert(
                "build".into(),
                json!({
                    "ok": false,
                    "invariant": e.invariant(),
                    "error": e.to_string(),
                    "witness": e.witness().map(witness_json),
                }),
            );
            obj.insert(
                "integral".into(),
                input.integral.as_deref().map(vector_json).unwrap_or(Value::Null),
            );
            obj.insert(
                "cointegral".into(),
                input
                    .cointegral
                    .as_ref()
                    .map(|f| vector_json(&f.0))
                    .unwrap_or(Value::Null),
            );
            obj.insert("derived".into(), Value::Null);
            obj.insert("checks".into(), json!([]));
            obj.insert(
                "summary".into(),
                json!({"is_bf": false, "all_checks_passed": false}),
            );
        }
        Ok(b) => {
            obj.insert("build".into(), json!({"ok": true}));
            obj.insert("integral".into(), vector_json(b.integral()));
            obj.insert("cointegral".into(), vector_json(&b.cointegral().0));
            let id = LinearEndo::identity(b.field(), b.dim());
            obj.insert(
                "derived".into(),
                json!({
                    "antipode": matrix_json(b.antipode().matrix()),
                    "antipode_inverse": matrix_json(b.antipode_inverse().matrix()),
                    "modular_element": vector_json(b.modular_element()),
                    "modular_element_inverse": vector_json(b.modular_element_inverse()),
                    "modular_function": vector_json(&b.modular_function().0),
                    "modular_function_inverse": vector_json(&b.modular_function_inverse().0),
                    "left_integral": vector_json(b.left_integral()),
                    "left_cointegral": vector_json(&b.left_cointegral().0),
                    "nakayama": matrix_json(b.nakayama().matrix()),
                    "conakayama": matrix_json(b.conakayama().matrix()),
                    "convolution_inverse_of_identity": conv_inverse_json(
                        &convolution_inverse(b.coalgebra(), b.algebra(), &id)
                    ),
                }),
            );
            let report = full_report(&b);
            obj.insert("checks".into(), checks_json(&report));
            obj.insert("summary".into(), summary_json(&b, &report));
        }
    }
    doc
}

fn verdict_json(v: Verdict) -> Value {
    Value::String(v.as_str().into())
}

fn summary_json(b: &BiFrobeniusAlgebra, report: &VerificationReport) -> Value {
    let m = modularity(b);
    let s2 = trace_s2(b);
    let tn = trace_nakayama(b);
    let (holds, value) = contracted_integral_condition(b);
    let (pass, fail, skip) = tally(report);
    json!({
        "is_bf": true,
        "is_sbf": b.is_sbf(),
        "unimodular": m.unimodular,
        "counimodular": m.counimodular,
        "antipode_square_is_identity": b.antipode().pow(2).is_identity(),
        "semisimple": verdict_json(semisimplicity_verdict(b.algebra())),
        "cosemisimple": verdict_json(semisimplicity_verdict(&b.coalgebra().dual_algebra())),
        "contracted_integral_condition": {"holds": holds, "value": vector_json(&value)},
        "alpha_of_a": scalar_json(&b.modular_function().apply(b.modular_element())),
        "eps_t": scalar_json(&b.eps(b.integral())),
        "phi_one": scalar_json(&b.phi(&b.one())),
        "traces": {
            "antipode_square": scalar_json(&s2.trace),
            "phi_of_s_star_id_t": scalar_json(&s2.phi_of_convolution),
            "eps_t_phi_one": scalar_json(&s2.eps_t_phi_one),
            "nakayama": scalar_json(&tn.trace_nakayama),
            "nakayama_formula": scalar_json(&tn.nakayama_formula),
            "conakayama": scalar_json(&tn.trace_conakayama),
            "conakayama_formula": scalar_json(&tn.conakayama_formula),
            "dimension": scalar_json(&tn.dimension),
            "dimension_formula": scalar_json(&tn.dimension_formula),
        },
        "checks_passed": pass,
        "checks_failed": fail,
        "checks_skipped": skip,
        "all_checks_passed": fail == 0,
    })
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(text_value).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Human-readable rendering of [`report_document`].
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    let get = |k: &str| &doc[k];
    writeln!(
        out,
        "{} {} report for {}",
        text_value(&doc["tool"]["name"]),
        text_value(&doc["tool"]["version"]),
        text_value(&doc["input"]["name"])
    )
    .unwrap();
    writeln!(out, "input sha256: {}", text_value(&doc["input"]["sha256"])).unwrap();
    writeln!(
        out,
        "field: {}   dim: {}   basis: {}",
        text_value(get("field")),
        text_value(get("dim")),
        text_value(get("basis"))
    )
    .unwrap();
    if get("build")["ok"] == Value::Bool(false) {
        writeln!(out, "build: FAILED [{}]", text_value(&get("build")["invariant"])).unwrap();
        writeln!(out, "  {}", text_value(&get("build")["error"])).unwrap();
        return out;
    }
    writeln!(out, "integral t: {}", text_value(get("integral"))).unwrap();
    writeln!(out, "cointegral phi: {}", text_value(get("cointegral"))).unwrap();
    writeln!(out, "\nderived data (matrix columns are images of basis vectors):").unwrap();
    if let Value::Object(derived) = get("derived") {
        for (k, v) in derived {
            let shown = match v {
                Value::Object(o) => match o.get("matrix") {
                    Some(m) => text_value(m),
                    None => text_value(&o["kind"]),
                },
                other => text_value(other),
            };
            writeln!(out, "  {k}: {shown}").unwrap();
        }
    }
    writeln!(out, "\nchecks:").unwrap();
    if let Value::Array(checks) = get("checks") {
        for c in checks {
            let id = text_value(&c["id"]);
            match c["status"].as_str() {
                Some("pass") => writeln!(out, "  [pass] {id}").unwrap(),
                Some("fail") => {
                    let w = &c["witness"];
                    writeln!(
                        out,
                        "  [FAIL] {id} at {}: lhs = {}, rhs = {}",
                        text_value(&w["indices"]),
                        text_value(&w["lhs"]),
                        text_value(&w["rhs"])
                    )
                    .unwrap()
                }
                _ => writeln!(out, "  [skip] {id} (skipped: {})", text_value(&c["reason"])).unwrap(),
            }
        }
    }
    writeln!(out, "\nsummary:").unwrap();
    if let Value::Object(summary) = get("summary") {
        for (k, v) in summary {
            match v {
                Value::Object(inner) => {
                    writeln!(out, "  {k}:").unwrap();
                    for (ik, iv) in inner {
                        writeln!(out, "    {ik}: {}", text_value(iv)).unwrap();
                    }
                }
                other => writeln!(out, "  {k}: {}", text_value(other)).unwrap(),
            }
        }
    }
    out
}

/// `c₀ e₀ + c₁ e₁ + ...` with zero terms dropped.
pub fn format_element(v: &[Scalar], basis: &[String]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(basis)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, b)| {
            if c.is_one() {
                b.clone()
            } else {
                format!("({c})*{b}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn conv_inverse_source(bytes: &[u8], format: Format, opts: &InputOptions) -> CmdOutput {
    let input = match load(bytes, opts) {
        Ok(i) => i,
        Err(out) => return out.quieted(opts.quiet),
    };
    for r in [input.algebra.check(), input.coalgebra.check()] {
        if let Some(e) = r.failures().next() {
            let w = e.witness().expect("failed entries carry a witness");
            return CmdOutput::error(EXIT_FAILED, format!("{} fails {w}\n", e.id)).quieted(opts.quiet);
        }
    }
    let id = LinearEndo::identity(input.field, input.algebra.dim());
    let inv = convolution_inverse(&input.coalgebra, &input.algebra, &id);
    let stdout = match format {
        Format::Json => render_json(&json!({
            "input": {"name": input.name, "sha256": sha256_hex(bytes)},
            "convolution_inverse_of_identity": conv_inverse_json(&inv),
        })),
        Format::Text => {
            let basis = input.algebra.basis_names();
            match &inv {
                ConvolutionInverse::TwoSided(g) => {
                    let mut s = String::new();
                    for j in 0..g.dim() {
                        writeln!(s, "inverse({}) = {}", basis[j], format_element(&g.image(j), basis)).unwrap();
                    }
                    writeln!(s, "matrix: {}", text_value(&matrix_json(g.matrix()))).unwrap();
                    s
                }
                ConvolutionInverse::OneSidedOnly { right, left } => {
                    format!("none (one-sided solutions only: right={right}, left={left})\n")
                }
                ConvolutionInverse::NotInvertible => "none\n".into(),
            }
        }
    };
    CmdOutput::ok(stdout).quieted(opts.quiet)
}

pub fn cmd_fixtures(action: FixturesAction) -> CmdOutput {
    let field = |c: u64| {
        FieldSpec::from_characteristic(c).map_err(|e| CmdOutput::error(EXIT_INPUT, format!("{e}\n")))
    };
    match action {
        FixturesAction::List { characteristic } => {
            let field = match field(characteristic) {
                Ok(f) => f,
                Err(out) => return out,
            };
            let mut s = String::new();
            for d in fixtures::catalog(field) {
                writeln!(s, "{}\t{}\t{}", d.name, d.field, d.notes).unwrap();
            }
            CmdOutput::ok(s)
        }
        FixturesAction::Emit {
            name,
            characteristic,
            output,
        } => {
            let field = match field(characteristic) {
                Ok(f) => f,
                Err(out) => return out,
            };
            let fx = match fixtures::by_name(&name, field) {
                Ok(fx) => fx,
                Err(e @ fixtures::FixtureError::Build { .. }) => {
                    return CmdOutput::error(EXIT_FAILED, format!("{e}\n"))
                }
                Err(e) => return CmdOutput::error(EXIT_INPUT, format!("{e}\n")),
            };
            let text = file::render(&AlgebraFile::from_fixture(&fx));
            match output {
                None => CmdOutput::ok(text),
                Some(path) => match std::fs::write(&path, text) {
                    Ok(()) => CmdOutput::ok(String::new()),
                    Err(e) => CmdOutput::error(
                        EXIT_INPUT,
                        format!("cannot write {}: {e}\n", path.display()),
                    ),
                },
            }
        }
    }
}

/// Canonical file text for a registered fixture.
pub fn emit_fixture(name: &str, field: FieldSpec) -> Result<String, fixtures::FixtureError> {
    fixtures::by_name(name, field).map(|fx| file::render(&AlgebraFile::from_fixture(&fx)))
}
