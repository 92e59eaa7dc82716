//! Command-line front end: validate documents, derive twist pairs and
//! canonical elements, print braiding matrices, emit duals, tensor
//! products and flavor conversions.
//!
//! Exit codes: 0 all checks pass, 1 an axiom or identity fails,
//! 2 parse or shape error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dqha::algebra::{build_variant, check_dqha_axioms, DualQuasiHopfAlgebra, Variant};
use dqha::builders::builtin_algebra_with_field;
use dqha::canonical::{check_pq_identities, CanonicalElements};
use dqha::doc::{
    document_kind, parse_field, resolve_module, AlgebraDocument, ModuleDocument,
};
use dqha::duals::{check_snake_yd, check_yd_morphisms, yd_dual, Handedness};
use dqha::error::{DqhaError, Result};
use dqha::form::MultilinearForm;
use dqha::linalg::LinearMap;
use dqha::report::CheckReport;
use dqha::scalar::ScalarField;
use dqha::yd::{
    braiding, braiding_inverse, check_alt_axiom, check_yd, convert_flavor, tensor_yd,
    YetterDrinfeldModule,
};

#[derive(Parser)]
#[command(name = "dqha", about = "Exact checker for dual quasi-Hopf algebras", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitKind {
    F,
    G,
    Pq,
    U,
    Variants,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Hand {
    Left,
    Right,
}

#[derive(Args)]
struct Common {
    /// Output format for reports.
    #[arg(long = "report", value_enum, default_value = "text")]
    report: ReportFormat,
    /// Field override for field-generic builtins: q or fp:<p>.
    #[arg(long = "field")]
    field: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full axiom suite on an algebra or module document.
    Validate {
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Derive and print twist pair, canonical elements, or variants.
    Derive {
        target: String,
        /// What to emit (repeatable): f, g, pq, u, variants.
        #[arg(long = "emit", value_enum, value_delimiter = ',', required = true)]
        emit: Vec<EmitKind>,
        #[command(flatten)]
        common: Common,
    },
    /// Print the braiding matrix of two same-flavor modules.
    Braid {
        first: String,
        second: String,
        /// Print the explicit inverse instead.
        #[arg(long)]
        inverse: bool,
        /// Verify that the braiding and its inverse compose to identities.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Emit the dual of an LL module as a document, with checks.
    Dual {
        target: String,
        #[arg(long = "hand", value_enum)]
        hand: Hand,
        #[command(flatten)]
        common: Common,
    },
    /// Emit the tensor product of two same-flavor modules, with checks.
    Tensor {
        first: String,
        second: String,
        #[command(flatten)]
        common: Common,
    },
    /// Convert an RL module to LL and emit the result, with checks.
    Convert {
        target: String,
        /// Target flavor (only LL is supported).
        #[arg(long = "to", default_value = "LL")]
        to: String,
        #[command(flatten)]
        common: Common,
    },
    /// Full derived report for an algebra or module.
    Report {
        target: String,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(classify(&e))
        }
    }
}

/// Parse and shape problems exit 2; mathematical failures exit 1.
fn classify(e: &DqhaError) -> u8 {
    match e {
        DqhaError::ParseError(_)
        | DqhaError::ShapeError(_)
        | DqhaError::ShapeMismatch(_)
        | DqhaError::DimensionMismatch { .. }
        | DqhaError::ArityMismatch { .. }
        | DqhaError::ArityCapExceeded { .. }
        | DqhaError::InvalidGroupTable(_)
        | DqhaError::FlavorMismatch(_) => 2,
        _ => 1,
    }
}

enum Target {
    Algebra(Arc<DualQuasiHopfAlgebra>),
    Module(YetterDrinfeldModule),
}

fn load_target(spec: &str, field: Option<ScalarField>) -> Result<Target> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let known_algebra = name == "kw_z2_broken_beta"
            || dqha::builders::REGISTERED_ALGEBRAS.contains(&name);
        return match builtin_algebra_with_field(name, field) {
            Ok(alg) => Ok(Target::Algebra(alg)),
            Err(e) if known_algebra => Err(e),
            Err(_) => Ok(Target::Module(resolve_module(spec, Path::new("."))?)),
        };
    }
    let path = PathBuf::from(spec);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| DqhaError::ParseError(format!("cannot read {spec}: {e}")))?;
    match document_kind(&text)? {
        "module" => Ok(Target::Module(resolve_module(spec, Path::new("."))?)),
        _ => {
            let doc: AlgebraDocument = serde_json::from_str(&text)
                .map_err(|e| DqhaError::ParseError(format!("{spec}: {e}")))?;
            Ok(Target::Algebra(doc.build()?))
        }
    }
}

fn load_algebra(spec: &str, field: Option<ScalarField>) -> Result<Arc<DualQuasiHopfAlgebra>> {
    match load_target(spec, field)? {
        Target::Algebra(a) => Ok(a),
        Target::Module(_) => Err(DqhaError::ParseError(format!(
            "{spec} is a module document, expected an algebra"
        ))),
    }
}

fn load_module(spec: &str) -> Result<YetterDrinfeldModule> {
    match load_target(spec, None)? {
        Target::Module(m) => Ok(m),
        Target::Algebra(_) => Err(DqhaError::ParseError(format!(
            "{spec} is an algebra document, expected a module"
        ))),
    }
}

fn parse_field_opt(c: &Common) -> Result<Option<ScalarField>> {
    c.field.as_deref().map(parse_field).transpose()
}

#[derive(Serialize)]
struct Output {
    #[serde(skip_serializing_if = "Option::is_none")]
    document: Option<ModuleDocument>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    tables: Vec<TableOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    matrices: Vec<MatrixOut>,
    report: CheckReport,
}

#[derive(Serialize)]
struct TableOut {
    name: String,
    entries: Vec<(Vec<String>, String)>,
}

#[derive(Serialize)]
struct MatrixOut {
    name: String,
    rows: Vec<Vec<String>>,
}

impl Output {
    fn new() -> Output {
        Output {
            document: None,
            tables: Vec::new(),
            matrices: Vec::new(),
            report: CheckReport::new(),
        }
    }

    /// Print in the chosen format and return the process exit code.
    fn finish(self, fmt: ReportFormat) -> Result<u8> {
        match fmt {
            ReportFormat::Json => {
                let text = serde_json::to_string_pretty(&self)
                    .map_err(|e| DqhaError::ParseError(e.to_string()))?;
                println!("{text}");
            }
            ReportFormat::Text => {
                if let Some(doc) = &self.document {
                    let text = serde_json::to_string_pretty(doc)
                        .map_err(|e| DqhaError::ParseError(e.to_string()))?;
                    println!("{text}");
                }
                for t in &self.tables {
                    println!("{}:", t.name);
                    for (args, v) in &t.entries {
                        println!("  {}({}) = {}", t.name, args.join(", "), v);
                    }
                }
                for m in &self.matrices {
                    println!("{}:", m.name);
                    for row in &m.rows {
                        println!("  [{}]", row.join(", "));
                    }
                }
                print!("{}", self.report);
            }
        }
        Ok(if self.report.passed() { 0 } else { 1 })
    }

    fn add_form_table(&mut self, name: &str, form: &MultilinearForm, h: &DualQuasiHopfAlgebra) {
        let d = h.dim();
        let arity = form.arity;
        let mut entries = Vec::new();
        for flat in 0..d.pow(arity as u32) {
            let t = dqha::exec::decode_tuple(flat, arity, d);
            let names = t.iter().map(|&i| h.basis_name(i).to_string()).collect();
            entries.push((names, form.value(&t).to_string()));
        }
        self.tables.push(TableOut {
            name: name.into(),
            entries,
        });
    }

    fn add_matrix(&mut self, name: &str, m: &LinearMap) {
        let rows = (0..m.rows)
            .map(|i| (0..m.cols).map(|j| m.at(i, j).to_string()).collect())
            .collect();
        self.matrices.push(MatrixOut {
            name: name.into(),
            rows,
        });
    }
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Validate { target, common } => {
            let field = parse_field_opt(&common)?;
            let mut out = Output::new();
            match load_target(&target, field)? {
                Target::Algebra(alg) => out.report = check_dqha_axioms(&alg),
                Target::Module(m) => out.report = check_yd(&m),
            }
            out.finish(common.report)
        }
        Command::Derive {
            target,
            emit,
            common,
        } => {
            let field = parse_field_opt(&common)?;
            let alg = load_algebra(&target, field)?;
            let mut out = Output::new();
            let wants_twist = emit
                .iter()
                .any(|e| matches!(e, EmitKind::F | EmitKind::G));
            let wants_canonical = emit
                .iter()
                .any(|e| matches!(e, EmitKind::Pq | EmitKind::U));
            if wants_twist {
                let pair = alg.twist_pair()?;
                if emit.contains(&EmitKind::F) {
                    out.add_form_table("f", &pair.f, &alg);
                }
                if emit.contains(&EmitKind::G) {
                    out.add_form_table("g", &pair.g, &alg);
                }
                out.report.push_pass("twist pair");
            }
            if wants_canonical {
                let e = CanonicalElements::compute(&alg)?;
                if emit.contains(&EmitKind::Pq) {
                    out.add_form_table("p^R", &e.p_r, &alg);
                    out.add_form_table("q^R", &e.q_r, &alg);
                    out.add_form_table("p^L", &e.p_l, &alg);
                    out.add_form_table("q^L", &e.q_l, &alg);
                }
                if emit.contains(&EmitKind::U) {
                    out.add_form_table("U", &e.u, &alg);
                }
                out.report.merge(check_pq_identities(&alg)?);
            }
            if emit.contains(&EmitKind::Variants) {
                for (v, name) in [
                    (Variant::Op, "variant op"),
                    (Variant::Cop, "variant cop"),
                    (Variant::OpCop, "variant op,cop"),
                ] {
                    let built = build_variant(&alg, v)?;
                    let rep = check_dqha_axioms(&built);
                    out.report.push(
                        name,
                        rep.failures().next().map(|i| {
                            format!("{}: {}", i.name, i.detail.as_deref().unwrap_or(""))
                        }),
                    );
                }
            }
            out.finish(common.report)
        }
        Command::Braid {
            first,
            second,
            inverse,
            check,
            common,
        } => {
            let m = load_module(&first)?;
            let n = load_module(&second)?.with_algebra(m.alg().clone())?;
            let mut out = Output::new();
            let c = braiding(&m, &n)?;
            if inverse {
                let ci = braiding_inverse(&m, &n)?;
                out.add_matrix("braiding inverse", &ci);
                if check {
                    let ok = c.compose(&ci).is_identity() && ci.compose(&c).is_identity();
                    out.report.push(
                        "identity",
                        if ok {
                            None
                        } else {
                            Some("the braiding and its inverse do not compose to the identity".into())
                        },
                    );
                }
            } else {
                out.add_matrix("braiding", &c);
                if check {
                    let ci = braiding_inverse(&m, &n)?;
                    let ok = c.compose(&ci).is_identity() && ci.compose(&c).is_identity();
                    out.report.push(
                        "identity",
                        if ok {
                            None
                        } else {
                            Some("the braiding and its inverse do not compose to the identity".into())
                        },
                    );
                }
            }
            out.finish(common.report)
        }
        Command::Dual {
            target,
            hand,
            common,
        } => {
            let m = load_module(&target)?;
            let handedness = match hand {
                Hand::Left => Handedness::LeftDual,
                Hand::Right => Handedness::RightDual,
            };
            let pair = yd_dual(&m, handedness)?;
            let mut out = Output::new();
            out.document = Some(ModuleDocument::from_module(&pair.dual));
            out.report.merge(check_yd(&pair.dual));
            out.report.merge(check_yd_morphisms(&pair)?);
            out.report.merge(check_snake_yd(&pair)?);
            out.finish(common.report)
        }
        Command::Tensor {
            first,
            second,
            common,
        } => {
            let m = load_module(&first)?;
            let n = load_module(&second)?.with_algebra(m.alg().clone())?;
            let t = tensor_yd(&m, &n)?;
            let mut out = Output::new();
            out.document = Some(ModuleDocument::from_module(&t));
            out.report.merge(check_yd(&t));
            out.finish(common.report)
        }
        Command::Convert { target, to, common } => {
            if to != "LL" {
                return Err(DqhaError::ParseError(format!(
                    "only conversion to LL is supported, got {to}"
                )));
            }
            let m = load_module(&target)?;
            let t = convert_flavor(&m)?;
            let mut out = Output::new();
            out.document = Some(ModuleDocument::from_module(&t));
            out.report.merge(check_yd(&t));
            out.finish(common.report)
        }
        Command::Report { target, common } => {
            let field = parse_field_opt(&common)?;
            let mut out = Output::new();
            match load_target(&target, field)? {
                Target::Algebra(alg) => {
                    out.report.merge(check_dqha_axioms(&alg));
                    if out.report.passed() {
                        let _pair = alg.twist_pair()?;
                        out.report.push_pass("twist pair");
                        out.report.merge(check_pq_identities(&alg)?);
                        out.report.merge(dqha::duals::check_lemma_32(&alg)?);
                    }
                }
                Target::Module(m) => {
                    out.report.merge(check_yd(&m));
                    if out.report.passed() && m.flavor() == dqha::yd::Flavor::LL {
                        out.report.merge(check_alt_axiom(&m)?);
                    }
                }
            }
            out.finish(common.report)
        }
    }
}
