//! The `lpa` command line: argument definitions, dispatch and the exit-code
//! mapping of library errors.

pub mod descriptors;

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use lpa_core::morphisms::{build_phi_pq, iso_condition};
use lpa_core::oracle::{check_suite, OracleError, SampleConfig, Subject, SuiteKind};
use lpa_core::{
    parse_element, parse_generated, Element, Graph, GraphError, LeavittAlgebra, LpaError,
    MorphismError, RepError, ScalarError, SfcElement, TextError,
};
use thiserror::Error;

use descriptors::{parse_field, parse_hom, parse_matrix, parse_module, ModuleDesc};

#[derive(Debug, Parser)]
#[command(name = "lpa", version, about = "Exact computation in Leavitt path algebras")]
pub struct Cli {
    #[command(flatten)]
    pub session: SessionArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SessionArgs {
    /// Graph file with `vertex` and `edge` lines.
    #[arg(long, global = true, conflicts_with = "rose")]
    pub graph: Option<std::path::PathBuf>,
    /// Use the rose with n petals.
    #[arg(long, global = true)]
    pub rose: Option<usize>,
    /// `Q` or `Fp:<prime>`.
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    /// Accept polynomials whose irreducibility cannot be decided.
    #[arg(long, global = true)]
    pub assume_irreducible: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form of an expression.
    Normalize { expr: String },
    /// Apply a generator map to an expression.
    Apply {
        #[arg(long)]
        hom: String,
        expr: String,
    },
    /// Act with an algebra element on a module element written as `... * z`.
    Act {
        #[arg(long)]
        module: String,
        #[arg(long)]
        twist: Option<String>,
        element: String,
        vector: String,
    },
    /// Decide whether two elements of the subalgebra are equivalent for the module.
    Equiv {
        #[arg(long)]
        module: String,
        p: String,
        q: String,
    },
    /// Find r with r·y = z for a nonzero module element y.
    Witness {
        #[arg(long)]
        module: String,
        vector: String,
    },
    /// Check the defining relations on the images of a generator map.
    CheckHom {
        #[arg(long)]
        hom: String,
    },
    /// Build the map from a matrix pair and test the isomorphism condition.
    IsoCond {
        /// Comma-separated edges sharing source and range.
        #[arg(long)]
        edges: String,
        /// Rows separated by `;`, entries by `,`.
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Run a randomized invariant suite.
    Oracle {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        twist: Option<String>,
        #[arg(long)]
        hom: Option<String>,
    },
    /// Worked examples on fixed graphs.
    Demo { name: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Relations(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0} oracle failure(s)")]
    Oracle(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Relations(_) => 3,
            CliError::Domain(_) => 4,
            CliError::Oracle(_) => 5,
        }
    }
}

impl From<TextError> for CliError {
    fn from(e: TextError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Mismatch(..) | GraphError::NotClosed(_) | GraphError::NotARose => {
                CliError::Domain(e.to_string())
            }
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<ScalarError> for CliError {
    fn from(e: ScalarError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<LpaError> for CliError {
    fn from(e: LpaError) -> Self {
        match e {
            LpaError::Graph(g) => g.into(),
            LpaError::Scalar(s) => s.into(),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<MorphismError> for CliError {
    fn from(e: MorphismError) -> Self {
        match e {
            MorphismError::RelationsViolated(_) => CliError::Relations(e.to_string()),
            MorphismError::SizeMismatch(..) | MorphismError::NotSquare(..) => {
                CliError::Parse(e.to_string())
            }
            MorphismError::Lpa(l) => l.into(),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::Lpa(l) => l.into(),
            RepError::Morphism(m) => m.into(),
            RepError::Graph(g) => g.into(),
            RepError::Scalar(s) => s.into(),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Parse(e.to_string())
    }
}

fn session(args: &SessionArgs) -> Result<Arc<LeavittAlgebra>, CliError> {
    let field = parse_field(&args.field)?;
    let graph = match (&args.graph, args.rose) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
            Graph::parse(&text)?
        }
        (None, Some(n)) => Graph::rose(n)?,
        _ => return Err(CliError::Parse("give exactly one of --graph or --rose".into())),
    };
    Ok(LeavittAlgebra::new(Arc::new(graph), field))
}

fn vector(text: &str, desc: &ModuleDesc) -> Result<SfcElement, CliError> {
    let alg = desc.spec.algebra();
    let r = parse_generated(text, alg, "z")?;
    Ok(desc.spec.act(&r, &desc.spec.generator())?)
}

/// Fails with the relation report when the map does not pass.
fn verified(m: lpa_core::GenMap) -> Result<lpa_core::GenMap, CliError> {
    if m.is_verified() {
        return Ok(m);
    }
    let (m, report) = m.verify();
    if report.is_empty() {
        return Ok(m);
    }
    let lines: Vec<String> = report.iter().map(|v| v.to_string()).collect();
    Err(CliError::Relations(lines.join("\n")))
}

/// Executes one command, writing its result to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Parse(e.to_string());
    let assume = cli.session.assume_irreducible;
    if let Command::Demo { name } = &cli.command {
        return demo(name, out);
    }
    let alg = session(&cli.session)?;
    match &cli.command {
        Command::Normalize { expr } => {
            writeln!(out, "{}", parse_element(expr, &alg)?).map_err(io)?;
        }
        Command::Apply { hom, expr } => {
            let m = verified(parse_hom(hom, &alg)?)?;
            let x = parse_element(expr, &alg)?;
            writeln!(out, "{}", m.apply(&x)?).map_err(io)?;
        }
        Command::Act { module, twist, element, vector: v } => {
            let desc = parse_module(module, &alg, assume, twist.as_deref())?;
            let r = parse_element(element, &alg)?;
            let m = vector(v, &desc)?;
            let image = match &desc.twist {
                Some(t) => t.act(&r, &m)?,
                None => desc.spec.act(&r, &m)?,
            };
            writeln!(out, "{image}").map_err(io)?;
        }
        Command::Equiv { module, p, q } => {
            let desc = parse_module(module, &alg, assume, None)?;
            let verdict = desc.spec.equiv(&parse_element(p, &alg)?, &parse_element(q, &alg)?)?;
            writeln!(out, "{}", if verdict { "equivalent" } else { "not equivalent" }).map_err(io)?;
        }
        Command::Witness { module, vector: v } => {
            let desc = parse_module(module, &alg, assume, None)?;
            let y = vector(v, &desc)?;
            writeln!(out, "{}", desc.spec.witness(&y)?).map_err(io)?;
        }
        Command::CheckHom { hom } => {
            let m = verified(parse_hom(hom, &alg)?)?;
            write!(out, "{m}").map_err(io)?;
            writeln!(out, "relations hold").map_err(io)?;
        }
        Command::IsoCond { edges, p, q } => {
            let ids = edges
                .split(',')
                .map(|n| {
                    alg.graph()
                        .edge_id(n.trim())
                        .ok_or_else(|| CliError::Parse(format!("unknown edge `{}`", n.trim())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let (pm, qm) = (parse_matrix(p, &alg)?, parse_matrix(q, &alg)?);
            let phi = build_phi_pq(&ids, &pm, &qm)?;
            let w = alg.graph().range(ids[0]);
            write!(out, "{phi}").map_err(io)?;
            let holds = iso_condition(&phi, &pm, &qm, w)?;
            writeln!(out, "iso condition {}", if holds { "holds" } else { "fails" }).map_err(io)?;
        }
        Command::Oracle { suite, seed, samples, max_len, module, twist, hom } => {
            let kind = SuiteKind::parse(suite)?;
            let cfg = SampleConfig { seed: *seed, max_len: *max_len, samples: *samples };
            let report = match kind {
                SuiteKind::Hom => {
                    let text = hom.as_deref().ok_or_else(|| CliError::Parse("--hom is required".into()))?;
                    let m = verified(parse_hom(text, &alg)?)?;
                    check_suite(kind, &cfg, Subject::Hom(&m))?
                }
                SuiteKind::Module => {
                    let text = module
                        .as_deref()
                        .ok_or_else(|| CliError::Parse("--module is required".into()))?;
                    let desc = parse_module(text, &alg, assume, twist.as_deref())?;
                    check_suite(kind, &cfg, Subject::Module(&desc.spec, desc.twist.as_ref()))?
                }
                _ => check_suite(kind, &cfg, Subject::Session(&alg))?,
            };
            write!(out, "{report}").map_err(io)?;
            writeln!(
                out,
                "{}: {} samples, {} failures",
                report.suite,
                report.checked,
                report.failures.len()
            )
            .map_err(io)?;
            if !report.is_clean() {
                return Err(CliError::Oracle(report.failures.len()));
            }
        }
        Command::Demo { .. } => unreachable!(),
    }
    Ok(())
}

fn demo(name: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Parse(e.to_string());
    let text = match name {
        "example-2-4" => one_petal_demo()?,
        "example-3-7" => equivalence_demo()?,
        other => {
            return Err(CliError::Parse(format!(
                "unknown demo `{other}`; available: example-2-4, example-3-7"
            )))
        }
    };
    out.write_all(text.as_bytes()).map_err(io)
}

/// One vertex with one loop `e`, `P = (e*)`, `Q = (e)`.
fn one_petal_demo() -> Result<String, CliError> {
    let g = Graph::parse("vertex v\nedge e v v")?;
    let alg = LeavittAlgebra::new(Arc::new(g), lpa_core::Field::Rational);
    let e = alg.graph().edge_id("e").expect("declared");
    let p = parse_matrix("e'", &alg)?;
    let q = parse_matrix("e", &alg)?;
    let phi = build_phi_pq(&[e], &p, &q)?;
    let holds = iso_condition(&phi, &p, &q, alg.graph().range(e))?;
    Ok(format!(
        "graph: vertex v, edge e v v\nP = (e'), Q = (e)\n{phi}iso condition {}\n",
        if holds { "holds" } else { "fails" }
    ))
}

/// `c = e2`, `f = 1 - x` over the rose with two petals.
fn equivalence_demo() -> Result<String, CliError> {
    let alg = LeavittAlgebra::rose(2, lpa_core::Field::Rational)?;
    let desc = parse_module("sfc:c=e2,f=1-x", &alg, false, None)?;
    let el = |s: &str| parse_element(s, &alg);
    let (e1, e1e2) = (el("e1")?, el("e1*e2'")?);
    let diff = el("e1*e2'*(v - e2)")?;
    let verdict = |a: &Element, b: &Element| -> Result<&str, CliError> {
        Ok(if desc.spec.equiv(a, b)? { "equivalent" } else { "not equivalent" })
    };
    Ok(format!(
        "module: c = e2, f = 1 - x\ne1*e2'*(v - e2) = {diff}\ne1 vs e1*e2': {}\ne1 vs 0: {}\n",
        verdict(&e1, &e1e2)?,
        verdict(&e1, &Element::zero(&alg))?
    ))
}
