//! The `ckcenter` command line.
//!
//! Exit codes: 0 on success, 1 when an analysis guard (`--max-vertices`,
//! `--oracle-bound`) is exceeded, 2 on malformed input or flags.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::analysis::{
    annihilator, arrival_paths, double_annihilator, finitary_lattice, is_finitary, ArrivalSet,
    DEFAULT_MAX_VERTICES,
};
use crate::center::{compute_center, cross_check_center, CenterReport};
use crate::error::Error;
use crate::graph::{Cycle, Graph, SimplicityWitness, VertexSet};
use crate::leavitt::{LeavittAlgebra, DEFAULT_ORACLE_BOUND};

#[derive(Debug, Parser)]
#[command(
    name = "ckcenter",
    version,
    about = "Centers of Leavitt path algebras and Cuntz-Krieger algebras of finite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Refuse lattice enumeration on graphs with more vertices than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,

    /// Refuse the brute-force center solve above this many unknowns.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BOUND)]
    oracle_bound: usize,
}

#[derive(Debug, Args)]
struct Input {
    /// Graph JSON file, or `-` for stdin.
    input: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sinks, cycles, exitless cycles, simplicity, lattice and center.
    Analyze(Input),
    /// The center and its verified generators.
    Center(Input),
    /// Hereditary data of `--set`, or the finitary annihilator lattice.
    Hereditary {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
    },
    /// Arrival paths into the hereditary set `--set`.
    Arrivals {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<String>,
    },
    /// Cycles without exits.
    NeCycles(Input),
    /// The simplicity criterion, with a witness when it fails.
    Simple(Input),
    /// Normal form of an element.
    NormalForm {
        #[command(flatten)]
        input: Input,
        element: String,
    },
    /// Whether an element commutes with every vertex, edge and ghost edge.
    CheckCentral {
        #[command(flatten)]
        input: Input,
        element: String,
    },
    /// Predicted center against a brute-force solve in degree <= `--degree`.
    CrossCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
}

impl Command {
    fn input(&self) -> &str {
        match self {
            Command::Analyze(i)
            | Command::Center(i)
            | Command::NeCycles(i)
            | Command::Simple(i)
            | Command::Hereditary { input: i, .. }
            | Command::Arrivals { input: i, .. }
            | Command::NormalForm { input: i, .. }
            | Command::CheckCentral { input: i, .. }
            | Command::CrossCheck { input: i, .. } => &i.input,
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Failure::Analysis(Error::LimitExceeded { .. }) => 1,
                _ => 2,
            }
        }
    }
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Analysis(Error),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Io(msg) => write!(f, "{msg}"),
            Failure::Analysis(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Analysis(e)
    }
}

fn read_graph(path: &str, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    }
    Ok(Graph::from_json(&text)?)
}

fn parse_set(g: &Graph, names: &[String]) -> Result<VertexSet, Failure> {
    let names: Vec<&str> = names
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .collect();
    Ok(g.vertex_set(&names)?)
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

fn cycle_text(g: &Graph, c: &Cycle) -> String {
    c.names(g).join("*")
}

fn render(json: bool, value: Value, text: String) -> String {
    if json {
        serde_json::to_string_pretty(&value).expect("json value serializes")
    } else {
        text
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    let g = read_graph(cli.command.input(), stdin)?;
    let alg = LeavittAlgebra::new(&g);
    let json = cli.json;

    match &cli.command {
        Command::Analyze(_) => analyze(&g, cli),
        Command::Center(_) => {
            let report = compute_center(&g, cli.max_vertices)?;
            Ok(if json {
                report.to_json(&g)
            } else {
                center_text(&g, &report)
            })
        }
        Command::Hereditary {
            set: Some(names), ..
        } => {
            let w = parse_set(&g, names)?;
            let hereditary = g.is_hereditary(&w);
            let closure = g.hereditary_closure(&w);
            let saturated = g.is_saturated(&w).ok();
            let saturation = g.saturation(&w).ok();
            let perp = annihilator(&g, &w);
            let perp2 = double_annihilator(&g, &w);
            let finitary = if hereditary && !w.is_empty() {
                Some(is_finitary(&g, &w)?)
            } else {
                None
            };
            let value = json!({
                "set": g.set_names(&w),
                "hereditary": hereditary,
                "hereditary_closure": g.set_names(&closure),
                "saturated": saturated,
                "saturation": saturation.as_ref().map(|s| g.set_names(s)),
                "annihilator": g.set_names(&perp),
                "double_annihilator": g.set_names(&perp2),
                "finitary": finitary,
            });
            let opt = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
            let text = [
                format!("set: {}", braces(&g.set_names(&w))),
                format!("hereditary: {hereditary}"),
                format!("hereditary closure: {}", braces(&g.set_names(&closure))),
                format!("saturated: {}", opt(saturated)),
                format!(
                    "saturation: {}",
                    saturation.map_or("n/a".into(), |s| braces(&g.set_names(&s)))
                ),
                format!("annihilator: {}", braces(&g.set_names(&perp))),
                format!("double annihilator: {}", braces(&g.set_names(&perp2))),
                format!("finitary: {}", opt(finitary)),
            ]
            .join("\n");
            Ok(render(json, value, text))
        }
        Command::Hereditary { set: None, .. } => {
            let lattice = finitary_lattice(&g, cli.max_vertices)?;
            let elements: Vec<Vec<String>> =
                lattice.elements.iter().map(|s| g.set_names(s)).collect();
            let atoms: Vec<Vec<String>> = lattice.atoms.iter().map(|s| g.set_names(s)).collect();
            let text = format!(
                "finitary annihilator sets: {}\natoms: {}",
                elements
                    .iter()
                    .map(|s| braces(s))
                    .collect::<Vec<_>>()
                    .join(" "),
                atoms
                    .iter()
                    .map(|s| braces(s))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            Ok(render(
                json,
                json!({ "elements": elements, "atoms": atoms }),
                text,
            ))
        }
        Command::Arrivals { set, .. } => {
            let w = parse_set(&g, set)?;
            let (value, text) = match arrival_paths(&g, &w)? {
                ArrivalSet::Finite(paths) => {
                    let names: Vec<String> = paths.iter().map(|p| g.path_string(p)).collect();
                    (
                        json!({ "finite": true, "paths": names }),
                        format!("Finite: {}", names.join(", ")),
                    )
                }
                ArrivalSet::Infinite(c) => (
                    json!({ "finite": false, "witness": c.names(&g) }),
                    format!("Infinite: witness cycle {}", cycle_text(&g, &c)),
                ),
            };
            Ok(render(json, value, text))
        }
        Command::NeCycles(_) => {
            let cycles = g.ne_cycles();
            let names: Vec<Vec<String>> = cycles.iter().map(|c| c.names(&g)).collect();
            let text = if cycles.is_empty() {
                "no exitless cycles".to_string()
            } else {
                cycles
                    .iter()
                    .map(|c| cycle_text(&g, c))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok(render(json, json!(names), text))
        }
        Command::Simple(_) => {
            let (value, text) = match g.simplicity() {
                Ok(()) => (json!({ "simple": true }), "simple: yes".to_string()),
                Err(SimplicityWitness::HereditarySaturated(s)) => (
                    json!({ "simple": false, "hereditary_saturated": g.set_names(&s) }),
                    format!(
                        "simple: no (proper hereditary saturated subset {})",
                        braces(&g.set_names(&s))
                    ),
                ),
                Err(SimplicityWitness::ExitlessCycle(c)) => (
                    json!({ "simple": false, "exitless_cycle": c.names(&g) }),
                    format!("simple: no (exitless cycle {})", cycle_text(&g, &c)),
                ),
            };
            Ok(render(json, value, text))
        }
        Command::NormalForm { element, .. } => {
            let x = alg.normal_form(&alg.parse(element)?);
            let text = alg.format(&x);
            Ok(render(json, json!({ "normal_form": text }), text))
        }
        Command::CheckCentral { element, .. } => {
            let x = alg.normal_form(&alg.parse(element)?);
            let (value, text) = match alg.non_commuting_generator(&x) {
                None => (json!({ "central": true }), "central: yes".to_string()),
                Some(w) => {
                    let name = alg.generator_name(w);
                    let comm = alg.format(&alg.commutator(&x, &alg.generator(w)));
                    (
                        json!({ "central": false, "witness": name, "commutator": comm }),
                        format!("central: no (witness generator {name}; commutator {comm})"),
                    )
                }
            };
            Ok(render(json, value, text))
        }
        Command::CrossCheck { degree, .. } => {
            let x = cross_check_center(&g, *degree, cli.oracle_bound, cli.max_vertices)?;
            let value = json!({
                "degree": x.degree,
                "predicted_dim": x.predicted_dim,
                "oracle_dim": x.oracle_dim,
                "contained": x.contained,
                "dims_match": x.dims_match,
                "predicted": x.predicted.iter().map(|e| alg.format(e)).collect::<Vec<_>>(),
                "missing": x.missing.iter().map(|e| alg.format(e)).collect::<Vec<_>>(),
            });
            let text = format!(
                "degree: {}\npredicted dimension: {}\nbrute-force dimension: {}\npredicted contained in brute force: {}\ndimensions match: {}",
                x.degree,
                x.predicted_dim,
                x.oracle_dim,
                if x.contained { "yes" } else { "no" },
                if x.dims_match { "yes" } else { "no" },
            );
            Ok(render(json, value, text))
        }
    }
}

fn center_text(g: &Graph, report: &CenterReport) -> String {
    let alg = LeavittAlgebra::new(g);
    let mut lines = vec![
        format!("Z(L(Γ)) ≅ {}", report.isomorphism_type()),
        format!(
            "Z(CK(Γ)) is the closure: a = {} scalar, b = {} circle",
            report.c_count, report.t_count
        ),
        "atoms:".to_string(),
    ];
    for a in &report.atoms {
        let names = braces(&g.set_names(&a.vertices));
        lines.push(match &a.kind {
            crate::analysis::AtomKind::Scalar => format!("  {names}: C"),
            crate::analysis::AtomKind::Circle(c) => {
                format!("  {names}: T (cycle {})", cycle_text(g, c))
            }
        });
    }
    lines.push("generators:".into());
    for gen in &report.generators {
        lines.push(format!("  {}", alg.format(&gen.element)));
    }
    lines.push(format!(
        "verified: {}",
        if report.verified { "yes" } else { "no" }
    ));
    for f in &report.failures {
        lines.push(format!("  failed: {f}"));
    }
    lines.join("\n")
}

fn analyze(g: &Graph, cli: &Cli) -> Result<String, Failure> {
    let cycles = g.cycles();
    let ne = g.ne_cycles();
    let lattice = finitary_lattice(g, cli.max_vertices)?;
    let report = compute_center(g, cli.max_vertices)?;
    let simple = g.simplicity();

    if cli.json {
        let value = json!({
            "vertices": g.vertex_names(),
            "edges": g.edges().iter().map(|e| e.id.clone()).collect::<Vec<_>>(),
            "sinks": g.set_names(&g.sinks()),
            "cycles": cycles.iter().map(|c| c.names(g)).collect::<Vec<_>>(),
            "ne_cycles": ne.iter().map(|c| c.names(g)).collect::<Vec<_>>(),
            "simple": simple.is_ok(),
            "lattice": {
                "elements": lattice.elements.iter().map(|s| g.set_names(s)).collect::<Vec<_>>(),
                "atoms": lattice.atoms.iter().map(|s| g.set_names(s)).collect::<Vec<_>>(),
            },
            "center": serde_json::to_value(report.to_doc(g)).expect("report serializes"),
        });
        return Ok(serde_json::to_string_pretty(&value).expect("json value serializes"));
    }

    let list = |cs: &[Cycle]| {
        if cs.is_empty() {
            "none".to_string()
        } else {
            cs.iter()
                .map(|c| cycle_text(g, c))
                .collect::<Vec<_>>()
                .join(", ")
        }
    };
    let lines = [
        format!("vertices: {}, edges: {}", g.vertex_count(), g.edge_count()),
        format!("sinks: {}", braces(&g.set_names(&g.sinks()))),
        format!("cycles: {}", list(&cycles)),
        format!("exitless cycles: {}", list(&ne)),
        format!("simple: {}", if simple.is_ok() { "yes" } else { "no" }),
        format!(
            "finitary annihilator sets: {}",
            lattice
                .elements
                .iter()
                .map(|s| braces(&g.set_names(s)))
                .collect::<Vec<_>>()
                .join(" ")
        ),
        center_text(g, &report),
    ];
    Ok(lines.join("\n"))
}
