use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperconn::chains::{
    edge_distance_witness, properly_connected_witness, splitting_vertex, triangulated_witness,
    Occurrence, DEFAULT_TRIANGULATED_VERTEX_LIMIT,
};
use hyperconn::domination::{epsilon, k_bound};
use hyperconn::fixtures::{fixture, Fixture};
use hyperconn::homotopy::{homotopy_type_triangulated, max_dimension_bound, properly_splitted_witness};
use hyperconn::io::{
    emit_complex_json, emit_complex_text, emit_hypergraph_json, emit_hypergraph_text,
    parse_complex, parse_hypergraph, Labeled, Labels,
};
use hyperconn::verify::{self, Limits, Suite, VerifyConfig};
use hyperconn::{degree_bound, independence_complex, reduced_homology, Error, Hypergraph, PsiSolver};

#[derive(Parser)]
#[command(name = "hyperconn", version, about = "Connectivity of independence complexes of hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute ψ and an edge attaining it.
    Psi {
        /// Input file, or `-` for stdin.
        file: PathBuf,
        /// Node budget for the solver.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Reduced integral homology of Ind(C), or of a complex given by facets.
    Homology {
        file: PathBuf,
        /// Read the input as a list of facets.
        #[arg(long)]
        complex: bool,
    },
    /// conn_h together with the lower bounds ψ, k, ε and the degree bound.
    Conn { file: PathBuf },
    /// Length of a shortest proper chain between two edges.
    Distance {
        file: PathBuf,
        /// First edge, e.g. `1,2`.
        from: String,
        /// Second edge.
        to: String,
    },
    /// Test a structural property.
    Check {
        file: PathBuf,
        #[command(flatten)]
        property: Property,
    },
    /// Homotopy type of Ind(C) for a triangulated hypergraph.
    HomotopyType { file: PathBuf },
    /// Run the theorem-verification harness.
    Verify {
        /// Comma-separated suites, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Edge probability of the random model.
        #[arg(long, default_value_t = 0.3)]
        edge_probability: f64,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print a built-in hypergraph or complex.
    Fixture {
        /// lutz-acyclic, c4, c5, cycle(n), path(n), complete(n,d) or counterexample(k).
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        emit: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Property {
    #[arg(long)]
    properly_connected: bool,
    #[arg(long)]
    triangulated: bool,
    #[arg(long)]
    properly_splitted: bool,
    /// Edge to test, e.g. `1,2,3`.
    #[arg(long, value_name = "EDGE")]
    splitting_edge: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Io(String),
    Core(Error),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Core(e) if e.is_input_error() => 2,
            Failure::Core(e) if e.is_resource_error() => 3,
            Failure::Violation(_) => 4,
            Failure::Core(_) => 5,
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
    }
}

fn load(path: &PathBuf) -> Result<Labeled<Hypergraph>, Failure> {
    Ok(parse_hypergraph(&read_input(path)?)?)
}

fn psi_cmd(path: &PathBuf, budget: Option<u64>) -> Outcome {
    let h = load(path)?;
    let mut solver = match budget {
        Some(b) => PsiSolver::new(b),
        None => PsiSolver::new(Limits::from_env()?.psi_budget),
    };
    let out = solver.evaluate(&h.value)?;
    let mut s = format!("psi = {}\n", out.value);
    match out.argmax {
        Some(f) => writeln!(s, "argmax edge: {}", h.labels.format_set(f)).unwrap(),
        None => writeln!(s, "argmax edge: none").unwrap(),
    }
    writeln!(s, "nodes: {}", out.nodes).unwrap();
    Ok(s)
}

fn homology_cmd(path: &PathBuf, complex: bool) -> Outcome {
    let text = read_input(path)?;
    let delta = if complex {
        parse_complex(&text)?.value
    } else {
        independence_complex(&parse_hypergraph(&text)?.value)?
    };
    let h = reduced_homology(&delta)?;
    let mut s = format!("{:<5} {:<6} {}\n", "dim", "betti", "torsion");
    for (dim, g) in h.iter() {
        let torsion: Vec<String> = g.torsion.iter().map(|t| format!("Z/{t}")).collect();
        writeln!(s, "{:<5} {:<6} {}", dim, g.betti, torsion.join(" ")).unwrap();
    }
    writeln!(s, "conn_h = {}", h.conn_h()).unwrap();
    Ok(s)
}

fn conn_cmd(path: &PathBuf) -> Outcome {
    let c = load(path)?.value;
    let conn = reduced_homology(&independence_complex(&c)?)?.conn_h();
    let psi = PsiSolver::new(Limits::from_env()?.psi_budget).psi(&c)?;
    let rows = [
        ("conn_h", conn.to_string()),
        ("psi", psi.to_string()),
        ("k", k_bound(&c)?.to_string()),
        ("epsilon", epsilon(&c)?.to_string()),
        ("degree bound", degree_bound(&c).to_string()),
    ];
    Ok(rows.iter().map(|(k, v)| format!("{k:<14}{v}\n")).collect())
}

fn distance_cmd(path: &PathBuf, from: &str, to: &str) -> Outcome {
    let h = load(path)?;
    let f = h.labels.parse_set(from)?;
    let g = h.labels.parse_set(to)?;
    let (d, chain) = edge_distance_witness(&h.value, f, g)?;
    let mut s = format!("dist = {d}\n");
    if let Some(ch) = chain {
        let mut line = h.labels.format_set(ch.edges[0]);
        for (x, e) in ch.pivots.iter().zip(&ch.edges[1..]) {
            write!(line, " -[{}]-> {}", h.labels.label(*x), h.labels.format_set(*e)).unwrap();
        }
        writeln!(s, "chain: {line}").unwrap();
    }
    Ok(s)
}

fn verdict(yes: bool) -> &'static str {
    if yes {
        "yes"
    } else {
        "no"
    }
}

fn check_cmd(path: &PathBuf, p: &Property) -> Outcome {
    let h = load(path)?;
    let (c, labels) = (&h.value, &h.labels);
    if p.properly_connected {
        let w = properly_connected_witness(c)?;
        let mut s = format!("properly-connected: {}\n", verdict(w.is_none()));
        if let Some((f, g)) = w {
            writeln!(s, "violating pair: {} {}", labels.format_set(f), labels.format_set(g)).unwrap();
        }
        return Ok(s);
    }
    if p.triangulated {
        let w = triangulated_witness(c, DEFAULT_TRIANGULATED_VERTEX_LIMIT, Occurrence::EdgeMembership)?;
        let mut s = format!("triangulated: {}\n", verdict(w.is_none()));
        if let Some(a) = w {
            writeln!(s, "no decomposition vertex in the subhypergraph induced on {}", labels.format_set(a)).unwrap();
        }
        return Ok(s);
    }
    if p.properly_splitted {
        let w = properly_splitted_witness(c)?;
        let mut s = format!("properly-splitted: {}\n", verdict(w.is_some()));
        if let Some(tree) = w {
            let edges: Vec<String> = tree.edges().iter().map(|&e| labels.format_set(e)).collect();
            writeln!(s, "split edges (preorder): {}", edges.join(" ")).unwrap();
        }
        return Ok(s);
    }
    let edge = p.splitting_edge.as_deref().expect("clap requires one property");
    let f = labels.parse_set(edge)?;
    let z = splitting_vertex(c, f)?;
    let mut s = format!("splitting edge {}: {}\n", labels.format_set(f), verdict(z.is_some()));
    if let Some(z) = z {
        writeln!(s, "swap vertex: {}", labels.label(z)).unwrap();
    }
    Ok(s)
}

fn homotopy_cmd(path: &PathBuf) -> Outcome {
    let c = load(path)?.value;
    let t = homotopy_type_triangulated(&c)?;
    let bound = max_dimension_bound(&c)?;
    Ok(format!("homotopy type: {t}\ndimension bound (d-1)c-1 = {bound}\n"))
}

fn verify_cmd(config: VerifyConfig, json: bool) -> Outcome {
    let report = verify::run(&config);
    let text = if json {
        serde_json::to_string_pretty(&report).expect("serializable") + "\n"
    } else {
        format!("{report}\n")
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Violation(text))
    }
}

fn fixture_cmd(name: &str, emit: Format) -> Outcome {
    Ok(match (fixture(name)?, emit) {
        (Fixture::Hypergraph(c), Format::Text) => emit_hypergraph_text(&c, &Labels::identity(c.vertices())),
        (Fixture::Hypergraph(c), Format::Json) => {
            emit_hypergraph_json(name, &c, &Labels::identity(c.vertices())) + "\n"
        }
        (Fixture::Complex(d), Format::Text) => emit_complex_text(&d, &Labels::identity(d.vertices())),
        (Fixture::Complex(d), Format::Json) => {
            emit_complex_json(name, &d, &Labels::identity(d.vertices())) + "\n"
        }
    })
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Psi { file, budget } => psi_cmd(&file, budget),
        Command::Homology { file, complex } => homology_cmd(&file, complex),
        Command::Conn { file } => conn_cmd(&file),
        Command::Distance { file, from, to } => distance_cmd(&file, &from, &to),
        Command::Check { file, property } => check_cmd(&file, &property),
        Command::HomotopyType { file } => homotopy_cmd(&file),
        Command::Verify {
            suite,
            seed,
            max_vertices,
            samples,
            edge_probability,
            json,
        } => {
            if !(0.0..=1.0).contains(&edge_probability) {
                return Err(Error::InvalidArgument("edge probability must lie in [0, 1]".into()).into());
            }
            let config = VerifyConfig {
                seed,
                max_vertices,
                samples,
                suites: Suite::parse_list(&suite)?,
                edge_probability,
                limits: Limits::from_env()?,
            };
            verify_cmd(config, json)
        }
        Command::Fixture { name, emit } => fixture_cmd(&name, emit),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Io(msg) => eprintln!("error: {msg}"),
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Violation(report) => {
                    print!("{report}");
                    eprintln!("error: theorem violation found");
                }
            }
            ExitCode::from(f.code())
        }
    }
}
