use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use partfun::connection::{connection_matrix, enumerate_klabeled};
use partfun::fastpath::{classify_value, z_fast_value};
use partfun::graph::text::{self, GraphFile};
use partfun::models::invariant_report;
use partfun::rings::parse_rational;
use partfun::verify::{self, Suite};
use partfun::{evaluator, DiagonalWeights, Error, WeightMatrix, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(name = "partfun", version, about = "Exact graph partition functions")]
struct Cli {
    /// Largest number of configurations a brute-force evaluation may enumerate.
    #[arg(long, global = true, env = "PARTFUN_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Z_A(G), honouring pinning lines in the graph file.
    Eval {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        /// Vertex weights `{"ring": ..., "diag": [...]}`.
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Use the polynomial-time evaluator when the matrix is tractable.
        #[arg(long)]
        fast: bool,
    },
    /// Tractable or #P-hard, with a certificate.
    Classify {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// A named model's partition function next to its combinatorial oracle.
    Invariant {
        #[arg(long)]
        name: String,
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated rationals, e.g. `3` or `2,-1/2`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Finite connection matrix over all k-labeled graphs within the bounds.
    Connection {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        max_edges: usize,
    },
    /// Exhaustive property checks.
    Verify {
        /// moebius, tutte, flows, reductions, connection, models, fastpath or all.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
    },
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    body: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::BadParameter(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            body: json!({"error": e.kind(), "message": e.to_string()}),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        body: json!({"error": "Io", "message": format!("{}: {e}", path.display())}),
    })
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::from(Error::Parse(format!("{}: {e}", path.display()))))
}

fn read_matrix(path: &Path) -> Result<WeightMatrix, Failure> {
    Ok(WeightMatrix::from_json(&read_json(path)?)?)
}

fn read_graph(path: &Path) -> Result<GraphFile, Failure> {
    Ok(text::parse(&read(path)?)?)
}

/// Standard output on success; `Err` carries the exit status.
fn run(cli: Cli) -> Result<Value, Failure> {
    let budget = cli.budget;
    match cli.command {
        Command::Eval {
            matrix,
            graph,
            weights,
            fast,
        } => {
            let a = read_matrix(&matrix)?;
            let g = read_graph(&graph)?;
            let d = match weights {
                Some(p) => Some(DiagonalWeights::from_json(&read_json(&p)?)?),
                None => None,
            };
            let plain = d.is_none() && g.pinning.is_empty();
            let value = match fast.then(|| plain.then(|| z_fast_value(&a, &g.graph))).flatten() {
                Some(Ok(v)) => v,
                Some(Err(Error::NotTractable(_))) | None => {
                    evaluator::z_value(&a, d.as_ref(), &g.pinning, &g.graph, budget)?
                }
                Some(Err(e)) => return Err(e.into()),
            };
            Ok(json!({"value": value.to_json()}))
        }
        Command::Classify { matrix } => Ok(classify_value(&read_matrix(&matrix)?, false)?),
        Command::Invariant { name, graph, params } => {
            let g = read_graph(&graph)?;
            let params = params
                .iter()
                .map(|p| parse_rational(p))
                .collect::<Result<Vec<BigRational>, Error>>()?;
            let report = invariant_report(&name, &params, &g.graph, budget)?;
            Ok(json!({"z": report.z, "oracle": report.oracle, "agree": report.agree}))
        }
        Command::Connection {
            matrix,
            k,
            max_vertices,
            max_edges,
        } => {
            let a = read_matrix(&matrix)?;
            let basis = enumerate_klabeled(k, max_vertices, max_edges)?;
            Ok(connection_matrix(&a, &basis, budget)?.report(a.dim()))
        }
        Command::Verify { suite, max_vertices } => {
            let report = verify::run(Suite::parse(&suite)?, max_vertices, budget)?;
            let out = report.to_json();
            if report.passed() {
                Ok(out)
            } else {
                Err(Failure { code: 1, body: out })
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            eprintln!("{}", json!({"error": "Usage", "message": message.trim_end()}));
            return ExitCode::from(2);
        }
    };
    // A closed pipe is not worth a panic.
    match run(cli) {
        Ok(v) => {
            let _ = writeln!(std::io::stdout(), "{v}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, body }) => {
            // A failed verification report is still the command's result.
            if body.get("properties").is_some() {
                let _ = writeln!(std::io::stdout(), "{body}");
            } else {
                let _ = writeln!(std::io::stderr(), "{body}");
            }
            ExitCode::from(code)
        }
    }
}
