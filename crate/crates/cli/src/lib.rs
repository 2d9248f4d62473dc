//! The `decospan` command line: circuit files in, canonical JSON out.

pub mod document;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use decorated_cospans::circuits::{self, Res};
use decorated_cospans::cospan::{IsoSearch, DEFAULT_BUDGET};
use decorated_cospans::dcospan::apply_functor;
use decorated_cospans::decoration::IdentityEndofunctor;
use decorated_cospans::{suites, DecoratedCategory, Error, Graphs, LinSub};

use document::{
    render, BehaviorDocument, Circuit, CircuitDocument, EquivDocument, IsoDocument, LawReportDocument,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "decospan", version, about = "Decorated cospans and open resistor networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the output document here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,

    /// Cap on nodes visited by each isomorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Graph,
    Linsub,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compose two circuits, first then second.
    Compose { first: PathBuf, second: PathBuf },
    /// Place two circuits side by side.
    Tensor { first: PathBuf, second: PathBuf },
    /// Reverse a circuit.
    Dagger { circuit: PathBuf },
    /// Boundary potentials and currents a graph or state-space circuit permits.
    Behavior { circuit: PathBuf },
    /// Give a plain cospan the empty decoration of the chosen kind.
    Embed {
        circuit: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Search for an isomorphism between two circuits.
    Iso { first: PathBuf, second: PathBuf },
    /// Whether two graph circuits have the same behavior.
    Equiv { first: PathBuf, second: PathBuf },
    /// Send a graph circuit to its state-space circuit.
    Res { circuit: PathBuf },
    /// Run law suites.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        cases: Option<usize>,
    },
    /// Re-emit a circuit in canonical form.
    Canon { circuit: PathBuf },
}

/// What a command produced: an exit code and, usually, a document.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub output: Option<String>,
}

/// A failure that ends the command without a document.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn malformed(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_MALFORMED, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchBudgetExceeded(_) => EXIT_BUDGET,
            Error::LawViolation(_) => EXIT_NO,
            _ => EXIT_MALFORMED,
        };
        Failure { code, message: e.to_string() }
    }
}

fn ok(doc: String) -> Result<Outcome, Failure> {
    Ok(Outcome { code: EXIT_OK, output: Some(doc) })
}

pub fn read_circuit(path: &Path) -> Result<Circuit, Failure> {
    let text = fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))?;
    let doc: CircuitDocument =
        serde_json::from_str(&text).map_err(|e| malformed(format!("{}: {e}", path.display())))?;
    doc.to_circuit().map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn emit(c: &Circuit) -> Result<Outcome, Failure> {
    ok(render(&CircuitDocument::from_circuit(c)))
}

fn mixed(a: &Circuit, b: &Circuit) -> Failure {
    malformed(format!("cannot combine a {} circuit with a {} circuit", a.kind(), b.kind()))
}

pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let graphs = Graphs::new();
    let states = LinSub::new();
    let gcat = DecoratedCategory::new(&graphs).with_budget(cli.budget);
    let scat = DecoratedCategory::new(&states).with_budget(cli.budget);

    match &cli.command {
        Command::Compose { first, second } => {
            let (a, b) = (read_circuit(first)?, read_circuit(second)?);
            let c = match (&a, &b) {
                (Circuit::Plain(x), Circuit::Plain(y)) => Circuit::Plain(x.compose(y)?),
                (Circuit::Graph(x), Circuit::Graph(y)) => Circuit::Graph(gcat.compose(x, y)?),
                (Circuit::Linsub(x), Circuit::Linsub(y)) => Circuit::Linsub(scat.compose(x, y)?),
                _ => return Err(mixed(&a, &b)),
            };
            emit(&c)
        }
        Command::Tensor { first, second } => {
            let (a, b) = (read_circuit(first)?, read_circuit(second)?);
            let c = match (&a, &b) {
                (Circuit::Plain(x), Circuit::Plain(y)) => Circuit::Plain(x.tensor(y)),
                (Circuit::Graph(x), Circuit::Graph(y)) => Circuit::Graph(gcat.tensor(x, y)),
                (Circuit::Linsub(x), Circuit::Linsub(y)) => Circuit::Linsub(scat.tensor(x, y)),
                _ => return Err(mixed(&a, &b)),
            };
            emit(&c)
        }
        Command::Dagger { circuit } => {
            let c = match read_circuit(circuit)? {
                Circuit::Plain(x) => Circuit::Plain(x.opposite()),
                Circuit::Graph(x) => Circuit::Graph(gcat.dagger(&x)),
                Circuit::Linsub(x) => Circuit::Linsub(scat.dagger(&x)),
            };
            emit(&c)
        }
        Command::Behavior { circuit } => {
            let c = read_circuit(circuit)?;
            let b = match &c {
                Circuit::Graph(x) => circuits::behavior(x)?,
                Circuit::Linsub(x) => circuits::state_behavior(x)?,
                Circuit::Plain(_) => return Err(malformed("behavior needs a graph or linsub decoration")),
            };
            ok(render(&BehaviorDocument::new(c.cospan().left_foot(), c.cospan().right_foot(), &b)))
        }
        Command::Embed { circuit, kind } => {
            let cospan = read_circuit(circuit)?.cospan().clone();
            let c = match kind {
                Kind::Graph => Circuit::Graph(gcat.embed(&cospan)),
                Kind::Linsub => Circuit::Linsub(scat.embed(&cospan)),
            };
            emit(&c)
        }
        Command::Iso { first, second } => {
            let (a, b) = (read_circuit(first)?, read_circuit(second)?);
            let found = match (&a, &b) {
                (Circuit::Plain(x), Circuit::Plain(y)) => IsoSearch::new(x, y).budget(cli.budget).find()?,
                (Circuit::Graph(x), Circuit::Graph(y)) => gcat.iso(x, y)?.map(|w| w.iso),
                (Circuit::Linsub(x), Circuit::Linsub(y)) => scat.iso(x, y)?.map(|w| w.iso),
                _ => return Err(mixed(&a, &b)),
            };
            let doc = IsoDocument {
                isomorphic: found.is_some(),
                bijection: found.map(|w| w.bijection().table().to_vec()),
            };
            let code = if doc.isomorphic { EXIT_OK } else { EXIT_NO };
            Ok(Outcome { code, output: Some(render(&doc)) })
        }
        Command::Equiv { first, second } => {
            let (a, b) = (read_circuit(first)?, read_circuit(second)?);
            let equivalent = match (&a, &b) {
                (Circuit::Graph(x), Circuit::Graph(y)) => circuits::behavior_equivalent(x, y)?,
                _ => return Err(malformed("equiv compares two graph circuits")),
            };
            let code = if equivalent { EXIT_OK } else { EXIT_NO };
            Ok(Outcome { code, output: Some(render(&EquivDocument { equivalent })) })
        }
        Command::Res { circuit } => match read_circuit(circuit)? {
            Circuit::Graph(x) => emit(&Circuit::Linsub(apply_functor(&Res::new(), &IdentityEndofunctor, &x)?)),
            other => Err(malformed(format!("res needs a graph circuit, found {}", other.kind()))),
        },
        Command::Check { suite, seed, cases } => {
            let reports = if suite == "all" {
                suites::run_all(*seed, *cases)
            } else {
                suites::run(suite, *seed, *cases).ok_or_else(|| {
                    let known: Vec<_> = suites::SUITES.iter().map(|(n, _)| *n).collect();
                    malformed(format!("unknown suite {suite:?}; known: all, {}, {}", known.join(", "), suites::PLANTED))
                })?
            };
            let passed = reports.iter().all(|r| r.passed());
            let doc = LawReportDocument { suite: suite.clone(), seed: *seed, passed, reports };
            Ok(Outcome { code: if passed { EXIT_OK } else { EXIT_NO }, output: Some(render(&doc)) })
        }
        Command::Canon { circuit } => emit(&read_circuit(circuit)?),
    }
}

/// Runs a parsed command line, writing its document; returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(Outcome { code, output }) => {
            if let Some(doc) = output {
                match &cli.output {
                    Some(path) => {
                        if let Err(e) = fs::write(path, doc) {
                            eprintln!("error: {}: {e}", path.display());
                            return EXIT_MALFORMED;
                        }
                    }
                    None => print!("{doc}"),
                }
            }
            code
        }
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            code
        }
    }
}
