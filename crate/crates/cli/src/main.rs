use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use chromatopo::bounds::{bounds_ladder, BoundsError, SizeCaps, CSV_HEADER};
use chromatopo::complexes::{box0_complex, box_complex, hom_poset, neighborhood_complex, order_complex, Z2Complex};
use chromatopo::graphs::{parse_graph, Graph, Hypergraph};
use chromatopo::homology::{homology, Ring};
use chromatopo::verify::{format_table, run_suite, Suite};
use chromatopo::z2tools::{csorba_graph, lambda_map};
use clap::{Parser, Subcommand, ValueEnum};

/// Box complexes, exact homology and topological chromatic bounds.
#[derive(Parser)]
#[command(name = "chromatopo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a complex from a graph and print its facet list.
    Complex {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Graph file (edge list or DIMACS), `-` for stdin.
        graph: PathBuf,
    },
    /// Reduced homology of a facet list, or of a graph complex with `--kind`.
    Homology {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        /// Facet list, or a graph file when `--kind` is given.
        input: PathBuf,
    },
    /// The full ladder of chromatic lower bounds.
    Bounds {
        graph: PathBuf,
        /// Kneser representation for the colorability defect.
        #[arg(long)]
        repr: Option<PathBuf>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        json: bool,
    },
    /// The graph whose box complex recovers a free Z2-complex.
    Csorba { complex: PathBuf },
    /// The simplicial Z2-map sd(B(K_(d+1))) -> boundary of the d-dimensional cross-polytope.
    Map {
        #[arg(long, value_name = "D")]
        lambda: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    B,
    B0,
    N,
    Hom,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Gf2,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Examples,
    Arrows,
    Joins,
    Products,
    Csorba,
    Appendix,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn parse_error(message: impl ToString) -> Failure {
    Failure { code: 1, message: message.to_string() }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| parse_error(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| parse_error(format!("{}: {e}", path.display())))
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    parse_graph(&read_input(path)?).map_err(|e| parse_error(format!("{}: {e}", path.display())))
}

fn read_complex(path: &PathBuf) -> Result<Z2Complex, Failure> {
    Z2Complex::parse_facet_list(&read_input(path)?).map_err(|e| parse_error(format!("{}: {e}", path.display())))
}

fn build(kind: Kind, g: &Graph) -> Z2Complex {
    match kind {
        Kind::B => box_complex(g),
        Kind::B0 => box0_complex(g),
        Kind::N => neighborhood_complex(g),
        Kind::Hom => order_complex(&hom_poset(g)),
    }
}

fn caps() -> Result<SizeCaps, Failure> {
    SizeCaps::from_env().map_err(parse_error)
}

fn run(cli: Cli, out: &mut String) -> Result<(), Failure> {
    match cli.command {
        Command::Complex { kind, graph } => {
            out.push_str(&build(kind, &read_graph(&graph)?).to_facet_list());
        }
        Command::Homology { ring, kind, input } => {
            let k = match kind {
                Some(kind) => build(kind, &read_graph(&input)?),
                None => read_complex(&input)?,
            };
            let ring = match ring {
                RingArg::Gf2 => Ring::Gf2,
                RingArg::Z => Ring::Z,
            };
            out.push_str(&serde_json::to_string(&homology(&k, ring)).expect("summary serializes"));
            out.push('\n');
        }
        Command::Bounds { graph, repr, json, csv } => {
            let g = read_graph(&graph)?;
            let h = match repr {
                Some(p) => Some(Hypergraph::parse(&read_input(&p)?).map_err(|e| parse_error(format!("{}: {e}", p.display())))?),
                None => None,
            };
            let report = bounds_ladder(&g, h.as_ref(), &caps()?).map_err(|e| match e {
                BoundsError::NotARepresentation => parse_error(e),
                other => Failure { code: 2, message: other.to_string() },
            })?;
            if json {
                out.push_str(&serde_json::to_string_pretty(&report).expect("report serializes"));
                out.push('\n');
            } else if csv {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(CSV_HEADER).and_then(|_| w.write_record(report.csv_record())).expect("in-memory csv");
                out.push_str(&String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv"));
            } else {
                out.push_str(&report.to_text());
            }
            let skipped = report.skipped();
            if !skipped.is_empty() {
                return Err(Failure { code: 2, message: format!("size caps skipped: {}", skipped.join(", ")) });
            }
        }
        Command::Verify { suite, json } => {
            let suite = match suite {
                SuiteArg::Examples => Suite::Examples,
                SuiteArg::Arrows => Suite::Arrows,
                SuiteArg::Joins => Suite::Joins,
                SuiteArg::Products => Suite::Products,
                SuiteArg::Csorba => Suite::Csorba,
                SuiteArg::Appendix => Suite::Appendix,
            };
            let results = run_suite(suite, &caps()?);
            if json {
                out.push_str(&serde_json::to_string_pretty(&results).expect("results serialize"));
                out.push('\n');
            } else {
                out.push_str(&format_table(&results));
            }
            let failed = results.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(Failure { code: 3, message: format!("{failed} checks failed in suite {suite}") });
            }
        }
        Command::Csorba { complex } => {
            let g = csorba_graph(&read_complex(&complex)?).map_err(parse_error)?;
            for (v, label) in g.labels().unwrap_or_default().iter().enumerate() {
                out.push_str(&format!("c v {v} {label}\n"));
            }
            out.push_str(&g.to_edge_list());
        }
        Command::Map { lambda } => {
            out.push_str(&lambda_map(lambda).map_err(parse_error)?.to_text());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let result = run(cli, &mut out);
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("chromatopo: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
