//! Command-line front end for the `edgex` library.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use edgex::io::{
    read_coloring, read_graph, read_precoloring, read_product, to_dot, write_certificate,
    write_coloring, write_graph, write_precoloring, write_product, write_report, write_verdict,
};
use edgex::{
    build_claim9_instance, cartesian_product, check_local_obstruction, decide_extendable,
    explore_conjecture11, extend_hypercube, extend_over_complete, extend_over_hypercube,
    extend_over_star, verify_proper, Error, Family, Graph, Verdict,
};

#[derive(Parser)]
#[command(name = "edgex", version, about = "Extend precolored matchings to proper edge colorings")]
struct Cli {
    /// Output format for graphs and colorings.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Build a standard graph, e.g. `hypercube:3`, `spider:3,2`, `complete_bipartite:2,3`.
    Build {
        #[arg(long)]
        family: Family,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cartesian product of two graph files.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extend a precoloring of a product (or hypercube) to a full coloring.
    Extend {
        /// Base graph; not needed for `qd:D`.
        graph: Option<PathBuf>,
        /// `k2m:M`, `q:M`, `star:M` or `qd:D`.
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        precoloring: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a coloring is proper and keeps a precoloring.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        precoloring: Option<PathBuf>,
    },
    /// Decide exactly whether a precoloring extends with a given palette.
    Oracle {
        graph: PathBuf,
        precoloring: PathBuf,
        #[arg(long)]
        palette: u32,
        /// Maximum number of search nodes.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Write a non-extendable precolored product of two bipartite graphs.
    Counterexample {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Search `G □ K_{n,m}` for non-extendable precolorings.
    Explore11 {
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Number of instances to decide.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a graph, optionally colored, as DOT.
    ExportDot {
        graph: PathBuf,
        coloring: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy)]
enum Kind {
    Complete(usize),
    Cube(usize),
    Star(usize),
    Hypercube(usize),
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (tag, n) = s
            .split_once(':')
            .ok_or_else(|| format!("expected KIND:N, got `{s}`"))?;
        let n: usize = n.parse().map_err(|_| format!("bad number in `{s}`"))?;
        match tag {
            "k2m" => Ok(Kind::Complete(n)),
            "q" => Ok(Kind::Cube(n)),
            "star" => Ok(Kind::Star(n)),
            "qd" => Ok(Kind::Hypercube(n)),
            _ => Err(format!("unknown kind `{tag}`")),
        }
    }
}

enum Failure {
    Lib(Error),
    Input(String),
    Conflict(String),
    NotExtendable,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(read_graph(&read(path)?)?)
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let dot = cli.format == Format::Dot;
    match cli.command {
        Command::Build { family, output } => {
            let g = family.build()?;
            let text = if dot { to_dot(&g, None) } else { write_graph(&g) };
            emit(output.as_deref(), &text)
        }
        Command::Product { left, right, output } => {
            let p = cartesian_product(&load_graph(&left)?, &load_graph(&right)?)?;
            let text = if dot { to_dot(p.graph(), None) } else { write_product(&p) };
            emit(output.as_deref(), &text)
        }
        Command::Extend {
            graph,
            kind,
            precoloring,
            output,
        } => {
            let pre = read_precoloring(&read(&precoloring)?)?;
            let base = || -> Result<Graph, Failure> {
                let path = graph
                    .as_deref()
                    .ok_or_else(|| Failure::Input("a base graph file is required".into()))?;
                load_graph(path)
            };
            let (host, coloring) = match kind {
                Kind::Complete(m) => {
                    let g = base()?;
                    let col = extend_over_complete(&g, m, &pre)?;
                    (cartesian_product(&g, &Family::Complete(2 * m).build()?)?.into_graph(), col)
                }
                Kind::Cube(m) => {
                    let g = base()?;
                    let col = extend_over_hypercube(&g, m, &pre)?;
                    (cartesian_product(&g, &Family::Hypercube(m).build()?)?.into_graph(), col)
                }
                Kind::Star(m) => {
                    let g = base()?;
                    let col = extend_over_star(&g, m, &pre)?;
                    (cartesian_product(&g, &Family::Star(m).build()?)?.into_graph(), col)
                }
                Kind::Hypercube(d) => {
                    let col = extend_hypercube(d, &pre)?;
                    (Family::Hypercube(d).build()?, col)
                }
            };
            log::info!("colored {} edges with {} colors", coloring.len(), coloring.palette_size());
            let text = if dot {
                to_dot(&host, Some(&coloring))
            } else {
                write_coloring(&coloring)
            };
            emit(output.as_deref(), &text)
        }
        Command::Verify {
            graph,
            coloring,
            precoloring,
        } => {
            let g = load_graph(&graph)?;
            let col = read_coloring(&read(&coloring)?)?;
            let report = verify_proper(&g, &col, None)?;
            let mut problems = Vec::new();
            if !report.is_valid() {
                problems.push(report.to_string().trim_end().to_string());
            }
            let missing: Vec<String> = g
                .edges()
                .iter()
                .filter(|&&e| col.get(e).is_none())
                .map(|e| format!("edge {e} is uncolored"))
                .collect();
            problems.extend(missing);
            if let Some(path) = precoloring {
                let pre = read_precoloring(&read(&path)?)?;
                for (e, want, got) in pre.disagreements(&col) {
                    match got {
                        Some(c) => problems.push(format!("edge {e} colored {c}, precolored {want}")),
                        None => problems.push(format!("edge {e} uncolored, precolored {want}")),
                    }
                }
            }
            if problems.is_empty() {
                println!("valid");
                Ok(())
            } else {
                Err(Failure::Conflict(problems.join("\n")))
            }
        }
        Command::Oracle {
            graph,
            precoloring,
            palette,
            budget,
        } => {
            let g = match read_product(&read(&graph)?) {
                Ok(p) => p.into_graph(),
                Err(_) => load_graph(&graph)?,
            };
            let pre = read_precoloring(&read(&precoloring)?)?;
            let verdict = decide_extendable(&g, &pre, palette, budget)?;
            print!("{}", write_verdict(&verdict));
            match verdict {
                Verdict::Extendable(_) => Ok(()),
                Verdict::NotExtendable => Err(Failure::NotExtendable),
            }
        }
        Command::Counterexample {
            left,
            right,
            out_dir,
        } => {
            let inst = build_claim9_instance(&load_graph(&left)?, &load_graph(&right)?)?;
            let cert = check_local_obstruction(inst.product.graph(), &inst.precoloring)
                .ok_or_else(|| Error::InternalProofInvariantViolated("no obstruction at the hub".into()))?;
            fs::create_dir_all(&out_dir)
                .map_err(|e| Failure::Input(format!("{}: {e}", out_dir.display())))?;
            emit(Some(&out_dir.join("product.json")), &write_product(&inst.product))?;
            emit(
                Some(&out_dir.join("precoloring.json")),
                &write_precoloring(&inst.precoloring),
            )?;
            emit(Some(&out_dir.join("certificate.json")), &write_certificate(&cert))?;
            println!(
                "hub {} ({}), palette {}",
                inst.hub,
                inst.product.graph().label(inst.hub),
                inst.precoloring.palette_size()
            );
            Ok(())
        }
        Command::Explore11 {
            graph,
            n,
            m,
            budget,
            output,
        } => {
            let report = explore_conjecture11(&load_graph(&graph)?, n, m, budget, cli.seed)?;
            emit(output.as_deref(), &write_report(&report))?;
            if report.is_conclusive() {
                Ok(())
            } else {
                Err(Failure::Lib(Error::BudgetExceeded {
                    nodes: edgex::explore::NODE_BUDGET,
                }))
            }
        }
        Command::ExportDot {
            graph,
            coloring,
            output,
        } => {
            let g = load_graph(&graph)?;
            let col = coloring.map(|p| read(&p)).transpose()?;
            let col = col.map(|t| read_coloring(&t)).transpose()?;
            emit(output.as_deref(), &to_dot(&g, col.as_ref()))
        }
    }
}

fn init_logging() {
    let level = match std::env::var("EDGEX_LOG").as_deref() {
        Ok("quiet") => log::LevelFilter::Off,
        Ok("debug") => log::LevelFilter::Debug,
        Ok("info") => log::LevelFilter::Info,
        _ => log::LevelFilter::Warn,
    };
    env_logger::Builder::new().filter_level(level).init();
}

fn main() -> ExitCode {
    init_logging();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::NotExtendable) => {
            eprintln!("not extendable");
            ExitCode::from(4)
        }
        Err(Failure::Conflict(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::InvalidPrecoloring(_) => 2,
                ref e if e.is_internal() => 3,
                Error::BudgetExceeded { .. } => 5,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
