//! The `fob` command line. [`run_command`] does all the work and returns
//! the output instead of printing it, so it can be tested in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cycles::{directed_cocycles_through, enumerate_cocycles, SpanningTree};
use crate::delcon::{alpha_delcon, build_full_bijection, Formulation};
use crate::error::{Error, Result};
use crate::graph::EdgeId;
use crate::harness::{generate_random_bipolar, run_verification, Corpus, VerifyConfig};
use crate::io::{parse_graph_file, parse_ids, write_graph};
use crate::optimizer::{alpha_optimize, OptimizeOptions};
use crate::orientation::{alpha_bruteforce, invert_alpha, is_bipolar, Characterization, PDirection};

#[derive(Parser, Debug)]
#[command(name = "fob", about = "Fully optimal spanning trees of bipolar digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bipolarity w.r.t. the smallest edge under each characterization.
    Check { file: PathBuf },
    /// The fully optimal spanning tree.
    Alpha {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Optimize)]
        method: Method,
        #[arg(long, value_enum, default_value_t = FormulationArg::Cycle)]
        formulation: FormulationArg,
        /// Print the optimizer's step trace (optimize only).
        #[arg(long)]
        trace: bool,
    },
    /// The orientation whose fully optimal tree is the given tree.
    Invert {
        file: PathBuf,
        /// Tree edge ids, comma or space separated.
        #[arg(long)]
        tree: String,
        #[arg(long, value_enum, default_value_t = Direction::Fwd)]
        p_direction: Direction,
    },
    /// Every bipolar orientation (smallest edge forward) and its tree.
    Bijection { file: PathBuf },
    /// Cocycles, or the directed cocycles through an edge.
    Cocycles {
        file: PathBuf,
        #[arg(long)]
        directed_through: Option<u32>,
    },
    /// Cross-check all methods and properties over a corpus.
    Verify {
        #[arg(long, value_enum, default_value_t = CorpusArg::Exhaustive)]
        corpus: CorpusArg,
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
        #[arg(long, default_value_t = 6)]
        orderings: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
    },
    /// A random bipolar digraph in the graph file format.
    Gen {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Brute,
    Delcon,
    Optimize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormulationArg {
    Cycle,
    Cocycle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    Fwd,
    Rev,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CorpusArg {
    Exhaustive,
    Random,
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    /// 0 success, 1 failure, 2 usage error.
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs `fob` with `argv` (including the program name).
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if status == 0 { (text, String::new()) } else { (String::new(), text) };
            return CommandOutput { status, stdout, stderr };
        }
    };
    match execute(cli.command) {
        Ok((ok, stdout)) => CommandOutput {
            status: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => CommandOutput {
            status: match e {
                Error::Precondition(_) => 2,
                _ => 1,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(command: Command) -> Result<(bool, String)> {
    let mut out = String::new();
    match command {
        Command::Check { file } => {
            let g = parse_graph_file(file)?;
            let p = g.min_edge().ok_or(Error::EmptyGraph)?;
            for c in Characterization::ALL {
                let verdict = if is_bipolar(&g, p, c)? { "bipolar" } else { "not bipolar" };
                let _ = writeln!(out, "{}: {verdict}", c.name());
            }
        }
        Command::Alpha {
            file,
            method,
            formulation,
            trace,
        } => {
            let g = parse_graph_file(file)?;
            if trace && !matches!(method, Method::Optimize) {
                return Err(Error::Precondition("--trace needs --method optimize".into()));
            }
            let tree = match method {
                Method::Brute => alpha_bruteforce(&g)?,
                Method::Delcon => alpha_delcon(&g, match formulation {
                    FormulationArg::Cycle => Formulation::Cycle,
                    FormulationArg::Cocycle => Formulation::Cocycle,
                })?,
                Method::Optimize => {
                    let run = alpha_optimize(&g, OptimizeOptions { trace, check_invariants: false })?;
                    if let Some(t) = run.trace {
                        out.push_str(&t.render(&run.tree));
                        return Ok((true, out));
                    }
                    run.tree
                }
            };
            let _ = writeln!(out, "{tree}");
        }
        Command::Invert { file, tree, p_direction } => {
            let g = parse_graph_file(file)?;
            let tree = SpanningTree::new(parse_ids(&tree)?);
            let direction = match p_direction {
                Direction::Fwd => PDirection::Forward,
                Direction::Rev => PDirection::Reverse,
            };
            out.push_str(&write_graph(&invert_alpha(&g, &tree, direction)?));
        }
        Command::Bijection { file } => {
            let g = parse_graph_file(file)?;
            let p = g.min_edge().ok_or(Error::EmptyGraph)?;
            let table = build_full_bijection(&g, p)?;
            let _ = writeln!(out, "# edges {}", crate::io::format_ids(table.edges()));
            out.push_str(&table.to_string());
        }
        Command::Cocycles { file, directed_through } => {
            let g = parse_graph_file(file)?;
            match directed_through {
                Some(id) => {
                    for c in directed_cocycles_through(&g, EdgeId(id))? {
                        let _ = writeln!(out, "{c}");
                    }
                }
                None => {
                    for b in enumerate_cocycles(&g)? {
                        let _ = writeln!(out, "{} side={}", b.signed, b.side_labels(&g).join(","));
                    }
                }
            }
        }
        Command::Verify {
            corpus,
            max_vertices,
            max_edges,
            orderings,
            seed,
            count,
        } => {
            let config = VerifyConfig {
                corpus: match corpus {
                    CorpusArg::Exhaustive => Corpus::Exhaustive,
                    CorpusArg::Random => Corpus::Random,
                },
                max_vertices,
                max_edges,
                orderings,
                seed,
                count,
            };
            let report = run_verification(&config)?;
            out.push_str(&report.to_string());
            return Ok((report.is_success(), out));
        }
        Command::Gen { vertices, edges, seed } => {
            out.push_str(&write_graph(&generate_random_bipolar(vertices, edges, seed)?));
        }
    }
    Ok((true, out))
}
