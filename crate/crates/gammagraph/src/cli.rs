//! Command-line front end wiring the library together.
//!
//! Exit codes: 0 = completed (or suite passed), 1 = a verify suite found
//! hard violations, 2 = usage or parse error. Data goes to standard
//! output; progress and timing go to the diagnostic stream.

use crate::domination::enumerate_gamma_sets;
use crate::families;
use crate::gamma::{build_gamma_graph, Model};
use crate::gen::{self, HereditaryClass};
use crate::graph::Graph;
use crate::graph6;
use crate::search::{self, SearchOptions};
use crate::verify::{self, Suite};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::{Read, Write};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "gammagraph",
    version,
    about = "Gamma-graphs of small graphs: domination, reconfiguration, search, verification"
)]
struct Cli {
    /// Worker threads for the sweeps (default: all cores; output does not
    /// depend on the choice)
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Per-element records on the data stream where supported
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
    Dot,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    All,
    Bipartite,
    Trees,
}

#[derive(Subcommand)]
enum Command {
    /// Domination number and gamma-set count of a graph
    Gamma {
        /// graph6 or a family name (p4, c5, k6, k2,3); "-" or absent reads stdin
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Construct the gamma-graph of a graph
    GammaGraph {
        /// graph6 or a family name; "-" or absent reads stdin
        input: Option<String>,
        /// Adjacency model: slide or jump
        #[arg(long, default_value_t = Model::Slide)]
        model: Model,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Scan all small graphs whose gamma-graph matches a target
    Search {
        /// Target graph: graph6 or a family name
        target: String,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// Restrict the scan to bipartite base graphs
        #[arg(long)]
        bipartite: bool,
        #[arg(long, default_value_t = Model::Slide)]
        model: Model,
        /// graph6 file (one record per line) as the candidate source
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite over an exhaustive corpus
    Verify {
        /// observations | tree-bounds | small-order-connectivity | triangle-free | oracle
        suite: String,
        /// Largest order to scan (default depends on the suite)
        #[arg(long)]
        max_n: Option<usize>,
        /// graph6 file replacing the internal generator
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate isomorphism classes as graph6, one per line
    Gen {
        n: usize,
        #[arg(value_enum, default_value_t = GenKind::All)]
        kind: GenKind,
    },
}

/// Parses arguments, runs the command, writes data to `out` and
/// diagnostics to `err`, and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                // help or version text
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    let verbose = cli.verbose;
    let command = cli.command;
    let outcome = match cli.workers {
        Some(w) if w > 0 => {
            match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
                Ok(pool) => pool.install(|| dispatch(command, verbose, out, err)),
                Err(e) => {
                    let _ = writeln!(err, "error: cannot build a {w}-thread pool: {e}");
                    return EXIT_USAGE;
                }
            }
        }
        Some(_) => {
            let _ = writeln!(err, "error: --workers must be at least 1");
            return EXIT_USAGE;
        }
        None => dispatch(command, verbose, out, err),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(
    command: Command,
    verbose: bool,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> std::io::Result<i32> {
    match command {
        Command::Gamma { input, format } => cmd_gamma(input.as_deref(), format, out, err),
        Command::GammaGraph {
            input,
            model,
            format,
        } => cmd_gamma_graph(input.as_deref(), model, format, out, err),
        Command::Search {
            target,
            min_n,
            max_n,
            bipartite,
            model,
            corpus,
            format,
        } => cmd_search(
            &target,
            min_n,
            max_n,
            bipartite,
            model,
            corpus.as_deref(),
            format,
            verbose,
            out,
            err,
        ),
        Command::Verify {
            suite,
            max_n,
            corpus,
            format,
        } => cmd_verify(&suite, max_n, corpus.as_deref(), format, verbose, out, err),
        Command::Gen { n, kind } => cmd_gen(n, kind, out, err),
    }
}

/// Resolves an input argument to a graph: family name first, then graph6;
/// `None` or `-` reads one record from stdin.
fn resolve_graph(input: Option<&str>, err: &mut (dyn Write + Send)) -> std::io::Result<Option<Graph>> {
    let text = match input {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
        Some(s) => s.to_string(),
    };
    let trimmed = text.trim();
    if let Some(g) = families::parse_named(trimmed) {
        return Ok(Some(g));
    }
    match graph6::parse_graph6(trimmed.as_bytes()) {
        Ok(g) => Ok(Some(g)),
        Err(e) => {
            writeln!(err, "error: cannot parse input {trimmed:?}: {e}")?;
            Ok(None)
        }
    }
}

fn load_corpus(path: &str, err: &mut (dyn Write + Send)) -> std::io::Result<Option<Vec<Graph>>> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: cannot read corpus {path}: {e}")?;
            return Ok(None);
        }
    };
    let mut graphs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match graph6::parse_graph6(line.as_bytes()) {
            Ok(g) => graphs.push(g),
            Err(e) => {
                writeln!(err, "error: corpus {path}:{}: {e}", lineno + 1)?;
                return Ok(None);
            }
        }
    }
    Ok(Some(graphs))
}

fn cmd_gamma(
    input: Option<&str>,
    format: Format,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> std::io::Result<i32> {
    let Some(g) = resolve_graph(input, err)? else {
        return Ok(EXIT_USAGE);
    };
    let report = enumerate_gamma_sets(&g);
    match format {
        Format::Text => {
            writeln!(out, "gamma = {}", report.gamma)?;
            writeln!(out, "gamma-sets = {}", report.gamma_sets.len())?;
        }
        Format::Records => {
            writeln!(
                out,
                "gamma n={} gamma={} gamma_sets={}",
                g.n(),
                report.gamma,
                report.gamma_sets.len()
            )?;
        }
        _ => {
            writeln!(err, "error: gamma supports --format text|records")?;
            return Ok(EXIT_USAGE);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_gamma_graph(
    input: Option<&str>,
    model: Model,
    format: Format,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> std::io::Result<i32> {
    let Some(g) = resolve_graph(input, err)? else {
        return Ok(EXIT_USAGE);
    };
    let gg = build_gamma_graph(&g, model);
    match format {
        Format::Dot => {
            write!(out, "{}", gg.to_dot())?;
        }
        Format::Graph6 => {
            let as_graph = match gg.as_graph() {
                Ok(h) => h,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            match graph6::write_graph6(&as_graph) {
                Ok(s) => writeln!(out, "{s}")?,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_USAGE);
                }
            }
        }
        Format::Text => {
            writeln!(out, "model = {model}")?;
            writeln!(out, "vertices = {}", gg.order())?;
            for (i, d) in gg.gamma_sets().iter().enumerate() {
                writeln!(out, "{i}: {d}")?;
            }
            writeln!(out, "edges = {}", gg.edges().len())?;
            for &(i, j) in gg.edges() {
                writeln!(out, "{i} -- {j}")?;
            }
        }
        Format::Records => {
            writeln!(
                out,
                "gamma-graph model={model} order={} edges={}",
                gg.order(),
                gg.edges().len()
            )?;
            for (i, d) in gg.gamma_sets().iter().enumerate() {
                writeln!(out, "vertex i={i} set={d}")?;
            }
            for &(i, j) in gg.edges() {
                writeln!(out, "edge i={i} j={j}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    target: &str,
    min_n: usize,
    max_n: usize,
    bipartite: bool,
    model: Model,
    corpus: Option<&str>,
    format: Format,
    verbose: bool,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> std::io::Result<i32> {
    let Some(target) = resolve_graph(Some(target), err)? else {
        return Ok(EXIT_USAGE);
    };
    if verbose {
        writeln!(
            err,
            "scanning orders {min_n}..={max_n} (bipartite: {bipartite}, model: {model})"
        )?;
    }
    let started = std::time::Instant::now();
    let outcome = if let Some(path) = corpus {
        let Some(graphs) = load_corpus(path, err)? else {
            return Ok(EXIT_USAGE);
        };
        search::realizability_search_over(
            &target,
            &graphs,
            min_n,
            max_n,
            bipartite,
            model,
            SearchOptions::default(),
        )
    } else {
        search::realizability_search(&target, min_n, max_n, bipartite, model)
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    writeln!(err, "search finished in {:.3}s", started.elapsed().as_secs_f64())?;
    match format {
        Format::Records => write!(out, "{}", outcome.to_records())?,
        Format::Text => {
            writeln!(out, "target = {}", outcome.target_cert.graph6())?;
            writeln!(out, "model = {}", outcome.model)?;
            writeln!(out, "orders = {}..{}", outcome.n_lo, outcome.n_hi)?;
            writeln!(out, "bipartite-only = {}", outcome.bipartite_only)?;
            writeln!(out, "examined = {}", outcome.examined)?;
            writeln!(out, "pruned-by-count = {}", outcome.pruned_by_count)?;
            writeln!(out, "witnesses = {}", outcome.witnesses.len())?;
            for w in &outcome.witnesses {
                writeln!(out, "witness {w}")?;
            }
        }
        _ => {
            writeln!(err, "error: search supports --format text|records")?;
            return Ok(EXIT_USAGE);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    suite: &str,
    max_n: Option<usize>,
    corpus: Option<&str>,
    format: Format,
    verbose: bool,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> std::io::Result<i32> {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let max_n = max_n.unwrap_or_else(|| suite.default_max_n());
    let corpus_graphs = match corpus {
        Some(path) => match load_corpus(path, err)? {
            Some(graphs) => Some(graphs),
            None => return Ok(EXIT_USAGE),
        },
        None => None,
    };
    let mut element_lines: Vec<String> = Vec::new();
    let report = verify::run_suite_over(suite, max_n, corpus_graphs.as_deref(), &mut |line| {
        if verbose {
            element_lines.push(line.to_string());
        }
    });
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    for line in element_lines {
        writeln!(out, "{line}")?;
    }
    match format {
        Format::Records => {
            writeln!(out, "{}", report.summary_record())?;
            for v in &report.violations {
                writeln!(out, "violation {v}")?;
            }
            for a in &report.advisories {
                writeln!(out, "advisory {a}")?;
            }
            for (key, (m, l)) in &report.max_ratios {
                writeln!(out, "sharpest bound={key} measured={m} limit={l}")?;
            }
        }
        Format::Text => {
            writeln!(out, "suite = {}", report.suite)?;
            writeln!(out, "max-n = {}", report.max_n)?;
            writeln!(out, "corpus = {}", report.corpus_size)?;
            writeln!(out, "violations = {}", report.violations.len())?;
            writeln!(out, "advisories = {}", report.advisories.len())?;
            for v in &report.violations {
                writeln!(out, "violation {v}")?;
            }
            for a in &report.advisories {
                writeln!(out, "advisory {a}")?;
            }
            for (key, (m, l)) in &report.max_ratios {
                writeln!(out, "sharpest {key} = {m}/{l}")?;
            }
            writeln!(out, "result = {}", if report.passed() { "pass" } else { "fail" })?;
        }
        _ => {
            writeln!(err, "error: verify supports --format text|records")?;
            return Ok(EXIT_USAGE);
        }
    }
    writeln!(err, "suite ran in {:.3}s", report.elapsed.as_secs_f64())?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATIONS
    })
}

fn cmd_gen(
    n: usize,
    kind: GenKind,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> std::io::Result<i32> {
    let graphs = match kind {
        GenKind::All => gen::generate_graphs(n, |_| true),
        GenKind::Bipartite => gen::generate_graphs_in(n, HereditaryClass::Bipartite),
        GenKind::Trees => gen::generate_trees(n),
    };
    let graphs = match graphs {
        Ok(gs) => gs,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    for g in &graphs {
        writeln!(out, "{}", graph6::write_graph6(g).expect("generated graphs are small"))?;
    }
    writeln!(err, "{} graphs of order {n}", graphs.len())?;
    Ok(EXIT_OK)
}
