use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mongraph::digraph::{vertex_connectivity, EnumMode};
use mongraph::embed::{embed_monoid, embed_undirected, greedy_cover};
use mongraph::families::{self, ThresholdStep};
use mongraph::graph::{Digraph, Graph, SimpleGraph};
use mongraph::recognize::{
    self, Budget, CensusMode, Prunes, SearchOptions, SearchOutcome, SearchStatus,
};
use mongraph::record::WitnessRecord;
use mongraph::trees::{self, NecessaryFailure, TreeStatus};
use mongraph::witness::CayleyWitness;
use mongraph::{invariants, par, zelinka};

/// Decide whether graphs are Cayley graphs of monoids or semigroups, and
/// produce verifiable witnesses.
#[derive(Parser)]
#[command(name = "mongraph", version)]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// Search nodes before giving up (exit 2).
    #[arg(long, global = true, default_value_t = 100_000_000)]
    max_nodes: u64,
    /// Wall-clock seconds before giving up (exit 2); 0 means unlimited.
    #[arg(long, global = true, default_value_t = 600)]
    max_seconds: u64,
    /// Worker threads; 1 is sequential and byte-stable, 0 uses every core.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Cycle lengths and depths of a 1-outregular digraph, and the monoid and
    /// semigroup verdicts.
    CheckZelinka { input: Option<PathBuf> },
    /// Witness for a 1-outregular digraph with |C| = 1.
    ConstructZelinka {
        input: Option<PathBuf>,
        /// Build an identity-free semigroup instead of a monoid.
        #[arg(long)]
        semigroup: bool,
    },
    /// Embed a sink-free digraph (or a graph) into a monoid Cayley graph.
    Embed {
        input: Option<PathBuf>,
        /// Number of maps covering the arcs; defaults to the maximum outdegree.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive table search.
    Recognize {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Monoid-graph mode: also require the connection set to generate.
        #[arg(long)]
        generated: bool,
    },
    /// Arboricity, independence, spectrum and the non-monoid certificate.
    Invariants {
        input: Option<PathBuf>,
        /// Edges joining the graph to the clique.
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Clique order for the certificate.
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Emit a family member in the graph text format.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Generated-monoid-graph verdict for a tree.
    TreeClassify {
        input: Option<PathBuf>,
        /// Run the table search when the structural tests are undecided.
        #[arg(long)]
        escalate: bool,
    },
    /// Decide every isomorphism class of a given order; TSV on stdout.
    Census {
        n: usize,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Graphs to enumerate; defaults to outregular digraphs for the
        /// directed modes and all simple graphs otherwise.
        #[arg(long, value_enum)]
        domain: Option<Domain>,
    },
    /// Re-derive every check of a witness record.
    VerifyWitness { input: Option<PathBuf> },
}

#[derive(Subcommand)]
enum Family {
    /// G_{k,l}.
    Gkl { k: usize, ell: usize },
    /// G_{k,l,kappa}.
    Gklk { k: usize, ell: usize, kappa: usize },
    /// Threshold graph with witness; steps are `i` or `d`.
    Threshold { steps: Vec<ThresholdStep> },
    /// K4 plus a disjoint cycle of length l.
    K4Cl { ell: usize },
    /// Perfect k-ary tree of height h.
    PerfectKary { k: usize, h: usize },
    /// Perfect k-ary tree of height h with one extra leaf.
    Tplus { k: usize, h: usize },
    /// Outregular non-semigroup digraph on three vertices.
    Fig2,
    /// Smallest tree that is not a generated monoid graph.
    SmallestTree,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    MonoidDigraph,
    SemigroupDigraph,
    MonoidGraph,
    Sabidussi,
}

impl From<Mode> for CensusMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::MonoidDigraph => CensusMode::MonoidDigraph,
            Mode::SemigroupDigraph => CensusMode::SemigroupDigraph,
            Mode::MonoidGraph => CensusMode::MonoidGraph,
            Mode::Sabidussi => CensusMode::Sabidussi,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Domain {
    Simple,
    Digraph,
    MinOutdegOne,
    Outregular,
    OneOutregular,
    Tree,
}

impl From<Domain> for EnumMode {
    fn from(d: Domain) -> Self {
        match d {
            Domain::Simple => EnumMode::Simple,
            Domain::Digraph => EnumMode::Digraph,
            Domain::MinOutdegOne => EnumMode::DigraphMinOutdeg1,
            Domain::Outregular => EnumMode::Outregular,
            Domain::OneOutregular => EnumMode::OneOutregular,
            Domain::Tree => EnumMode::Tree,
        }
    }
}

/// What a subcommand concluded.
enum Outcome {
    Decided,
    OverBudget,
    /// Ran to completion, but the input is not acceptable (failed verification).
    Rejected,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli, &mut out) {
        Ok(Outcome::Decided) => ExitCode::SUCCESS,
        Ok(Outcome::OverBudget) => ExitCode::from(2),
        Ok(Outcome::Rejected) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            if matches!(
                e.downcast_ref::<mongraph::Error>(),
                Some(mongraph::Error::BudgetExceeded(_))
            ) {
                eprintln!("mongraph: {e:#}");
                return ExitCode::from(2);
            }
            eprintln!("mongraph: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Outcome> {
    par::set_workers(cli.budget.workers);
    let opts = SearchOptions {
        budget: Budget {
            max_nodes: cli.budget.max_nodes,
            max_time: (cli.budget.max_seconds > 0)
                .then(|| Duration::from_secs(cli.budget.max_seconds)),
            workers: cli.budget.workers,
        },
        prunes: Prunes::default(),
        generated: false,
    };
    match cli.command {
        Command::CheckZelinka { input } => {
            let g = directed(read_graph(input)?)?;
            let p = zelinka::profile(&g)?;
            for (i, c) in p.components.iter().enumerate() {
                writeln!(
                    out,
                    "component {i} size {} cycle_length {} depth {}",
                    c.vertices.len(),
                    c.cycle_length,
                    c.depth
                )?;
            }
            let show = |c: Option<usize>| c.map_or("no".to_string(), |c| format!("yes {c}"));
            writeln!(out, "monoid {}", show(zelinka::decide_monoid(&p)))?;
            writeln!(out, "semigroup {}", show(zelinka::decide_semigroup(&p)))?;
            Ok(Outcome::Decided)
        }
        Command::ConstructZelinka { input, semigroup } => {
            let g = directed(read_graph(input)?)?;
            let p = zelinka::profile(&g)?;
            let exists = if semigroup {
                zelinka::decide_semigroup(&p)
            } else {
                zelinka::decide_monoid(&p)
            };
            if exists.is_none() {
                writeln!(out, "# result no")?;
                return Ok(Outcome::Decided);
            }
            let w = if semigroup {
                zelinka::construct_semigroup(&g)?
            } else {
                zelinka::construct_monoid(&g)?
            };
            writeln!(out, "# result yes")?;
            emit(out, Graph::Directed(g), w)
        }
        Command::Embed { input, k } => {
            let g = read_graph(input)?;
            let w = match &g {
                Graph::Directed(d) => {
                    let k = k.unwrap_or_else(|| d.max_outdegree());
                    embed_monoid(d, &greedy_cover(d, k)?)?
                }
                Graph::Undirected(s) => {
                    if k.is_some() {
                        bail!("--k applies to digraphs; graphs use the pseudoarboricity");
                    }
                    embed_undirected(s)?
                }
            };
            writeln!(out, "# connection_size {}", w.connection.len())?;
            writeln!(out, "# monoid_order {}", w.table.order())?;
            emit(out, g, w)
        }
        Command::Recognize {
            input,
            mode,
            generated,
        } => {
            let g = read_graph(input)?;
            let opts = SearchOptions { generated, ..opts };
            let outcome = recognize::decide(&g, mode.into(), &opts)?;
            report_search(out, g, outcome)
        }
        Command::Invariants { input, k, ell } => {
            let g = undirected(read_graph(input)?)?;
            invariants_report(out, &g, k, ell)?;
            Ok(Outcome::Decided)
        }
        Command::Gen { family } => generate(out, family),
        Command::TreeClassify { input, escalate } => {
            let t = undirected(read_graph(input)?)?;
            let (verdict, search) = if escalate {
                trees::classify_tree_escalated(&t, &opts)?
            } else {
                (trees::classify_tree(&t)?, None)
            };
            writeln!(out, "# verdict {}", verdict.label())?;
            writeln!(out, "# candidate\tsufficient\tpart2\tnecessary")?;
            for c in &verdict.candidates {
                let nec = match &c.necessary {
                    Ok(()) => "ok".to_string(),
                    Err(NecessaryFailure::Part1 { x }) => format!("fails-part1 x={x}"),
                    Err(NecessaryFailure::Part2 { x, c }) => format!("fails-part2 x={x} c={c}"),
                };
                writeln!(
                    out,
                    "# {}\t{}\t{}\t{}",
                    c.e, c.sufficient, c.part2_applied, nec
                )?;
            }
            if let Some(s) = &search {
                writeln!(out, "# escalated {}", s.status.label())?;
                writeln!(out, "# nodes {}", s.nodes_explored)?;
            }
            match verdict.status {
                TreeStatus::Yes(w) => emit(out, Graph::Undirected(t), *w),
                TreeStatus::No => Ok(Outcome::Decided),
                TreeStatus::Undecided if escalate => Ok(Outcome::OverBudget),
                TreeStatus::Undecided => Ok(Outcome::Decided),
            }
        }
        Command::Census { n, mode, domain } => {
            let mode: CensusMode = mode.into();
            let domain = domain.map_or_else(|| mode.default_domain(), Into::into);
            let report = recognize::classify_all(n, mode, domain, &opts)?;
            write!(out, "{}", report.to_tsv())?;
            Ok(if report.count("budget-exceeded") > 0 {
                Outcome::OverBudget
            } else {
                Outcome::Decided
            })
        }
        Command::VerifyWitness { input } => {
            let rec = WitnessRecord::parse(&read_input(input)?)?;
            let v = rec.verify();
            for (k, b) in &v.checks {
                writeln!(out, "{k} {b}")?;
            }
            let matches = rec.transcript.is_empty() || rec.transcript_matches(&v);
            writeln!(out, "transcript_matches {matches}")?;
            Ok(if v.all_ok() && matches {
                Outcome::Decided
            } else {
                Outcome::Rejected
            })
        }
    }
}

fn emit(out: &mut impl Write, graph: Graph, w: CayleyWitness) -> Result<Outcome> {
    let rec = WitnessRecord::new(graph, w);
    if !rec.verify().all_ok() {
        bail!("internal: emitted witness fails verification");
    }
    write!(out, "{rec}")?;
    Ok(Outcome::Decided)
}

fn report_search(out: &mut impl Write, g: Graph, o: SearchOutcome) -> Result<Outcome> {
    writeln!(out, "# status {}", o.status.label())?;
    writeln!(out, "# nodes {}", o.nodes_explored)?;
    match o.status {
        SearchStatus::Witness(w) => emit(out, g, *w),
        SearchStatus::ExhaustedNo => Ok(Outcome::Decided),
        SearchStatus::BudgetExceeded => Ok(Outcome::OverBudget),
    }
}

fn generate(out: &mut impl Write, family: Family) -> Result<Outcome> {
    let g = match family {
        Family::Gkl { k, ell } => Graph::Directed(families::gen_gkl(k, ell)?),
        Family::Gklk { k, ell, kappa } => {
            let m = families::gen_gklk(k, ell, kappa)?;
            let sizes: Vec<String> = m.layer_sizes.iter().map(usize::to_string).collect();
            writeln!(out, "# layer_sizes {}", sizes.join(" "))?;
            Graph::Directed(m.graph)
        }
        Family::Threshold { steps } => {
            let (g, w) = families::gen_threshold(&steps)?;
            return emit(out, Graph::Undirected(g), w);
        }
        Family::K4Cl { ell } => Graph::Undirected(families::gen_k4_cl(ell)?),
        Family::PerfectKary { k, h } => Graph::Undirected(families::gen_perfect_kary(k, h)?),
        Family::Tplus { k, h } => Graph::Undirected(families::gen_tplus(k, h)?),
        Family::Fig2 => Graph::Directed(families::fig2_digraph()),
        Family::SmallestTree => Graph::Undirected(families::smallest_tree()),
    };
    write!(out, "{g}")?;
    Ok(Outcome::Decided)
}

fn invariants_report(
    out: &mut impl Write,
    g: &SimpleGraph,
    k: usize,
    ell: Option<usize>,
) -> Result<()> {
    let n = g.order();
    writeln!(out, "n {n}")?;
    writeln!(out, "m {}", g.edge_count())?;
    writeln!(out, "min_degree {}", g.min_degree())?;
    writeln!(out, "max_degree {}", g.max_degree())?;
    writeln!(out, "pseudoarboricity {}", invariants::pseudoarboricity(g))?;
    match invariants::arboricity(g) {
        Ok(a) => writeln!(out, "arboricity {a}")?,
        Err(_) => writeln!(out, "arboricity -")?,
    }
    match invariants::independence_number(g) {
        Ok(a) => writeln!(out, "independence_number {a}")?,
        Err(_) => writeln!(out, "independence_number -")?,
    }
    if k > 0 {
        match invariants::beta(g, k) {
            Ok(b) => writeln!(out, "beta {b}")?,
            Err(e) => writeln!(out, "beta - ({e})")?,
        }
    }
    match vertex_connectivity(g) {
        Ok(c) => writeln!(out, "vertex_connectivity {c}")?,
        Err(_) => writeln!(out, "vertex_connectivity -")?,
    }
    let p = invariants::spectrum(g)?;
    let eig: Vec<String> = p.eigenvalues.iter().map(|x| format!("{x:.6}")).collect();
    writeln!(out, "eigenvalues {}", eig.join(" "))?;
    if let (Some(d), Some(l)) = (p.d, p.lambda) {
        writeln!(out, "regular_degree {d}")?;
        writeln!(out, "lambda {l:.9}")?;
        if let Some(m) = p.mixing_lambda {
            writeln!(out, "mixing_lambda {m:.9}")?;
        }
        if let Ok(c) = invariants::connectivity_bound(&p) {
            writeln!(out, "connectivity_bound {c}")?;
        }
        if let Ok(u) = invariants::beta_upper_bound(&p, k) {
            writeln!(
                out,
                "beta_upper_bound {u} ({:.6})",
                invariants::ratio_to_f64(&u)
            )?;
        }
    }
    if let Some(ell) = ell {
        let cert = invariants::nonmonoid_certificate(g, k, ell)?;
        writeln!(out, "[certificate]")?;
        write!(out, "{cert}")?;
    }
    Ok(())
}

fn read_input(path: Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            Ok(s)
        }
    }
}

/// A bare graph, or the `[graph]` section of a record.
fn read_graph(path: Option<PathBuf>) -> Result<Graph> {
    let text = read_input(path)?;
    let lines: Vec<&str> = text.lines().collect();
    if let Some(start) = lines.iter().position(|l| l.trim() == "[graph]") {
        let end = lines[start + 1..]
            .iter()
            .position(|l| l.trim().starts_with('['))
            .map_or(lines.len(), |i| start + 1 + i);
        // blank out the other lines so reported line numbers stay file lines
        let body: String = lines
            .iter()
            .enumerate()
            .map(|(i, l)| {
                if i > start && i < end {
                    format!("{l}\n")
                } else {
                    "\n".into()
                }
            })
            .collect();
        return Ok(Graph::parse(&body)?);
    }
    Ok(Graph::parse(&text)?)
}

fn directed(g: Graph) -> Result<Digraph> {
    match g {
        Graph::Directed(d) => Ok(d),
        Graph::Undirected(_) => Err(anyhow!("expected a directed graph")),
    }
}

fn undirected(g: Graph) -> Result<SimpleGraph> {
    match g {
        Graph::Undirected(s) => Ok(s),
        Graph::Directed(_) => Err(anyhow!("expected an undirected graph")),
    }
}
