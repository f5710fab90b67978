//! Command-line surface for the nonrepetitive colouring toolkit: generate
//! graphs, colour them with the named constructions, verify properties, run
//! the exact solvers, inspect decompositions, and stream explorer reports.
//!
//! Exit codes are the machine contract: 0 clean/none/valid, 1 bad parameters
//! or unreadable input, 2 witness or failed validation, 3 undecided (budget
//! ran out). Every executed run emits a manifest (command line, seed,
//! version, input and output hashes) to `--manifest` or stderr so reruns can
//! be checked for reproducibility.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use nonrep_core::construct::{
    cycle_pi_colouring, cycle_sigma5_colouring, extremal_colouring, greedy_square_colouring,
    levelling_colouring, path_colouring_3, plus_path_colouring_4, sigma_lex_colouring,
    subdivision_colouring, tree_pi_colouring, tree_sigma_colouring,
};
use nonrep_core::decompose::{tree_decomposition, tree_partition, treewidth_colouring, ColourMode};
use nonrep_core::exact::{exact_pi, exact_sigma, explore_smallwalks};
use nonrep_core::graph::{
    build_spaced_subdivision, gen_complete, gen_cycle, gen_extremal, gen_lex_product,
    gen_looped_path, gen_path, gen_petersen, gen_random_graph, gen_random_partial_ktree,
    gen_random_tree, gen_star,
};
use nonrep_core::verify::{
    find_repetitive_path, find_repetitive_walk, is_distance2, is_proper, is_star_colouring,
    validate_levelling, validate_shadow_complete, validate_tree_decomposition,
    validate_tree_partition, VerdictStatus,
};
use nonrep_core::words::{find_square, kp_insert, kp_word, thue_expand, thue_word, Alphabet, Word};
use nonrep_core::{Colouring, Error, Graph, Levelling};
use nonrep_core::decompose::{TreeDecomposition, TreePartition};

/// Fixed fallback so unseeded runs are still reproducible.
const DEFAULT_SEED: u64 = 17;

const EXIT_OK: u8 = 0;
const EXIT_WITNESS: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "nonrep",
    version,
    about = "Nonrepetitive graph colouring: generators, constructions, verifiers, exact solvers"
)]
struct Cli {
    /// Write the run manifest to this file instead of stderr.
    #[arg(long, global = true, value_name = "FILE")]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Produce a colouring with one of the named constructions.
    Colour {
        #[command(subcommand)]
        algo: ColourAlgo,
    },
    /// Check a property of a coloured or levelled graph.
    Verify {
        #[command(subcommand)]
        property: VerifyProp,
    },
    /// Solve a small instance exactly.
    Exact {
        #[command(subcommand)]
        kind: ExactKind,
    },
    /// Sample random instances and stream minimized walk witnesses.
    Explore {
        /// Largest vertex count to sample.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Largest colour count to sample.
        #[arg(long, default_value_t = 3)]
        colour_max: u32,
        /// Number of sampled instances.
        #[arg(long, default_value_t = 200)]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Keep only distance-2, path-clean instances whose walks still fail.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        filter_conjecture: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Compute a decomposition of the input graph.
    Decompose {
        #[command(subcommand)]
        kind: DecomposeKind,
    },
    /// Word kernels; words print as plain digit strings.
    Word {
        #[command(subcommand)]
        op: WordOp,
    },
}

#[derive(Args)]
struct OutOpts {
    /// Output file; stdout when absent.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Graph output format (DOT is write-only).
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Path on n vertices.
    Path {
        n: usize,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Cycle on n vertices.
    Cycle {
        n: usize,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Complete graph on n vertices.
    Complete {
        n: usize,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Star with n-1 leaves.
    Star {
        n: usize,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Path on n vertices with a loop at every vertex.
    LoopedPath {
        n: usize,
        #[command(flatten)]
        out: OutOpts,
    },
    /// The Petersen graph.
    Petersen {
        #[command(flatten)]
        out: OutOpts,
    },
    /// Uniform random labelled tree.
    RandomTree {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Independent edges with probability p.
    RandomGraph {
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Random partial k-tree with a degree cap.
    PartialKtree {
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 6)]
        deg_cap: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also write the witnessing tree decomposition.
        #[arg(long, value_name = "FILE")]
        decomposition_out: Option<PathBuf>,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Densest graph admitting a path-clean c-colouring.
    Extremal {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        n: usize,
        /// Also write the witnessing colouring.
        #[arg(long, value_name = "FILE")]
        colouring_out: Option<PathBuf>,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Layered product of a path with cliques of size p.
    LexProduct {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
        /// Also write the layer levelling.
        #[arg(long, value_name = "FILE")]
        levelling_out: Option<PathBuf>,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Subdivide every edge of the input graph along its index gap.
    Subdivision {
        /// Graph JSON to subdivide.
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Levels per index step; 2 guarantees a 4-colour path-clean result.
        #[arg(long, default_value_t = 1)]
        spacing: usize,
        /// Also write the vertex levelling.
        #[arg(long, value_name = "FILE")]
        levelling_out: Option<PathBuf>,
        #[command(flatten)]
        out: OutOpts,
    },
}

#[derive(Args)]
struct GraphIn {
    /// Graph JSON file.
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
}

#[derive(Subcommand)]
enum ColourAlgo {
    /// Three colours for a path (vertices numbered along it).
    Path {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Four colours keeping a looped path walk-clean.
    PlusPath {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Fewest colours for a cycle (vertices numbered around it).
    CyclePi {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Five colours keeping a cycle walk-clean.
    CycleSigma5 {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Four colours keeping a tree path-clean.
    TreePi {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// At most 4*max_degree colours keeping a tree walk-clean.
    TreeSigma {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Greedy proper colouring of the square.
    GreedySquare {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Four colours from a validated levelling.
    Levelling {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        levelling: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Path-clean colouring from the tree-partition pipeline.
    TreewidthPath {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Walk-clean colouring from the tree-partition pipeline.
    TreewidthWalk {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Witnessing colouring of the extremal construction.
    Extremal {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// At most 4p colours keeping the layered product walk-clean.
    SigmaLex {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Subdivide the input and colour the result path-clean with 4 colours.
    Subdivision {
        /// Graph JSON to subdivide and colour.
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Also write the subdivided graph the colouring applies to.
        #[arg(long, value_name = "FILE")]
        subdivision_out: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ColouredIn {
    #[command(flatten)]
    graph: GraphIn,
    /// Colouring JSON file.
    #[arg(long, value_name = "FILE")]
    colouring: PathBuf,
}

#[derive(Subcommand)]
enum VerifyProp {
    /// Search for a repetitively coloured path (exit 2 prints the witness).
    Path {
        #[command(flatten)]
        input: ColouredIn,
        /// Node expansions before giving up (exit 3).
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Search for a repetitively coloured non-boring walk.
    Walk {
        #[command(flatten)]
        input: ColouredIn,
        /// Shrink the witness to the minimum length.
        #[arg(long)]
        minimize: bool,
    },
    /// Adjacent vertices get distinct colours.
    Proper {
        #[command(flatten)]
        input: ColouredIn,
    },
    /// Vertices at distance at most two get distinct colours.
    Distance2 {
        #[command(flatten)]
        input: ColouredIn,
    },
    /// Proper with no path on four vertices coloured a,b,a,b.
    Star {
        #[command(flatten)]
        input: ColouredIn,
    },
    /// Every edge stays within one level or joins adjacent levels.
    Levelling {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        levelling: PathBuf,
    },
    /// Levelling where every vertex has a neighbour one level down.
    Shadow {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        levelling: PathBuf,
    },
    /// Bags partition the vertices and collapse the graph to a forest.
    TreePartition {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        partition: PathBuf,
    },
    /// Bags cover vertices and edges and stay connected per vertex.
    TreeDecomposition {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        decomposition: PathBuf,
    },
}

#[derive(Subcommand)]
enum ExactKind {
    /// Fewest colours with no repetitively coloured path.
    Pi {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Fewest colours with no repetitively coloured non-boring walk.
    Sigma {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DecomposeKind {
    /// Bags partitioning the vertices over a host forest.
    TreePartition {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Classic tree decomposition via min-fill elimination.
    TreeDecomposition {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum WordOp {
    /// Prefix of the square-free ternary fixed point.
    Thue {
        #[arg(long)]
        len: usize,
    },
    /// Ternary fixed point with the separator 4 after every second symbol.
    Kp {
        #[arg(long)]
        len: usize,
    },
    /// One round of the ternary expansion.
    Expand {
        /// Digits over 1..=3.
        word: String,
    },
    /// Insert the separator 4 after every block of two symbols.
    KpInsert {
        /// Digits over 1..=3.
        word: String,
    },
    /// Report the shortest square, preferring the leftmost.
    FindSquare {
        /// Digits over the chosen alphabet.
        word: String,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Ternary)]
        alphabet: AlphabetArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetArg {
    Ternary,
    Quaternary,
}

/// Bookkeeping for the run manifest.
struct Ctx {
    argv: Vec<String>,
    seed: Option<u64>,
    inputs: BTreeMap<String, String>,
    outputs: BTreeMap<String, String>,
}

impl Ctx {
    fn new(argv: Vec<String>) -> Self {
        Ctx {
            argv,
            seed: None,
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
        }
    }

    fn read_input(&mut self, path: &Path) -> anyhow::Result<String> {
        let data = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        self.inputs
            .insert(path.display().to_string(), sha256_hex(data.as_bytes()));
        Ok(data)
    }

    /// Writes to the file or stdout and records the payload hash.
    fn write_output(&mut self, out: Option<&Path>, payload: &str) -> anyhow::Result<()> {
        let hash = sha256_hex(payload.as_bytes());
        match out {
            Some(path) => {
                fs::write(path, payload)
                    .with_context(|| format!("writing {}", path.display()))?;
                self.outputs.insert(path.display().to_string(), hash);
            }
            None => {
                println!("{payload}");
                self.outputs.insert("stdout".to_string(), hash);
            }
        }
        Ok(())
    }

    fn manifest_json(&self) -> String {
        serde_json::json!({
            "command": self.argv,
            "seed": self.seed,
            "version": env!("CARGO_PKG_VERSION"),
            "inputs": self.inputs,
            "outputs": self.outputs,
        })
        .to_string()
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

fn read_graph(ctx: &mut Ctx, path: &Path) -> anyhow::Result<Graph> {
    let data = ctx.read_input(path)?;
    Ok(Graph::from_json(&data)?)
}

fn read_colouring(ctx: &mut Ctx, path: &Path) -> anyhow::Result<Colouring> {
    let data = ctx.read_input(path)?;
    Ok(Colouring::from_json(&data)?)
}

fn read_levelling(ctx: &mut Ctx, path: &Path) -> anyhow::Result<Levelling> {
    let data = ctx.read_input(path)?;
    Ok(Levelling::from_json(&data)?)
}

fn write_graph(ctx: &mut Ctx, out: &OutOpts, g: &Graph) -> anyhow::Result<()> {
    let payload = match out.format {
        Format::Json => g.to_json(),
        Format::Dot => g.to_dot(None),
    };
    ctx.write_output(out.out.as_deref(), &payload)
}

/// Maps a boolean validation onto the witness-style exit codes.
fn bool_exit(ctx: &mut Ctx, ok: bool) -> anyhow::Result<u8> {
    ctx.write_output(None, &serde_json::json!({ "ok": ok }).to_string())?;
    Ok(if ok { EXIT_OK } else { EXIT_WITNESS })
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            );
            let _ = e.print();
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    let manifest_to = cli.manifest.clone();
    let mut ctx = Ctx::new(argv);
    match run(cli.command, &mut ctx) {
        Ok(code) => {
            let manifest = ctx.manifest_json();
            match manifest_to.as_deref() {
                Some(path) => {
                    if let Err(e) = fs::write(path, &manifest) {
                        eprintln!("nonrep: writing manifest: {e}");
                        return ExitCode::from(1);
                    }
                }
                None => eprintln!("{manifest}"),
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("nonrep: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, ctx: &mut Ctx) -> anyhow::Result<u8> {
    match command {
        Command::Gen { family } => run_gen(family, ctx),
        Command::Colour { algo } => run_colour(algo, ctx),
        Command::Verify { property } => run_verify(property, ctx),
        Command::Exact { kind } => run_exact(kind, ctx),
        Command::Explore {
            n_max,
            colour_max,
            samples,
            seed,
            filter_conjecture,
            out,
        } => {
            ctx.seed = Some(seed);
            let report = explore_smallwalks(n_max, colour_max, samples, seed, filter_conjecture)?;
            ctx.write_output(out.as_deref(), &report.to_json_lines())?;
            Ok(EXIT_OK)
        }
        Command::Decompose { kind } => run_decompose(kind, ctx),
        Command::Word { op } => run_word(op, ctx),
    }
}

fn run_gen(family: GenFamily, ctx: &mut Ctx) -> anyhow::Result<u8> {
    match family {
        GenFamily::Path { n, out } => write_graph(ctx, &out, &gen_path(n)?),
        GenFamily::Cycle { n, out } => write_graph(ctx, &out, &gen_cycle(n)?),
        GenFamily::Complete { n, out } => write_graph(ctx, &out, &gen_complete(n)?),
        GenFamily::Star { n, out } => write_graph(ctx, &out, &gen_star(n)?),
        GenFamily::LoopedPath { n, out } => write_graph(ctx, &out, &gen_looped_path(n)?),
        GenFamily::Petersen { out } => write_graph(ctx, &out, &gen_petersen()),
        GenFamily::RandomTree { n, seed, out } => {
            ctx.seed = Some(seed);
            write_graph(ctx, &out, &gen_random_tree(n, seed)?)
        }
        GenFamily::RandomGraph { n, p, seed, out } => {
            ctx.seed = Some(seed);
            write_graph(ctx, &out, &gen_random_graph(n, p, seed)?)
        }
        GenFamily::PartialKtree {
            n,
            k,
            deg_cap,
            seed,
            decomposition_out,
            out,
        } => {
            ctx.seed = Some(seed);
            let (g, td) = gen_random_partial_ktree(n, k, deg_cap, seed)?;
            if let Some(path) = decomposition_out {
                ctx.write_output(Some(&path), &td.to_json())?;
            }
            write_graph(ctx, &out, &g)
        }
        GenFamily::Extremal {
            c,
            n,
            colouring_out,
            out,
        } => {
            let (g, col) = gen_extremal(c, n)?;
            if let Some(path) = colouring_out {
                ctx.write_output(Some(&path), &col.to_json())?;
            }
            write_graph(ctx, &out, &g)
        }
        GenFamily::LexProduct {
            m,
            p,
            levelling_out,
            out,
        } => {
            let (g, lev) = gen_lex_product(m, p)?;
            if let Some(path) = levelling_out {
                ctx.write_output(Some(&path), &lev.to_json())?;
            }
            write_graph(ctx, &out, &g)
        }
        GenFamily::Subdivision {
            input,
            spacing,
            levelling_out,
            out,
        } => {
            let g = read_graph(ctx, &input)?;
            let sub = build_spaced_subdivision(&g, spacing)?;
            if let Some(path) = levelling_out {
                ctx.write_output(Some(&path), &sub.levelling.to_json())?;
            }
            write_graph(ctx, &out, &sub.graph)
        }
    }
    .map(|()| EXIT_OK)
}

fn run_colour(algo: ColourAlgo, ctx: &mut Ctx) -> anyhow::Result<u8> {
    let (colouring, out) = match algo {
        ColourAlgo::Path { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            (path_colouring_3(g.n())?, out)
        }
        ColourAlgo::PlusPath { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            (plus_path_colouring_4(g.n())?, out)
        }
        ColourAlgo::CyclePi { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            (cycle_pi_colouring(g.n())?, out)
        }
        ColourAlgo::CycleSigma5 { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            (cycle_sigma5_colouring(g.n())?, out)
        }
        ColourAlgo::TreePi { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            (tree_pi_colouring(&g)?, out)
        }
        ColourAlgo::TreeSigma { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            (tree_sigma_colouring(&g)?, out)
        }
        ColourAlgo::GreedySquare { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            (greedy_square_colouring(&g), out)
        }
        ColourAlgo::Levelling {
            graph,
            levelling,
            out,
        } => {
            let g = read_graph(ctx, &graph.graph)?;
            let lev = read_levelling(ctx, &levelling)?;
            (levelling_colouring(&g, &lev)?, out)
        }
        ColourAlgo::TreewidthPath { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            (treewidth_colouring(&g, ColourMode::Path)?.into_colouring(), out)
        }
        ColourAlgo::TreewidthWalk { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            (treewidth_colouring(&g, ColourMode::Walk)?.into_colouring(), out)
        }
        ColourAlgo::Extremal { c, n, out } => (extremal_colouring(c, n)?, out),
        ColourAlgo::SigmaLex { m, p, out } => (sigma_lex_colouring(m, p)?, out),
        ColourAlgo::Subdivision {
            input,
            subdivision_out,
            out,
        } => {
            let g = read_graph(ctx, &input)?;
            let (sub, col) = subdivision_colouring(&g)?;
            if let Some(path) = subdivision_out {
                ctx.write_output(Some(&path), &sub.graph.to_json())?;
            }
            (col, out)
        }
    };
    ctx.write_output(out.as_deref(), &colouring.to_json())?;
    Ok(EXIT_OK)
}

fn run_verify(property: VerifyProp, ctx: &mut Ctx) -> anyhow::Result<u8> {
    match property {
        VerifyProp::Path { input, budget } => {
            let g = read_graph(ctx, &input.graph.graph)?;
            let c = read_colouring(ctx, &input.colouring)?;
            let verdict = find_repetitive_path(&g, &c, budget);
            match verdict.status {
                VerdictStatus::Clean => bool_exit(ctx, true),
                VerdictStatus::Witness(w) => {
                    ctx.write_output(None, &w.to_json())?;
                    Ok(EXIT_WITNESS)
                }
                VerdictStatus::Unknown => {
                    let note = serde_json::json!({
                        "ok": false,
                        "status": "unknown",
                        "budget_spent": verdict.budget_spent,
                    });
                    ctx.write_output(None, &note.to_string())?;
                    Ok(EXIT_UNDECIDED)
                }
            }
        }
        VerifyProp::Walk { input, minimize } => {
            let g = read_graph(ctx, &input.graph.graph)?;
            let c = read_colouring(ctx, &input.colouring)?;
            match find_repetitive_walk(&g, &c, minimize) {
                None => bool_exit(ctx, true),
                Some(w) => {
                    ctx.write_output(None, &w.to_json())?;
                    Ok(EXIT_WITNESS)
                }
            }
        }
        VerifyProp::Proper { input } => {
            let g = read_graph(ctx, &input.graph.graph)?;
            let c = read_colouring(ctx, &input.colouring)?;
            let ok = is_proper(&g, &c)?;
            bool_exit(ctx, ok)
        }
        VerifyProp::Distance2 { input } => {
            let g = read_graph(ctx, &input.graph.graph)?;
            let c = read_colouring(ctx, &input.colouring)?;
            let ok = is_distance2(&g, &c)?;
            bool_exit(ctx, ok)
        }
        VerifyProp::Star { input } => {
            let g = read_graph(ctx, &input.graph.graph)?;
            let c = read_colouring(ctx, &input.colouring)?;
            let ok = is_star_colouring(&g, &c)?;
            bool_exit(ctx, ok)
        }
        VerifyProp::Levelling { graph, levelling } => {
            let g = read_graph(ctx, &graph.graph)?;
            let lev = read_levelling(ctx, &levelling)?;
            let ok = validate_levelling(&g, &lev)?;
            bool_exit(ctx, ok)
        }
        VerifyProp::Shadow { graph, levelling } => {
            let g = read_graph(ctx, &graph.graph)?;
            let lev = read_levelling(ctx, &levelling)?;
            let ok = validate_shadow_complete(&g, &lev)?;
            bool_exit(ctx, ok)
        }
        VerifyProp::TreePartition { graph, partition } => {
            let g = read_graph(ctx, &graph.graph)?;
            let data = ctx.read_input(&partition)?;
            let tp = TreePartition::from_json(&data)?;
            let ok = validate_tree_partition(&g, &tp)?;
            bool_exit(ctx, ok)
        }
        VerifyProp::TreeDecomposition {
            graph,
            decomposition,
        } => {
            let g = read_graph(ctx, &graph.graph)?;
            let data = ctx.read_input(&decomposition)?;
            let td = TreeDecomposition::from_json(&data)?;
            let ok = validate_tree_decomposition(&g, &td)?;
            bool_exit(ctx, ok)
        }
    }
}

fn run_exact(kind: ExactKind, ctx: &mut Ctx) -> anyhow::Result<u8> {
    let (graph, budget, out, walk) = match kind {
        ExactKind::Pi { graph, budget, out } => (graph, budget, out, false),
        ExactKind::Sigma { graph, budget, out } => (graph, budget, out, true),
    };
    let g = read_graph(ctx, &graph.graph)?;
    let solved = if walk {
        exact_sigma(&g, budget)
    } else {
        exact_pi(&g, budget)
    };
    match solved {
        Ok(res) => {
            ctx.write_output(out.as_deref(), &res.to_json())?;
            Ok(EXIT_OK)
        }
        Err(Error::BudgetExhausted { nodes }) => {
            let note = serde_json::json!({
                "ok": false,
                "status": "budget-exhausted",
                "nodes": nodes,
            });
            ctx.write_output(None, &note.to_string())?;
            Ok(EXIT_UNDECIDED)
        }
        Err(e) => Err(e.into()),
    }
}

fn run_decompose(kind: DecomposeKind, ctx: &mut Ctx) -> anyhow::Result<u8> {
    match kind {
        DecomposeKind::TreePartition { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            let tp = tree_partition(&g);
            ctx.write_output(out.as_deref(), &tp.to_json())?;
        }
        DecomposeKind::TreeDecomposition { graph, out } => {
            let g = read_graph(ctx, &graph.graph)?;
            let td = tree_decomposition(&g);
            ctx.write_output(out.as_deref(), &td.to_json())?;
        }
    }
    Ok(EXIT_OK)
}

fn run_word(op: WordOp, ctx: &mut Ctx) -> anyhow::Result<u8> {
    match op {
        WordOp::Thue { len } => {
            let w = thue_word(len);
            ctx.write_output(None, &w.to_string())?;
            Ok(EXIT_OK)
        }
        WordOp::Kp { len } => {
            let w = kp_word(len);
            ctx.write_output(None, &w.to_string())?;
            Ok(EXIT_OK)
        }
        WordOp::Expand { word } => {
            let w = Word::parse(&word, Alphabet::Ternary)?;
            ctx.write_output(None, &thue_expand(&w)?.to_string())?;
            Ok(EXIT_OK)
        }
        WordOp::KpInsert { word } => {
            let w = Word::parse(&word, Alphabet::Ternary)?;
            ctx.write_output(None, &kp_insert(&w)?.to_string())?;
            Ok(EXIT_OK)
        }
        WordOp::FindSquare { word, alphabet } => {
            let alphabet = match alphabet {
                AlphabetArg::Ternary => Alphabet::Ternary,
                AlphabetArg::Quaternary => Alphabet::Quaternary,
            };
            let w = Word::parse(&word, alphabet)?;
            match find_square(&w) {
                None => bool_exit(ctx, true),
                Some((start, half_length)) => {
                    let note = serde_json::json!({
                        "start": start,
                        "half_length": half_length,
                    });
                    ctx.write_output(None, &note.to_string())?;
                    Ok(EXIT_WITNESS)
                }
            }
        }
    }
}
