use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use tsr_core::format::{
    format_provenance, format_trace, parse_graph, parse_hitting_system, parse_seed, parse_sequence,
    serialize_graph, serialize_hitting_system, serialize_seed, serialize_sequence,
};
use tsr_core::gadgets::{standalone, GadgetKind};
use tsr_core::generate;
use tsr_core::oracle::Oracle;
use tsr_core::reconfig::{tj_to_tar, ViolationKind};
use tsr_core::reductions::{
    reduce_33_to_b312, reduce_33_to_pb342, reduce_hitting_to_split, reduce_vc23_to_cubic, ReductionKind,
    ReductionOutput,
};
use tsr_core::solvers::{chen_tree, deg2_minimum_set, solve_maxdeg2, solve_threshold1, solve_tree, threshold1};
use tsr_core::{activate, is_target_set, validate_sequence, ReconfigSequence, SeedSet, ThresholdGraph, TsrError};

const EXIT_INPUT: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(name = "tsr", version, about = "Target set reconfiguration toolkit")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// State limit for exhaustive searches.
    #[arg(long, global = true)]
    guard: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a graph file and optionally seed and sequence files against it.
    Check {
        graph: PathBuf,
        #[arg(long)]
        seed: Vec<PathBuf>,
        #[arg(long)]
        sequence: Option<PathBuf>,
    },
    /// Print the activation rounds of a seed set.
    Activate { graph: PathBuf, seed: PathBuf },
    /// Minimum target set on threshold-1 graphs, trees, paths and cycles.
    SolveMin {
        graph: PathBuf,
        /// Fall back to exhaustive search on other graphs.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether two target sets are reconfigurable.
    Reconfigure {
        graph: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long, value_enum, default_value = "tj")]
        model: ModelArg,
        /// Size bound for TAR (defaults to the endpoint size).
        #[arg(long)]
        k: Option<usize>,
        /// Use exhaustive search instead of, or where there is no, solver.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        emit_sequence: Option<PathBuf>,
    },
    /// Exhaustive report of the size-k target sets and their TJ classes.
    Oracle {
        graph: PathBuf,
        /// Target set size (defaults to the minimum).
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, requires = "to")]
        from: Option<PathBuf>,
        #[arg(long, requires = "from")]
        to: Option<PathBuf>,
    },
    /// Apply a hardness reduction. Input is a graph file, or a hitting
    /// system for `split`.
    Reduce {
        #[arg(value_parser = parse_reduction)]
        kind: ReductionKind,
        input: PathBuf,
        /// Write the reduced graph here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write `origin <id> <tag>` lines here.
        #[arg(long)]
        provenance: Option<PathBuf>,
        /// Print the image of this source seed set.
        #[arg(long)]
        map_seed: Option<PathBuf>,
    },
    /// Emit a gadget on its standard host as a graph file.
    Gadget {
        #[arg(value_parser = parse_gadget)]
        kind: GadgetKind,
    },
    /// Generate a random instance.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count (tree, random-deg2) or universe size (hs).
        #[arg(long, default_value_t = 8)]
        size: usize,
        /// Threshold-2 vertex count (path, cycle).
        #[arg(long, default_value_t = 4)]
        m: usize,
        /// Longest threshold-1 run between threshold-2 vertices.
        #[arg(long, default_value_t = 2)]
        gap: usize,
        /// Family size (hs).
        #[arg(long, default_value_t = 3)]
        sets: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Tj,
    Tar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Tree,
    Cycle,
    Path,
    RandomDeg2,
    Hs,
}

fn parse_reduction(s: &str) -> Result<ReductionKind, String> {
    s.parse().map_err(|e: TsrError| e.to_string())
}

fn parse_gadget(s: &str) -> Result<GadgetKind, String> {
    s.parse().map_err(|e: TsrError| e.to_string())
}

/// The instance is outside every polynomial-time class and `--oracle` was
/// not given.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Refused(String);

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<ThresholdGraph> {
    parse_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_seed(path: &Path) -> anyhow::Result<SeedSet> {
    parse_seed(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn ids(s: &SeedSet) -> String {
    s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn oracle(cli: &Cli) -> Oracle {
    match cli.guard {
        Some(g) => Oracle::with_guard(g),
        None => Oracle::default(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Class {
    Threshold1,
    Tree,
    MaxDeg2,
    Other,
}

impl Class {
    fn of(g: &ThresholdGraph) -> Class {
        if g.thresholds().iter().all(|&t| t == 1) {
            Class::Threshold1
        } else if g.graph().is_tree() {
            Class::Tree
        } else if g.graph().max_degree() <= 2 {
            Class::MaxDeg2
        } else {
            Class::Other
        }
    }

    fn name(self) -> &'static str {
        match self {
            Class::Threshold1 => "threshold-1",
            Class::Tree => "tree",
            Class::MaxDeg2 => "max-degree-2",
            Class::Other => "oracle",
        }
    }
}

fn check(cli: &Cli, graph: &Path, seeds: &[PathBuf], sequence: Option<&Path>) -> anyhow::Result<()> {
    let g = load_graph(graph)?;
    let mut report = json!({ "n": g.n(), "m": g.m() });
    if !cli.json {
        println!("graph ok: n={} m={}", g.n(), g.m());
    }
    let mut seed_reports = Vec::new();
    for path in seeds {
        let s = load_seed(path)?;
        let ok = is_target_set(&g, &s)?;
        if !cli.json {
            let verdict = if ok { "target set" } else { "not a target set" };
            println!("seed {}: {verdict} (size {})", path.display(), s.len());
        }
        seed_reports.push(json!({ "file": path.display().to_string(), "size": s.len(), "target_set": ok }));
    }
    report["seeds"] = json!(seed_reports);
    if let Some(path) = sequence {
        let seq = parse_sequence(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
        let r = validate_sequence(&g, &seq);
        match &r.violation {
            None if !cli.json => println!("sequence valid: length {} max size {}", seq.len(), r.max_size),
            Some(v) if !cli.json => println!("sequence invalid at step {}: {}", v.index, describe(&v.kind)),
            _ => {}
        }
        report["sequence"] = json!({
            "valid": r.is_valid(),
            "length": seq.len(),
            "max_size": r.max_size,
            "violation": r.violation.as_ref().map(|v| json!({ "index": v.index, "reason": describe(&v.kind) })),
        });
    }
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    }
    Ok(())
}

fn describe(kind: &ViolationKind) -> String {
    format!("{kind:?}")
}

fn activate_cmd(cli: &Cli, graph: &Path, seed: &Path) -> anyhow::Result<()> {
    let g = load_graph(graph)?;
    let s = load_seed(seed)?;
    let trace = activate(&g, &s)?;
    if cli.json {
        let rounds: Vec<Vec<usize>> = trace.rounds.iter().map(|r| r.iter().map(|v| v + 1).collect()).collect();
        let out = json!({ "rounds": rounds, "target_set": trace.covers_all() });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        print!("{}", format_trace(&trace));
        println!("target set: {}", if trace.covers_all() { "yes" } else { "no" });
    }
    Ok(())
}

fn solve_min(cli: &Cli, graph: &Path, use_oracle: bool) -> anyhow::Result<()> {
    let g = load_graph(graph)?;
    let class = Class::of(&g);
    let set = match class {
        Class::Threshold1 => threshold1::canonical(&g),
        Class::Tree => chen_tree(&g)?.canonical(),
        Class::MaxDeg2 => deg2_minimum_set(&g)?,
        Class::Other if use_oracle => {
            let o = oracle(cli);
            let k = o.min_target_set_size(&g)?;
            o.enumerate_target_sets(&g, k)?.swap_remove(0)
        }
        Class::Other => {
            return Err(Refused("no exact solver for this graph class; pass --oracle".into()).into());
        }
    };
    if cli.json {
        let out = json!({ "size": set.len(), "set": set, "method": class.name() });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("{}", set.len());
        print!("{}", serialize_seed(&set));
    }
    Ok(())
}

struct Decision {
    reconfigurable: bool,
    sequence: Option<ReconfigSequence>,
    method: &'static str,
}

#[allow(clippy::too_many_arguments)]
fn reconfigure(
    cli: &Cli,
    graph: &Path,
    from: &Path,
    to: &Path,
    model: ModelArg,
    k: Option<usize>,
    use_oracle: bool,
    emit: Option<&Path>,
) -> anyhow::Result<()> {
    let g = load_graph(graph)?;
    let x = load_seed(from)?;
    let y = load_seed(to)?;
    let bound = k.unwrap_or(x.len());
    let class = Class::of(&g);
    // TJ and |X|-TAR agree, so the solvers cover TAR only at that bound.
    let solvable = class != Class::Other && (matches!(model, ModelArg::Tj) || bound == x.len());
    let d = if use_oracle || !solvable {
        if !use_oracle {
            return Err(Refused(format!(
                "no polynomial solver for this instance ({}); pass --oracle",
                match (class, model) {
                    (Class::Other, _) => "graph class".to_string(),
                    _ => format!("TAR bound {bound} differs from |X| = {}", x.len()),
                }
            ))
            .into());
        }
        let o = oracle(cli);
        let report = match model {
            ModelArg::Tj => o.tj_decide(&g, &x, &y)?,
            ModelArg::Tar => o.ktar_decide(&g, &x, &y, bound)?,
        };
        Decision {
            reconfigurable: report.reconfigurable(),
            sequence: report.shortest().cloned(),
            method: "oracle",
        }
    } else {
        let sol = match class {
            Class::Threshold1 => solve_threshold1(&g, &x, &y)?,
            Class::Tree => solve_tree(&g, &x, &y)?,
            _ => solve_maxdeg2(&g, &x, &y)?,
        };
        let sequence = match (sol.sequence, model) {
            (Some(seq), ModelArg::Tar) => Some(tj_to_tar(&seq)?),
            (seq, _) => seq,
        };
        Decision {
            reconfigurable: sol.reconfigurable,
            sequence,
            method: class.name(),
        }
    };
    if let (Some(path), Some(seq)) = (emit, &d.sequence) {
        write(path, &serialize_sequence(seq))?;
    }
    if cli.json {
        let out = json!({
            "reconfigurable": d.reconfigurable,
            "method": d.method,
            "length": d.sequence.as_ref().map(ReconfigSequence::len),
            "sequence": d.sequence,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("{}", if d.reconfigurable { "YES" } else { "NO" });
        if let Some(seq) = &d.sequence {
            println!("length {} ({})", seq.len(), d.method);
        }
    }
    Ok(())
}

fn oracle_cmd(
    cli: &Cli,
    graph: &Path,
    size: Option<usize>,
    from: Option<&Path>,
    to: Option<&Path>,
) -> anyhow::Result<()> {
    let g = load_graph(graph)?;
    let o = oracle(cli);
    let pair = match (from, to) {
        (Some(f), Some(t)) => Some((load_seed(f)?, load_seed(t)?)),
        _ => None,
    };
    let k = match (size, &pair) {
        (Some(k), _) => k,
        (None, Some((x, _))) => x.len(),
        (None, None) => o.min_target_set_size(&g)?,
    };
    let report = o.report(&g, k, pair.as_ref().map(|(x, y)| (x, y)))?;
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(());
    }
    let comps = report.components.as_deref().unwrap_or_default();
    println!("size {k}");
    println!("{} target sets", report.num_target_sets.unwrap_or(0));
    println!("{} TJ components", comps.len());
    for (i, c) in comps.iter().enumerate() {
        let sets: Vec<String> = c.iter().map(|s| format!("{{{}}}", ids(s))).collect();
        println!("component {}: {}", i + 1, sets.join(" "));
    }
    if let Some(q) = &report.query {
        println!("{}", if q.reconfigurable { "YES" } else { "NO" });
        if let Some(seq) = &q.shortest {
            println!("shortest length {}", seq.len());
        }
    }
    Ok(())
}

fn reduce(
    cli: &Cli,
    kind: ReductionKind,
    input: &Path,
    output: Option<&Path>,
    provenance: Option<&Path>,
    map_seed: Option<&Path>,
) -> anyhow::Result<()> {
    let text = read(input)?;
    let parse_ctx = || format!("parsing {}", input.display());
    let out: ReductionOutput = match kind {
        ReductionKind::Split => reduce_hitting_to_split(&parse_hitting_system(&text).with_context(parse_ctx)?)?,
        _ => {
            let g = parse_graph(&text).with_context(parse_ctx)?;
            match kind {
                ReductionKind::VcCubic => reduce_vc23_to_cubic(g.graph())?,
                ReductionKind::Pb342 => reduce_33_to_pb342(&g)?,
                _ => reduce_33_to_b312(&g)?,
            }
        }
    };
    let audit = out.audit();
    let mapped = match map_seed {
        Some(p) => Some(out.forward(&load_seed(p)?)),
        None => None,
    };
    if let Some(p) = provenance {
        write(p, &format_provenance(&out.provenance))?;
    }
    let graph_text = serialize_graph(&out.graph);
    if let Some(p) = output {
        write(p, &graph_text)?;
    }
    if cli.json {
        let report = json!({
            "reduction": kind.to_string(),
            "n": out.graph.n(),
            "m": out.graph.m(),
            "audit": audit.as_ref().err(),
            "mapped_seed": mapped,
        });
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        match &audit {
            Ok(()) => println!("# {kind}: audit ok"),
            Err(e) => println!("# {kind}: audit FAILED: {e}"),
        }
        if let Some(s) = &mapped {
            println!("# mapped seed: {}", ids(s));
        }
        if output.is_none() {
            print!("{graph_text}");
        }
    }
    Ok(())
}

fn gadget(kind: GadgetKind) -> anyhow::Result<()> {
    let (g, map) = standalone(kind)?;
    println!("# {kind} gadget");
    for line in map.describe().lines() {
        println!("# {line}");
    }
    if !map.seed.is_empty() {
        println!("# seed: {}", ids(&map.seed));
    }
    print!("{}", serialize_graph(&g));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn gen(family: Family, seed: u64, size: usize, m: usize, gap: usize, sets: usize, k: usize) -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let text = match family {
        Family::Tree => {
            if size < 2 {
                bail!("a tree needs at least 2 vertices");
            }
            serialize_graph(&generate::random_tree(&mut rng, size)?)
        }
        Family::Path => serialize_graph(&generate::path_with_spacing(&mut rng, m, gap)?),
        Family::Cycle => serialize_graph(&generate::cycle_with_spacing(&mut rng, m, gap)?),
        Family::RandomDeg2 => serialize_graph(&generate::random_deg2(&mut rng, size)?),
        Family::Hs => serialize_hitting_system(&generate::random_hitting_system(&mut rng, size, sets, k)?),
    };
    print!("{text}");
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    match &cli.cmd {
        Cmd::Check { graph, seed, sequence } => check(cli, graph, seed, sequence.as_deref()),
        Cmd::Activate { graph, seed } => activate_cmd(cli, graph, seed),
        Cmd::SolveMin { graph, oracle } => solve_min(cli, graph, *oracle),
        Cmd::Reconfigure {
            graph,
            from,
            to,
            model,
            k,
            oracle,
            emit_sequence,
        } => reconfigure(cli, graph, from, to, *model, *k, *oracle, emit_sequence.as_deref()),
        Cmd::Oracle { graph, size, from, to } => oracle_cmd(cli, graph, *size, from.as_deref(), to.as_deref()),
        Cmd::Reduce {
            kind,
            input,
            output,
            provenance,
            map_seed,
        } => reduce(cli, *kind, input, output.as_deref(), provenance.as_deref(), map_seed.as_deref()),
        Cmd::Gadget { kind } => gadget(*kind),
        Cmd::Gen {
            family,
            seed,
            size,
            m,
            gap,
            sets,
            k,
        } => gen(*family, *seed, *size, *m, *gap, *sets, *k),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Refused>().is_some() {
        return EXIT_GUARD;
    }
    match err.chain().find_map(|e| e.downcast_ref::<TsrError>()) {
        Some(TsrError::InstanceTooLarge(_)) => EXIT_GUARD,
        _ => EXIT_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
