use clap::{Parser, Subcommand, ValueEnum};
use cplanarity::cycles::{self, CyclicClusteredCycle};
use cplanarity::drawing::{dfs_circle_order, initial_parity_vector, render_svg};
use cplanarity::format::{parse_instance, serialize_graph, Instance};
use cplanarity::graph::GtShape;
use cplanarity::ht::{self, Outcome, SoundnessTier};
use cplanarity::oracle::{self, OracleError};
use cplanarity::saturator::{self, EmbedError, EmbeddedOutcome, MergeCase};
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cplanarity",
    version,
    about = "clustered-planarity testing tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an instance file and describe what it contains
    Validate {
        /// instance file, `-` for stdin
        file: String,
    },
    /// Algebraic clustered-planarity test via a Hanani-Tutte switch system
    TestHt {
        /// instance file, `-` for stdin
        file: String,
    },
    /// Decide c-planarity of an embedded instance whose faces are incident
    /// to at most five vertices
    TestEmbedded {
        /// instance file with rot/place lines, `-` for stdin
        file: String,
    },
    /// Exhaustive brute-force decision for small instances
    Oracle {
        /// instance file, `-` for stdin
        file: String,
        /// give up after this many search steps
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// decide the abstract question even if the file carries an embedding
        #[arg(long)]
        ignore_embedding: bool,
    },
    /// Winding-number analysis of a cycle visiting a cyclic arrangement of
    /// clusters
    Winding {
        /// instance file, `-` for stdin
        file: String,
    },
    /// Emit the cycle through k clusters with winding number r
    GenCounterexample {
        /// number of clusters, at least 3
        #[arg(long)]
        k: usize,
        /// winding number, at least 1
        #[arg(long)]
        r: usize,
        /// write the instance here instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check numerically that the (k, r) cycle has a drawing in which every
    /// two independent edges cross an even number of times
    SinusoidCheck {
        /// number of clusters, at least 3
        #[arg(long)]
        k: usize,
        /// winding number, at least 1
        #[arg(long)]
        r: usize,
        /// sample points per sine branch
        #[arg(long, default_value_t = cycles::DEFAULT_SINUSOID_SAMPLES)]
        samples: usize,
    },
    /// Describe or draw an instance
    Render {
        /// instance file, `-` for stdin
        file: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Text)]
        format: RenderFormat,
        /// write here instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Canned experiment suites
    Experiment {
        #[command(subcommand)]
        which: ExperimentCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Text,
    Svg,
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// For the (k, r) cycle family: the algebraic test stays inconclusive
    /// while the winding criterion refutes c-planarity
    EvenWinding,
}

fn main() -> ExitCode {
    // die quietly when the read end of a pipe goes away
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    let r = if path == "-" {
        io::read_to_string(io::stdin())
    } else {
        fs::read_to_string(path)
    };
    r.map_err(|e| format!("{path}: {e}"))
}

fn load(path: &str) -> Result<Instance, String> {
    parse_instance(&read_input(path)?).map_err(|e| format!("{path}: {e}"))
}

fn write_output(output: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn run(cmd: Command) -> Result<(), String> {
    match cmd {
        Command::Validate { file } => validate(&file),
        Command::TestHt { file } => test_ht(&file),
        Command::TestEmbedded { file } => test_embedded(&file),
        Command::Oracle {
            file,
            budget,
            ignore_embedding,
        } => run_oracle(&file, budget, ignore_embedding),
        Command::Winding { file } => winding(&file),
        Command::GenCounterexample { k, r, output } => gen_counterexample(k, r, output.as_ref()),
        Command::SinusoidCheck { k, r, samples } => sinusoid_check(k, r, samples),
        Command::Render {
            file,
            format,
            output,
        } => render(&file, format, output.as_ref()),
        Command::Experiment { which } => match which {
            ExperimentCommand::EvenWinding => even_winding(),
        },
    }
}

fn shape_text(s: GtShape) -> &'static str {
    match s {
        GtShape::Path => "clusters meet along paths",
        GtShape::Cycle => "cluster adjacencies contain a cycle",
        GtShape::Tree => "cluster adjacencies form a branching tree",
        GtShape::Other => "no flat cluster arrangement",
    }
}

fn validate(file: &str) -> Result<(), String> {
    let inst = load(file)?;
    let g = inst.graph();
    match &inst {
        Instance::Abstract(_) => println!("kind: abstract clustered graph"),
        Instance::Embedded(_) => println!("kind: embedded plane map"),
    }
    println!("vertices: {}", g.vertex_count());
    println!("edges: {}", g.edge_count());
    let report = g.validate();
    if !report.is_valid() {
        for v in &report.violations {
            println!("violation: {v}");
        }
        return Err(format!(
            "{} structural violation(s)",
            report.violations.len()
        ));
    }
    let class = g.classify();
    println!(
        "flat: {}, clusters: {}",
        if class.flat { "yes" } else { "no" },
        class.cluster_count
    );
    println!(
        "two-clustered: {}, c-connected: {}",
        if class.two_clustered { "yes" } else { "no" },
        if class.c_connected { "yes" } else { "no" }
    );
    println!("arrangement: {}", shape_text(class.gt_shape));
    if let Instance::Embedded(m) = &inst {
        let regions = m.regions();
        println!("regions: {}", regions.count());
        println!(
            "largest region incidence: {} vertices",
            m.largest_region_incidence()
        );
    }
    println!("ok");
    Ok(())
}

fn test_ht(file: &str) -> Result<(), String> {
    let inst = load(file)?;
    let g = inst.graph();
    let report = g.validate();
    if !report.is_valid() {
        return Err("instance is structurally invalid; run `validate` for details".into());
    }
    let v = ht::test_ht(g);
    let d = &v.diagnostics;
    println!(
        "simplified instance: {} vertices, {} edges",
        d.simplified_vertex_count, d.simplified_edge_count
    );
    println!(
        "switch system: {} equations, {} variables, rank {}",
        d.equation_count, d.variable_count, d.rank
    );
    if let Some(w) = &d.witness {
        println!("witness: {} switches turn the initial drawing even", w.len());
    }
    match v.outcome {
        Outcome::CPlanar => {
            let why = match v.tier {
                Some(SoundnessTier::TwoClustered) => "the instance has two clusters",
                Some(SoundnessTier::CConnected) => "every cluster induces a connected subgraph",
                None => "solvable",
            };
            println!("verdict: c-planar ({why}, and the switch system is solvable)");
        }
        Outcome::NotCPlanar => {
            println!("verdict: not c-planar (no even drawing exists)");
        }
        Outcome::EvenDrawingExistsInconclusive => {
            println!("verdict: inconclusive");
            println!(
                "an even drawing exists, but with three or more clusters that alone \
                 does not certify clustered planarity"
            );
        }
    }
    Ok(())
}

fn test_embedded(file: &str) -> Result<(), String> {
    let inst = load(file)?;
    let Instance::Embedded(m) = inst else {
        return Err("instance has no embedding; add rot/place lines or use `test-ht`".into());
    };
    let verdict = saturator::decide_embedded(&m).map_err(|e| match e {
        EmbedError::FaceTooLarge(n) => format!(
            "a face is incident to {n} vertices; this procedure handles at most five"
        ),
        other => other.to_string(),
    })?;
    let mut counts: Vec<(MergeCase, usize)> = Vec::new();
    for &mc in &verdict.merges {
        match counts.iter_mut().find(|(c, _)| *c == mc) {
            Some((_, n)) => *n += 1,
            None => counts.push((mc, 1)),
        }
    }
    if verdict.merges.is_empty() {
        println!("normalization: no merges needed");
    } else {
        let parts: Vec<String> = counts
            .iter()
            .map(|(c, n)| format!("{n} x {c:?}"))
            .collect();
        println!(
            "normalization: {} merges ({})",
            verdict.merges.len(),
            parts.join(", ")
        );
    }
    println!("{}", verdict.detail);
    match verdict.outcome {
        EmbeddedOutcome::CPlanar => println!("verdict: c-planar (the embedding extends)"),
        EmbeddedOutcome::NotCPlanar => println!("verdict: not c-planar"),
    }
    Ok(())
}

fn run_oracle(file: &str, budget: u64, ignore_embedding: bool) -> Result<(), String> {
    let inst = load(file)?;
    let oracle_err = |e: OracleError| match e {
        OracleError::BudgetExceeded(n) => {
            format!("search budget of {n} steps exhausted; raise --budget")
        }
        other => other.to_string(),
    };
    let cplanar = match (&inst, ignore_embedding) {
        (Instance::Embedded(m), false) => {
            println!("question: does this embedding extend to a clustered drawing?");
            oracle::embedded_cplanar_by_search(m, budget).map_err(oracle_err)?
        }
        _ => {
            println!("question: does any clustered drawing exist?");
            oracle::flat_cplanar_by_enumeration(inst.graph(), budget).map_err(oracle_err)?
        }
    };
    println!(
        "verdict: {}",
        if cplanar { "c-planar" } else { "not c-planar" }
    );
    Ok(())
}

fn winding(file: &str) -> Result<(), String> {
    let inst = load(file)?;
    let (cycle, walk) =
        CyclicClusteredCycle::from_clustered_graph(inst.graph()).map_err(|e| e.to_string())?;
    println!("clusters: {}", cycle.k());
    println!("length: {}", cycle.len());
    let walk_text: Vec<String> = walk.iter().map(|v| v.to_string()).collect();
    println!("walk: {}", walk_text.join(" "));
    let phi_text: Vec<String> = cycle.phi().iter().map(|c| c.to_string()).collect();
    println!("cluster sequence: {}", phi_text.join(" "));
    let signs: Vec<String> = cycle
        .signs()
        .iter()
        .map(|s| match s {
            1 => "+".into(),
            -1 => "-".into(),
            _ => "0".to_string(),
        })
        .collect();
    println!("step signs: {}", signs.join(" "));
    println!("winding number: {}", cycle.winding_number());
    println!(
        "monotone: {}",
        if cycle.is_monotone() { "yes" } else { "no" }
    );
    let red = cycle.monotone_reduce();
    println!(
        "reduction: {} steps, winding number {}",
        red.steps.len(),
        red.winding_number()
    );
    if cycle.is_cyclic_clustered() {
        if cycle.cortese_test() {
            println!("verdict: c-planar (the cycle winds at most once)");
        } else {
            println!(
                "verdict: not c-planar (the cycle winds {} times)",
                cycle.winding_number().abs()
            );
        }
    } else {
        println!("note: the cycle does not use every cluster border, winding criterion not applied");
    }
    Ok(())
}

fn gen_counterexample(k: usize, r: usize, output: Option<&PathBuf>) -> Result<(), String> {
    if k < 3 {
        return Err("--k must be at least 3".into());
    }
    if r < 1 {
        return Err("--r must be at least 1".into());
    }
    let cycle = cycles::generate_counterexample(k, r);
    let text = serialize_graph(&cycle.to_clustered_graph());
    write_output(output, &text)?;
    eprintln!(
        "cycle of length {} through {} clusters, winding number {}",
        cycle.len(),
        k,
        cycle.winding_number()
    );
    Ok(())
}

fn sinusoid_check(k: usize, r: usize, samples: usize) -> Result<(), String> {
    if k < 3 {
        return Err("--k must be at least 3".into());
    }
    if r < 1 {
        return Err("--r must be at least 1".into());
    }
    if samples < 16 {
        return Err("--samples must be at least 16".into());
    }
    let pv = cycles::sinusoid_parity_vector(k, r, samples).map_err(|e| e.to_string())?;
    let dim = pv.pair_index().len();
    if pv.is_zero() {
        println!(
            "all {dim} independent edge pairs of the ({k}, {r}) cycle drawing cross evenly"
        );
    } else {
        let odd: Vec<String> = pv
            .pair_index()
            .pairs()
            .iter()
            .filter(|&&(e, f)| pv.bit(e, f) == Some(true))
            .map(|&(e, f)| format!("({e}, {f})"))
            .collect();
        println!(
            "{} of {dim} independent edge pairs cross oddly: {}",
            odd.len(),
            odd.join(" ")
        );
    }
    Ok(())
}

fn render_text(inst: &Instance) -> String {
    let g = inst.graph();
    let mut out = String::new();
    let ord = dfs_circle_order(g);
    let order_text: Vec<String> = ord.order().iter().map(|v| v.to_string()).collect();
    out.push_str(&format!("circle order: {}\n", order_text.join(" ")));
    for arc in ord.arcs() {
        let members: Vec<String> = ord.order()[arc.start..arc.start + arc.len]
            .iter()
            .map(|v| v.to_string())
            .collect();
        let name = g.tree().name_of(arc.node).unwrap_or("?");
        out.push_str(&format!(
            "{}cluster {}: {}\n",
            "  ".repeat(arc.depth.saturating_sub(1)),
            name,
            members.join(" ")
        ));
    }
    let pv = initial_parity_vector(g, &ord);
    out.push_str(&format!(
        "independent edge pairs crossing oddly on this circle: {} of {}\n",
        pv.bits().count_ones(),
        pv.pair_index().len()
    ));
    if let Instance::Embedded(m) = inst {
        let regions = m.regions();
        out.push_str(&format!("regions: {}\n", regions.count()));
        for (rid, region) in regions.iter() {
            let verts: Vec<String> = region.incident.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!(
                "  region {}{}: touches {}\n",
                rid.0,
                if region.unbounded { " (outer)" } else { "" },
                if verts.is_empty() {
                    "nothing".to_string()
                } else {
                    verts.join(" ")
                }
            ));
        }
    }
    out
}

fn render(file: &str, format: RenderFormat, output: Option<&PathBuf>) -> Result<(), String> {
    let inst = load(file)?;
    let g = inst.graph();
    if !g.validate().is_valid() {
        return Err("instance is structurally invalid; run `validate` for details".into());
    }
    let text = match format {
        RenderFormat::Text => render_text(&inst),
        RenderFormat::Svg => {
            let ord = dfs_circle_order(g);
            render_svg(g, &ord)
        }
    };
    write_output(output, &text)
}

fn even_winding() -> Result<(), String> {
    println!("cycle family with winding number r through k clusters:");
    println!("every pair of independent edges can be drawn crossing evenly,");
    println!("yet for r >= 2 no clustered drawing exists.");
    println!();
    println!("{:>2} {:>2} {:>4} {:>8} {:>10} {:>14} {:>10}", "k", "r", "n", "winding", "windcrit", "algebraic", "sinusoid");
    for &(k, r) in &[(3usize, 3usize), (3, 5), (4, 3), (5, 3)] {
        let cycle = cycles::generate_counterexample(k, r);
        let g = cycle.to_clustered_graph();
        let v = ht::test_ht(&g);
        let ht_text = match v.outcome {
            Outcome::CPlanar => "c-planar",
            Outcome::NotCPlanar => "not c-planar",
            Outcome::EvenDrawingExistsInconclusive => "inconclusive",
        };
        let sin_text = match cycles::sinusoid_parity_vector(k, r, cycles::DEFAULT_SINUSOID_SAMPLES)
        {
            Ok(pv) if pv.is_zero() => "all even".to_string(),
            Ok(_) => "odd pair!".to_string(),
            Err(e) => format!("({e})"),
        };
        println!(
            "{:>2} {:>2} {:>4} {:>8} {:>10} {:>14} {:>10}",
            k,
            r,
            cycle.len(),
            cycle.winding_number(),
            if cycle.cortese_test() { "pass" } else { "fail" },
            ht_text,
            sin_text
        );
    }
    println!();
    println!("windcrit: c-planar exactly when |winding| <= 1, so `fail` refutes;");
    println!("the algebraic test cannot see this and stays inconclusive.");
    Ok(())
}
