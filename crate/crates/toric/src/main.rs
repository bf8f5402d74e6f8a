//! Command-line front end: builds configurations, enumerates circuits and
//! generators, checks graph criteria, and runs the verification harness.
//!
//! Exit codes: 0 all consistent, 1 violation found, 2 usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use toric::circuits::{enumerate_circuits, is_circuit, is_fundamental, squarefree_class};
use toric::config::{
    root_config, squarefree_veronese, veronese, Configuration, DegreeVector, RootFamily,
};
use toric::fibers::{enumerate_fiber, is_indispensable, is_redundant, minimal_generators};
use toric::graphs::{
    self, enumerate_graph_circuits, find_pattern, normality_gap_witness, odd_cycle_condition,
    Graph,
};
use toric::ideal::{self, parse_binomial, MonomialOrder};
use toric::verify::{
    check_graph_theorems, check_prop_zeroone, check_root_corollary,
    check_squarefree_veronese_theorem, check_two_binomial_groebner, check_veronese_theorem,
    corpus_run, CircuitFilter, CorpusMode, Verdict,
};

#[derive(Parser)]
#[command(
    name = "toric",
    about = "Toric ideals of integer configurations and graphs: circuits, generators, and graph criteria",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate circuits of a configuration (or, with --graph, a graph).
    Circuits {
        /// Configuration file, or a graph file with --graph.
        input: PathBuf,
        /// Treat the input as a graph and print each circuit's walk type.
        #[arg(long)]
        graph: bool,
        /// Keep all circuits, those with a squarefree monomial (sf), or
        /// those with both monomials squarefree (sfsf).
        #[arg(long, default_value = "all")]
        filter: String,
    },
    /// Print a generating set of the toric ideal of a configuration.
    Generators {
        input: PathBuf,
        /// Print a minimal binomial generating set instead of the reduced
        /// Gröbner basis under the default order.
        #[arg(long)]
        minimal: bool,
    },
    /// Evaluate the graph criteria: odd cycle condition, conditions (v) and
    /// (v'), normality witness, and theorem consistency.
    GraphCheck { input: PathBuf },
    /// Emit a named configuration in the text format.
    Build {
        /// veronese | sqfree-veronese | root
        family: String,
        /// veronese d r; sqfree-veronese d r; root A|B|C|D d
        params: Vec<String>,
    },
    /// Classify one binomial of a configuration's toric ideal.
    BinomialCheck {
        input: PathBuf,
        /// Binomial in the text grammar, e.g. "x1*x3 - x2*x4".
        binomial: String,
    },
    /// Run a named verification check or a corpus sweep.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Enumerate the fiber of a multidegree.
    Fiber {
        input: PathBuf,
        /// Comma-separated multidegree, e.g. 1,1,1,1.
        #[arg(long)]
        degree: String,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Sweep a graph corpus against the theorems and cross-checks.
    Corpus(CorpusArgs),
    /// Veronese generation criterion: squarefree circuits generate iff r = 2.
    Veronese {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: u64,
    },
    /// Squarefree Veronese: circuits with both sides squarefree generate.
    SqfreeVeronese {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: u64,
    },
    /// Root configurations: quadratic squarefree-side circuit generation.
    Root {
        #[arg(long)]
        d: usize,
        /// A, B, C or D; all four when omitted.
        #[arg(long)]
        family: Option<String>,
    },
    /// Entry-window proposition for the quadratic binomials of a
    /// configuration file.
    Zeroone { input: PathBuf },
    /// Two-binomial Gröbner statement on a configuration file.
    TwoBinomial { input: PathBuf },
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 5)]
    max_vertices: usize,
    /// Every labeled connected graph up to --max-vertices (at most 6).
    #[arg(long)]
    exhaustive: bool,
    /// Seeded random connected graphs on --max-vertices vertices.
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 200)]
    sample: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Circuits { input, graph, filter } => {
            let filter =
                CircuitFilter::parse(&filter).ok_or_else(|| format!("bad filter `{filter}`"))?;
            if graph {
                let g = load_graph(&input)?;
                for gc in graphs_detailed(&g) {
                    if filter.keeps(&gc.0) {
                        println!("{}\t{}", gc.0, gc.1);
                    }
                }
            } else {
                let c = load_config(&input)?;
                for circuit in enumerate_circuits(&c) {
                    if filter.keeps(&circuit.binomial) {
                        println!("{}", circuit.binomial);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generators { input, minimal } => {
            let c = load_config(&input)?;
            if minimal {
                for g in minimal_generators(&c) {
                    println!("{g}");
                }
            } else {
                let order = MonomialOrder::graded_revlex(c.ncols());
                for g in ideal::toric_groebner(&c, &order).elements {
                    println!("{g}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::GraphCheck { input } => {
            let g = load_graph(&input)?;
            println!("OCC: {}", odd_cycle_condition(&g));
            println!("(v): {}", find_pattern(&g, 2).is_none());
            println!("(v'): {}", find_pattern(&g, 1).is_none());
            if let Some(w) = normality_gap_witness(&g) {
                println!("normality witness: {w}");
            }
            let report = check_graph_theorems(&g);
            println!("verdict: {}", report.verdict);
            Ok(exit_for(report.verdict))
        }
        Command::Build { family, params } => {
            let text = build_config(&family, &params)?;
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::BinomialCheck { input, binomial } => {
            let c = load_config(&input)?;
            let b = parse_binomial(&binomial, c.ncols()).map_err(|e| e.to_string())?;
            let in_ideal = ideal::in_toric_ideal(&b, &c);
            println!("in ideal: {in_ideal}");
            if !in_ideal {
                return Ok(ExitCode::from(2));
            }
            println!("circuit: {}", is_circuit(&b, &c).expect("membership checked"));
            println!("squarefree class: {}", squarefree_class(&b));
            println!("fundamental: {}", is_fundamental(&b, &c).expect("membership checked"));
            println!("indispensable: {}", is_indispensable(&b, &c).expect("membership checked"));
            println!("redundant: {}", is_redundant(&b, &c).expect("membership checked"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { check } => run_verify(check),
        Command::Fiber { input, degree } => {
            let c = load_config(&input)?;
            let b = DegreeVector::parse(&degree)
                .ok_or_else(|| format!("bad degree vector `{degree}`"))?;
            if b.0.len() != c.dim() {
                return Err(format!(
                    "degree vector has {} entries, configuration has {} rows",
                    b.0.len(),
                    c.dim()
                ));
            }
            let fiber = enumerate_fiber(&c, &b).map_err(|e| e.to_string())?;
            for m in fiber.monomials {
                println!("{m}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_verify(check: VerifyCommand) -> Result<ExitCode, String> {
    match check {
        VerifyCommand::Corpus(args) => {
            let mode = match (args.exhaustive, args.random) {
                (true, false) => CorpusMode::Exhaustive,
                (false, true) => CorpusMode::Random { sample: args.sample, seed: args.seed },
                _ => return Err("pass exactly one of --exhaustive or --random".into()),
            };
            if matches!(mode, CorpusMode::Exhaustive) && args.max_vertices > 6 {
                return Err("exhaustive corpus is capped at --max-vertices 6".into());
            }
            let report = corpus_run(args.max_vertices, mode);
            println!("{report}");
            Ok(if report.consistent() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        VerifyCommand::Veronese { d, r } => {
            if d < 2 || r < 2 {
                return Err("veronese requires --d >= 2 and --r >= 2".into());
            }
            let report = check_veronese_theorem(d, r);
            println!("{report}");
            Ok(exit_for(report.verdict))
        }
        VerifyCommand::SqfreeVeronese { d, r } => {
            if d < 2 || r == 0 || r as usize > d {
                return Err("squarefree veronese requires --d >= 2 and 1 <= --r <= d".into());
            }
            let report = check_squarefree_veronese_theorem(d, r);
            println!("{report}");
            Ok(exit_for(report.verdict))
        }
        VerifyCommand::Root { d, family } => {
            if d < 2 {
                return Err("root configurations require --d >= 2".into());
            }
            let families = match family {
                Some(name) => {
                    vec![RootFamily::parse(&name).ok_or_else(|| format!("bad family `{name}`"))?]
                }
                None => vec![RootFamily::A, RootFamily::B, RootFamily::C, RootFamily::D],
            };
            let mut worst = Verdict::Consistent;
            for family in families {
                let report = check_root_corollary(family, d);
                println!("{report}");
                if report.verdict == Verdict::Violation {
                    worst = Verdict::Violation;
                }
            }
            Ok(exit_for(worst))
        }
        VerifyCommand::Zeroone { input } => {
            let c = load_config(&input)?;
            let report = check_prop_zeroone(&c);
            println!("{report}");
            Ok(exit_for(report.verdict))
        }
        VerifyCommand::TwoBinomial { input } => {
            let c = load_config(&input)?;
            let report = check_two_binomial_groebner(&c);
            println!("{report}");
            Ok(exit_for(report.verdict))
        }
    }
}

fn exit_for(verdict: Verdict) -> ExitCode {
    match verdict {
        Verdict::Violation => ExitCode::from(1),
        Verdict::Consistent | Verdict::NotApplicable => ExitCode::SUCCESS,
    }
}

fn build_config(family: &str, params: &[String]) -> Result<String, String> {
    match family {
        "veronese" => {
            let [d, r] = two_numbers(params)?;
            if d < 2 || r < 2 {
                return Err("veronese requires d >= 2 and r >= 2".into());
            }
            Ok(veronese(d as usize, r).to_text())
        }
        "sqfree-veronese" => {
            let [d, r] = two_numbers(params)?;
            if d < 2 || r == 0 || r > d {
                return Err("sqfree-veronese requires d >= 2 and 1 <= r <= d".into());
            }
            Ok(squarefree_veronese(d as usize, r).to_text())
        }
        "root" => {
            let [name, d] = params else {
                return Err("usage: build root <A|B|C|D> <d>".into());
            };
            let family =
                RootFamily::parse(name).ok_or_else(|| format!("bad family `{name}`"))?;
            let d: usize = d.parse().map_err(|_| format!("bad dimension `{d}`"))?;
            if d < 2 {
                return Err("root configurations require d >= 2".into());
            }
            Ok(root_config(family, d).to_text())
        }
        other => Err(format!("unknown family `{other}`")),
    }
}

fn two_numbers(params: &[String]) -> Result<[u64; 2], String> {
    let [a, b] = params else {
        return Err("expected two numeric parameters".into());
    };
    let a = a.parse().map_err(|_| format!("bad number `{a}`"))?;
    let b = b.parse().map_err(|_| format!("bad number `{b}`"))?;
    Ok([a, b])
}

fn load_config(path: &PathBuf) -> Result<Configuration, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Configuration::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Graph::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

// Circuits of a graph with their walk types, in enumeration order.
fn graphs_detailed(g: &Graph) -> Vec<(toric::ideal::Binomial, String)> {
    let circuits = enumerate_graph_circuits(g);
    circuits
        .into_iter()
        .map(|c| {
            let t = graphs::classify_walk_type(&c.binomial, g)
                .expect("enumerated circuits lie in the ideal");
            (c.binomial, t.to_string())
        })
        .collect()
}
