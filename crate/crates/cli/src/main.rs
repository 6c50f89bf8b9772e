//! `construct-shapes`: infer the shapes every CONSTRUCT result satisfies.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use construct_shapes::oracle::check_soundness;
use construct_shapes::pipeline::{
    analyze_problem, debug_dump, profile, Analysis, AnalyzeConfig, Problem, ProfileConfig, SizeClass,
};
use construct_shapes::reasoner::ReasonerConfig;
use construct_shapes::syntax::{parse_query, parse_shapes, render_axiom, render_graph, render_shape};

const EXIT_INPUT: u8 = 1;
const EXIT_BUDGET: u8 = 2;

#[derive(Parser)]
#[command(name = "construct-shapes", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the shapes that hold on every result of the query.
    Analyze(AnalyzeArgs),
    /// Analyze, then search all small valid inputs for a violated output shape.
    Check {
        #[command(flatten)]
        analyze: AnalyzeArgs,
        /// Number of individuals in enumerated input graphs.
        #[arg(long)]
        bound: usize,
        /// Extra shapes appended to the output before checking.
        #[arg(long, hide = true)]
        inject: Option<String>,
    },
    /// Time the analysis on random problems.
    Profile {
        #[arg(long, value_parser = parse_class)]
        class: SizeClass,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Per-sample timeout in seconds.
        #[arg(long, default_value_t = 60)]
        timeout: u64,
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    query: PathBuf,
    #[arg(long)]
    shapes: PathBuf,
    /// Print the generated axioms before the result.
    #[arg(long)]
    debug: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = ReasonerConfig::default().node_budget, value_parser = clap::value_parser!(u64).range(1..))]
    node_budget: u64,
    #[arg(long, default_value_t = ReasonerConfig::default().rule_budget, value_parser = clap::value_parser!(u64).range(1..))]
    rule_budget: u64,
    /// Decide candidates on all cores.
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Shapes followed by a summary comment.
    Text,
    /// One shape per line, nothing else.
    Lines,
}

fn parse_class(s: &str) -> Result<SizeClass, String> {
    s.parse()
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))
}

fn load(args: &AnalyzeArgs) -> Result<Problem, String> {
    let query = parse_query(&read(&args.query)?).map_err(|e| format!("{}: {}", args.query.display(), e))?;
    let shapes = parse_shapes(&read(&args.shapes)?).map_err(|e| format!("{}: {}", args.shapes.display(), e))?;
    Ok(Problem { query, shapes })
}

fn run_analysis(args: &AnalyzeArgs) -> Result<(Problem, Analysis), String> {
    let problem = load(args)?;
    let cfg = AnalyzeConfig {
        reasoner: ReasonerConfig {
            node_budget: args.node_budget,
            rule_budget: args.rule_budget,
            ..ReasonerConfig::default()
        },
        parallel: args.parallel,
        timeout: None,
    };
    let analysis = analyze_problem(&problem, &cfg).map_err(|e| e.to_string())?;
    if args.debug {
        print!("{}", debug_dump(&analysis.sigma));
        println!("# output");
    }
    for s in &analysis.shapes {
        println!("{}", render_axiom(s));
    }
    if args.format == Format::Text {
        println!("# {} shapes from {} candidates", analysis.shapes.len(), analysis.candidates);
    }
    for (s, e) in &analysis.undecided {
        eprintln!("undecided: {} ({})", render_shape(s), e);
    }
    Ok((problem, analysis))
}

fn budget_status(a: &Analysis) -> ExitCode {
    if a.undecided.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_BUDGET)
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze(args) => {
            let (_, a) = run_analysis(&args)?;
            Ok(budget_status(&a))
        }
        Command::Check { analyze, bound, inject } => {
            let (problem, a) = run_analysis(&analyze)?;
            let mut shapes = a.shapes.clone();
            if let Some(extra) = inject {
                shapes.extend(parse_shapes(&extra).map_err(|e| e.to_string())?);
            }
            match check_soundness(&problem.query, &problem.shapes, &shapes, bound, analyze.parallel) {
                Ok(()) => {
                    println!("0 violations");
                    Ok(budget_status(&a))
                }
                Err(c) => {
                    println!("violation: {}", render_axiom(&c.shape));
                    println!("# input graph");
                    print!("{}", render_graph(&c.graph));
                    println!("# result graph");
                    print!("{}", render_graph(&c.output));
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Profile { class, samples, seed, timeout, parallel } => {
            let report = profile(&ProfileConfig {
                class,
                samples,
                seed,
                analyze: AnalyzeConfig {
                    parallel,
                    timeout: Some(Duration::from_secs(timeout)),
                    ..AnalyzeConfig::default()
                },
            });
            println!("{}", report);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(EXIT_INPUT)
        }
    }
}
