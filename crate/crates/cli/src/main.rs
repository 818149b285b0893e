use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use search_region::oracle::budget_from_env;
use search_region::toolkit::bench::write_records;
use search_region::toolkit::io as files;
use search_region::{
    build, enumerate_nondominated, generate_stable_set, oracle_upper_bounds, rule_r_disjoint, rule_z_disjoint, rule_z_tight_disjoint,
    run_benchmark, verify_upper_bound_set, Error, FiniteSetExplorer, GenConfig, SelectionOrder, Strategy,
};

#[derive(Parser)]
#[command(name = "search-region", version, about = "Local upper bounds of multiobjective search regions")]
struct Cli {
    /// Seed for generation and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Input file; standard input when omitted.
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long = "out", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random stable set.
    Gen(GenArgs),
    /// Build the upper bound set of an instance incrementally.
    Update {
        #[arg(long, value_enum, default_value_t = Algo::Ra)]
        algo: Algo,
        /// Assume no two points share a coordinate value (avoidance only).
        #[arg(long)]
        sa: bool,
    },
    /// Brute-force upper bound set of a small instance.
    Oracle,
    /// Check a bound set file against an instance.
    Verify {
        #[arg(long)]
        bounds: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Enumerate the nondominated points of a finite point file.
    Enumerate {
        #[arg(long, value_enum, default_value_t = Algo::Ra)]
        algo: Algo,
        #[arg(long, value_enum, default_value_t = Order::Fifo)]
        order: Order,
    },
    /// Test whether a polytope given by cuts misses the search region.
    Rule {
        #[arg(long, value_enum)]
        mode: RuleMode,
        #[arg(long)]
        cuts: PathBuf,
    },
    /// Run the insertion benchmark on a generated instance and write CSV.
    Bench {
        #[arg(long, value_enum, default_value_t = Algo::Ra)]
        algo: Algo,
        #[arg(long, default_value_t = 500)]
        record_every: usize,
        /// Named instance profile replacing the size arguments.
        #[arg(long, value_enum)]
        profile: Option<Profile>,
        #[command(flatten)]
        gen: GenArgs,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(short = 'p', long, default_value_t = 3)]
    dim: usize,
    #[arg(short = 'n', long, default_value_t = 100)]
    count: usize,
    /// Coordinates are drawn from [1, K].
    #[arg(short = 'k', long, default_value_t = 1_000_000)]
    range: i64,
    /// Draw each coordinate without replacement.
    #[arg(long)]
    sa: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Re,
    Ra,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Fifo,
    Lifo,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleMode {
    R,
    Z,
    ZTight,
}

#[derive(Clone, Copy, ValueEnum)]
enum Profile {
    Pathological,
}

fn strategy(algo: Algo, sa: bool) -> Strategy {
    match (algo, sa) {
        (Algo::Re, _) => Strategy::Re,
        (Algo::Ra, false) => Strategy::Ra,
        (Algo::Ra, true) => Strategy::RaSa,
    }
}

fn open_input(path: &Option<PathBuf>) -> Result<Box<dyn BufRead>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

fn open_file(path: &Path) -> Result<BufReader<File>, Error> {
    Ok(BufReader::new(File::open(path)?))
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Pass,
    Fail,
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Gen(g) => {
            let cfg = GenConfig {
                dim: g.dim,
                count: g.count,
                range: g.range,
                general_position: g.sa,
                seed: cli.seed,
            };
            let set = generate_stable_set(&cfg)?;
            files::write_instance(open_output(&cli.output)?, &set)?;
        }
        Command::Update { algo, sa } => {
            let set = files::read_instance(open_input(&cli.input)?)?;
            let bounds = build(strategy(algo, sa), *set.interval(), set.points())?;
            files::write_bounds(open_output(&cli.output)?, &bounds)?;
        }
        Command::Oracle => {
            let set = files::read_instance(open_input(&cli.input)?)?;
            let bounds = oracle_upper_bounds(&set, budget_from_env())?;
            files::write_bounds(open_output(&cli.output)?, &bounds)?;
        }
        Command::Verify { bounds, samples } => {
            let set = files::read_instance(open_input(&cli.input)?)?;
            let bounds = files::read_bounds(open_file(&bounds)?)?;
            if bounds.interval() != set.interval() {
                return Err(Error::InvalidConfig("bound set and instance use different intervals".into()));
            }
            let verdict = verify_upper_bound_set(&bounds, &set, samples, cli.seed);
            writeln!(open_output(&cli.output)?, "{verdict}")?;
            if !verdict.is_pass() {
                return Ok(Outcome::Fail);
            }
        }
        Command::Enumerate { algo, order } => {
            let (interval, y) = files::read_feasible_points(open_input(&cli.input)?)?;
            let order = match order {
                Order::Fifo => SelectionOrder::Fifo,
                Order::Lifo => SelectionOrder::Lifo,
            };
            let mut explorer = FiniteSetExplorer::new(y);
            let out = enumerate_nondominated(&mut explorer, interval, strategy(algo, false), order)?;
            eprintln!(
                "explorer calls: {}, nondominated: {}, bounds: {}",
                out.stats.explorer_calls, out.stats.found, out.stats.final_bounds
            );
            files::write_points(open_output(&cli.output)?, &interval, &out.nondominated.canonical())?;
        }
        Command::Rule { mode, cuts } => {
            let set = files::read_instance(open_input(&cli.input)?)?;
            let cuts = files::read_cuts(open_file(&cuts)?, set.interval().dim())?;
            let bounds = build(Strategy::Re, *set.interval(), set.points())?;
            let disjoint = match mode {
                RuleMode::R => rule_r_disjoint(&bounds, &cuts)?,
                RuleMode::Z => rule_z_disjoint(&bounds, &cuts)?,
                RuleMode::ZTight => rule_z_tight_disjoint(&bounds, &cuts)?,
            };
            let mut out = open_output(&cli.output)?;
            writeln!(out, "{}", if disjoint { "disjoint" } else { "inconclusive" })?;
            out.flush()?;
            if !disjoint {
                return Ok(Outcome::Fail);
            }
        }
        Command::Bench {
            algo,
            record_every,
            profile,
            gen,
        } => {
            let cfg = match profile {
                Some(Profile::Pathological) => GenConfig::pathological(cli.seed),
                None => GenConfig {
                    dim: gen.dim,
                    count: gen.count,
                    range: gen.range,
                    general_position: gen.sa,
                    seed: cli.seed,
                },
            };
            let run = run_benchmark(&cfg, strategy(algo, cfg.general_position), record_every)?;
            write_records(open_output(&cli.output)?, &run.records)?;
            eprintln!(
                "{}: {} bounds after {} inserts in {:.3} s",
                run.strategy,
                run.final_bounds.len(),
                cfg.count,
                run.total_nanos as f64 * 1e-9
            );
        }
    }
    Ok(Outcome::Pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
