use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use squarefactor::graph::Graph;
use squarefactor::harness::{all_fixtures, run_suite, Property, SuiteConfig};
use squarefactor::io::{parse_factor, parse_graph, to_dot, write_factor, write_graph};
use squarefactor::pattern::{find_induced_stars, satisfies_block_condition};
use squarefactor::solver::{oracle_factor, solve, SolveError};
use squarefactor::trails::{verify_factor, EvenFactor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Verb {
    /// Print the square of a graph.
    Square,
    /// Report which hypotheses hold.
    Check,
    /// Construct and verify a [2,2s]-factor of the square.
    Solve,
    /// Verify a factor file against a graph.
    Verify,
    /// Exhaustive search for a factor.
    Oracle,
    /// Run the property suite.
    Suite,
    /// List the fixtures, or write them into a directory.
    Fixtures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Host {
    Graph,
    Square,
}

#[derive(Debug, Parser)]
#[command(name = "squarefactor", version, about = "Connected even factors of bounded degree in squares of graphs")]
struct Cli {
    verb: Verb,
    /// Degree bound parameter; factors have degrees in [2, 2s].
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    s: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Largest order in exhaustive suite sweeps.
    #[arg(long = "max-n", default_value_t = 7)]
    max_n: usize,
    /// Graph the factor lives in: the input itself or its square.
    #[arg(long, value_enum, default_value_t = Host::Square)]
    host: Host,
    /// Fall back to the exhaustive search when neither solver applies.
    #[arg(long = "force-oracle")]
    force_oracle: bool,
    /// Also print the factor in DOT format.
    #[arg(long)]
    dot: bool,
    /// Suite property to run (repeatable; default all).
    #[arg(long = "property")]
    properties: Vec<String>,
    files: Vec<PathBuf>,
}

/// Exit status and standard output of one invocation.
struct Outcome {
    code: u8,
    out: String,
}

enum Failure {
    Usage(String),
}

const FOUND: u8 = 0;
const NOT_FOUND: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            print!("{}", o.out);
            ExitCode::from(o.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn one_file(cli: &Cli, count: usize) -> Result<&[PathBuf], Failure> {
    if cli.files.len() != count {
        return Err(Failure::Usage(format!(
            "{:?} takes {count} file argument(s), got {}",
            cli.verb,
            cli.files.len()
        )));
    }
    Ok(&cli.files)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let s = cli.s as usize;
    match cli.verb {
        Verb::Square => {
            let g = load_graph(&one_file(cli, 1)?[0])?;
            Ok(Outcome { code: FOUND, out: write_graph(&g.square()) })
        }
        Verb::Check => check(cli, s),
        Verb::Solve => solve_cmd(cli, s),
        Verb::Verify => verify_cmd(cli, s),
        Verb::Oracle => oracle_cmd(cli, s),
        Verb::Suite => suite_cmd(cli),
        Verb::Fixtures => fixtures_cmd(cli),
    }
}

fn check(cli: &Cli, s: usize) -> Result<Outcome, Failure> {
    let g = load_graph(&one_file(cli, 1)?[0])?;
    if !g.is_connected() {
        return Err(Failure::Usage("graph is disconnected".into()));
    }
    let star_free = find_induced_stars(&g, s, Some(1)).is_empty();
    let cond = satisfies_block_condition(&g, s).map_err(|e| Failure::Usage(e.to_string()))?;
    let bounded = g.max_degree() <= 2 * s;
    let mut out = String::new();
    writeln!(out, "star-free {star_free}").unwrap();
    writeln!(out, "condition {}", cond.holds).unwrap();
    writeln!(out, "max-degree-at-most-2s {bounded}").unwrap();
    for v in &cond.violators {
        writeln!(out, "violator {v}").unwrap();
    }
    Ok(Outcome { code: if cond.holds { FOUND } else { NOT_FOUND }, out })
}

/// Serialises a factor after checking it once more against its host.
fn print_factor(cli: &Cli, g: &Graph, host: &Graph, f: &EvenFactor, s: usize) -> Result<Outcome, Failure> {
    let report = verify_factor(host, f.edges(), s).map_err(|e| Failure::Usage(e.to_string()))?;
    if !report.is_valid() {
        return Err(Failure::Usage(format!("refusing to print an unverified factor: {report}")));
    }
    let mut out = write_factor(f.edges());
    if cli.dot {
        out.push_str(&to_dot(g, Some(f.edges())));
    }
    out.push_str("VERIFIED\n");
    Ok(Outcome { code: FOUND, out })
}

fn solve_cmd(cli: &Cli, s: usize) -> Result<Outcome, Failure> {
    let g = load_graph(&one_file(cli, 1)?[0])?;
    let sq = g.square();
    match solve(&g, s) {
        Ok(f) => print_factor(cli, &g, &sq, &f, s),
        Err(e @ (SolveError::HypothesisViolated(_) | SolveError::ReducedInstanceViolation(_))) => {
            if !cli.force_oracle {
                return Ok(Outcome { code: NOT_FOUND, out: format!("UNSUPPORTED {e}\n") });
            }
            match oracle_factor(&sq, s) {
                Ok(Some(f)) => print_factor(cli, &g, &sq, &f, s),
                Ok(None) => Ok(Outcome { code: NOT_FOUND, out: "NONE\n".into() }),
                Err(e) => Err(Failure::Usage(e.to_string())),
            }
        }
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn host_of(cli: &Cli, g: &Graph) -> Graph {
    match cli.host {
        Host::Graph => g.clone(),
        Host::Square => g.square(),
    }
}

fn verify_cmd(cli: &Cli, s: usize) -> Result<Outcome, Failure> {
    let files = one_file(cli, 2)?;
    let g = load_graph(&files[0])?;
    let host = host_of(cli, &g);
    let edges = parse_factor(&read(&files[1])?, g.vertex_count())
        .map_err(|e| Failure::Usage(format!("{}: {e}", files[1].display())))?;
    let report = match verify_factor(&host, &edges, s) {
        Ok(r) => r,
        Err(e) => return Ok(Outcome { code: NOT_FOUND, out: format!("{e}\nINVALID\n") }),
    };
    let verdict = if report.is_valid() { "VERIFIED" } else { "INVALID" };
    Ok(Outcome {
        code: if report.is_valid() { FOUND } else { NOT_FOUND },
        out: format!("{report}\n{verdict}\n"),
    })
}

fn oracle_cmd(cli: &Cli, s: usize) -> Result<Outcome, Failure> {
    let g = load_graph(&one_file(cli, 1)?[0])?;
    let host = host_of(cli, &g);
    match oracle_factor(&host, s) {
        Ok(Some(f)) => print_factor(cli, &g, &host, &f, s),
        Ok(None) => Ok(Outcome { code: NOT_FOUND, out: "NONE\n".into() }),
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn suite_cmd(cli: &Cli) -> Result<Outcome, Failure> {
    if !cli.files.is_empty() {
        return Err(Failure::Usage("suite takes no files".into()));
    }
    let mut config = SuiteConfig { seed: cli.seed, max_n: cli.max_n, ..SuiteConfig::default() };
    if config.max_n > 7 {
        return Err(Failure::Usage("--max-n is capped at 7 for exhaustive sweeps".into()));
    }
    if !cli.properties.is_empty() {
        config.properties = cli
            .properties
            .iter()
            .map(|name| Property::from_name(name).ok_or_else(|| Failure::Usage(format!("unknown property `{name}`"))))
            .collect::<Result<_, _>>()?;
    }
    let report = run_suite(&config).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(Outcome {
        code: if report.passed() { FOUND } else { NOT_FOUND },
        out: report.to_string(),
    })
}

fn fixtures_cmd(cli: &Cli) -> Result<Outcome, Failure> {
    let mut out = String::new();
    match cli.files.as_slice() {
        [] => {
            for f in all_fixtures() {
                let exp: Vec<String> = f.expected.iter().map(|e| e.to_string()).collect();
                writeln!(out, "{} {}", f.name, exp.join(" ")).unwrap();
            }
        }
        [dir] => {
            fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
            for f in all_fixtures() {
                let path = dir.join(format!("{}.graph", f.name));
                let text = format!("# fixture {}\n{}", f.name, write_graph(&f.graph));
                fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                writeln!(out, "{}", path.display()).unwrap();
            }
        }
        _ => return Err(Failure::Usage("fixtures takes at most one directory".into())),
    }
    Ok(Outcome { code: FOUND, out })
}
