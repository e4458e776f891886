//! `bisgpd`: validate instance files, compute bisection groups, action and
//! gauge groupoids, and run the law suites.
//!
//! Exit codes: 0 everything passed, 1 a law was violated, 2 bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bisgpd::action::ltimes;
use bisgpd::bisection::{beta_star, enumerate_bisections, SlicedGroupHom};
use bisgpd::harness::corpus::{check, Corpus, Suite};
use bisgpd::harness::engine::{all_pass, LawReport};
use bisgpd::harness::fixtures::{fixture, FIXTURES};
use bisgpd::harness::format::{emit, load, Instance, Named};
use bisgpd::transitive::gauge_groupoid;
use bisgpd::{Error, Limits};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bisgpd", version, about = "Finite groupoids, bisection groups and their adjunctions")]
struct Cli {
    /// Backtracking nodes allowed per enumeration
    #[arg(long, global = true, env = "BISGPD_CAP", default_value_t = Limits::default().search_nodes)]
    cap: usize,

    /// Largest group built as a full multiplication table
    #[arg(long, global = true, env = "BISGPD_MAX_GROUP_ORDER", default_value_t = Limits::default().group_order)]
    max_group_order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    MachineReadable,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an instance file
    Validate { input: String },
    /// Bisection group of a groupoid
    Bis { input: String },
    /// Action groupoid K⋉M of an action, as an instance file
    Ltimes { input: String },
    /// Gauge groupoid R(θ,H) of a transitive pair, as an instance file
    Gauge { input: String },
    /// Run one law suite over a corpus
    Check {
        suite: Suite,
        /// Directory of instance files; defaults to the built-in fixtures
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List or emit registry fixtures
    Fixtures {
        #[command(subcommand)]
        action: FixturesCommand,
    },
    /// Run every suite over a corpus
    Report {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum FixturesCommand {
    List,
    /// Print one fixture, or write all of them into a directory
    Emit {
        #[arg(required_unless_present = "all")]
        name: Option<String>,
        #[arg(long, requires = "dir")]
        all: bool,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

enum Failure {
    Input(Error),
    Laws,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Validation(format!("{}: {}", path.display(), e))
}

/// A file path, or the name of a registry fixture.
fn read_input(input: &str) -> Result<Named, Error> {
    let path = Path::new(input);
    if !path.exists() && FIXTURES.contains(&input) {
        return fixture(input);
    }
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    load(&text)
}

fn wrong_kind(named: &Named, expected: &str) -> Error {
    Error::Validation(format!("`{}` is a {}, expected a {}", named.name, named.instance.kind(), expected))
}

fn print_reports(reports: &[LawReport], format: Format) {
    for r in reports {
        match format {
            Format::Text => println!("{}", r.to_text()),
            Format::MachineReadable => println!("{}", r.to_json_line()),
        }
    }
    if format == Format::Text {
        let failed = reports.iter().filter(|r| !r.passed()).count();
        let skipped = reports.iter().filter(|r| r.status == bisgpd::harness::engine::Status::Skipped).count();
        println!(
            "{} laws: {} passed, {} failed, {} skipped",
            reports.len(),
            reports.len() - failed - skipped,
            failed,
            skipped
        );
    }
}

fn corpus(dir: Option<&Path>) -> Result<Corpus, Error> {
    match dir {
        Some(d) => Corpus::from_dir(d),
        None => Ok(Corpus::fixtures()),
    }
}

fn validate(input: &str) -> Result<(), Failure> {
    let named = read_input(input)?;
    match &named.instance {
        Instance::Group(g) => println!("ok: group `{}` of order {}", named.name, g.order()),
        Instance::Action(a) => println!(
            "ok: action `{}` of a group of order {} on {} points, {}",
            named.name,
            a.group().order(),
            a.degree(),
            if a.is_transitive() { "transitive" } else { "not transitive" }
        ),
        Instance::Groupoid(g) => println!(
            "ok: groupoid `{}` with {} arrows over {} objects, {}",
            named.name,
            g.arrow_count(),
            g.object_count(),
            if g.is_locally_trivial() { "locally trivial" } else { "not locally trivial" }
        ),
        Instance::Pair(p) => {
            println!(
                "ok: pair `{}`, |K| = {}, |H| = {}, |Stab_m| = {}",
                named.name,
                p.group().order(),
                p.h().order(),
                p.stabilizer().order()
            );
            let v = p.validation();
            println!(
                "transitive: {:?}, normal in stabilizer: {:?}, regular: {:?}, co-Banach: {:?}",
                v.transitive, v.normal_in_stabilizer, v.regular, v.co_banach
            );
        }
    }
    Ok(())
}

fn bis(input: &str, limits: &Limits) -> Result<(), Failure> {
    let named = read_input(input)?;
    let Instance::Groupoid(g) = &named.instance else {
        return Err(wrong_kind(&named, "groupoid").into());
    };
    let bis = enumerate_bisections(g, limits)?;
    let beta = beta_star(&bis);
    let k = bis.group();
    println!("order {}", bis.order());
    let mut seen: Vec<_> = beta.permutations().to_vec();
    seen.sort();
    seen.dedup();
    println!(
        "β_* is {}injective; image has order {}",
        if seen.len() == bis.order() { "" } else { "not " },
        seen.len()
    );
    let names: Vec<String> = (0..bis.order())
        .map(|i| bis.beta(i).cycle_notation(g.objects()))
        .collect();
    for i in k.elements() {
        println!("  {} ↦ {}", k.name(i), names[i]);
    }
    // Cayley table in β-images, row·column
    let width = names.iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let cell = |s: &str| format!("{:>w$}", s, w = width);
    println!("{} | {}", cell("·"), names.iter().map(|s| cell(s)).collect::<Vec<_>>().join(" "));
    for a in k.elements() {
        let row: Vec<String> = k.elements().map(|b| cell(&names[k.mul(a, b)])).collect();
        println!("{} | {}", cell(&names[a]), row.join(" "));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = Limits {
        search_nodes: cli.cap,
        group_order: cli.max_group_order,
    };
    match cli.command {
        Command::Validate { input } => validate(&input),
        Command::Bis { input } => bis(&input, &limits),
        Command::Ltimes { input } => {
            let named = read_input(&input)?;
            let Instance::Action(a) = &named.instance else {
                return Err(wrong_kind(&named, "action").into());
            };
            let lt = ltimes(&SlicedGroupHom::from_action(a));
            print!("{}", emit(&format!("{}⋉M", named.name), &Instance::Groupoid(lt.groupoid().clone())));
            Ok(())
        }
        Command::Gauge { input } => {
            let named = read_input(&input)?;
            let Instance::Pair(p) = &named.instance else {
                return Err(wrong_kind(&named, "pair").into());
            };
            let r = gauge_groupoid(p)?;
            log::info!(
                "|K/H| = {}, |Λ_m| = {}, {} arrows",
                r.bundle().total_size(),
                r.bundle().structure_group().order(),
                r.groupoid().arrow_count()
            );
            print!("{}", emit(&format!("R({})", named.name), &Instance::Groupoid(r.groupoid().clone())));
            Ok(())
        }
        Command::Check { suite, corpus: dir, format } => {
            let c = corpus(dir.as_deref())?;
            let reports = check(suite, &c, &limits);
            print_reports(&reports, format);
            if all_pass(&reports) {
                Ok(())
            } else {
                Err(Failure::Laws)
            }
        }
        Command::Report { corpus: dir, format } => {
            let c = corpus(dir.as_deref())?;
            let mut reports: Vec<LawReport> = Suite::ALL.iter().flat_map(|&s| check(s, &c, &limits)).collect();
            reports.sort_by(|a, b| (&a.law, &a.subject).cmp(&(&b.law, &b.subject)));
            reports.dedup();
            print_reports(&reports, format);
            if all_pass(&reports) {
                Ok(())
            } else {
                Err(Failure::Laws)
            }
        }
        Command::Fixtures { action } => match action {
            FixturesCommand::List => {
                for name in FIXTURES {
                    let f = fixture(name)?;
                    println!("{:<20} {}", name, f.instance.kind());
                }
                Ok(())
            }
            FixturesCommand::Emit { name, all, dir } => {
                if all {
                    let dir = dir.expect("clap enforces --dir");
                    std::fs::create_dir_all(&dir).map_err(|e| io_error(&dir, e))?;
                    for name in FIXTURES {
                        let f = fixture(name)?;
                        let path = dir.join(format!("{}.json", name));
                        std::fs::write(&path, emit(&f.name, &f.instance)).map_err(|e| io_error(&path, e))?;
                    }
                    return Ok(());
                }
                let f = fixture(&name.expect("clap enforces a name"))?;
                let text = emit(&f.name, &f.instance);
                match dir {
                    Some(dir) => {
                        let path = dir.join(format!("{}.json", f.name));
                        std::fs::write(&path, text).map_err(|e| io_error(&path, e))?;
                    }
                    None => print!("{}", text),
                }
                Ok(())
            }
        },
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Laws) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
