//! `minuscule`: root system tables, Bott-Samelson data, curve components and
//! audits for minuscule Schubert varieties.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minuscule_core::audit::{self, AuditScope, Suite};
use minuscule_core::components::{self, Partition};
use minuscule_core::{BottSamelsonData, Family, RootSystem, Word};

#[derive(Parser, Debug)]
#[command(name = "minuscule", version, about)]
struct Cli {
    /// More log output (repeatable). `MINUSCULE_LOG` also sets the filter.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minuscule and cominuscule fundamental weights of a root system.
    Table {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bott-Samelson data of a minimal coset word or a partition.
    Bs {
        #[command(flatten)]
        variety: VarietyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Effective classes indexing the components of degree-d rational curves.
    Components {
        #[command(flatten)]
        variety: VarietyArgs,
        /// Degree of the curves.
        #[arg(short, long)]
        degree: u64,
        /// Print only the number of components.
        #[arg(long)]
        count_only: bool,
        /// Annotate each class with its expected dimension.
        #[arg(long)]
        with_dimension: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sweep minuscule quotients and check every identity.
    Audit {
        /// Run every suite.
        #[arg(long)]
        all: bool,
        /// Suite to run (repeatable).
        #[arg(long = "suite", value_name = "SUITE")]
        suites: Vec<String>,
        /// Comma-separated quotients, e.g. `A4`, `D5:1`, `default`.
        #[arg(long, default_value = "default")]
        scope: String,
        /// Add the minuscule quotients of E6 and E7.
        #[arg(long)]
        include_exceptional: bool,
        /// Longest coset representative to sweep.
        #[arg(long)]
        max_length: Option<usize>,
        /// Highest degree for the component checks.
        #[arg(long, default_value_t = audit::DEFAULT_MAX_DEGREE)]
        max_degree: u64,
        /// Widest index gap handed to the chain-sum oracle.
        #[arg(long, default_value_t = audit::DEFAULT_CHAIN_WINDOW)]
        chain_window: usize,
        /// Reduced words per coset before sampling kicks in.
        #[arg(long, default_value_t = audit::DEFAULT_WORD_CAP)]
        word_cap: usize,
        /// Maximum number of elementary checks.
        #[arg(long, default_value_t = audit::DEFAULT_BUDGET)]
        budget: u64,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct SystemArgs {
    /// Root system family (A-G).
    #[arg(short = 't', long = "type", value_name = "FAMILY")]
    family: String,
    /// Rank of the root system.
    #[arg(short, long)]
    rank: usize,
}

#[derive(Args, Debug)]
struct VarietyArgs {
    /// Root system family (A-G).
    #[arg(short = 't', long = "type", value_name = "FAMILY")]
    family: Option<String>,
    /// Rank of the root system.
    #[arg(short, long)]
    rank: Option<usize>,
    /// Index of the minuscule fundamental weight.
    #[arg(short, long)]
    weight: Option<usize>,
    /// Minimal coset word, comma separated, e.g. `1,3,2`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "partition")]
    word: Option<String>,
    /// Missing boxes of the Grassmannian Schubert variety, comma separated.
    #[arg(long, requires = "box_size")]
    partition: Option<String>,
    /// Box `rows,cols` for `--partition`.
    #[arg(long = "box", value_name = "ROWS,COLS")]
    box_size: Option<String>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the JSON document to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

/// Failures mapped to exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    AuditFailed,
    Internal(String),
}

impl From<minuscule_core::Error> for Failure {
    fn from(e: minuscule_core::Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn parse_list(s: &str, what: &str) -> CliResult<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("cannot parse {what} {s:?}")))
        })
        .collect()
}

fn build_system(family: &str, rank: usize) -> CliResult<RootSystem> {
    let family: Family = family.parse()?;
    Ok(RootSystem::build(family, rank)?)
}

/// Resolved input of a variety-level command.
struct Variety {
    rs: RootSystem,
    weight: usize,
    word: Word,
}

fn resolve_variety(args: &VarietyArgs) -> CliResult<Variety> {
    match (&args.word, &args.partition) {
        (Some(word), None) => {
            let (Some(family), Some(rank), Some(weight)) = (&args.family, args.rank, args.weight)
            else {
                return Err(Failure::Usage(
                    "--word needs --type, --rank and --weight".into(),
                ));
            };
            Ok(Variety {
                rs: build_system(family, rank)?,
                weight,
                word: Word::new(parse_list(word, "word")?),
            })
        }
        (None, Some(parts)) => {
            let size = args.box_size.as_deref().unwrap_or_default();
            let dims = parse_list(size, "box")?;
            let [rows, cols] = dims[..] else {
                return Err(Failure::Usage(format!("--box expects ROWS,COLS, got {size:?}")));
            };
            let p = Partition::from_codim(parse_list(parts, "partition")?, rows, cols)?;
            let rs = p.root_system()?;
            let family_ok = match &args.family {
                Some(f) => f.parse::<Family>()? == Family::A,
                None => true,
            };
            if !family_ok
                || args.rank.is_some_and(|r| r != rs.rank())
                || args.weight.is_some_and(|w| w != p.weight_index())
            {
                return Err(Failure::Usage(format!(
                    "a {rows}x{cols} box lives in A{} with weight {}",
                    rs.rank(),
                    p.weight_index()
                )));
            }
            let (word, weight) = components::partition_to_word(&p)?;
            Ok(Variety { rs, weight, word })
        }
        _ => Err(Failure::Usage(
            "give exactly one of --word or --partition".into(),
        )),
    }
}

fn emit(output: &OutputArgs, json: serde_json::Value, text: impl FnOnce() -> String) -> CliResult<()> {
    let doc = serde_json::to_string_pretty(&json)
        .map_err(|e| Failure::Internal(format!("cannot serialize output: {e}")))?;
    if let Some(path) = &output.out {
        fs::write(path, format!("{doc}\n"))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let rendered = match output.format {
        Format::Json if output.out.is_none() => format!("{doc}\n"),
        Format::Json => return Ok(()),
        Format::Text => text(),
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = io::stdout().lock().write_all(rendered.as_bytes());
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> CliResult<serde_json::Value> {
    serde_json::to_value(v).map_err(|e| Failure::Internal(format!("cannot serialize output: {e}")))
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Table { system, output } => {
            let rs = build_system(&system.family, system.rank)?;
            let classes = rs.classify_minuscule();
            emit(&output, to_json(&classes)?, || render::table(&rs, &classes))
        }
        Command::Bs { variety, output } => {
            let v = resolve_variety(&variety)?;
            let bs = BottSamelsonData::build(&v.rs, v.weight, &v.word)?;
            let report = bs.report()?;
            emit(&output, to_json(&report)?, || render::bott_samelson(&bs, &report))
        }
        Command::Components {
            variety,
            degree,
            count_only,
            with_dimension,
            output,
        } => {
            let v = resolve_variety(&variety)?;
            let bs = BottSamelsonData::build(&v.rs, v.weight, &v.word)?;
            if count_only {
                let count = components::component_count(&bs, degree)?;
                let json = serde_json::json!({ "degree": degree, "count": count });
                return emit(&output, json, || format!("degree {degree}: {count} components\n"));
            }
            let mut set = components::ne_set(&bs, degree)?;
            if with_dimension {
                components::annotate_dimensions(&bs, &mut set)?;
            }
            emit(&output, to_json(&set)?, || render::components(&bs, &set))
        }
        Command::Audit {
            all,
            suites,
            scope,
            include_exceptional,
            max_length,
            max_degree,
            chain_window,
            word_cap,
            budget,
            jobs,
            output,
        } => {
            let mut selected: Vec<Suite> = suites
                .iter()
                .map(|s| s.parse())
                .collect::<Result<_, _>>()?;
            if all {
                selected = Suite::ALL.to_vec();
            }
            if selected.is_empty() {
                return Err(Failure::Usage("choose --all or at least one --suite".into()));
            }
            let mut s = AuditScope::new(AuditScope::parse_entries(&scope)?);
            if include_exceptional {
                s = s.with_exceptional();
            }
            if let Some(m) = max_length {
                s.max_length = m;
            }
            s.max_degree = max_degree;
            s.chain_window = chain_window;
            s.word_cap = word_cap;
            s.budget = budget;
            s.jobs = jobs;
            let report = audit::run(&s, &selected)?;
            emit(&output, to_json(&report)?, || report.to_string())?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::AuditFailed)
            }
        }
    }
}

fn init_logging(verbose: u8) {
    let mut builder =
        env_logger::Builder::from_env(env_logger::Env::new().filter_or("MINUSCULE_LOG", "warn"));
    match verbose {
        0 => {}
        1 => {
            builder.filter_level(log::LevelFilter::Info);
        }
        _ => {
            builder.filter_level(log::LevelFilter::Debug);
        }
    }
    builder.format_timestamp(None).init();
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    init_logging(cli.verbose);
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::AuditFailed) => ExitCode::from(2),
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
