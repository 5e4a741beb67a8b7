//! Command-line front end.
//!
//! Exit codes: 0 accept/success, 1 reject, 2 usage or parse errors,
//! 3 internal errors.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use ridfa_cli::bench::{
    run_bench, BenchConfig, GenMode, TextSpec, DEFAULT_CHUNK_SWEEP, DEFAULT_REPETITIONS,
};
use ridfa_cli::formats::document::{load_automaton, save_automaton, Automaton};
use ridfa_cli::formats::report::{csv_document, report_json, report_text};
use ridfa_cli::formats::text::{load_text, ForeignBytePolicy};
use ridfa_cli::formats::timbuk::load_timbuk;
use ridfa_cli::parallel::recognize_parallel;
use ridfa_cli::stats::{machine_stats, ratio_histogram, stats_csv_row, stats_line, STATS_CSV_HEADER};
use ridfa_core::{
    build_ridfa, family_nfa, minimize_dfa, parse_regex, powerset_from, regex_to_nfa,
    AlphabetMode, Nfa, RecognizerError, Variant,
};

#[derive(Parser)]
#[command(
    name = "ridfa",
    version,
    about = "Speculative data-parallel recognition of regular texts with NFA, DFA and reduced-interface DFA chunk automata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the NFA, DFA and RI-DFA for a source and save them as documents
    Build(BuildArgs),
    /// Recognize a text with one chunk-automaton variant and print the report
    Recognize(RecognizeArgs),
    /// Sweep texts, chunk counts and variants; emit plot-ready CSV
    Bench(BenchArgs),
    /// Construction statistics: state counts, interface sizes, size ratios
    Stats(StatsArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["re", "timbuk", "automaton", "family"])))]
struct SourceArgs {
    /// Regular expression source
    #[arg(long, value_name = "PATTERN")]
    re: Option<String>,
    /// Timbuk word-automaton file
    #[arg(long, value_name = "FILE")]
    timbuk: Option<PathBuf>,
    /// Saved NFA document
    #[arg(long, value_name = "FILE")]
    automaton: Option<PathBuf>,
    /// Member k of the synthetic (a|b)*a(a|b)^k family
    #[arg(long, value_name = "K")]
    family: Option<usize>,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Output directory for the saved documents
    #[arg(long, value_name = "DIR", default_value = ".")]
    out: PathBuf,
    /// Base name of the saved documents (default: derived from the source)
    #[arg(long, value_name = "NAME")]
    name: Option<String>,
    /// Save the minimized DFA instead of the raw powerset machine
    #[arg(long)]
    minimize: bool,
    /// Save the RI-DFA with its interface reduced by delegation
    #[arg(long)]
    reduce_interface: bool,
}

#[derive(Args)]
struct RecognizeArgs {
    /// Saved automaton document matching --variant
    #[arg(long, value_name = "FILE")]
    automaton: PathBuf,
    /// Chunk-automaton variant to run
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Input text file (raw bytes)
    #[arg(long, value_name = "FILE")]
    text: PathBuf,
    /// Number of chunks (clamped to the text length)
    #[arg(long, default_value_t = 2)]
    chunks: usize,
    /// Map bytes outside the alphabet to a rejecting sink symbol instead of failing
    #[arg(long)]
    allow_foreign: bool,
    /// Also write the report as JSON to this file
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Variants to run (repeatable; default: all three)
    #[arg(long, value_enum)]
    variant: Vec<VariantArg>,
    /// Chunk counts, comma separated (default: 2,10,18,...,66)
    #[arg(long, value_delimiter = ',')]
    chunks: Vec<usize>,
    /// Text files (repeatable)
    #[arg(long, value_name = "FILE")]
    text: Vec<PathBuf>,
    /// Generate texts instead: uniform symbols or a language walk
    #[arg(long, value_enum)]
    gen: Option<GenModeArg>,
    /// Lengths of the generated texts, comma separated
    #[arg(long, value_delimiter = ',')]
    len: Vec<usize>,
    /// Seed for generated texts (text i uses seed + i)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Repetitions per cell; timings take the median
    #[arg(long, default_value_t = DEFAULT_REPETITIONS)]
    reps: usize,
    /// Run the RI-DFA variant on the interface-reduced machine
    #[arg(long)]
    reduce_interface: bool,
    /// Map foreign text bytes to a rejecting sink symbol
    #[arg(long)]
    allow_foreign: bool,
    /// Write the CSV here instead of standard output
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Benchmark label for the first CSV column (default: derived)
    #[arg(long, value_name = "NAME")]
    name: Option<String>,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Also write per-machine statistics as CSV to this file
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum VariantArg {
    Dfa,
    Nfa,
    Ridfa,
}

impl From<VariantArg> for Variant {
    fn from(arg: VariantArg) -> Variant {
        match arg {
            VariantArg::Dfa => Variant::Dfa,
            VariantArg::Nfa => Variant::Nfa,
            VariantArg::Ridfa => Variant::RiDfa,
        }
    }
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum GenModeArg {
    Uniform,
    Walk,
}

/// A failed run, already classified by exit code.
enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// Bug or inconsistency: exit 3.
    Internal(String),
}

impl Failure {
    fn usage(err: impl Display) -> Failure {
        Failure::Usage(err.to_string())
    }
}

impl From<RecognizerError> for Failure {
    fn from(err: RecognizerError) -> Failure {
        Failure::Internal(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(message)) => {
            eprintln!("internal error: {message}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Recognize(args) => cmd_recognize(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Stats(args) => cmd_stats(args),
    }
}

/// Loads the source NFA and derives a default name for it.
fn load_source(source: &SourceArgs) -> Result<(String, Nfa), Failure> {
    if let Some(pattern) = &source.re {
        let (ast, alphabet) =
            parse_regex(pattern, AlphabetMode::Bytes).map_err(Failure::usage)?;
        let nfa = regex_to_nfa(&ast, &alphabet);
        eprintln!(
            "effective alphabet ({} symbols): {}",
            alphabet.len(),
            alphabet.symbols().join(" ")
        );
        return Ok(("re".into(), nfa));
    }
    if let Some(path) = &source.timbuk {
        let input = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let (nfa, warnings) = load_timbuk(&input).map_err(Failure::usage)?;
        for warning in warnings {
            eprintln!("warning: {}: {warning}", path.display());
        }
        return Ok((stem_of(path), nfa));
    }
    if let Some(path) = &source.automaton {
        let input = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        match load_automaton(&input).map_err(Failure::usage)? {
            Automaton::Nfa(nfa) => return Ok((stem_of(path), nfa)),
            other => {
                return Err(Failure::Usage(format!(
                    "{} holds a {} document; this command needs an NFA source",
                    path.display(),
                    other.kind()
                )))
            }
        }
    }
    let k = source.family.expect("clap enforces exactly one source");
    Ok((format!("family-k{k}"), family_nfa(k)))
}

fn stem_of(path: &Path) -> String {
    path.file_stem().map_or_else(|| "machine".into(), |s| s.to_string_lossy().into_owned())
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn cmd_build(args: BuildArgs) -> Result<ExitCode, Failure> {
    let (default_name, nfa) = load_source(&args.source)?;
    let name = args.name.unwrap_or(default_name);

    let stats = machine_stats(&name, &nfa);
    let dfa = if args.minimize {
        minimize_dfa(&powerset_from(&nfa, nfa.initials()))
    } else {
        powerset_from(&nfa, nfa.initials())
    };
    let ridfa = if args.reduce_interface {
        build_ridfa(&nfa).reduce_interface()
    } else {
        build_ridfa(&nfa)
    };

    std::fs::create_dir_all(&args.out)
        .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", args.out.display())))?;
    let save = |suffix: &str, machine: &Automaton| -> Result<PathBuf, Failure> {
        let path = args.out.join(format!("{name}.{suffix}.json"));
        write_file(&path, &save_automaton(machine))?;
        Ok(path)
    };
    let nfa_path = save("nfa", &Automaton::Nfa(nfa))?;
    let dfa_path = save("dfa", &Automaton::Dfa(dfa))?;
    let rid_path = save("ridfa", &Automaton::RiDfa(ridfa))?;

    println!("{}", stats_line(&stats));
    println!(
        "saved: {} {} {}",
        nfa_path.display(),
        dfa_path.display(),
        rid_path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_recognize(args: RecognizeArgs) -> Result<ExitCode, Failure> {
    let input = std::fs::read_to_string(&args.automaton)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", args.automaton.display())))?;
    let machine = load_automaton(&input).map_err(Failure::usage)?;
    let wanted: Variant = args.variant.into();
    if machine.machine_ref().variant() != wanted {
        return Err(Failure::Usage(format!(
            "variant {} requested, but {} holds a {} document",
            wanted,
            args.automaton.display(),
            machine.kind()
        )));
    }

    let policy =
        if args.allow_foreign { ForeignBytePolicy::Sink } else { ForeignBytePolicy::Strict };
    let text = load_text(&args.text, machine.alphabet(), policy).map_err(Failure::usage)?;

    let report = recognize_parallel(machine.machine_ref(), &text, args.chunks)?;
    print!("{}", report_text(&report));
    if let Some(path) = &args.out {
        write_file(path, &report_json(&report))?;
    }
    Ok(if report.accepted { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode, Failure> {
    let (default_name, nfa) = load_source(&args.source)?;

    let mut texts: Vec<TextSpec> = args.text.iter().cloned().map(TextSpec::File).collect();
    if let Some(mode) = args.gen {
        let mode = match mode {
            GenModeArg::Uniform => GenMode::Uniform,
            GenModeArg::Walk => GenMode::Walk,
        };
        if args.len.is_empty() {
            return Err(Failure::Usage("--gen needs at least one --len".into()));
        }
        texts.extend(args.len.iter().map(|&len| TextSpec::Generated { mode, len }));
    } else if !args.len.is_empty() {
        return Err(Failure::Usage("--len without --gen".into()));
    }

    let variants: Vec<Variant> = if args.variant.is_empty() {
        vec![Variant::Dfa, Variant::Nfa, Variant::RiDfa]
    } else {
        args.variant.iter().map(|&v| v.into()).collect()
    };
    let chunk_counts =
        if args.chunks.is_empty() { DEFAULT_CHUNK_SWEEP.to_vec() } else { args.chunks.clone() };

    let config = BenchConfig {
        label: args.name.unwrap_or(default_name),
        variants,
        chunk_counts,
        texts,
        repetitions: args.reps,
        reduce_interface: args.reduce_interface,
        seed: args.seed,
        foreign_bytes: if args.allow_foreign {
            ForeignBytePolicy::Sink
        } else {
            ForeignBytePolicy::Strict
        },
    };
    let outcome = run_bench(&nfa, &config).map_err(Failure::usage)?;
    for failure in &outcome.failures {
        eprintln!("cell failed: {failure}");
    }

    let csv = csv_document(&outcome.rows);
    match &args.csv {
        Some(path) => write_file(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_stats(args: StatsArgs) -> Result<ExitCode, Failure> {
    // A Timbuk source may be a whole directory (a collection).
    let mut machines: Vec<(String, Nfa)> = Vec::new();
    match &args.source.timbuk {
        Some(path) if path.is_dir() => {
            let mut entries: Vec<PathBuf> = std::fs::read_dir(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            entries.sort();
            for file in entries {
                let input = std::fs::read_to_string(&file)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
                match load_timbuk(&input) {
                    Ok((nfa, warnings)) => {
                        for warning in warnings {
                            eprintln!("warning: {}: {warning}", file.display());
                        }
                        machines.push((stem_of(&file), nfa));
                    }
                    Err(err) => eprintln!("skipping {}: {err}", file.display()),
                }
            }
            if machines.is_empty() {
                return Err(Failure::Usage(format!(
                    "no loadable automata in {}",
                    path.display()
                )));
            }
        }
        _ => {
            let (name, nfa) = load_source(&args.source)?;
            machines.push((name, nfa));
        }
    }

    let collection: Vec<_> =
        machines.iter().map(|(name, nfa)| machine_stats(name, nfa)).collect();
    for stats in &collection {
        println!("{}", stats_line(stats));
    }
    if collection.len() > 1 {
        println!();
        print!("{}", ratio_histogram(&collection));
    }
    if let Some(path) = &args.csv {
        let mut csv = String::from(STATS_CSV_HEADER);
        csv.push('\n');
        for stats in &collection {
            csv.push_str(&stats_csv_row(stats));
            csv.push('\n');
        }
        write_file(path, &csv)?;
    }
    Ok(ExitCode::SUCCESS)
}
