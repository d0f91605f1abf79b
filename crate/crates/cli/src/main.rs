use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use wordrecon_core::bounds::BoundReport;
use wordrecon_core::formats::{
    block_system_from_json, coefficients_from_json, projections_from_json, sets_from_json,
    transcript_from_json, transcript_to_json,
};
use wordrecon_core::multi::{
    coverage_decide, parse_sets, project_symbols, reconstruct_from_pairwise_projections,
    reconstruct_general, Coverage,
};
use wordrecon_core::protocol::TranscriptOracle;
use wordrecon_core::{
    adaptive_reconstruct, find_confusable, infiltrate, lyndon_words, reconstruct_binary,
    reduce_to_lyndon, scattered_factor_count, shuffle, Alphabet, BigCount, BinaryOutcome,
    BlockSystem, Orientation, Outcome, Word, WordOracle,
};

/// Reconstruct words from counts of their scattered factors.
#[derive(Parser)]
#[command(name = "wordrecon", version)]
struct Cli {
    /// Alphabet symbols in order; words given on the command line use it.
    #[arg(long, global = true, value_name = "SYMS")]
    alphabet: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of embeddings of U in W.
    Binom { w: String, u: String },
    /// Shuffle product of two words.
    Shuffle { u1: String, u2: String },
    /// Infiltration product of two words.
    Infiltrate { u1: String, u2: String },
    /// Express the count of U through counts of Lyndon words.
    LyndonReduce { u: String },
    /// Lyndon words over the first Q symbols, up to length L.
    LyndonList { q: usize, l: usize },
    /// Rebuild a binary word from block-word counts.
    ReconstructBinary(BinaryArgs),
    /// Play the adaptive query game.
    QueryGame(GameArgs),
    /// Keep only the given symbols of W.
    Project { w: String, symbols: String },
    /// Rebuild a word from its projections onto all letter pairs (JSON file).
    ReconstructProjections { file: String },
    /// Rebuild a word from a coefficient map (JSON file).
    ReconstructGeneral { file: String },
    /// Decide whether projections onto the listed subsets determine every word.
    CoverageCheck { file: String },
    /// Compare the Lyndon-count baseline with the block-word bound.
    BoundsTable(TableArgs),
    /// Exhaustively check whether the counts of the set determine W.
    BruteUnique {
        w: String,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<String>,
    },
}

#[derive(Args)]
struct BinaryArgs {
    #[arg(long, required_unless_present = "system")]
    n: Option<usize>,
    /// Comma-separated LEVEL:VALUE entries; level 0 is the count of the
    /// other letter.
    #[arg(long, value_delimiter = ',', conflicts_with = "system")]
    pairs: Vec<String>,
    /// Number of block letters, if level 0 is not among the pairs.
    #[arg(long)]
    k_a: Option<usize>,
    #[arg(long, value_enum, default_value_t = OrientationArg::Ab)]
    orientation: OrientationArg,
    /// Block system JSON file instead of flags.
    #[arg(long, conflicts_with_all = ["n", "k_a"])]
    system: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    Ab,
    Ba,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GameArgs {
    /// Hidden word; prints the transcript as JSON.
    #[arg(long)]
    hidden: Option<String>,
    /// Replays a recorded transcript and prints the word it determines.
    #[arg(long)]
    transcript: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
    #[arg(long, default_value_t = 2)]
    q: u64,
}

enum Failure {
    Usage(String),
    Domain(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<wordrecon_core::Error> for Failure {
    fn from(e: wordrecon_core::Error) -> Self {
        Failure::Domain(e.into())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn alphabet(cli: &Option<String>) -> CliResult<Arc<Alphabet>> {
    Alphabet::parse(cli.as_deref().unwrap_or("ab")).map_err(|e| usage(format!("--alphabet: {e}")))
}

fn word_arg(alphabet: &Arc<Alphabet>, name: &str, s: &str) -> CliResult<Word> {
    Word::parse(alphabet, s).map_err(|e| usage(format!("{name}: {e}")))
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn run(cli: Cli) -> CliResult<String> {
    let mut out = String::new();
    match cli.command {
        Command::Binom { w, u } => {
            let a = alphabet(&cli.alphabet)?;
            let (w, u) = (word_arg(&a, "W", &w)?, word_arg(&a, "U", &u)?);
            writeln!(out, "{}", scattered_factor_count(&w, &u)?).unwrap();
        }
        Command::Shuffle { u1, u2 } => {
            let a = alphabet(&cli.alphabet)?;
            let p = shuffle(&word_arg(&a, "U1", &u1)?, &word_arg(&a, "U2", &u2)?)?;
            writeln!(out, "{p}").unwrap();
        }
        Command::Infiltrate { u1, u2 } => {
            let a = alphabet(&cli.alphabet)?;
            let p = infiltrate(&word_arg(&a, "U1", &u1)?, &word_arg(&a, "U2", &u2)?)?;
            writeln!(out, "{p}").unwrap();
        }
        Command::LyndonReduce { u } => {
            let a = alphabet(&cli.alphabet)?;
            writeln!(out, "{}", reduce_to_lyndon(&word_arg(&a, "U", &u)?)?).unwrap();
        }
        Command::LyndonList { q, l } => {
            let a = lyndon_alphabet(&cli.alphabet, q)?;
            for w in lyndon_words(&a, l) {
                writeln!(out, "{w}").unwrap();
            }
        }
        Command::ReconstructBinary(args) => {
            let a = alphabet(&cli.alphabet)?;
            let sys = block_system(args)?;
            match reconstruct_binary(&sys, &a)? {
                BinaryOutcome::Word(w) => writeln!(out, "{w}").unwrap(),
                BinaryOutcome::NotYetUnique { level, solutions } => bail_domain(format!(
                    "not determined: {solutions} tails fit the count at level {level}"
                ))?,
                BinaryOutcome::Inconsistent(why) => {
                    bail_domain(format!("inconsistent counts: {why}"))?
                }
            }
        }
        Command::QueryGame(args) => {
            if let Some(hidden) = args.hidden {
                let a = alphabet(&cli.alphabet)?;
                let w = word_arg(&a, "--hidden", &hidden)?;
                let t = adaptive_reconstruct(&mut WordOracle::new(w))?;
                writeln!(out, "{}", transcript_to_json(&t)).unwrap();
            } else if let Some(path) = args.transcript {
                let t = transcript_from_json(&read_input(&path)?)?;
                let replayed = adaptive_reconstruct(&mut TranscriptOracle::from_transcript(&t))?;
                if replayed.outcome() != t.outcome() {
                    bail_domain("the recorded outcome differs from the replayed game")?;
                }
                match replayed.outcome() {
                    Outcome::Word(w) => writeln!(out, "{w}").unwrap(),
                    Outcome::Failure(why) => bail_domain(format!("game failed: {why}"))?,
                }
            }
        }
        Command::Project { w, symbols } => {
            let a = alphabet(&cli.alphabet)?;
            let w = word_arg(&a, "W", &w)?;
            let p = project_symbols(&w, &symbols).map_err(|e| usage(format!("SYMBOLS: {e}")))?;
            writeln!(out, "{p}").unwrap();
        }
        Command::ReconstructProjections { file } => {
            let map = projections_from_json(&read_input(&file)?)?;
            match reconstruct_from_pairwise_projections(&map)? {
                Some(w) => writeln!(out, "{w}").unwrap(),
                None => bail_domain("no word has these projections")?,
            }
        }
        Command::ReconstructGeneral { file } => {
            let (n, map) = coefficients_from_json(&read_input(&file)?)?;
            let r = reconstruct_general(n, &map)?;
            writeln!(out, "{}", r.word).unwrap();
            writeln!(out, "coefficients used: {}", r.coefficients_used).unwrap();
        }
        Command::CoverageCheck { file } => {
            let text = read_input(&file)?;
            let (a, sets) = if text.trim_start().starts_with('{') {
                sets_from_json(&text)?
            } else {
                let a = alphabet(&cli.alphabet)?;
                let sets = parse_sets(&a, &text)?;
                (a, sets)
            };
            match coverage_decide(&a, &sets) {
                Coverage::Reconstructible => writeln!(out, "reconstructible").unwrap(),
                Coverage::Witness(w, v) => writeln!(out, "witness\t{w}\t{v}").unwrap(),
            }
        }
        Command::BoundsTable(args) => {
            if args.from == 0 || args.from > args.to {
                return Err(usage("--from must be at least 1 and at most --to"));
            }
            if args.q < 2 {
                return Err(usage("--q must be at least 2"));
            }
            writeln!(out, "{}", BoundReport::HEADER).unwrap();
            for n in args.from..=args.to {
                writeln!(out, "{}", BoundReport::new(n, args.q)?.row()).unwrap();
            }
        }
        Command::BruteUnique { w, set } => {
            let a = alphabet(&cli.alphabet)?;
            let w = word_arg(&a, "W", &w)?;
            let set = set
                .iter()
                .map(|u| word_arg(&a, "--set", u))
                .collect::<CliResult<Vec<_>>>()?;
            match find_confusable(&w, &set, wordrecon_core::words::DEFAULT_ENUMERATION_CAP)? {
                None => writeln!(out, "unique").unwrap(),
                Some(v) => writeln!(out, "confusable\t{v}").unwrap(),
            }
        }
    }
    Ok(out)
}

fn bail_domain(msg: impl Into<String>) -> CliResult<()> {
    Err(Failure::Domain(anyhow!(msg.into())))
}

fn lyndon_alphabet(given: &Option<String>, q: usize) -> CliResult<Arc<Alphabet>> {
    const LETTERS: &str = "abcdefghijklmnopqrstuvwxyz";
    let symbols: Vec<char> = match given {
        Some(s) => s.chars().collect(),
        None => LETTERS.chars().collect(),
    };
    if q == 0 || q > symbols.len() {
        return Err(usage(format!(
            "Q: need between 1 and {} symbols, got {q}",
            symbols.len()
        )));
    }
    Alphabet::new(symbols[..q].iter().copied()).map_err(|e| usage(format!("--alphabet: {e}")))
}

fn parse_pair(entry: &str) -> CliResult<(usize, BigCount)> {
    let bad = || usage(format!("--pairs: expected LEVEL:VALUE, got {entry:?}"));
    let (level, value) = entry.split_once(':').ok_or_else(bad)?;
    Ok((
        level.trim().parse().map_err(|_| bad())?,
        value.trim().parse().map_err(|_| bad())?,
    ))
}

fn block_system(args: BinaryArgs) -> CliResult<BlockSystem> {
    if let Some(path) = args.system {
        return Ok(block_system_from_json(&read_input(&path)?)?);
    }
    let n = args.n.ok_or_else(|| usage("--n is required"))?;
    let orientation = match args.orientation {
        OrientationArg::Ab => Orientation::Ab,
        OrientationArg::Ba => Orientation::Ba,
    };
    let pairs = args
        .pairs
        .iter()
        .map(|p| parse_pair(p))
        .collect::<CliResult<Vec<_>>>()?;
    let level_zero = pairs.iter().find(|(l, _)| *l == 0).map(|(_, v)| v);
    let mut sys = match (level_zero, args.k_a) {
        (Some(other), k_a) => {
            let sys = BlockSystem::from_other_count(n, other, orientation)?;
            if k_a.is_some_and(|k| k != sys.block_count()) {
                bail_domain(format!("--k-a disagrees with the level-0 count {other}"))?;
            }
            sys
        }
        (None, Some(k_a)) => BlockSystem::new(n, k_a, orientation)?,
        (None, None) => return Err(usage("--pairs needs a level-0 entry, or pass --k-a")),
    };
    for (level, value) in pairs {
        sys.insert(level, value)?;
    }
    Ok(sys)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
