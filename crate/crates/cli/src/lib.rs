//! Command-line front end for `doodle-core`.
//!
//! [`run`] takes the argument list and output sinks so the binary stays a
//! one-line shim and the commands can be driven from tests.
//!
//! Exit codes: 0 success, 1 a property or verification failure, 2 a usage or
//! parse error.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use doodle_core::invariant::f_invariant;
use doodle_core::markov::WALK_MAX_STRANDS;
use doodle_core::notation::parse_word_on;
use doodle_core::suites::{markov_suite, skein_suite, MarkovSuiteConfig, SuiteReport};
use doodle_core::table::{
    embedded_dataset_text, encode_value, family_b, family_c, format_dataset, parse_dataset,
    verify_entry, EntryReport, TableEntry,
};
use doodle_core::{Error, IntPoly, InvariantValue, TwinWord};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Largest strand bound accepted by the random suites.
const MAX_SUITE_STRANDS: u64 = 12;

#[derive(Debug, Parser)]
#[command(
    name = "doodle",
    version,
    about = "Polynomial invariant of oriented doodles from twin-group words"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute f_n of a word, its x^2-valuation, canonical form and table encoding.
    Compute(ComputeArgs),
    /// Randomized check of the Gotin-Markov behaviour of f.
    MarkovTest(MarkovArgs),
    /// Randomized check of the skein relation.
    SkeinTest(SkeinArgs),
    /// Verify or export the built-in doodle table.
    Table(TableArgs),
    /// Canonical invariants of the B_n or C^r_n families.
    Family(FamilyArgs),
    /// Number of components of the closure of a word.
    Components(WordArgs),
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Word such as "(12)^3 323" or "t10 t11"; may be empty with --strands.
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Ambient strand count; defaults to the largest letter plus one.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=4096))]
    pub strands: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// `{k}(...)` encodings next to the expanded polynomials.
    Table,
    /// Expanded polynomials only.
    Pretty,
    /// Ascending coefficient lists.
    Coeffs,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub word: WordArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct MarkovArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(0..=1_000_000))]
    pub trials: u64,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..=MAX_SUITE_STRANDS))]
    pub max_strands: u64,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub max_len: u64,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(0..=64))]
    pub max_moves: u64,
}

#[derive(Debug, Args)]
pub struct SkeinArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(0..=1_000_000))]
    pub trials: u64,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(3..=MAX_SUITE_STRANDS))]
    pub max_strands: u64,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub max_len: u64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(subcommand)]
    pub action: TableAction,
}

#[derive(Debug, Subcommand)]
pub enum TableAction {
    /// Recompute every entry (or one) and compare with the listed value.
    Verify {
        /// Entry name such as "8^1" or "15^1b".
        name: Option<String>,
        /// Read the table from a file instead of the built-in copy.
        #[arg(long)]
        dataset: Option<PathBuf>,
    },
    /// Write the table in its text format.
    Export {
        /// Replace listed values by the computed ones.
        #[arg(long)]
        computed: bool,
        /// Destination file; stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        dataset: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct FamilyArgs {
    /// Inclusive range of n for B_n = closure of (t1 t2)^n, e.g. "3..8".
    #[arg(long, value_parser = parse_range)]
    pub b: Option<RangeInclusive<usize>>,
    /// C^r_n for the given r and n.
    #[arg(long, num_args = 2, value_names = ["R", "N"], value_parser = clap::value_parser!(u64).range(1..=64))]
    pub c: Option<Vec<u64>>,
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad bound {s:?}: {e}"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let n = parse(text)?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi || hi > 512 {
        return Err(format!("range {text:?} must satisfy 1 <= lo <= hi <= 512"));
    }
    Ok(lo..=hi)
}

/// Failure of a command, carrying the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Check,
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("io error: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(&cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Check) => EXIT_FAILURE,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Compute(a) => cmd_compute(a, out),
        Command::MarkovTest(a) => cmd_markov_test(a, out),
        Command::SkeinTest(a) => cmd_skein_test(a, out),
        Command::Table(a) => cmd_table(a, out, err),
        Command::Family(a) => cmd_family(a, out),
        Command::Components(a) => cmd_components(a, out),
    }
}

/// Renders a parse error with a caret under the offending character.
pub fn caret_diagnostic(text: &str, error: &Error) -> String {
    match error {
        Error::Syntax { position, .. } => {
            let column = text
                .get(..*position)
                .map_or(text.chars().count(), |p| p.chars().count());
            format!("error: {error}\n  {text}\n  {}^", " ".repeat(column))
        }
        _ => format!("error: {error}"),
    }
}

fn read_word(args: &WordArgs) -> Result<TwinWord, Failure> {
    let strands = args.strands.map(|s| s as usize);
    parse_word_on(&args.word, strands).map_err(|e| {
        let mut msg = caret_diagnostic(&args.word, &e);
        if e == Error::EmptyWord {
            msg.push_str("\nhint: pass --strands N for the identity on N strands");
        }
        Failure::Usage(msg)
    })
}

fn encoded(p: &IntPoly) -> String {
    encode_value(p).expect("f values lie in Z[x^2]")
}

fn coeff_list(p: &IntPoly) -> String {
    let items: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn cmd_compute(args: &ComputeArgs, out: &mut dyn Write) -> CmdResult {
    let word = read_word(&args.word)?;
    let value = f_invariant(&word).map_err(|e| Failure::Usage(format!("error: {e}")))?;
    write_value(out, &word, &value, args.format)?;
    Ok(())
}

fn write_value(
    out: &mut dyn Write,
    word: &TwinWord,
    v: &InvariantValue,
    format: OutputFormat,
) -> std::io::Result<()> {
    let n = word.strands();
    let shown = if word.is_empty() {
        "(identity)".to_string()
    } else {
        word.to_string()
    };
    writeln!(out, "word: {shown}")?;
    writeln!(out, "strands: {n}")?;
    match format {
        OutputFormat::Table => {
            writeln!(out, "f_{n}: {}  {}", encoded(&v.raw), v.raw)?;
            writeln!(out, "valuation: {}", v.valuation)?;
            writeln!(out, "canonical: {}  {}", encoded(&v.canonical), v.canonical)?;
        }
        OutputFormat::Pretty => {
            writeln!(out, "f_{n}: {}", v.raw)?;
            writeln!(out, "valuation: {}", v.valuation)?;
            writeln!(out, "canonical: {}", v.canonical)?;
            writeln!(out, "encoding: {}", encoded(&v.canonical))?;
        }
        OutputFormat::Coeffs => {
            writeln!(out, "f_{n}: {}", coeff_list(&v.raw))?;
            writeln!(out, "valuation: {}", v.valuation)?;
            writeln!(out, "canonical: {}", coeff_list(&v.canonical))?;
            writeln!(out, "encoding: {}", encoded(&v.canonical))?;
        }
    }
    writeln!(out, "components: {}", word.component_count())
}

fn write_suite(out: &mut dyn Write, label: &str, r: &SuiteReport) -> CmdResult {
    writeln!(
        out,
        "{label}: {} trials, {} checks, {} passed, {} failed",
        r.trials,
        r.checks,
        r.checks - r.failures,
        r.failures
    )?;
    writeln!(
        out,
        "f values computed: {}, with odd terms: {}",
        r.values_seen, r.odd_values
    )?;
    if let Some(first) = &r.first_failure {
        writeln!(out, "first counterexample: {first}")?;
    }
    if r.passed() {
        writeln!(out, "result: pass")?;
        Ok(())
    } else {
        writeln!(out, "result: FAIL")?;
        Err(Failure::Check)
    }
}

fn core_failure(e: Error) -> Failure {
    Failure::Usage(format!("error: {e}"))
}

fn cmd_markov_test(a: &MarkovArgs, out: &mut dyn Write) -> CmdResult {
    let config = MarkovSuiteConfig {
        seed: a.seed,
        trials: a.trials as usize,
        max_strands: a.max_strands as usize,
        max_len: a.max_len as usize,
        max_moves: a.max_moves as usize,
    };
    let report = markov_suite(&config).map_err(core_failure)?;
    writeln!(
        out,
        "seed {} (words on <= {} strands, length <= {}, walks of <= {} moves within {} strands)",
        a.seed, a.max_strands, a.max_len, a.max_moves, WALK_MAX_STRANDS
    )?;
    write_suite(out, "markov", &report)
}

fn cmd_skein_test(a: &SkeinArgs, out: &mut dyn Write) -> CmdResult {
    let report = skein_suite(
        a.seed,
        a.trials as usize,
        a.max_strands as usize,
        a.max_len as usize,
    )
    .map_err(core_failure)?;
    writeln!(out, "seed {}", a.seed)?;
    write_suite(out, "skein", &report)
}

fn load_dataset(path: Option<&PathBuf>) -> Result<Vec<TableEntry>, Failure> {
    let text = match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("error: cannot read {}: {e}", p.display())))?,
        None => embedded_dataset_text().to_string(),
    };
    parse_dataset(&text).map_err(core_failure)
}

fn entry_line(r: &EntryReport) -> String {
    let head = format!(
        "{:<7} {:<22} components {}/{}",
        r.name,
        r.state.to_string(),
        r.components,
        r.expected_components
    );
    if let Some(e) = &r.error {
        return format!("{head}  error: {e}");
    }
    let mut line = format!("{head}  computed {}", encoded(&r.computed));
    if !r.state.is_match() {
        line.push_str(&format!("  table {}", encoded(&r.table_value)));
    }
    if let Some(d) = &r.diagnosis {
        line.push_str(&format!("  ({d})"));
    }
    line
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match &a.action {
        TableAction::Verify { name, dataset } => {
            let entries = load_dataset(dataset.as_ref())?;
            let selected: Vec<&TableEntry> = match name {
                Some(n) => {
                    let hits: Vec<&TableEntry> = entries.iter().filter(|e| &e.name == n).collect();
                    if hits.is_empty() {
                        return Err(Failure::Usage(format!("error: no table entry named {n:?}")));
                    }
                    hits
                }
                None => entries.iter().collect(),
            };
            let reports: Vec<EntryReport> = selected.iter().map(|e| verify_entry(e)).collect();
            let mut failed = 0;
            for r in &reports {
                writeln!(out, "{}", entry_line(r))?;
                if !r.passed() {
                    failed += 1;
                }
            }
            let mismatches = reports.iter().filter(|r| !r.state.is_match()).count();
            writeln!(
                out,
                "{} entries: {} passed, {} mismatched values, {} component disagreements",
                reports.len(),
                reports.len() - failed,
                mismatches,
                reports.iter().filter(|r| !r.components_match()).count()
            )?;
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        TableAction::Export {
            computed,
            output,
            dataset,
        } => {
            let mut entries = load_dataset(dataset.as_ref())?;
            if *computed {
                for e in &mut entries {
                    let value = e
                        .word()
                        .and_then(|w| f_invariant(&w))
                        .map_err(core_failure)?;
                    e.encoded = encoded(&value.raw);
                }
            }
            let text = format_dataset(&entries);
            match output {
                Some(path) => {
                    fs::write(path, text).map_err(|e| {
                        Failure::Usage(format!("error: cannot write {}: {e}", path.display()))
                    })?;
                    writeln!(err, "wrote {} entries to {}", entries.len(), path.display())?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(())
        }
    }
}

fn cmd_family(a: &FamilyArgs, out: &mut dyn Write) -> CmdResult {
    if let Some(range) = &a.b {
        let mut seen: Vec<(usize, IntPoly)> = Vec::new();
        for n in range.clone() {
            let v = f_invariant(&family_b(n)).map_err(core_failure)?;
            writeln!(out, "B_{n}: {}", encoded(&v.canonical))?;
            seen.push((n, v.canonical));
        }
        let mut clash = None;
        for (i, (n, p)) in seen.iter().enumerate() {
            if let Some((m, _)) = seen[i + 1..].iter().find(|(_, q)| q == p) {
                clash = Some((*n, *m));
                break;
            }
        }
        return match clash {
            None => {
                writeln!(out, "{} polynomials, pairwise distinct", seen.len())?;
                Ok(())
            }
            Some((n, m)) => {
                writeln!(out, "B_{n} and B_{m} share an invariant")?;
                Err(Failure::Check)
            }
        };
    }
    let c = a.c.as_deref().unwrap_or_default();
    let (r, n) = (c[0] as usize, c[1] as usize);
    let v = f_invariant(&family_c(r, n)).map_err(core_failure)?;
    writeln!(out, "C^{r}_{n}: {}", encoded(&v.canonical))?;
    if v.is_zero() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_components(a: &WordArgs, out: &mut dyn Write) -> CmdResult {
    let word = read_word(a)?;
    writeln!(out, "{}", word.component_count())?;
    Ok(())
}
