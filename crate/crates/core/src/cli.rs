//! The `ocwords` command line.
//!
//! Exit codes: 0 success, 1 a self-test found a violation, 2 usage or parse
//! error, 3 the input is not the oc-sequence of a Sturmian word.

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::border::compute_border_array;
use crate::error::Error;
use crate::oc::{compute_oc_sequence, runs, OcSequence};
use crate::oracle::{maximality_witness, run_suites, uniqueness_census};
use crate::reconstruct::reconstruct_with_borders;
use crate::sturmian::{
    classify, oc_closed_form, run_boundaries, square_factorization, standard_prefix,
    Classification, DirectiveSequence,
};
use crate::word::{Alphabet, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_STURMIAN: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ocwords",
    version,
    about = "Open and closed prefixes of words, and Sturmian words from their oc-sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the oc-sequence of a word.
    Oc(OcArgs),
    /// Rebuild the Sturmian word starting with `a` from its oc-sequence.
    Reconstruct(ReconstructArgs),
    /// Print a prefix of a standard Sturmian word and its structure.
    Generate(GenerateArgs),
    /// Print every structural predicate of a word.
    Analyze(AnalyzeArgs),
    /// Run the exhaustive invariant suites.
    Selftest(SelftestArgs),
    /// Group balanced words by oc-sequence.
    Census(CensusArgs),
    /// List unbalanced words sharing an oc-sequence with a balanced one.
    Witness(WitnessArgs),
}

#[derive(Args, Debug)]
struct WordInput {
    /// The word, one symbol per character.
    word: Option<String>,
    /// Use the empty word.
    #[arg(long, conflicts_with_all = ["word", "stdin"])]
    empty: bool,
    /// Read one word per line from standard input.
    #[arg(long, conflicts_with = "word")]
    stdin: bool,
}

#[derive(Args, Debug)]
struct OcArgs {
    #[command(flatten)]
    input: WordInput,
    /// Also print the run-length pairs.
    #[arg(long)]
    runs: bool,
    /// Also print the border array.
    #[arg(long)]
    border: bool,
    /// Declared alphabet, e.g. `abc`; symbols outside it are rejected.
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Args, Debug)]
struct ReconstructArgs {
    /// The oc-sequence as a `0`/`1` string.
    oc: Option<String>,
    /// Read one oc-sequence per line from standard input.
    #[arg(long, conflicts_with = "oc")]
    stdin: bool,
    /// Print the isomorphic word starting with `b`.
    #[arg(long)]
    mirror: bool,
    /// Skip the round-trip check.
    #[arg(long)]
    no_validate: bool,
    /// Also print the border array built during reconstruction.
    #[arg(long)]
    border: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Human,
    Machine,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("what").required(true).multiple(true).args(["length", "factorize"]))]
struct GenerateArgs {
    /// Directive digits d_0,d_1,... (the last digit repeats forever).
    directive: String,
    /// Length of the prefix to print.
    #[arg(long)]
    length: Option<usize>,
    /// Also print the oc-sequence of the prefix, from the closed form.
    #[arg(long, requires = "length")]
    oc: bool,
    /// Also print the positions where the oc-sequence flips.
    #[arg(long, requires = "length")]
    boundaries: bool,
    /// Print the head and this many square factors.
    #[arg(long, value_name = "M")]
    factorize: Option<usize>,
    /// Layout of the factorization.
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: WordInput,
    /// One JSON object per word.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    /// Longest word enumerated (at most 16).
    #[arg(long, default_value_t = 12)]
    max_n: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CensusFormat {
    Table,
    Records,
}

#[derive(Args, Debug)]
struct CensusArgs {
    /// Longest word enumerated (at most 16).
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = CensusFormat::Table)]
    format: CensusFormat,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    /// Longest word enumerated (at most 14).
    #[arg(long, default_value_t = 6)]
    max_n: usize,
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    let code = match cli.command {
        Command::Oc(a) => cmd_oc(&a, &mut io),
        Command::Reconstruct(a) => cmd_reconstruct(&a, &mut io),
        Command::Generate(a) => cmd_generate(&a, &mut io),
        Command::Analyze(a) => cmd_analyze(&a, &mut io),
        Command::Selftest(a) => cmd_selftest(&a, &mut io),
        Command::Census(a) => cmd_census(&a, &mut io),
        Command::Witness(a) => cmd_witness(&a, &mut io),
    };
    let _ = io.out.flush();
    code
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotSturmianOc(_) | Error::InvalidOcStart => EXIT_NOT_STURMIAN,
        _ => EXIT_USAGE,
    }
}

fn fail(io: &mut Io<'_>, e: &Error) -> i32 {
    let _ = writeln!(io.err, "error: {e}");
    exit_code(e)
}

fn usage(io: &mut Io<'_>, msg: &str) -> i32 {
    let _ = writeln!(io.err, "error: {msg}");
    EXIT_USAGE
}

/// The raw tokens to process: a single positional token, the empty word,
/// or every line of standard input.
fn tokens(input: &WordInput, io: &mut Io<'_>) -> Result<Vec<String>, i32> {
    if input.stdin {
        read_lines(io)
    } else if input.empty {
        Ok(vec![String::new()])
    } else if let Some(w) = &input.word {
        if w.is_empty() {
            return Err(usage(
                io,
                "empty word token; pass --empty for the empty word",
            ));
        }
        Ok(vec![w.clone()])
    } else {
        Err(usage(io, "expected a word, --empty or --stdin"))
    }
}

fn read_lines(io: &mut Io<'_>) -> Result<Vec<String>, i32> {
    let mut lines = Vec::new();
    for line in io.stdin.lines() {
        match line {
            Ok(l) => lines.push(l.trim_end_matches('\r').to_string()),
            Err(e) => return Err(usage(io, &format!("reading standard input: {e}"))),
        }
    }
    Ok(lines)
}

/// Processes each token, printing results and reporting failures; the exit
/// code is the worst one seen.
fn each_token(
    tokens: Vec<String>,
    io: &mut Io<'_>,
    mut f: impl FnMut(&str, &mut Io<'_>) -> Result<(), Error>,
) -> i32 {
    let mut code = EXIT_OK;
    for t in tokens {
        if let Err(e) = f(&t, io) {
            code = code.max(fail(io, &e));
        }
    }
    code
}

fn cmd_oc(a: &OcArgs, io: &mut Io<'_>) -> i32 {
    let tokens = match tokens(&a.input, io) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let alphabet = a.alphabet.as_deref().map(|s| Alphabet::new(s.chars()));
    let batch = a.input.stdin;
    each_token(tokens, io, |t, io| {
        let w = match &alphabet {
            Some(al) => Word::parse_over(t, al)?,
            None => Word::parse(t)?,
        };
        let mut fields = vec![compute_oc_sequence(&w).to_string()];
        if a.runs {
            fields.push(runs(&compute_oc_sequence(&w)).to_string());
        }
        if a.border {
            fields.push(compute_border_array(&w).to_string());
        }
        let sep = if batch { "\t" } else { "\n" };
        let _ = writeln!(io.out, "{}", fields.join(sep));
        Ok(())
    })
}

fn cmd_reconstruct(a: &ReconstructArgs, io: &mut Io<'_>) -> i32 {
    let tokens = if a.stdin {
        match read_lines(io) {
            Ok(t) => t,
            Err(code) => return code,
        }
    } else if let Some(oc) = &a.oc {
        vec![oc.clone()]
    } else {
        return usage(io, "expected an oc-sequence or --stdin");
    };
    let batch = a.stdin;
    each_token(tokens, io, |t, io| {
        let oc: OcSequence = t.parse()?;
        let (w, borders) = reconstruct_with_borders(&oc, !a.no_validate)?;
        let w = if a.mirror { w.swap_ab() } else { w };
        let mut fields = vec![w.to_string()];
        if a.border {
            fields.push(borders.to_string());
        }
        let sep = if batch { "\t" } else { "\n" };
        let _ = writeln!(io.out, "{}", fields.join(sep));
        Ok(())
    })
}

fn cmd_generate(a: &GenerateArgs, io: &mut Io<'_>) -> i32 {
    let result = (|| -> Result<(), Error> {
        let d: DirectiveSequence = a.directive.parse()?;
        if let Some(len) = a.length {
            let w = standard_prefix(&d, len)?;
            let _ = writeln!(io.out, "{w}");
            if a.oc {
                let _ = writeln!(io.out, "{}", oc_closed_form(&d, len)?);
            }
            if a.boundaries {
                for b in run_boundaries(&d, len)? {
                    let _ = writeln!(io.out, "{}\t{}", b.position, b.kind);
                }
            }
        }
        if let Some(m) = a.factorize {
            let f = square_factorization(&d, m)?;
            let text = match a.format {
                Format::Human => f.render_human(),
                Format::Machine => f.render_machine(),
            };
            let _ = writeln!(io.out, "{text}");
        }
        Ok(())
    })();
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => fail(io, &e),
    }
}

fn yes_no(flag: Option<bool>) -> &'static str {
    match flag {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn human_fields(c: &Classification) -> Vec<(&'static str, String)> {
    let word = if c.word.is_empty() {
        "ε".to_string()
    } else {
        c.word.clone()
    };
    vec![
        ("word", word),
        ("balanced", yes_no(c.balanced).into()),
        ("central", yes_no(c.central).into()),
        ("semicentral", yes_no(c.semicentral).into()),
        ("left_special", yes_no(c.left_special).into()),
        ("right_special", yes_no(c.right_special).into()),
        ("strictly_bispecial", yes_no(c.strictly_bispecial).into()),
        ("closed", yes_no(Some(c.closed)).into()),
        ("period", c.period.to_string()),
        (
            "exponent",
            c.exponent.clone().unwrap_or_else(|| "n/a".into()),
        ),
        (
            "oc",
            if c.oc.is_empty() {
                "ε".into()
            } else {
                c.oc.clone()
            },
        ),
    ]
}

fn cmd_analyze(a: &AnalyzeArgs, io: &mut Io<'_>) -> i32 {
    let tokens = match tokens(&a.input, io) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let batch = a.input.stdin;
    each_token(tokens, io, |t, io| {
        let c = classify(&Word::parse(t)?);
        if a.json {
            let _ = writeln!(
                io.out,
                "{}",
                serde_json::to_string(&c).expect("serializable")
            );
        } else if batch {
            let line: Vec<String> = human_fields(&c)
                .into_iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            let _ = writeln!(io.out, "{}", line.join("\t"));
        } else {
            for (k, v) in human_fields(&c) {
                let _ = writeln!(io.out, "{k}: {v}");
            }
        }
        Ok(())
    })
}

fn cmd_selftest(a: &SelftestArgs, io: &mut Io<'_>) -> i32 {
    let results = match run_suites(a.max_n) {
        Ok(r) => r,
        Err(e) => return fail(io, &e),
    };
    let passed = results.iter().filter(|r| r.passed()).count();
    for r in &results {
        let _ = writeln!(io.out, "{r}");
    }
    let _ = writeln!(
        io.out,
        "{passed}/{} suites passed (max-n {})",
        results.len(),
        a.max_n
    );
    if passed == results.len() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn cmd_census(a: &CensusArgs, io: &mut Io<'_>) -> i32 {
    let report = match uniqueness_census(a.max_n) {
        Ok(r) => r,
        Err(e) => return fail(io, &e),
    };
    let text = match a.format {
        CensusFormat::Table => report.render_table(),
        CensusFormat::Records => report.render_records(),
    };
    let _ = write!(io.out, "{text}");
    if report.violations().next().is_some() {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

fn cmd_witness(a: &WitnessArgs, io: &mut Io<'_>) -> i32 {
    match maximality_witness(a.max_n) {
        Ok(r) => {
            let _ = write!(io.out, "{}", r.render_records());
            EXIT_OK
        }
        Err(e) => fail(io, &e),
    }
}
