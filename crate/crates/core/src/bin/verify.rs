use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use odd_e6::coset_enum::{todd_coxeter, EnumerationStatus, DEFAULT_COSET_BUDGET};
use odd_e6::presentation::{build_presentation, DiagramKind, Presentation, Word};
use odd_e6::report::{CheckStatus, SuiteReport};
use odd_e6::suites::{dot_exports, run_suite, Suite, SuiteOptions};

/// Exact checks of the odd presentation of W(E6) and the lattices Z^{n,1}.
#[derive(Parser)]
#[command(name = "verify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice data, reflections and the Γ₀ congruence checks
    Lattice(SuiteArgs),
    /// Wall diagrams, Petersen graph, wall pairs, generator words, vertex orbits
    Diagrams(SuiteArgs),
    /// Relator sets, mod-3 evaluation, braid identity
    Presentation(SuiteArgs),
    /// Todd–Coxeter orders and matrix-group cross-checks
    Enumeration(SuiteArgs),
    /// Gosset tile graphs
    Tessellation(SuiteArgs),
    /// The Petersen configuration in the E6 root system
    E6(SuiteArgs),
    /// Hexaflections over the Eisenstein integers
    Eisenstein(SuiteArgs),
    /// Every suite
    All(SuiteArgs),
    /// Print the relator file of the presentation for dimension n
    Relators {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
        n: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate cosets for a relator file and dump the closed table
    Enumerate {
        #[arg(long)]
        relators: PathBuf,
        /// Subgroup generator word, letters separated by '.'; may repeat
        #[arg(long)]
        subgroup: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_COSET_BUDGET)]
        budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct SuiteArgs {
    /// Restrict to one dimension
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=8))]
    n: Option<u8>,
    /// Largest n for the Γ₀ congruence checks
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(2..=7))]
    max_n: u8,
    /// Coset budget for enumerations
    #[arg(long, default_value_t = DEFAULT_COSET_BUDGET)]
    budget: usize,
    /// JSON report file, or directory for DOT files
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for the random braid-identity vectors
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Lattice(a) => suite(Suite::Lattice, a),
        Command::Diagrams(a) => suite(Suite::Diagrams, a),
        Command::Presentation(a) => suite(Suite::Presentation, a),
        Command::Enumeration(a) => suite(Suite::Enumeration, a),
        Command::Tessellation(a) => suite(Suite::Tessellation, a),
        Command::E6(a) => suite(Suite::E6, a),
        Command::Eisenstein(a) => suite(Suite::Eisenstein, a),
        Command::All(a) => suite(Suite::All, a),
        Command::Relators { n, out } => relators(n as usize, out.as_deref()),
        Command::Enumerate {
            relators,
            subgroup,
            budget,
            out,
        } => enumerate(&relators, &subgroup, budget, out.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => emit(text),
    }
}

/// Writes to stdout; a closed pipe (`verify ... | head`) is not an error.
fn emit(text: &str) -> Result<(), String> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(format!("stdout: {e}")),
        _ => Ok(()),
    }
}

fn suite(suite: Suite, a: SuiteArgs) -> Result<u8, String> {
    let opts = SuiteOptions {
        n: a.n.map(usize::from),
        max_n: a.max_n.into(),
        budget: a.budget,
        seed: a.seed,
    };
    if a.format == Format::Dot {
        let files = dot_exports(suite, &opts).map_err(|e| e.to_string())?;
        if files.is_empty() {
            eprintln!("suite `{suite}` has no graphs to export for these options");
            return Ok(EXIT_USAGE);
        }
        let dir = a.out.unwrap_or_else(|| PathBuf::from("."));
        fs::create_dir_all(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        for (name, text) in files {
            let path = dir.join(name);
            fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            println!("{}", path.display());
        }
        return Ok(0);
    }
    let report = run_suite(suite, &opts);
    match &a.out {
        Some(path) => {
            write_or_print(Some(path), &(report.to_json() + "\n"))?;
            print_summary(&report);
        }
        None => emit(&(report.to_json() + "\n"))?,
    }
    Ok(if report.has_errors() {
        EXIT_INTERNAL
    } else if report.all_passed() {
        0
    } else {
        EXIT_FAIL
    })
}

fn print_summary(report: &SuiteReport) {
    for c in &report.checks {
        let status = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIP",
            CheckStatus::Error => "ERROR",
        };
        let n = c.n.map(|n| format!(" n={n}")).unwrap_or_default();
        println!("{status:5} {}{n} ({} ms)", c.check_id, c.runtime_ms);
    }
}

fn relators(n: usize, out: Option<&Path>) -> Result<u8, String> {
    let kind = DiagramKind::for_dimension(n).map_err(|e| e.to_string())?;
    let p = build_presentation(kind);
    let text = format!("# {} presentation\n{}", kind.name(), p.to_relator_text());
    write_or_print(out, &text)?;
    Ok(0)
}

fn enumerate(
    path: &Path,
    subgroup: &[String],
    budget: usize,
    out: Option<&Path>,
) -> Result<u8, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let p = Presentation::parse_relator_text(&text).map_err(|e| e.to_string())?;
    let words: Vec<Word> = subgroup.iter().map(|w| Word::new(w.split('.'))).collect();
    let table = todd_coxeter(&p, &words, budget).map_err(|e| e.to_string())?;
    write_or_print(out, &table.dump())?;
    Ok(match table.status() {
        EnumerationStatus::Closed => 0,
        _ => EXIT_FAIL,
    })
}
