use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coxcarpet::cli::{
    emit_nerve, emit_report, make_family, parse_system, with_labels, ReportFormat, SystemDocument,
};
use coxcarpet::coxeter::{CoxeterMatrix, Exponent};
use coxcarpet::crosscheck::{
    classification_crosscheck, planarity_crosscheck, racg_hyperbolicity_crosscheck, CrossCheckReport,
};
use coxcarpet::decider::{classify_boundary, theorem1_racg, Boundary, Mode};
use coxcarpet::nerve::nerve;

/// Inputs above this rank may take exponential time.
const LARGE_RANK: usize = 20;

#[derive(Parser)]
#[command(name = "coxcarpet", version, about = "Is the boundary of a Coxeter group the Sierpinski carpet?")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Human => ReportFormat::Human,
            Format::Json => ReportFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DocFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Classification,
    Racg,
    Planarity,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the boundary of a system (file or `-` for stdin).
    Check {
        #[arg(default_value = "-")]
        input: String,
        /// Proceed past a failed hyperbolicity check; the verdict is marked conjectural.
        #[arg(long)]
        conjectural: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Classify a right-angled system, hyperbolicity read off empty squares.
    CheckRacg {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        conjectural: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Print the nerve: maximal faces and edge labels.
    Nerve {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Generate a named system: cycle, wheel, simplex, antiprism, bipyramid N, or octahedron.
    Family {
        name: String,
        n: Option<usize>,
        /// Override a label, as `s,t=m` with m an integer or inf. Repeatable.
        #[arg(long = "label", value_parser = parse_label)]
        labels: Vec<(String, String, Exponent)>,
        #[arg(long, value_enum, default_value = "text")]
        format: DocFormat,
    },
    /// Run the exhaustive cross-checks against the independent oracles.
    Oracle {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
}

fn parse_label(s: &str) -> Result<(String, String, Exponent), String> {
    let err = || format!("expected s,t=m, got {s:?}");
    let (pair, m) = s.split_once('=').ok_or_else(err)?;
    let (a, b) = pair.split_once(',').ok_or_else(err)?;
    let m = match m.trim() {
        "inf" => Exponent::Infinite,
        m => Exponent::Finite(m.parse().map_err(|_| err())?),
    };
    Ok((a.trim().to_owned(), b.trim().to_owned(), m))
}

fn read_input(path: &str) -> Result<String, String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    }
    Ok(s)
}

fn load(path: &str) -> Result<CoxeterMatrix, String> {
    let m = parse_system(&read_input(path)?).map_err(|e| format!("{path}: {e}"))?;
    if m.rank() > LARGE_RANK {
        eprintln!("warning: {} generators; the nerve searches are exponential in the rank", m.rank());
    }
    Ok(m)
}

fn verdict_code(b: Boundary) -> u8 {
    if b == Boundary::SierpinskiCarpet {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Check { input, conjectural, format } => {
            let m = load(&input)?;
            let mode = if conjectural { Mode::Conjectural } else { Mode::Theorem2 };
            let v = classify_boundary(&m, mode);
            print!("{}", emit_report(&v, format.into()));
            Ok(verdict_code(v.boundary))
        }
        Command::CheckRacg { input, conjectural, format } => {
            let m = load(&input)?;
            if !m.is_right_angled() {
                return Err(format!("{input}: not right-angled; use `check`"));
            }
            let v = if conjectural {
                classify_boundary(&m, Mode::Conjectural)
            } else {
                let edges: Vec<_> = m.pairs().filter(|&(_, _, e)| e.is_finite()).map(|(i, j, _)| (i, j)).collect();
                theorem1_racg(m.generators(), &edges).map_err(|e| e.to_string())?
            };
            print!("{}", emit_report(&v, format.into()));
            Ok(verdict_code(v.boundary))
        }
        Command::Nerve { input, format } => {
            let m = load(&input)?;
            print!("{}", emit_nerve(&nerve(&m), format.into()));
            Ok(0)
        }
        Command::Family { name, n, labels, format } => {
            let m = make_family(&name, n).and_then(|m| with_labels(&m, &labels)).map_err(|e| e.to_string())?;
            let title = match n {
                Some(n) => format!("{name}({n})"),
                None => name,
            };
            let doc = SystemDocument::from_matrix(&title, &m);
            match format {
                DocFormat::Text => print!("{}", doc.to_text()),
                DocFormat::Json => print!("{}", doc.to_json()),
            }
            Ok(0)
        }
        Command::Oracle { suite, format } => {
            let mut reports: Vec<CrossCheckReport> = Vec::new();
            if matches!(suite, Suite::All | Suite::Classification) {
                reports.push(classification_crosscheck(5));
            }
            if matches!(suite, Suite::All | Suite::Racg) {
                reports.push(racg_hyperbolicity_crosscheck(7));
            }
            if matches!(suite, Suite::All | Suite::Planarity) {
                reports.push(planarity_crosscheck(6));
            }
            match format {
                Format::Json => print!("{}", coxcarpet::cli::report::to_json(&reports)),
                Format::Human => {
                    for r in &reports {
                        let status = if r.passed() { "ok" } else { "FAILED" };
                        println!("{status:<6} {} ({} cases, {} disagreements)", r.name, r.cases, r.disagreements.len());
                        for d in &r.disagreements {
                            println!("       {d}");
                        }
                    }
                }
            }
            Ok(if reports.iter().all(CrossCheckReport::passed) { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
