//! Command-line front end: every computation of the engine with text or
//! machine-readable JSON output.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on argument errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use eiscalc::consterm::N0;
use eiscalc::lformal::TauKind;
use eiscalc::rational::{Basis, Rational, RationalVector};
use eiscalc::report::{
    check_l2_report, constterm_report, constterm_text, exponents_report, gamma_report,
    normalizers_report, poles_report, to_json, verify_report,
};

#[derive(Parser)]
#[command(
    name = "eiscalc",
    about = "Exact bookkeeping for residual-data Siegel Eisenstein series on Sp(2ab)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TauTypeArg {
    Symplectic,
    Orthogonal,
}

impl From<TauTypeArg> for TauKind {
    fn from(t: TauTypeArg) -> TauKind {
        match t {
            TauTypeArg::Symplectic => TauKind::Symplectic,
            TauTypeArg::Orthogonal => TauKind::Orthogonal,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Json,
}

fn parse_n0(s: &str) -> Result<N0, String> {
    if s.eq_ignore_ascii_case("unknown") {
        return Ok(N0::Unknown);
    }
    s.parse::<u32>()
        .map(N0::Known)
        .map_err(|_| format!("expected a nonnegative integer or `unknown`, got `{s}`"))
}

fn parse_vector(s: &str) -> Result<RationalVector, String> {
    let entries: Result<Vec<Rational>, _> = s
        .split(',')
        .map(|part| part.trim().parse::<Rational>())
        .collect();
    entries
        .map(|e| RationalVector::new(e, Basis::F))
        .map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Pole segment X_b, residue points, and pole candidates.
    Poles {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
        #[arg(long = "type", value_enum)]
        tau_type: TauTypeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Closed-form normalizing factors a_b, b_b and (for b >= 2) gamma_b.
    Normalizers {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The spherical normalizing factor gamma_b alone (b >= 2).
    Gamma {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Inductive constant-term expansion as a term tree.
    Constterm {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        a: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
        #[arg(long = "type", value_enum)]
        tau_type: TauTypeArg,
        /// Expansion depth; defaults to the full depth b-1.
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Certain/possible cuspidal exponents of the residue at s_i^(b).
    Exponents {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        a: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
        #[arg(long)]
        i: u32,
        #[arg(long = "type", value_enum)]
        tau_type: TauTypeArg,
        /// Order-of-zero hypothesis at the origin: an integer or `unknown`.
        #[arg(long, value_parser = parse_n0, default_value = "unknown")]
        n0: N0,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Langlands square-integrability test on a relative exponent vector.
    #[command(name = "check-l2")]
    CheckL2 {
        /// Comma-separated rationals, e.g. "-2,-1,0,1" or "-3/2,-1/2".
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        vector: RationalVector,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the full oracle-equivalence and invariant suite.
    Verify {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn run(cli: Cli) -> Result<ExitCode, eiscalc::Error> {
    match cli.command {
        Command::Poles { b, tau_type, format } => {
            let rep = poles_report(b, tau_type.into());
            match format {
                Format::Json => println!("{}", to_json(&rep)),
                Format::Text => {
                    println!("X_{}: {}", rep.b, rep.x_b.join(", "));
                    println!("residue points: {}", rep.residue_points.join(", "));
                    println!("pole candidates: {}", rep.candidates.join(", "));
                }
            }
        }
        Command::Normalizers { b, format } => {
            let rep = normalizers_report(b);
            match format {
                Format::Json => println!("{}", to_json(&rep)),
                Format::Text => {
                    println!("a_{}(s) = {}", rep.b, rep.a_b);
                    println!("b_{}(s) = {}", rep.b, rep.b_b);
                    if let Some(g) = &rep.gamma_b {
                        println!("gamma_{}(s) = {g}", rep.b);
                    }
                }
            }
        }
        Command::Gamma { b, format } => {
            let rep = gamma_report(b)?;
            match format {
                Format::Json => println!("{}", to_json(&rep)),
                Format::Text => println!("gamma_{}(s) = {}", rep.b, rep.gamma_b),
            }
        }
        Command::Constterm { a, b, tau_type, depth, format } => {
            let depth = depth.unwrap_or_else(|| b.saturating_sub(1));
            match format {
                Format::Json => {
                    println!("{}", to_json(&constterm_report(a, b, tau_type.into(), depth)?))
                }
                Format::Text => print!("{}", constterm_text(a, b, tau_type.into(), depth)?),
            }
        }
        Command::Exponents { a, b, i, tau_type, n0, format } => {
            let rep = exponents_report(a, b, i, tau_type.into(), n0)?;
            match format {
                Format::Json => println!("{}", to_json(&rep)),
                Format::Text => {
                    println!(
                        "residue at s_{}^({}) ({}), n0 = {}",
                        rep.i, rep.b, rep.tau_type, rep.n0
                    );
                    println!("rule: {}", rep.rule);
                    if let Some(l) = &rep.laurent {
                        println!(
                            "laurent order: {} (leading terms: {})",
                            l.pole_order,
                            l.leading_terms.join(", ")
                        );
                        if l.n0_one_excluded {
                            println!("note: n0 = 1 is excluded for this configuration");
                        }
                    }
                    for e in &rep.certain {
                        println!(
                            "certain:  ({}) [{}] L2={}",
                            e.relative.join(", "),
                            e.provenance,
                            e.square_integrable
                        );
                    }
                    match &rep.possible {
                        Some(list) => {
                            for e in list {
                                println!(
                                    "possible: ({}) [{}] L2={}",
                                    e.relative.join(", "),
                                    e.provenance,
                                    e.square_integrable
                                );
                            }
                        }
                        None => println!("possible: undetermined"),
                    }
                }
            }
        }
        Command::CheckL2 { vector, format } => {
            let rep = check_l2_report(&vector);
            match format {
                Format::Json => println!("{}", to_json(&rep)),
                Format::Text => {
                    println!("vector: ({})", rep.vector.join(", "));
                    println!("prefix sums: {}", rep.prefix_sums.join(", "));
                    println!("square-integrable: {}", rep.square_integrable);
                }
            }
        }
        Command::Verify { format } => {
            let rep = verify_report();
            match format {
                Format::Json => println!("{}", to_json(&rep)),
                Format::Text => {
                    for c in &rep.checks {
                        let status = if c.pass { "ok  " } else { "FAIL" };
                        println!("{status} {} - {}", c.name, c.detail);
                    }
                    println!("{} passed, {} failed", rep.passed, rep.failed);
                }
            }
            if rep.failed > 0 {
                if let Some(first) = rep.checks.iter().find(|c| !c.pass) {
                    eprintln!("first failure: {}: {}", first.name, first.detail);
                }
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
