//! Command-line front end.
//!
//! Exit codes: 0 on success (for `verify`, every identity has an exact
//! reading), 1 on a verification failure, 2 on usage or I/O errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::basis::{genocchi_change_matrix, to_basis, BasisKind};
use crate::identities::{verify_suite, ReportDocument, Suite};
use crate::integrals::{i_moment, j_moment, t_recurrence};
use crate::polynomial::Polynomial;
use crate::render::{self, Format, Grid};
use crate::sequences::{poly, SequenceCache, Family};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "genocchi", version, about = "Exact Genocchi, Bernoulli and Euler computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, short, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true, alias = "report")]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MomentKind {
    /// ∫_0^1 G_m(x) x^n dx, m >= 1
    #[value(name = "T", alias = "t")]
    T,
    /// ∫_0^1 B_m(x) x^n dx
    #[value(name = "I", alias = "i")]
    I,
    /// ∫_0^1 E_m(x) x^n dx
    #[value(name = "J", alias = "j")]
    J,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of numbers with indices 0..=max.
    Numbers {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 20)]
        max: usize,
    },
    /// Table of polynomials with indices 0..=max.
    Poly {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Expand a polynomial, given as ascending coefficients, in a basis.
    Expand {
        /// Comma-separated ascending coefficients, e.g. "-1,2" for 2x - 1.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum)]
        basis: BasisKind,
    },
    /// Upper-triangular matrix whose columns are G_1(x), ..., G_{n+1}(x).
    Matrix {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Grid of moment integrals over [0, 1].
    Integrals {
        #[arg(long, value_enum)]
        kind: MomentKind,
        #[arg(long = "m-max", default_value_t = 5)]
        m_max: usize,
        #[arg(long = "n-max", default_value_t = 5)]
        n_max: usize,
    },
    /// Verify the identity registry and write a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long = "max-n", default_value_t = 20)]
        max_n: usize,
    },
}

struct Outcome {
    text: String,
    code: i32,
    note: Option<String>,
}

fn execute(command: &Command, format: Format) -> Result<Outcome, String> {
    let ok = |text: String| Ok(Outcome { text, code: EXIT_OK, note: None });
    match command {
        Command::Numbers { family, max } => {
            let values = SequenceCache::global().numbers(*family, *max);
            ok(render::numbers(*family, &values, format))
        }
        Command::Poly { family, max } => {
            let polys: Vec<Polynomial> = (0..=*max).map(|n| poly(*family, n)).collect();
            ok(render::polynomials(*family, &polys, format))
        }
        Command::Expand { poly, basis } => {
            let p: Polynomial = poly.parse().map_err(|e| format!("{e}"))?;
            ok(render::expansion(&to_basis(*basis, &p), format))
        }
        Command::Matrix { n } => ok(render::matrix(&genocchi_change_matrix(*n), format)),
        Command::Integrals { kind, m_max, n_max } => {
            let ns: Vec<usize> = (0..=*n_max).collect();
            let (name, ms): (&str, Vec<usize>) = match kind {
                MomentKind::T => ("T", (1..=*m_max).collect()),
                MomentKind::I => ("I", (0..=*m_max).collect()),
                MomentKind::J => ("J", (0..=*m_max).collect()),
            };
            let values = ms
                .iter()
                .map(|&m| {
                    ns.iter()
                        .map(|&n| match kind {
                            MomentKind::T => t_recurrence(m, n).expect("m >= 1"),
                            MomentKind::I => i_moment(m, n),
                            MomentKind::J => j_moment(m, n),
                        })
                        .collect()
                })
                .collect();
            ok(render::grid(&Grid { kind: name, ms, ns, values }, format))
        }
        Command::Verify { suite, max_n } => {
            let reports = verify_suite(*suite, *max_n);
            let doc = ReportDocument::new(*suite, *max_n, &reports);
            let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
            text.push('\n');
            let failing: Vec<&str> =
                doc.summary.iter().filter(|s| !s.holds()).map(|s| s.identity.as_str()).collect();
            let note = if failing.is_empty() {
                format!("{} identities checked, all have an exact reading", doc.summary.len())
            } else {
                format!(
                    "{} identities checked, no exact reading for: {}",
                    doc.summary.len(),
                    failing.join(", ")
                )
            };
            let code = if doc.all_hold() { EXIT_OK } else { EXIT_MISMATCH };
            Ok(Outcome { text, code, note: Some(note) })
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let outcome = match execute(&cli.command, cli.format) {
        Ok(o) => o,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &outcome.text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: cannot write output: {msg}");
        return EXIT_USAGE;
    }
    if let Some(note) = outcome.note {
        let _ = writeln!(stderr, "{note}");
    }
    outcome.code
}
