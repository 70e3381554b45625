//! Command-line front end for the `cobweb` library.
//!
//! [`run_cli`] does all the work and returns the exit status together with
//! the rendered output, so the binary is a thin wrapper and the commands can
//! be tested in-process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cobweb::verify::{verify, VerifyConfig};
use cobweb::{Error, Exact, FSequence, FinitePoset, ReducedFunction, StandardFunction, Vertex};
use serde_json::json;

/// Largest `--n` accepted without `--no-cap`.
pub const DEFAULT_MAX_N: usize = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cobweb",
    version,
    about = "Incidence algebras of cobweb posets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the reduced table of a standard function.
    Table {
        #[command(flatten)]
        common: Common,
        /// delta, zeta, zeta2, eta, eta_pow, C, chi, chi_pow, M, mobius
        #[arg(long = "fn", value_name = "NAME")]
        function: String,
        #[arg(long)]
        power: Option<u32>,
    },
    /// Cross-check every closed form against brute-force enumeration.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
        /// Random functions per randomized check.
        #[arg(long, default_value_t = VerifyConfig::default().random_trials)]
        trials: usize,
    },
    /// Count chains between two ranks.
    Chains {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Also count by depth-first enumeration and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Print the Möbius function table.
    Mobius {
        #[command(flatten)]
        common: Common,
    },
    /// Write the Hasse diagram in Graphviz DOT.
    ExportDot {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// fibonacci | naturals | constant:<int> | custom:<int>(,<int>)*
    #[arg(long, default_value = "fibonacci")]
    pub seq: String,
    /// Highest level of the poset.
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Allow --n above the default cap.
    #[arg(long)]
    pub no_cap: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Dot,
    Plain,
}

/// Exit status and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            };
        }
    };
    let common = match &cli.command {
        Command::Table { common, .. }
        | Command::Verify { common, .. }
        | Command::Chains { common, .. }
        | Command::Mobius { common }
        | Command::ExportDot { common } => common,
    };
    let mut outcome = match execute(&cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    };
    if let (Some(path), true) = (&common.out, outcome.code != EXIT_USAGE) {
        if let Err(e) = std::fs::write(path, &outcome.stdout) {
            return Outcome {
                code: EXIT_FAILURE,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
        outcome.stdout.clear();
    }
    outcome
}

fn sequence(common: &Common) -> Result<FSequence, Error> {
    if common.n > DEFAULT_MAX_N && !common.no_cap {
        return Err(Error::InvalidSequence(format!(
            "--n {} exceeds the default cap of {DEFAULT_MAX_N}; pass --no-cap to override",
            common.n
        )));
    }
    FSequence::parse(&common.seq, common.n)
}

fn format_or(common: &Common, default: Format, allowed: &[Format]) -> Result<Format, Error> {
    let format = common.format.unwrap_or(default);
    if allowed.contains(&format) {
        Ok(format)
    } else {
        Err(Error::Parse(
            format!("format {format:?} is not available for this command").to_lowercase(),
        ))
    }
}

fn execute(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Table {
            common,
            function,
            power,
        } => {
            let name = StandardFunction::from_name(function, *power)?;
            table(common, name)
        }
        Command::Mobius { common } => table(common, StandardFunction::Mobius),
        Command::Verify {
            common,
            seed,
            trials,
        } => {
            format_or(common, Format::Plain, &[Format::Plain])?;
            let seq = sequence(common)?;
            let config = VerifyConfig {
                seed: *seed,
                random_trials: *trials,
                ..VerifyConfig::default()
            };
            let report = verify(&seq, common.n, &config)?;
            let mut out = format!("verify {} n={}\n", common.seq, common.n);
            out.push_str(&report.render());
            let passed = report.checks.iter().filter(|c| c.passed()).count();
            let _ = writeln!(out, "{passed}/{} checks passed", report.checks.len());
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            };
            Ok(Outcome {
                code,
                stdout: out,
                stderr: String::new(),
            })
        }
        Command::Chains {
            common,
            from,
            to,
            oracle,
        } => chains(common, *from, *to, *oracle),
        Command::ExportDot { common } => {
            format_or(common, Format::Dot, &[Format::Dot])?;
            let seq = sequence(common)?;
            let poset = FinitePoset::build(&seq, common.n)?;
            Ok(Outcome::ok(poset.to_dot()))
        }
    }
}

fn table(common: &Common, name: StandardFunction) -> Result<Outcome, Error> {
    let format = format_or(
        common,
        Format::Plain,
        &[Format::Plain, Format::Csv, Format::Json],
    )?;
    let seq = sequence(common)?;
    let f = ReducedFunction::standard(name, &seq, common.n)?;
    let text = match format {
        Format::Csv => f.to_csv(),
        Format::Json => f.to_json(),
        _ => format!("{name} on {} n={}\n{}", common.seq, common.n, f.to_plain()),
    };
    Ok(Outcome::ok(text))
}

struct ChainCounts {
    all: Exact,
    by_length: Vec<(usize, Exact)>,
    maximal: Exact,
}

fn chains(common: &Common, from: usize, to: usize, oracle: bool) -> Result<Outcome, Error> {
    let format = format_or(common, Format::Plain, &[Format::Plain, Format::Json])?;
    let seq = sequence(common)?;
    if from > to || to > common.n || from < seq.min_rank() {
        return Err(Error::Parse(format!(
            "need {} <= --from <= --to <= {}, got {from} and {to}",
            seq.min_rank(),
            common.n
        )));
    }
    let n = common.n;
    let c_inv = ReducedFunction::standard(StandardFunction::C, &seq, n)?.invert()?;
    let m_inv = ReducedFunction::standard(StandardFunction::M, &seq, n)?.invert()?;
    let algebra = ChainCounts {
        all: c_inv.get(from, to),
        by_length: (1..=to - from)
            .map(|s| {
                let eta_s = ReducedFunction::standard(StandardFunction::EtaPow(s as u32), &seq, n)?;
                Ok((s, eta_s.get(from, to)))
            })
            .collect::<Result<_, Error>>()?,
        maximal: m_inv.get(from, to),
    };

    let enumerated = if oracle {
        let poset = FinitePoset::build(&seq, n)?;
        let (x, y) = (Vertex::new(1, from), Vertex::new(1, to));
        let (all, maximal) = if from == to {
            (Exact::ONE, Exact::ONE)
        } else {
            (
                Exact::from(poset.count_all_chains(&x, &y)?),
                Exact::from(poset.count_all_maximal_chains(&x, &y)?),
            )
        };
        let by_length = (1..=to - from)
            .map(|s| Ok((s, Exact::from(poset.count_chains(&x, &y, s)?))))
            .collect::<Result<_, Error>>()?;
        Some(ChainCounts {
            all,
            by_length,
            maximal,
        })
    } else {
        None
    };
    let agree = enumerated.as_ref().map(|e| {
        e.all == algebra.all && e.maximal == algebra.maximal && e.by_length == algebra.by_length
    });

    let text = match format {
        Format::Json => {
            let render = |c: &ChainCounts| {
                json!({
                    "all": c.all.to_string(),
                    "by_length": c.by_length.iter().map(|(s, v)| json!({"length": s, "count": v.to_string()})).collect::<Vec<_>>(),
                    "maximal": c.maximal.to_string(),
                })
            };
            let mut doc = json!({
                "seq": common.seq,
                "n": n,
                "from": from,
                "to": to,
                "algebra": render(&algebra),
            });
            if let Some(e) = &enumerated {
                doc["oracle"] = render(e);
                doc["agree"] = json!(agree);
            }
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("serializable")
            )
        }
        _ => {
            let mut out = format!("chains {} n={n} from={from} to={to}\n", common.seq);
            let render = |out: &mut String, prefix: &str, c: &ChainCounts| {
                let _ = writeln!(out, "{prefix}all={}", c.all);
                for (s, v) in &c.by_length {
                    let _ = writeln!(out, "{prefix}length[{s}]={v}");
                }
                let _ = writeln!(out, "{prefix}maximal={}", c.maximal);
            };
            render(&mut out, "", &algebra);
            if let Some(e) = &enumerated {
                render(&mut out, "oracle ", e);
                let verdict = if agree == Some(true) {
                    "agree"
                } else {
                    "DISAGREE"
                };
                let _ = writeln!(out, "oracle {verdict}");
            }
            out
        }
    };
    Ok(Outcome {
        code: if agree == Some(false) {
            EXIT_FAILURE
        } else {
            EXIT_OK
        },
        stdout: text,
        stderr: if agree == Some(false) {
            "error: enumeration disagrees with the algebra\n".into()
        } else {
            String::new()
        },
    })
}
