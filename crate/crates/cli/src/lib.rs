//! The `cdyck` command line: counting tables, listings, bijections,
//! verification suites, rendering and b-file cross-checks.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 a verification or
//! cross-check failed.

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use coloured_dyck::structures::OracleLimits;
use coloured_dyck::{ColourSystem, Error};

pub mod bfile;
mod count;
mod list;
mod map;
mod oeis;
mod render;
mod table;
mod verify;

pub use bfile::BFile;

#[derive(Parser, Debug)]
#[command(name = "cdyck", version, about = "Dyck paths with coloured ascents")]
pub struct Cli {
    /// Output format; `render` takes ascii or svg, the rest text, csv or json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Largest size to run: the range of `verify` and `oeis-check`.
    #[arg(long, global = true)]
    pub n_max: Option<usize>,

    /// Lift the size guardrails on the brute-force oracles.
    #[arg(long, global = true)]
    pub unlimited: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Ascii,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Brute force, series and closed form side by side.
    Count {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Every path of a family, or every coloured path of a system.
    List {
        /// Semilength.
        n: usize,
        /// dyck, bounded-ascent, fibonacci, fibonacci-free, schroeder,
        /// little-schroeder or t-path.
        #[arg(long, conflicts_with = "system")]
        family: Option<String>,
        #[command(flatten)]
        system: OptionalSystemArgs,
    },
    /// Apply one bijection (or its `-inv`) to an input.
    Map {
        /// theta, phi, psi, rho, sigma, fib-ls or schroeder-t, optionally
        /// suffixed with -inv.
        name: String,
        input: String,
        /// Bound for rho and sigma.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Roundtrip, surjectivity and size-law suites up to `--n-max`.
    Verify {
        /// A bijection name or `all`.
        name: String,
        /// Only this bound for rho and sigma (default 1, 2 and 3).
        #[arg(long)]
        m: Option<usize>,
    },
    /// Draw a path, coloured path, tree, partition or dissection.
    Render { input: String },
    /// Compare computed terms with a local OEIS b-file.
    OeisCheck {
        /// catalan-coloured, little-schroeder, schroeder-coloured, or any
        /// colour system such as bounded-ascent:2.
        tag: String,
        bfile: std::path::PathBuf,
    },
}

#[derive(clap::Args, Debug)]
pub struct SystemArgs {
    /// catalan, bounded-ascent, fibonacci, fibonacci-free, schroeder,
    /// trivial or custom.
    #[arg(long)]
    pub system: String,
    /// Bound for bounded-ascent and fibonacci.
    #[arg(long)]
    pub m: Option<usize>,
    /// Comma-separated a_0,a_1,… for custom.
    #[arg(long)]
    pub weights: Option<String>,
}

#[derive(clap::Args, Debug)]
pub struct OptionalSystemArgs {
    #[arg(long)]
    pub system: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub weights: Option<String>,
}

/// A failure that maps to exit code 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Lib(e) => e.kind(),
            CliError::Io(_) => "Io",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Whether the checks a command ran all held.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn and(self, other: Outcome) -> Outcome {
        Outcome::from_bool(self == Outcome::Pass && other == Outcome::Pass)
    }
}

/// Settings shared by every subcommand.
pub struct Context {
    pub format: Option<Format>,
    pub n_max: Option<usize>,
    pub limits: OracleLimits,
    pub unlimited: bool,
}

impl Context {
    /// The table format, rejecting the drawing formats.
    fn table_format(&self) -> CliResult<Format> {
        match self.format {
            None => Ok(Format::Text),
            Some(f @ (Format::Text | Format::Csv | Format::Json)) => Ok(f),
            Some(f) => Err(CliError::Usage(format!(
                "--format {f:?} only applies to render"
            ))),
        }
    }
}

pub(crate) fn build_system(
    name: &str,
    m: Option<usize>,
    weights: Option<&str>,
) -> CliResult<ColourSystem> {
    let needs_m =
        |m: Option<usize>| m.ok_or_else(|| CliError::Usage(format!("--system {name} needs --m")));
    let system = match name {
        "bounded-ascent" => ColourSystem::parse(&format!("bounded-ascent:{}", needs_m(m)?))?,
        "fibonacci" => ColourSystem::parse(&format!("fibonacci:{}", needs_m(m)?))?,
        "custom" => {
            let w =
                weights.ok_or_else(|| CliError::Usage("--system custom needs --weights".into()))?;
            ColourSystem::Custom(coloured_dyck::colours::parse_weights(w)?)
        }
        other => ColourSystem::parse(other)?,
    };
    Ok(system)
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let ctx = Context {
        format: cli.format,
        n_max: cli.n_max,
        limits: if cli.unlimited {
            OracleLimits::unlimited()
        } else {
            OracleLimits::default()
        },
        unlimited: cli.unlimited,
    };
    match dispatch(&cli.command, &ctx, out) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.kind());
            1
        }
    }
}

fn dispatch(command: &Command, ctx: &Context, out: &mut dyn Write) -> CliResult<Outcome> {
    match command {
        Command::Count { system, from, to } => {
            let s = build_system(&system.system, system.m, system.weights.as_deref())?;
            count::run(&s, *from, *to, ctx, out)
        }
        Command::List { n, family, system } => list::run(*n, family.as_deref(), system, ctx, out),
        Command::Map { name, input, m } => map::run(name, input, *m, out),
        Command::Verify { name, m } => verify::run(name, *m, ctx, out),
        Command::Render { input } => render::run(input, ctx, out),
        Command::OeisCheck { tag, bfile } => oeis::run(tag, bfile, ctx, out),
    }
}
