//! `orbitcalc`: tables of nilpotent orbits, unramified classes and wavefront
//! sets for split groups of small rank.

mod cache;
mod commands;
mod render;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use orbitcalc::rootdata::{CartanType, Isogeny, Series};

#[derive(Parser, Debug)]
#[command(name = "orbitcalc", version, about = "Nilpotent orbits, affine Bala-Carter classes and wavefront sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Series letter: A, B, C, D or G.
    #[arg(long = "type", value_name = "LETTER")]
    series: String,
    #[arg(long)]
    rank: usize,
    /// adjoint or simply_connected.
    #[arg(long, default_value = "adjoint")]
    isogeny: String,
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// Table cache; falls back to $ORBITCALC_CACHE.
    #[arg(long, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orbits with weighted Dynkin diagrams, dimensions and closure order.
    Orbits(Common),
    /// Barbasch-Vogan and Lusztig-Spaltenstein duals, Springer characters.
    DualMap(Common),
    /// Affine Bala-Carter classes and their invariants.
    Unramified(Common),
    /// Wavefront set of the spherical Arthur representation of a dual orbit.
    ArthurWf {
        #[command(flatten)]
        common: Common,
        /// Orbit of the dual group, e.g. `2,1` or `G2(a1)`.
        #[arg(long)]
        dual_orbit: String,
    },
    /// Wavefront set of a module given by its restrictions to parahorics.
    LocalWf {
        #[command(flatten)]
        common: Common,
        /// JSON file: [{"J": [..], "irreps": [{"label": .., "mult": ..}]}].
        #[arg(long, conflicts_with = "pattern", required_unless_present = "pattern")]
        data: Option<PathBuf>,
        #[arg(long, value_parser = ["steinberg", "trivial"])]
        pattern: Option<String>,
    },
    /// Run the built-in property checks.
    Selftest,
}

/// Failures, split by exit code.
pub enum Failure {
    Usage(String),
    Compute(String),
}

impl From<orbitcalc::Error> for Failure {
    fn from(e: orbitcalc::Error) -> Failure {
        Failure::Compute(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure::Compute(e.to_string())
    }
}

pub struct Context {
    pub ct: CartanType,
    pub json: bool,
    pub cache: cache::Cache,
}

fn context(c: &Common) -> Result<Context, Failure> {
    let usage = |e: orbitcalc::Error| Failure::Usage(e.to_string());
    let mut letters = c.series.chars();
    let series = match (letters.next(), letters.next()) {
        (Some(l), None) => Series::from_letter(l.to_ascii_uppercase()).map_err(usage)?,
        _ => return Err(Failure::Usage(format!("--type expects one letter, got '{}'", c.series))),
    };
    let isogeny: Isogeny = c.isogeny.parse().map_err(usage)?;
    let ct = CartanType::new(series, c.rank, isogeny).map_err(usage)?;
    let dir = c.cache_dir.clone().or_else(|| std::env::var_os("ORBITCALC_CACHE").map(PathBuf::from));
    Ok(Context { ct, json: c.json, cache: cache::Cache::new(dir) })
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Orbits(c) => commands::orbits(&context(&c)?),
        Command::DualMap(c) => commands::dual_map(&context(&c)?),
        Command::Unramified(c) => commands::unramified(&context(&c)?),
        Command::ArthurWf { common, dual_orbit } => commands::arthur_wf(&context(&common)?, &dual_orbit),
        Command::LocalWf { common, data, pattern } => {
            let ctx = context(&common)?;
            let input = match (data, pattern) {
                (Some(path), _) => commands::WfInput::File(path),
                (None, Some(p)) => commands::WfInput::Pattern(p),
                (None, None) => return Err(Failure::Usage("one of --data, --pattern is required".into())),
            };
            commands::local_wf(&ctx, input)
        }
        Command::Selftest => selftest::run(),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
