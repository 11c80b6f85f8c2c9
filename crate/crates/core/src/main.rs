use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hookbias::hook_gf::{btk_enum, btk_gf, SeriesCache, SeriesName};
use hookbias::injections::{o5_weight_bound, verify_injection, MapId};
use hookbias::report::{self, emit, Format, Report, EXIT_FAIL, EXIT_USAGE};
use hookbias::theorems::{self, Formulas, Identity};

#[derive(Parser)]
#[command(
    name = "hooks",
    version,
    about = "Hook length counts over t-regular partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count cells of hook length k over t-regular partitions of n.
    Count {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CountMethod::Gf)]
        method: CountMethod,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Print the coefficients of a named series.
    Series {
        #[arg(long)]
        name: SeriesName,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Run a check.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
}

#[derive(Subcommand)]
enum Target {
    /// Compare a series decomposition with the difference it expands.
    Identity {
        #[arg(long, value_enum)]
        which: IdentityArg,
        #[arg(long)]
        t: u32,
        /// Check every t from --t up to this value.
        #[arg(long)]
        t_max: Option<u32>,
        #[arg(long, default_value_t = 200)]
        order: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Certify a map exhaustively for each n in range.
    Injection {
        #[arg(long)]
        map: MapId,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n_max: usize,
        /// Defaults to 7 for epsilon, 4 for tau and eta, 0 otherwise.
        #[arg(long)]
        n_min: Option<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Scan a sign statement or cross-check.
    Theorem(TheoremArgs),
}

#[derive(Args)]
struct TheoremArgs {
    #[arg(long, value_enum)]
    which: TheoremKind,
    /// Smallest (or only) t.
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    t_max: Option<u32>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    /// Hook lengths for the oracle cross-check.
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
    k: Vec<u32>,
    /// Assert the t >= 3 bound scan instead of reporting it.
    #[arg(long)]
    full: bool,
    /// Use the corrected b_{t,3} series in the oracle cross-check.
    #[arg(long)]
    exact: bool,
    #[command(flatten)]
    out: Out,
}

#[derive(Args)]
struct Out {
    #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMethod {
    Enum,
    Gf,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Human => Format::Human,
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    Abc,
    Def,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremKind {
    Bias21,
    Bias23,
    D,
    E,
    F,
    Oracle,
    Q,
    Remainder,
}

#[derive(Serialize)]
struct SeriesJson {
    name: String,
    t: u32,
    order: usize,
    coefficients: Vec<String>,
}

fn print<R: Report>(reports: &[R], format: OutputFormat) -> anyhow::Result<i32> {
    match emit(reports, format.into(), io::stdout().lock()) {
        // A closed reader (`| head`) is not a failure of the check itself.
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
        r => r.context("writing report")?,
    }
    Ok(report::exit_code(reports))
}

fn run_theorem(args: &TheoremArgs) -> anyhow::Result<i32> {
    let cache = SeriesCache::new();
    let t_min = args.t.unwrap_or(2);
    let check = match args.which {
        TheoremKind::Bias21 => {
            let default = o5_weight_bound(t_min) as usize + 111;
            let order = args
                .order
                .unwrap_or(if t_min == 2 { default } else { 2000 });
            theorems::run_bias21(t_min, order, args.full, &cache)?
        }
        TheoremKind::Bias23 => {
            let t_max = args.t_max.or(args.t).unwrap_or(10);
            theorems::run_bias23(t_max, args.n_max.unwrap_or(60), &cache)?
        }
        TheoremKind::D | TheoremKind::E | TheoremKind::F => {
            let name = match args.which {
                TheoremKind::D => SeriesName::D,
                TheoremKind::E => SeriesName::E,
                _ => SeriesName::F,
            };
            let t_max = args
                .t_max
                .unwrap_or(if args.t.is_some() { t_min } else { 4 });
            let order = args.order.or(args.n_max).unwrap_or(200);
            theorems::run_sign_check(name, t_min, t_max, order, &cache)?
        }
        TheoremKind::Oracle => {
            let t_max = args
                .t_max
                .unwrap_or(if args.t.is_some() { t_min } else { 6 });
            let formulas = if args.exact {
                Formulas::Exact
            } else {
                Formulas::Published
            };
            let n_max = args.n_max.unwrap_or(40);
            theorems::run_oracle_crosscheck(t_min, t_max, n_max, &args.k, formulas, &cache)?
        }
        TheoremKind::Q => {
            theorems::run_q_concavity(args.n_min.unwrap_or(4), args.n_max.unwrap_or(200))?
        }
        TheoremKind::Remainder => {
            theorems::run_remainder_t2(args.order.or(args.n_max).unwrap_or(200))?
        }
    };
    print(&[check], args.out.format)
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Count {
            t,
            k,
            n,
            method,
            format,
        } => {
            let count = match method {
                CountMethod::Enum => btk_enum(t, k, n)?,
                CountMethod::Gf => btk_gf(t, k, n)?,
            };
            print(&[count], format)
        }
        Command::Series {
            name,
            t,
            order,
            format,
        } => {
            let cache = SeriesCache::new();
            let s = cache.get(name, t, order)?;
            let mut out = io::stdout().lock();
            match format {
                OutputFormat::Json => {
                    let body = SeriesJson {
                        name: name.to_string(),
                        t,
                        order,
                        coefficients: s.coeffs().iter().map(|c| c.to_string()).collect(),
                    };
                    serde_json::to_writer_pretty(&mut out, &body)?;
                    writeln!(out)?;
                }
                _ => s.write_csv(&mut out).context("writing series")?,
            }
            out.flush()?;
            Ok(0)
        }
        Command::Verify { target } => match target {
            Target::Identity {
                which,
                t,
                t_max,
                order,
                out,
            } => {
                let cache = SeriesCache::new();
                let which = match which {
                    IdentityArg::Abc => Identity::Abc,
                    IdentityArg::Def => Identity::Def,
                };
                let check = theorems::run_identity(which, t, t_max.unwrap_or(t), order, &cache)?;
                print(&[check], out.format)
            }
            Target::Injection {
                map,
                t,
                n_max,
                n_min,
                out,
            } => {
                let n_min = n_min.unwrap_or(match map {
                    MapId::Epsilon => 7,
                    MapId::Tau | MapId::Eta => 4,
                    _ => 0,
                });
                let reports = (n_min..=n_max)
                    .map(|n| verify_injection(map, t, n))
                    .collect::<Result<Vec<_>, _>>()?;
                let code = print(&reports, out.format)?;
                if reports.iter().all(|r| r.domain_size == 0) {
                    eprintln!("{map}: every domain in n = {n_min}..={n_max} is empty");
                    return Ok(EXIT_FAIL);
                }
                Ok(code)
            }
            Target::Theorem(args) => run_theorem(&args),
        },
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>()
            .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
            || c.downcast_ref::<serde_json::Error>()
                .is_some_and(|j| j.io_error_kind() == Some(io::ErrorKind::BrokenPipe))
    })
}
