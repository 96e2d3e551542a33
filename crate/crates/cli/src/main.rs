use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use bsnum::Tables;
use bsnum_cli::config::CONFIG_ENV;
use bsnum_cli::report::Reporter;
use bsnum_cli::{
    grid, polys, suites, OutputFormat, Overrides, PolyFamily, Suite, SweepConfig, TableKind,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact Bernoulli-Stirling tables, polynomials and identity sweeps.
#[derive(Parser)]
#[command(name = "bsnum", version)]
struct Cli {
    /// key=value file overriding the built-in defaults
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle or the tandem table
    Table {
        #[arg(value_enum)]
        kind: KindArg,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Print the exact coefficients of P_k, Q_k, S_k or sigma_k
    Poly {
        #[arg(value_enum)]
        family: FamilyArg,
        k: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Run a verification suite; exits 1 if any claim fails
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long)]
    primes_to: Option<u64>,
    /// truncation level of the p-adic congruences
    #[arg(long, visible_alias = "n")]
    truncation: Option<usize>,
    /// lower end of the tandem window
    #[arg(long, allow_negative_numbers = true)]
    min: Option<i64>,
    /// upper end of the tandem window
    #[arg(long, allow_negative_numbers = true)]
    max: Option<i64>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl SweepArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            max_n: self.max_n,
            max_k: self.max_k,
            primes_to: self.primes_to,
            truncation: self.truncation,
            format: self.format.map(|f| match f {
                FormatArg::Pretty => OutputFormat::Pretty,
                FormatArg::Csv => OutputFormat::Csv,
                FormatArg::Json => OutputFormat::Json,
            }),
            out: self.out.clone(),
            min: self.min,
            max: self.max,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Pretty,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    A,
    B,
    Tandem,
    Ainv,
    Cycle,
    Partition,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "S")]
    S,
    #[value(name = "sigma")]
    Sigma,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Triangles,
    Duality,
    Egf,
    Congruences,
    All,
}

fn resolve_config(path: Option<&PathBuf>, sweep: &SweepArgs) -> anyhow::Result<SweepConfig> {
    let file = path.map(|p| Overrides::from_file(p)).transpose()?;
    SweepConfig::resolve(file.as_ref(), &sweep.overrides())
}

fn open_out(cfg: &SweepConfig) -> anyhow::Result<Box<dyn Write>> {
    Ok(match &cfg.out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Usage and input errors map to exit code 2.
fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let mut tables = Tables::new();
    match cli.command {
        Command::Table { kind, sweep } => {
            let cfg = resolve_config(cli.config.as_ref(), &sweep)?;
            let kind = match kind {
                KindArg::A => TableKind::A,
                KindArg::B => TableKind::B,
                KindArg::Tandem => TableKind::Tandem,
                KindArg::Ainv => TableKind::Ainv,
                KindArg::Cycle => TableKind::Cycle,
                KindArg::Partition => TableKind::Partition,
            };
            let g = grid::build(&mut tables, kind, &cfg)?;
            let mut out = open_out(&cfg)?;
            out.write_all(grid::render(&g, cfg.format).as_bytes())?;
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Poly { family, k, sweep } => {
            let cfg = resolve_config(cli.config.as_ref(), &sweep)?;
            let family = match family {
                FamilyArg::P => PolyFamily::P,
                FamilyArg::Q => PolyFamily::Q,
                FamilyArg::S => PolyFamily::S,
                FamilyArg::Sigma => PolyFamily::Sigma,
            };
            let p = family.compute(&mut tables, k)?;
            let mut out = open_out(&cfg)?;
            out.write_all(polys::render(family, k, &p, cfg.format).as_bytes())?;
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, sweep } => {
            let cfg = resolve_config(cli.config.as_ref(), &sweep)?;
            let selected = match suite {
                SuiteArg::Identities => vec![Suite::Identities],
                SuiteArg::Triangles => vec![Suite::Triangles],
                SuiteArg::Duality => vec![Suite::Duality],
                SuiteArg::Egf => vec![Suite::Egf],
                SuiteArg::Congruences => vec![Suite::Congruences],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let mut reporter = Reporter::new(cfg.format, open_out(&cfg)?)?;
            let mut io_err = None;
            for s in selected {
                suites::run(&mut tables, s, &cfg, &mut |c| {
                    if io_err.is_none() {
                        io_err = reporter.record(c).err();
                    }
                });
            }
            if let Some(e) = io_err {
                return Err(e.into());
            }
            let summary = reporter.finish()?;
            if summary.all_pass() {
                return Ok(ExitCode::SUCCESS);
            }
            let mut err = io::stderr().lock();
            writeln!(err, "{} failing claims:", summary.failures.len())?;
            for c in &summary.failures {
                writeln!(err, "  {} {} {}", c.suite, c.id, c.params_string())?;
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
