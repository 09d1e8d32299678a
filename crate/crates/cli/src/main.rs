use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use motivic::realize::{self, CountingData, RealizationTarget};
use motivic::verify::{self, RunConfig, CATALOG};
use motivic::Error;

/// Exact checks of motivic class identities for curves and moduli of bundles.
#[derive(Parser)]
#[command(name = "motivic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity checks and report a verdict for each.
    Verify(VerifyArgs),
    /// Print the check identifiers with the identity each one verifies.
    ListChecks,
    /// Realize a named class as a Poincaré polynomial, E-polynomial or point count.
    Realize(RealizeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Genera as a list or range, e.g. `2,3` or `2..5`.
    #[arg(long, default_value = "2")]
    genus: String,
    /// Comma-separated check ids; all checks when omitted.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// 𝕃-adic window `e_min,e_max`.
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    /// Dimensional window `e_min,e_max`.
    #[arg(long, allow_hyphen_values = true)]
    dim_window: Option<String>,
    /// Also write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Drop wall times from the JSON report.
    #[arg(long)]
    no_timing: bool,
    #[arg(long, env = "MOTIVIC_WORKERS")]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Poincare,
    Hodge,
    Count,
}

#[derive(clap::Args)]
struct RealizeArgs {
    #[arg(long, value_enum)]
    target: Target,
    /// `jac`, `m2`, `m3` or `ck:<k>`.
    #[arg(long)]
    class: String,
    /// Defaults to the number of counts when `--counts` is given, else 2.
    #[arg(long)]
    genus: Option<u32>,
    /// JSON file `{"q": .., "counts": [N_1, .., N_g]}`.
    #[arg(long)]
    counts: Option<PathBuf>,
}

fn parse_genera(s: &str) -> anyhow::Result<Vec<u32>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u32 = a.parse().with_context(|| format!("bad genus range {part:?}"))?;
            let b: u32 = b.trim_start_matches('=').parse().with_context(|| format!("bad genus range {part:?}"))?;
            if a > b {
                bail!("empty genus range {part:?}");
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().with_context(|| format!("bad genus {part:?}"))?);
        }
    }
    Ok(out)
}

fn parse_window(s: &str) -> anyhow::Result<(i64, i64)> {
    let (a, b) = s.split_once(',').with_context(|| format!("window {s:?} is not e_min,e_max"))?;
    let w = (a.trim().parse()?, b.trim().parse()?);
    if w.0 > w.1 {
        bail!("window {s:?} is empty");
    }
    Ok(w)
}

fn usage(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn verify_cmd(args: VerifyArgs) -> ExitCode {
    let config = match (|| -> anyhow::Result<RunConfig> {
        Ok(RunConfig {
            genera: parse_genera(&args.genus)?,
            checks: args.checks.clone(),
            adic_window: args.window.as_deref().map(parse_window).transpose()?,
            dim_window: args.dim_window.as_deref().map(parse_window).transpose()?,
            workers: args.workers,
        })
    })() {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let report = match verify::run(&config) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let json = report.to_json(!args.no_timing);
    let text = serde_json::to_string_pretty(&json).expect("json");
    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }
    match args.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn realize_cmd(args: RealizeArgs) -> anyhow::Result<()> {
    let data = match &args.counts {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Some(CountingData::from_json(&text)?)
        }
        None => None,
    };
    let g = args.genus.or(data.as_ref().map(CountingData::genus)).unwrap_or(2);
    let target = match (args.target, data) {
        (Target::Poincare, _) => RealizationTarget::Poincare,
        (Target::Hodge, _) => RealizationTarget::Hodge,
        (Target::Count, Some(d)) => RealizationTarget::Count(d),
        (Target::Count, None) => bail!("--target count needs --counts"),
    };
    let class = realize::named_class(g, &args.class)?;
    let value = realize::realize_poly(&class, g, &target)?;
    println!("{value}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => verify_cmd(args),
        Command::ListChecks => {
            for c in CATALOG {
                println!("{:<28} {}", c.id, c.anchor);
            }
            ExitCode::SUCCESS
        }
        Command::Realize(args) => match realize_cmd(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => match e.downcast_ref::<Error>() {
                Some(Error::Config(_)) | Some(Error::InvalidGenus(_)) | None => usage(e),
                Some(_) => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
            },
        },
    }
}
