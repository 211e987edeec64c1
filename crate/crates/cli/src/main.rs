use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use regfun::harness::config::RunConfig;
use regfun::harness::report::{render_summary, verdict_table, verdicts_json, Format};
use regfun::harness::{self, SweepKind};

#[derive(Parser)]
#[command(name = "regfun", version, about = "Regularized special functions and claim verification")]
struct Cli {
    /// Flat `key = value` config file; flags override its entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// json, csv or md.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Comma-separated ε values, strictly decreasing.
    #[arg(long = "eps-ladder", global = true)]
    eps_ladder: Option<String>,
    /// Test function: gaussian, cauchy, bump or constant.
    #[arg(long, global = true)]
    probe: Option<String>,
    /// Tolerance applied to every claim.
    #[arg(long, global = true)]
    tol: Option<String>,
    /// Run claims concurrently.
    #[arg(long, global = true)]
    parallel: bool,
    /// Record wall-clock runtimes in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one catalog function, e.g. `eval gamma z=0.5+1i`.
    Eval {
        function: String,
        params: Vec<String>,
    },
    /// Run one claim and print its verdicts.
    Verify { claim: String },
    /// Run every registered claim and print the summary.
    VerifyAll,
    /// Emit one CSV row per ladder point of a claim.
    Sweep {
        /// eps, z or nu.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        claim: String,
        /// Comma-separated ladder; the claim default when omitted.
        #[arg(long)]
        ladder: Option<String>,
    },
    /// List the catalog functions and registered claims.
    List,
}

fn config(cli: &Cli) -> regfun::Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::from_file(p)?,
        None => RunConfig::default(),
    };
    let flags = [
        ("format", cli.format.as_deref()),
        ("eps_ladder", cli.eps_ladder.as_deref()),
        ("probe", cli.probe.as_deref()),
        ("tol", cli.tol.as_deref()),
    ];
    for (k, v) in flags {
        if let Some(v) = v {
            cfg.set(k, v)?;
        }
    }
    if let Some(p) = &cli.out {
        cfg.out = Some(p.clone());
    }
    cfg.parallel |= cli.parallel;
    cfg.timing |= cli.timing;
    Ok(cfg)
}

fn emit(cfg: &RunConfig, text: &str) -> regfun::Result<()> {
    let io = |e: std::io::Error| regfun::Error::Config(format!("cannot write output: {e}"));
    match &cfg.out {
        Some(p) => std::fs::write(p, text).map_err(io),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io),
    }
}

/// `Ok(true)` when no assert claim failed.
fn run(cli: &Cli) -> regfun::Result<bool> {
    let cfg = config(cli)?;
    match &cli.command {
        Command::Eval { function, params } => {
            emit(&cfg, &(harness::eval::eval(function, params)? + "\n"))?;
            Ok(true)
        }
        Command::Verify { claim } => {
            let run = harness::run_claim(claim, &cfg)?;
            let text = match (cfg.format, &run.table) {
                (Format::Json, _) => verdicts_json(&run.verdicts),
                (Format::Csv, Some(t)) => t.to_csv(),
                (Format::Csv, None) => verdict_table(&run.verdicts).to_csv(),
                (Format::Md, table) => {
                    let mut s = format!("# {}\n\n{}\n\n", run.claim.id, run.claim.description);
                    s.push_str(&verdict_table(&run.verdicts).to_markdown());
                    if let Some(t) = table {
                        s.push('\n');
                        s.push_str(&t.to_markdown());
                    }
                    s
                }
            };
            emit(&cfg, &text)?;
            Ok(!run.failed())
        }
        Command::VerifyAll => {
            let summary = harness::run_all(&cfg)?;
            emit(&cfg, &render_summary(&summary, cfg.format))?;
            Ok(summary.success())
        }
        Command::Sweep { kind, claim, ladder } => {
            let kind: SweepKind = kind.parse()?;
            let table = harness::sweep(kind, claim, ladder.as_deref(), &cfg)?;
            emit(&cfg, &table.to_csv())?;
            Ok(true)
        }
        Command::List => {
            let mut s = String::from("functions:\n");
            for name in harness::eval::CATALOG {
                s.push_str(&format!("  {name}\n"));
            }
            s.push_str("claims:\n");
            for c in harness::claims::REGISTRY.iter() {
                s.push_str(&format!("  {:<26} {:?}  {}\n", c.id, c.mode, c.description));
            }
            emit(&cfg, &s)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
