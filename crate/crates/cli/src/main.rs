//! `bicons`: runs the verification suites and writes their certificates.

mod suites;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bicons_engine::certificate::Status;
use bicons_engine::rotational::{integrate_profile, to_csv, verify_rotational, ProfilePoint};
use bicons_engine::theorems::{ChainOptions, TAIL_BUDGET};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use suites::{plan, run_job, Artifact, OdeParams, Target};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "bicons",
    version,
    about = "Exact verification of biconservative hypersurface eliminations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write one certificate per artifact.
    Verify(VerifyArgs),
    /// Integrate a rotational profile and print the sampled curvatures.
    Profile(ProfileArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Identities,
    Lemma22,
    Theorem1,
    Theorem2,
    Rotational,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Args)]
struct OdeArgs {
    /// Initial profile value h1(0).
    #[arg(long, default_value_t = 0.6, allow_negative_numbers = true)]
    h1: f64,
    /// Initial derivative h1'(0).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    dh1: f64,
    #[arg(long, default_value_t = 1e-4)]
    step: f64,
    /// Arc length to integrate over.
    #[arg(long, default_value_t = 1.0)]
    length: f64,
    /// Pointwise tolerance for the curvature checks.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

impl OdeArgs {
    fn params(&self) -> OdeParams {
        OdeParams {
            h1: self.h1,
            dh1: self.dh1,
            step: self.step,
            length: self.length,
            tol: self.tol,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    target: TargetArg,
    /// Restrict theorem suites to one dimension.
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..=4))]
    n: Option<u32>,
    /// Directory receiving the certificates.
    #[arg(long, default_value = "certificates")]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Number of suites run concurrently.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    /// Per-step term budget for elimination chains.
    #[arg(long, default_value_t = TAIL_BUDGET)]
    budget: usize,
    #[command(flatten)]
    ode: OdeArgs,
}

#[derive(Args)]
struct ProfileArgs {
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[command(flatten)]
    ode: OdeArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Verify(args) => verify(args),
        Command::Profile(args) => profile(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("bicons: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let target = match args.target {
        TargetArg::Identities => Target::Identities,
        TargetArg::Lemma22 => Target::Lemma22,
        TargetArg::Theorem1 => Target::Theorem1,
        TargetArg::Theorem2 => Target::Theorem2,
        TargetArg::Rotational => Target::Rotational,
        TargetArg::All => Target::All,
    };
    if args.format == Format::Csv && target != Target::Rotational {
        return Err("--format csv is only available for --target rotational".into());
    }
    let jobs = plan(target, args.n, args.ode.params()).ok_or_else(|| {
        format!(
            "--n {} selects no suites for this target",
            args.n.unwrap_or(0)
        )
    })?;
    let opts = ChainOptions {
        term_budget: args.budget,
        ..ChainOptions::default()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs as usize)
        .build()
        .map_err(|e| e.to_string())?;
    fs::create_dir_all(&args.out).map_err(|e| format!("{}: {e}", args.out.display()))?;

    // `collect` keeps plan order, so output does not depend on scheduling.
    let artifacts: Vec<Artifact> =
        pool.install(|| jobs.par_iter().map(|j| run_job(*j, opts)).collect());

    let mut worst = Status::Verified;
    for a in &artifacts {
        write_artifact(&args.out, a, args.format, args.ode.params()).map_err(|e| e.to_string())?;
        println!("{:<32} {:<18} {}", a.name, a.status.as_str(), a.headline);
        worst = worst.worst(a.status);
    }
    let failing: Vec<&str> = artifacts
        .iter()
        .filter(|a| !a.status.is_ok())
        .map(|a| a.name.as_str())
        .collect();
    if !failing.is_empty() {
        eprintln!("failing: {}", failing.join(" "));
    }
    Ok(match worst {
        Status::Mismatch => ExitCode::from(EXIT_MISMATCH),
        Status::Inconclusive => ExitCode::from(EXIT_INCONCLUSIVE),
        _ => ExitCode::SUCCESS,
    })
}

fn write_artifact(dir: &Path, a: &Artifact, format: Format, ode: OdeParams) -> io::Result<()> {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&a.value)?;
            text.push('\n');
            write_atomic(&dir.join(format!("{}.json", a.name)), text.as_bytes())
        }
        Format::Text => {
            let text = format!(
                "{}\nstatus: {}\n{}\n",
                a.name,
                a.status.as_str(),
                a.headline
            );
            write_atomic(&dir.join(format!("{}.txt", a.name)), text.as_bytes())
        }
        Format::Csv => {
            let p0 = ProfilePoint::new(0.0, ode.h1, ode.dh1);
            let csv = integrate_profile(p0, ode.step, ode.length)
                .and_then(|run| to_csv(&run))
                .map_err(io::Error::other)?;
            write_atomic(&dir.join(format!("{}.csv", a.name)), csv.as_bytes())
        }
    }
}

/// Writes to a sibling temporary file and renames it into place.
fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

fn profile(args: ProfileArgs) -> Result<ExitCode, String> {
    let p = args.ode.params();
    let p0 = ProfilePoint::new(0.0, p.h1, p.dh1);
    let run = integrate_profile(p0, p.step, p.length).map_err(|e| e.to_string())?;
    let report = verify_rotational(&run, p.tol).map_err(|e| e.to_string())?;
    let body = match args.format {
        Format::Csv => to_csv(&run).map_err(|e| e.to_string())?,
        Format::Json => {
            let v = serde_json::json!({ "run": run, "report": report });
            serde_json::to_string_pretty(&v).map_err(|e| e.to_string())? + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let mark = if c.passed { "ok" } else { "FAILED" };
                s.push_str(&format!(
                    "{:<16} {:.3e} (bound {:.1e}) {mark}\n",
                    c.name, c.value, c.bound
                ));
            }
            if let Some(exit) = &run.exit {
                s.push_str(&format!(
                    "left the domain at s = {} ({:?})\n",
                    exit.s, exit.reason
                ));
            }
            s
        }
    };
    match &args.out {
        Some(path) => {
            write_atomic(path, body.as_bytes()).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| e.to_string())?,
    }
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}
