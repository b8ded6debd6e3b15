use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::time::Duration;
use tricad_cli::bench::run_bench;
use tricad_cli::exit;
use tricad_cli::run::{run_decompose, write_artifacts, Mode};
use tricad_cli::spec::load_system;
use tricad_cli::verify::{check_cell_file, verify, VerifyOptions};

#[derive(Parser)]
#[command(name = "tricad", version, about = "Cylindrical algebraic decomposition via regular chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose one system and write tree.json, cells.json and report.json.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "real")]
        mode: Mode,
        #[arg(long)]
        output: PathBuf,
        /// Seconds; 0 disables the limit.
        #[arg(long, default_value_t = 0)]
        timeout: u64,
    },
    /// Run every `.sys` file of a corpus and tabulate timings and cell counts.
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = 600)]
        timeout: u64,
        /// Text tables, or JSON when the name ends in `.json`.
        #[arg(long)]
        report: PathBuf,
    },
    /// Decompose one system and check it at sampled points.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Interior samples per full-dimensional cell.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Random points for the partition checks.
        #[arg(long, default_value_t = 1000)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// A cells.json whose recorded signs are checked too.
        #[arg(long)]
        cells: Option<PathBuf>,
    },
}

fn main() {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit::ERROR
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Decompose { input, mode, output, timeout } => {
            let spec = load_system(&input)?;
            let limit = (timeout > 0).then(|| Duration::from_secs(timeout));
            let mut out = run_decompose(&spec, mode, limit);
            write_artifacts(&output, &spec, &mut out)?;
            let r = &out.report;
            println!("{}", serde_json::to_string_pretty(r)?);
            if r.aborted {
                eprintln!("{}: timed out after {timeout} s", spec.name);
                return Ok(exit::TIMEOUT);
            }
            if let Some(e) = &r.error {
                anyhow::bail!("{}: {e}", spec.name);
            }
            Ok(exit::OK)
        }
        Command::Bench { corpus, timeout, report } => {
            let exe = std::env::current_exe()?;
            let bench = run_bench(&exe, &corpus, timeout)?;
            bench.write(&report)?;
            print!("{}", bench.to_text());
            Ok(if bench.strict_failures().is_empty() { exit::OK } else { exit::VERIFY_FAILED })
        }
        Command::Verify { input, samples, points, seed, cells } => {
            let spec = load_system(&input)?;
            let mut out = run_decompose(&spec, Mode::Real, None);
            if let Some(e) = &out.report.error {
                anyhow::bail!("{}: {e}", spec.name);
            }
            let (Some(tree), Some(cad)) = (&out.tree, &mut out.cad) else {
                anyhow::bail!("{}: decomposition did not finish", spec.name);
            };
            let mut report = verify(&spec, tree, cad, &VerifyOptions { samples, points, seed });
            if let Some(path) = cells {
                let text = std::fs::read_to_string(&path)?;
                report.checks.push(check_cell_file(&spec, cad, &serde_json::from_str(&text)?));
            }
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.passed() { exit::OK } else { exit::VERIFY_FAILED })
        }
    }
}
