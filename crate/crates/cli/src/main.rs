//! `hdb-bench`: validate inputs, compute benchmark diets, run the Monte
//! Carlo scenarios and write the report tables.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hdb_bench::engine::{eligibility_matrix, run_benchmarks, run_simulations};
use hdb_bench::ingest::{load_dataset, Dataset, InputPaths};
use hdb_bench::report::{
    diets_table, draws_table, dropped_rows_table, eligibility_table, metrics_table, report_bundle,
    sha256_hex, simulation_summary_table, skipped_table, InputDigest, RunMetadata, Table,
};
use hdb_bench::simulate::{SimulationConfig, DEFAULT_ITERATIONS};
use hdb_bench::Scenario;

const EXIT_PARTIAL: u8 = 1;
const EXIT_FATAL: u8 = 2;

#[derive(Parser)]
#[command(
    name = "hdb-bench",
    version,
    about = "Benchmark healthy diets per country"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load the inputs and print dropped rows and scenario eligibility.
    Validate {
        #[command(flatten)]
        inputs: Inputs,
        /// Also write eligibility.csv and dropped_rows.csv here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Deterministic diets (scenarios 1-3): diets.csv and metrics.csv.
    Diets {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        out: PathBuf,
        /// Scenarios to compute, e.g. `--scenario 1,2`.
        #[arg(long, value_delimiter = ',', default_values_t = [1u8, 2, 3])]
        scenario: Vec<u8>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Monte Carlo diets (scenario 4 or 5).
    Simulate {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 4)]
        scenario: u8,
        #[command(flatten)]
        sim: SimOpts,
        /// Also write every draw to draws_s<N>.csv.
        #[arg(long)]
        draws: bool,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Every table the supplied inputs allow.
    Report {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        sim: SimOpts,
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Args)]
struct Inputs {
    #[arg(long)]
    items: PathBuf,
    #[arg(long)]
    ppp: PathBuf,
    #[arg(long)]
    fbs: PathBuf,
    #[arg(long)]
    nutrients: Option<PathBuf>,
    #[arg(long)]
    income: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Inputs {
    fn paths(&self) -> InputPaths {
        InputPaths {
            items: self.items.clone(),
            ppp: self.ppp.clone(),
            fbs: self.fbs.clone(),
            nutrients: self.nutrients.clone(),
            income: self.income.clone(),
            config: self.config.clone(),
        }
    }
}

#[derive(Args)]
struct SimOpts {
    #[arg(long, default_value_t = DEFAULT_ITERATIONS)]
    iterations: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct RunOpts {
    /// Worker threads for per-country work; output does not depend on it.
    #[arg(long)]
    threads: Option<usize>,
}

impl RunOpts {
    fn threads(&self) -> usize {
        self.threads
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1)
    }
}

struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FATAL)
        }
    }
}

fn run(command: Command) -> Result<u8, Fatal> {
    match command {
        Command::Validate { inputs, out } => validate(&inputs, out.as_deref()),
        Command::Diets {
            inputs,
            out,
            scenario,
            run,
        } => {
            let scenarios = scenario
                .iter()
                .map(|&id| match Scenario::from_id(id) {
                    Some(s) if !s.is_monte_carlo() => Ok(s),
                    _ => Err(Fatal(format!("diets takes scenarios 1-3, got {id}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            diets(&inputs, &out, &scenarios, run.threads())
        }
        Command::Simulate {
            inputs,
            out,
            scenario,
            sim,
            draws,
            run,
        } => {
            let scenario = Scenario::from_id(scenario)
                .filter(|s| s.is_monte_carlo())
                .ok_or_else(|| Fatal(format!("simulate takes scenario 4 or 5, got {scenario}")))?;
            let config = SimulationConfig::new(sim.iterations, sim.seed, scenario)?;
            simulate(&inputs, &out, &config, draws, run.threads())
        }
        Command::Report {
            inputs,
            out,
            sim,
            run,
        } => report(&inputs, &out, &sim, run.threads()),
    }
}

fn load(inputs: &Inputs) -> Result<(Dataset, Vec<InputDigest>), Fatal> {
    let paths = inputs.paths();
    let dataset = load_dataset(&paths)?;
    let digests = paths
        .all()
        .into_iter()
        .map(|p| {
            let bytes = fs::read(p).map_err(|e| Fatal(format!("{}: {e}", p.display())))?;
            let name = p.file_name().map_or_else(
                || p.display().to_string(),
                |n| n.to_string_lossy().into_owned(),
            );
            Ok(InputDigest {
                name,
                sha256: sha256_hex(&bytes),
            })
        })
        .collect::<Result<_, Fatal>>()?;
    for d in &dataset.report.dropped {
        eprintln!("dropped {}:{} {}: {}", d.file, d.line, d.key, d.reason);
    }
    Ok((dataset, digests))
}

fn write_tables(dir: &Path, tables: &[Table], meta: &RunMetadata) -> Result<(), Fatal> {
    fs::create_dir_all(dir).map_err(|e| Fatal(format!("{}: {e}", dir.display())))?;
    for t in tables {
        t.write(dir, meta)
            .map_err(|e| Fatal(format!("{}: {e}", dir.join(t.file_name()).display())))?;
    }
    Ok(())
}

fn validate(inputs: &Inputs, out: Option<&Path>) -> Result<u8, Fatal> {
    let (dataset, digests) = load(inputs)?;
    let matrix = eligibility_matrix(&dataset);
    println!("country  s1 s2 s3 s4 s5");
    for (code, row) in &matrix {
        let marks: Vec<&str> = row
            .iter()
            .map(|e| if e.is_none() { "ok" } else { "--" })
            .collect();
        println!("{code:<8} {}", marks.join(" "));
    }
    for (code, row) in &matrix {
        for (s, reason) in Scenario::ALL.iter().zip(row) {
            if let Some(reason) = reason {
                println!("{code} ineligible for scenario {s}: {reason}");
            }
        }
    }
    for s in Scenario::ALL {
        let ok = matrix
            .values()
            .filter(|row| row[s.id() as usize - 1].is_none())
            .count();
        println!("scenario {s}: {ok} of {} countries eligible", matrix.len());
    }
    println!("{} rows dropped", dataset.report.dropped.len());
    if let Some(dir) = out {
        let meta = RunMetadata::new("validate", digests, dataset.targets());
        write_tables(
            dir,
            &[
                eligibility_table(&matrix),
                dropped_rows_table(&dataset.report),
            ],
            &meta,
        )?;
    }
    let any_eligible = matrix.values().any(|row| row.iter().any(Option::is_none));
    Ok(if any_eligible { 0 } else { EXIT_PARTIAL })
}

fn skipped_exit(skipped: usize) -> u8 {
    if skipped == 0 {
        0
    } else {
        EXIT_PARTIAL
    }
}

fn diets(inputs: &Inputs, out: &Path, scenarios: &[Scenario], threads: usize) -> Result<u8, Fatal> {
    let (dataset, digests) = load(inputs)?;
    let batch = run_benchmarks(&dataset, scenarios, threads);
    for s in &batch.skipped {
        eprintln!(
            "skipped {} scenario {}: {}",
            s.country_code, s.scenario, s.reason
        );
    }
    let meta = RunMetadata::new("diets", digests, dataset.targets());
    let tables = [
        diets_table(&batch),
        metrics_table(&batch),
        skipped_table(&batch.skipped),
    ];
    write_tables(out, &tables, &meta)?;
    println!("{} diets written to {}", batch.results.len(), out.display());
    Ok(skipped_exit(batch.skipped.len()))
}

fn simulate(
    inputs: &Inputs,
    out: &Path,
    config: &SimulationConfig,
    with_draws: bool,
    threads: usize,
) -> Result<u8, Fatal> {
    let (dataset, digests) = load(inputs)?;
    let batch = run_simulations(&dataset, config, threads);
    for s in &batch.skipped {
        eprintln!(
            "skipped {} scenario {}: {}",
            s.country_code, s.scenario, s.reason
        );
    }
    let meta = RunMetadata::new("simulate", digests, dataset.targets())
        .with_simulation(config.master_seed, config.iterations);
    let mut tables = vec![
        simulation_summary_table(&batch, config.scenario),
        skipped_table(&batch.skipped),
    ];
    if with_draws {
        tables.push(draws_table(&batch, config.scenario));
    }
    write_tables(out, &tables, &meta)?;
    println!(
        "scenario {}: {} countries x {} draws written to {}",
        config.scenario,
        batch.runs.len(),
        config.iterations,
        out.display()
    );
    Ok(skipped_exit(batch.skipped.len()))
}

fn report(inputs: &Inputs, out: &Path, sim: &SimOpts, threads: usize) -> Result<u8, Fatal> {
    let (dataset, digests) = load(inputs)?;
    let benchmarks = run_benchmarks(
        &dataset,
        &[
            Scenario::LowestCost,
            Scenario::LowestEmissions,
            Scenario::MostCommon,
        ],
        threads,
    );
    let sims = [Scenario::WeightedRandom, Scenario::UniformRandom]
        .into_iter()
        .map(|s| {
            SimulationConfig::new(sim.iterations, sim.seed, s)
                .map(|config| run_simulations(&dataset, &config, threads))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let sim_refs: Vec<_> = sims.iter().collect();
    let (mut tables, notices) = report_bundle(&dataset, &benchmarks, &sim_refs);
    let mut skipped = benchmarks.skipped.clone();
    skipped.extend(sims.iter().flat_map(|b| b.skipped.iter().cloned()));
    tables.push(eligibility_table(&eligibility_matrix(&dataset)));
    tables.push(dropped_rows_table(&dataset.report));
    tables.push(skipped_table(&skipped));
    for n in &notices {
        eprintln!("{n}");
    }
    let meta = RunMetadata::new("report", digests, dataset.targets())
        .with_simulation(sim.seed, sim.iterations);
    write_tables(out, &tables, &meta)?;
    println!("{} tables written to {}", tables.len(), out.display());
    Ok(skipped_exit(skipped.len()))
}
