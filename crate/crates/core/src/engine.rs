//! Runs scenarios over every country of a dataset.
//!
//! Countries are processed independently (in parallel with the `parallel`
//! feature) and results are always returned in country-code order, so the
//! output does not depend on the thread count.

use std::collections::BTreeMap;

use crate::ingest::{CountryDataset, Dataset};
use crate::model::{Diet, DietMetrics, HdbTargets, Scenario};
use crate::selection::{benchmark_diet, check_eligibility};
use crate::simulate::{run_simulation, SimulationConfig, SimulationRun};

/// Why a country was left out of a scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Skipped {
    pub country_code: String,
    pub scenario: Scenario,
    pub reason: String,
}

/// Eligibility of every country for every scenario: `None` when eligible,
/// otherwise the reason.
pub type EligibilityMatrix = BTreeMap<String, [Option<String>; 5]>;

pub fn eligibility_matrix(dataset: &Dataset) -> EligibilityMatrix {
    dataset
        .countries
        .iter()
        .map(|(code, c)| {
            let row = Scenario::ALL.map(|s| {
                check_eligibility(c, dataset.targets(), s)
                    .err()
                    .map(|e| e.to_string())
            });
            (code.clone(), row)
        })
        .collect()
}

/// Maps `f` over countries on `threads` workers, preserving order.
pub fn map_countries<'a, T, F>(countries: &[&'a CountryDataset], threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&'a CountryDataset) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool");
            return pool.install(|| countries.par_iter().map(|c| f(c)).collect());
        }
    }
    let _ = threads;
    countries.iter().map(|c| f(c)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkResult {
    pub diet: Diet,
    pub metrics: DietMetrics,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchmarkBatch {
    /// Ordered by (scenario, country).
    pub results: Vec<BenchmarkResult>,
    pub skipped: Vec<Skipped>,
}

impl BenchmarkBatch {
    pub fn get(&self, country: &str, scenario: Scenario) -> Option<&BenchmarkResult> {
        self.results
            .iter()
            .find(|r| r.diet.country_code == country && r.diet.scenario == scenario)
    }

    pub fn for_scenario(&self, scenario: Scenario) -> impl Iterator<Item = &BenchmarkResult> {
        self.results
            .iter()
            .filter(move |r| r.diet.scenario == scenario)
    }
}

/// Deterministic scenarios (1-3) for every country.
pub fn run_benchmarks(dataset: &Dataset, scenarios: &[Scenario], threads: usize) -> BenchmarkBatch {
    let countries: Vec<&CountryDataset> = dataset.countries.values().collect();
    let targets = dataset.targets();
    let mut batch = BenchmarkBatch::default();
    for &scenario in scenarios {
        assert!(
            !scenario.is_monte_carlo(),
            "scenario {scenario} is Monte Carlo"
        );
        let outcomes = map_countries(&countries, threads, |c| {
            check_eligibility(c, targets, scenario)
                .and_then(|_| benchmark_diet(c, targets, scenario))
        });
        for (c, outcome) in countries.iter().zip(outcomes) {
            match outcome {
                Ok((diet, metrics)) => batch.results.push(BenchmarkResult { diet, metrics }),
                Err(e) => batch.skipped.push(skip(c, scenario, &e)),
            }
        }
    }
    batch
}

fn skip(c: &CountryDataset, scenario: Scenario, e: &dyn std::fmt::Display) -> Skipped {
    Skipped {
        country_code: c.country_code.clone(),
        scenario,
        reason: e.to_string(),
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SimulationBatch {
    /// Ordered by country.
    pub runs: Vec<SimulationRun>,
    pub skipped: Vec<Skipped>,
}

/// Monte Carlo scenario for every eligible country.
pub fn run_simulations(
    dataset: &Dataset,
    config: &SimulationConfig,
    threads: usize,
) -> SimulationBatch {
    simulate_countries(
        &dataset.countries.values().collect::<Vec<_>>(),
        dataset.targets(),
        config,
        threads,
    )
}

pub fn simulate_countries(
    countries: &[&CountryDataset],
    targets: &HdbTargets,
    config: &SimulationConfig,
    threads: usize,
) -> SimulationBatch {
    let outcomes = map_countries(countries, threads, |c| run_simulation(c, targets, config));
    let mut batch = SimulationBatch::default();
    for (c, outcome) in countries.iter().zip(outcomes) {
        match outcome {
            Ok(run) => batch.runs.push(run),
            Err(e) => batch.skipped.push(skip(c, config.scenario, &e)),
        }
    }
    batch
}
