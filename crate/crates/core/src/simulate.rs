//! Monte Carlo diets 4 (weighted by food supply) and 5 (uniform).
//!
//! Each (seed, country, scenario) triple owns an independent ChaCha8
//! stream whose key is derived by SHA-256, so results do not depend on the
//! order in which countries are processed or on the number of threads.
//! Within a draw, the `k_g` items of a group are distinct: weighted draws
//! use successive sampling (draw one item proportionally to weight, remove
//! it, renormalise, repeat).

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::ingest::CountryDataset;
use crate::metrics::diet_metrics;
use crate::model::{Diet, DietMetrics, FoodGroup, FoodItem, HdbTargets, Scenario, Selection};
use crate::selection::{check_eligibility, fbs_item_weights, SelectionError};
use crate::stats::{summarize, Summary};

/// Identifies the generator and stream derivation; bump the version when
/// either changes.
pub const GENERATOR_ID: &str =
    "chacha8 (rand_chacha 0.9) keyed by sha256(\"hdb-bench/sim/v1\", seed_le, country, scenario)";
pub const GENERATOR_VERSION: u32 = 1;

pub const DEFAULT_ITERATIONS: u32 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimulationConfig {
    pub iterations: u32,
    pub master_seed: u64,
    pub scenario: Scenario,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimulationError {
    #[error("iterations must be at least 1")]
    ZeroIterations,
    #[error("scenario {0} is not a Monte Carlo scenario")]
    NotMonteCarlo(Scenario),
    #[error(transparent)]
    Selection(#[from] SelectionError),
}

impl SimulationConfig {
    pub fn new(
        iterations: u32,
        master_seed: u64,
        scenario: Scenario,
    ) -> Result<Self, SimulationError> {
        if iterations == 0 {
            return Err(SimulationError::ZeroIterations);
        }
        if !scenario.is_monte_carlo() {
            return Err(SimulationError::NotMonteCarlo(scenario));
        }
        Ok(SimulationConfig {
            iterations,
            master_seed,
            scenario,
        })
    }
}

/// The per-country random stream.
pub fn stream_rng(master_seed: u64, country_code: &str, scenario: Scenario) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(b"hdb-bench/sim/v1");
    h.update(master_seed.to_le_bytes());
    h.update((country_code.len() as u64).to_le_bytes());
    h.update(country_code.as_bytes());
    h.update([scenario.id()]);
    let digest = h.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}

/// Successive weighted sampling of `k` distinct indices. Zero weights are
/// never drawn. Panics if fewer than `k` weights are positive.
pub fn weighted_sample_without_replacement<R: Rng + ?Sized>(
    weights: &[f64],
    k: usize,
    rng: &mut R,
) -> Vec<usize> {
    let mut remaining: Vec<f64> = weights.to_vec();
    let mut picked = Vec::with_capacity(k);
    for _ in 0..k {
        let total: f64 = remaining.iter().sum();
        assert!(total > 0.0, "not enough positive weights");
        let target = rng.random::<f64>() * total;
        let mut acc = 0.0;
        let mut chosen = None;
        for (i, &w) in remaining.iter().enumerate() {
            if w <= 0.0 {
                continue;
            }
            acc += w;
            chosen = Some(i);
            if target < acc {
                break;
            }
        }
        let i = chosen.expect("a positive weight exists");
        remaining[i] = 0.0;
        picked.push(i);
    }
    picked
}

/// `k` distinct indices from `0..n`, uniformly.
pub fn uniform_sample_without_replacement<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    rng: &mut R,
) -> Vec<usize> {
    index::sample(rng, n, k).into_vec()
}

fn assemble(
    country: &CountryDataset,
    targets: &HdbTargets,
    scenario: Scenario,
    groups: Vec<(FoodGroup, Vec<&FoodItem>)>,
) -> Diet {
    let selections = groups
        .into_iter()
        .flat_map(|(g, items)| {
            let q = targets.quantity_per_item(g);
            items.into_iter().map(move |i| Selection {
                item_id: i.item_id().to_string(),
                group: g,
                quantity_kcal: q,
            })
        })
        .collect();
    Diet {
        country_code: country.country_code.clone(),
        scenario,
        selections,
        iteration_index: None,
    }
}

/// One scenario-4 diet: items drawn with probability proportional to their
/// share of the category's food supply.
pub fn draw_weighted_diet<R: Rng + ?Sized>(
    country: &CountryDataset,
    targets: &HdbTargets,
    rng: &mut R,
) -> Result<Diet, SelectionError> {
    let weights = fbs_item_weights(country);
    let mut groups = Vec::with_capacity(6);
    for (group, target) in targets.iter() {
        let candidates: Vec<(&FoodItem, f64)> = country
            .group_items(group)
            .filter_map(|i| weights.get(i.item_id()).map(|&w| (i, w)))
            .collect();
        let positive = candidates.iter().filter(|(_, w)| *w > 0.0).count();
        if !candidates.is_empty() && positive == 0 {
            return Err(SelectionError::AllZeroWeights { group });
        }
        if positive < target.item_count {
            return Err(SelectionError::InsufficientItems {
                group,
                available: positive,
                required: target.item_count,
            });
        }
        let w: Vec<f64> = candidates.iter().map(|(_, w)| *w).collect();
        let picks = weighted_sample_without_replacement(&w, target.item_count, rng);
        groups.push((group, picks.into_iter().map(|i| candidates[i].0).collect()));
    }
    Ok(assemble(country, targets, Scenario::WeightedRandom, groups))
}

/// One scenario-5 diet: every item in a group equally likely.
pub fn draw_uniform_diet<R: Rng + ?Sized>(
    country: &CountryDataset,
    targets: &HdbTargets,
    rng: &mut R,
) -> Result<Diet, SelectionError> {
    let mut groups = Vec::with_capacity(6);
    for (group, target) in targets.iter() {
        let candidates: Vec<&FoodItem> = country.group_items(group).collect();
        if candidates.len() < target.item_count {
            return Err(SelectionError::InsufficientItems {
                group,
                available: candidates.len(),
                required: target.item_count,
            });
        }
        let picks = uniform_sample_without_replacement(candidates.len(), target.item_count, rng);
        groups.push((group, picks.into_iter().map(|i| candidates[i]).collect()));
    }
    Ok(assemble(country, targets, Scenario::UniformRandom, groups))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Draw {
    pub iteration: u32,
    pub diet: Diet,
    pub metrics: DietMetrics,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationSummary {
    pub country_code: String,
    pub scenario: Scenario,
    pub iterations: u32,
    pub cost: Summary,
    pub emissions: Summary,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationRun {
    pub summary: SimulationSummary,
    pub draws: Vec<Draw>,
}

/// Draws `config.iterations` diets for one country and summarises their
/// cost and emissions.
pub fn run_simulation(
    country: &CountryDataset,
    targets: &HdbTargets,
    config: &SimulationConfig,
) -> Result<SimulationRun, SimulationError> {
    check_eligibility(country, targets, config.scenario)?;
    let mut rng = stream_rng(config.master_seed, &country.country_code, config.scenario);
    let mut draws = Vec::with_capacity(config.iterations as usize);
    for iteration in 0..config.iterations {
        let mut diet = match config.scenario {
            Scenario::WeightedRandom => draw_weighted_diet(country, targets, &mut rng)?,
            Scenario::UniformRandom => draw_uniform_diet(country, targets, &mut rng)?,
            other => return Err(SimulationError::NotMonteCarlo(other)),
        };
        diet.iteration_index = Some(iteration);
        let metrics = diet_metrics(&diet, &country.items).map_err(SelectionError::from)?;
        draws.push(Draw {
            iteration,
            diet,
            metrics,
        });
    }
    let costs: Vec<f64> = draws.iter().map(|d| d.metrics.cost_ppp_per_day).collect();
    let emissions: Vec<f64> = draws
        .iter()
        .map(|d| d.metrics.emissions_kg_per_day)
        .collect();
    let summary = SimulationSummary {
        country_code: country.country_code.clone(),
        scenario: config.scenario,
        iterations: config.iterations,
        cost: summarize(&costs).expect("at least one finite draw"),
        emissions: summarize(&emissions).expect("at least one finite draw"),
    };
    Ok(SimulationRun { summary, draws })
}
