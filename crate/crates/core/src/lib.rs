//! Benchmark healthy diets per country.
//!
//! Every diet fills the Healthy Diet Basket: 11 item slots over six food
//! groups totalling 2,330 kcal/day, each slot holding `E_g / k_g` kcal. The
//! five scenarios differ only in how items are picked within a group:
//!
//! 1. lowest cost per kcal ([`selection::lowest_cost_diet`])
//! 2. lowest emissions per kcal ([`selection::lowest_emissions_diet`])
//! 3. most commonly consumed FBS categories ([`selection::most_common_diet`])
//! 4. Monte Carlo, weighted by food supply ([`simulate::draw_weighted_diet`])
//! 5. Monte Carlo, uniform ([`simulate::draw_uniform_diet`])
//!
//! [`engine`] runs them over a whole [`ingest::Dataset`] and [`report`]
//! writes the CSV tables.

pub mod adequacy;
pub mod afford;
pub mod engine;
pub mod ingest;
pub mod metrics;
pub mod model;
pub mod report;
pub mod selection;
pub mod simulate;
pub mod stats;
pub mod synth;

pub use ingest::{load_dataset, CountryDataset, Dataset, InputPaths};
pub use model::{
    default_hdb_targets, Diet, DietMetrics, FoodGroup, FoodItem, HdbTargets, Scenario,
};
