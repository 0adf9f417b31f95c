//! Browser bindings for a few hdb-bench operations on seeded synthetic
//! countries. Every export takes plain numbers and returns a JSON string;
//! the `*_value` functions are the same computations for native callers.

use hdb_bench::afford::pua;
use hdb_bench::ingest::{
    emissions_to_kg_per_kcal, price_to_ppp_per_kcal, PppFactor, RawItemRecord,
};
use hdb_bench::model::{AffordabilityParams, IncomeClass, IncomeDistribution};
use hdb_bench::selection::{lowest_cost_diet, lowest_emissions_diet, most_common_diet};
use hdb_bench::simulate::{run_simulation, SimulationConfig};
use hdb_bench::synth::{synthetic_country, SynthOptions};
use hdb_bench::{default_hdb_targets, CountryDataset, Diet, DietMetrics, Scenario};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn country(seed: u32) -> CountryDataset {
    synthetic_country(
        &format!("SYN{seed}"),
        seed as u64,
        &default_hdb_targets(),
        SynthOptions::default(),
    )
}

fn diet_json(diet: &Diet, metrics: &DietMetrics) -> Value {
    json!({
        "scenario": diet.scenario.id(),
        "label": diet.scenario.label(),
        "cost": metrics.cost_ppp_per_day,
        "emissions": metrics.emissions_kg_per_day,
        "items": diet.selections.iter().map(|s| json!({
            "group": s.group.code(),
            "item_id": s.item_id,
            "kcal": s.quantity_kcal,
        })).collect::<Vec<_>>(),
    })
}

/// Items of the synthetic country plus its diets 1-3 (diet 3 is absent
/// when the country lacks enough food-supply categories).
pub fn country_value(seed: u32) -> Result<Value, String> {
    let c = country(seed);
    let t = default_hdb_targets();
    let mut diets = vec![
        lowest_cost_diet(&c, &t).map_err(|e| e.to_string())?,
        lowest_emissions_diet(&c, &t).map_err(|e| e.to_string())?,
    ];
    diets.extend(most_common_diet(&c, &t).ok());
    Ok(json!({
        "country_code": c.country_code,
        "items": c.items.iter().map(|i| json!({
            "item_id": i.item_id(),
            "group": i.group().code(),
            "price_ppp_per_kcal": i.price_ppp_per_kcal(),
            "emissions_kg_per_kcal": i.emissions_kg_per_kcal(),
            "fbs_category": i.fbs_category(),
            "fbs_kcal": i.fbs_category_kcal(),
        })).collect::<Vec<_>>(),
        "diets": diets.iter().map(|(d, m)| diet_json(d, m)).collect::<Vec<_>>(),
    }))
}

/// Cost and emission histograms of `iterations` Monte Carlo diets.
pub fn simulate_value(
    seed: u32,
    scenario: u8,
    iterations: u32,
    sim_seed: u32,
    bins: u32,
) -> Result<Value, String> {
    let scenario = Scenario::from_id(scenario).ok_or("unknown scenario")?;
    let config =
        SimulationConfig::new(iterations, sim_seed as u64, scenario).map_err(|e| e.to_string())?;
    let c = country(seed);
    let run = run_simulation(&c, &default_hdb_targets(), &config).map_err(|e| e.to_string())?;
    let costs: Vec<f64> = run
        .draws
        .iter()
        .map(|d| d.metrics.cost_ppp_per_day)
        .collect();
    let emissions: Vec<f64> = run
        .draws
        .iter()
        .map(|d| d.metrics.emissions_kg_per_day)
        .collect();
    let s = &run.summary;
    Ok(json!({
        "cost": { "histogram": histogram(&costs, bins.max(1)), "summary": s.cost },
        "emissions": { "histogram": histogram(&emissions, bins.max(1)), "summary": s.emissions },
    }))
}

fn histogram(values: &[f64], bins: u32) -> Value {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let width = if hi > lo {
        (hi - lo) / bins as f64
    } else {
        1.0
    };
    let mut counts = vec![0u32; bins as usize];
    for v in values {
        let b = (((v - lo) / width) as usize).min(bins as usize - 1);
        counts[b] += 1;
    }
    json!({ "min": lo, "width": width, "counts": counts })
}

/// Income quantiles of a log-logistic distribution at p = 0.01..0.99.
fn log_logistic(median: f64, shape: f64) -> Result<IncomeDistribution, String> {
    let points = (1..100)
        .map(|i| {
            let p = i as f64 / 100.0;
            (p, median * (p / (1.0 - p)).powf(1.0 / shape))
        })
        .collect();
    IncomeDistribution::new("SYN", points).map_err(|e| e.to_string())
}

/// PUA as a function of diet cost for a log-logistic income distribution,
/// with the country's diets 1-3 marked on the curve.
pub fn pua_value(
    seed: u32,
    median_income: f64,
    shape: f64,
    nonfood_share: f64,
    poverty_line: f64,
) -> Result<Value, String> {
    let dist = log_logistic(median_income, shape)?;
    let mut params = AffordabilityParams::default();
    params
        .set_class(IncomeClass::Low, Some(nonfood_share), poverty_line)
        .map_err(|e| e.to_string())?;
    let at = |cost: f64| pua(cost, &dist, &params, IncomeClass::Low).map_err(|e| e.to_string());
    let diets = country_value(seed)?;
    let markers = diets["diets"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|d| {
            let cost = d["cost"].as_f64().unwrap_or(0.0);
            Ok(json!({ "scenario": d["scenario"], "cost": cost, "pua": at(cost)? }))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let max_cost = 3.0 * median_income.max(1.0);
    let curve = (0..=120)
        .map(|i| {
            let cost = max_cost * i as f64 / 120.0;
            Ok([cost, at(cost)?])
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json!({ "curve": curve, "markers": markers }))
}

/// Retail price and emission factor converted to per-kcal terms.
pub fn convert_value(
    price_local: f64,
    unit_net_weight_kg: f64,
    edible_fraction: f64,
    kcal_per_100g_edible: f64,
    emission_factor_kg_per_kg: f64,
    ppp_factor: f64,
) -> Result<Value, String> {
    let r = RawItemRecord {
        country_code: String::new(),
        item_id: String::new(),
        display_name: String::new(),
        group_label: "SS".into(),
        price_local,
        unit_net_weight_kg,
        edible_fraction,
        kcal_per_100g_edible,
        emission_factor_kg_per_kg,
        fbs_category: None,
    };
    r.check().map_err(|e| e.to_string())?;
    if !(ppp_factor.is_finite() && ppp_factor > 0.0) {
        return Err("ppp_factor must be strictly positive".into());
    }
    let price = price_to_ppp_per_kcal(
        &r,
        PppFactor {
            ppp_local_per_international_dollar: ppp_factor,
        },
    );
    let emissions = emissions_to_kg_per_kcal(&r);
    Ok(json!({
        "price_ppp_per_kcal": price,
        "emissions_kg_per_kcal": emissions,
        "price_ppp_per_1000_kcal": price * 1000.0,
        "emissions_kg_per_1000_kcal": emissions * 1000.0,
    }))
}

fn to_js(v: Result<Value, String>) -> Result<String, JsValue> {
    v.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn country_json(seed: u32) -> Result<String, JsValue> {
    to_js(country_value(seed))
}

#[wasm_bindgen]
pub fn simulate_json(
    seed: u32,
    scenario: u8,
    iterations: u32,
    sim_seed: u32,
    bins: u32,
) -> Result<String, JsValue> {
    to_js(simulate_value(seed, scenario, iterations, sim_seed, bins))
}

#[wasm_bindgen]
pub fn pua_json(
    seed: u32,
    median_income: f64,
    shape: f64,
    nonfood_share: f64,
    poverty_line: f64,
) -> Result<String, JsValue> {
    to_js(pua_value(
        seed,
        median_income,
        shape,
        nonfood_share,
        poverty_line,
    ))
}

#[wasm_bindgen]
pub fn convert_json(
    price_local: f64,
    unit_net_weight_kg: f64,
    edible_fraction: f64,
    kcal_per_100g_edible: f64,
    emission_factor_kg_per_kg: f64,
    ppp_factor: f64,
) -> Result<String, JsValue> {
    to_js(convert_value(
        price_local,
        unit_net_weight_kg,
        edible_fraction,
        kcal_per_100g_edible,
        emission_factor_kg_per_kg,
        ppp_factor,
    ))
}
