//! Deterministic benchmark diets 1-3.
//!
//! The basket fixes every group's quota and item count, so the minimum of
//! the summed objective separates into independent per-group rank orders:
//! pick the `k_g` best items in each group by the scenario's criterion.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::ingest::CountryDataset;
use crate::metrics::{diet_metrics, MetricsError};
use crate::model::{Diet, DietMetrics, FoodGroup, FoodItem, HdbTargets, Scenario, Selection};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SelectionError {
    #[error("{group}: {available} candidate items, {required} required")]
    InsufficientItems {
        group: FoodGroup,
        available: usize,
        required: usize,
    },
    #[error("{group}: every candidate has zero weight")]
    AllZeroWeights { group: FoodGroup },
    #[error("no PPP factor for country")]
    NoPppFactor,
    #[error(transparent)]
    Metrics(#[from] MetricsError),
}

fn cost_order(a: &FoodItem, b: &FoodItem) -> Ordering {
    a.price_ppp_per_kcal()
        .total_cmp(&b.price_ppp_per_kcal())
        .then(
            a.emissions_kg_per_kcal()
                .total_cmp(&b.emissions_kg_per_kcal()),
        )
        .then_with(|| a.item_id().cmp(b.item_id()))
}

fn emissions_order(a: &FoodItem, b: &FoodItem) -> Ordering {
    a.emissions_kg_per_kcal()
        .total_cmp(&b.emissions_kg_per_kcal())
        .then(a.price_ppp_per_kcal().total_cmp(&b.price_ppp_per_kcal()))
        .then_with(|| a.item_id().cmp(b.item_id()))
}

fn require(group: FoodGroup, available: usize, required: usize) -> Result<(), SelectionError> {
    if available < required {
        return Err(SelectionError::InsufficientItems {
            group,
            available,
            required,
        });
    }
    Ok(())
}

fn build_diet(
    country: &CountryDataset,
    targets: &HdbTargets,
    scenario: Scenario,
    picks: Vec<(FoodGroup, Vec<&FoodItem>)>,
) -> Result<(Diet, DietMetrics), SelectionError> {
    let selections = picks
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
    let diet = Diet {
        country_code: country.country_code.clone(),
        scenario,
        selections,
        iteration_index: None,
    };
    let metrics = diet_metrics(&diet, &country.items)?;
    Ok((diet, metrics))
}

fn rank_order(
    country: &CountryDataset,
    targets: &HdbTargets,
    scenario: Scenario,
    order: fn(&FoodItem, &FoodItem) -> Ordering,
) -> Result<(Diet, DietMetrics), SelectionError> {
    let mut picks = Vec::with_capacity(6);
    for (group, target) in targets.iter() {
        let mut candidates: Vec<&FoodItem> = country.group_items(group).collect();
        require(group, candidates.len(), target.item_count)?;
        candidates.sort_by(|a, b| order(a, b));
        candidates.truncate(target.item_count);
        picks.push((group, candidates));
    }
    build_diet(country, targets, scenario, picks)
}

/// Diet 1: the `k_g` cheapest items per group. Ties go to lower emissions,
/// then item id.
pub fn lowest_cost_diet(
    country: &CountryDataset,
    targets: &HdbTargets,
) -> Result<(Diet, DietMetrics), SelectionError> {
    rank_order(country, targets, Scenario::LowestCost, cost_order)
}

/// Diet 2: the `k_g` lowest-emission items per group. Ties go to the cheaper
/// item, then item id.
pub fn lowest_emissions_diet(
    country: &CountryDataset,
    targets: &HdbTargets,
) -> Result<(Diet, DietMetrics), SelectionError> {
    rank_order(country, targets, Scenario::LowestEmissions, emissions_order)
}

/// FBS categories of a group with their supply and cheapest matched item,
/// ranked by supply (descending) then category name.
fn ranked_categories(country: &CountryDataset, group: FoodGroup) -> Vec<(&str, f64, &FoodItem)> {
    let mut cats: BTreeMap<&str, (f64, &FoodItem)> = BTreeMap::new();
    for item in country.group_items(group) {
        let (Some(cat), Some(kcal)) = (item.fbs_category(), item.fbs_category_kcal()) else {
            continue;
        };
        cats.entry(cat)
            .and_modify(|(_, best)| {
                let cheaper = item
                    .price_ppp_per_kcal()
                    .total_cmp(&best.price_ppp_per_kcal())
                    .then_with(|| item.item_id().cmp(best.item_id()));
                if cheaper == Ordering::Less {
                    *best = item;
                }
            })
            .or_insert((kcal, item));
    }
    let mut ranked: Vec<_> = cats.into_iter().map(|(c, (k, i))| (c, k, i)).collect();
    ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    ranked
}

/// Diet 3: the `k_g` FBS categories with the largest food supply per group,
/// each represented by its cheapest matched item.
pub fn most_common_diet(
    country: &CountryDataset,
    targets: &HdbTargets,
) -> Result<(Diet, DietMetrics), SelectionError> {
    let mut picks = Vec::with_capacity(6);
    for (group, target) in targets.iter() {
        let ranked = ranked_categories(country, group);
        require(group, ranked.len(), target.item_count)?;
        picks.push((
            group,
            ranked
                .into_iter()
                .take(target.item_count)
                .map(|(_, _, item)| item)
                .collect(),
        ));
    }
    build_diet(country, targets, Scenario::MostCommon, picks)
}

/// Scenario-4 sampling weight of each item: its category supply split
/// equally among the country's items in that category. Items without FBS
/// data get no entry.
pub fn fbs_item_weights(country: &CountryDataset) -> BTreeMap<&str, f64> {
    let mut sharing: BTreeMap<(FoodGroup, &str), usize> = BTreeMap::new();
    for item in &country.items {
        if let (Some(cat), Some(_)) = (item.fbs_category(), item.fbs_category_kcal()) {
            *sharing.entry((item.group(), cat)).or_default() += 1;
        }
    }
    country
        .items
        .iter()
        .filter_map(|item| {
            let cat = item.fbs_category()?;
            let kcal = item.fbs_category_kcal()?;
            let n = sharing[&(item.group(), cat)];
            Some((item.item_id(), kcal / n as f64))
        })
        .collect()
}

/// Whether a country has enough data to build `scenario`.
pub fn check_eligibility(
    country: &CountryDataset,
    targets: &HdbTargets,
    scenario: Scenario,
) -> Result<(), SelectionError> {
    if country.ppp_factor.is_none() && country.items.is_empty() {
        return Err(SelectionError::NoPppFactor);
    }
    let weights = (scenario == Scenario::WeightedRandom).then(|| fbs_item_weights(country));
    for (group, target) in targets.iter() {
        let available = match scenario {
            Scenario::LowestCost | Scenario::LowestEmissions | Scenario::UniformRandom => {
                country.group_items(group).count()
            }
            Scenario::MostCommon => ranked_categories(country, group).len(),
            Scenario::WeightedRandom => {
                let w = weights.as_ref().expect("computed for scenario 4");
                let with_data: Vec<f64> = country
                    .group_items(group)
                    .filter_map(|i| w.get(i.item_id()).copied())
                    .collect();
                if !with_data.is_empty() && with_data.iter().all(|&x| x == 0.0) {
                    return Err(SelectionError::AllZeroWeights { group });
                }
                with_data.iter().filter(|&&x| x > 0.0).count()
            }
        };
        require(group, available, target.item_count)?;
    }
    Ok(())
}

/// Runs the deterministic scenario `scenario` (1-3).
pub fn benchmark_diet(
    country: &CountryDataset,
    targets: &HdbTargets,
    scenario: Scenario,
) -> Result<(Diet, DietMetrics), SelectionError> {
    match scenario {
        Scenario::LowestCost => lowest_cost_diet(country, targets),
        Scenario::LowestEmissions => lowest_emissions_diet(country, targets),
        Scenario::MostCommon => most_common_diet(country, targets),
        other => panic!("scenario {other} is Monte Carlo, not a benchmark selection"),
    }
}
