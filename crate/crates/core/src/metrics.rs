//! Cost and emission totals of a diet, and pooled item shares across
//! countries.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::model::{Diet, DietMetrics, FoodGroup, FoodItem, GroupMetrics};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MetricsError {
    #[error("diet references unknown item {0:?}")]
    UnknownItem(String),
}

/// Sum of price x quantity and emissions x quantity over the diet's slots.
pub fn diet_metrics(diet: &Diet, items: &[FoodItem]) -> Result<DietMetrics, MetricsError> {
    let mut per_group = [GroupMetrics::default(); 6];
    for sel in &diet.selections {
        let item = items
            .iter()
            .find(|i| i.item_id() == sel.item_id)
            .ok_or_else(|| MetricsError::UnknownItem(sel.item_id.clone()))?;
        let g = &mut per_group[sel.group.index()];
        g.cost_ppp_per_day += item.price_ppp_per_kcal() * sel.quantity_kcal;
        g.emissions_kg_per_day += item.emissions_kg_per_kcal() * sel.quantity_kcal;
    }
    Ok(DietMetrics::from_groups(per_group))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ItemShare {
    pub item_id: String,
    pub group: FoodGroup,
    pub energy_share: f64,
    pub emission_share: f64,
}

/// Pools the diets of many countries (one scenario) and returns each item's
/// share of total energy and total emissions. Countries are unweighted.
/// When pooled emissions are zero every emission share is zero.
///
/// Output is sorted by (group, item_id).
pub fn item_share_table<'a>(
    diets: impl IntoIterator<Item = (&'a Diet, &'a [FoodItem])>,
) -> Result<Vec<ItemShare>, MetricsError> {
    let mut pooled: BTreeMap<(FoodGroup, String), (f64, f64)> = BTreeMap::new();
    let mut total_energy = 0.0;
    let mut total_emissions = 0.0;
    for (diet, items) in diets {
        for sel in &diet.selections {
            let item = items
                .iter()
                .find(|i| i.item_id() == sel.item_id)
                .ok_or_else(|| MetricsError::UnknownItem(sel.item_id.clone()))?;
            let e = item.emissions_kg_per_kcal() * sel.quantity_kcal;
            let entry = pooled.entry((sel.group, sel.item_id.clone())).or_default();
            entry.0 += sel.quantity_kcal;
            entry.1 += e;
            total_energy += sel.quantity_kcal;
            total_emissions += e;
        }
    }
    Ok(pooled
        .into_iter()
        .map(|((group, item_id), (energy, emissions))| ItemShare {
            item_id,
            group,
            energy_share: if total_energy > 0.0 {
                energy / total_energy
            } else {
                0.0
            },
            emission_share: if total_emissions > 0.0 {
                emissions / total_emissions
            } else {
                0.0
            },
        })
        .collect())
}
