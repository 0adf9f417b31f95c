//! Nutrient adequacy ratios (NAR) and their mean (MAR).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::model::{Diet, FoodItem, Nutrient, NutrientProfile, NutrientRequirements};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AdequacyError {
    #[error("no nutrient profile for item {0:?}")]
    MissingProfile(String),
    #[error("no requirement for nutrient {0}")]
    MissingRequirement(Nutrient),
    #[error("item {0:?} has no kcal density")]
    MissingKcalDensity(String),
    #[error("diet references unknown item {0:?}")]
    UnknownItem(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Adequacy {
    /// Capped ratio per nutrient, in [`Nutrient::ALL`] order.
    pub nar: Vec<(Nutrient, f64)>,
    pub mar: f64,
}

/// Daily intake of each nutrient from the diet. Grams are recovered from
/// kcal through each item's own energy density.
pub fn nutrient_intake(
    diet: &Diet,
    items: &[FoodItem],
    profiles: &BTreeMap<String, NutrientProfile>,
) -> Result<BTreeMap<Nutrient, f64>, AdequacyError> {
    let mut intake: BTreeMap<Nutrient, f64> = Nutrient::ALL.iter().map(|&n| (n, 0.0)).collect();
    for sel in &diet.selections {
        let item = items
            .iter()
            .find(|i| i.item_id() == sel.item_id)
            .ok_or_else(|| AdequacyError::UnknownItem(sel.item_id.clone()))?;
        let density = item
            .kcal_per_100g_edible()
            .ok_or_else(|| AdequacyError::MissingKcalDensity(sel.item_id.clone()))?;
        let profile = profiles
            .get(&sel.item_id)
            .ok_or_else(|| AdequacyError::MissingProfile(sel.item_id.clone()))?;
        let hundred_grams = sel.quantity_kcal / density;
        for (n, total) in intake.iter_mut() {
            *total += profile.amount(*n) * hundred_grams;
        }
    }
    Ok(intake)
}

/// NAR_n = min(1, intake_n / requirement_n); MAR is their plain mean.
pub fn nutrient_adequacy(
    diet: &Diet,
    items: &[FoodItem],
    profiles: &BTreeMap<String, NutrientProfile>,
    requirements: &NutrientRequirements,
) -> Result<Adequacy, AdequacyError> {
    let bounds: Vec<(Nutrient, f64)> = Nutrient::ALL
        .iter()
        .map(|&n| {
            requirements
                .get(n)
                .map(|b| (n, b))
                .ok_or(AdequacyError::MissingRequirement(n))
        })
        .collect::<Result<_, _>>()?;
    let intake = nutrient_intake(diet, items, profiles)?;
    let nar: Vec<(Nutrient, f64)> = bounds
        .into_iter()
        .map(|(n, b)| (n, (intake[&n] / b).min(1.0)))
        .collect();
    let mar = nar.iter().map(|(_, r)| r).sum::<f64>() / nar.len() as f64;
    Ok(Adequacy { nar, mar })
}
