//! Domain types shared by every stage of the pipeline.
//!
//! Everything here is an immutable value once constructed. Constructors
//! validate their invariants and report the offending field by name.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Relative tolerance used when comparing energy quantities.
pub const REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("invalid {field}: {reason}")]
    InvalidField { field: &'static str, reason: String },
    #[error("diet for {country} (scenario {scenario}) violates quota in {group}: {reason}")]
    QuotaViolation {
        country: String,
        scenario: u8,
        group: FoodGroup,
        reason: String,
    },
    #[error("unknown food group label {0:?}")]
    UnknownGroup(String),
    #[error("unknown scenario {0}")]
    UnknownScenario(String),
    #[error("unknown income class {0:?}")]
    UnknownIncomeClass(String),
    #[error("unknown nutrient {0:?}")]
    UnknownNutrient(String),
}

fn invalid(field: &'static str, reason: impl Into<String>) -> ModelError {
    ModelError::InvalidField {
        field,
        reason: reason.into(),
    }
}

/// The six Healthy Diet Basket food groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FoodGroup {
    #[serde(rename = "ASF")]
    AnimalSource,
    #[serde(rename = "VEG")]
    Vegetables,
    #[serde(rename = "SS")]
    StarchyStaples,
    #[serde(rename = "FRT")]
    Fruits,
    #[serde(rename = "LNS")]
    LegumesNutsSeeds,
    #[serde(rename = "OF")]
    OilsFats,
}

impl FoodGroup {
    pub const ALL: [FoodGroup; 6] = [
        FoodGroup::AnimalSource,
        FoodGroup::Vegetables,
        FoodGroup::StarchyStaples,
        FoodGroup::Fruits,
        FoodGroup::LegumesNutsSeeds,
        FoodGroup::OilsFats,
    ];

    pub fn code(self) -> &'static str {
        match self {
            FoodGroup::AnimalSource => "ASF",
            FoodGroup::Vegetables => "VEG",
            FoodGroup::StarchyStaples => "SS",
            FoodGroup::Fruits => "FRT",
            FoodGroup::LegumesNutsSeeds => "LNS",
            FoodGroup::OilsFats => "OF",
        }
    }

    /// Position in [`FoodGroup::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for FoodGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for FoodGroup {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let label = s.trim();
        FoodGroup::ALL
            .into_iter()
            .find(|g| g.code().eq_ignore_ascii_case(label))
            .ok_or_else(|| ModelError::UnknownGroup(label.to_string()))
    }
}

/// Benchmark diet scenarios, numbered 1-5 in every output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Scenario {
    LowestCost = 1,
    LowestEmissions = 2,
    MostCommon = 3,
    WeightedRandom = 4,
    UniformRandom = 5,
}

impl Scenario {
    pub const ALL: [Scenario; 5] = [
        Scenario::LowestCost,
        Scenario::LowestEmissions,
        Scenario::MostCommon,
        Scenario::WeightedRandom,
        Scenario::UniformRandom,
    ];

    pub fn id(self) -> u8 {
        self as u8
    }

    pub fn from_id(id: u8) -> Option<Scenario> {
        Scenario::ALL.into_iter().find(|s| s.id() == id)
    }

    pub fn is_monte_carlo(self) -> bool {
        matches!(self, Scenario::WeightedRandom | Scenario::UniformRandom)
    }

    /// Whether the scenario needs food-balance-sheet coverage.
    pub fn needs_fbs(self) -> bool {
        matches!(self, Scenario::MostCommon | Scenario::WeightedRandom)
    }

    pub fn label(self) -> &'static str {
        match self {
            Scenario::LowestCost => "lowest cost items",
            Scenario::LowestEmissions => "lowest emission items",
            Scenario::MostCommon => "most common items",
            Scenario::WeightedRandom => "all items, weighted by use",
            Scenario::UniformRandom => "all items, weighted equally",
        }
    }
}

impl From<Scenario> for u8 {
    fn from(s: Scenario) -> u8 {
        s.id()
    }
}

impl TryFrom<u8> for Scenario {
    type Error = ModelError;

    fn try_from(id: u8) -> Result<Self, Self::Error> {
        Scenario::from_id(id).ok_or_else(|| ModelError::UnknownScenario(id.to_string()))
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

impl FromStr for Scenario {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .parse::<u8>()
            .ok()
            .and_then(Scenario::from_id)
            .ok_or_else(|| ModelError::UnknownScenario(s.trim().to_string()))
    }
}

/// Energy quota and item count for one food group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroupTarget {
    pub energy_kcal_per_day: f64,
    pub item_count: usize,
}

impl GroupTarget {
    /// Energy assigned to each selected item, E_g / k_g.
    pub fn quantity_per_item(&self) -> f64 {
        self.energy_kcal_per_day / self.item_count as f64
    }
}

/// Per-group energy quotas and item counts of the basket.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HdbTargets {
    groups: [GroupTarget; 6],
}

impl HdbTargets {
    /// Builds targets from one entry per group. Every group must appear
    /// exactly once.
    pub fn new(
        entries: impl IntoIterator<Item = (FoodGroup, f64, usize)>,
    ) -> Result<Self, ModelError> {
        let mut slots: [Option<GroupTarget>; 6] = [None; 6];
        for (group, energy, count) in entries {
            if !(energy.is_finite() && energy > 0.0) {
                return Err(invalid(
                    "energy_kcal_per_day",
                    format!("{group}: must be positive and finite, got {energy}"),
                ));
            }
            if count == 0 {
                return Err(invalid(
                    "item_count_k",
                    format!("{group}: must be at least 1"),
                ));
            }
            let slot = &mut slots[group.index()];
            if slot.is_some() {
                return Err(invalid("group", format!("{group} listed more than once")));
            }
            *slot = Some(GroupTarget {
                energy_kcal_per_day: energy,
                item_count: count,
            });
        }
        let mut groups = [GroupTarget {
            energy_kcal_per_day: 0.0,
            item_count: 0,
        }; 6];
        for g in FoodGroup::ALL {
            groups[g.index()] =
                slots[g.index()].ok_or_else(|| invalid("group", format!("{g} missing")))?;
        }
        Ok(HdbTargets { groups })
    }

    pub fn get(&self, group: FoodGroup) -> GroupTarget {
        self.groups[group.index()]
    }

    pub fn quantity_per_item(&self, group: FoodGroup) -> f64 {
        self.get(group).quantity_per_item()
    }

    pub fn item_count(&self, group: FoodGroup) -> usize {
        self.get(group).item_count
    }

    pub fn total_energy(&self) -> f64 {
        self.groups.iter().map(|t| t.energy_kcal_per_day).sum()
    }

    pub fn total_slots(&self) -> usize {
        self.groups.iter().map(|t| t.item_count).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (FoodGroup, GroupTarget)> + '_ {
        FoodGroup::ALL.into_iter().map(|g| (g, self.get(g)))
    }
}

impl Default for HdbTargets {
    fn default() -> Self {
        default_hdb_targets()
    }
}

/// The global Healthy Diet Basket: 11 item slots totalling 2,330 kcal/day.
pub fn default_hdb_targets() -> HdbTargets {
    HdbTargets::new([
        (FoodGroup::StarchyStaples, 1160.0, 2),
        (FoodGroup::LegumesNutsSeeds, 300.0, 1),
        (FoodGroup::Vegetables, 110.0, 3),
        (FoodGroup::Fruits, 160.0, 2),
        (FoodGroup::AnimalSource, 300.0, 2),
        (FoodGroup::OilsFats, 300.0, 1),
    ])
    .expect("default basket is valid")
}

/// One retail item in one country, normalised to per-kcal units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoodItem {
    country_code: String,
    item_id: String,
    display_name: String,
    group: FoodGroup,
    price_ppp_per_kcal: f64,
    emissions_kg_per_kcal: f64,
    kcal_per_100g_edible: Option<f64>,
    fbs_category: Option<String>,
    fbs_category_kcal: Option<f64>,
}

impl FoodItem {
    pub fn new(
        country_code: impl Into<String>,
        item_id: impl Into<String>,
        group: FoodGroup,
        price_ppp_per_kcal: f64,
        emissions_kg_per_kcal: f64,
    ) -> Result<Self, ModelError> {
        let country_code = country_code.into();
        let item_id = item_id.into();
        if country_code.trim().is_empty() {
            return Err(invalid("country_code", "empty"));
        }
        if item_id.trim().is_empty() {
            return Err(invalid("item_id", "empty"));
        }
        if !(price_ppp_per_kcal.is_finite() && price_ppp_per_kcal > 0.0) {
            return Err(invalid(
                "price_ppp_per_kcal",
                format!("must be strictly positive, got {price_ppp_per_kcal}"),
            ));
        }
        if !(emissions_kg_per_kcal.is_finite() && emissions_kg_per_kcal >= 0.0) {
            return Err(invalid(
                "emissions_kg_per_kcal",
                format!("must be non-negative, got {emissions_kg_per_kcal}"),
            ));
        }
        Ok(FoodItem {
            display_name: item_id.clone(),
            country_code,
            item_id,
            group,
            price_ppp_per_kcal,
            emissions_kg_per_kcal,
            kcal_per_100g_edible: None,
            fbs_category: None,
            fbs_category_kcal: None,
        })
    }

    pub fn with_display_name(mut self, name: impl Into<String>) -> Self {
        self.display_name = name.into();
        self
    }

    pub fn with_kcal_density(mut self, kcal_per_100g: f64) -> Result<Self, ModelError> {
        if !(kcal_per_100g.is_finite() && kcal_per_100g > 0.0) {
            return Err(invalid(
                "kcal_per_100g_edible",
                format!("must be positive, got {kcal_per_100g}"),
            ));
        }
        self.kcal_per_100g_edible = Some(kcal_per_100g);
        Ok(self)
    }

    pub fn with_fbs_category(mut self, category: impl Into<String>) -> Self {
        let category = category.into();
        let trimmed = category.trim();
        self.fbs_category = (!trimmed.is_empty()).then(|| trimmed.to_string());
        self
    }

    pub fn with_fbs_kcal(mut self, kcal: Option<f64>) -> Result<Self, ModelError> {
        if let Some(k) = kcal {
            if !(k.is_finite() && k >= 0.0) {
                return Err(invalid(
                    "fbs_category_kcal",
                    format!("must be non-negative, got {k}"),
                ));
            }
        }
        self.fbs_category_kcal = kcal;
        Ok(self)
    }

    pub fn country_code(&self) -> &str {
        &self.country_code
    }
    pub fn item_id(&self) -> &str {
        &self.item_id
    }
    pub fn display_name(&self) -> &str {
        &self.display_name
    }
    pub fn group(&self) -> FoodGroup {
        self.group
    }
    pub fn price_ppp_per_kcal(&self) -> f64 {
        self.price_ppp_per_kcal
    }
    pub fn emissions_kg_per_kcal(&self) -> f64 {
        self.emissions_kg_per_kcal
    }
    pub fn kcal_per_100g_edible(&self) -> Option<f64> {
        self.kcal_per_100g_edible
    }
    pub fn fbs_category(&self) -> Option<&str> {
        self.fbs_category.as_deref()
    }
    /// Food supply of the item's FBS category; `None` means no FBS data.
    pub fn fbs_category_kcal(&self) -> Option<f64> {
        self.fbs_category_kcal
    }
}

/// One item slot in a diet.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Selection {
    pub item_id: String,
    pub group: FoodGroup,
    pub quantity_kcal: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diet {
    pub country_code: String,
    pub scenario: Scenario,
    pub selections: Vec<Selection>,
    /// Monte Carlo draw number, for scenarios 4 and 5.
    pub iteration_index: Option<u32>,
}

impl Diet {
    pub fn total_energy(&self) -> f64 {
        self.selections.iter().map(|s| s.quantity_kcal).sum()
    }

    pub fn group_selections(&self, group: FoodGroup) -> impl Iterator<Item = &Selection> {
        self.selections.iter().filter(move |s| s.group == group)
    }

    /// Checks slot counts, per-item quantities, within-group distinctness
    /// and total energy against `targets`.
    pub fn validate(&self, targets: &HdbTargets) -> Result<(), ModelError> {
        let violation = |group: FoodGroup, reason: String| ModelError::QuotaViolation {
            country: self.country_code.clone(),
            scenario: self.scenario.id(),
            group,
            reason,
        };
        for (group, target) in targets.iter() {
            let picked: Vec<&Selection> = self.group_selections(group).collect();
            if picked.len() != target.item_count {
                return Err(violation(
                    group,
                    format!("{} items, expected {}", picked.len(), target.item_count),
                ));
            }
            let q = target.quantity_per_item();
            if let Some(bad) = picked.iter().find(|s| !close(s.quantity_kcal, q)) {
                return Err(violation(
                    group,
                    format!(
                        "{} has {} kcal, expected {q}",
                        bad.item_id, bad.quantity_kcal
                    ),
                ));
            }
            for (i, a) in picked.iter().enumerate() {
                if picked[i + 1..].iter().any(|b| b.item_id == a.item_id) {
                    return Err(violation(group, format!("{} selected twice", a.item_id)));
                }
            }
        }
        let total = self.total_energy();
        if !close(total, targets.total_energy()) {
            return Err(invalid(
                "selections",
                format!("total energy {total} != {}", targets.total_energy()),
            ));
        }
        Ok(())
    }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * a.abs().max(b.abs()).max(1.0)
}

/// Cost and emissions attributable to one food group.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct GroupMetrics {
    pub cost_ppp_per_day: f64,
    pub emissions_kg_per_day: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DietMetrics {
    pub cost_ppp_per_day: f64,
    pub emissions_kg_per_day: f64,
    per_group: [GroupMetrics; 6],
}

impl DietMetrics {
    /// Totals are derived from the per-group entries.
    pub fn from_groups(per_group: [GroupMetrics; 6]) -> Self {
        DietMetrics {
            cost_ppp_per_day: per_group.iter().map(|g| g.cost_ppp_per_day).sum(),
            emissions_kg_per_day: per_group.iter().map(|g| g.emissions_kg_per_day).sum(),
            per_group,
        }
    }

    pub fn group(&self, group: FoodGroup) -> GroupMetrics {
        self.per_group[group.index()]
    }

    pub fn per_group(&self) -> impl Iterator<Item = (FoodGroup, GroupMetrics)> + '_ {
        FoodGroup::ALL.into_iter().map(|g| (g, self.group(g)))
    }
}

/// A country's daily income quantile function, given as points
/// `(population share, income)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IncomeDistribution {
    country_code: String,
    points: Vec<(f64, f64)>,
}

impl IncomeDistribution {
    pub fn new(
        country_code: impl Into<String>,
        points: Vec<(f64, f64)>,
    ) -> Result<Self, ModelError> {
        if points.len() < 2 {
            return Err(invalid("points", "at least two quantile points required"));
        }
        for (i, &(p, income)) in points.iter().enumerate() {
            if !(p > 0.0 && p <= 1.0) {
                return Err(invalid("population_share", format!("{p} outside (0, 1]")));
            }
            if !(income.is_finite() && income >= 0.0) {
                return Err(invalid(
                    "income_ppp_per_day",
                    format!("{income} is negative"),
                ));
            }
            if i > 0 {
                let (prev_p, prev_income) = points[i - 1];
                if p <= prev_p {
                    return Err(invalid(
                        "population_share",
                        format!("not strictly increasing at {p}"),
                    ));
                }
                if income < prev_income {
                    return Err(invalid(
                        "income_ppp_per_day",
                        format!("decreases at population share {p}"),
                    ));
                }
            }
        }
        Ok(IncomeDistribution {
            country_code: country_code.into(),
            points,
        })
    }

    pub fn country_code(&self) -> &str {
        &self.country_code
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }
}

/// World Bank income classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IncomeClass {
    #[serde(rename = "LIC")]
    Low,
    #[serde(rename = "LMIC")]
    LowerMiddle,
    #[serde(rename = "UMIC")]
    UpperMiddle,
    #[serde(rename = "HIC")]
    High,
}

impl IncomeClass {
    pub const ALL: [IncomeClass; 4] = [
        IncomeClass::Low,
        IncomeClass::LowerMiddle,
        IncomeClass::UpperMiddle,
        IncomeClass::High,
    ];

    pub fn code(self) -> &'static str {
        match self {
            IncomeClass::Low => "LIC",
            IncomeClass::LowerMiddle => "LMIC",
            IncomeClass::UpperMiddle => "UMIC",
            IncomeClass::High => "HIC",
        }
    }

    /// Non-food expenditure share of low-income consumers: second quintile
    /// for LIC/LMIC, first quintile for UMIC/HIC.
    pub fn default_nonfood_share(self) -> f64 {
        match self {
            IncomeClass::Low => 0.37,
            IncomeClass::LowerMiddle => 0.44,
            IncomeClass::UpperMiddle | IncomeClass::High => 0.54,
        }
    }
}

impl fmt::Display for IncomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for IncomeClass {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IncomeClass::ALL
            .into_iter()
            .find(|c| c.code().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ModelError::UnknownIncomeClass(s.trim().to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassParams {
    pub nonfood_share: f64,
    pub poverty_line_ppp_per_day: f64,
}

/// Non-food shares and poverty lines per income class, plus each
/// country's class. Poverty lines have no built-in default.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AffordabilityParams {
    classes: BTreeMap<IncomeClass, ClassParams>,
    country_class: BTreeMap<String, IncomeClass>,
}

impl AffordabilityParams {
    /// `nonfood_share` falls back to the class default when `None`.
    pub fn set_class(
        &mut self,
        class: IncomeClass,
        nonfood_share: Option<f64>,
        poverty_line_ppp_per_day: f64,
    ) -> Result<(), ModelError> {
        let share = nonfood_share.unwrap_or_else(|| class.default_nonfood_share());
        if !(share > 0.0 && share < 1.0) {
            return Err(invalid(
                "nonfood_share",
                format!("{class}: {share} outside (0, 1)"),
            ));
        }
        if !(poverty_line_ppp_per_day.is_finite() && poverty_line_ppp_per_day > 0.0) {
            return Err(invalid(
                "poverty_line_ppp_per_day",
                format!("{class}: must be positive, got {poverty_line_ppp_per_day}"),
            ));
        }
        self.classes.insert(
            class,
            ClassParams {
                nonfood_share: share,
                poverty_line_ppp_per_day,
            },
        );
        Ok(())
    }

    pub fn assign(&mut self, country_code: impl Into<String>, class: IncomeClass) {
        self.country_class.insert(country_code.into(), class);
    }

    pub fn class_params(&self, class: IncomeClass) -> Option<ClassParams> {
        self.classes.get(&class).copied()
    }

    pub fn class_of(&self, country_code: &str) -> Option<IncomeClass> {
        self.country_class.get(country_code).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Protein plus the fifteen micronutrients scored for adequacy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Nutrient {
    Protein,
    Calcium,
    Iron,
    Magnesium,
    Phosphorus,
    Zinc,
    Copper,
    Selenium,
    VitaminC,
    Thiamin,
    Riboflavin,
    Niacin,
    VitaminB6,
    Folate,
    VitaminB12,
    VitaminA,
}

impl Nutrient {
    pub const ALL: [Nutrient; 16] = [
        Nutrient::Protein,
        Nutrient::Calcium,
        Nutrient::Iron,
        Nutrient::Magnesium,
        Nutrient::Phosphorus,
        Nutrient::Zinc,
        Nutrient::Copper,
        Nutrient::Selenium,
        Nutrient::VitaminC,
        Nutrient::Thiamin,
        Nutrient::Riboflavin,
        Nutrient::Niacin,
        Nutrient::VitaminB6,
        Nutrient::Folate,
        Nutrient::VitaminB12,
        Nutrient::VitaminA,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Nutrient::Protein => "protein",
            Nutrient::Calcium => "calcium",
            Nutrient::Iron => "iron",
            Nutrient::Magnesium => "magnesium",
            Nutrient::Phosphorus => "phosphorus",
            Nutrient::Zinc => "zinc",
            Nutrient::Copper => "copper",
            Nutrient::Selenium => "selenium",
            Nutrient::VitaminC => "vitamin_c",
            Nutrient::Thiamin => "thiamin",
            Nutrient::Riboflavin => "riboflavin",
            Nutrient::Niacin => "niacin",
            Nutrient::VitaminB6 => "vitamin_b6",
            Nutrient::Folate => "folate",
            Nutrient::VitaminB12 => "vitamin_b12",
            Nutrient::VitaminA => "vitamin_a",
        }
    }
}

impl fmt::Display for Nutrient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Nutrient {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .trim()
            .to_ascii_lowercase()
            .chars()
            .map(|c| if c == ' ' || c == '-' { '_' } else { c })
            .collect();
        let norm = if norm == "phosphorous" {
            "phosphorus".to_string()
        } else {
            norm
        };
        Nutrient::ALL
            .into_iter()
            .find(|n| n.code() == norm)
            .ok_or_else(|| ModelError::UnknownNutrient(s.trim().to_string()))
    }
}

/// Nutrient content of one item, per 100 g edible portion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NutrientProfile {
    item_id: String,
    amounts: BTreeMap<Nutrient, f64>,
}

impl NutrientProfile {
    pub fn new(
        item_id: impl Into<String>,
        amounts: impl IntoIterator<Item = (Nutrient, f64)>,
    ) -> Result<Self, ModelError> {
        let mut map = BTreeMap::new();
        for (n, a) in amounts {
            if !(a.is_finite() && a >= 0.0) {
                return Err(invalid(
                    "amount_per_100g_edible",
                    format!("{n}: {a} is negative"),
                ));
            }
            map.insert(n, a);
        }
        Ok(NutrientProfile {
            item_id: item_id.into(),
            amounts: map,
        })
    }

    pub fn item_id(&self) -> &str {
        &self.item_id
    }

    /// Missing nutrients count as zero content.
    pub fn amount(&self, nutrient: Nutrient) -> f64 {
        self.amounts.get(&nutrient).copied().unwrap_or(0.0)
    }
}

/// Lower-bound requirements of a representative adult.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct NutrientRequirements {
    bounds: BTreeMap<Nutrient, f64>,
}

impl NutrientRequirements {
    pub fn new(bounds: impl IntoIterator<Item = (Nutrient, f64)>) -> Result<Self, ModelError> {
        let mut map = BTreeMap::new();
        for (n, b) in bounds {
            if !(b.is_finite() && b > 0.0) {
                return Err(invalid(
                    "requirement",
                    format!("{n}: must be positive, got {b}"),
                ));
            }
            map.insert(n, b);
        }
        Ok(NutrientRequirements { bounds: map })
    }

    pub fn get(&self, nutrient: Nutrient) -> Option<f64> {
        self.bounds.get(&nutrient).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }
}
