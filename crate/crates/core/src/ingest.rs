//! CSV and config ingestion.
//!
//! Raw retail records are converted to PPP dollars per kcal and kg CO2e per
//! kcal, joined with food-balance-sheet supply, and grouped per country.
//! Rows that violate a field invariant are dropped and recorded in the
//! [`ValidationReport`]; structural problems (bad CSV, duplicate keys) are
//! fatal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs::File;
use std::io::Read;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::model::{
    AffordabilityParams, FoodGroup, FoodItem, HdbTargets, IncomeClass, IncomeDistribution,
    ModelError, Nutrient, NutrientProfile, NutrientRequirements,
};

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}: malformed CSV at line {line}: {message}")]
    Malformed {
        file: String,
        line: u64,
        message: String,
    },
    #[error("{file}: missing required column {column:?}")]
    MissingColumn { file: String, column: String },
    #[error("{file}: duplicate key {key} at line {line}")]
    Duplicate {
        file: String,
        key: String,
        line: u64,
    },
    #[error("config {file}: {message}")]
    Config { file: String, message: String },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Machine-readable reason a row was dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DropReason {
    PriceNonPositive,
    UnitWeightNonPositive,
    EdibleFractionOutOfRange,
    KcalDensityNonPositive,
    EmissionFactorNegative,
    UnknownFoodGroup,
    MissingPppFactor,
    PppFactorNonPositive,
    FbsKcalNegative,
    UnknownNutrient,
    NutrientAmountNegative,
    IncomeInvalid,
}

impl DropReason {
    pub fn code(self) -> &'static str {
        match self {
            DropReason::PriceNonPositive => "price_non_positive",
            DropReason::UnitWeightNonPositive => "unit_weight_non_positive",
            DropReason::EdibleFractionOutOfRange => "edible_fraction_out_of_range",
            DropReason::KcalDensityNonPositive => "kcal_density_non_positive",
            DropReason::EmissionFactorNegative => "emission_factor_negative",
            DropReason::UnknownFoodGroup => "unknown_food_group",
            DropReason::MissingPppFactor => "missing_ppp_factor",
            DropReason::PppFactorNonPositive => "ppp_factor_non_positive",
            DropReason::FbsKcalNegative => "fbs_kcal_negative",
            DropReason::UnknownNutrient => "unknown_nutrient",
            DropReason::NutrientAmountNegative => "nutrient_amount_negative",
            DropReason::IncomeInvalid => "income_invalid",
        }
    }

    pub fn message(self) -> &'static str {
        match self {
            DropReason::PriceNonPositive => "price_local must be strictly positive",
            DropReason::UnitWeightNonPositive => "unit_net_weight_kg must be strictly positive",
            DropReason::EdibleFractionOutOfRange => "edible_fraction out of range",
            DropReason::KcalDensityNonPositive => "kcal_per_100g_edible must be strictly positive",
            DropReason::EmissionFactorNegative => "emission_factor_kg_per_kg is negative",
            DropReason::UnknownFoodGroup => "unknown food group label",
            DropReason::MissingPppFactor => "no PPP factor for country",
            DropReason::PppFactorNonPositive => "ppp_factor must be strictly positive",
            DropReason::FbsKcalNegative => "kcal_per_capita_per_day is negative",
            DropReason::UnknownNutrient => "unknown nutrient",
            DropReason::NutrientAmountNegative => "amount_per_100g_edible is negative",
            DropReason::IncomeInvalid => "income distribution violates quantile invariants",
        }
    }
}

impl fmt::Display for DropReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.message())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DroppedRow {
    pub file: String,
    pub line: u64,
    pub key: String,
    pub reason: DropReason,
}

/// Rows discarded during ingestion plus FBS coverage per country.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ValidationReport {
    pub dropped: Vec<DroppedRow>,
    /// country -> (items, items with FBS supply data)
    pub fbs_coverage: BTreeMap<String, (usize, usize)>,
}

impl ValidationReport {
    fn drop_row(&mut self, file: &str, line: u64, key: String, reason: DropReason) {
        self.dropped.push(DroppedRow {
            file: file.to_string(),
            line,
            key,
            reason,
        });
    }
}

/// One items.csv row before normalisation.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct RawItemRecord {
    pub country_code: String,
    pub item_id: String,
    #[serde(default)]
    pub display_name: String,
    #[serde(rename = "food_group")]
    pub group_label: String,
    pub price_local: f64,
    pub unit_net_weight_kg: f64,
    pub edible_fraction: f64,
    pub kcal_per_100g_edible: f64,
    pub emission_factor_kg_per_kg: f64,
    #[serde(default)]
    pub fbs_category: Option<String>,
}

impl RawItemRecord {
    /// First violated field invariant, if any.
    pub fn check(&self) -> Result<FoodGroup, DropReason> {
        if !(self.price_local.is_finite() && self.price_local > 0.0) {
            return Err(DropReason::PriceNonPositive);
        }
        if !(self.unit_net_weight_kg.is_finite() && self.unit_net_weight_kg > 0.0) {
            return Err(DropReason::UnitWeightNonPositive);
        }
        if !(self.edible_fraction > 0.0 && self.edible_fraction <= 1.0) {
            return Err(DropReason::EdibleFractionOutOfRange);
        }
        if !(self.kcal_per_100g_edible.is_finite() && self.kcal_per_100g_edible > 0.0) {
            return Err(DropReason::KcalDensityNonPositive);
        }
        if !(self.emission_factor_kg_per_kg.is_finite() && self.emission_factor_kg_per_kg >= 0.0) {
            return Err(DropReason::EmissionFactorNegative);
        }
        self.group_label
            .parse::<FoodGroup>()
            .map_err(|_| DropReason::UnknownFoodGroup)
    }

    /// kcal in one kg of food as purchased.
    fn kcal_per_kg_as_purchased(&self) -> f64 {
        self.edible_fraction * self.kcal_per_100g_edible * 10.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PppFactor {
    pub ppp_local_per_international_dollar: f64,
}

/// Local price per unit sold to PPP dollars per kcal.
pub fn price_to_ppp_per_kcal(record: &RawItemRecord, ppp: PppFactor) -> f64 {
    let price_ppp = record.price_local / ppp.ppp_local_per_international_dollar;
    price_ppp / (record.unit_net_weight_kg * record.kcal_per_kg_as_purchased())
}

/// Emission factor per kg as purchased to kg CO2e per kcal.
pub fn emissions_to_kg_per_kcal(record: &RawItemRecord) -> f64 {
    record.emission_factor_kg_per_kg / record.kcal_per_kg_as_purchased()
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct FbsRecord {
    pub country_code: String,
    pub fbs_category: String,
    pub kcal_per_capita_per_day: f64,
}

/// Joins each item to its category's food supply. Items without a category
/// or without a matching record keep `None`.
pub fn attach_fbs_shares(items: Vec<FoodItem>, fbs: &[FbsRecord]) -> Vec<FoodItem> {
    let supply: BTreeMap<(&str, &str), f64> = fbs
        .iter()
        .map(|r| {
            (
                (r.country_code.as_str(), r.fbs_category.as_str()),
                r.kcal_per_capita_per_day,
            )
        })
        .collect();
    items
        .into_iter()
        .map(|item| {
            let kcal = item
                .fbs_category()
                .and_then(|c| supply.get(&(item.country_code(), c)).copied());
            item.with_fbs_kcal(kcal)
                .expect("FBS records are validated before joining")
        })
        .collect()
}

/// All normalised items of one country.
#[derive(Debug, Clone, PartialEq)]
pub struct CountryDataset {
    pub country_code: String,
    pub ppp_factor: Option<f64>,
    /// Sorted by (group, item_id).
    pub items: Vec<FoodItem>,
}

impl CountryDataset {
    pub fn new(country_code: impl Into<String>, mut items: Vec<FoodItem>) -> Self {
        items.sort_by(|a, b| (a.group(), a.item_id()).cmp(&(b.group(), b.item_id())));
        CountryDataset {
            country_code: country_code.into(),
            ppp_factor: None,
            items,
        }
    }

    pub fn group_items(&self, group: FoodGroup) -> impl Iterator<Item = &FoodItem> {
        self.items.iter().filter(move |i| i.group() == group)
    }

    pub fn item(&self, item_id: &str) -> Option<&FoodItem> {
        self.items.iter().find(|i| i.item_id() == item_id)
    }
}

/// Engine configuration: basket override, affordability parameters and
/// nutrient requirements.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    pub targets: HdbTargets,
    pub affordability: AffordabilityParams,
    pub requirements: NutrientRequirements,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    hdb: BTreeMap<String, RawGroupTarget>,
    #[serde(default)]
    affordability: RawAffordability,
    #[serde(default)]
    nutrient_requirements: BTreeMap<String, f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroupTarget {
    energy_kcal: f64,
    items: usize,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAffordability {
    #[serde(default)]
    classes: BTreeMap<String, RawClass>,
    #[serde(default)]
    countries: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClass {
    poverty_line: f64,
    nonfood_share: Option<f64>,
}

impl Config {
    /// Parses the TOML config. Every section is optional; `[hdb]` entries
    /// override individual groups of the default basket.
    pub fn parse(text: &str, file: &str) -> Result<Config, IngestError> {
        let cfg_err = |message: String| IngestError::Config {
            file: file.to_string(),
            message,
        };
        let raw: RawConfig = toml::from_str(text).map_err(|e| cfg_err(e.to_string()))?;

        let defaults = HdbTargets::default();
        let mut entries: BTreeMap<FoodGroup, (f64, usize)> = defaults
            .iter()
            .map(|(g, t)| (g, (t.energy_kcal_per_day, t.item_count)))
            .collect();
        for (label, t) in &raw.hdb {
            let g: FoodGroup = label
                .parse()
                .map_err(|e: ModelError| cfg_err(e.to_string()))?;
            entries.insert(g, (t.energy_kcal, t.items));
        }
        let targets = HdbTargets::new(entries.into_iter().map(|(g, (e, k))| (g, e, k)))?;

        let mut affordability = AffordabilityParams::default();
        for (label, c) in &raw.affordability.classes {
            let class: IncomeClass = label
                .parse()
                .map_err(|e: ModelError| cfg_err(e.to_string()))?;
            affordability.set_class(class, c.nonfood_share, c.poverty_line)?;
        }
        for (country, label) in &raw.affordability.countries {
            let class: IncomeClass = label
                .parse()
                .map_err(|e: ModelError| cfg_err(e.to_string()))?;
            affordability.assign(country.clone(), class);
        }

        let mut bounds = Vec::new();
        for (label, v) in &raw.nutrient_requirements {
            let n: Nutrient = label
                .parse()
                .map_err(|e: ModelError| cfg_err(e.to_string()))?;
            bounds.push((n, *v));
        }
        let requirements = NutrientRequirements::new(bounds)?;

        Ok(Config {
            targets,
            affordability,
            requirements,
        })
    }
}

/// Locations of the input files.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct InputPaths {
    pub items: PathBuf,
    pub ppp: PathBuf,
    pub fbs: PathBuf,
    pub nutrients: Option<PathBuf>,
    pub income: Option<PathBuf>,
    pub config: Option<PathBuf>,
}

impl InputPaths {
    /// Every file that exists, in a fixed order, for digests.
    pub fn all(&self) -> Vec<&Path> {
        let mut v: Vec<&Path> = vec![&self.items, &self.ppp, &self.fbs];
        v.extend(self.nutrients.as_deref());
        v.extend(self.income.as_deref());
        v.extend(self.config.as_deref());
        v
    }
}

/// In-memory input texts, for callers that do not read from disk.
#[derive(Debug, Clone, Copy, Default)]
pub struct InputTexts<'a> {
    pub items: &'a str,
    pub ppp: &'a str,
    pub fbs: &'a str,
    pub nutrients: Option<&'a str>,
    pub income: Option<&'a str>,
    pub config: Option<&'a str>,
}

/// Everything loaded from one set of inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub countries: BTreeMap<String, CountryDataset>,
    pub config: Config,
    pub nutrients: Option<BTreeMap<String, NutrientProfile>>,
    pub income: Option<BTreeMap<String, IncomeDistribution>>,
    pub report: ValidationReport,
}

impl Dataset {
    pub fn targets(&self) -> &HdbTargets {
        &self.config.targets
    }
}

fn read_file(path: &Path) -> Result<String, IngestError> {
    let mut text = String::new();
    File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|source| IngestError::Io {
            path: path.display().to_string(),
            source,
        })?;
    Ok(text)
}

fn file_label(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Reads every input file and normalises it.
pub fn load_dataset(paths: &InputPaths) -> Result<Dataset, IngestError> {
    let items = read_file(&paths.items)?;
    let ppp = read_file(&paths.ppp)?;
    let fbs = read_file(&paths.fbs)?;
    let nutrients = paths.nutrients.as_deref().map(read_file).transpose()?;
    let income = paths.income.as_deref().map(read_file).transpose()?;
    let config = paths.config.as_deref().map(read_file).transpose()?;
    let names = FileNames {
        items: file_label(&paths.items),
        ppp: file_label(&paths.ppp),
        fbs: file_label(&paths.fbs),
        nutrients: paths
            .nutrients
            .as_deref()
            .map(file_label)
            .unwrap_or_default(),
        income: paths.income.as_deref().map(file_label).unwrap_or_default(),
        config: paths.config.as_deref().map(file_label).unwrap_or_default(),
    };
    parse_inputs(
        InputTexts {
            items: &items,
            ppp: &ppp,
            fbs: &fbs,
            nutrients: nutrients.as_deref(),
            income: income.as_deref(),
            config: config.as_deref(),
        },
        &names,
    )
}

/// Same as [`load_dataset`], from strings.
pub fn load_from_texts(texts: InputTexts<'_>) -> Result<Dataset, IngestError> {
    parse_inputs(texts, &FileNames::default())
}

struct FileNames {
    items: String,
    ppp: String,
    fbs: String,
    nutrients: String,
    income: String,
    config: String,
}

impl Default for FileNames {
    fn default() -> Self {
        FileNames {
            items: "items.csv".into(),
            ppp: "ppp.csv".into(),
            fbs: "fbs.csv".into(),
            nutrients: "nutrients.csv".into(),
            income: "income.csv".into(),
            config: "config.toml".into(),
        }
    }
}

fn parse_inputs(texts: InputTexts<'_>, names: &FileNames) -> Result<Dataset, IngestError> {
    let config = match texts.config {
        Some(t) => Config::parse(t, &names.config)?,
        None => Config::default(),
    };
    let mut report = ValidationReport::default();

    let ppp = parse_ppp(texts.ppp, &names.ppp, &mut report)?;
    let fbs = parse_fbs(texts.fbs, &names.fbs, &mut report)?;
    let raw = parse_records::<RawItemRecord>(
        texts.items,
        &names.items,
        &[
            "country_code",
            "item_id",
            "display_name",
            "food_group",
            "price_local",
            "unit_net_weight_kg",
            "edible_fraction",
            "kcal_per_100g_edible",
            "emission_factor_kg_per_kg",
            "fbs_category",
        ],
    )?;

    let mut seen = BTreeSet::new();
    for (line, r) in &raw {
        if !seen.insert((r.country_code.clone(), r.item_id.clone())) {
            return Err(IngestError::Duplicate {
                file: names.items.clone(),
                key: format!("({}, {})", r.country_code, r.item_id),
                line: *line,
            });
        }
    }

    let mut by_country: BTreeMap<String, (Option<f64>, Vec<FoodItem>)> = BTreeMap::new();
    for (line, r) in raw {
        let key = format!("{}/{}", r.country_code, r.item_id);
        let entry = by_country
            .entry(r.country_code.clone())
            .or_insert_with(|| (ppp.get(&r.country_code).copied(), Vec::new()));
        let group = match r.check() {
            Ok(g) => g,
            Err(reason) => {
                report.drop_row(&names.items, line, key, reason);
                continue;
            }
        };
        let Some(factor) = entry.0 else {
            report.drop_row(&names.items, line, key, DropReason::MissingPppFactor);
            continue;
        };
        let price = price_to_ppp_per_kcal(
            &r,
            PppFactor {
                ppp_local_per_international_dollar: factor,
            },
        );
        let emissions = emissions_to_kg_per_kcal(&r);
        let mut item = FoodItem::new(&r.country_code, &r.item_id, group, price, emissions)?
            .with_kcal_density(r.kcal_per_100g_edible)?;
        if !r.display_name.trim().is_empty() {
            item = item.with_display_name(r.display_name.trim());
        }
        if let Some(cat) = r.fbs_category.as_deref() {
            item = item.with_fbs_category(cat);
        }
        entry.1.push(item);
    }

    let mut countries = BTreeMap::new();
    for (code, (factor, items)) in by_country {
        let items = attach_fbs_shares(items, &fbs);
        let covered = items
            .iter()
            .filter(|i| i.fbs_category_kcal().is_some())
            .count();
        report
            .fbs_coverage
            .insert(code.clone(), (items.len(), covered));
        let mut ds = CountryDataset::new(code.clone(), items);
        ds.ppp_factor = factor;
        countries.insert(code, ds);
    }

    let nutrients = texts
        .nutrients
        .map(|t| parse_nutrients(t, &names.nutrients, &mut report))
        .transpose()?;
    let income = texts
        .income
        .map(|t| parse_income(t, &names.income, &mut report))
        .transpose()?;

    Ok(Dataset {
        countries,
        config,
        nutrients,
        income,
        report,
    })
}

/// Deserialises every record, pairing it with its 1-based line number.
fn parse_records<T: serde::de::DeserializeOwned>(
    text: &str,
    file: &str,
    required: &[&str],
) -> Result<Vec<(u64, T)>, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let malformed = |e: csv::Error| IngestError::Malformed {
        file: file.to_string(),
        line: e.position().map(|p| p.line()).unwrap_or(1),
        message: e.to_string(),
    };
    let headers = reader.headers().map_err(malformed)?.clone();
    for col in required {
        if !headers.iter().any(|h| h == *col) {
            return Err(IngestError::MissingColumn {
                file: file.to_string(),
                column: col.to_string(),
            });
        }
    }
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record.map_err(malformed)?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let value: T = record
            .deserialize(Some(&headers))
            .map_err(|e| IngestError::Malformed {
                file: file.to_string(),
                line,
                message: e.to_string(),
            })?;
        out.push((line, value));
    }
    Ok(out)
}

fn parse_ppp(
    text: &str,
    file: &str,
    report: &mut ValidationReport,
) -> Result<BTreeMap<String, f64>, IngestError> {
    #[derive(Deserialize)]
    struct Row {
        country_code: String,
        ppp_factor: f64,
    }
    let mut out = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for (line, r) in parse_records::<Row>(text, file, &["country_code", "ppp_factor"])? {
        if !seen.insert(r.country_code.clone()) {
            return Err(IngestError::Duplicate {
                file: file.to_string(),
                key: r.country_code,
                line,
            });
        }
        if !(r.ppp_factor.is_finite() && r.ppp_factor > 0.0) {
            report.drop_row(file, line, r.country_code, DropReason::PppFactorNonPositive);
            continue;
        }
        out.insert(r.country_code, r.ppp_factor);
    }
    Ok(out)
}

fn parse_fbs(
    text: &str,
    file: &str,
    report: &mut ValidationReport,
) -> Result<Vec<FbsRecord>, IngestError> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let rows = parse_records::<FbsRecord>(
        text,
        file,
        &["country_code", "fbs_category", "kcal_per_capita_per_day"],
    )?;
    for (line, r) in rows {
        let key = format!("{}/{}", r.country_code, r.fbs_category);
        if !seen.insert((r.country_code.clone(), r.fbs_category.clone())) {
            return Err(IngestError::Duplicate {
                file: file.to_string(),
                key,
                line,
            });
        }
        if !(r.kcal_per_capita_per_day.is_finite() && r.kcal_per_capita_per_day >= 0.0) {
            report.drop_row(file, line, key, DropReason::FbsKcalNegative);
            continue;
        }
        out.push(r);
    }
    Ok(out)
}

fn parse_nutrients(
    text: &str,
    file: &str,
    report: &mut ValidationReport,
) -> Result<BTreeMap<String, NutrientProfile>, IngestError> {
    #[derive(Deserialize)]
    struct Row {
        item_id: String,
        nutrient: String,
        amount_per_100g_edible: f64,
    }
    let mut amounts: BTreeMap<String, BTreeMap<Nutrient, f64>> = BTreeMap::new();
    let rows = parse_records::<Row>(
        text,
        file,
        &["item_id", "nutrient", "amount_per_100g_edible"],
    )?;
    for (line, r) in rows {
        let key = format!("{}/{}", r.item_id, r.nutrient);
        let Ok(n) = r.nutrient.parse::<Nutrient>() else {
            report.drop_row(file, line, key, DropReason::UnknownNutrient);
            continue;
        };
        if !(r.amount_per_100g_edible.is_finite() && r.amount_per_100g_edible >= 0.0) {
            report.drop_row(file, line, key, DropReason::NutrientAmountNegative);
            continue;
        }
        let per_item = amounts.entry(r.item_id).or_default();
        if per_item.insert(n, r.amount_per_100g_edible).is_some() {
            return Err(IngestError::Duplicate {
                file: file.to_string(),
                key,
                line,
            });
        }
    }
    amounts
        .into_iter()
        .map(|(id, a)| Ok((id.clone(), NutrientProfile::new(id, a)?)))
        .collect()
}

fn parse_income(
    text: &str,
    file: &str,
    report: &mut ValidationReport,
) -> Result<BTreeMap<String, IncomeDistribution>, IngestError> {
    #[derive(Deserialize)]
    struct Row {
        country_code: String,
        percentile: f64,
        income_ppp_per_day: f64,
    }
    let rows = parse_records::<Row>(
        text,
        file,
        &["country_code", "percentile", "income_ppp_per_day"],
    )?;
    let mut grouped: BTreeMap<String, (u64, Vec<(f64, f64)>)> = BTreeMap::new();
    for (line, r) in rows {
        let entry = grouped.entry(r.country_code).or_insert((line, Vec::new()));
        entry.1.push((r.percentile / 100.0, r.income_ppp_per_day));
    }
    let mut out = BTreeMap::new();
    for (country, (line, mut points)) in grouped {
        points.sort_by(|a, b| a.0.total_cmp(&b.0));
        match IncomeDistribution::new(country.clone(), points) {
            Ok(d) => {
                out.insert(country, d);
            }
            Err(_) => report.drop_row(file, line, country, DropReason::IncomeInvalid),
        }
    }
    Ok(out)
}
