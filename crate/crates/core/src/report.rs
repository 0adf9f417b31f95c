//! CSV tables and their metadata sidecars.
//!
//! Tables are plain rows of strings so that output bytes depend only on the
//! computed values. Floats use Rust's shortest round-trip formatting.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::adequacy::nutrient_adequacy;
use crate::afford::{affordability_threshold, country_pua};
use crate::engine::{BenchmarkBatch, EligibilityMatrix, SimulationBatch, Skipped};
use crate::ingest::{Dataset, ValidationReport};
use crate::metrics::item_share_table;
use crate::model::{FoodGroup, HdbTargets, Scenario};
use crate::simulate::{SimulationRun, GENERATOR_ID, GENERATOR_VERSION};
use crate::stats::{format_p_value, summarize, welch_t_test, Summary};

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: impl Into<String>, header: &[&str]) -> Self {
        Table {
            name: name.into(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len(), "{}", self.name);
        self.rows.push(row);
    }

    pub fn file_name(&self) -> String {
        format!("{}.csv", self.name)
    }

    pub fn to_csv(&self) -> Vec<u8> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        w.into_inner().expect("in-memory flush")
    }

    /// Column `name` of every row.
    pub fn column(&self, name: &str) -> Vec<&str> {
        let i = self
            .header
            .iter()
            .position(|h| h == name)
            .unwrap_or_else(|| panic!("{}: no column {name}", self.name));
        self.rows.iter().map(|r| r[i].as_str()).collect()
    }

    /// Writes `<name>.csv` and `<name>.csv.meta.json` into `dir`.
    pub fn write(&self, dir: &Path, meta: &RunMetadata) -> io::Result<()> {
        let bytes = self.to_csv();
        fs::write(dir.join(self.file_name()), &bytes)?;
        let sidecar = Sidecar {
            file: self.file_name(),
            sha256: sha256_hex(&bytes),
            rows: self.rows.len(),
            run: meta,
        };
        let mut json = serde_json::to_vec_pretty(&sidecar).map_err(io::Error::other)?;
        json.push(b'\n');
        fs::write(dir.join(format!("{}.meta.json", self.file_name())), json)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn num(x: f64) -> String {
    format!("{x}")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

/// Everything needed to replicate a run. Contains no timestamps, paths or
/// thread counts, so identical inputs give identical sidecars.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMetadata {
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub hdb_targets: Vec<(FoodGroup, f64, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<Generator>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Generator {
    pub id: &'static str,
    pub version: u32,
}

impl RunMetadata {
    pub fn new(command: &str, inputs: Vec<InputDigest>, targets: &HdbTargets) -> Self {
        RunMetadata {
            tool: "hdb-bench",
            tool_version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            inputs,
            hdb_targets: targets
                .iter()
                .map(|(g, t)| (g, t.energy_kcal_per_day, t.item_count))
                .collect(),
            seed: None,
            iterations: None,
            generator: None,
        }
    }

    pub fn with_simulation(mut self, seed: u64, iterations: u32) -> Self {
        self.seed = Some(seed);
        self.iterations = Some(iterations);
        self.generator = Some(Generator {
            id: GENERATOR_ID,
            version: GENERATOR_VERSION,
        });
        self
    }
}

#[derive(Serialize)]
struct Sidecar<'a> {
    file: String,
    sha256: String,
    rows: usize,
    run: &'a RunMetadata,
}

pub fn eligibility_table(matrix: &EligibilityMatrix) -> Table {
    let mut t = Table::new(
        "eligibility",
        &[
            "country_code",
            "scenario_1",
            "scenario_2",
            "scenario_3",
            "scenario_4",
            "scenario_5",
        ],
    );
    for (country, row) in matrix {
        let mut r = vec![country.clone()];
        r.extend(
            row.iter()
                .map(|e| e.clone().unwrap_or_else(|| "eligible".to_string())),
        );
        t.push(r);
    }
    t
}

pub fn dropped_rows_table(report: &ValidationReport) -> Table {
    let mut t = Table::new(
        "dropped_rows",
        &["file", "line", "key", "reason_code", "reason"],
    );
    for d in &report.dropped {
        t.push(vec![
            d.file.clone(),
            d.line.to_string(),
            d.key.clone(),
            d.reason.code().to_string(),
            d.reason.message().to_string(),
        ]);
    }
    t
}

pub fn skipped_table(skipped: &[Skipped]) -> Table {
    let mut t = Table::new("skipped", &["country_code", "scenario", "reason"]);
    for s in skipped {
        t.push(vec![
            s.country_code.clone(),
            s.scenario.to_string(),
            s.reason.clone(),
        ]);
    }
    t
}

/// One row per diet slot.
pub fn diets_table(batch: &BenchmarkBatch) -> Table {
    let mut t = Table::new(
        "diets",
        &[
            "country_code",
            "scenario",
            "group",
            "item_id",
            "quantity_kcal",
        ],
    );
    for r in &batch.results {
        for s in &r.diet.selections {
            t.push(vec![
                r.diet.country_code.clone(),
                r.diet.scenario.to_string(),
                s.group.to_string(),
                s.item_id.clone(),
                num(s.quantity_kcal),
            ]);
        }
    }
    t
}

fn metrics_header() -> Vec<String> {
    let mut h: Vec<String> = [
        "country_code",
        "scenario",
        "cost_ppp_per_day",
        "emissions_kg_per_day",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    h.extend(FoodGroup::ALL.iter().map(|g| format!("cost_{g}")));
    h.extend(FoodGroup::ALL.iter().map(|g| format!("emissions_{g}")));
    h
}

pub fn metrics_table(batch: &BenchmarkBatch) -> Table {
    let mut t = Table {
        name: "metrics".into(),
        header: metrics_header(),
        rows: Vec::new(),
    };
    for r in &batch.results {
        let m = &r.metrics;
        let mut row = vec![
            r.diet.country_code.clone(),
            r.diet.scenario.to_string(),
            num(m.cost_ppp_per_day),
            num(m.emissions_kg_per_day),
        ];
        row.extend(m.per_group().map(|(_, g)| num(g.cost_ppp_per_day)));
        row.extend(m.per_group().map(|(_, g)| num(g.emissions_kg_per_day)));
        t.push(row);
    }
    t
}

fn summary_cols(prefix: &str) -> Vec<String> {
    ["mean", "sd", "p2_5", "p25", "p50", "p75", "p97_5"]
        .iter()
        .map(|c| format!("{prefix}_{c}"))
        .collect()
}

fn summary_values(s: &Summary) -> [String; 7] {
    [s.mean, s.sd, s.p2_5, s.p25, s.p50, s.p75, s.p97_5].map(num)
}

/// Per-country Monte Carlo summaries (cost and emissions).
pub fn simulation_summary_table(batch: &SimulationBatch, scenario: Scenario) -> Table {
    let mut header: Vec<String> = ["country_code", "scenario", "iterations"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    header.extend(summary_cols("cost"));
    header.extend(summary_cols("emissions"));
    let mut t = Table {
        name: format!("simulation_summary_s{}", scenario.id()),
        header,
        rows: Vec::new(),
    };
    for run in &batch.runs {
        let s = &run.summary;
        let mut row = vec![
            s.country_code.clone(),
            s.scenario.to_string(),
            s.iterations.to_string(),
        ];
        row.extend(summary_values(&s.cost));
        row.extend(summary_values(&s.emissions));
        t.push(row);
    }
    t
}

pub fn draws_table(batch: &SimulationBatch, scenario: Scenario) -> Table {
    let mut t = Table::new(
        format!("draws_s{}", scenario.id()),
        &[
            "country_code",
            "scenario",
            "iteration",
            "cost_ppp_per_day",
            "emissions_kg_per_day",
        ],
    );
    for run in &batch.runs {
        for d in &run.draws {
            t.push(vec![
                run.summary.country_code.clone(),
                run.summary.scenario.to_string(),
                d.iteration.to_string(),
                num(d.metrics.cost_ppp_per_day),
                num(d.metrics.emissions_kg_per_day),
            ]);
        }
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Cost,
    Emissions,
}

/// Observations per scenario: one per country for 1-3, every draw for 4-5.
/// `group` restricts to one food group's contribution.
fn observations(
    benchmarks: &BenchmarkBatch,
    simulations: &[&SimulationBatch],
    measure: Measure,
    group: Option<FoodGroup>,
) -> BTreeMap<Scenario, Vec<f64>> {
    let pick = |m: &crate::model::DietMetrics| match (measure, group) {
        (Measure::Cost, None) => m.cost_ppp_per_day,
        (Measure::Emissions, None) => m.emissions_kg_per_day,
        (Measure::Cost, Some(g)) => m.group(g).cost_ppp_per_day,
        (Measure::Emissions, Some(g)) => m.group(g).emissions_kg_per_day,
    };
    let mut out: BTreeMap<Scenario, Vec<f64>> = BTreeMap::new();
    for r in &benchmarks.results {
        out.entry(r.diet.scenario)
            .or_default()
            .push(pick(&r.metrics));
    }
    for batch in simulations {
        for run in &batch.runs {
            let v = out.entry(run.summary.scenario).or_default();
            v.extend(run.draws.iter().map(|d| pick(&d.metrics)));
        }
    }
    out
}

/// Cross-country summary per scenario with a Welch test against diet 1.
pub fn scenario_summary_table(
    name: &str,
    benchmarks: &BenchmarkBatch,
    simulations: &[&SimulationBatch],
    measure: Measure,
) -> Table {
    let mut t = Table::new(
        name,
        &[
            "scenario",
            "obs",
            "mean",
            "sd",
            "p25",
            "p50",
            "p75",
            "t_vs_diet1",
            "df",
            "p_value",
            "p_value_exact",
        ],
    );
    let obs = observations(benchmarks, simulations, measure, None);
    let baseline = obs.get(&Scenario::LowestCost);
    for (scenario, values) in &obs {
        let s = summarize(values).expect("non-empty");
        let test = match (scenario, baseline) {
            (Scenario::LowestCost, _) | (_, None) => None,
            (_, Some(base)) => welch_t_test(values, base).ok(),
        };
        let (tv, df, p, p_exact) = match test {
            Some(w) => (
                num(w.t),
                num(w.degrees_of_freedom),
                format_p_value(w.two_sided_p),
                num(w.two_sided_p),
            ),
            None => Default::default(),
        };
        t.push(vec![
            scenario.to_string(),
            s.n.to_string(),
            num(s.mean),
            num(s.sd),
            num(s.p25),
            num(s.p50),
            num(s.p75),
            tv,
            df,
            p,
            p_exact,
        ]);
    }
    t
}

/// Per food group summary per scenario.
pub fn group_summary_table(
    name: &str,
    benchmarks: &BenchmarkBatch,
    simulations: &[&SimulationBatch],
    measure: Measure,
) -> Table {
    let mut t = Table::new(
        name,
        &[
            "scenario", "group", "obs", "mean", "sd", "p25", "p50", "p75",
        ],
    );
    let per_group: Vec<(FoodGroup, BTreeMap<Scenario, Vec<f64>>)> = FoodGroup::ALL
        .iter()
        .map(|&g| (g, observations(benchmarks, simulations, measure, Some(g))))
        .collect();
    for scenario in Scenario::ALL {
        for (g, obs) in &per_group {
            let Some(values) = obs.get(&scenario) else {
                continue;
            };
            let s = summarize(values).expect("non-empty");
            t.push(vec![
                scenario.to_string(),
                g.to_string(),
                s.n.to_string(),
                num(s.mean),
                num(s.sd),
                num(s.p25),
                num(s.p50),
                num(s.p75),
            ]);
        }
    }
    t
}

/// Pooled energy and emission shares per item, for each deterministic
/// scenario present in `benchmarks`.
pub fn item_shares_table(dataset: &Dataset, benchmarks: &BenchmarkBatch) -> Table {
    let mut t = Table::new(
        "item_shares",
        &[
            "scenario",
            "group",
            "item_id",
            "energy_share",
            "emission_share",
        ],
    );
    for scenario in [
        Scenario::LowestCost,
        Scenario::LowestEmissions,
        Scenario::MostCommon,
    ] {
        let entries: Vec<_> = benchmarks
            .for_scenario(scenario)
            .map(|r| {
                (
                    &r.diet,
                    dataset.countries[&r.diet.country_code].items.as_slice(),
                )
            })
            .collect();
        if entries.is_empty() {
            continue;
        }
        let shares = item_share_table(entries).expect("benchmark diets reference known items");
        for s in shares {
            t.push(vec![
                scenario.to_string(),
                s.group.to_string(),
                s.item_id,
                num(s.energy_share),
                num(s.emission_share),
            ]);
        }
    }
    t
}

/// PUA for diets 1-3, and for the median draw cost of diets 4-5.
/// Countries without income data or class are noted, not failed.
pub fn pua_table(
    dataset: &Dataset,
    benchmarks: &BenchmarkBatch,
    simulations: &[&SimulationBatch],
    notices: &mut Vec<String>,
) -> Option<Table> {
    let Some(incomes) = dataset.income.as_ref() else {
        notices.push("PUA section omitted: no income distribution supplied".into());
        return None;
    };
    let params = &dataset.config.affordability;
    if params.is_empty() {
        notices.push("PUA section omitted: no affordability classes configured".into());
        return None;
    }
    let mut t = Table::new(
        "pua",
        &[
            "country_code",
            "scenario",
            "diet_cost_ppp_per_day",
            "threshold_ppp_per_day",
            "pua",
        ],
    );
    let mut costs: Vec<(String, Scenario, f64)> = benchmarks
        .results
        .iter()
        .map(|r| {
            (
                r.diet.country_code.clone(),
                r.diet.scenario,
                r.metrics.cost_ppp_per_day,
            )
        })
        .collect();
    for batch in simulations {
        costs.extend(batch.runs.iter().map(|r: &SimulationRun| {
            (
                r.summary.country_code.clone(),
                r.summary.scenario,
                r.summary.cost.p50,
            )
        }));
    }
    costs.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    for (country, scenario, cost) in costs {
        match country_pua(cost, &country, incomes, params) {
            Ok(p) => {
                let class = params.class_of(&country).expect("checked by country_pua");
                let threshold =
                    affordability_threshold(cost, params, class).expect("checked by country_pua");
                t.push(vec![
                    country,
                    scenario.to_string(),
                    num(cost),
                    num(threshold),
                    num(p),
                ]);
            }
            Err(e) => notices.push(format!("PUA {country} scenario {scenario}: {e}")),
        }
    }
    Some(t)
}

/// NAR per nutrient and MAR for diets 1-3.
pub fn adequacy_table(
    dataset: &Dataset,
    benchmarks: &BenchmarkBatch,
    notices: &mut Vec<String>,
) -> Option<Table> {
    let Some(profiles) = dataset.nutrients.as_ref() else {
        notices.push("adequacy section omitted: no nutrient profiles supplied".into());
        return None;
    };
    if dataset.config.requirements.is_empty() {
        notices.push("adequacy section omitted: no nutrient requirements configured".into());
        return None;
    }
    let mut t = Table::new("adequacy", &["country_code", "scenario", "nutrient", "nar"]);
    for r in &benchmarks.results {
        let items = &dataset.countries[&r.diet.country_code].items;
        match nutrient_adequacy(&r.diet, items, profiles, &dataset.config.requirements) {
            Ok(a) => {
                let key = (r.diet.country_code.clone(), r.diet.scenario.to_string());
                for (n, v) in a.nar {
                    t.push(vec![key.0.clone(), key.1.clone(), n.to_string(), num(v)]);
                }
                t.push(vec![key.0, key.1, "MAR".into(), num(a.mar)]);
            }
            Err(e) => notices.push(format!(
                "adequacy {} scenario {}: {e}",
                r.diet.country_code, r.diet.scenario
            )),
        }
    }
    Some(t)
}

/// Items available per food group in each country, with its income class.
pub fn item_counts_table(dataset: &Dataset) -> Table {
    let mut header = vec!["country_code".to_string(), "income_class".to_string()];
    header.extend(FoodGroup::ALL.iter().map(|g| g.to_string()));
    header.push("total".into());
    let mut t = Table {
        name: "item_counts".into(),
        header,
        rows: Vec::new(),
    };
    for (code, c) in &dataset.countries {
        let class = dataset
            .config
            .affordability
            .class_of(code)
            .map(|c| c.to_string())
            .unwrap_or_default();
        let mut row = vec![code.clone(), class];
        row.extend(
            FoodGroup::ALL
                .iter()
                .map(|&g| c.group_items(g).count().to_string()),
        );
        row.push(c.items.len().to_string());
        t.push(row);
    }
    t
}

/// Every table the inputs allow, plus notices for omitted sections.
pub fn report_bundle(
    dataset: &Dataset,
    benchmarks: &BenchmarkBatch,
    simulations: &[&SimulationBatch],
) -> (Vec<Table>, Vec<String>) {
    let mut notices = Vec::new();
    let mut tables = vec![
        diets_table(benchmarks),
        metrics_table(benchmarks),
        scenario_summary_table("summary_cost", benchmarks, simulations, Measure::Cost),
        scenario_summary_table(
            "summary_emissions",
            benchmarks,
            simulations,
            Measure::Emissions,
        ),
        group_summary_table("group_summary_cost", benchmarks, simulations, Measure::Cost),
        group_summary_table(
            "group_summary_emissions",
            benchmarks,
            simulations,
            Measure::Emissions,
        ),
        item_shares_table(dataset, benchmarks),
        item_counts_table(dataset),
    ];
    for batch in simulations {
        if let Some(run) = batch.runs.first() {
            tables.push(simulation_summary_table(batch, run.summary.scenario));
        }
    }
    tables.extend(pua_table(dataset, benchmarks, simulations, &mut notices));
    tables.extend(adequacy_table(dataset, benchmarks, &mut notices));
    (tables, notices)
}
