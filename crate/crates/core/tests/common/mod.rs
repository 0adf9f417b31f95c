//! Independent oracles shared by the integration tests. Nothing here calls
//! the selection or sampling code it checks.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hdb_bench::ingest::{Config, CountryDataset, Dataset, ValidationReport};
use hdb_bench::model::{FoodGroup, FoodItem, HdbTargets};
use hdb_bench::synth::{synthetic_country, SynthOptions};

/// All k-subsets of 0..n, as sorted index vectors.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn sorted_sum(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    v.into_iter().sum()
}

fn ids_of(items: &[&FoodItem], subset: &[usize]) -> Vec<String> {
    let mut ids: Vec<String> = subset
        .iter()
        .map(|&i| items[i].item_id().to_string())
        .collect();
    ids.sort();
    ids
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Cost,
    Emissions,
}

/// Exhaustive minimum over all k-subsets of a group: primary objective sum,
/// then the other objective's sum, then the sorted id list.
pub fn brute_force_rank(items: &[&FoodItem], k: usize, objective: Objective) -> Vec<String> {
    let primary = |i: &FoodItem| match objective {
        Objective::Cost => i.price_ppp_per_kcal(),
        Objective::Emissions => i.emissions_kg_per_kcal(),
    };
    let secondary = |i: &FoodItem| match objective {
        Objective::Cost => i.emissions_kg_per_kcal(),
        Objective::Emissions => i.price_ppp_per_kcal(),
    };
    combinations(items.len(), k)
        .into_iter()
        .map(|s| {
            let a = sorted_sum(s.iter().map(|&i| primary(items[i])).collect());
            let b = sorted_sum(s.iter().map(|&i| secondary(items[i])).collect());
            (a, b, ids_of(items, &s))
        })
        .min_by(|x, y| {
            x.0.total_cmp(&y.0)
                .then(x.1.total_cmp(&y.1))
                .then_with(|| x.2.cmp(&y.2))
        })
        .map(|x| x.2)
        .expect("at least one subset")
}

/// Exhaustive most-common selection: among k-subsets with pairwise distinct
/// FBS categories, minimise the sorted (-supply, category) list, then the
/// sorted (price, id) list.
pub fn brute_force_most_common(items: &[&FoodItem], k: usize) -> Option<Vec<String>> {
    let with_fbs: Vec<&FoodItem> = items
        .iter()
        .copied()
        .filter(|i| i.fbs_category().is_some() && i.fbs_category_kcal().is_some())
        .collect();
    combinations(with_fbs.len(), k)
        .into_iter()
        .filter(|s| {
            let cats: BTreeSet<&str> = s
                .iter()
                .map(|&i| with_fbs[i].fbs_category().unwrap())
                .collect();
            cats.len() == k
        })
        .map(|s| {
            let mut cat_key: Vec<(f64, String)> = s
                .iter()
                .map(|&i| {
                    let it = with_fbs[i];
                    (
                        -it.fbs_category_kcal().unwrap(),
                        it.fbs_category().unwrap().to_string(),
                    )
                })
                .collect();
            cat_key.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
            let mut price_key: Vec<(f64, String)> = s
                .iter()
                .map(|&i| {
                    (
                        with_fbs[i].price_ppp_per_kcal(),
                        with_fbs[i].item_id().to_string(),
                    )
                })
                .collect();
            price_key.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
            (cat_key, price_key, ids_of(&with_fbs, &s))
        })
        .min_by(|x, y| {
            let c =
                x.0.iter()
                    .zip(&y.0)
                    .map(|(a, b)| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal);
            c.then_with(|| {
                x.1.iter()
                    .zip(&y.1)
                    .map(|(a, b)| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
        })
        .map(|x| x.2)
}

/// Probability of every ordered draw sequence under successive sampling
/// (draw proportional to weight, remove, renormalise).
pub fn ordered_sequences(weights: &[f64], k: usize) -> Vec<(Vec<usize>, f64)> {
    fn rec(
        weights: &[f64],
        k: usize,
        seq: &mut Vec<usize>,
        prob: f64,
        out: &mut Vec<(Vec<usize>, f64)>,
    ) {
        if seq.len() == k {
            out.push((seq.clone(), prob));
            return;
        }
        let remaining: f64 = weights
            .iter()
            .enumerate()
            .filter(|(i, _)| !seq.contains(i))
            .map(|(_, w)| w)
            .sum();
        for (i, &w) in weights.iter().enumerate() {
            if seq.contains(&i) || w <= 0.0 {
                continue;
            }
            seq.push(i);
            rec(weights, k, seq, prob * w / remaining, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    rec(weights, k, &mut Vec::new(), 1.0, &mut out);
    out
}

/// Marginal inclusion probability of each index.
pub fn inclusion_probabilities(weights: &[f64], k: usize) -> Vec<f64> {
    let mut p = vec![0.0; weights.len()];
    for (seq, prob) in ordered_sequences(weights, k) {
        for i in seq {
            p[i] += prob;
        }
    }
    p
}

/// Probability of each unordered set.
pub fn set_probabilities(weights: &[f64], k: usize) -> BTreeMap<Vec<usize>, f64> {
    let mut out = BTreeMap::new();
    for (mut seq, prob) in ordered_sequences(weights, k) {
        seq.sort();
        *out.entry(seq).or_insert(0.0) += prob;
    }
    out
}

pub fn dataset_of(countries: Vec<CountryDataset>, targets: HdbTargets) -> Dataset {
    Dataset {
        countries: countries
            .into_iter()
            .map(|c| (c.country_code.clone(), c))
            .collect(),
        config: Config {
            targets,
            ..Config::default()
        },
        nutrients: None,
        income: None,
        report: ValidationReport::default(),
    }
}

/// `n` seeded synthetic countries; every third one is tie-prone.
pub fn synthetic_countries(n: usize, seed: u64, targets: &HdbTargets) -> Vec<CountryDataset> {
    (0..n)
        .map(|i| {
            let opts = SynthOptions {
                tie_prone: i % 3 == 2,
                ..SynthOptions::default()
            };
            synthetic_country(
                &format!("S{i:03}"),
                seed.wrapping_add(i as u64),
                targets,
                opts,
            )
        })
        .collect()
}

pub fn group_ids(diet: &hdb_bench::Diet, group: FoodGroup) -> Vec<String> {
    let mut v: Vec<String> = diet
        .group_selections(group)
        .map(|s| s.item_id.clone())
        .collect();
    v.sort();
    v
}

/// Spreadsheet-style recomputation of a diet's totals.
pub fn naive_totals(diet: &hdb_bench::Diet, items: &[FoodItem]) -> (f64, f64) {
    let mut cost = 0.0;
    let mut emissions = 0.0;
    for s in &diet.selections {
        for i in items {
            if i.item_id() == s.item_id {
                cost += i.price_ppp_per_kcal() * s.quantity_kcal;
                emissions += i.emissions_kg_per_kcal() * s.quantity_kcal;
            }
        }
    }
    (cost, emissions)
}

/// Two-sided p of Student's t for integer df via the closed-form finite
/// series (Abramowitz & Stegun 26.7.3-4), independent of the incomplete
/// beta route.
pub fn t_two_sided_p_series(t: f64, df: u32) -> f64 {
    let theta = (t.abs() / (df as f64).sqrt()).atan();
    let (s, c) = theta.sin_cos();
    let c2 = c * c;
    // A(t|df) = P(|T| < |t|)
    let a = if df % 2 == 1 {
        let mut sum = 0.0;
        if df > 1 {
            let mut term = c;
            sum = term;
            let mut j = 3;
            while j <= df - 2 {
                term *= c2 * (j - 1) as f64 / j as f64;
                sum += term;
                j += 2;
            }
        }
        2.0 / std::f64::consts::PI * (theta + s * sum)
    } else {
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut j = 2;
        while j <= df - 2 {
            term *= c2 * (j - 1) as f64 / j as f64;
            sum += term;
            j += 2;
        }
        s * sum
    };
    1.0 - a
}
