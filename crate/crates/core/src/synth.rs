//! Seeded synthetic countries, for tests, benchmarks and the browser demo.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ingest::CountryDataset;
use crate::model::{FoodGroup, FoodItem, HdbTargets};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthOptions {
    /// Upper bound on items per group; the lower bound is `k_g`.
    pub max_items_per_group: usize,
    /// Probability that an item carries FBS supply data.
    pub fbs_coverage: f64,
    /// Quantise prices and emission factors onto a coarse grid so that
    /// ties occur.
    pub tie_prone: bool,
}

impl Default for SynthOptions {
    fn default() -> Self {
        SynthOptions {
            max_items_per_group: 15,
            fbs_coverage: 0.8,
            tie_prone: false,
        }
    }
}

/// Rough per-group ranges (PPP$/kcal, kg CO2e/kcal) loosely shaped like
/// retail data: animal-source foods are pricier and dirtier per kcal.
fn ranges(group: FoodGroup) -> ((f64, f64), (f64, f64)) {
    match group {
        FoodGroup::AnimalSource => ((0.002, 0.02), (0.0005, 0.02)),
        FoodGroup::Vegetables => ((0.003, 0.03), (0.0002, 0.003)),
        FoodGroup::StarchyStaples => ((0.0003, 0.003), (0.0001, 0.0012)),
        FoodGroup::Fruits => ((0.002, 0.02), (0.0001, 0.002)),
        FoodGroup::LegumesNutsSeeds => ((0.0005, 0.006), (0.0001, 0.001)),
        FoodGroup::OilsFats => ((0.0003, 0.004), (0.0002, 0.003)),
    }
}

fn draw_in<R: Rng>(rng: &mut R, (lo, hi): (f64, f64), tie_prone: bool) -> f64 {
    if tie_prone {
        let step = (hi - lo) / 4.0;
        lo + step * rng.random_range(0..=4) as f64
    } else {
        // log-uniform
        (lo.ln() + rng.random::<f64>() * (hi.ln() - lo.ln())).exp()
    }
}

/// A random country with between `k_g` and `max_items_per_group` items in
/// every group.
pub fn synthetic_country(
    code: &str,
    seed: u64,
    targets: &HdbTargets,
    opts: SynthOptions,
) -> CountryDataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items = Vec::new();
    for (group, target) in targets.iter() {
        let hi = opts.max_items_per_group.max(target.item_count);
        let n = rng.random_range(target.item_count..=hi);
        let n_categories = (n / 2).max(1);
        let supply: Vec<f64> = (0..n_categories)
            .map(|_| {
                if rng.random_bool(0.1) {
                    0.0
                } else {
                    (rng.random_range(1..400)) as f64
                }
            })
            .collect();
        let (price_range, emission_range) = ranges(group);
        for j in 0..n {
            let price = draw_in(&mut rng, price_range, opts.tie_prone);
            let emissions = draw_in(&mut rng, emission_range, opts.tie_prone);
            let density = rng.random_range(20.0..900.0);
            let mut item = FoodItem::new(
                code,
                format!("{}_{j:02}", group.code()),
                group,
                price,
                emissions,
            )
            .expect("generated values are positive")
            .with_kcal_density(density)
            .expect("positive density");
            if rng.random_bool(opts.fbs_coverage) {
                let c = rng.random_range(0..n_categories);
                item = item
                    .with_fbs_category(format!("{}_cat{c}", group.code()))
                    .with_fbs_kcal(Some(supply[c]))
                    .expect("non-negative supply");
            }
            items.push(item);
        }
    }
    CountryDataset::new(code, items)
}
