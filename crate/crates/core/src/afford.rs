//! Prevalence of unaffordability (PUA).

use std::collections::BTreeMap;

use crate::model::{AffordabilityParams, IncomeClass, IncomeDistribution};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AffordError {
    #[error("no income distribution for {0}")]
    MissingDistribution(String),
    #[error("no income class assigned to {0}")]
    MissingClass(String),
    #[error("no affordability parameters for class {0}")]
    MissingClassParams(IncomeClass),
}

/// Population share with daily income strictly below `threshold`.
///
/// The quantile function is the piecewise-linear interpolant of the
/// distribution's points, flat below the first point and above the last.
/// At a supplied point whose income equals the threshold the result is that
/// point's share (the smallest one, if several points share the income);
/// the flat lower tail is an atom at the first income, so a threshold equal
/// to it gives 0.
pub fn share_below(dist: &IncomeDistribution, threshold: f64) -> f64 {
    let pts = dist.points();
    let (_, first_income) = pts[0];
    let (_, last_income) = pts[pts.len() - 1];
    if threshold <= first_income {
        return 0.0;
    }
    if threshold > last_income {
        return 1.0;
    }
    for w in pts.windows(2) {
        let ((p0, y0), (p1, y1)) = (w[0], w[1]);
        if y0 < threshold && threshold <= y1 {
            return (p0 + (p1 - p0) * (threshold - y0) / (y1 - y0)).clamp(0.0, 1.0);
        }
    }
    unreachable!("threshold lies within the income range")
}

/// Diet cost plus basic non-food spending for a class.
pub fn affordability_threshold(
    diet_cost: f64,
    params: &AffordabilityParams,
    class: IncomeClass,
) -> Result<f64, AffordError> {
    let c = params
        .class_params(class)
        .ok_or(AffordError::MissingClassParams(class))?;
    Ok(diet_cost + c.nonfood_share * c.poverty_line_ppp_per_day)
}

/// Share of the population whose income, net of basic non-food spending,
/// falls short of `diet_cost`.
pub fn pua(
    diet_cost: f64,
    dist: &IncomeDistribution,
    params: &AffordabilityParams,
    class: IncomeClass,
) -> Result<f64, AffordError> {
    let threshold = affordability_threshold(diet_cost, params, class)?;
    Ok(share_below(dist, threshold))
}

/// [`pua`] with the distribution and class looked up for `country`.
pub fn country_pua(
    diet_cost: f64,
    country: &str,
    incomes: &BTreeMap<String, IncomeDistribution>,
    params: &AffordabilityParams,
) -> Result<f64, AffordError> {
    let dist = incomes
        .get(country)
        .ok_or_else(|| AffordError::MissingDistribution(country.to_string()))?;
    let class = params
        .class_of(country)
        .ok_or_else(|| AffordError::MissingClass(country.to_string()))?;
    pua(diet_cost, dist, params, class)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linear() -> IncomeDistribution {
        IncomeDistribution::new(
            "AAA",
            (1..=100)
                .map(|i| (i as f64 / 100.0, i as f64 / 10.0))
                .collect(),
        )
        .unwrap()
    }

    fn umic(line: f64) -> AffordabilityParams {
        let mut p = AffordabilityParams::default();
        p.set_class(IncomeClass::UpperMiddle, None, line).unwrap();
        p.assign("AAA", IncomeClass::UpperMiddle);
        p
    }

    #[test]
    fn analytic_linear_quantile() {
        let v = pua(2.0, &linear(), &umic(6.85), IncomeClass::UpperMiddle).unwrap();
        assert!((v - 0.5699).abs() < 1e-9, "{v}");
    }

    #[test]
    fn everyone_affords() {
        let d = IncomeDistribution::new("AAA", vec![(0.5, 50.0), (1.0, 100.0)]).unwrap();
        assert_eq!(
            pua(1.0, &d, &umic(6.85), IncomeClass::UpperMiddle).unwrap(),
            0.0
        );
    }

    #[test]
    fn nobody_affords() {
        let d = IncomeDistribution::new("AAA", vec![(0.5, 0.5), (1.0, 1.0)]).unwrap();
        assert_eq!(
            pua(10.0, &d, &umic(6.85), IncomeClass::UpperMiddle).unwrap(),
            1.0
        );
    }

    #[test]
    fn exact_at_points() {
        let d =
            IncomeDistribution::new("AAA", vec![(0.1, 1.0), (0.4, 3.0), (0.6, 3.0), (1.0, 9.0)])
                .unwrap();
        assert_eq!(share_below(&d, 3.0), 0.4);
        assert_eq!(share_below(&d, 9.0), 1.0);
        assert!((share_below(&d, 2.0) - 0.25).abs() < 1e-15);
        assert!((share_below(&d, 6.0) - 0.8).abs() < 1e-15);
    }

    #[test]
    fn lookup_errors() {
        let incomes = BTreeMap::from([("AAA".to_string(), linear())]);
        let p = umic(6.85);
        assert_eq!(
            country_pua(1.0, "BBB", &incomes, &p),
            Err(AffordError::MissingDistribution("BBB".into()))
        );
        let mut incomes2 = incomes.clone();
        incomes2.insert("CCC".into(), linear());
        assert_eq!(
            country_pua(1.0, "CCC", &incomes2, &p),
            Err(AffordError::MissingClass("CCC".into()))
        );
        let mut p2 = AffordabilityParams::default();
        p2.assign("AAA", IncomeClass::Low);
        assert_eq!(
            country_pua(1.0, "AAA", &incomes, &p2),
            Err(AffordError::MissingClassParams(IncomeClass::Low))
        );
    }
}
