//! Maintainability scoring: aggregate metric values into the four
//! maintainability criteria via the built-in relation matrix.
//!
//! Every relation is inverse (low metric values are desired); strong
//! relations weigh double by default. Scores use a capped linear
//! normalization and a 1-complement, so 1.0 is best and 0.0 worst. Caps
//! and weights are configuration, not claims about good code.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{Metric, MetricVector};

/// The four maintainability criteria.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Criterion {
    Analyzability,
    Changeability,
    Stability,
    Testability,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [
        Criterion::Analyzability,
        Criterion::Changeability,
        Criterion::Stability,
        Criterion::Testability,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Criterion::Analyzability => "analyzability",
            Criterion::Changeability => "changeability",
            Criterion::Stability => "stability",
            Criterion::Testability => "testability",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How strongly a metric degrades a criterion: `i` inverse, `I` strong
/// inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationStrength {
    #[serde(rename = "i")]
    Inverse,
    #[serde(rename = "I")]
    StrongInverse,
}

use RelationStrength::{Inverse as Weak, StrongInverse as Strong};

/// The criterion-by-metric relation matrix. Twelve metric columns; BLOC
/// and Files carry no relation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationMatrix {
    cells: BTreeMap<Criterion, BTreeMap<Metric, RelationStrength>>,
}

/// Column order of the built-in matrix.
pub const MATRIX_COLUMNS: [Metric; 12] = [
    Metric::Loc,
    Metric::Cloc,
    Metric::Statements,
    Metric::Methods,
    Metric::MccTraditional,
    Metric::MccModified,
    Metric::Cbo,
    Metric::Dit,
    Metric::Noc,
    Metric::Lcom,
    Metric::Rfc,
    Metric::Wmc,
];

impl Default for RelationMatrix {
    /// The built-in relations. Rows follow MATRIX_COLUMNS order; note the
    /// lone weak cell for NOC outside the Stability row, which is otherwise
    /// all weak except CBO and LCOM.
    fn default() -> Self {
        let rows = [
            (
                Criterion::Analyzability,
                [
                    Strong, Strong, Strong, Strong, Strong, Strong, Strong, Strong, Weak,
                    Strong, Strong, Strong,
                ],
            ),
            (
                Criterion::Changeability,
                [
                    Strong, Strong, Strong, Strong, Strong, Strong, Strong, Strong, Strong,
                    Strong, Strong, Strong,
                ],
            ),
            (
                Criterion::Stability,
                [
                    Weak, Weak, Weak, Weak, Weak, Weak, Strong, Weak, Weak, Strong, Weak,
                    Weak,
                ],
            ),
            (
                Criterion::Testability,
                [
                    Strong, Strong, Strong, Strong, Strong, Strong, Strong, Strong, Weak,
                    Strong, Strong, Strong,
                ],
            ),
        ];
        let mut cells = BTreeMap::new();
        for (criterion, strengths) in rows {
            let row: BTreeMap<Metric, RelationStrength> = MATRIX_COLUMNS
                .into_iter()
                .zip(strengths)
                .collect();
            cells.insert(criterion, row);
        }
        RelationMatrix { cells }
    }
}

impl RelationMatrix {
    pub fn strength(&self, criterion: Criterion, metric: Metric) -> Option<RelationStrength> {
        self.cells.get(&criterion)?.get(&metric).copied()
    }

    pub fn row(&self, criterion: Criterion) -> impl Iterator<Item = (Metric, RelationStrength)> + '_ {
        self.cells
            .get(&criterion)
            .into_iter()
            .flat_map(|row| row.iter().map(|(m, s)| (*m, *s)))
    }
}

/// Normalization caps per metric. Values at or above the cap normalize
/// to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CapTable(pub BTreeMap<Metric, f64>);

impl Default for CapTable {
    fn default() -> Self {
        let caps = [
            (Metric::Loc, 1000.0),
            (Metric::Cloc, 1000.0),
            (Metric::Statements, 500.0),
            (Metric::Methods, 50.0),
            (Metric::MccTraditional, 50.0),
            (Metric::MccModified, 50.0),
            (Metric::Cbo, 14.0),
            (Metric::Dit, 6.0),
            (Metric::Noc, 10.0),
            (Metric::Lcom, 50.0),
            (Metric::Rfc, 50.0),
            (Metric::Wmc, 50.0),
        ];
        CapTable(caps.into_iter().collect())
    }
}

impl CapTable {
    pub fn get(&self, metric: Metric) -> Option<f64> {
        self.0.get(&metric).copied()
    }

    pub fn set(&mut self, metric: Metric, cap: f64) {
        self.0.insert(metric, cap);
    }
}

/// Relation weights; the defaults encode "the inverse relation is
/// stronger" as 2 versus 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Weights {
    pub inverse: f64,
    pub strong_inverse: f64,
}

impl Default for Weights {
    fn default() -> Self {
        Weights {
            inverse: 1.0,
            strong_inverse: 2.0,
        }
    }
}

impl Weights {
    pub fn of(&self, strength: RelationStrength) -> f64 {
        match strength {
            RelationStrength::Inverse => self.inverse,
            RelationStrength::StrongInverse => self.strong_inverse,
        }
    }
}

/// Capped linear normalization: min(value, cap) / cap.
pub fn normalize_metric(value: f64, cap: f64) -> Result<f64> {
    if cap <= 0.0 || !cap.is_finite() {
        return Err(Error::Config(format!(
            "normalization cap must be positive, got {cap}"
        )));
    }
    Ok(value.min(cap) / cap)
}

/// Score one criterion for one entity: 1 - (Σ w·norm) / (Σ w) over the
/// metrics present in the vector. Metrics without a matrix cell or vector
/// value are skipped; when nothing applies the criterion is unassessable.
pub fn criterion_score(
    metrics: &MetricVector,
    criterion: Criterion,
    matrix: &RelationMatrix,
    caps: &CapTable,
    weights: &Weights,
) -> Result<f64> {
    let mut weight_sum = 0.0;
    let mut weighted_norm = 0.0;
    for (metric, strength) in matrix.row(criterion) {
        let Some(value) = metrics.get(metric) else {
            continue;
        };
        let Some(cap) = caps.get(metric) else {
            continue;
        };
        let w = weights.of(strength);
        if w <= 0.0 {
            continue;
        }
        weight_sum += w;
        weighted_norm += w * normalize_metric(value, cap)?;
    }
    if weight_sum == 0.0 {
        return Err(Error::CriterionUnassessable(criterion.name().to_string()));
    }
    Ok(1.0 - weighted_norm / weight_sum)
}

/// Maintainability scores for one entity or one aggregated package.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaintainabilityReport {
    pub analyzability: f64,
    pub changeability: f64,
    pub stability: f64,
    pub testability: f64,
    /// Arithmetic mean of the four criterion scores.
    pub overall: f64,
    /// Mean normalized value per metric over the scored entities.
    pub contributions: BTreeMap<Metric, f64>,
    /// Cap table the scores were computed with.
    pub caps: CapTable,
}

impl MaintainabilityReport {
    pub fn score(&self, criterion: Criterion) -> f64 {
        match criterion {
            Criterion::Analyzability => self.analyzability,
            Criterion::Changeability => self.changeability,
            Criterion::Stability => self.stability,
            Criterion::Testability => self.testability,
        }
    }
}

/// Score all four criteria for one metric vector.
pub fn maintainability_report(
    metrics: &MetricVector,
    matrix: &RelationMatrix,
    caps: &CapTable,
    weights: &Weights,
) -> Result<MaintainabilityReport> {
    package_report(std::slice::from_ref(metrics), matrix, caps, weights)
}

/// Score a package: every entity vector is scored per criterion, criterion
/// scores average over the entities that could be assessed, and the
/// overall score is the mean of the four criterion averages.
///
/// File vectors carry the size and complexity columns, class vectors the
/// OO columns; passing both kinds pools them into one judgment.
pub fn package_report(
    vectors: &[MetricVector],
    matrix: &RelationMatrix,
    caps: &CapTable,
    weights: &Weights,
) -> Result<MaintainabilityReport> {
    let mut criterion_means = BTreeMap::new();
    for criterion in Criterion::ALL {
        let mut sum = 0.0;
        let mut count = 0u64;
        for vector in vectors {
            match criterion_score(vector, criterion, matrix, caps, weights) {
                Ok(score) => {
                    sum += score;
                    count += 1;
                }
                Err(Error::CriterionUnassessable(_)) => {}
                Err(e) => return Err(e),
            }
        }
        if count == 0 {
            return Err(Error::CriterionUnassessable(criterion.name().to_string()));
        }
        criterion_means.insert(criterion, sum / count as f64);
    }

    let mut contrib_sums: BTreeMap<Metric, (f64, u64)> = BTreeMap::new();
    for vector in vectors {
        for (metric, value) in vector.iter() {
            if let Some(cap) = caps.get(metric) {
                let entry = contrib_sums.entry(metric).or_insert((0.0, 0));
                entry.0 += normalize_metric(value, cap)?;
                entry.1 += 1;
            }
        }
    }
    let contributions = contrib_sums
        .into_iter()
        .map(|(m, (sum, n))| (m, sum / n as f64))
        .collect();

    let overall = Criterion::ALL
        .iter()
        .map(|c| criterion_means[c])
        .sum::<f64>()
        / Criterion::ALL.len() as f64;
    Ok(MaintainabilityReport {
        analyzability: criterion_means[&Criterion::Analyzability],
        changeability: criterion_means[&Criterion::Changeability],
        stability: criterion_means[&Criterion::Stability],
        testability: criterion_means[&Criterion::Testability],
        overall,
        contributions,
        caps: caps.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file_vector(values: &[(Metric, f64)]) -> MetricVector {
        let mut v = MetricVector::new();
        for (m, val) in values {
            v.set(*m, *val);
        }
        v
    }

    fn zero_file_vector() -> MetricVector {
        file_vector(&[
            (Metric::Loc, 0.0),
            (Metric::Cloc, 0.0),
            (Metric::Statements, 0.0),
            (Metric::Methods, 0.0),
            (Metric::MccTraditional, 0.0),
            (Metric::MccModified, 0.0),
        ])
    }

    #[test]
    fn normalize_basics() {
        assert_eq!(normalize_metric(0.0, 100.0).unwrap(), 0.0);
        assert_eq!(normalize_metric(100.0, 100.0).unwrap(), 1.0);
        assert_eq!(normalize_metric(25.0, 50.0).unwrap(), 0.5);
        assert_eq!(normalize_metric(200.0, 100.0).unwrap(), 1.0);
        assert!(normalize_metric(1.0, 0.0).is_err());
        assert!(normalize_metric(1.0, -3.0).is_err());
    }

    #[test]
    fn zero_vector_scores_best() {
        let report = maintainability_report(
            &zero_file_vector(),
            &RelationMatrix::default(),
            &CapTable::default(),
            &Weights::default(),
        )
        .unwrap();
        for c in Criterion::ALL {
            assert_eq!(report.score(c), 1.0);
        }
        assert_eq!(report.overall, 1.0);
    }

    #[test]
    fn capped_vector_scores_worst() {
        let caps = CapTable::default();
        let mut v = MetricVector::new();
        for m in crate::quality::MATRIX_COLUMNS {
            v.set(m, caps.get(m).unwrap() + 10.0);
        }
        let report = maintainability_report(
            &v,
            &RelationMatrix::default(),
            &caps,
            &Weights::default(),
        )
        .unwrap();
        for c in Criterion::ALL {
            assert_eq!(report.score(c), 0.0);
        }
    }

    #[test]
    fn two_strong_metrics_hand_computed() {
        // normalized {0.5, 0.25}, both weight 2 => 1 - 0.375 = 0.625
        let mut caps = CapTable::default();
        caps.set(Metric::Loc, 100.0);
        caps.set(Metric::Cloc, 100.0);
        let v = file_vector(&[(Metric::Loc, 50.0), (Metric::Cloc, 25.0)]);
        let score = criterion_score(
            &v,
            Criterion::Changeability,
            &RelationMatrix::default(),
            &caps,
            &Weights::default(),
        )
        .unwrap();
        assert!((score - 0.625).abs() < 1e-12);
    }

    #[test]
    fn missing_metrics_are_skipped() {
        let v = file_vector(&[(Metric::Loc, 0.0)]);
        let score = criterion_score(
            &v,
            Criterion::Analyzability,
            &RelationMatrix::default(),
            &CapTable::default(),
            &Weights::default(),
        )
        .unwrap();
        assert_eq!(score, 1.0);
    }

    #[test]
    fn empty_vector_is_unassessable() {
        let err = criterion_score(
            &MetricVector::new(),
            Criterion::Stability,
            &RelationMatrix::default(),
            &CapTable::default(),
            &Weights::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::CriterionUnassessable(_)));
    }

    #[test]
    fn elevated_mcc_hits_testability_harder_than_stability() {
        // MCC is weak for Stability and strong for Testability. With every
        // column present, elevating only MCC must leave Stability with the
        // higher score.
        let mut v = MetricVector::new();
        for m in MATRIX_COLUMNS {
            v.set(m, 0.0);
        }
        v.set(Metric::MccTraditional, 40.0);
        v.set(Metric::MccModified, 40.0);
        let matrix = RelationMatrix::default();
        let caps = CapTable::default();
        let weights = Weights::default();
        let stability =
            criterion_score(&v, Criterion::Stability, &matrix, &caps, &weights).unwrap();
        let testability =
            criterion_score(&v, Criterion::Testability, &matrix, &caps, &weights).unwrap();
        assert!(stability > testability, "{stability} vs {testability}");
    }

    #[test]
    fn overall_is_mean_of_criteria() {
        let v = file_vector(&[
            (Metric::Loc, 120.0),
            (Metric::Cloc, 40.0),
            (Metric::Statements, 75.0),
            (Metric::Methods, 8.0),
            (Metric::MccTraditional, 12.0),
            (Metric::MccModified, 11.0),
        ]);
        let report = maintainability_report(
            &v,
            &RelationMatrix::default(),
            &CapTable::default(),
            &Weights::default(),
        )
        .unwrap();
        let mean = (report.analyzability
            + report.changeability
            + report.stability
            + report.testability)
            / 4.0;
        assert!((report.overall - mean).abs() < 1e-12);
    }

    #[test]
    fn package_pools_file_and_class_entities() {
        let file = zero_file_vector();
        let mut class = MetricVector::new();
        for m in [
            Metric::Cbo,
            Metric::Dit,
            Metric::Lcom,
            Metric::Noc,
            Metric::Rfc,
            Metric::Wmc,
        ] {
            class.set(m, 0.0);
        }
        let report = package_report(
            &[file, class],
            &RelationMatrix::default(),
            &CapTable::default(),
            &Weights::default(),
        )
        .unwrap();
        assert_eq!(report.overall, 1.0);
    }
}
