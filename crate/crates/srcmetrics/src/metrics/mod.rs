//! Metric vocabulary and the size, complexity and object-orientation
//! metric computations.

pub mod complexity;
pub mod oo;
pub mod size;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use complexity::{file_mcc, mcc_modified, mcc_traditional};
pub use oo::{cbo, class_metrics, dit, lcom, noc, rfc, wmc, ClassMetrics};
pub use size::{file_size_metrics, snapshot_distribution};

/// The fourteen named metrics. Declaration order is the canonical display
/// and serialization order.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Metric {
    #[serde(rename = "LOC")]
    Loc,
    #[serde(rename = "BLOC")]
    Bloc,
    #[serde(rename = "CLOC")]
    Cloc,
    #[serde(rename = "Files")]
    Files,
    #[serde(rename = "Methods")]
    Methods,
    #[serde(rename = "Statements")]
    Statements,
    #[serde(rename = "MCC_traditional")]
    MccTraditional,
    #[serde(rename = "MCC_modified")]
    MccModified,
    #[serde(rename = "CBO")]
    Cbo,
    #[serde(rename = "DIT")]
    Dit,
    #[serde(rename = "LCOM")]
    Lcom,
    #[serde(rename = "NOC")]
    Noc,
    #[serde(rename = "RFC")]
    Rfc,
    #[serde(rename = "WMC")]
    Wmc,
}

impl Metric {
    pub const ALL: [Metric; 14] = [
        Metric::Loc,
        Metric::Bloc,
        Metric::Cloc,
        Metric::Files,
        Metric::Methods,
        Metric::Statements,
        Metric::MccTraditional,
        Metric::MccModified,
        Metric::Cbo,
        Metric::Dit,
        Metric::Lcom,
        Metric::Noc,
        Metric::Rfc,
        Metric::Wmc,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Metric::Loc => "LOC",
            Metric::Bloc => "BLOC",
            Metric::Cloc => "CLOC",
            Metric::Files => "Files",
            Metric::Methods => "Methods",
            Metric::Statements => "Statements",
            Metric::MccTraditional => "MCC_traditional",
            Metric::MccModified => "MCC_modified",
            Metric::Cbo => "CBO",
            Metric::Dit => "DIT",
            Metric::Lcom => "LCOM",
            Metric::Noc => "NOC",
            Metric::Rfc => "RFC",
            Metric::Wmc => "WMC",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown metric name: {s}"))
    }
}

/// Named metric values attached to one entity (file, class or snapshot).
/// Absent entries mean the metric does not apply to the entity kind.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MetricVector(pub BTreeMap<Metric, f64>);

impl MetricVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, metric: Metric, value: f64) -> &mut Self {
        self.0.insert(metric, value);
        self
    }

    pub fn get(&self, metric: Metric) -> Option<f64> {
        self.0.get(&metric).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Metric, f64)> + '_ {
        self.0.iter().map(|(m, v)| (*m, *v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
        }
    }

    #[test]
    fn serializes_as_table_names() {
        let mut v = MetricVector::new();
        v.set(Metric::Loc, 3.0).set(Metric::MccTraditional, 2.0);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"LOC":3.0,"MCC_traditional":2.0}"#);
    }
}
