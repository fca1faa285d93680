//! Stable JSON and text rendering of character series.

use deligne_core::{CaseTag, CharacterSeries, KElement, Partition};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub case: String,
    pub level: String,
    pub order: String,
    pub series: Vec<SeriesCoefficient>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths_agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesCoefficient {
    pub q: String,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub mult: String,
}

fn parts(p: &Partition) -> Vec<String> {
    p.parts().iter().map(usize::to_string).collect()
}

/// Terms in bipartition order: total size, then `left`, then `right`.
pub fn terms(k: &KElement) -> Vec<Term> {
    k.iter()
        .map(|(b, m)| Term { left: parts(&b.left), right: parts(&b.right), mult: m.to_string() })
        .collect()
}

impl OutputRecord {
    pub fn from_series(case: CaseTag, s: &CharacterSeries) -> Self {
        OutputRecord {
            case: case.name().to_string(),
            level: s.level.to_string(),
            order: s.order().to_string(),
            series: s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(q, c)| SeriesCoefficient { q: q.to_string(), terms: terms(c) })
                .collect(),
            paths_agree: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}
