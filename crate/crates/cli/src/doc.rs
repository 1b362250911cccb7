//! The machine-readable report document.
//!
//! One top-level object with the fields `input`, `hypothesis`, `S`, `T`,
//! `ideal_S`, `ideal_T`, `closure`, `is_ratliff_rush`, `reduction_bound`.
//! The keys `S`/`T` carry the y-fold and x-fold point sets. Exponent pairs
//! are two-element integer arrays sorted by ascending x-exponent, so the
//! rendering is byte-identical across runs and round-trips losslessly.

use serde::{Deserialize, Serialize};

use rrclosure::semigroup::PointSet;
use rrclosure::{ClosureReport, HypothesisVerdict, LatticePoint, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: Vec<[u64; 2]>,
    pub hypothesis: HypothesisDocument,
    #[serde(rename = "S")]
    pub s: PointSetDocument,
    #[serde(rename = "T")]
    pub t: PointSetDocument,
    #[serde(rename = "ideal_S")]
    pub ideal_s: Vec<[u64; 2]>,
    #[serde(rename = "ideal_T")]
    pub ideal_t: Vec<[u64; 2]>,
    pub closure: Vec<[u64; 2]>,
    pub is_ratliff_rush: bool,
    pub reduction_bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisDocument {
    pub ok: bool,
    pub failures: Vec<FailureDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureDocument {
    pub generator: [u64; 2],
    /// `(shortfall, corner product)` of the corner criterion.
    pub deficit: [u64; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetDocument {
    pub minimal: Vec<[u64; 2]>,
    pub points: Vec<[u64; 2]>,
}

fn pair(p: &LatticePoint) -> [u64; 2] {
    [p.a, p.b]
}

fn ideal_pairs(i: &MonomialIdeal) -> Vec<[u64; 2]> {
    i.gens().iter().map(pair).collect()
}

fn point_set(ps: &PointSet) -> PointSetDocument {
    PointSetDocument {
        minimal: ps.minimal().iter().map(pair).collect(),
        points: ps.points().iter().map(pair).collect(),
    }
}

pub fn hypothesis_document(verdict: &HypothesisVerdict) -> HypothesisDocument {
    HypothesisDocument {
        ok: verdict.ok(),
        failures: verdict
            .failures()
            .iter()
            .map(|f| FailureDocument {
                generator: pair(&f.generator),
                deficit: [f.deficit.0, f.deficit.1],
            })
            .collect(),
    }
}

impl From<&ClosureReport> for ReportDocument {
    fn from(report: &ClosureReport) -> Self {
        ReportDocument {
            input: ideal_pairs(report.input.ideal()),
            hypothesis: hypothesis_document(&report.hypothesis),
            s: point_set(&report.y_fold),
            t: point_set(&report.x_fold),
            ideal_s: ideal_pairs(&report.y_fold_ideal),
            ideal_t: ideal_pairs(&report.x_fold_ideal),
            closure: ideal_pairs(&report.closure),
            is_ratliff_rush: report.is_ratliff_rush,
            reduction_bound: report.reduction_bound,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rrclosure::{ratliff_rush_closure, PrimaryStaircase};

    #[test]
    fn document_round_trips() {
        let staircase = PrimaryStaircase::from_points(
            [(0u64, 28u64), (2, 26), (10, 14), (11, 12), (15, 5), (17, 0)]
                .map(LatticePoint::from),
        )
        .unwrap();
        let report = ratliff_rush_closure(&staircase).unwrap();
        let doc = ReportDocument::from(&report);
        let rendered = serde_json::to_string_pretty(&doc).unwrap();
        let parsed: ReportDocument = serde_json::from_str(&rendered).unwrap();
        assert_eq!(parsed, doc);
        // Deterministic rendering.
        assert_eq!(rendered, serde_json::to_string_pretty(&ReportDocument::from(&report)).unwrap());
    }
}
