//! Versioned JSON report documents, the TSV summary, and the pipeline that produces them.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::source::{GraphSource, Provenance, SourceError};
use crate::autgroup::automorphism_group;
use crate::classify::{
    brute_force_automorphism_count, brute_force_geodesic_level, classify_using,
    ClassificationReport, ClassifyError, ClassifyOptions, DEFAULT_GEODESIC_BUDGET,
};
use crate::graph::Graph;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Fixed column order of the summary.
pub const TSV_COLUMNS: [&str; 11] = [
    "id",
    "n",
    "valency",
    "array",
    "d",
    "g",
    "s",
    "autOrder",
    "geodesicLevel",
    "GT",
    "DT",
];

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Timings {
    pub construction_ms: f64,
    pub aut_ms: f64,
    pub classify_ms: f64,
}

/// Brute-force cross-checks. A `None` field was skipped as too large.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleReport {
    pub geodesic_level: Option<usize>,
    pub aut_order: Option<u64>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    pub schema: u32,
    pub version: String,
    pub source: String,
    pub provenance: Provenance,
    #[serde(flatten)]
    pub report: ClassificationReport,
    pub timings: Timings,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields serialize")
    }

    pub fn from_json(text: &str) -> Result<ReportDocument, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// The document with its timings zeroed, for comparisons across runs.
    pub fn without_timings(&self) -> ReportDocument {
        ReportDocument {
            timings: Timings::default(),
            ..self.clone()
        }
    }

    /// Whether every oracle check that ran agreed. Vacuously true without an oracle.
    pub fn oracle_agrees(&self) -> bool {
        self.oracle.as_ref().is_none_or(|o| o.agrees)
    }

    pub fn tsv_row(&self) -> String {
        let r = &self.report;
        let yn = |b: bool| if b { "Y" } else { "N" };
        [
            r.id.clone(),
            r.n.to_string(),
            r.valency.map_or("-".into(), |k| k.to_string()),
            r.intersection_array
                .as_ref()
                .map_or("-".into(), |a| a.to_string()),
            r.diameter.to_string(),
            r.girth.to_string(),
            r.arc_level.to_string(),
            r.aut_order.to_string(),
            r.geodesic_level.to_string(),
            yn(r.gt).into(),
            yn(r.dt).into(),
        ]
        .join("\t")
    }
}

pub fn tsv_header() -> String {
    TSV_COLUMNS.join("\t")
}

/// Header plus one row per document, newline terminated.
pub fn tsv_table<'a>(docs: impl IntoIterator<Item = &'a ReportDocument>) -> String {
    let mut out = tsv_header();
    out.push('\n');
    for d in docs {
        out.push_str(&d.tsv_row());
        out.push('\n');
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub early_exit: bool,
    pub oracle: bool,
    /// Total geodesics per level the oracle may enumerate.
    pub geodesic_budget: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            early_exit: true,
            oracle: false,
            geodesic_budget: DEFAULT_GEODESIC_BUDGET,
        }
    }
}

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error("{id}: {err}")]
    Classify { id: String, err: ClassifyError },
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Builds the source graph and classifies it.
pub fn analyze(
    source: &GraphSource,
    cap: usize,
    opts: AnalyzeOptions,
) -> Result<ReportDocument, AnalyzeError> {
    let start = Instant::now();
    let g = source.build(cap)?;
    let construction_ms = millis(start);
    analyze_graph(
        &source.id(),
        source.provenance(),
        &g,
        construction_ms,
        source.warnings(),
        opts,
    )
}

/// Classifies an already built graph.
pub fn analyze_graph(
    id: &str,
    provenance: Provenance,
    g: &Graph,
    construction_ms: f64,
    mut warnings: Vec<String>,
    opts: AnalyzeOptions,
) -> Result<ReportDocument, AnalyzeError> {
    let wrap = |err| AnalyzeError::Classify {
        id: id.to_string(),
        err,
    };
    if g.order() < 2 {
        return Err(wrap(ClassifyError::TooSmall));
    }
    if !g.is_connected() {
        return Err(wrap(ClassifyError::Disconnected));
    }
    let start = Instant::now();
    let aut = automorphism_group(g);
    let aut_ms = millis(start);
    let start = Instant::now();
    let report = classify_using(
        g,
        id,
        &aut,
        ClassifyOptions {
            early_exit: opts.early_exit,
        },
    )
    .map_err(wrap)?;
    let classify_ms = millis(start);
    if provenance == Provenance::External {
        warnings.push("data provenance: external".to_string());
    }
    let oracle = if opts.oracle {
        Some(run_oracle(g, &aut.group, &report, opts.geodesic_budget).map_err(wrap)?)
    } else {
        None
    };
    Ok(ReportDocument {
        schema: SCHEMA_VERSION,
        version: TOOL_VERSION.to_string(),
        source: id.to_string(),
        provenance,
        report,
        timings: Timings {
            construction_ms,
            aut_ms,
            classify_ms,
        },
        warnings,
        oracle,
    })
}

fn run_oracle(
    g: &Graph,
    a: &crate::permgroup::PermutationGroup,
    report: &ClassificationReport,
    budget: usize,
) -> Result<OracleReport, ClassifyError> {
    let geodesic_level = match brute_force_geodesic_level(g, a, report.diameter, budget) {
        Ok(level) => Some(level),
        Err(ClassifyError::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let aut_order = brute_force_automorphism_count(g);
    let agrees = geodesic_level.is_none_or(|l| l == report.geodesic_level)
        && aut_order.is_none_or(|o| report.aut_order == o.into());
    Ok(OracleReport {
        geodesic_level,
        aut_order,
        agrees,
    })
}
