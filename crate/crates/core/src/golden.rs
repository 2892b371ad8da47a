//! Reference rows for the constructible distance-transitive graphs of valency 3 to 12, with
//! automorphism group orders worked out from the listed group structures.

use num_bigint::BigUint;

use crate::graph::Girth;
use crate::io::{analyze, AnalyzeOptions, GraphSource, ReportDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    /// Valency table the row belongs to, numbered from 1 for valency 3.
    pub table: u8,
    pub label: &'static str,
    /// Family id as accepted by [`GraphSource::from_family_id`].
    pub source: &'static str,
    pub array: &'static str,
    pub diameter: usize,
    pub girth: usize,
    pub arc_level: u32,
    pub aut_order: u128,
    pub gt: bool,
}

const fn row(
    table: u8,
    label: &'static str,
    source: &'static str,
    array: &'static str,
    (diameter, girth, arc_level): (usize, usize, u32),
    aut_order: u128,
    gt: bool,
) -> GoldenRow {
    GoldenRow {
        table,
        label,
        source,
        array,
        diameter,
        girth,
        arc_level,
        aut_order,
        gt,
    }
}

pub const GOLDEN_ROWS: &[GoldenRow] = &[
    row(1, "K4", "family:complete:4", "{3; 1}", (1, 3, 2), 24, true),
    row(1, "K3,3", "family:complete-bipartite:3", "{3, 2; 1, 3}", (2, 4, 3), 72, true),
    row(1, "Petersen", "family:odd:3", "{3, 2; 1, 1}", (2, 5, 3), 120, true),
    row(1, "H(3,2)", "family:hamming:3:2", "{3, 2, 1; 1, 2, 3}", (3, 4, 2), 48, true),
    row(1, "Heawood", "family:pg2:2", "{3, 2, 2; 1, 1, 3}", (3, 6, 4), 336, true),
    row(1, "AG(2,3)", "family:ag2:3", "{3, 2, 2, 1; 1, 1, 2, 3}", (4, 6, 3), 216, true),
    row(1, "Tutte-Coxeter", "family:tutte-coxeter", "{3, 2, 2, 2; 1, 1, 1, 3}", (4, 8, 5), 1440, true),
    row(2, "K5", "family:complete:5", "{4; 1}", (1, 3, 2), 120, true),
    row(2, "K4,4", "family:complete-bipartite:4", "{4, 3; 1, 4}", (2, 4, 3), 1152, true),
    row(2, "K5,5-5K2", "family:crown:5", "{4, 3, 1; 1, 3, 4}", (3, 4, 2), 240, true),
    row(2, "H(4,2)", "family:hamming:4:2", "{4, 3, 2, 1; 1, 2, 3, 4}", (4, 4, 2), 384, true),
    row(2, "O4", "family:odd:4", "{4, 3, 3; 1, 1, 2}", (3, 6, 3), 5040, true),
    row(2, "2.O4", "family:doubled-odd:4", "{4, 3, 3, 2, 2, 1, 1; 1, 1, 2, 2, 3, 3, 4}", (7, 6, 3), 10080, true),
    row(2, "K3[2]", "family:multipartite:3:2", "{4, 1; 1, 4}", (2, 3, 1), 48, true),
    row(2, "H(2,3)", "family:hamming:2:3", "{4, 2; 1, 2}", (2, 3, 1), 72, true),
    row(2, "Delta3,3", "family:pg2:3", "{4, 3, 3; 1, 1, 4}", (3, 6, 4), 11232, true),
    row(2, "AG(2,4)", "family:ag2:4", "{4, 3, 3, 1; 1, 1, 3, 4}", (4, 6, 3), 2304, true),
    row(3, "K6", "family:complete:6", "{5; 1}", (1, 3, 2), 720, true),
    row(3, "K5,5", "family:complete-bipartite:5", "{5, 4; 1, 5}", (2, 4, 3), 28800, true),
    row(3, "K6,6-6K2", "family:crown:6", "{5, 4, 1; 1, 4, 5}", (3, 4, 2), 1440, true),
    row(3, "H(5,2)", "family:hamming:5:2", "{5, 4, 3, 2, 1; 1, 2, 3, 4, 5}", (5, 4, 2), 3840, true),
    row(3, "Folded 5-cube", "family:folded-cube:5", "{5, 4; 1, 2}", (2, 4, 2), 1920, true),
    row(3, "O5", "family:odd:5", "{5, 4, 4, 3; 1, 1, 2, 2}", (4, 6, 3), 362880, true),
    row(3, "2.O5", "family:doubled-odd:5", "{5, 4, 4, 3, 3, 2, 2, 1, 1; 1, 1, 2, 2, 3, 3, 4, 4, 5}", (9, 6, 3), 725760, true),
    row(3, "Delta3,4", "family:pg2:4", "{5, 4, 4; 1, 1, 5}", (3, 6, 4), 241920, true),
    row(3, "AG(2,5)", "family:ag2:5", "{5, 4, 4, 1; 1, 1, 4, 5}", (4, 6, 3), 4000, true),
    row(4, "K7", "family:complete:7", "{6; 1}", (1, 3, 2), 5040, true),
    row(4, "K6,6", "family:complete-bipartite:6", "{6, 5; 1, 6}", (2, 4, 3), 1036800, true),
    row(4, "K7,7-7K2", "family:crown:7", "{6, 5, 1; 1, 5, 6}", (3, 4, 2), 10080, true),
    row(4, "H(6,2)", "family:hamming:6:2", "{6, 5, 4, 3, 2, 1; 1, 2, 3, 4, 5, 6}", (6, 4, 2), 46080, true),
    row(4, "Folded 6-cube", "family:folded-cube:6", "{6, 5, 4; 1, 2, 6}", (3, 4, 2), 23040, true),
    row(4, "O6", "family:odd:6", "{6, 5, 5, 4, 4; 1, 1, 2, 2, 3}", (5, 6, 3), 39916800, true),
    row(4, "2.O6", "family:doubled-odd:6", "{6, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1; 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6}", (11, 6, 3), 79833600, true),
    row(4, "K4[2]", "family:multipartite:4:2", "{6, 1; 1, 6}", (2, 3, 1), 384, true),
    row(4, "K3[3]", "family:multipartite:3:3", "{6, 2; 1, 6}", (2, 3, 1), 1296, true),
    row(4, "J(5,2)", "family:johnson:5:2", "{6, 2; 1, 4}", (2, 3, 1), 120, true),
    row(4, "P(13)", "family:paley:13", "{6, 3; 1, 3}", (2, 3, 1), 78, false),
    row(4, "H(2,4)", "family:hamming:2:4", "{6, 3; 1, 2}", (2, 3, 1), 1152, true),
    row(4, "H(3,3)", "family:hamming:3:3", "{6, 4, 2; 1, 2, 3}", (3, 3, 1), 1296, true),
    row(4, "G22,6", "family:g22-6", "{6, 5, 3; 1, 3, 6}", (3, 4, 2), 1320, false),
    row(4, "Delta3,5", "family:pg2:5", "{6, 5, 5; 1, 1, 6}", (3, 6, 4), 744000, true),
    row(5, "Folded 7-cube", "family:folded-cube:7", "{7, 6, 5; 1, 2, 3}", (3, 4, 2), 322560, true),
    row(5, "AG(2,7)", "family:ag2:7", "{7, 6, 6, 1; 1, 1, 6, 7}", (4, 6, 3), 24696, true),
    row(5, "2.G2^5(2)", "family:doubled-grassmann:2:2", "{7, 6, 6, 4, 4; 1, 1, 3, 3, 7}", (5, 6, 3), 19998720, true),
    row(6, "J(6,2)", "family:johnson:6:2", "{8, 3; 1, 4}", (2, 3, 1), 720, true),
    row(6, "P(17)", "family:paley:17", "{8, 4; 1, 4}", (2, 3, 1), 136, false),
    row(6, "H(2,5)", "family:hamming:2:5", "{8, 4; 1, 2}", (2, 3, 1), 28800, true),
    row(6, "G64,8", "family:g64-8", "{8, 7, 6, 1; 1, 2, 7, 8}", (4, 4, 2), 10752, false),
    // 2q^3(q-1)^2 f for q = p^f; the commonly printed 2^{3+6}:(7.6) drops a factor of 7
    row(6, "AG(2,8)", "family:ag2:8", "{8, 7, 7, 1; 1, 1, 7, 8}", (4, 6, 3), 150528, true),
    row(10, "P(25)", "family:paley:25", "{12, 6; 1, 6}", (2, 3, 1), 600, false),
];

pub fn golden_row(source: &str) -> Option<&'static GoldenRow> {
    GOLDEN_ROWS.iter().find(|r| r.source == source)
}

#[derive(Clone, Debug)]
pub struct RowCheck {
    pub row: &'static GoldenRow,
    pub document: Option<ReportDocument>,
    /// Empty when the row reproduces.
    pub mismatches: Vec<String>,
}

impl RowCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Classifies the row's graph and lists every field that differs from the row, plus any
/// violated consistency law.
pub fn check_row(row: &'static GoldenRow, cap: usize, opts: AnalyzeOptions) -> RowCheck {
    let doc = GraphSource::from_family_id(row.source)
        .map_err(|e| e.to_string())
        .and_then(|s| analyze(&s, cap, opts).map_err(|e| e.to_string()));
    let doc = match doc {
        Ok(doc) => doc,
        Err(e) => {
            return RowCheck {
                row,
                document: None,
                mismatches: vec![format!("error: {e}")],
            }
        }
    };
    let r = &doc.report;
    let mut m = Vec::new();
    let array = r.intersection_array.as_ref().map(|a| a.to_string());
    if array.as_deref() != Some(row.array) {
        m.push(format!("array {array:?}, expected {}", row.array));
    }
    let got = (r.diameter, r.girth, r.arc_level.exact());
    let want = (row.diameter, Girth::Finite(row.girth), Some(row.arc_level));
    if got != want {
        m.push(format!(
            "(d, g, s) = {}, expected ({}, {}, {})",
            r.dgs(),
            row.diameter,
            row.girth,
            row.arc_level
        ));
    }
    if r.aut_order != BigUint::from(row.aut_order) {
        m.push(format!("|Aut| = {}, expected {}", r.aut_order, row.aut_order));
    }
    if r.gt != row.gt {
        m.push(format!("GT = {}, expected {}", r.gt, row.gt));
    }
    if !r.dt {
        m.push("not distance transitive".into());
    }
    if r.gt && r.divisibility != Some(true) {
        m.push("divisibility check failed".into());
    }
    if !doc.oracle_agrees() {
        m.push(format!("oracle disagrees: {:?}", doc.oracle));
    }
    RowCheck {
        row,
        document: Some(doc),
        mismatches: m,
    }
}
