//! Distance transitivity and the exact arc and geodesic transitivity levels of a graph under
//! its full automorphism group.

mod levels;
mod oracle;

pub use levels::{
    arc_level, geodesic_level, is_distance_transitive, is_vertex_transitive, ArcLevel,
    GeodesicOptions, GeodesicOutcome, ARC_LEVEL_CAP,
};
pub use oracle::{
    all_geodesics, brute_force_geodesic_level, brute_force_geodesic_orbit_count,
    brute_force_automorphism_count, divisibility_check, BRUTE_FORCE_AUT_MAX_ORDER,
    DEFAULT_GEODESIC_BUDGET,
};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::autgroup::{automorphism_group, AutResult};
use crate::graph::{Girth, Graph, GraphError, IntersectionArray};
use crate::permgroup::PermError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("valency {0} is below 2")]
    ValencyTooSmall(usize),
    #[error("more than {budget} geodesics")]
    BudgetExceeded { budget: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Arbitrary-precision integers travel as decimal strings.
mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// One table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationReport {
    pub id: String,
    pub n: usize,
    pub valency: Option<usize>,
    pub intersection_array: Option<IntersectionArray>,
    pub diameter: usize,
    pub girth: Girth,
    pub arc_level: ArcLevel,
    pub geodesic_level: usize,
    pub gt: bool,
    pub dt: bool,
    pub vertex_transitive: bool,
    #[serde(with = "decimal")]
    pub aut_order: BigUint,
    #[serde(with = "decimal")]
    pub stabilizer_order: BigUint,
    /// `b_0 ⋯ b_{s-1}` divides `|A_u|`; absent without an array or for level 0.
    pub divisibility: Option<bool>,
}

impl ClassificationReport {
    /// `(d, g, s)` as printed in the tables.
    pub fn dgs(&self) -> String {
        format!("({}, {}, {})", self.diameter, self.girth, self.arc_level)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub early_exit: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { early_exit: true }
    }
}

pub fn classify(g: &Graph, id: &str) -> Result<ClassificationReport, ClassifyError> {
    classify_with(g, id, ClassifyOptions::default())
}

pub fn classify_with(
    g: &Graph,
    id: &str,
    opts: ClassifyOptions,
) -> Result<ClassificationReport, ClassifyError> {
    precheck(g)?;
    let aut = automorphism_group(g);
    classify_using(g, id, &aut, opts)
}

fn precheck(g: &Graph) -> Result<(), ClassifyError> {
    if g.order() < 2 {
        return Err(ClassifyError::TooSmall);
    }
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    Ok(())
}

/// Classification against an automorphism group computed beforehand.
pub fn classify_using(
    g: &Graph,
    id: &str,
    aut: &AutResult,
    opts: ClassifyOptions,
) -> Result<ClassificationReport, ClassifyError> {
    precheck(g)?;
    let a = &aut.group;
    let array = g.intersection_array()?.array().cloned();
    let vt = is_vertex_transitive(g, a);
    let dt = is_distance_transitive(g, a)?;
    let geo = geodesic_level(
        g,
        a,
        array.as_ref(),
        GeodesicOptions {
            early_exit: opts.early_exit,
            base_vertex: 0,
        },
    )?;
    let arc = match g.valency() {
        Some(k) if k < 2 => ArcLevel::Exact(0),
        _ => arc_level(g, a)?,
    };
    let stabilizer_order = a.stabilizer_tower(&[0])?.order(1);
    let divisibility = match &array {
        Some(arr) if geo.level >= 1 => Some(divisibility_check(arr, geo.level, &stabilizer_order)),
        _ => None,
    };
    Ok(ClassificationReport {
        id: id.to_string(),
        n: g.order(),
        valency: g.valency(),
        intersection_array: array,
        diameter: geo.diameter,
        girth: g.girth(),
        arc_level: arc,
        geodesic_level: geo.level,
        gt: vt && geo.level == geo.diameter,
        dt,
        vertex_transitive: vt,
        aut_order: a.order(),
        stabilizer_order,
        divisibility,
    })
}
