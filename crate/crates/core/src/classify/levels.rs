use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ClassifyError;
use crate::graph::{Graph, IntersectionArray};
use crate::permgroup::PermutationGroup;

/// Arc levels at or above this are never reported as exact for valency ≥ 3.
pub const ARC_LEVEL_CAP: u32 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcLevel {
    Exact(u32),
    /// Every checked level up to and including the value passed.
    CapReached(u32),
    /// Cycles: every arc extends uniquely, so no level fails.
    Unbounded,
}

impl ArcLevel {
    pub fn exact(&self) -> Option<u32> {
        match self {
            ArcLevel::Exact(s) => Some(*s),
            _ => None,
        }
    }
}

impl fmt::Display for ArcLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcLevel::Exact(s) => write!(f, "{s}"),
            ArcLevel::CapReached(s) => write!(f, ">={s}"),
            ArcLevel::Unbounded => f.write_str("inf"),
        }
    }
}

impl Serialize for ArcLevel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ArcLevel::Exact(v) => s.serialize_u32(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ArcLevel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(ArcLevel::Exact(v)),
            Raw::Text(t) if t == "inf" => Ok(ArcLevel::Unbounded),
            Raw::Text(t) => t
                .strip_prefix(">=")
                .and_then(|v| v.parse().ok())
                .map(ArcLevel::CapReached)
                .ok_or_else(|| serde::de::Error::custom(format!("bad arc level {t:?}"))),
        }
    }
}

pub fn is_vertex_transitive(g: &Graph, a: &PermutationGroup) -> bool {
    g.order() > 0 && a.degree() == g.order() && a.is_transitive()
}

fn check_connected(g: &Graph) -> Result<(), ClassifyError> {
    if g.order() == 0 || !g.is_connected() {
        Err(ClassifyError::Disconnected)
    } else {
        Ok(())
    }
}

/// Vertex transitive and `A_u` transitive on every sphere around `u = 0`.
pub fn is_distance_transitive(g: &Graph, a: &PermutationGroup) -> Result<bool, ClassifyError> {
    check_connected(g)?;
    if !is_vertex_transitive(g, a) {
        return Ok(false);
    }
    let layers = g.distance_layers(0)?;
    let tower = a.stabilizer_tower(&[0])?;
    Ok(layers
        .layers
        .iter()
        .skip(1)
        .all(|sphere| tower.orbit(1, sphere[0]).len() == sphere.len()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeodesicOptions {
    /// Stop once a certified level `s` has `b_s ≤ 1`.
    pub early_exit: bool,
    pub base_vertex: usize,
}

impl Default for GeodesicOptions {
    fn default() -> Self {
        GeodesicOptions {
            early_exit: true,
            base_vertex: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodesicOutcome {
    pub level: usize,
    pub diameter: usize,
    /// The fixed geodesic `x_0, …, x_d`.
    pub geodesic: Vec<usize>,
    /// Outcome of each check actually performed, for `i = 1, 2, …`.
    pub checks: Vec<bool>,
    /// The level `s` whose `b_s ≤ 1` ended the checks early.
    pub early_exit_at: Option<usize>,
}

/// The largest `s ≤ d` with the graph `(A, s)`-geodesic transitive.
///
/// Along one geodesic `x_0 = u, …, x_d` the stabilizer of `x_0, …, x_{i-1}` must be transitive
/// on `Γ(x_{i-1}) ∩ Γ_i(u)` for each `i`; by induction this single geodesic represents all of
/// them. Graphs that are not vertex transitive get level 0.
pub fn geodesic_level(
    g: &Graph,
    a: &PermutationGroup,
    array: Option<&IntersectionArray>,
    opts: GeodesicOptions,
) -> Result<GeodesicOutcome, ClassifyError> {
    check_connected(g)?;
    let u = opts.base_vertex;
    g.check_vertex(u)?;
    let layers = g.distance_layers(u)?;
    let d = layers.eccentricity();
    let target = layers.layers[d][0];
    let geodesic = g.one_geodesic(u, target)?;
    let mut out = GeodesicOutcome {
        level: 0,
        diameter: d,
        geodesic,
        checks: Vec::new(),
        early_exit_at: None,
    };
    if !is_vertex_transitive(g, a) {
        return Ok(out);
    }
    let tower = a.stabilizer_tower(&out.geodesic[..d])?;
    let dist = g.distances_from(u)?;
    for i in 1..=d {
        let prev = out.geodesic[i - 1];
        let orbit = tower.orbit(i, out.geodesic[i]);
        let extensions = g
            .neighbors(prev)
            .iter()
            .filter(|&&w| dist[w as usize] as usize == i);
        let ok = extensions.clone().all(|&w| orbit.binary_search(&(w as usize)).is_ok());
        out.checks.push(ok);
        if !ok {
            break;
        }
        out.level = i;
        if opts.early_exit && i < d {
            if let Some(arr) = array {
                if arr.b(i) <= 1 {
                    out.early_exit_at = Some(i);
                    out.level = d;
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// The largest `s` with the graph `(A, s)`-arc transitive, along the greedy non-backtracking
/// arc from vertex 0 through smallest-index neighbours.
pub fn arc_level(g: &Graph, a: &PermutationGroup) -> Result<ArcLevel, ClassifyError> {
    check_connected(g)?;
    let Some(k) = g.valency() else {
        return Ok(ArcLevel::Exact(0));
    };
    if k < 2 {
        return Err(ClassifyError::ValencyTooSmall(k));
    }
    if !is_vertex_transitive(g, a) {
        return Ok(ArcLevel::Exact(0));
    }
    if k == 2 {
        return Ok(ArcLevel::Unbounded);
    }
    let limit = ARC_LEVEL_CAP as usize + 1;
    let mut arc = vec![0usize, g.neighbors(0)[0] as usize];
    while arc.len() <= limit {
        let last = arc[arc.len() - 1];
        let back = arc[arc.len() - 2];
        let next = g
            .neighbors(last)
            .iter()
            .map(|&w| w as usize)
            .find(|&w| w != back)
            .expect("valency at least 3");
        arc.push(next);
    }
    let tower = a.stabilizer_tower(&arc)?;
    // level 1: A_u transitive on Γ(u)
    if tower.orbit(1, arc[1]).len() != k {
        return Ok(ArcLevel::Exact(0));
    }
    for s in 1..limit {
        let orbit = tower.orbit(s + 1, arc[s + 1]);
        let ok = g
            .neighbors(arc[s])
            .iter()
            .map(|&w| w as usize)
            .filter(|&w| w != arc[s - 1])
            .all(|w| orbit.binary_search(&w).is_ok());
        if !ok {
            return Ok(ArcLevel::Exact(s as u32));
        }
    }
    Ok(ArcLevel::CapReached(limit as u32))
}
