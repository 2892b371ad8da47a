//! Where a graph comes from, with a deterministic id per source.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::graph6::{parse_graph6_lines, Graph6Error};
use super::matrix::{parse_adjacency_matrix, MatrixError};
use crate::families::{self, prime_power, FamilyError};
use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum SourceError {
    #[error("unknown family {0:?}; known families: {list}", list = family_names().join(", "))]
    UnknownFamily(String),
    #[error("family {family} takes {expected} parameter(s) ({usage}), got {found}")]
    Arity {
        family: String,
        usage: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("parameter {0:?} is not a non-negative integer")]
    BadParam(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("cannot read {path}: {err}")]
    Read { path: PathBuf, err: std::io::Error },
    #[error("{path}, line {line}: {err}")]
    Graph6 { path: PathBuf, line: usize, err: Graph6Error },
    #[error("{path}: {err}")]
    Matrix { path: PathBuf, err: MatrixError },
    #[error("{path} contains no graphs")]
    NoGraphs { path: PathBuf },
}

/// How a graph came to exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Built here from a named family.
    Constructed,
    /// Read from supplied data that cannot be re-derived here.
    External,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileFormat {
    Graph6,
    Matrix,
}

impl FileFormat {
    /// By extension, then by content: a first data line of only `0`, `1` and whitespace is a
    /// matrix.
    pub fn infer(path: &Path, content: &[u8]) -> FileFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => return FileFormat::Graph6,
            Some("mat" | "adj" | "matrix") => return FileFormat::Matrix,
            _ => {}
        }
        let first = content
            .split(|&b| b == b'\n')
            .map(|l| l.trim_ascii())
            .find(|l| !l.is_empty() && !l.starts_with(b"#"));
        match first {
            Some(l) if l.iter().all(|b| matches!(b, b'0' | b'1' | b' ' | b'\t')) => {
                FileFormat::Matrix
            }
            _ => FileFormat::Graph6,
        }
    }
}

impl std::str::FromStr for FileFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(FileFormat::Graph6),
            "matrix" => Ok(FileFormat::Matrix),
            other => Err(format!("unknown format {other:?}, expected graph6 or matrix")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceKind {
    Family { name: String, params: Vec<u64> },
    /// `index` picks one graph out of a multi-graph graph6 file.
    File { path: PathBuf, format: FileFormat, index: Option<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSource {
    pub kind: SourceKind,
}

struct FamilyDef {
    name: &'static str,
    usage: &'static str,
    arity: usize,
    /// Positions of parameters that must be prime powers.
    prime_powers: &'static [usize],
}

const FAMILIES: &[FamilyDef] = &[
    FamilyDef { name: "complete", usage: "n", arity: 1, prime_powers: &[] },
    FamilyDef { name: "complete-bipartite", usage: "n", arity: 1, prime_powers: &[] },
    FamilyDef { name: "crown", usage: "n", arity: 1, prime_powers: &[] },
    FamilyDef { name: "multipartite", usage: "parts size", arity: 2, prime_powers: &[] },
    FamilyDef { name: "cycle", usage: "n", arity: 1, prime_powers: &[] },
    FamilyDef { name: "hamming", usage: "d n", arity: 2, prime_powers: &[] },
    FamilyDef { name: "folded-cube", usage: "d", arity: 1, prime_powers: &[] },
    FamilyDef { name: "johnson", usage: "n k", arity: 2, prime_powers: &[] },
    FamilyDef { name: "odd", usage: "valency", arity: 1, prime_powers: &[] },
    FamilyDef { name: "doubled-odd", usage: "valency", arity: 1, prime_powers: &[] },
    FamilyDef { name: "petersen", usage: "", arity: 0, prime_powers: &[] },
    FamilyDef { name: "tutte-coxeter", usage: "", arity: 0, prime_powers: &[] },
    FamilyDef { name: "grassmann", usage: "q n k", arity: 3, prime_powers: &[0] },
    FamilyDef { name: "doubled-grassmann", usage: "q m", arity: 2, prime_powers: &[0] },
    FamilyDef { name: "pg2", usage: "q", arity: 1, prime_powers: &[0] },
    FamilyDef { name: "ag2", usage: "q", arity: 1, prime_powers: &[0] },
    FamilyDef { name: "ag2-cayley", usage: "q", arity: 1, prime_powers: &[] },
    FamilyDef { name: "paley", usage: "q", arity: 1, prime_powers: &[0] },
    FamilyDef { name: "g22-6", usage: "", arity: 0, prime_powers: &[] },
    FamilyDef { name: "g64-8", usage: "", arity: 0, prime_powers: &[] },
];

pub fn family_names() -> Vec<&'static str> {
    FAMILIES.iter().map(|f| f.name).collect()
}

/// `name usage` for every family, one per line.
pub fn family_usage() -> String {
    FAMILIES
        .iter()
        .map(|f| format!("{} {}", f.name, f.usage).trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn small(x: u64) -> Result<usize, FamilyError> {
    usize::try_from(x).map_err(|_| FamilyError::InvalidParameter(format!("{x} is too large")))
}

impl GraphSource {
    /// Validates the name, the parameter count and prime-power parameters.
    pub fn family(name: &str, params: Vec<u64>) -> Result<GraphSource, SourceError> {
        let def = FAMILIES
            .iter()
            .find(|f| f.name == name)
            .ok_or_else(|| SourceError::UnknownFamily(name.to_string()))?;
        if params.len() != def.arity {
            return Err(SourceError::Arity {
                family: name.to_string(),
                usage: def.usage,
                expected: def.arity,
                found: params.len(),
            });
        }
        for &i in def.prime_powers {
            if prime_power(params[i]).is_none() {
                return Err(FamilyError::NotPrimePower(params[i]).into());
            }
        }
        Ok(GraphSource {
            kind: SourceKind::Family {
                name: name.to_string(),
                params,
            },
        })
    }

    pub fn parse_family(name: &str, params: &[String]) -> Result<GraphSource, SourceError> {
        let values = params
            .iter()
            .map(|p| p.parse::<u64>().map_err(|_| SourceError::BadParam(p.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        GraphSource::family(name, values)
    }

    /// Inverse of [`GraphSource::id`] for family ids.
    pub fn from_family_id(id: &str) -> Result<GraphSource, SourceError> {
        let mut parts = id.strip_prefix("family:").unwrap_or(id).split(':');
        let name = parts.next().unwrap_or_default();
        let params: Vec<String> = parts.map(str::to_string).collect();
        GraphSource::parse_family(name, &params)
    }

    pub fn file(path: impl Into<PathBuf>, format: FileFormat, index: Option<usize>) -> GraphSource {
        GraphSource {
            kind: SourceKind::File {
                path: path.into(),
                format,
                index,
            },
        }
    }

    /// `family:<name>[:<param>...]` or `file:<path>[#<index>]`.
    pub fn id(&self) -> String {
        match &self.kind {
            SourceKind::Family { name, params } => {
                let mut id = format!("family:{name}");
                for p in params {
                    id.push_str(&format!(":{p}"));
                }
                id
            }
            SourceKind::File { path, index, .. } => match index {
                Some(i) => format!("file:{}#{i}", path.display()),
                None => format!("file:{}", path.display()),
            },
        }
    }

    pub fn provenance(&self) -> Provenance {
        match self.kind {
            SourceKind::Family { .. } => Provenance::Constructed,
            SourceKind::File { .. } => Provenance::External,
        }
    }

    /// Known caveats about the constructed graph.
    pub fn warnings(&self) -> Vec<String> {
        match &self.kind {
            SourceKind::Family { name, params } if name == "ag2" && params[0] == 2 => vec![
                "AG(2,2) minus a parallel class is the 8-cycle C8; it is sometimes listed as C4"
                    .to_string(),
            ],
            _ => Vec::new(),
        }
    }

    /// Builds a family graph, or reads the selected graph of a file (the first one when no
    /// index is set).
    pub fn build(&self, cap: usize) -> Result<Graph, SourceError> {
        match &self.kind {
            SourceKind::Family { name, params } => Ok(build_family(name, params, cap)?),
            SourceKind::File { path, format, index } => {
                let graphs = read_graphs(path, Some(*format))?;
                let i = index.unwrap_or(0);
                let count = graphs.len();
                graphs.into_iter().nth(i).ok_or_else(|| {
                    FamilyError::InvalidParameter(format!(
                        "graph index {i} out of range, file has {count}"
                    ))
                    .into()
                })
            }
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Every graph in a file. Matrix files hold one graph; graph6 files one per line.
pub fn read_graphs(path: &Path, format: Option<FileFormat>) -> Result<Vec<Graph>, SourceError> {
    let bytes = std::fs::read(path).map_err(|err| SourceError::Read {
        path: path.to_path_buf(),
        err,
    })?;
    let format = format.unwrap_or_else(|| FileFormat::infer(path, &bytes));
    let graphs = match format {
        FileFormat::Graph6 => parse_graph6_lines(&bytes).map_err(|(line, err)| SourceError::Graph6 {
            path: path.to_path_buf(),
            line,
            err,
        })?,
        FileFormat::Matrix => {
            let text = String::from_utf8_lossy(&bytes);
            vec![parse_adjacency_matrix(&text).map_err(|err| SourceError::Matrix {
                path: path.to_path_buf(),
                err,
            })?]
        }
    };
    if graphs.is_empty() {
        return Err(SourceError::NoGraphs {
            path: path.to_path_buf(),
        });
    }
    Ok(graphs)
}

fn build_family(name: &str, p: &[u64], cap: usize) -> Result<Graph, FamilyError> {
    let check = |n: u64| -> Result<usize, FamilyError> {
        let n = small(n)?;
        if n > cap {
            return Err(FamilyError::CapExceeded {
                vertices: n as u128,
                cap,
            });
        }
        Ok(n)
    };
    match name {
        "complete" => families::complete(check(p[0])?),
        "complete-bipartite" => families::complete_bipartite(check(p[0].saturating_mul(2))? / 2),
        "crown" => families::crown(check(p[0].saturating_mul(2))? / 2),
        "multipartite" => {
            check(p[0].saturating_mul(p[1]))?;
            families::complete_multipartite(small(p[0])?, small(p[1])?)
        }
        "cycle" => families::cycle(check(p[0])?),
        "hamming" => families::hamming(small(p[0])?, small(p[1])?, cap),
        "folded-cube" => families::folded_cube(small(p[0])?, cap),
        "johnson" => families::johnson(small(p[0])?, small(p[1])?, cap),
        "odd" | "doubled-odd" => {
            let v = small(p[0])?;
            if v < 2 {
                return Err(FamilyError::InvalidParameter(format!(
                    "odd graph valency must be at least 2, got {v}"
                )));
            }
            if name == "odd" {
                families::odd_graph(v - 1, cap)
            } else {
                families::doubled_odd(v - 1, cap)
            }
        }
        "petersen" => families::odd_graph(2, cap),
        "tutte-coxeter" => Ok(families::tutte_coxeter()),
        "grassmann" => families::grassmann(p[0], small(p[1])?, small(p[2])?, cap),
        "doubled-grassmann" => families::doubled_grassmann(p[0], small(p[1])?, cap),
        "pg2" => families::pg2_incidence(p[0], cap),
        "ag2" => families::ag2_minus_parallel(p[0], cap),
        "ag2-cayley" => families::ag2_cayley(p[0]),
        "paley" => families::paley(p[0], cap),
        "g22-6" => Ok(families::g22_6()),
        "g64-8" => Ok(families::g64_8()),
        other => unreachable!("family {other} passed validation"),
    }
}
