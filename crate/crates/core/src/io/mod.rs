//! Graph ingestion, named-family sources and report emission.

mod graph6;
mod matrix;
mod report;
mod source;

pub use graph6::{encode_graph6, parse_graph6, parse_graph6_lines, Graph6Error, GRAPH6_MAX_ORDER};
pub use matrix::{encode_adjacency_matrix, parse_adjacency_matrix, MatrixError};
pub use report::{
    analyze, analyze_graph, tsv_header, tsv_table, AnalyzeError, AnalyzeOptions, OracleReport,
    ReportDocument, Timings, SCHEMA_VERSION, TOOL_VERSION, TSV_COLUMNS,
};
pub use source::{
    family_names, family_usage, read_graphs, FileFormat, GraphSource, Provenance, SourceError,
    SourceKind,
};
