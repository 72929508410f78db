//! Structural analysis of AS-level topology maps and synthetic power-law
//! graphs: degree ranking, rich-club coefficient, rank-binned link
//! distribution, triangle/rectangle coefficients, attack and error
//! percolation traces, preferential-attachment generation, and a map-diff
//! engine that classifies the links one snapshot misses against a more
//! complete one.

pub mod diff;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod resilience;
mod union_find;

pub use diff::{MapDiffReport, diff_maps};
pub use error::Error;
pub use generate::{BaParams, enrich_club, generate_ba};
pub use graph::{DegreeRanking, Graph, GraphBuilder, NodeLabel};
pub use io::{
    EdgeListDocument, parse_edge_list, read_edge_list_file, write_curve_csv, write_edge_list,
    write_edge_list_file,
};
pub use metrics::{
    CycleCoefficientTable, RankBinMatrix, RichClubCurve, RichClubPoint, TopologySummary,
    cycle_coefficients, fit_power_law, fit_power_law_from_degrees, link_rank_matrix,
    rectangle_coefficients, rich_club_at, rich_club_curve, summarize, triangle_coefficients,
};
pub use resilience::{RemovalMode, RemovalTrace, TracePoint, attack_trace, error_trace};
