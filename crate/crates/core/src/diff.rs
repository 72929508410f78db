//! Comparison of two connectivity maps of the same network.
//!
//! Map A is the sparser snapshot, map B the more complete reference. The
//! missing links are B's edges absent from A; they are classified by the
//! degree ranks their endpoints hold in B, since B is the better estimate
//! of each node's true connectivity.

use crate::error::Error;
use crate::graph::{Graph, NodeLabel};
use crate::metrics::{RankBinMatrix, rank_bin};

/// Default prefix for the headline rich-rich fraction: the top 5% of B.
const DEFAULT_TOP_FRACTION: f64 = 0.05;

#[derive(Debug, Clone, PartialEq)]
pub struct MapDiffReport {
    pub common_nodes: usize,
    pub nodes_only_in_a: usize,
    pub nodes_only_in_b: usize,
    /// Edges of B absent from A, canonical (u < v) and sorted.
    pub missing_links: Vec<(NodeLabel, NodeLabel)>,
    /// Edges of A absent from B; counted but not classified.
    pub links_only_in_a: usize,
    /// Missing links binned by their endpoints' rank bins in B.
    pub missing_bin_matrix: RankBinMatrix,
    /// Fraction of missing links with both endpoints in B's top 5%;
    /// 0 when nothing is missing.
    pub rich_rich_fraction: f64,
    /// B-ranks of each missing link's endpoints, aligned with
    /// `missing_links`, lower rank first.
    missing_ranks: Vec<(usize, usize)>,
    n_b: usize,
}

/// Diffs two maps, ranking and binning on map B.
pub fn diff_maps(map_a: &Graph, map_b: &Graph) -> Result<MapDiffReport, Error> {
    if map_a.node_count() == 0 || map_b.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n_b = map_b.node_count();
    let common_nodes = map_b.nodes().filter(|&v| map_a.contains_node(v)).count();

    let ranking = map_b.rank_nodes().expect("nonempty map ranks");
    let mut missing_links = Vec::new();
    let mut missing_ranks = Vec::new();
    let mut matrix = RankBinMatrix::zero();
    for (u, v) in map_b.edges() {
        if map_a.has_edge(u, v) {
            continue;
        }
        let ru = ranking.rank_of(u).expect("endpoint ranked in B");
        let rv = ranking.rank_of(v).expect("endpoint ranked in B");
        let (lo, hi) = (ru.min(rv), ru.max(rv));
        matrix.bump(rank_bin(lo, n_b), rank_bin(hi, n_b));
        missing_links.push((u, v));
        missing_ranks.push((lo, hi));
    }

    let mut report = MapDiffReport {
        common_nodes,
        nodes_only_in_a: map_a.node_count() - common_nodes,
        nodes_only_in_b: n_b - common_nodes,
        links_only_in_a: map_a
            .edges()
            .filter(|&(u, v)| !map_b.has_edge(u, v))
            .count(),
        missing_links,
        missing_bin_matrix: matrix,
        rich_rich_fraction: 0.0,
        missing_ranks,
        n_b,
    };
    if !report.missing_links.is_empty() {
        report.rich_rich_fraction = report
            .rich_rich_fraction_at(DEFAULT_TOP_FRACTION)
            .expect("missing set is nonempty");
    }
    Ok(report)
}

impl MapDiffReport {
    /// Fraction of missing links whose endpoints both rank within the top
    /// `ceil(top_fraction * N_B)` of map B.
    pub fn rich_rich_fraction_at(&self, top_fraction: f64) -> Result<f64, Error> {
        if !(top_fraction > 0.0 && top_fraction <= 1.0) {
            return Err(Error::InvalidParams(format!(
                "top_fraction must be in (0, 1], got {}",
                top_fraction
            )));
        }
        if self.missing_links.is_empty() {
            return Err(Error::NoMissingLinks);
        }
        let prefix = (top_fraction * self.n_b as f64).ceil() as usize;
        let both_rich = self
            .missing_ranks
            .iter()
            .filter(|&&(_, hi)| hi <= prefix)
            .count();
        Ok(both_rich as f64 / self.missing_links.len() as f64)
    }
}
