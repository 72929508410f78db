//! Structural metrics over a ranked graph: the rich-club coefficient curve,
//! the 20x20 rank-binned link distribution, per-node triangle and rectangle
//! coefficients, a one-struct topology summary, and a power-law tail fit.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, NodeLabel};

/// One evaluated prefix of the rich-club curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RichClubPoint {
    /// Prefix size m, in 2..=N.
    pub m: usize,
    /// Normalized rank m/N.
    pub r: f64,
    /// Links with both endpoints ranked within the top m.
    pub links_among_top: usize,
    /// links_among_top / (m(m-1)/2).
    pub phi: f64,
}

/// Rich-club coefficient evaluated at every prefix size m in 2..=N.
#[derive(Debug, Clone, PartialEq)]
pub struct RichClubCurve {
    pub points: Vec<RichClubPoint>,
}

/// Computes the full rich-club curve in one pass: each link is charged to
/// the prefix where its later-ranked endpoint enters, then prefix sums give
/// the realized link count at every m.
pub fn rich_club_curve(graph: &Graph) -> Result<RichClubCurve, Error> {
    let n = graph.node_count();
    if n < 2 {
        return Err(Error::InsufficientNodes { needed: 2, got: n });
    }
    let ranking = graph.rank_nodes()?;
    let mut entering = vec![0usize; n + 1];
    for (i, list) in graph.adjacency().iter().enumerate() {
        for &j in list {
            if j > i {
                let outer = ranking.rank_by_idx[i].max(ranking.rank_by_idx[j]);
                entering[outer] += 1;
            }
        }
    }
    let mut points = Vec::with_capacity(n - 1);
    let mut links = entering[1]; // always 0: a 1-node prefix holds no link
    for m in 2..=n {
        links += entering[m];
        let max_links = m * (m - 1) / 2;
        points.push(RichClubPoint {
            m,
            r: m as f64 / n as f64,
            links_among_top: links,
            phi: links as f64 / max_links as f64,
        });
    }
    Ok(RichClubCurve { points })
}

/// The rich-club coefficient at prefix size m = floor(r * N).
pub fn rich_club_at(graph: &Graph, r: f64) -> Result<f64, Error> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::InvalidParams(format!(
            "normalized rank must be in (0, 1], got {}",
            r
        )));
    }
    let n = graph.node_count();
    let m = (r * n as f64).floor() as usize;
    if m < 2 {
        return Err(Error::InsufficientNodes { needed: 2, got: m });
    }
    let ranking = graph.rank_nodes()?;
    let mut links = 0usize;
    for (i, list) in graph.adjacency().iter().enumerate() {
        if ranking.rank_by_idx[i] > m {
            continue;
        }
        for &j in list {
            if j > i && ranking.rank_by_idx[j] <= m {
                links += 1;
            }
        }
    }
    Ok(links as f64 / (m * (m - 1) / 2) as f64)
}

pub const RANK_BINS: usize = 20;

/// Upper-triangular 20x20 histogram of links by the normalized-rank bins of
/// their endpoints. Bin width is 0.05; the bottom-ranked node clamps into
/// the last bin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankBinMatrix {
    cells: Vec<u64>,
}

impl RankBinMatrix {
    pub(crate) fn zero() -> Self {
        RankBinMatrix {
            cells: vec![0; RANK_BINS * RANK_BINS],
        }
    }

    pub const fn bin_width(&self) -> f64 {
        1.0 / RANK_BINS as f64
    }

    /// Count in cell (i, j); only i <= j cells can be nonzero.
    pub fn cell(&self, i: usize, j: usize) -> u64 {
        self.cells[i * RANK_BINS + j]
    }

    pub(crate) fn bump(&mut self, i: usize, j: usize) {
        self.cells[i * RANK_BINS + j] += 1;
    }

    /// Sum over all cells; equals the link count of the source graph.
    pub fn total(&self) -> u64 {
        self.cells.iter().sum()
    }

    /// Nonzero cells as (bin_i, bin_j, count), row-major.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..RANK_BINS).flat_map(move |i| {
            (0..RANK_BINS).filter_map(move |j| {
                let c = self.cell(i, j);
                (c > 0).then_some((i, j, c))
            })
        })
    }
}

/// Maps 1-based rank p of N into a 5%-wide bin index.
pub(crate) fn rank_bin(p: usize, n: usize) -> usize {
    (((p as f64 / n as f64) * RANK_BINS as f64).floor() as usize).min(RANK_BINS - 1)
}

/// Counts every link once in the cell given by its endpoints' rank bins
/// (smaller bin first).
pub fn link_rank_matrix(graph: &Graph) -> RankBinMatrix {
    let n = graph.node_count();
    assert!(n >= 1, "link_rank_matrix needs at least one node");
    let ranking = graph.rank_nodes().expect("nonempty graph ranks");
    let mut m = RankBinMatrix::zero();
    for (i, list) in graph.adjacency().iter().enumerate() {
        let bi = rank_bin(ranking.rank_by_idx[i], n);
        for &j in list {
            if j > i {
                let bj = rank_bin(ranking.rank_by_idx[j], n);
                m.bump(bi.min(bj), bi.max(bj));
            }
        }
    }
    m
}

/// Per-node triangle and rectangle coefficients plus the node orders sorted
/// by each coefficient (non-increasing, ties by ascending label).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCoefficientTable {
    /// Node labels in ascending order; `kt`/`kr` align with this.
    pub labels: Vec<NodeLabel>,
    pub kt: Vec<u64>,
    pub kr: Vec<u64>,
    pub kt_rank_order: Vec<NodeLabel>,
    pub kr_rank_order: Vec<NodeLabel>,
}

impl CycleCoefficientTable {
    pub fn kt_of(&self, v: NodeLabel) -> Option<u64> {
        self.labels.binary_search(&v).ok().map(|i| self.kt[i])
    }

    pub fn kr_of(&self, v: NodeLabel) -> Option<u64> {
        self.labels.binary_search(&v).ok().map(|i| self.kr[i])
    }
}

/// Triangles through each node: the number of adjacent pairs among its
/// neighbors. Values align with ascending node labels.
pub fn triangle_coefficients(graph: &Graph) -> Vec<u64> {
    let adj = graph.adjacency();
    // Each triangle at v is seen once from each of its two v-incident
    // links, so per-link common-neighbor counts sum to 2*kt.
    let mut twice = vec![0u64; adj.len()];
    for (i, list) in adj.iter().enumerate() {
        for &j in list {
            if j > i {
                let c = sorted_intersection_size(&adj[i], &adj[j]);
                twice[i] += c;
                twice[j] += c;
            }
        }
    }
    twice.iter().map(|t| t / 2).collect()
}

/// Intersecting the smaller list against the larger by binary search.
fn sorted_intersection_size(a: &[usize], b: &[usize]) -> u64 {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .iter()
        .filter(|x| large.binary_search(x).is_ok())
        .count() as u64
}

/// Rectangles (4-cycles) through each node v, counted once per choice of
/// two v-neighbors plus the distinct far corner; chords are allowed and the
/// far corner may itself neighbor v. Values align with ascending labels.
pub fn rectangle_coefficients(graph: &Graph) -> Vec<u64> {
    let adj = graph.adjacency();
    let n = adj.len();
    let mut kr = vec![0u64; n];
    // For fixed v, shared[x] = |N(v) ∩ N(x)|; each such x closes
    // C(shared[x], 2) rectangles through v.
    let mut shared = vec![0u64; n];
    let mut touched = Vec::new();
    for v in 0..n {
        for &u in &adj[v] {
            for &x in &adj[u] {
                if x != v {
                    if shared[x] == 0 {
                        touched.push(x);
                    }
                    shared[x] += 1;
                }
            }
        }
        let mut total = 0u64;
        for &x in &touched {
            let s = shared[x];
            total += s * (s - 1) / 2;
            shared[x] = 0;
        }
        touched.clear();
        kr[v] = total;
    }
    kr
}

/// Computes both coefficients and their rank orders in one call.
pub fn cycle_coefficients(graph: &Graph) -> CycleCoefficientTable {
    let labels: Vec<NodeLabel> = graph.nodes().collect();
    let kt = triangle_coefficients(graph);
    let kr = rectangle_coefficients(graph);
    CycleCoefficientTable {
        kt_rank_order: rank_order(&labels, &kt),
        kr_rank_order: rank_order(&labels, &kr),
        labels,
        kt,
        kr,
    }
}

fn rank_order(labels: &[NodeLabel], values: &[u64]) -> Vec<NodeLabel> {
    let mut idx: Vec<usize> = (0..labels.len()).collect();
    idx.sort_by(|&a, &b| values[b].cmp(&values[a]).then(a.cmp(&b)));
    idx.into_iter().map(|i| labels[i]).collect()
}

/// Headline statistics of one map. Coefficient averages run over all N
/// nodes, including nodes of degree 0 and 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopologySummary {
    pub n_nodes: usize,
    pub n_links: usize,
    pub k_average: f64,
    pub k_max: usize,
    pub kt_max: u64,
    pub kt_average: f64,
    pub kr_max: u64,
    pub kr_average: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_estimate: Option<f64>,
}

/// Summarizes a nonempty graph. `with_gamma` adds the degree-distribution
/// tail exponent when the degree sequence supports a fit.
pub fn summarize(graph: &Graph, with_gamma: bool) -> TopologySummary {
    let n = graph.node_count();
    assert!(n >= 1, "summarize needs at least one node");
    let table = cycle_coefficients(graph);
    let mean = |xs: &[u64]| xs.iter().sum::<u64>() as f64 / n as f64;
    TopologySummary {
        n_nodes: n,
        n_links: graph.edge_count(),
        k_average: 2.0 * graph.edge_count() as f64 / n as f64,
        k_max: graph.max_degree(),
        kt_max: table.kt.iter().copied().max().unwrap_or(0),
        kt_average: mean(&table.kt),
        kr_max: table.kr.iter().copied().max().unwrap_or(0),
        kr_average: mean(&table.kr),
        gamma_estimate: if with_gamma {
            fit_power_law(graph).ok()
        } else {
            None
        },
    }
}

/// Degree-distribution tail exponent gamma, assuming P(k) ~ k^-gamma.
///
/// Fits a least-squares line to log CCDF against log degree over the
/// distinct degrees >= 1; the CCDF of such a tail falls as k^-(gamma-1), so
/// gamma is the slope magnitude plus one.
pub fn fit_power_law(graph: &Graph) -> Result<f64, Error> {
    let degrees: Vec<usize> = graph.adjacency().iter().map(Vec::len).collect();
    fit_power_law_from_degrees(&degrees)
}

/// Same fit over a raw degree multiset.
pub fn fit_power_law_from_degrees(degrees: &[usize]) -> Result<f64, Error> {
    let n = degrees.len();
    let mut positive: Vec<usize> = degrees.iter().copied().filter(|&d| d >= 1).collect();
    positive.sort_unstable();
    positive.dedup();
    if positive.len() < 3 {
        return Err(Error::FitNotApplicable(format!(
            "need at least 3 distinct positive degrees, got {}",
            positive.len()
        )));
    }
    let points: Vec<(f64, f64)> = positive
        .iter()
        .map(|&k| {
            let at_least = degrees.iter().filter(|&&d| d >= k).count();
            ((k as f64).ln(), (at_least as f64 / n as f64).ln())
        })
        .collect();
    let slope = least_squares_slope(&points);
    Ok(slope.abs() + 1.0)
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let var: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    cov / var
}
