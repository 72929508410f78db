//! Synthetic graphs: preferential-attachment growth and a controlled
//! club-enrichment transform for building rich-club-heavy fixtures.

use rand::Rng;
use rand::SeedableRng;
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{Graph, GraphBuilder, NodeLabel};

/// Parameters for preferential-attachment growth.
///
/// Growth starts from a complete graph on `m0` nodes (labels `0..m0`) and
/// adds nodes one at a time, each attaching to `m_links` distinct existing
/// nodes chosen with probability proportional to current degree. The result
/// always has exactly `C(m0,2) + m_links * (n_final - m0)` links.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaParams {
    pub n_final: usize,
    pub m_links: usize,
    /// Seed-clique size; defaults to `m_links + 1` when `None`.
    pub m0: Option<usize>,
    pub seed: u64,
}

impl BaParams {
    pub fn new(n_final: usize, m_links: usize, seed: u64) -> Self {
        BaParams {
            n_final,
            m_links,
            m0: None,
            seed,
        }
    }

    fn m0(&self) -> usize {
        self.m0.unwrap_or(self.m_links + 1)
    }
}

/// Grows a preferential-attachment graph. Deterministic per seed; the graph
/// is connected and simple.
pub fn generate_ba(params: BaParams) -> Result<Graph, Error> {
    let (n, m, m0) = (params.n_final, params.m_links, params.m0());
    if m < 1 {
        return Err(Error::InvalidParams(format!(
            "m_links must be at least 1, got {}",
            m
        )));
    }
    if m > m0 {
        return Err(Error::InvalidParams(format!(
            "m_links {} exceeds seed size m0 {}; a new node cannot attach to more distinct targets than exist",
            m, m0
        )));
    }
    if n < m0 {
        return Err(Error::InvalidParams(format!(
            "n_final {} is below the seed size m0 {}",
            n, m0
        )));
    }
    if n > m0 && m0 < 2 {
        return Err(Error::InvalidParams(
            "growth from a single seed node is undefined: every degree is zero".into(),
        ));
    }
    if n > u32::MAX as usize {
        return Err(Error::InvalidParams(format!(
            "n_final {} exceeds the label space",
            n
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut b = GraphBuilder::new();
    // One entry per link endpoint; sampling an index uniformly is sampling a
    // node with probability proportional to its degree.
    let mut endpoints: Vec<NodeLabel> = Vec::with_capacity(2 * (m0 * (m0 - 1) / 2 + m * (n - m0)));

    for i in 0..m0 as NodeLabel {
        b.add_node(i);
        for j in 0..i {
            b.add_edge(j, i);
            endpoints.push(j);
            endpoints.push(i);
        }
    }

    let mut chosen: Vec<NodeLabel> = Vec::with_capacity(m);
    for t in m0 as NodeLabel..n as NodeLabel {
        // Snapshot: the new node's own links never influence its own draws.
        let pool = endpoints.len();
        chosen.clear();
        while chosen.len() < m {
            let cand = endpoints[rng.random_range(0..pool)];
            if !chosen.contains(&cand) {
                chosen.push(cand);
            }
        }
        for &c in &chosen {
            b.add_edge(c, t);
            endpoints.push(c);
            endpoints.push(t);
        }
    }
    Ok(b.build())
}

/// Returns a copy of `graph` with `budget` extra links placed uniformly at
/// random (seeded) among the currently absent pairs within the top
/// `ceil(top_fraction * N)` ranked nodes. Ranking comes from the input
/// graph. `budget = 0` returns the graph unchanged.
pub fn enrich_club(
    graph: &Graph,
    top_fraction: f64,
    budget: usize,
    seed: u64,
) -> Result<Graph, Error> {
    if !(top_fraction > 0.0 && top_fraction <= 1.0) {
        return Err(Error::InvalidParams(format!(
            "top_fraction must be in (0, 1], got {}",
            top_fraction
        )));
    }
    if budget == 0 {
        return Ok(graph.clone());
    }
    let n = graph.node_count();
    let prefix = (top_fraction * n as f64).ceil() as usize;
    let ranked = match graph.rank_nodes() {
        Ok(r) => r,
        Err(_) => {
            return Err(Error::InvalidParams(
                "no absent pairs in an empty graph".into(),
            ))
        }
    };
    let top = &ranked.ordered()[..prefix.min(n)];

    let mut absent: Vec<(NodeLabel, NodeLabel)> = Vec::new();
    for (i, &u) in top.iter().enumerate() {
        for &v in &top[i + 1..] {
            if !graph.has_edge(u, v) {
                absent.push((u, v));
            }
        }
    }
    if absent.len() < budget {
        return Err(Error::InvalidParams(format!(
            "budget {} exceeds the {} absent pair(s) among the top {} node(s)",
            budget,
            absent.len(),
            top.len()
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (picked, _) = absent.partial_shuffle(&mut rng, budget);

    let mut b = GraphBuilder::new();
    for v in graph.nodes() {
        b.add_node(v);
    }
    for (u, v) in graph.edges() {
        b.add_edge(u, v);
    }
    for &(u, v) in picked.iter() {
        b.add_edge(u, v);
    }
    Ok(b.build())
}
