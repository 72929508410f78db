//! Simple undirected labeled graphs, degree ranking, and the
//! largest-component primitive used by the percolation traces.
//!
//! Node labels are opaque non-negative integers (AS numbers). Labels are
//! preserved as-is so that two maps of the same network can be compared
//! label-by-label; internally nodes are indexed densely in ascending label
//! order, which makes the label tie-break of [`DegreeRanking`] fall out of
//! plain index comparisons.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::Error;

/// Opaque node identifier, e.g. an AS number.
pub type NodeLabel = u32;

/// Immutable simple undirected graph.
///
/// Invariants: no self-loops, no parallel edges, symmetric adjacency, and
/// `edge_count` equal to half the degree sum. All read methods are safe for
/// concurrent use; construction goes through [`GraphBuilder`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// Node labels in ascending order; position = internal index.
    labels: Vec<NodeLabel>,
    index: HashMap<NodeLabel, usize>,
    /// Sorted internal-index adjacency lists.
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Accumulates nodes and edges, collapsing duplicates (including reversed
/// duplicates) and dropping self-loops, then freezes into a [`Graph`].
#[derive(Debug, Default)]
pub struct GraphBuilder {
    nodes: BTreeSet<NodeLabel>,
    edges: BTreeSet<(NodeLabel, NodeLabel)>,
    dropped_self_loops: usize,
    collapsed_duplicates: usize,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a node, which may stay isolated.
    pub fn add_node(&mut self, v: NodeLabel) {
        self.nodes.insert(v);
    }

    /// Registers an undirected edge. A self-loop is dropped (the endpoint is
    /// still registered as a node); an edge seen before in either order is
    /// collapsed. Both cases are counted.
    pub fn add_edge(&mut self, u: NodeLabel, v: NodeLabel) {
        if u == v {
            self.dropped_self_loops += 1;
            self.nodes.insert(u);
            return;
        }
        let key = (u.min(v), u.max(v));
        if self.edges.insert(key) {
            self.nodes.insert(u);
            self.nodes.insert(v);
        } else {
            self.collapsed_duplicates += 1;
        }
    }

    pub fn dropped_self_loops(&self) -> usize {
        self.dropped_self_loops
    }

    pub fn collapsed_duplicates(&self) -> usize {
        self.collapsed_duplicates
    }

    pub fn build(self) -> Graph {
        let labels: Vec<NodeLabel> = self.nodes.into_iter().collect();
        let index: HashMap<NodeLabel, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); labels.len()];
        for &(u, v) in &self.edges {
            let (i, j) = (index[&u], index[&v]);
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            labels,
            index,
            adj,
            edge_count: self.edges.len(),
        }
    }
}

impl Graph {
    /// Builds a graph from raw edges; duplicates collapse, self-loops drop.
    pub fn from_edges<I>(edges: I) -> Graph
    where
        I: IntoIterator<Item = (NodeLabel, NodeLabel)>,
    {
        let mut b = GraphBuilder::new();
        for (u, v) in edges {
            b.add_edge(u, v);
        }
        b.build()
    }

    /// Total number of nodes N.
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Total number of links L.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn contains_node(&self, v: NodeLabel) -> bool {
        self.index.contains_key(&v)
    }

    /// Node labels in ascending order.
    pub fn nodes(&self) -> impl Iterator<Item = NodeLabel> + '_ {
        self.labels.iter().copied()
    }

    /// Number of links incident to `v`.
    pub fn degree(&self, v: NodeLabel) -> Result<usize, Error> {
        let i = self.index_of(v).ok_or(Error::NodeNotFound(v))?;
        Ok(self.adj[i].len())
    }

    /// Neighbor labels of `v` in ascending order.
    pub fn neighbors(&self, v: NodeLabel) -> Result<impl Iterator<Item = NodeLabel> + '_, Error> {
        let i = self.index_of(v).ok_or(Error::NodeNotFound(v))?;
        Ok(self.adj[i].iter().map(move |&j| self.labels[j]))
    }

    pub fn has_edge(&self, u: NodeLabel, v: NodeLabel) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adj[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    /// Edges as `(u, v)` label pairs with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeLabel, NodeLabel)> + '_ {
        (0..self.adj.len()).flat_map(move |i| {
            self.adj[i]
                .iter()
                .filter(move |&&j| j > i)
                .map(move |&j| (self.labels[i], self.labels[j]))
        })
    }

    /// Maximum degree, 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Nodes sorted by strictly non-increasing degree, degree ties broken by
    /// ascending label so the ranking is stable across runs.
    pub fn rank_nodes(&self) -> Result<DegreeRanking, Error> {
        let n = self.node_count();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut ordered_idx: Vec<usize> = (0..n).collect();
        // Internal indices already ascend by label, so equal-degree ties
        // resolve to ascending label via the index comparison.
        ordered_idx.sort_by(|&a, &b| self.adj[b].len().cmp(&self.adj[a].len()).then(a.cmp(&b)));
        let mut rank_by_idx = vec![0usize; n];
        for (pos, &i) in ordered_idx.iter().enumerate() {
            rank_by_idx[i] = pos + 1;
        }
        let ordered_labels: Vec<NodeLabel> = ordered_idx.iter().map(|&i| self.labels[i]).collect();
        let rank_by_label = ordered_labels
            .iter()
            .enumerate()
            .map(|(pos, &l)| (l, pos + 1))
            .collect();
        Ok(DegreeRanking {
            ordered_labels,
            rank_by_label,
            ordered_idx,
            rank_by_idx,
        })
    }

    /// Size of the largest connected component of the subgraph induced by the
    /// surviving nodes; 0 when everything is removed. Labels in `removed`
    /// that are not graph members are ignored.
    pub fn largest_component_size(&self, removed: &HashSet<NodeLabel>) -> usize {
        let mut mask = vec![false; self.node_count()];
        for &v in removed {
            if let Some(i) = self.index_of(v) {
                mask[i] = true;
            }
        }
        self.largest_component_masked(&mask)
    }

    /// Same as [`Graph::largest_component_size`] over an internal-index mask.
    pub(crate) fn largest_component_masked(&self, removed: &[bool]) -> usize {
        let n = self.node_count();
        let mut visited = vec![false; n];
        let mut stack = Vec::new();
        let mut best = 0usize;
        for start in 0..n {
            if removed[start] || visited[start] {
                continue;
            }
            let mut size = 0usize;
            visited[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                size += 1;
                for &u in &self.adj[v] {
                    if !removed[u] && !visited[u] {
                        visited[u] = true;
                        stack.push(u);
                    }
                }
            }
            best = best.max(size);
        }
        best
    }

    pub(crate) fn index_of(&self, v: NodeLabel) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }
}

/// Nodes ordered by decreasing degree with 1-based ranks and normalized
/// ranks p/N.
#[derive(Debug, Clone)]
pub struct DegreeRanking {
    ordered_labels: Vec<NodeLabel>,
    rank_by_label: HashMap<NodeLabel, usize>,
    /// Internal indices in rank order.
    pub(crate) ordered_idx: Vec<usize>,
    /// 1-based rank per internal index.
    pub(crate) rank_by_idx: Vec<usize>,
}

impl DegreeRanking {
    /// Labels in rank order (rank 1 first).
    pub fn ordered(&self) -> &[NodeLabel] {
        &self.ordered_labels
    }

    /// 1-based rank of `v`, if ranked.
    pub fn rank_of(&self, v: NodeLabel) -> Option<usize> {
        self.rank_by_label.get(&v).copied()
    }

    /// Normalized rank p/N in (0, 1].
    pub fn normalized_rank(&self, v: NodeLabel) -> Option<f64> {
        self.rank_of(v).map(|p| p as f64 / self.len() as f64)
    }

    pub fn len(&self) -> usize {
        self.ordered_labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered_labels.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    }

    /// Star hub 1 with leaves 2,3,4 plus the extra edge 2-3.
    fn star_with_chord() -> Graph {
        Graph::from_edges([(1, 2), (1, 3), (1, 4), (2, 3)])
    }

    #[test]
    fn degree_complete_graph() {
        let g = k4();
        for v in 1..=4 {
            assert_eq!(g.degree(v).unwrap(), 3);
        }
    }

    #[test]
    fn degree_path_midpoint() {
        let g = Graph::from_edges([(1, 2), (2, 3)]);
        assert_eq!(g.degree(2).unwrap(), 2);
    }

    #[test]
    fn degree_isolated_node() {
        let mut b = GraphBuilder::new();
        b.add_node(7);
        let g = b.build();
        assert_eq!(g.degree(7).unwrap(), 0);
    }

    #[test]
    fn degree_unknown_node() {
        let g = k4();
        assert!(matches!(g.degree(99), Err(Error::NodeNotFound(99))));
    }

    #[test]
    fn builder_collapses_and_drops() {
        let mut b = GraphBuilder::new();
        b.add_edge(1, 2);
        b.add_edge(2, 3);
        b.add_edge(2, 1); // reversed duplicate
        b.add_edge(3, 3); // self-loop
        let (dropped, collapsed) = (b.dropped_self_loops(), b.collapsed_duplicates());
        let g = b.build();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.node_count(), 3);
        assert_eq!(dropped, 1);
        assert_eq!(collapsed, 1);
        assert!(g.has_edge(1, 2) && g.has_edge(2, 3) && !g.has_edge(1, 3));
    }

    #[test]
    fn rank_star_with_chord() {
        // degrees: 1 -> 3, 2 -> 2, 3 -> 2, 4 -> 1; tie 2 < 3 by label
        let g = star_with_chord();
        let r = g.rank_nodes().unwrap();
        assert_eq!(r.ordered(), &[1, 2, 3, 4]);
        assert_eq!(r.rank_of(2), Some(2));
        assert_eq!(r.normalized_rank(4), Some(1.0));
    }

    #[test]
    fn rank_all_ties_follow_labels() {
        let g = k4();
        let r = g.rank_nodes().unwrap();
        assert_eq!(r.ordered(), &[1, 2, 3, 4]);
    }

    #[test]
    fn rank_single_node() {
        let mut b = GraphBuilder::new();
        b.add_node(5);
        let g = b.build();
        let r = g.rank_nodes().unwrap();
        assert_eq!(r.ordered(), &[5]);
        assert_eq!(r.normalized_rank(5), Some(1.0));
    }

    #[test]
    fn rank_empty_graph_errors() {
        let g = GraphBuilder::new().build();
        assert!(matches!(g.rank_nodes(), Err(Error::EmptyGraph)));
    }

    #[test]
    fn largest_component_star_hub_removed() {
        let g = Graph::from_edges([(0, 1), (0, 2), (0, 3), (0, 4)]);
        let removed: HashSet<_> = [0].into_iter().collect();
        assert_eq!(g.largest_component_size(&removed), 1);
    }

    #[test]
    fn largest_component_intact_k4() {
        assert_eq!(k4().largest_component_size(&HashSet::new()), 4);
    }

    #[test]
    fn largest_component_path_split() {
        let g = Graph::from_edges([(1, 2), (2, 3)]);
        let removed: HashSet<_> = [2].into_iter().collect();
        assert_eq!(g.largest_component_size(&removed), 1);
    }

    #[test]
    fn largest_component_all_removed() {
        let g = k4();
        let removed: HashSet<_> = (1..=4).collect();
        assert_eq!(g.largest_component_size(&removed), 0);
    }

    #[test]
    fn edges_are_canonical_and_sorted() {
        let g = Graph::from_edges([(4, 3), (2, 1), (1, 3)]);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(1, 2), (1, 3), (3, 4)]);
    }

    #[test]
    fn handshake_identity() {
        let g = star_with_chord();
        let total: usize = g.nodes().map(|v| g.degree(v).unwrap()).sum();
        assert_eq!(total, 2 * g.edge_count());
    }
}
