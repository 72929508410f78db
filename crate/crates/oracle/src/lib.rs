//! Slow, obviously-correct counterparts to the asmap-core metrics, written
//! against the public Graph API only. Everything here enumerates subsets or
//! walks the graph naively; nothing shares code with the real
//! implementations, so agreement is meaningful evidence.

use std::collections::{HashMap, HashSet, VecDeque};

use asmap_core::{Graph, GraphBuilder, NodeLabel};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Nodes by decreasing degree, ties by ascending label.
pub fn brute_rank(g: &Graph) -> Vec<NodeLabel> {
    let mut nodes: Vec<NodeLabel> = g.nodes().collect();
    nodes.sort_by(|&a, &b| {
        let (da, db) = (g.degree(a).unwrap(), g.degree(b).unwrap());
        db.cmp(&da).then(a.cmp(&b))
    });
    nodes
}

/// (m, phi) for every prefix size m in 2..=N, counting realized links by
/// scanning all pairs inside the prefix.
pub fn brute_rich_club_curve(g: &Graph) -> Vec<(usize, f64)> {
    let ranked = brute_rank(g);
    let mut out = Vec::new();
    for m in 2..=ranked.len() {
        let top = &ranked[..m];
        let mut links = 0usize;
        for (i, &u) in top.iter().enumerate() {
            for &v in &top[i + 1..] {
                if g.has_edge(u, v) {
                    links += 1;
                }
            }
        }
        out.push((m, links as f64 / (m * (m - 1) / 2) as f64));
    }
    out
}

/// Triangles per node by testing every unordered neighbor pair.
pub fn brute_triangles_per_node(g: &Graph) -> HashMap<NodeLabel, u64> {
    g.nodes()
        .map(|v| {
            let nbrs: Vec<NodeLabel> = g.neighbors(v).unwrap().collect();
            let mut count = 0u64;
            for (i, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[i + 1..] {
                    if g.has_edge(u, w) {
                        count += 1;
                    }
                }
            }
            (v, count)
        })
        .collect()
}

/// Rectangles per node: for every unordered neighbor pair {u, w} of v,
/// count the distinct far corners x adjacent to both, excluding v, u, w.
pub fn brute_rectangles_per_node(g: &Graph) -> HashMap<NodeLabel, u64> {
    let all: Vec<NodeLabel> = g.nodes().collect();
    g.nodes()
        .map(|v| {
            let nbrs: Vec<NodeLabel> = g.neighbors(v).unwrap().collect();
            let mut count = 0u64;
            for (i, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[i + 1..] {
                    for &x in &all {
                        if x != v && x != u && x != w && g.has_edge(x, u) && g.has_edge(x, w) {
                            count += 1;
                        }
                    }
                }
            }
            (v, count)
        })
        .collect()
}

/// 20x20 upper-triangular link counts by endpoint rank bins, bin(p) =
/// min(floor((p/N)*20), 19), built from this crate's own ranking.
pub fn brute_link_rank_matrix(g: &Graph) -> Vec<Vec<u64>> {
    let ranked = brute_rank(g);
    let n = ranked.len();
    let rank_of: HashMap<NodeLabel, usize> = ranked
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i + 1))
        .collect();
    let bin = |p: usize| -> usize {
        let b = ((p as f64 / n as f64) * 20.0).floor() as usize;
        b.min(19)
    };
    let mut m = vec![vec![0u64; 20]; 20];
    for (u, v) in g.edges() {
        let (bu, bv) = (bin(rank_of[&u]), bin(rank_of[&v]));
        m[bu.min(bv)][bu.max(bv)] += 1;
    }
    m
}

/// Largest surviving component via breadth-first search from every node.
pub fn brute_largest_component(g: &Graph, removed: &HashSet<NodeLabel>) -> usize {
    let mut seen: HashSet<NodeLabel> = HashSet::new();
    let mut best = 0usize;
    for start in g.nodes() {
        if removed.contains(&start) || seen.contains(&start) {
            continue;
        }
        let mut size = 0usize;
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(v) = queue.pop_front() {
            size += 1;
            for u in g.neighbors(v).unwrap() {
                if !removed.contains(&u) && seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        best = best.max(size);
    }
    best
}

/// Total triangles by enumerating 3-subsets of nodes.
pub fn brute_triangle_total(g: &Graph) -> u64 {
    let nodes: Vec<NodeLabel> = g.nodes().collect();
    let n = nodes.len();
    let mut count = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(nodes[a], nodes[b]) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(nodes[a], nodes[c]) && g.has_edge(nodes[b], nodes[c]) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Total distinct 4-cycles by enumerating 4-subsets and the three ways each
/// can be threaded into a cycle.
pub fn brute_four_cycle_total(g: &Graph) -> u64 {
    let nodes: Vec<NodeLabel> = g.nodes().collect();
    let n = nodes.len();
    let e = |i: usize, j: usize| g.has_edge(nodes[i], nodes[j]);
    let mut count = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    // cycles a-b-c-d, a-b-d-c, a-c-b-d
                    if e(a, b) && e(b, c) && e(c, d) && e(d, a) {
                        count += 1;
                    }
                    if e(a, b) && e(b, d) && e(d, c) && e(c, a) {
                        count += 1;
                    }
                    if e(a, c) && e(c, b) && e(b, d) && e(d, a) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Erdős–Rényi-style fixture: labels 0..n, each pair linked with the given
/// probability. Isolated nodes are kept.
pub fn random_graph(n: u32, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new();
    for v in 0..n {
        b.add_node(v);
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < density {
                b.add_edge(i, j);
            }
        }
    }
    b.build()
}

/// Copy of `g` with labels permuted by a seeded random bijection into the
/// range 0..2N (so old and new label spaces overlap only by accident).
pub fn shuffled_labels(g: &Graph, seed: u64) -> (Graph, HashMap<NodeLabel, NodeLabel>) {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let old: Vec<NodeLabel> = g.nodes().collect();
    let mut pool: Vec<NodeLabel> = (0..2 * old.len() as u32).collect();
    pool.shuffle(&mut rng);
    let map: HashMap<NodeLabel, NodeLabel> = old.iter().copied().zip(pool).collect();
    let mut b = GraphBuilder::new();
    for v in g.nodes() {
        b.add_node(map[&v]);
    }
    for (u, v) in g.edges() {
        b.add_edge(map[&u], map[&v]);
    }
    (b.build(), map)
}

/// Moves `fraction` of the links inside the top-5% club, preserving both N
/// and L: removes that many links with at most one club endpoint and adds
/// the same number of absent club-internal pairs. Panics when the graph
/// cannot absorb the move; this is a test fixture, not library surface.
pub fn rewire_into_club(g: &Graph, fraction: f64, seed: u64) -> Graph {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.node_count();
    let prefix = (0.05 * n as f64).ceil() as usize;
    let ranking = g.rank_nodes().unwrap();
    let club: HashSet<NodeLabel> = ranking.ordered()[..prefix].iter().copied().collect();

    let moves = (fraction * g.edge_count() as f64).floor() as usize;
    let mut removable: Vec<(NodeLabel, NodeLabel)> = g
        .edges()
        .filter(|&(u, v)| !(club.contains(&u) && club.contains(&v)))
        .collect();
    let mut absent: Vec<(NodeLabel, NodeLabel)> = Vec::new();
    let ordered_club = &ranking.ordered()[..prefix];
    for (i, &u) in ordered_club.iter().enumerate() {
        for &v in &ordered_club[i + 1..] {
            if !g.has_edge(u, v) {
                absent.push((u, v));
            }
        }
    }
    assert!(removable.len() >= moves && absent.len() >= moves);
    removable.shuffle(&mut rng);
    absent.shuffle(&mut rng);
    let dropped: HashSet<(NodeLabel, NodeLabel)> = removable[..moves].iter().copied().collect();

    let mut b = GraphBuilder::new();
    for v in g.nodes() {
        b.add_node(v);
    }
    for e in g.edges().filter(|e| !dropped.contains(e)) {
        b.add_edge(e.0, e.1);
    }
    for &(u, v) in &absent[..moves] {
        b.add_edge(u, v);
    }
    let out = b.build();
    assert_eq!(out.edge_count(), g.edge_count());
    assert_eq!(out.node_count(), g.node_count());
    out
}
