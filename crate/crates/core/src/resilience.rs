//! Node-removal percolation: largest-cluster fraction S traced against the
//! removed fraction f, under degree-targeted attack or random error.
//!
//! S is always normalized by the original node count, so removing nodes can
//! never raise it. Traces are computed backwards: survivors of the deepest
//! removal are merged first with union-find, then removed nodes are added
//! back one at a time, which makes S non-increasing in f by construction.

use rand::Rng;
use rand::SeedableRng;
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::union_find::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalMode {
    Attack,
    Error,
}

/// One sampled state: f = removed fraction, s = largest-cluster fraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub f: f64,
    pub s: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RemovalTrace {
    pub mode: RemovalMode,
    pub points: Vec<TracePoint>,
    /// Present for error mode only.
    pub seed: Option<u64>,
    /// Attack only: whether degrees were re-ranked after each removal.
    pub recompute_degrees: bool,
}

impl RemovalTrace {
    /// S at the deepest sampled removal fraction.
    pub fn final_s(&self) -> f64 {
        self.points.last().expect("trace has at least f=0").s
    }
}

/// Removes nodes by decreasing degree (ties by ascending label) up to
/// `f_max`, sampling S every `step` removals and at the end. By default the
/// order is fixed by the intact graph's degrees; `recompute_degrees`
/// re-ranks the survivors after every removal instead.
pub fn attack_trace(graph: &Graph, f_max: f64, step: usize, recompute_degrees: bool) -> RemovalTrace {
    let order = removal_plan(graph, f_max, |k| {
        if recompute_degrees {
            adaptive_order(graph, k)
        } else {
            graph.rank_nodes().expect("nonempty graph").ordered_idx
        }
    });
    let samples = sample_counts(graph.node_count(), f_max, step);
    RemovalTrace {
        mode: RemovalMode::Attack,
        points: replay(graph, &order, &samples),
        seed: None,
        recompute_degrees,
    }
}

/// Removes nodes in seeded uniform random order up to `f_max`, sampling S
/// every `step` removals and at the end, averaged over `trials` independent
/// permutations drawn from the master seed.
pub fn error_trace(graph: &Graph, f_max: f64, step: usize, seed: u64, trials: usize) -> RemovalTrace {
    assert!(trials >= 1, "need at least one trial");
    let n = graph.node_count();
    let samples = sample_counts(n, f_max, step);
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let mut sums = vec![0.0f64; samples.len()];
    for _ in 0..trials {
        let mut trial_rng = ChaCha8Rng::seed_from_u64(master.random::<u64>());
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut trial_rng);
        for (acc, p) in sums.iter_mut().zip(replay(graph, &order, &samples)) {
            *acc += p.s;
        }
    }
    let points = samples
        .iter()
        .zip(&sums)
        .map(|(&k, &sum)| TracePoint {
            f: k as f64 / n as f64,
            s: sum / trials as f64,
        })
        .collect();
    RemovalTrace {
        mode: RemovalMode::Error,
        points,
        seed: Some(seed),
        recompute_degrees: false,
    }
}

/// Validates the removal-depth parameters and materializes the order.
fn removal_plan<F>(graph: &Graph, f_max: f64, make_order: F) -> Vec<usize>
where
    F: FnOnce(usize) -> Vec<usize>,
{
    let n = graph.node_count();
    assert!(n >= 1, "percolation needs at least one node");
    assert!(f_max > 0.0 && f_max <= 1.0, "f_max must be in (0, 1]");
    make_order(deepest_removal(n, f_max))
}

fn deepest_removal(n: usize, f_max: f64) -> usize {
    (f_max * n as f64).floor() as usize
}

/// Removal counts to sample: multiples of `step` up to floor(f_max*N), plus
/// that endpoint itself.
fn sample_counts(n: usize, f_max: f64, step: usize) -> Vec<usize> {
    assert!(step >= 1, "step must be at least 1");
    assert!(f_max > 0.0 && f_max <= 1.0, "f_max must be in (0, 1]");
    let deepest = deepest_removal(n, f_max);
    let mut ks: Vec<usize> = (0..=deepest).step_by(step).collect();
    if *ks.last().expect("0 is always sampled") != deepest {
        ks.push(deepest);
    }
    ks
}

/// Largest-cluster fraction after each sampled removal count, for a fixed
/// removal order. Runs backwards from the deepest state, re-adding nodes.
fn replay(graph: &Graph, order: &[usize], samples: &[usize]) -> Vec<TracePoint> {
    let n = graph.node_count();
    let deepest = *samples.last().expect("samples nonempty");
    let adj = graph.adjacency();

    let mut present = vec![true; n];
    for &v in &order[..deepest] {
        present[v] = false;
    }

    let mut uf = UnionFind::new(n);
    let mut largest = if deepest < n { 1 } else { 0 };
    for v in 0..n {
        if !present[v] {
            continue;
        }
        for &u in &adj[v] {
            if u < v && present[u] {
                largest = largest.max(uf.union(v, u));
            }
        }
    }

    let mut out = vec![0usize; samples.len()];
    let mut next = samples.len();
    for k in (0..=deepest).rev() {
        if next > 0 && samples[next - 1] == k {
            next -= 1;
            out[next] = largest;
        }
        if k > 0 {
            let v = order[k - 1];
            present[v] = true;
            largest = largest.max(1);
            for &u in &adj[v] {
                if present[u] {
                    largest = largest.max(uf.union(v, u));
                }
            }
        }
    }

    samples
        .iter()
        .zip(out)
        .map(|(&k, size)| TracePoint {
            f: k as f64 / n as f64,
            s: size as f64 / n as f64,
        })
        .collect()
}

/// Attack order with degree re-ranking: repeatedly remove the surviving
/// node of maximum current degree, smallest label first on ties.
fn adaptive_order(graph: &Graph, k: usize) -> Vec<usize> {
    let adj = graph.adjacency();
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let mut best = usize::MAX;
        for v in 0..n {
            if !removed[v] && (best == usize::MAX || deg[v] > deg[best]) {
                best = v;
            }
        }
        removed[best] = true;
        order.push(best);
        for &u in &adj[best] {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}
