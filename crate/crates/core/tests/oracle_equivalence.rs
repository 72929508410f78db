//! Fast implementations against brute-force enumeration on a sweep of
//! random graphs. Counts are compared exactly; the coefficients share their
//! integer numerators and denominators with the oracles, so even the f64
//! results must match bit for bit.

use std::collections::HashSet;

use asmap_core::{
    cycle_coefficients, link_rank_matrix, rectangle_coefficients, rich_club_curve,
    triangle_coefficients,
};
use asmap_oracle as oracle;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// 110 graphs, N in 5..=30, density swept across 0.05..0.9.
fn sweep() -> impl Iterator<Item = asmap_core::Graph> {
    (0..110u64).map(|i| {
        let n = 5 + (i * 7 % 26) as u32;
        let density = 0.05 + 0.85 * (i as f64 / 110.0);
        oracle::random_graph(n, density, i)
    })
}

#[test]
fn rich_club_curve_matches_brute_force() {
    for g in sweep() {
        let fast = rich_club_curve(&g).unwrap();
        let brute = oracle::brute_rich_club_curve(&g);
        assert_eq!(fast.points.len(), brute.len());
        for (p, (m, phi)) in fast.points.iter().zip(brute) {
            assert_eq!(p.m, m);
            assert_eq!(p.phi, phi, "phi mismatch at m={} on N={}", m, g.node_count());
        }
    }
}

#[test]
fn triangle_coefficients_match_brute_force() {
    for g in sweep() {
        let fast = triangle_coefficients(&g);
        let brute = oracle::brute_triangles_per_node(&g);
        for (v, kt) in g.nodes().zip(fast) {
            assert_eq!(kt, brute[&v], "kt mismatch at node {}", v);
        }
    }
}

#[test]
fn rectangle_coefficients_match_brute_force() {
    for g in sweep() {
        let fast = rectangle_coefficients(&g);
        let brute = oracle::brute_rectangles_per_node(&g);
        for (v, kr) in g.nodes().zip(fast) {
            assert_eq!(kr, brute[&v], "kr mismatch at node {}", v);
        }
    }
}

#[test]
fn link_rank_matrix_matches_brute_force() {
    for g in sweep() {
        let fast = link_rank_matrix(&g);
        let brute = oracle::brute_link_rank_matrix(&g);
        for i in 0..20 {
            for j in 0..20 {
                assert_eq!(fast.cell(i, j), brute[i][j], "cell ({}, {})", i, j);
            }
        }
        assert_eq!(fast.total(), g.edge_count() as u64);
    }
}

#[test]
fn largest_component_matches_bfs_under_random_removals() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for i in 0..100u64 {
        let n = 5 + (i * 11 % 46) as u32;
        let g = oracle::random_graph(n, 0.02 + 0.7 * (i as f64 / 100.0), 1000 + i);
        let removed: HashSet<u32> = g.nodes().filter(|_| rng.random::<f64>() < 0.3).collect();
        assert_eq!(
            g.largest_component_size(&removed),
            oracle::brute_largest_component(&g, &removed),
            "component mismatch on N={} with {} removed",
            n,
            removed.len()
        );
    }
}

#[test]
fn coefficient_sums_match_global_cycle_counts() {
    for g in sweep().step_by(3) {
        let t = cycle_coefficients(&g);
        let kt_sum: u64 = t.kt.iter().sum();
        let kr_sum: u64 = t.kr.iter().sum();
        // every triangle is seen from its 3 corners, every 4-cycle from 4
        assert_eq!(kt_sum, 3 * oracle::brute_triangle_total(&g));
        assert_eq!(kr_sum, 4 * oracle::brute_four_cycle_total(&g));
    }
}
