//! Property tests: structural identities that must hold on arbitrary
//! inputs, not just on the worked examples.

use std::collections::HashSet;

use asmap_core::{
    BaParams, Graph, attack_trace, diff_maps, enrich_club, error_trace, generate_ba,
    link_rank_matrix, parse_edge_list, rich_club_curve, triangle_coefficients, write_edge_list,
};
use asmap_oracle as oracle;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2u32..=30, 0.05f64..0.9, any::<u64>())
        .prop_map(|(n, density, seed)| oracle::random_graph(n, density, seed))
}

proptest! {
    #[test]
    fn degree_sum_is_twice_links(g in arb_graph()) {
        let sum: usize = g.nodes().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn ranking_is_a_degree_sorted_permutation(g in arb_graph()) {
        let r = g.rank_nodes().unwrap();
        let mut seen: Vec<u32> = r.ordered().to_vec();
        seen.sort_unstable();
        let mut all: Vec<u32> = g.nodes().collect();
        all.sort_unstable();
        prop_assert_eq!(seen, all);
        for w in r.ordered().windows(2) {
            let (d0, d1) = (g.degree(w[0]).unwrap(), g.degree(w[1]).unwrap());
            prop_assert!(d0 > d1 || (d0 == d1 && w[0] < w[1]));
        }
    }

    #[test]
    fn removing_a_node_never_grows_the_largest_component(
        g in arb_graph(),
        pick in any::<prop::sample::Index>(),
    ) {
        let nodes: Vec<u32> = g.nodes().collect();
        let v = nodes[pick.index(nodes.len())];
        let before = g.largest_component_size(&HashSet::new());
        let after = g.largest_component_size(&HashSet::from([v]));
        prop_assert!(after <= before);
    }

    #[test]
    fn edge_list_round_trip_is_identity(g in arb_graph()) {
        let text = write_edge_list(&g);
        let (back, doc) = parse_edge_list(&text).unwrap();
        // isolated nodes are not representable in an edge list, so compare
        // against the edge-bearing part of the original
        let trimmed = Graph::from_edges(g.edges());
        prop_assert_eq!(back, trimmed);
        prop_assert_eq!(doc.parsed_edges, g.edge_count());
        prop_assert_eq!(doc.dropped_self_loops, 0);
        prop_assert_eq!(doc.collapsed_duplicates, 0);
    }

    #[test]
    fn parsing_is_line_order_insensitive(g in arb_graph(), seed in any::<u64>()) {
        let text = write_edge_list(&g);
        let mut lines: Vec<&str> = text.lines().collect();
        lines.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let (a, _) = parse_edge_list(&text).unwrap();
        let (b, _) = parse_edge_list(&lines.join("\n")).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn parse_accounting_covers_every_data_line(raw in prop::collection::vec((0u32..12, 0u32..12), 0..60)) {
        let text: String = raw.iter().map(|(u, v)| format!("{} {}\n", u, v)).collect();
        let (g, doc) = parse_edge_list(&text).unwrap();
        prop_assert_eq!(
            raw.len(),
            doc.parsed_edges + doc.dropped_self_loops + doc.collapsed_duplicates
        );
        prop_assert_eq!(g.edge_count(), doc.parsed_edges);
    }

    #[test]
    fn rank_bin_cells_conserve_links(g in arb_graph()) {
        prop_assert_eq!(link_rank_matrix(&g).total(), g.edge_count() as u64);
    }

    #[test]
    fn triangles_bounded_by_neighbor_pairs(g in arb_graph()) {
        for (v, kt) in g.nodes().zip(triangle_coefficients(&g)) {
            let d = g.degree(v).unwrap() as u64;
            prop_assert!(kt <= d * d.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn adding_a_club_internal_edge_adds_exactly_one_club_link(
        g in arb_graph(),
        mpick in any::<prop::sample::Index>(),
    ) {
        let ranking = g.rank_nodes().unwrap();
        let n = g.node_count();
        let m = 2 + mpick.index(n - 1);
        let top = &ranking.ordered()[..m];
        let absent = top.iter().enumerate().find_map(|(i, &u)| {
            top[i + 1..].iter().find(|&&v| !g.has_edge(u, v)).map(|&v| (u, v))
        });
        prop_assume!(absent.is_some());
        let (u, v) = absent.unwrap();

        let mut edges: Vec<(u32, u32)> = g.edges().collect();
        edges.push((u, v));
        let mut b = asmap_core::GraphBuilder::new();
        for w in g.nodes() { b.add_node(w); }
        for (x, y) in edges { b.add_edge(x, y); }
        let g2 = b.build();

        // degrees only grew inside the prefix, so its membership holds
        let top2: HashSet<u32> = g2.rank_nodes().unwrap().ordered()[..m].iter().copied().collect();
        prop_assert_eq!(top2, top.iter().copied().collect::<HashSet<u32>>());

        let links = |gr: &Graph| rich_club_curve(gr).unwrap().points[m - 2].links_among_top;
        prop_assert_eq!(links(&g2), links(&g) + 1);
    }

    #[test]
    fn club_links_are_relabel_invariant_at_degree_boundaries(
        g in arb_graph(),
        seed in any::<u64>(),
    ) {
        let (h, _) = oracle::shuffled_labels(&g, seed);
        let ranking = g.rank_nodes().unwrap();
        let curve_g = rich_club_curve(&g).unwrap();
        let curve_h = rich_club_curve(&h).unwrap();
        let deg_at = |i: usize| g.degree(ranking.ordered()[i]).unwrap();
        for m in 2..g.node_count() {
            // only prefixes that end at a strict degree drop are
            // label-independent sets
            if deg_at(m - 1) > deg_at(m) {
                prop_assert_eq!(
                    curve_g.points[m - 2].links_among_top,
                    curve_h.points[m - 2].links_among_top,
                    "boundary prefix m={}", m
                );
            }
        }
    }

    #[test]
    fn ba_edge_count_formula(n in 6usize..60, m in 1usize..4, seed in any::<u64>()) {
        let g = generate_ba(BaParams::new(n, m, seed)).unwrap();
        let m0 = m + 1;
        prop_assert_eq!(g.edge_count(), m0 * (m0 - 1) / 2 + m * (n - m0));
        prop_assert_eq!(g.node_count(), n);
        let again = generate_ba(BaParams::new(n, m, seed)).unwrap();
        prop_assert_eq!(g, again);
    }

    #[test]
    fn enrichment_strictly_raises_phi_at_its_prefix(
        seed in any::<u64>(),
        tf in 0.05f64..1.0,
        budget in 1usize..20,
    ) {
        let g = generate_ba(BaParams::new(40, 2, seed)).unwrap();
        let enriched = match enrich_club(&g, tf, budget, seed ^ 1) {
            Ok(e) => e,
            Err(_) => return Ok(()), // not enough absent pairs at this prefix
        };
        let m = (tf * g.node_count() as f64).ceil() as usize;
        let before: HashSet<u32> = g.rank_nodes().unwrap().ordered()[..m].iter().copied().collect();
        let after: HashSet<u32> = enriched.rank_nodes().unwrap().ordered()[..m].iter().copied().collect();
        prop_assert_eq!(&before, &after, "prefix membership must survive enrichment");
        let phi = |gr: &Graph| rich_club_curve(gr).unwrap().points[m - 2].phi;
        prop_assert!(phi(&enriched) > phi(&g));
    }

    #[test]
    fn attack_and_error_traces_never_rise(
        g in arb_graph(),
        f_max in 0.05f64..=1.0,
        step in 1usize..4,
        seed in any::<u64>(),
    ) {
        for trace in [
            attack_trace(&g, f_max, step, false),
            attack_trace(&g, f_max, step, true),
            error_trace(&g, f_max, step, seed, 3),
        ] {
            for w in trace.points.windows(2) {
                prop_assert!(w[1].s <= w[0].s + 1e-12, "S rose: {:?}", w);
            }
        }
    }

    #[test]
    fn diff_of_a_map_with_itself_is_empty(g in arb_graph()) {
        let r = diff_maps(&g, &g).unwrap();
        prop_assert!(r.missing_links.is_empty());
        prop_assert_eq!(r.links_only_in_a, 0);
        prop_assert_eq!(r.rich_rich_fraction, 0.0);
    }

    #[test]
    fn diff_partitions_the_reference_maps_links(
        a in arb_graph(),
        b in arb_graph(),
    ) {
        let r = diff_maps(&a, &b).unwrap();
        let shared = b.edges().filter(|&(u, v)| a.has_edge(u, v)).count();
        prop_assert_eq!(b.edge_count(), shared + r.missing_links.len());
        for &(u, v) in &r.missing_links {
            prop_assert!(b.has_edge(u, v) && !a.has_edge(u, v));
        }
    }

    #[test]
    fn rich_fraction_never_drops_as_the_prefix_widens(
        a in arb_graph(),
        b in arb_graph(),
    ) {
        let r = diff_maps(&a, &b).unwrap();
        prop_assume!(!r.missing_links.is_empty());
        let mut last = 0.0f64;
        for i in 1..=20 {
            let f = r.rich_rich_fraction_at(i as f64 / 20.0).unwrap();
            prop_assert!(f >= last);
            last = f;
        }
        prop_assert_eq!(last, 1.0); // whole-graph prefix holds every node
    }
}
