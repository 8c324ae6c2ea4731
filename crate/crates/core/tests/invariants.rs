use proptest::prelude::*;

use firstfit::exact::{b_chromatic_core_order, partial_grundy_number_centered};
use firstfit::generators::duplicate_vertex;
use firstfit::graph::has_biclique;
use firstfit::{
    first_fit, grundy_number, induced_subgraph, partial_grundy_number, rooted_grundy, verify, Graph, VertexSet,
};

/// Graphs on 1..=max_n vertices, edges drawn from a bitmask.
fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn graph_and_order(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graphs(max_n).prop_flat_map(|g| {
        let order = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), order)
    })
}

fn brute_k22(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            let common = g.neighbors(a).intersection(g.neighbors(b)).count();
            common >= 2
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn first_fit_is_proper_and_greedy((g, order) in graph_and_order(9)) {
        let c = first_fit(&g, &order).unwrap();
        for (u, v) in g.edges() {
            prop_assert_ne!(c.colors[u], c.colors[v]);
        }
        for v in 0..g.n() {
            for lower in 1..c.colors[v] {
                prop_assert!(g.neighbors(v).iter().any(|&u| c.colors[u] == lower));
            }
        }
    }

    #[test]
    fn grundy_bounds_every_ordering((g, order) in graph_and_order(9)) {
        let gr = grundy_number(&g).unwrap();
        prop_assert!(first_fit(&g, &order).unwrap().max_color() <= gr.value);
        prop_assert!(gr.value <= g.max_degree() + 1);
        prop_assert!(verify(&g, &gr.certificate).unwrap().is_valid());
        prop_assert_eq!(gr.certificate.order(), gr.value);
    }

    #[test]
    fn grundy_is_hereditary(g in graphs(9), drop in any::<prop::sample::Index>()) {
        let v = drop.index(g.n());
        let keep: VertexSet = (0..g.n()).filter(|&u| u != v).collect();
        let sub = induced_subgraph(&g, &keep).unwrap();
        prop_assert!(grundy_number(&sub.graph).unwrap().value <= grundy_number(&g).unwrap().value);
    }

    #[test]
    fn false_twins_do_not_change_grundy(g in graphs(8), pick in any::<prop::sample::Index>()) {
        let v = pick.index(g.n());
        let (h, w) = duplicate_vertex(&g, v).unwrap();
        prop_assert_eq!(h.neighbors(v), h.neighbors(w));
        prop_assert_eq!(grundy_number(&h).unwrap().value, grundy_number(&g).unwrap().value);
    }

    #[test]
    fn solver_chain_is_monotone(g in graphs(8)) {
        let gr = grundy_number(&g).unwrap().value;
        let bc = b_chromatic_core_order(&g).unwrap().value;
        let pg = partial_grundy_number(&g).unwrap();
        prop_assert!(gr <= pg.value);
        prop_assert!(bc <= pg.value);
        prop_assert!(verify(&g, &pg.certificate).unwrap().is_valid());
        prop_assert_eq!(partial_grundy_number_centered(&g).unwrap().value, pg.value);
    }

    #[test]
    fn rooted_grundy_is_reached_somewhere(g in graphs(8)) {
        let gr = grundy_number(&g).unwrap().value;
        let best = (0..g.n()).map(|v| rooted_grundy(&g, v).unwrap()).max().unwrap();
        prop_assert_eq!(best, gr);
    }

    #[test]
    fn k22_search_matches_brute_force(g in graphs(9)) {
        let found = has_biclique(&g, 2, u128::MAX).unwrap();
        prop_assert_eq!(found.is_some(), brute_k22(&g));
        if let Some((a, b)) = found {
            prop_assert!(a.is_disjoint(&b));
            for x in a.iter() {
                for y in b.iter() {
                    prop_assert!(g.has_edge(x, y));
                }
            }
        }
    }

    #[test]
    fn induced_subgraphs_compose(g in graphs(9), mask in any::<u16>(), mask2 in any::<u16>()) {
        let s: VertexSet = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
        let outer = induced_subgraph(&g, &s).unwrap();
        let t: VertexSet = (0..outer.graph.n()).filter(|v| mask2 >> v & 1 == 1).collect();
        let inner = induced_subgraph(&outer.graph, &t).unwrap();
        let direct: VertexSet = t.iter().map(|v| outer.new_to_old[v]).collect();
        let flat = induced_subgraph(&g, &direct).unwrap();
        prop_assert_eq!(inner.graph.n(), flat.graph.n());
        for (u, v) in inner.graph.edges() {
            prop_assert!(flat.graph.has_edge(u, v));
        }
        prop_assert_eq!(inner.graph.edge_count(), flat.graph.edge_count());
    }

    #[test]
    fn complement_is_an_involution(g in graphs(10)) {
        let c = g.complement();
        let n = g.n();
        prop_assert_eq!(c.edge_count() + g.edge_count(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }
}
