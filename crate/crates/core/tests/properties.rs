use proptest::prelude::*;

use ubgraph::{
    canonical_form, distance_unbalancedness, graph6, is_isomorphic, mostar, mostar_ell, profile,
    DistanceTable, Graph,
};

/// A random connected graph: a random spanning tree plus random extra edges.
fn connected_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (2..=max_order).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        let extra = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (p, i + 1))
                .collect();
            edges.extend(
                extra
                    .into_iter()
                    .filter(|(a, b)| a != b)
                    .map(|(a, b)| (a.min(b), a.max(b))),
            );
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn counts_partition_the_vertices(g in connected_graph(12)) {
        let table = DistanceTable::new(&g).unwrap();
        let n = g.order() as u64;
        for u in 0..g.order() {
            for v in 0..g.order() {
                if u == v { continue; }
                let b = table.pair_balance(u, v);
                prop_assert_eq!(b.closer_to_u + b.closer_to_v + b.equidistant, n);
                prop_assert_eq!(b.swapped(), table.pair_balance(v, u));
                prop_assert!(b.closer_to_u >= 1);
            }
        }
    }

    #[test]
    fn decomposition(g in connected_graph(12)) {
        let p = profile(&g).unwrap();
        let total: u64 = (1..=p.diameter).map(|ell| mostar_ell(&g, ell).unwrap()).sum();
        prop_assert_eq!(total, distance_unbalancedness(&g).unwrap());
        prop_assert_eq!(mostar(&g).unwrap(), mostar_ell(&g, 1).unwrap());
        prop_assert!(mostar_ell(&g, p.diameter + 1).is_err());
    }

    #[test]
    fn relabeling_invariance(
        (g, perm) in connected_graph(11).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), permutation(n))
        })
    ) {
        let h = g.relabel(&perm);
        prop_assert_eq!(profile(&g).unwrap(), profile(&h).unwrap());
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in connected_graph(16)) {
        prop_assert_eq!(graph6::decode(graph6::encode(&g).as_bytes()).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_idempotent(g in connected_graph(12)) {
        let form = canonical_form(&g).unwrap();
        prop_assert_eq!(canonical_form(&form.graph()).unwrap(), form);
    }

    #[test]
    fn complement_distinguishes(g in connected_graph(9)) {
        // a graph and its complement are isomorphic only if they have equal size
        let c = g.complement();
        if c.size() != g.size() {
            prop_assert!(!is_isomorphic(&g, &c).unwrap());
        }
    }
}

#[test]
fn leaf_edge_law_on_all_small_trees() {
    for n in 2..=11 {
        for t in ubgraph::enumerate_trees(n).unwrap() {
            let table = DistanceTable::new(&t).unwrap();
            for (u, v) in t.edges() {
                if t.degree(u) == 1 || t.degree(v) == 1 {
                    assert_eq!(table.pair_unbalancedness(u, v), (n - 2) as u64);
                }
            }
        }
    }
}

#[test]
fn tree_enumeration_has_no_duplicates() {
    for n in 1..=13 {
        let mut forms: Vec<_> = ubgraph::enumerate_trees(n)
            .unwrap()
            .map(|t| canonical_form(&t).unwrap())
            .collect();
        let total = forms.len();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), total, "order {n}");
    }
}
