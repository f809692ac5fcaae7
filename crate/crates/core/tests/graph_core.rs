mod common;

use common::strategies::{graph, permutation};
use common::{all_graphs, brute_homs, permute};
use proptest::prelude::*;
use wldim::graph::{automorphisms, count_hom, count_hom_tau, is_isomorphic, is_isomorphic_with, parse_graph};
use wldim::{ColouredGraph, Graph, Limits};

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&v| a[v]).collect()
}

fn inverse(a: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (i, &v) in a.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_count_matches_enumeration(h in graph(1, 4), g in graph(1, 5)) {
        prop_assert_eq!(count_hom(&h, &g).unwrap(), brute_homs(&h, &g).len() as u64);
    }

    #[test]
    fn hom_partition_over_pattern_maps(h in graph(1, 4), f in graph(1, 3), g in graph(1, 5), seed in any::<u64>()) {
        // a colouring G -> F built by sending each vertex to a random F-vertex and keeping only the compatible edges
        let colours: Vec<usize> = (0..g.n()).map(|v| ((seed >> (3 * v)) as usize) % f.n()).collect();
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| f.has_edge(colours[u], colours[v]))
            .collect();
        let g = Graph::from_edges(g.n(), &edges);
        let coloured = ColouredGraph::new(g.clone(), f.clone(), colours).unwrap();
        let total: u64 = brute_homs(&h, &f).iter().map(|tau| count_hom_tau(&h, &coloured, tau).unwrap()).sum();
        prop_assert_eq!(total, count_hom(&h, &g).unwrap());
    }

    #[test]
    fn hom_multiplicative_over_tensor(h in graph(1, 4), a in graph(1, 4), b in graph(1, 4)) {
        let lhs = count_hom(&h, &a.tensor(&b)).unwrap();
        prop_assert_eq!(lhs, count_hom(&h, &a).unwrap() * count_hom(&h, &b).unwrap());
    }

    #[test]
    fn relabelled_graphs_are_isomorphic(g in graph(1, 7), perm in permutation(7)) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let h = permute(&g, &perm);
        let map = is_isomorphic_with(&g, &h, &Limits::default()).unwrap().expect("isomorphic");
        prop_assert!(g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v])));
        prop_assert!(is_isomorphic(&h, &g).unwrap());
    }

    #[test]
    fn automorphisms_form_a_group(g in graph(1, 6)) {
        let auts = automorphisms(&g).unwrap();
        let set: std::collections::BTreeSet<Vec<usize>> = auts.iter().cloned().collect();
        prop_assert!(set.contains(&(0..g.n()).collect::<Vec<_>>()));
        for a in &auts {
            prop_assert!(set.contains(&inverse(a)));
            for b in &auts {
                prop_assert!(set.contains(&compose(a, b)));
            }
            prop_assert!(g.edges().iter().all(|&(u, v)| g.has_edge(a[u], a[v])));
        }
    }

    #[test]
    fn text_round_trip(g in graph(0, 8)) {
        prop_assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn isomorphic_graphs_share_hom_counts(g in graph(1, 6), perm in permutation(6), h in graph(1, 4)) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let relabelled = permute(&g, &perm);
        prop_assert_eq!(count_hom(&h, &g).unwrap(), count_hom(&h, &relabelled).unwrap());
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_small_graphs() {
    // distinct canonical forms are pairwise non-isomorphic; each is isomorphic to itself
    let corpus: Vec<Graph> = (1..=5).flat_map(all_graphs).collect();
    for (i, a) in corpus.iter().enumerate() {
        assert!(is_isomorphic(a, a).unwrap());
        for b in &corpus[..i] {
            assert!(!is_isomorphic(a, b).unwrap(), "{a} vs {b}");
        }
    }
    assert_eq!(corpus.len(), 1 + 2 + 4 + 11 + 34);
}

#[test]
fn automorphism_counts_of_named_graphs() {
    assert_eq!(automorphisms(&Graph::cycle(5)).unwrap().len(), 10);
    assert_eq!(automorphisms(&Graph::complete_bipartite(2, 3)).unwrap().len(), 12);
    assert_eq!(automorphisms(&Graph::complete(4)).unwrap().len(), 24);
}
