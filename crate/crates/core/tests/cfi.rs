mod common;

use common::strategies::{connected_graph, graph};
use common::{brute_homs, is_hom};
use proptest::prelude::*;
use wldim::cfi::{cfi, cfi_iso_parity, clone_blocks, CloneSpec};
use wldim::graph::{count_hom_tau, is_isomorphic};
use wldim::{ColouredGraph, Graph};

fn subset(n: usize, bits: u32) -> Vec<usize> {
    (0..n).filter(|&v| bits & (1 << v) != 0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn structure(f in connected_graph(1, 6), bits in any::<u32>()) {
        let w = subset(f.n(), bits);
        let chi = cfi(&f, &w).unwrap();
        let expected: usize = (0..f.n()).map(|v| 1usize << f.degree(v).saturating_sub(1)).sum();
        // an isolated vertex has one even subset and no odd one
        let isolated_odd = (0..f.n()).filter(|&v| f.degree(v) == 0 && w.contains(&v)).count();
        prop_assert_eq!(chi.result().n(), expected - isolated_odd);
        prop_assert!(is_hom(chi.result(), &f, chi.colouring()));
        for (v, (base, s)) in chi.pairs.iter().enumerate() {
            prop_assert_eq!(chi.colouring()[v], *base);
            prop_assert_eq!(s.len() % 2 == 1, w.contains(base));
            prop_assert!(s.iter().all(|&u| f.has_edge(*base, u)));
        }
        let origins = chi.sidecar();
        prop_assert_eq!(origins.len(), chi.result().n());
        prop_assert!(origins.iter().enumerate().all(|(i, o)| o.vertex == i && o.clone == 0));
    }

    #[test]
    fn parity_law(f in connected_graph(1, 5), a in any::<u32>(), b in any::<u32>()) {
        let w1 = subset(f.n(), a);
        let w2 = subset(f.n(), b);
        let iso = is_isomorphic(cfi(&f, &w1).unwrap().result(), cfi(&f, &w2).unwrap().result()).unwrap();
        prop_assert_eq!(iso, cfi_iso_parity(&f, &w1, &w2));
    }

    #[test]
    fn twisting_never_adds_colour_respecting_homs(h in graph(1, 4), f in connected_graph(1, 5), bits in any::<u32>()) {
        let even = cfi(&f, &[]).unwrap();
        let twisted = cfi(&f, &subset(f.n(), bits)).unwrap();
        for tau in brute_homs(&h, &f) {
            let lo = count_hom_tau(&h, &twisted.coloured, &tau).unwrap();
            let hi = count_hom_tau(&h, &even.coloured, &tau).unwrap();
            prop_assert!(lo <= hi, "tau {:?}: {} > {}", tau, lo, hi);
        }
    }

    #[test]
    fn cloning_scales_by_preimage_sizes(
        h in graph(1, 4),
        f in connected_graph(1, 4),
        bits in any::<u32>(),
        zs in proptest::collection::vec(1usize..=3, 4),
        blocks in any::<u32>(),
    ) {
        let g = cfi(&f, &subset(f.n(), bits)).unwrap().coloured;
        let block_vertices = subset(f.n(), blocks);
        let multiplicities: Vec<usize> = block_vertices.iter().map(|&v| zs[v]).collect();
        let spec = CloneSpec::new(block_vertices.clone(), multiplicities.clone()).unwrap();
        let cloned = clone_blocks(&g, &spec).unwrap();
        prop_assert!(is_hom(cloned.coloured.graph(), &f, cloned.coloured.colouring()));
        for tau in brute_homs(&h, &f) {
            let factor: u64 = block_vertices
                .iter()
                .zip(&multiplicities)
                .map(|(&v, &z)| (z as u64).pow(tau.iter().filter(|&&t| t == v).count() as u32))
                .product();
            prop_assert_eq!(
                count_hom_tau(&h, &cloned.coloured, &tau).unwrap(),
                count_hom_tau(&h, &g, &tau).unwrap() * factor
            );
        }
    }
}

#[test]
fn triangle_pairs() {
    let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
    assert!(is_isomorphic(cfi(&Graph::complete(3), &[]).unwrap().result(), &two_triangles).unwrap());
    assert!(is_isomorphic(cfi(&Graph::complete(3), &[0]).unwrap().result(), &Graph::cycle(6)).unwrap());
}

#[test]
fn clone_provenance() {
    let g = ColouredGraph::new(Graph::path(3), Graph::path(3), vec![0, 1, 2]).unwrap();
    let cloned = clone_blocks(&g, &CloneSpec::new(vec![1], vec![3]).unwrap()).unwrap();
    assert_eq!(cloned.rho, vec![0, 1, 1, 1, 2]);
    assert_eq!(cloned.clone_index, vec![0, 1, 2, 3, 0]);
    assert_eq!(cloned.coloured.graph().edge_count(), 6);
    assert_eq!(cloned.coloured.graph().label(2), Some("1#2"));
}
