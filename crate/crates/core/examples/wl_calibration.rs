//! Compares k-WL verdicts with homomorphism counts from small patterns of
//! treewidth at most k, over every graph with up to 5 vertices.
//!
//! ```bash
//! cargo run --release --example wl_calibration
//! ```

use std::collections::BTreeMap;

use wldim::graph::count_hom;
use wldim::wl::{connected_patterns, wl_compare, wl_equivalence_classes};
use wldim::{Graph, Limits};

/// Every graph on `n` vertices, duplicates up to isomorphism included.
fn labelled(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|m| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|&(b, _)| m & (1 << b) != 0).map(|(_, &e)| e).collect();
            Graph::from_edges(n, &edges)
        })
        .collect()
}

fn main() -> wldim::Result<()> {
    let corpus: Vec<Graph> = (1..=5).flat_map(labelled).collect();
    let limits = Limits::default();
    for k in 1..=2 {
        let wl = wl_equivalence_classes(&corpus, k, &limits)?;
        let patterns = connected_patterns(6, k);
        let mut profiles = BTreeMap::new();
        let mut hom = Vec::new();
        for g in &corpus {
            let profile: Vec<u64> = patterns.iter().map(|p| count_hom(p, g)).collect::<wldim::Result<_>>()?;
            let next = profiles.len();
            hom.push(*profiles.entry(profile).or_insert(next));
        }
        let mut mismatches = 0;
        for i in 0..corpus.len() {
            for j in 0..i {
                if (wl[i] == wl[j]) != (hom[i] == hom[j]) {
                    mismatches += 1;
                }
            }
        }
        println!(
            "k = {k}: {} graphs, {} patterns, {} classes, {mismatches} mismatches",
            corpus.len(),
            patterns.len(),
            profiles.len()
        );
    }

    let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
    for k in 1..=2 {
        let cmp = wl_compare(&two_triangles, &Graph::cycle(6), k, &limits)?;
        println!("2K3 vs C6 at k = {k}: equivalent {} after {} rounds", cmp.equivalent, cmp.rounds);
    }
    Ok(())
}
