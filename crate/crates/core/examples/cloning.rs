//! Cloning colour classes scales colour-respecting homomorphism counts by
//! a product of multiplicities.
//!
//! ```bash
//! cargo run --example cloning
//! ```

use wldim::cfi::{cfi, clone_blocks, CloneSpec};
use wldim::graph::count_hom_tau;
use wldim::Graph;

fn main() -> wldim::Result<()> {
    let base = Graph::cycle(4);
    let chi = cfi(&base, &[0])?;
    let spec = CloneSpec::new(vec![0, 2], vec![2, 3])?;
    let cloned = clone_blocks(&chi.coloured, &spec)?;
    println!(
        "χ(C4, {{0}}) has {} vertices; cloning colours 0 and 2 twice and three times gives {}",
        chi.result().n(),
        cloned.coloured.graph().n()
    );
    let pattern = Graph::path(3);
    for tau in [[0, 1, 2], [0, 1, 0], [1, 0, 1], [2, 3, 2]] {
        let before = count_hom_tau(&pattern, &chi.coloured, &tau)?;
        let after = count_hom_tau(&pattern, &cloned.coloured, &tau)?;
        println!("tau {tau:?}: {before} -> {after}");
    }
    let labels: Vec<&str> = (0..6).filter_map(|v| cloned.coloured.graph().label(v)).collect();
    println!("first labels: {labels:?}");
    Ok(())
}
