//! CFI graphs over small bases: twisting an odd number of vertices gives
//! a non-isomorphic graph, twisting an even number does not.
//!
//! ```bash
//! cargo run --example cfi_pairs
//! ```

use wldim::cfi::{cfi, cfi_iso_parity};
use wldim::graph::is_isomorphic;
use wldim::wl::wl_equivalent;
use wldim::Graph;

fn main() -> wldim::Result<()> {
    let triangle = Graph::complete(3);
    let even = cfi(&triangle, &[])?;
    let odd = cfi(&triangle, &[0])?;
    println!("χ(K3, ∅) has {} vertices:", even.result().n());
    for (v, origin) in even.sidecar().iter().enumerate() {
        println!("  {v}: {}", even.result().label(v).unwrap_or("?"));
        debug_assert_eq!(origin.vertex, v);
    }
    let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
    println!("χ(K3, ∅) ≅ 2K3: {}", is_isomorphic(even.result(), &two_triangles)?);
    println!("χ(K3, {{0}}) ≅ C6: {}", is_isomorphic(odd.result(), &Graph::cycle(6))?);

    println!("\nbase      W1      W2      isomorphic  predicted  1-WL  2-WL");
    let bases = [("K4", Graph::complete(4)), ("C5", Graph::cycle(5)), ("K2,3", Graph::complete_bipartite(2, 3))];
    for (name, base) in &bases {
        for (w1, w2) in [(vec![], vec![0]), (vec![], vec![0, 1]), (vec![1], vec![2]), (vec![0], vec![0, 1])] {
            let a = cfi(base, &w1)?;
            let b = cfi(base, &w2)?;
            println!(
                "{:<9} {:<7} {:<7} {:<11} {:<10} {:<5} {}",
                name,
                format!("{w1:?}"),
                format!("{w2:?}"),
                is_isomorphic(a.result(), b.result())?,
                cfi_iso_parity(base, &w1, &w2),
                wl_equivalent(a.result(), b.result(), 1)?,
                wl_equivalent(a.result(), b.result(), 2)?,
            );
        }
    }
    Ok(())
}
