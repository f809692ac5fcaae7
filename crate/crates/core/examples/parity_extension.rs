//! Extendable assignments into CFI graphs of ℓ-copies, and their
//! extension to colour-prescribed homomorphisms.
//!
//! ```bash
//! cargo run --example parity_extension
//! ```

use wldim::answers::{enumerate_extendable, extend_assignment, parity_edge_assignment, witness_free_variable};
use wldim::cfi::cfi;
use wldim::query::parse_query;
use wldim::width::ell_copy;
use wldim::Graph;

fn main() -> wldim::Result<()> {
    // edge weights with odd sums exactly at the two ends of a path
    let path = Graph::path(5);
    let parity = parity_edge_assignment(&path, &[0, 4])?;
    let odd: Vec<_> = path.edges().iter().filter(|&&(u, v)| parity.weight(u, v)).collect();
    println!("odd edges joining the ends of P5: {odd:?}");

    for text in ["q(x) :- E(x,y)", "q(x1,x2) :- E(x1,y), E(x2,y)"] {
        let q = parse_query(text)?;
        let x1 = witness_free_variable(&q).expect("some free variable has an existential neighbour");
        for ell in [1, 3, 5] {
            let copy = ell_copy(&q, ell)?;
            let even = enumerate_extendable(&q, &copy, &[])?;
            let odd = enumerate_extendable(&q, &copy, &[x1])?;
            println!("{text}  ell = {ell}: {} untwisted vs {} twisted", even.len(), odd.len());
        }
    }

    let q = parse_query("q(x1,x2) :- E(x1,y), E(x2,y)")?;
    let copy = ell_copy(&q, 3)?;
    let chi = cfi(&copy.f, &[])?;
    let first = &enumerate_extendable(&q, &copy, &[])?[0];
    let h = extend_assignment(first, &q, &copy, &[])?;
    println!("\nextension of the first assignment:");
    for v in 0..q.n() {
        let image = h.apply(v);
        println!("  {} -> {}", q.name(v), chi.result().label(image).unwrap_or("?"));
    }
    Ok(())
}
