//! Recovers answer counts from homomorphism counts of ℓ-copies alone.
//!
//! ```bash
//! cargo run --release --example interpolation
//! ```

use wldim::answers::ans_via_interpolation;
use wldim::query::{count_answers, parse_query};
use wldim::Graph;

fn main() -> wldim::Result<()> {
    let targets = [
        ("K3", Graph::complete(3)),
        ("P4", Graph::path(4)),
        ("C4", Graph::cycle(4)),
        ("K1,3", Graph::complete_bipartite(1, 3)),
    ];
    for text in [
        "q(x) :- E(x,y)",
        "q(x1,x2) :- E(x1,y), E(x2,y)",
        "q(x) :- E(x,y1), E(y1,y2), E(y2,x)",
        "q(x1,x2) :- E(x1,x2), E(x1,y), E(x2,y)",
    ] {
        let q = parse_query(text)?;
        for (name, g) in &targets {
            let direct = count_answers(&q, g)?;
            let via = ans_via_interpolation(&q, g, 256)?;
            println!("{text:<42} {name:<5} direct {direct:>3}  interpolated {via:>3}");
        }
    }
    Ok(())
}
