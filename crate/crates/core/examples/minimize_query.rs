//! Counting-minimal cores and partial automorphisms.
//!
//! ```bash
//! cargo run --example minimize_query -- "q(x) :- E(x,y1), E(y1,y2), E(y2,x)"
//! ```

use wldim::query::{count_answers, minimize, parse_query, partial_automorphisms};
use wldim::Graph;

fn main() -> wldim::Result<()> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        vec![
            "q(x) :- E(x,y1), E(y1,y2), E(y2,y3)".to_string(),
            "q(a,b) :- E(a,u), E(u,b), E(a,v), E(v,b)".to_string(),
            "q(x1,x2) :- E(x1,x2), E(x2,y), E(y,z)".to_string(),
            "q(x) :- E(x,y1), E(y1,y2), E(y2,x)".to_string(),
        ]
    } else {
        inputs
    };
    let probe = Graph::cycle(5).disjoint_union(&Graph::complete(4));
    for text in inputs {
        let q = parse_query(&text)?;
        let core = minimize(&q)?;
        let autos = partial_automorphisms(&core)?;
        println!("{}", q.to_dsl("q"));
        println!("  core        {}", core.to_dsl("q"));
        println!("  removed     {} variable(s)", q.n() - core.n());
        println!("  Aut(H, X)   {} map(s) on the free variables", autos.len());
        println!(
            "  answers on C5 + K4: {} (core: {})",
            count_answers(&q, &probe)?,
            count_answers(&core, &probe)?
        );
    }
    Ok(())
}
