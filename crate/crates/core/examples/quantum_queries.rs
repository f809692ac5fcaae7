//! Normalises and evaluates a quantum query read from a `.quantum` file.
//!
//! ```bash
//! cargo run --example quantum_queries -- crates/core/examples/data/stars.quantum
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use wldim::quantum::{eval_quantum, hsew, normalize_quantum, parse_quantum, star_query};
use wldim::query::parse_query;
use wldim::Graph;

fn main() -> wldim::Result<()> {
    let raw = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| wldim::Error::Invalid(e.to_string()))?;
            parse_quantum(&text)?
        }
        None => {
            let one = BigRational::from_integer(BigInt::from(1));
            vec![
                (one.clone(), star_query(2)),
                // folds onto the 1-star, so the two terms merge
                (one.clone(), parse_query("q(x) :- E(x,y1), E(y1,y2)")?),
                (-one.clone(), star_query(1)),
                (BigRational::new(BigInt::from(1), BigInt::from(2)), star_query(3)),
            ]
        }
    };
    println!("{} raw terms", raw.len());
    let q = normalize_quantum(raw)?;
    print!("normalised:\n{q}");
    if !q.is_empty() {
        println!("hereditary width: {}", hsew(&q)?);
    }
    for (name, g) in [("K4", Graph::complete(4)), ("C6", Graph::cycle(6)), ("P5", Graph::path(5))] {
        println!("value on {name}: {}", eval_quantum(&q, &g)?);
    }
    Ok(())
}
