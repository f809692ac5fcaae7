//! Counts size-k dominating sets through injective star answers in the
//! complement graph.
//!
//! ```bash
//! cargo run --example dominating_sets -- 3 path/to/graph
//! ```

use wldim::graph::parse_graph;
use wldim::quantum::{count_dominating_sets, count_injective_star, injective_star_coefficients};
use wldim::Graph;

fn main() -> wldim::Result<()> {
    let mut args = std::env::args().skip(1);
    let k: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let graphs: Vec<(String, Graph)> = match args.next() {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| wldim::Error::Invalid(e.to_string()))?;
            vec![(path, parse_graph(&text)?)]
        }
        None => vec![
            ("C6".into(), Graph::cycle(6)),
            ("P7".into(), Graph::path(7)),
            ("K3,3".into(), Graph::complete_bipartite(3, 3)),
            ("Petersen".into(), petersen()),
        ],
    };
    println!("injective {k}-star = Σ c_m · |Ans(S_m)| with c = {:?}", &injective_star_coefficients(k)[1..]);
    for (name, g) in graphs {
        println!(
            "{name:<10} n = {:<3} dominating {k}-sets: {:<6} injective {k}-star answers: {}",
            g.n(),
            count_dominating_sets(k, &g)?,
            count_injective_star(k, &g)?
        );
    }
    Ok(())
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges)
}
