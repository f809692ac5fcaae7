//! Widths of the k-star queries and of a few other shapes.
//!
//! ```bash
//! cargo run --example star_widths
//! ```

use wldim::quantum::star_query;
use wldim::query::parse_query;
use wldim::width::{extension_graph, extension_width, semantic_extension_width, treewidth};
use wldim::witness::wl_dimension;

fn main() -> wldim::Result<()> {
    println!("{:<56} {:>3} {:>3} {:>3}", "query", "tw", "ew", "sew");
    let mut queries: Vec<_> = (1..=4).map(star_query).collect();
    for text in [
        "q(x1,x2) :- E(x1,y1), E(y1,y2), E(y2,x2)",
        "q(x) :- E(x,y1), E(y1,y2), E(y2,y3)",
        "q(a,b) :- E(a,u), E(u,b), E(a,v), E(v,b)",
    ] {
        queries.push(parse_query(text)?);
    }
    for q in &queries {
        let (tw, _) = treewidth(q.graph())?;
        println!(
            "{:<56} {:>3} {:>3} {:>3}",
            q.to_dsl("q"),
            tw,
            extension_width(q)?,
            semantic_extension_width(q)?
        );
    }

    // the extension graph of the k-star is a (k+1)-clique
    let s3 = star_query(3);
    let gamma = extension_graph(&s3);
    println!("\nextension graph of the 3-star:\n{gamma}");
    println!("WL dimension of the 3-star: {}", wl_dimension(&s3)?);
    Ok(())
}
