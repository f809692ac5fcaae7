//! Builds and re-verifies a witness pair for a query: two graphs that
//! k-WL cannot tell apart, for k one below the query's WL dimension,
//! but on which the query has different answer counts.
//!
//! ```bash
//! cargo run --release --example witness_star -- "q(x1,x2,x3) :- E(x1,y), E(x2,y), E(x3,y)"
//! ```

use std::time::Instant;

use wldim::quantum::star_query;
use wldim::query::parse_query;
use wldim::witness::{build_witness, verify_witness};

fn main() -> wldim::Result<()> {
    let q = match std::env::args().nth(1) {
        Some(text) => parse_query(&text)?,
        None => star_query(2),
    };
    let start = Instant::now();
    let cert = build_witness(&q)?;
    println!("query       {}", cert.query);
    println!("core        {}", cert.minimized);
    println!("width       {}", cert.sew);
    println!("copies      {}", cert.ell);
    println!("twisted at  {}", cert.twisted);
    println!("clones      {:?}", cert.multiplicities);
    let (g0, g1) = cert.graph_pair()?;
    println!("graphs      {} and {} vertices", g0.n(), g1.n());
    println!("answers     {} vs {}", cert.counts[0], cert.counts[1]);
    println!("{}-WL equivalent: {}", cert.wl_level, cert.wl_equivalent);
    println!("status      {} ({:.2?})", cert.status, start.elapsed());

    let report = verify_witness(&cert);
    for check in &report.checks {
        println!("  [{}] {}: {}", if check.passed { "ok" } else { "!!" }, check.name, check.detail);
    }
    println!("verified    {}", report.passed);
    Ok(())
}
