//! Runs the whole verification suite over every connected multigraph with at
//! most four vertices and six edges, each under several edge orders.
//!
//! `cargo run --release --example verify_corpus -- 5 7` widens the bounds.

use fully_optimal::harness::{run_verification, VerifyConfig};

fn main() -> fully_optimal::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric bound"));
    let mut config = VerifyConfig::default();
    if let Some(v) = args.next() {
        config.max_vertices = v;
    }
    if let Some(e) = args.next() {
        config.max_edges = e;
    }
    let report = run_verification(&config)?;
    print!("{report}");
    Ok(())
}
