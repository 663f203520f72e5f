//! Runs the generator for one parameter tuple and prints statistics.
//!
//! `cargo run --release -p vgr-core --example generate -- 20 4 4 1 [threads] [iso_max_edges]`

use std::time::Instant;
use vgr_core::generator::{generate_with_stats, GenerateOptions};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let [v, k, g, lambda] = args[..4] else {
        eprintln!("usage: generate V K G LAMBDA [THREADS] [ISO_MAX_EDGES]");
        std::process::exit(2);
    };
    let opts = GenerateOptions {
        threads: args.get(4).copied().unwrap_or(1),
        iso_max_edges: args.get(5).copied().unwrap_or(usize::MAX),
        ..GenerateOptions::default()
    };
    let start = Instant::now();
    match generate_with_stats(v, k, g, lambda as u64, &opts) {
        Ok((graphs, stats)) => {
            println!("{} graphs in {:.2?}", graphs.len(), start.elapsed());
            println!("{stats:?}");
        }
        Err(e) => eprintln!("error: {e}"),
    }
}
