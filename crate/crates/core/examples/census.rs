//! Prints graph counts per order: `cargo run --release --example census -- 9 connected 0`.

use std::time::Instant;

use linforest_core::enumerate::{enumerate_graphs, Connectivity, EnumFilter};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let max: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let conn: Connectivity = args.get(2).map_or(Connectivity::Connected, |s| s.parse().expect("connectivity"));
    let min_degree: usize = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(0);
    for n in 1..=max {
        let start = Instant::now();
        let count = enumerate_graphs(EnumFilter::new(n, min_degree, conn)).expect("order within cap").count();
        println!("n={n:2} count={count:10} time={:.2?}", start.elapsed());
    }
}
