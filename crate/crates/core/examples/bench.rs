//! Run the comparison harness over generated corpora and print a report.
//!
//! cargo run --release --example bench -- [table|csv|json]

use mrle::bench::{emit_report, run_bench, BenchSource, Codec};

fn main() {
    let format = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "table".into())
        .parse()
        .expect("format is table, csv or json");

    let sources: Vec<BenchSource> = [
        "alternating:1048576:0",
        "constant:1048576:0",
        "geometric-runs(0.5):1048576:1",
        "geometric-runs(0.1):1048576:2",
        "geometric-runs(0.01):1048576:3",
        "random:1048576:4",
    ]
    .iter()
    .map(|s| BenchSource::Corpus(s.parse().unwrap()))
    .collect();

    let report = run_bench(&sources, &Codec::ALL).expect("bench run");
    print!("{}", emit_report(&report, format));
}
