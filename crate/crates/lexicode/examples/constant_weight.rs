//! Constant-weight greedy codes: the scan keeps its ordering but skips every
//! vector whose weight differs from w before any distance check runs.
//!
//! Run with: cargo run --example constant_weight

use lexicode::analysis::CodeReport;
use lexicode::{greedy_construct, ConstructionParams, OrderingSpec};

fn main() {
    // All weight-2 vectors of length 4 pairwise differ in >= 2 coordinates,
    // so every one of the 6 is accepted.
    let mut params = ConstructionParams::new(4, 2, OrderingSpec::Lexicographic);
    params.constant_weight = Some(2);
    let code = greedy_construct(&params).unwrap();
    println!(
        "n=4 d=2 w=2: {}",
        code.iter()
            .map(|w| w.to_bitstring(4))
            .collect::<Vec<_>>()
            .join(" ")
    );

    // A(n, d, w) lower bounds from the greedy scan for a few parameter sets.
    println!("\ngreedy sizes (lower bounds for optimal constant-weight codes):");
    for (n, d, w) in [(8u32, 4u32, 4u32), (10, 4, 5), (12, 6, 6), (14, 6, 7)] {
        let mut params = ConstructionParams::new(n, d, OrderingSpec::Lexicographic);
        params.constant_weight = Some(w);
        let code = greedy_construct(&params).unwrap();
        let report = CodeReport::analyze(&code);
        println!(
            "  n={n:2} d={d} w={w}: size={:4} d_min={:?}",
            report.size, report.min_distance
        );
        assert!(report
            .weight_distribution
            .iter()
            .all(|&(weight, _)| weight == w));
    }
}
