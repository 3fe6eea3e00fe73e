//! Self-orthogonal greedy construction: adding the orthogonality constraint
//! to the distance check produces self-dual codes at many parameter points
//! (Monroe's conjecture); at n = 8, d = 4 the result is the self-dual
//! extended Hamming code.
//!
//! Run with: cargo run --release --example self_dual

use lexicode::analysis::CodeReport;
use lexicode::{greedy_construct_self_orthogonal, ConstructionParams, OrderingSpec};

fn main() {
    for (n, d) in [(8u32, 4u32), (12, 4), (16, 4)] {
        let mut params = ConstructionParams::new(n, d, OrderingSpec::Lexicographic);
        params.self_orthogonal = true;
        let code = greedy_construct_self_orthogonal(&params).unwrap();
        let report = CodeReport::analyze(&code);
        println!(
            "n={n:2} d={d}: size={:4} dimension={:?} d_min={:?} self_dual={}",
            report.size, report.dimension, report.min_distance, report.is_self_dual
        );
    }

    println!("\nfull listing for n=8, d=4 (the extended Hamming code):");
    let mut params = ConstructionParams::new(8, 4, OrderingSpec::Lexicographic);
    params.self_orthogonal = true;
    let code = greedy_construct_self_orthogonal(&params).unwrap();
    for w in code.iter() {
        println!("  {}", w.to_bitstring(8));
    }
    // The larger self-dual lexicodes [22,11,6] and [24,12,8] take about a
    // minute each; construct them with the CLI:
    //   lexicode construct --n 24 --d 8 --self-orthogonal --report --out golay24.code
}
