//! Differential benchmark: the serial reference (full scan, no early exit)
//! against the two-phase parallel engine. Outputs are verified identical
//! before any timing is reported.
//!
//! Run with: cargo run --release --example serial_vs_parallel

use lexicode::bench::{bench_matrix, to_csv};
use lexicode::OrderingSpec;

fn main() {
    let rows = bench_matrix(12..=16, 3, &OrderingSpec::Lexicographic, &[0]).unwrap();
    print!("{}", to_csv(&rows));
    for r in &rows {
        assert!(r.comparisons_parallel <= r.comparisons_serial);
    }
    println!("\nall rows passed the identical-output gate");
    println!("(the selective first phase plus early exit is what cuts the comparison count)");
}
