//! Worst-case cost of the greedy scan grows as n * 4^n; a cached dimension
//! tightens the guess to 2^n * 2^k. Both are printed per length.
//!
//! Run with: cargo run --example estimate_cost

use lexicode::estimate::estimate;
use lexicode::{greedy_construct, ConstructionParams, OrderingSpec};

fn main() {
    println!("{:>3}  {:>26}  {:>22}", "n", "worst case n*4^n", "refined 2^n*2^k (d=3)");
    for n in (4..=26u32).step_by(2) {
        // For small n the lexicode dimension at d = 3 is cheap to compute and
        // stands in for a cached earlier run.
        let cached = if n <= 18 {
            let code =
                greedy_construct(&ConstructionParams::new(n, 3, OrderingSpec::Lexicographic))
                    .unwrap();
            lexicode::analysis::linear_dimension(&code)
        } else {
            None
        };
        let est = estimate(n, cached).unwrap();
        let worst = est
            .worst_case_ops
            .map(|v| v.to_string())
            .unwrap_or_else(|| format!("~{:.3e}", est.worst_case_ops_approx));
        let refined = est
            .refined_ops
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".to_string());
        println!("{n:>3}  {worst:>26}  {refined:>22}");
    }
}
