//! Long self-orthogonal codes without long greedy scans: the Cartesian
//! product with the length-d repetition code extends a distance-d
//! self-orthogonal code by d coordinates while keeping both properties.
//!
//! Run with: cargo run --example compose_codes

use lexicode::analysis::{is_self_orthogonal, min_distance};
use lexicode::compose::{cartesian_product, recursive_self_orthogonal, repetition_code};
use lexicode::OrderingSpec;

fn main() {
    let rep = repetition_code(4).unwrap();
    println!(
        "repetition code of length 4: {}",
        rep.iter()
            .map(|w| w.to_bitstring(4))
            .collect::<Vec<_>>()
            .join(" ")
    );

    // Code[12,4] = greedy self-orthogonal Code[8,4] x repetition Code[4,4].
    let code12 = recursive_self_orthogonal(12, 4, &OrderingSpec::Lexicographic).unwrap();
    println!(
        "recursive n=12 d=4: size={} d_min={} self_orthogonal={}",
        code12.len(),
        min_distance(&code12).unwrap(),
        is_self_orthogonal(&code12)
    );

    // The recursion scales linearly in n where the direct greedy scan would
    // double its work per added coordinate.
    for n in [16u32, 24, 32, 48] {
        let code = recursive_self_orthogonal(n, 4, &OrderingSpec::Lexicographic).unwrap();
        println!(
            "recursive n={n:2} d=4: size={:5} d_min={} self_orthogonal={}",
            code.len(),
            min_distance(&code).unwrap(),
            is_self_orthogonal(&code)
        );
    }

    // Product distance law: min(d_a, d_b).
    let a = repetition_code(3).unwrap();
    let b = repetition_code(5).unwrap();
    let p = cartesian_product(&a, &b).unwrap();
    println!(
        "rep(3) x rep(5): size={} d_min={} (= min(3, 5))",
        p.len(),
        min_distance(&p).unwrap()
    );
}
