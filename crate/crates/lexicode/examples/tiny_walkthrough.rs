//! The greedy construction by hand at n = 3, d = 2: every vector of F_2^3 is
//! checked against the code built so far, in lexicographic order.
//!
//! Run with: cargo run --example tiny_walkthrough

use lexicode::greedy::check_candidate;
use lexicode::{greedy_construct, Code, ConstructionParams, OrderingSpec};

fn main() {
    let params = ConstructionParams::new(3, 2, OrderingSpec::Lexicographic);

    let mut accepted = Vec::new();
    for i in 0..8u64 {
        let v = params.ordering.vector_at(3, i).unwrap();
        let code = Code::new(3, accepted.clone()).unwrap();
        let outcome = check_candidate(v, &code, &params);
        println!(
            "step {}: candidate {} vs {{{}}} -> {}",
            i + 1,
            v.to_bitstring(3),
            code.iter()
                .map(|w| w.to_bitstring(3))
                .collect::<Vec<_>>()
                .join(", "),
            if outcome.accepted { "accept" } else { "reject" },
        );
        if outcome.accepted {
            accepted.push(v);
        }
    }

    let code = greedy_construct(&params).unwrap();
    assert_eq!(code.words(), &accepted[..]);
    println!(
        "\nfinal code: {{{}}}",
        code.iter()
            .map(|w| w.to_bitstring(3))
            .collect::<Vec<_>>()
            .join(", ")
    );
}
