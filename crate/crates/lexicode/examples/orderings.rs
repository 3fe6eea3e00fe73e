//! The five enumeration orders of F_2^n side by side, including a B-ordering
//! induced by a custom basis.
//!
//! Run with: cargo run --example orderings

use lexicode::{Codeword, OrderingSpec};

fn main() {
    let n = 4;
    let basis = OrderingSpec::b_ordering(
        [0b0011u64, 0b0101, 0b1001, 0b1000]
            .map(Codeword::new)
            .to_vec(),
    )
    .unwrap();

    let specs = [
        OrderingSpec::Lexicographic,
        OrderingSpec::Gray,
        OrderingSpec::GradedLexicographic,
        OrderingSpec::GradedReverseLexicographic,
        basis,
    ];

    for spec in &specs {
        let listing: Vec<String> = spec
            .iterate(n)
            .unwrap()
            .map(|w| w.to_bitstring(n))
            .collect();
        println!("{:>10}: {}", spec.token(), listing.join(" "));
    }

    // Consecutive Gray vectors differ in exactly one coordinate.
    let gray: Vec<Codeword> = OrderingSpec::Gray.iterate(n).unwrap().collect();
    for pair in gray.windows(2) {
        assert_eq!(pair[0].hamming_distance(pair[1]), 1);
    }
    println!("\ngray neighbors all differ in exactly one bit");

    // A B-ordering over the standard basis in ascending value is just the
    // lexicographic order.
    let standard =
        OrderingSpec::b_ordering((0..n).map(|i| Codeword::new(1 << i)).collect()).unwrap();
    for (i, w) in standard.iterate(n).unwrap().enumerate() {
        assert_eq!(w.bits(), i as u64);
    }
    println!("standard-basis b-ordering reproduces lex");
}
