//! Building longer codes from shorter ones.
//!
//! The Cartesian product concatenates every pair of factor codewords. For
//! self-orthogonal factors the product is self-orthogonal again (inner
//! products of concatenations add componentwise over F_2), and its minimum
//! distance is the smaller factor distance. Chaining products with the
//! length-d repetition code therefore extends a self-orthogonal distance-d
//! code by d coordinates per step at constant distance, replacing a greedy
//! run over 2^n candidates by one over 2^(base) — the recursion used for
//! power-of-two distances.

use crate::analysis;
use crate::code::Code;
use crate::greedy::{greedy_construct_self_orthogonal, ConstructionParams};
use crate::ordering::OrderingSpec;
use crate::word::{length_mask, Codeword};
use crate::{Error, Result};

/// The code {0^length, 1^length}; its minimum distance is `length`.
pub fn repetition_code(length: u32) -> Result<Code> {
    if !(1..=64).contains(&length) {
        return Err(Error::LengthOutOfRange { n: length });
    }
    Code::new(
        length,
        vec![Codeword::ZERO, Codeword::new(length_mask(length))],
    )
}

/// All concatenations u||v with u from `a` and v from `b`, u-major, so the
/// output order is reproducible. The result has length a.n + b.n and size
/// |a| * |b|; with both factors of size >= 2 its minimum distance is
/// min(d_min(a), d_min(b)).
pub fn cartesian_product(a: &Code, b: &Code) -> Result<Code> {
    let n = a.n() + b.n();
    if n > 64 {
        return Err(Error::CombinedTooLong { total: n });
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyFactor);
    }
    let mut words = Vec::with_capacity(a.len() * b.len());
    for &u in a.words() {
        for &v in b.words() {
            words.push(Codeword::new(u.bits() << b.n() | v.bits()));
        }
    }
    Code::new(n, words)
}

/// Default base-case bound for [`recursive_self_orthogonal`]: lengths up to
/// `2 d` are constructed directly.
pub fn default_recursion_threshold(d: u32) -> u32 {
    2 * d
}

/// Build a self-orthogonal code of length `n` and minimum distance `d` (a
/// power of two >= 2) by recursion: lengths up to the threshold run the
/// greedy construction directly; longer codes are the Cartesian product of
/// the length `n - d` code with the length-d repetition code.
///
/// `base_ordering` drives the greedy base case; a basis-induced ordering must
/// match the base-case length.
pub fn recursive_self_orthogonal(
    n: u32,
    d: u32,
    base_ordering: &OrderingSpec,
) -> Result<Code> {
    recursive_self_orthogonal_with_threshold(n, d, base_ordering, None)
}

/// As [`recursive_self_orthogonal`] with an explicit base-case threshold.
pub fn recursive_self_orthogonal_with_threshold(
    n: u32,
    d: u32,
    base_ordering: &OrderingSpec,
    threshold: Option<u32>,
) -> Result<Code> {
    if d < 2 || !d.is_power_of_two() {
        return Err(Error::DistanceNotPowerOfTwo { d });
    }
    if !(1..=64).contains(&n) {
        return Err(Error::LengthOutOfRange { n });
    }
    if d > n {
        return Err(Error::InvalidParams(format!(
            "distance {d} exceeds length {n}"
        )));
    }
    let threshold = threshold.unwrap_or_else(|| default_recursion_threshold(d));

    // Peel repetition blocks off the tail until the base length is reached,
    // never letting the base drop below d.
    let mut base_n = n;
    let mut blocks = 0u32;
    while base_n > threshold && base_n - d >= d {
        base_n -= d;
        blocks += 1;
    }

    let mut params = ConstructionParams::new(base_n, d, base_ordering.clone());
    params.self_orthogonal = true;
    let mut code = greedy_construct_self_orthogonal(&params)?;
    if blocks > 0 {
        let rep = repetition_code(d)?;
        for _ in 0..blocks {
            code = cartesian_product(&code, &rep)?;
        }
    }
    Ok(code)
}

/// True when every pair of words in both factors contributes an even inner
/// product to the product code; exposed for tests and examples.
pub fn product_is_self_orthogonal(a: &Code, b: &Code) -> bool {
    let product = match cartesian_product(a, b) {
        Ok(c) => c,
        Err(_) => return false,
    };
    analysis::is_self_orthogonal(&product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{is_self_orthogonal, min_distance};

    fn bitstrings(code: &Code) -> Vec<String> {
        code.iter().map(|w| w.to_bitstring(code.n())).collect()
    }

    #[test]
    fn repetition_examples() {
        assert_eq!(bitstrings(&repetition_code(4).unwrap()), ["0000", "1111"]);
        assert_eq!(bitstrings(&repetition_code(1).unwrap()), ["0", "1"]);
        assert_eq!(min_distance(&repetition_code(6).unwrap()).unwrap(), 6);
        assert!(repetition_code(0).is_err());
        assert!(repetition_code(65).is_err());
    }

    #[test]
    fn product_concatenates_u_major() {
        let a = repetition_code(2).unwrap();
        let b = repetition_code(1).unwrap();
        let p = cartesian_product(&a, &b).unwrap();
        assert_eq!(bitstrings(&p), ["000", "001", "110", "111"]);
    }

    #[test]
    fn product_size_is_multiplicative() {
        let a = Code::new(3, [0b000u64, 0b011, 0b101].map(Codeword::new).to_vec()).unwrap();
        let b = Code::new(2, [0b00u64, 0b11].map(Codeword::new).to_vec()).unwrap();
        let p = cartesian_product(&a, &b).unwrap();
        assert_eq!(p.len(), a.len() * b.len());
        assert_eq!(p.n(), 5);
    }

    #[test]
    fn product_rejects_overlong_and_empty() {
        let a = repetition_code(40).unwrap();
        let b = repetition_code(30).unwrap();
        assert!(matches!(
            cartesian_product(&a, &b),
            Err(Error::CombinedTooLong { total: 70 })
        ));
        let empty = Code::new(2, vec![]).unwrap();
        assert!(cartesian_product(&a, &empty).is_err());
    }

    #[test]
    fn recursive_12_4_matches_the_product_construction() {
        let code = recursive_self_orthogonal(12, 4, &OrderingSpec::Lexicographic).unwrap();
        assert_eq!(code.len(), 32);
        assert_eq!(min_distance(&code).unwrap(), 4);
        assert!(is_self_orthogonal(&code));

        // Same thing assembled by hand.
        let mut params = ConstructionParams::new(8, 4, OrderingSpec::Lexicographic);
        params.self_orthogonal = true;
        let left = greedy_construct_self_orthogonal(&params).unwrap();
        let by_hand = cartesian_product(&left, &repetition_code(4).unwrap()).unwrap();
        assert_eq!(code.words(), by_hand.words());
    }

    #[test]
    fn base_case_passthrough() {
        let direct = {
            let mut p = ConstructionParams::new(8, 4, OrderingSpec::Lexicographic);
            p.self_orthogonal = true;
            greedy_construct_self_orthogonal(&p).unwrap()
        };
        let recursive =
            recursive_self_orthogonal_with_threshold(8, 4, &OrderingSpec::Lexicographic, Some(8))
                .unwrap();
        assert_eq!(direct.words(), recursive.words());
    }

    #[test]
    fn recursive_16_4_properties() {
        let code = recursive_self_orthogonal(16, 4, &OrderingSpec::Lexicographic).unwrap();
        assert_eq!(min_distance(&code).unwrap(), 4);
        assert!(is_self_orthogonal(&code));
        for &a in code.words() {
            assert!(a.weight() % 2 == 0);
            for &b in code.words() {
                assert!(a.is_orthogonal(b));
            }
        }
    }

    #[test]
    fn recursive_rejects_bad_distances() {
        assert!(matches!(
            recursive_self_orthogonal(12, 6, &OrderingSpec::Lexicographic),
            Err(Error::DistanceNotPowerOfTwo { d: 6 })
        ));
        assert!(recursive_self_orthogonal(12, 1, &OrderingSpec::Lexicographic).is_err());
        assert!(recursive_self_orthogonal(2, 4, &OrderingSpec::Lexicographic).is_err());
    }

    #[test]
    fn product_distance_law_on_small_linear_codes() {
        let codes: Vec<Code> = vec![
            repetition_code(3).unwrap(),
            Code::new(3, [0b000u64, 0b011, 0b101, 0b110].map(Codeword::new).to_vec()).unwrap(),
            Code::new(4, [0b0000u64, 0b1111, 0b0011, 0b1100].map(Codeword::new).to_vec()).unwrap(),
        ];
        for a in &codes {
            for b in &codes {
                if a.n() + b.n() > 64 {
                    continue;
                }
                let p = cartesian_product(a, b).unwrap();
                let expect = min_distance(a).unwrap().min(min_distance(b).unwrap());
                assert_eq!(min_distance(&p).unwrap(), expect);
            }
        }
    }
}
