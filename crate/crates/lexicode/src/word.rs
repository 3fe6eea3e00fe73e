//! Fixed-width binary codewords packed into a single machine word.
//!
//! A codeword of length `n <= 64` stores coordinate `i` at bit position
//! `n - 1 - i`, so the vector read as a big-endian binary string equals the
//! integer's binary rendering and lexicographic order on vectors is plain
//! ascending integer order. The length itself is carried by the surrounding
//! context (a [`Code`](crate::Code) or construction parameters), not by the
//! word.

use crate::{Error, Result};

/// One element of F_2^n for some `n <= 64`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword(u64);

/// All-ones mask for the low `n` bits.
pub fn length_mask(n: u32) -> u64 {
    debug_assert!((1..=64).contains(&n));
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Codeword {
    /// The zero vector of any length.
    pub const ZERO: Codeword = Codeword(0);

    pub fn new(bits: u64) -> Codeword {
        Codeword(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// True when every bit at position >= `n` is zero.
    pub fn fits(self, n: u32) -> bool {
        (1..=64).contains(&n) && self.0 & !length_mask(n) == 0
    }

    /// Number of coordinates at which `self` and `other` differ.
    ///
    /// A single XOR plus a population count, so constant time in the code
    /// length. `count_ones` lowers to the hardware popcount where the target
    /// has one and to a portable bit-parallel sequence otherwise.
    #[inline]
    pub fn hamming_distance(self, other: Codeword) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    /// Number of nonzero coordinates; equals the distance to the zero vector.
    #[inline]
    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Inner product over F_2 is zero: popcount of the bitwise AND is even.
    #[inline]
    pub fn is_orthogonal(self, other: Codeword) -> bool {
        (self.0 & other.0).count_ones() % 2 == 0
    }

    /// A word is orthogonal to itself exactly when its weight is even.
    #[inline]
    pub fn is_self_orthogonal(self) -> bool {
        self.weight() % 2 == 0
    }

    /// Canonical text form: a fixed-width big-endian binary string,
    /// e.g. `n = 5`, value 3 renders as `"00011"`.
    pub fn to_bitstring(self, n: u32) -> String {
        debug_assert!(self.fits(n));
        (0..n)
            .rev()
            .map(|pos| if self.0 >> pos & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Parse a binary string; the implied length is `s.len()`.
    pub fn from_bitstring(s: &str) -> Result<Codeword> {
        if s.is_empty() || s.len() > 64 {
            return Err(Error::BadBitstringLength { len: s.len() });
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                other => return Err(Error::BadBitstringChar { ch: other }),
            }
        }
        Ok(Codeword(bits))
    }
}

impl From<u64> for Codeword {
    fn from(bits: u64) -> Codeword {
        Codeword(bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent scalar-product oracle: per-coordinate loop, no popcount.
    fn inner_product_mod2(u: u64, v: u64, n: u32) -> u32 {
        (0..n).map(|i| (u >> i & 1) * (v >> i & 1)).sum::<u64>() as u32 % 2
    }

    fn distance_by_coordinates(u: u64, v: u64, n: u32) -> u32 {
        (0..n).filter(|i| u >> i & 1 != v >> i & 1).count() as u32
    }

    #[test]
    fn hamming_distance_examples() {
        let d = |a: u64, b: u64| Codeword::new(a).hamming_distance(Codeword::new(b));
        assert_eq!(d(0b101, 0b011), 2);
        assert_eq!(d(0b1101, 0b1101), 0);
        assert_eq!(d(0b0000000, 0b1111111), 7);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(Codeword::ZERO.weight(), 0);
        assert_eq!(Codeword::new(0b1011).weight(), 3);
        assert_eq!(Codeword::new(0b1111).weight(), 4);
        assert_eq!(
            Codeword::new(0b1011).weight(),
            Codeword::new(0b1011).hamming_distance(Codeword::ZERO)
        );
    }

    #[test]
    fn orthogonality_examples() {
        let o = |a: u64, b: u64| Codeword::new(a).is_orthogonal(Codeword::new(b));
        assert!(o(0b11, 0b11));
        assert!(!o(0b1, 0b1));
        assert!(!o(0b110, 0b011));
    }

    #[test]
    fn self_orthogonality_examples() {
        assert!(Codeword::ZERO.is_self_orthogonal());
        assert!(Codeword::new(0b11).is_self_orthogonal());
        assert!(!Codeword::new(0b111).is_self_orthogonal());
    }

    #[test]
    fn distance_agrees_with_coordinate_count_n8() {
        for u in 0u64..256 {
            for v in 0u64..256 {
                let got = Codeword::new(u).hamming_distance(Codeword::new(v));
                assert_eq!(got, distance_by_coordinates(u, v, 8));
                assert_eq!(got, Codeword::new(u ^ v).weight());
            }
        }
    }

    #[test]
    fn orthogonality_agrees_with_inner_product_n8() {
        for u in 0u64..256 {
            for v in 0u64..256 {
                assert_eq!(
                    Codeword::new(u).is_orthogonal(Codeword::new(v)),
                    inner_product_mod2(u, v, 8) == 0
                );
            }
        }
    }

    #[test]
    fn metric_axioms_n6() {
        let d = |a: u64, b: u64| Codeword::new(a).hamming_distance(Codeword::new(b));
        for u in 0u64..64 {
            for v in 0u64..64 {
                assert_eq!(d(u, v), d(v, u));
                assert_eq!(d(u, v) == 0, u == v);
                for w in 0u64..64 {
                    assert!(d(u, w) <= d(u, v) + d(v, w));
                }
            }
        }
    }

    #[test]
    fn bitstring_round_trip() {
        let w = Codeword::new(3);
        assert_eq!(w.to_bitstring(5), "00011");
        assert_eq!(Codeword::from_bitstring("00011").unwrap(), w);
        assert_eq!(Codeword::from_bitstring("1").unwrap(), Codeword::new(1));
        assert!(Codeword::from_bitstring("01x1").is_err());
        assert!(Codeword::from_bitstring("").is_err());
    }

    #[test]
    fn fits_respects_length() {
        assert!(Codeword::new(0b111).fits(3));
        assert!(!Codeword::new(0b1000).fits(3));
        assert!(Codeword::new(u64::MAX).fits(64));
    }
}
