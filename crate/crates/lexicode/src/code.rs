//! An ordered collection of codewords of a common length.

use crate::greedy::ConstructionParams;
use crate::word::Codeword;
use crate::{Error, Result};
use std::collections::HashSet;

/// A binary code: distinct codewords of length `n`, in construction order.
///
/// For greedily constructed codes the order is acceptance order (zero vector
/// first when present) and `params` records how the code was produced;
/// hand-built and loaded codes carry no params.
#[derive(Clone, Debug, PartialEq)]
pub struct Code {
    n: u32,
    words: Vec<Codeword>,
    params: Option<ConstructionParams>,
}

impl Code {
    /// Build a code from explicit words, validating the invariants:
    /// length in 1..=64, every word within `n` bits, all words distinct.
    pub fn new(n: u32, words: Vec<Codeword>) -> Result<Code> {
        if !(1..=64).contains(&n) {
            return Err(Error::LengthOutOfRange { n });
        }
        let mut seen = HashSet::with_capacity(words.len());
        for &w in &words {
            if !w.fits(n) {
                return Err(Error::WordTooWide { bits: w.bits(), n });
            }
            if !seen.insert(w) {
                return Err(Error::DuplicateWord {
                    word: w.to_bitstring(n),
                });
            }
        }
        Ok(Code {
            n,
            words,
            params: None,
        })
    }

    /// Internal constructor for the greedy engine, which guarantees the
    /// invariants by construction.
    pub(crate) fn from_construction(
        n: u32,
        words: Vec<Codeword>,
        params: ConstructionParams,
    ) -> Code {
        Code {
            n,
            words,
            params: Some(params),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn params(&self) -> Option<&ConstructionParams> {
        self.params.as_ref()
    }

    pub fn contains(&self, w: Codeword) -> bool {
        self.words.contains(&w)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Codeword> {
        self.words.iter()
    }

    /// The words as a set, for order-insensitive comparison.
    pub fn word_set(&self) -> HashSet<Codeword> {
        self.words.iter().copied().collect()
    }
}

impl<'a> IntoIterator for &'a Code {
    type Item = &'a Codeword;
    type IntoIter = std::slice::Iter<'a, Codeword>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}
