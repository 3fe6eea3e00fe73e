//! Greedy construction and analysis of binary error-correcting codes.
//!
//! The construction scans all of F_2^n in a configurable order and keeps
//! every vector that satisfies the active constraints (minimum Hamming
//! distance, optionally constant weight and/or self-orthogonality) against
//! all previously kept vectors. Scanned lexicographically this yields the
//! classical lexicodes — among them the \[7,4,3\] and \[15,11,3\] Hamming
//! codes and the \[23,12,7\] Golay code — and with the self-orthogonality
//! constraint the self-dual \[22,11,6\] and \[24,12,8\] Golay pair.
//!
//! The crate is organized around the construction pipeline:
//!
//! - [`word`]: packed codewords and the XOR/AND + popcount primitives.
//! - [`ordering`]: lexicographic, Gray, graded and basis-induced
//!   enumerations of F_2^n.
//! - [`greedy`]: the construction engine with its deterministic
//!   data-parallel candidate check, plus a plain serial reference.
//! - [`analysis`]: minimum distance, linearity, weight distribution,
//!   self-duality and perfectness reporting.
//! - [`compose`]: repetition codes, Cartesian products and the recursive
//!   construction of long self-orthogonal codes.
//! - [`estimate`]: worst-case operation-count estimates.
//! - [`bench`](mod@bench): differential serial-vs-parallel benchmark harness.
//! - [`codefile`]: the canonical text format for codes and basis files.
//!
//! Start with the `examples/` directory for a runnable tour of each
//! capability, or with the `lexicode` binary for the command-line interface.

pub mod analysis;
pub mod bench;
pub mod cli;
pub mod code;
pub mod codefile;
pub mod compose;
pub mod estimate;
pub mod gf2;
pub mod greedy;
pub mod ordering;
pub mod word;

pub use analysis::CodeReport;
pub use code::Code;
pub use greedy::{
    check_candidate, greedy_construct, greedy_construct_self_orthogonal,
    serial_reference_construct, CheckOutcome, ConstructionParams,
};
pub use ordering::OrderingSpec;
pub use word::Codeword;

use thiserror::Error as ThisError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("code length must be in 1..=64, got {n}")]
    LengthOutOfRange { n: u32 },

    #[error("word {bits:#b} does not fit in {n} bits")]
    WordTooWide { bits: u64, n: u32 },

    #[error("duplicate codeword {word}")]
    DuplicateWord { word: String },

    #[error("bitstring length must be in 1..=64, got {len}")]
    BadBitstringLength { len: usize },

    #[error("invalid character {ch:?} in bitstring")]
    BadBitstringChar { ch: char },

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("basis must have exactly {expected} vectors, got {actual}")]
    BasisLengthMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range for length {n}")]
    IndexOutOfRange { index: u64, n: u32 },

    #[error("invalid construction parameters: {0}")]
    InvalidParams(String),

    #[error("{0}")]
    Usage(String),

    #[error("failed to build worker pool: {0}")]
    ThreadPool(String),

    #[error("minimum distance is undefined for codes with fewer than 2 words")]
    DistanceUndefined,

    #[error("perfectness check requires an odd distance, got {d}")]
    EvenPerfectDistance { d: u32 },

    #[error("combined code length {total} exceeds 64")]
    CombinedTooLong { total: u32 },

    #[error("recursive construction requires a power-of-two distance >= 2, got {d}")]
    DistanceNotPowerOfTwo { d: u32 },

    #[error("code factors must be nonempty")]
    EmptyFactor,

    #[error("{path}:{line}: {reason}")]
    CodeFileFormat {
        path: String,
        line: usize,
        reason: String,
    },

    #[error("serial and parallel outputs differ for n={n}, d={d}, workers={workers}")]
    BenchMismatch { n: u32, d: u32, workers: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
