//! Greedy code construction: scan an ordering of F_2^n and accept every
//! vector whose constraints hold against all previously accepted codewords.
//!
//! The candidate check against the growing code is the hot loop. It runs a
//! two-phase schedule: the initial `selective_fraction` of the code is
//! checked first, on the coordinating thread with immediate early exit —
//! most candidates die within a few comparisons, and fanning that phase out
//! would cost more in dispatch than it saves. Only candidates that survive
//! it are checked against the remainder; there the coordinator scans one
//! task-quantum (`chunk_min` words) itself and splits the rest into
//! contiguous chunks of at least `chunk_min` handed to a worker pool.
//! Workers poll a shared violation flag and abandon their chunk once some
//! worker has found a violation. The flag only ever moves accept -> reject,
//! so the accept decision (a conjunction over all codewords) is identical
//! for every worker count, chunk size and selective fraction; only the
//! instrumentation counters vary.

use crate::code::Code;
use crate::ordering::OrderingSpec;
use crate::word::Codeword;
use crate::{Error, Result};
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};

/// Default fraction of the current code checked in the first phase.
pub const DEFAULT_SELECTIVE_FRACTION: f64 = 0.1;

/// Default minimum number of codewords per parallel task. Handing a task to
/// a worker costs a fork-join round trip of tens of microseconds, which a
/// task must amortize; at roughly a nanosecond per XOR+popcount comparison
/// that puts break-even in the tens of thousands of codewords. Lower values
/// favor parallelism on machines with cheaper dispatch.
pub const DEFAULT_CHUNK_MIN: usize = 32768;

/// How many comparisons a worker performs between polls of the shared
/// violation flag.
const POLL_INTERVAL: usize = 64;

/// Everything that determines a greedy construction.
///
/// Note on odd `d`: with `self_orthogonal` or `constant_weight` set, all
/// realized pairwise distances are even, so an odd `d` behaves like `d + 1`.
/// The engine honors the given `d` literally rather than adjusting it.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionParams {
    /// Code length, 1..=64.
    pub n: u32,
    /// Minimum Hamming distance, 1..=n.
    pub d: u32,
    /// When set, only vectors of exactly this weight are considered.
    pub constant_weight: Option<u32>,
    /// Require every pair of codewords (each word with itself included) to
    /// have even-parity AND.
    pub self_orthogonal: bool,
    /// Enumeration order of F_2^n.
    pub ordering: OrderingSpec,
    /// First-phase fraction of the current code, in (0, 1].
    pub selective_fraction: f64,
    /// Worker count; 0 selects the machine's available parallelism.
    pub parallelism: usize,
    /// Minimum codewords per parallel task.
    pub chunk_min: usize,
}

impl ConstructionParams {
    pub fn new(n: u32, d: u32, ordering: OrderingSpec) -> ConstructionParams {
        ConstructionParams {
            n,
            d,
            constant_weight: None,
            self_orthogonal: false,
            ordering,
            selective_fraction: DEFAULT_SELECTIVE_FRACTION,
            parallelism: 0,
            chunk_min: DEFAULT_CHUNK_MIN,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.ordering.validate_for(self.n)?;
        if self.d < 1 || self.d > self.n {
            return Err(Error::InvalidParams(format!(
                "distance must be in 1..={}, got {}",
                self.n, self.d
            )));
        }
        if let Some(w) = self.constant_weight {
            if w > self.n {
                return Err(Error::InvalidParams(format!(
                    "constant weight must be in 0..={}, got {w}",
                    self.n
                )));
            }
        }
        if !(self.selective_fraction > 0.0 && self.selective_fraction <= 1.0) {
            return Err(Error::InvalidParams(format!(
                "selective fraction must be in (0, 1], got {}",
                self.selective_fraction
            )));
        }
        if self.chunk_min == 0 {
            return Err(Error::InvalidParams(
                "chunk_min must be at least 1".to_string(),
            ));
        }
        Ok(())
    }

    /// Worker count after resolving 0 = auto-detect.
    pub fn effective_parallelism(&self) -> usize {
        if self.parallelism == 0 {
            std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
        } else {
            self.parallelism
        }
    }
}

/// Result of checking one candidate, with the comparison count the schedule
/// actually performed (for the benchmark harness).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub accepted: bool,
    pub violations_scanned: u64,
}

/// Aggregate instrumentation for one construction run.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstructionStats {
    /// Total codeword comparisons performed across all candidate checks.
    pub comparisons: u64,
}

#[derive(Copy, Clone)]
struct Constraints {
    d: u32,
    self_orthogonal: bool,
}

#[inline]
fn violates(v: Codeword, c: Codeword, k: Constraints) -> bool {
    v.hamming_distance(c) < k.d || (k.self_orthogonal && !v.is_orthogonal(c))
}

/// Check one candidate against a code.
///
/// `accepted` is true iff the candidate keeps distance >= `d` to every
/// codeword, and, when the corresponding flags are set, has the constant
/// weight and is orthogonal to itself and every codeword. On an empty code
/// the distance and orthogonality conditions hold vacuously.
pub fn check_candidate(v: Codeword, code: &Code, params: &ConstructionParams) -> CheckOutcome {
    let scheduler = Scheduler::for_params(params).expect("pool construction");
    check_words(v, code.words(), params, &scheduler)
}

/// Resolved worker count and pool, fixed once per construction; resolving
/// auto-parallelism is a syscall and must stay out of the per-candidate path.
///
/// `workers` is the requested degree and bounds the chunk count; the pool
/// itself never exceeds the hardware thread count, since oversubscribing a
/// compute-bound scan only adds scheduling latency.
struct Scheduler {
    workers: usize,
    pool: Option<rayon::ThreadPool>,
}

impl Scheduler {
    fn for_params(params: &ConstructionParams) -> Result<Scheduler> {
        let workers = params.effective_parallelism();
        let hardware = std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1);
        let pool = if workers <= 1 {
            None
        } else {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(workers.min(hardware))
                    .build()
                    .map_err(|e| Error::ThreadPool(e.to_string()))?,
            )
        };
        Ok(Scheduler { workers, pool })
    }
}

fn check_words(
    v: Codeword,
    words: &[Codeword],
    params: &ConstructionParams,
    scheduler: &Scheduler,
) -> CheckOutcome {
    let reject = |scanned| CheckOutcome {
        accepted: false,
        violations_scanned: scanned,
    };
    if let Some(w) = params.constant_weight {
        if v.weight() != w {
            return reject(0);
        }
    }
    if params.self_orthogonal && !v.is_self_orthogonal() {
        return reject(0);
    }
    let k = Constraints {
        d: params.d,
        self_orthogonal: params.self_orthogonal,
    };

    let total = words.len();
    let prefix = ((params.selective_fraction * total as f64).ceil() as usize).min(total);
    if prefix >= total || total < params.chunk_min {
        // Degenerate single-phase schedule for tiny codes or fraction 1.
        let (violation, scanned) = scan_bulk(v, words, k, params.chunk_min, scheduler);
        return CheckOutcome {
            accepted: !violation,
            violations_scanned: scanned,
        };
    }

    // Selective phase, serial: its job is to reject cheaply.
    let (violation, scanned_first) = scan_serial(v, &words[..prefix], k);
    if violation {
        return reject(scanned_first);
    }
    let (violation, scanned_rest) = scan_bulk(v, &words[prefix..], k, params.chunk_min, scheduler);
    CheckOutcome {
        accepted: !violation,
        violations_scanned: scanned_first + scanned_rest,
    }
}

/// Scan a phase: the coordinator runs one task-quantum serially, then the
/// tail is distributed across workers in chunks of at least `chunk_min`.
/// The serial head keeps dispatch off candidates that a short scan rejects.
/// Returns (violation found, comparisons made).
fn scan_bulk(
    v: Codeword,
    words: &[Codeword],
    k: Constraints,
    chunk_min: usize,
    scheduler: &Scheduler,
) -> (bool, u64) {
    if words.is_empty() {
        return (false, 0);
    }
    let head = chunk_min.min(words.len());
    let chunks = ((words.len() - head) / chunk_min).clamp(1, scheduler.workers);
    let pool = match (&scheduler.pool, chunks) {
        (Some(pool), c) if c > 1 => pool,
        _ => return scan_serial(v, words, k),
    };
    let (violation, head_scanned) = scan_serial(v, &words[..head], k);
    if violation {
        return (true, head_scanned);
    }
    let (violation, tail_scanned) = scan_parallel(v, &words[head..], k, pool, chunks);
    (violation, head_scanned + tail_scanned)
}

fn scan_serial(v: Codeword, words: &[Codeword], k: Constraints) -> (bool, u64) {
    let mut scanned = 0;
    for &c in words {
        scanned += 1;
        if violates(v, c, k) {
            return (true, scanned);
        }
    }
    (false, scanned)
}

fn scan_parallel(
    v: Codeword,
    words: &[Codeword],
    k: Constraints,
    pool: &rayon::ThreadPool,
    chunks: usize,
) -> (bool, u64) {
    let found = AtomicBool::new(false);
    let chunk_len = words.len().div_ceil(chunks);
    let scanned = pool.install(|| {
        words
            .par_chunks(chunk_len)
            .map(|chunk| {
                let mut scanned = 0u64;
                for (i, &c) in chunk.iter().enumerate() {
                    if i % POLL_INTERVAL == 0 && found.load(AtomicOrdering::Relaxed) {
                        break;
                    }
                    scanned += 1;
                    if violates(v, c, k) {
                        found.store(true, AtomicOrdering::Relaxed);
                        break;
                    }
                }
                scanned
            })
            .sum::<u64>()
    });
    (found.load(AtomicOrdering::Relaxed), scanned)
}

/// Run the greedy construction described by `params`.
///
/// The output sequence depends only on `n`, `d`, the ordering and the
/// constraint flags, never on `parallelism`, `chunk_min` or
/// `selective_fraction`.
pub fn greedy_construct(params: &ConstructionParams) -> Result<Code> {
    greedy_construct_with_stats(params).map(|(code, _)| code)
}

/// As [`greedy_construct`], also returning the comparison count.
pub fn greedy_construct_with_stats(
    params: &ConstructionParams,
) -> Result<(Code, ConstructionStats)> {
    params.validate()?;
    let scheduler = Scheduler::for_params(params)?;
    let scan = || -> Result<(Vec<Codeword>, ConstructionStats)> {
        let mut words: Vec<Codeword> = Vec::new();
        let mut stats = ConstructionStats::default();
        for v in params.ordering.iterate(params.n)? {
            if let Some(w) = params.constant_weight {
                if v.weight() != w {
                    continue;
                }
            }
            let outcome = check_words(v, &words, params, &scheduler);
            stats.comparisons += outcome.violations_scanned;
            if outcome.accepted {
                words.push(v);
            }
        }
        Ok((words, stats))
    };
    // Run the coordinator on a pool thread: per-candidate fan-out then joins
    // against warm workers instead of paying a cross-thread wake each time.
    let (words, stats) = match &scheduler.pool {
        Some(pool) => pool.install(scan)?,
        None => scan()?,
    };
    Ok((
        Code::from_construction(params.n, words, params.clone()),
        stats,
    ))
}

/// Greedy construction with the self-orthogonality constraint; requires the
/// flag to be set so the parameters say what the output satisfies.
pub fn greedy_construct_self_orthogonal(params: &ConstructionParams) -> Result<Code> {
    if !params.self_orthogonal {
        return Err(Error::InvalidParams(
            "self_orthogonal flag must be set".to_string(),
        ));
    }
    greedy_construct(params)
}

/// Single-threaded reference construction: a plain nested loop that compares
/// every candidate against every codeword, with no early exit and no
/// two-phase schedule. Retained as the oracle for differential testing and
/// as the baseline for the benchmark harness.
pub fn serial_reference_construct(params: &ConstructionParams) -> Result<Code> {
    serial_reference_construct_with_stats(params).map(|(code, _)| code)
}

/// As [`serial_reference_construct`], also returning the comparison count.
pub fn serial_reference_construct_with_stats(
    params: &ConstructionParams,
) -> Result<(Code, ConstructionStats)> {
    params.validate()?;
    let k = Constraints {
        d: params.d,
        self_orthogonal: params.self_orthogonal,
    };
    let mut words: Vec<Codeword> = Vec::new();
    let mut stats = ConstructionStats::default();
    for v in params.ordering.iterate(params.n)? {
        if let Some(w) = params.constant_weight {
            if v.weight() != w {
                continue;
            }
        }
        let mut accepted = !(params.self_orthogonal && !v.is_self_orthogonal());
        for &c in &words {
            stats.comparisons += 1;
            if violates(v, c, k) {
                accepted = false;
            }
        }
        if accepted {
            words.push(v);
        }
    }
    Ok((
        Code::from_construction(params.n, words, params.clone()),
        stats,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex_params(n: u32, d: u32) -> ConstructionParams {
        ConstructionParams::new(n, d, OrderingSpec::Lexicographic)
    }

    fn bitstrings(code: &Code) -> Vec<String> {
        code.iter().map(|w| w.to_bitstring(code.n())).collect()
    }

    #[test]
    fn check_rejects_close_candidate() {
        let params = lex_params(3, 2);
        let code = Code::new(3, vec![Codeword::ZERO]).unwrap();
        let out = check_candidate(Codeword::new(0b001), &code, &params);
        assert!(!out.accepted);
        assert_eq!(out.violations_scanned, 1);
    }

    #[test]
    fn check_accepts_distant_candidate() {
        let params = lex_params(3, 2);
        let code = Code::new(3, vec![Codeword::ZERO]).unwrap();
        let out = check_candidate(Codeword::new(0b011), &code, &params);
        assert!(out.accepted);
        assert_eq!(out.violations_scanned, 1);
    }

    #[test]
    fn check_rejects_against_full_code() {
        let params = lex_params(3, 2);
        let code = Code::new(3, vec![0b000, 0b011, 0b101, 0b110].into_iter().map(Codeword::new).collect()).unwrap();
        let out = check_candidate(Codeword::new(0b111), &code, &params);
        assert!(!out.accepted);
        assert!(out.violations_scanned <= code.len() as u64);
    }

    #[test]
    fn check_is_vacuous_on_empty_code() {
        let params = lex_params(5, 5);
        let code = Code::new(5, vec![]).unwrap();
        for v in 0..32 {
            assert!(check_candidate(Codeword::new(v), &code, &params).accepted);
        }
    }

    #[test]
    fn lexicode_3_2_exact_sequence() {
        let code = greedy_construct(&lex_params(3, 2)).unwrap();
        assert_eq!(bitstrings(&code), ["000", "011", "101", "110"]);
    }

    #[test]
    fn distance_one_accepts_everything() {
        let code = greedy_construct(&lex_params(3, 1)).unwrap();
        assert_eq!(code.len(), 8);
        assert_eq!(code.words()[5], Codeword::new(5));
    }

    #[test]
    fn full_flip_only_survivor() {
        let code = greedy_construct(&lex_params(4, 4)).unwrap();
        assert_eq!(bitstrings(&code), ["0000", "1111"]);
    }

    #[test]
    fn n1_d1_is_whole_space() {
        let code = greedy_construct(&lex_params(1, 1)).unwrap();
        assert_eq!(bitstrings(&code), ["0", "1"]);
    }

    #[test]
    fn hamming_lexicode_7_3() {
        let code = greedy_construct(&lex_params(7, 3)).unwrap();
        assert_eq!(code.len(), 16);
        for (i, &a) in code.words().iter().enumerate() {
            for &b in &code.words()[i + 1..] {
                assert!(a.hamming_distance(b) >= 3);
            }
        }
    }

    #[test]
    fn self_orthogonal_2_2() {
        let mut params = lex_params(2, 2);
        params.self_orthogonal = true;
        let code = greedy_construct_self_orthogonal(&params).unwrap();
        assert_eq!(bitstrings(&code), ["00", "11"]);
    }

    #[test]
    fn self_orthogonal_8_4_frozen() {
        let mut params = lex_params(8, 4);
        params.self_orthogonal = true;
        let code = greedy_construct_self_orthogonal(&params).unwrap();
        // Verified independently against a per-bit brute-force greedy oracle.
        assert_eq!(
            bitstrings(&code),
            [
                "00000000", "00001111", "00110011", "00111100", "01010101", "01011010",
                "01100110", "01101001", "10010110", "10011001", "10100101", "10101010",
                "11000011", "11001100", "11110000", "11111111",
            ]
        );
        for &a in code.words() {
            assert!(a.is_self_orthogonal());
            for &b in code.words() {
                assert!(a.is_orthogonal(b));
            }
        }
    }

    #[test]
    fn self_orthogonal_wrapper_requires_flag() {
        assert!(greedy_construct_self_orthogonal(&lex_params(4, 2)).is_err());
    }

    #[test]
    fn constant_weight_4_2_2() {
        let mut params = lex_params(4, 2);
        params.constant_weight = Some(2);
        let code = greedy_construct(&params).unwrap();
        assert_eq!(
            bitstrings(&code),
            ["0011", "0101", "0110", "1001", "1010", "1100"]
        );
        assert!(!code.contains(Codeword::ZERO));
    }

    #[test]
    fn schedule_never_changes_the_output() {
        for d in [2, 3] {
            let reference = greedy_construct(&lex_params(9, d)).unwrap();
            for parallelism in [0, 1, 2, 8] {
                for fraction in [0.01, 0.1, 1.0] {
                    for chunk_min in [1, 7, 1024] {
                        let mut params = lex_params(9, d);
                        params.parallelism = parallelism;
                        params.selective_fraction = fraction;
                        params.chunk_min = chunk_min;
                        let code = greedy_construct(&params).unwrap();
                        assert_eq!(code.words(), reference.words());
                    }
                }
            }
        }
    }

    #[test]
    fn serial_reference_agrees_on_small_sweep() {
        for n in 1..=9 {
            for d in 1..=n {
                for self_orthogonal in [false, true] {
                    let mut params = lex_params(n, d);
                    params.self_orthogonal = self_orthogonal;
                    params.chunk_min = 4; // force chunked scans even at this size
                    params.parallelism = 2;
                    let fast = greedy_construct(&params).unwrap();
                    let slow = serial_reference_construct(&params).unwrap();
                    assert_eq!(fast.words(), slow.words(), "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn greedy_output_is_maximal() {
        // Every vector left out (and passing the weight filter) must violate
        // some constraint against the final code.
        let mut cases: Vec<ConstructionParams> = (4..=12).map(|n| lex_params(n, 3)).collect();
        let mut so = lex_params(10, 4);
        so.self_orthogonal = true;
        cases.push(so);
        let mut cw = lex_params(10, 4);
        cw.constant_weight = Some(5);
        cases.push(cw);

        for params in cases {
            let code = greedy_construct(&params).unwrap();
            for bits in 0u64..1 << params.n {
                let v = Codeword::new(bits);
                if code.contains(v) {
                    continue;
                }
                if let Some(w) = params.constant_weight {
                    if v.weight() != w {
                        continue;
                    }
                }
                let violates_something = (params.self_orthogonal && !v.is_self_orthogonal())
                    || code.iter().any(|&c| {
                        v.hamming_distance(c) < params.d
                            || (params.self_orthogonal && !v.is_orthogonal(c))
                    });
                assert!(
                    violates_something,
                    "n={} d={}: {} could still be added",
                    params.n,
                    params.d,
                    v.to_bitstring(params.n)
                );
            }
        }
    }

    #[test]
    fn comparisons_never_exceed_code_size() {
        let params = lex_params(8, 3);
        let mut words: Vec<Codeword> = Vec::new();
        for v in params.ordering.iterate(8).unwrap() {
            let code = Code::new(8, words.clone()).unwrap();
            let out = check_candidate(v, &code, &params);
            assert!(out.violations_scanned <= words.len() as u64);
            if out.accepted {
                words.push(v);
            }
        }
    }

    #[test]
    fn invalid_params_are_rejected() {
        assert!(lex_params(3, 0).validate().is_err());
        assert!(lex_params(3, 4).validate().is_err());
        assert!(lex_params(65, 3).validate().is_err());
        let mut p = lex_params(4, 2);
        p.selective_fraction = 0.0;
        assert!(p.validate().is_err());
        p.selective_fraction = 1.5;
        assert!(p.validate().is_err());
        p.selective_fraction = 0.5;
        p.chunk_min = 0;
        assert!(p.validate().is_err());
        p.chunk_min = 1;
        p.constant_weight = Some(5);
        assert!(p.validate().is_err());
    }
}
