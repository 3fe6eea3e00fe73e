//! Property verification and summary reports for constructed or loaded codes.

use crate::code::Code;
use crate::gf2::Echelon;
use crate::greedy::ConstructionParams;
use crate::ordering::{binomial, OrderingSpec};
use crate::word::Codeword;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Pair scans go parallel above this many codewords.
const PAR_THRESHOLD: usize = 512;

fn echelon_of(code: &Code) -> Echelon {
    let mut e = Echelon::new();
    for &w in code.words() {
        e.insert(w.bits());
    }
    e
}

/// Dimension of the code when it is linear (a subspace of F_2^n), else None.
///
/// Linearity is decided by Gaussian elimination: compute a basis, require
/// |C| = 2^rank, and require every word to reduce to zero against the basis.
pub fn linear_dimension(code: &Code) -> Option<u32> {
    if code.is_empty() {
        return None;
    }
    let e = echelon_of(code);
    let k = e.rank() as u32;
    if k > 63 || code.len() as u128 != 1u128 << k {
        return None;
    }
    if !code.iter().all(|w| e.contains(w.bits())) {
        return None;
    }
    Some(k)
}

/// True iff the code contains the zero vector and is closed under XOR.
pub fn is_linear(code: &Code) -> bool {
    linear_dimension(code).is_some()
}

/// Smallest Hamming distance over all pairs of distinct codewords.
///
/// For linear codes this equals the minimum nonzero weight, which is used as
/// a shortcut once linearity has been verified; otherwise the full pairwise
/// scan runs, in parallel for large codes.
pub fn min_distance(code: &Code) -> Result<u32> {
    if code.len() < 2 {
        return Err(Error::DistanceUndefined);
    }
    if is_linear(code) {
        Ok(min_nonzero_weight(code).expect("linear code with >= 2 words has a nonzero word"))
    } else {
        Ok(min_distance_pairwise(code.words()))
    }
}

fn min_nonzero_weight(code: &Code) -> Option<u32> {
    code.iter()
        .filter(|w| w.bits() != 0)
        .map(|w| w.weight())
        .min()
}

fn min_distance_pairwise(words: &[Codeword]) -> u32 {
    let row_min = |(i, &a): (usize, &Codeword)| {
        words[i + 1..]
            .iter()
            .map(|&b| a.hamming_distance(b))
            .min()
            .unwrap_or(u32::MAX)
    };
    if words.len() > PAR_THRESHOLD {
        words
            .par_iter()
            .enumerate()
            .map(row_min)
            .min()
            .unwrap_or(u32::MAX)
    } else {
        words.iter().enumerate().map(row_min).min().unwrap_or(u32::MAX)
    }
}

/// Count of codewords per Hamming weight.
pub fn weight_distribution(code: &Code) -> BTreeMap<u32, u64> {
    let mut dist = BTreeMap::new();
    for w in code.iter() {
        *dist.entry(w.weight()).or_insert(0) += 1;
    }
    dist
}

/// True iff every pair of codewords, each word paired with itself included,
/// has inner product zero over F_2.
///
/// For linear codes it suffices to check the basis pairs, since the inner
/// product is bilinear.
pub fn is_self_orthogonal(code: &Code) -> bool {
    if is_linear(code) {
        let e = echelon_of(code);
        let rows = e.rows();
        rows.iter().enumerate().all(|(i, &a)| {
            rows[i..]
                .iter()
                .all(|&b| (a & b).count_ones() % 2 == 0)
        })
    } else {
        all_pairs_orthogonal(code.words())
    }
}

fn all_pairs_orthogonal(words: &[Codeword]) -> bool {
    let row_ok = |(i, &a): (usize, &Codeword)| words[i..].iter().all(|&b| a.is_orthogonal(b));
    if words.len() > PAR_THRESHOLD {
        words.par_iter().enumerate().all(row_ok)
    } else {
        words.iter().enumerate().all(row_ok)
    }
}

/// True iff the code is linear, self-orthogonal and of dimension exactly n/2
/// (which requires n even).
pub fn is_self_dual(code: &Code) -> bool {
    let n = code.n();
    n % 2 == 0
        && linear_dimension(code) == Some(n / 2)
        && is_self_orthogonal(code)
}

/// Sphere-packing equality: |C| * sum_{i=0}^{t} C(n, i) = 2^n with
/// t = (d-1)/2. Exact integer arithmetic throughout; `d` must be odd.
pub fn is_perfect(code: &Code, d: u32) -> Result<bool> {
    if d == 0 || d % 2 == 0 {
        return Err(Error::EvenPerfectDistance { d });
    }
    let n = code.n();
    let t = (d - 1) / 2;
    let mut sphere: u128 = 0;
    for i in 0..=t.min(n) {
        sphere += binomial(n, i) as u128;
    }
    let total = match (code.len() as u128).checked_mul(sphere) {
        Some(v) => v,
        None => return Ok(false),
    };
    Ok(total == 1u128 << n)
}

/// Analysis summary of one code.
#[derive(Clone, Debug)]
pub struct CodeReport {
    pub n: u32,
    pub size: usize,
    /// None when the code has fewer than 2 words; rendered as "undefined".
    pub min_distance: Option<u32>,
    pub is_linear: bool,
    pub dimension: Option<u32>,
    /// (weight, count) pairs sorted by weight.
    pub weight_distribution: Vec<(u32, u64)>,
    pub is_self_orthogonal: bool,
    pub is_self_dual: bool,
    pub is_perfect: bool,
    pub params: Option<ConstructionParams>,
    /// Construction wall time as measured by the caller, when known.
    pub construction_seconds: Option<f64>,
}

impl CodeReport {
    pub fn analyze(code: &Code) -> CodeReport {
        Self::analyze_timed(code, None)
    }

    pub fn analyze_timed(code: &Code, construction_seconds: Option<f64>) -> CodeReport {
        let n = code.n();
        let dimension = linear_dimension(code);
        let min_distance = if code.len() < 2 {
            None
        } else if dimension.is_some() {
            min_nonzero_weight(code)
        } else {
            Some(min_distance_pairwise(code.words()))
        };
        let self_orthogonal = is_self_orthogonal(code);
        let self_dual = n % 2 == 0 && dimension == Some(n / 2) && self_orthogonal;
        let perfect = match min_distance {
            Some(d) if d % 2 == 1 => is_perfect(code, d).unwrap_or(false),
            _ => false,
        };
        CodeReport {
            n,
            size: code.len(),
            min_distance,
            is_linear: dimension.is_some(),
            dimension,
            weight_distribution: weight_distribution(code).into_iter().collect(),
            is_self_orthogonal: self_orthogonal,
            is_self_dual: self_dual,
            is_perfect: perfect,
            params: code.params().cloned(),
            construction_seconds,
        }
    }

    /// JSON rendering: a flat object plus a `params` sub-object and an
    /// ISO-8601 timestamp. Key order follows field declaration order so the
    /// output is stable for golden-file comparison (timestamp aside).
    pub fn to_json(&self) -> String {
        let json = JsonReport {
            n: self.n,
            size: self.size as u64,
            min_distance: self.min_distance,
            is_linear: self.is_linear,
            dimension: self.dimension,
            weight_distribution: self
                .weight_distribution
                .iter()
                .map(|&(w, c)| [w as u64, c])
                .collect(),
            is_self_orthogonal: self.is_self_orthogonal,
            is_self_dual: self.is_self_dual,
            is_perfect: self.is_perfect,
            params: self.params.as_ref().map(JsonParams::from),
            construction_seconds: self.construction_seconds,
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        };
        serde_json::to_string_pretty(&json).expect("report serialization cannot fail")
    }

    /// Human-readable table.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "length n         : {}", self.n);
        let _ = writeln!(out, "size |C|         : {}", self.size);
        match self.min_distance {
            Some(d) => {
                let _ = writeln!(out, "min distance     : {d}");
            }
            None => {
                let _ = writeln!(out, "min distance     : undefined");
            }
        }
        match self.dimension {
            Some(k) => {
                let _ = writeln!(out, "linear           : yes, dimension {k}");
            }
            None => {
                let _ = writeln!(out, "linear           : no");
            }
        }
        let _ = writeln!(out, "self-orthogonal  : {}", yes_no(self.is_self_orthogonal));
        let _ = writeln!(out, "self-dual        : {}", yes_no(self.is_self_dual));
        let _ = writeln!(out, "perfect          : {}", yes_no(self.is_perfect));
        let _ = writeln!(out, "weight distribution:");
        for &(w, c) in &self.weight_distribution {
            let _ = writeln!(out, "  {w:>3}: {c}");
        }
        if let Some(p) = &self.params {
            let mut line = format!("params           : n={} d={} ordering={}", p.n, p.d, p.ordering);
            if let Some(w) = p.constant_weight {
                let _ = write!(line, " weight={w}");
            }
            if p.self_orthogonal {
                line.push_str(" self-orthogonal");
            }
            let _ = writeln!(out, "{line}");
        }
        if let Some(secs) = self.construction_seconds {
            let _ = writeln!(out, "construction time: {secs:.6} s");
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct JsonReport {
    n: u32,
    size: u64,
    min_distance: Option<u32>,
    is_linear: bool,
    dimension: Option<u32>,
    weight_distribution: Vec<[u64; 2]>,
    is_self_orthogonal: bool,
    is_self_dual: bool,
    is_perfect: bool,
    params: Option<JsonParams>,
    construction_seconds: Option<f64>,
    timestamp: String,
}

#[derive(Serialize)]
struct JsonParams {
    n: u32,
    d: u32,
    ordering: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    constant_weight: Option<u32>,
    self_orthogonal: bool,
    selective_fraction: f64,
    parallelism: usize,
    chunk_min: usize,
}

impl From<&ConstructionParams> for JsonParams {
    fn from(p: &ConstructionParams) -> JsonParams {
        let basis = match &p.ordering {
            OrderingSpec::BOrdering { basis } => {
                Some(basis.iter().map(|w| w.to_bitstring(p.n)).collect())
            }
            _ => None,
        };
        JsonParams {
            n: p.n,
            d: p.d,
            ordering: p.ordering.token().to_string(),
            basis,
            constant_weight: p.constant_weight,
            self_orthogonal: p.self_orthogonal,
            selective_fraction: p.selective_fraction,
            parallelism: p.parallelism,
            chunk_min: p.chunk_min,
        }
    }
}
