//! Operation-count estimates for a planned construction.
//!
//! The greedy scan touches all 2^n vectors and compares each against up to
//! |C| codewords at O(n) bit operations per naive comparison, giving the
//! n * 4^n worst-case bound (|C| <= 2^n). When the dimension k of a
//! previously computed code for the same parameters is known, 2^n * 2^k is a
//! much tighter guess of the comparison count. Both are estimates, not
//! measurements.

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct CostEstimate {
    pub n: u32,
    /// n * 4^n elementary bit operations, exact while it fits in a u128.
    pub worst_case_ops: Option<u128>,
    pub worst_case_ops_approx: f64,
    /// 2^n * 2^k comparisons for a known or cached dimension k.
    pub refined_ops: Option<u128>,
    pub cached_dimension: Option<u32>,
}

/// Estimate the construction cost for length `n`; `cached_dimension` is the
/// dimension of an already-computed code for the same parameters, when one
/// is available.
pub fn estimate(n: u32, cached_dimension: Option<u32>) -> Result<CostEstimate> {
    if !(1..=64).contains(&n) {
        return Err(Error::LengthOutOfRange { n });
    }
    let worst_case_ops = checked_pow4(n).and_then(|p| (n as u128).checked_mul(p));
    let worst_case_ops_approx = n as f64 * 4f64.powi(n as i32);
    let refined_ops = cached_dimension.and_then(|k| {
        let shift = n + k;
        if shift < 128 {
            Some(1u128 << shift)
        } else {
            None
        }
    });
    Ok(CostEstimate {
        n,
        worst_case_ops,
        worst_case_ops_approx,
        refined_ops,
        cached_dimension,
    })
}

fn checked_pow4(n: u32) -> Option<u128> {
    if 2 * n < 128 {
        Some(1u128 << (2 * n))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worst_case_examples() {
        assert_eq!(estimate(3, None).unwrap().worst_case_ops, Some(192));
        assert_eq!(estimate(1, None).unwrap().worst_case_ops, Some(4));
        let e = estimate(20, None).unwrap();
        assert_eq!(e.worst_case_ops, Some(21_990_232_555_520));
        // A few tens of tera-operations already at n = 20.
        assert!(e.worst_case_ops_approx > 1e13);
    }

    #[test]
    fn refined_uses_cached_dimension() {
        let e = estimate(7, Some(4)).unwrap();
        assert_eq!(e.refined_ops, Some(1 << 11));
        assert_eq!(estimate(7, None).unwrap().refined_ops, None);
    }

    #[test]
    fn bounds_checked() {
        assert!(estimate(0, None).is_err());
        assert!(estimate(65, None).is_err());
        // Exact value overflows u128 near the top of the range.
        let e = estimate(64, None).unwrap();
        assert_eq!(e.worst_case_ops, None);
        assert!(e.worst_case_ops_approx.is_finite());
    }
}
