//! Row reduction over GF(2) on bit-packed rows.

/// Incremental row-echelon accumulator. Rows are u64 words; each stored row
/// owns a distinct pivot (its highest set bit).
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<u64>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon { rows: Vec::new() }
    }

    /// Reduce `v` against the accumulated rows.
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &row in &self.rows {
            if v & pivot_bit(row) != 0 {
                v ^= row;
            }
        }
        v
    }

    /// Insert a vector; returns true when it was independent of the rows seen
    /// so far (i.e. the rank grew).
    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        // Keep rows sorted by descending pivot so reduce stays a single pass.
        let pos = self.rows.partition_point(|&r| r > v);
        self.rows.insert(pos, v);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The reduced rows; a basis of the span of everything inserted.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// True when `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }
}

fn pivot_bit(row: u64) -> u64 {
    debug_assert!(row != 0);
    1u64 << (63 - row.leading_zeros())
}

/// Rank of a set of bit-packed rows.
pub fn rank(rows: impl IntoIterator<Item = u64>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank([0b1100, 0b1010, 0b1001]), 3);
        assert_eq!(rank([0b1100, 0b1100, 0b1100]), 1);
        assert_eq!(rank([0, 0, 0]), 0);
        assert_eq!(rank([1, 2, 3]), 2);
        assert_eq!(rank([3, 1, 4]), 3);
    }

    #[test]
    fn span_membership() {
        let mut e = Echelon::new();
        e.insert(0b011);
        e.insert(0b101);
        assert!(e.contains(0b110));
        assert!(e.contains(0));
        assert!(!e.contains(0b001));
    }
}
