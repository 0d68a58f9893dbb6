//! Eight reference codes with their listed `[n, k, d]`.

use serde::Serialize;

use crate::code::WeightDistribution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub length: u64,
    pub dimension: u64,
    pub min_distance: u64,
    /// Canonical index of `c` in `F_q`.
    pub c: usize,
    pub m: u32,
    pub q: u64,
    /// The listed length disagrees with the size of the defining set.
    pub known_length_erratum: bool,
}

const fn row(length: u64, dimension: u64, min_distance: u64, c: usize, m: u32, q: u64) -> Table1Row {
    Table1Row {
        length,
        dimension,
        min_distance,
        c,
        m,
        q,
        known_length_erratum: false,
    }
}

pub const TABLE1: [Table1Row; 8] = [
    row(5, 4, 2, 0, 4, 2),
    row(27, 6, 12, 0, 6, 2),
    row(51, 4, 36, 0, 4, 4),
    row(5, 2, 4, 1, 2, 4),
    Table1Row {
        known_length_erratum: true,
        ..row(64, 4, 48, 1, 4, 4)
    },
    row(9, 2, 8, 1, 2, 8),
    row(10, 2, 8, 1, 2, 9),
    row(30, 4, 18, 1, 4, 3),
];

pub fn table1_row(q: u64, m: u32, c_index: usize) -> Option<&'static Table1Row> {
    TABLE1
        .iter()
        .find(|r| r.q == q && r.m == m && r.c == c_index)
}

/// Listed values next to computed ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Entry {
    pub row: Table1Row,
    pub computed_length: u64,
    pub computed_dimension: u64,
    pub computed_min_distance: u64,
    pub flag: Option<String>,
    /// All three agree, or only the known length erratum differs.
    pub passed: bool,
}

impl Table1Row {
    /// Compares against an enumerated distribution (whose `k` is the rank).
    pub fn compare(&self, dist: &WeightDistribution) -> Table1Entry {
        let n = dist.n as u64;
        let k = dist.k as u64;
        let d = dist.min_distance().unwrap_or(0) as u64;
        let length_ok = n == self.length;
        let rest_ok = k == self.dimension && d == self.min_distance;
        let flag = (!length_ok).then(|| {
            format!(
                "listed length {} but the defining set has {} elements",
                self.length, n
            )
        });
        Table1Entry {
            row: *self,
            computed_length: n,
            computed_dimension: k,
            computed_min_distance: d,
            flag,
            passed: rest_ok && (length_ok || self.known_length_erratum),
        }
    }
}
