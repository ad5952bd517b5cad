//! Characteristic matrices of bipartition tuples.
//!
//! Column `j` of the `n x k` matrix of a tuple is the cut vector of entry `j`:
//! row `i` holds 1 exactly when that entry separates element `i` from element 1.
//! Because the column is the entry's coblock, columns are stored as `u64`
//! masks and the encoding is free. Row and column indices in this module are
//! zero-based; row 0 belongs to element 1 and is always zero.

use crate::bipartition::{full_mask, Bipartition, BipartitionTuple, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// An `n x k` 0/1 matrix whose first row is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharMatrix {
    n: usize,
    columns: Vec<u64>,
}

impl CharMatrix {
    /// Build from column masks (bit `i` is row `i`).
    pub fn from_columns(n: usize, columns: Vec<u64>) -> Result<Self> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::InvalidMatrix(format!("row count {n} outside 1..=64")));
        }
        for (j, &col) in columns.iter().enumerate() {
            if col & 1 != 0 {
                return Err(Error::InvalidMatrix(format!(
                    "first row is nonzero in column {j}"
                )));
            }
            if col & !full_mask(n) != 0 {
                return Err(Error::InvalidMatrix(format!(
                    "column {j} has bits beyond row {n}"
                )));
            }
        }
        Ok(Self { n, columns })
    }

    /// Build from explicit rows of 0/1 entries. Every row must have `k` entries.
    pub fn from_rows(k: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let mut columns = vec![0u64; k];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {k}",
                    row.len()
                )));
            }
            for (j, &entry) in row.iter().enumerate() {
                match entry {
                    0 => {}
                    1 if i < 64 => columns[j] |= 1 << i,
                    1 => {}
                    _ => {
                        return Err(Error::InvalidMatrix(format!(
                            "entry ({i}, {j}) is {entry}, not 0 or 1"
                        )))
                    }
                }
            }
        }
        Self::from_columns(rows.len(), columns)
    }

    pub fn rows_len(&self) -> usize {
        self.n
    }

    pub fn cols_len(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[u64] {
        &self.columns
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        ((self.columns[col] >> row) & 1) as u8
    }

    pub fn row(&self, row: usize) -> Vec<u8> {
        (0..self.cols_len()).map(|j| self.get(row, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|i| self.row(i)).collect()
    }

    /// Row `i` packed into words, 64 columns per word.
    fn row_key(&self, row: usize) -> Vec<u64> {
        let mut key = vec![0u64; self.cols_len().div_ceil(64)];
        for (j, col) in self.columns.iter().enumerate() {
            key[j / 64] |= ((col >> row) & 1) << (j % 64);
        }
        key
    }

    /// True iff no two rows coincide. For the matrix of a tuple this is the
    /// same as the tuple's distinct entries forming a separating family.
    pub fn rows_all_distinct(&self) -> bool {
        let mut keys: Vec<Vec<u64>> = (0..self.n).map(|i| self.row_key(i)).collect();
        keys.sort_unstable();
        keys.windows(2).all(|w| w[0] != w[1])
    }

    /// The `k x n` transpose. Requires the first column to be zero, i.e. the
    /// tuple starts with the trivial bipartition; the result then again has a
    /// zero first row and a zero first column.
    pub fn transpose_dual(&self) -> Result<Self> {
        match self.columns.first() {
            None => {
                return Err(Error::Precondition(
                    "transpose needs at least one column".into(),
                ))
            }
            Some(&first) if first != 0 => {
                return Err(Error::Precondition("first column is nonzero".into()))
            }
            Some(_) => {}
        }
        if self.cols_len() > MAX_ELEMENTS {
            return Err(Error::Capacity {
                what: "matrix transpose",
                n: self.cols_len(),
                bound: MAX_ELEMENTS,
            });
        }
        let columns = (0..self.n)
            .map(|i| {
                self.columns
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, col)| acc | (((col >> i) & 1) << j))
            })
            .collect();
        Self::from_columns(self.cols_len(), columns)
    }
}

/// The cut vector of `p`: coordinate `i` (1-based element `i + 1`) is 1 iff
/// `p` separates that element from element 1.
pub fn b_vector(p: &Bipartition) -> Vec<u8> {
    (1..=p.n()).map(|e| u8::from(p.in_coblock(e))).collect()
}

pub fn encode(t: &BipartitionTuple) -> CharMatrix {
    CharMatrix {
        n: t.n(),
        columns: t.entries().iter().map(|p| p.coblock()).collect(),
    }
}

pub fn decode(m: &CharMatrix) -> BipartitionTuple {
    let entries = m
        .columns
        .iter()
        .map(|&col| Bipartition::from_coblock(m.n, col).expect("matrix invariants hold"))
        .collect();
    BipartitionTuple::new(m.n, entries).expect("matrix invariants hold")
}
