//! Arithmetic in `GF(p)` and rank of sparse matrices by elimination.

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 32003;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }
}

/// Column-major sparse matrix over `GF(p)`; each column is sorted by row.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub cols: Vec<Vec<(u32, u32)>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize) -> Self {
        SparseMatrix { nrows, cols: Vec::new() }
    }

    /// Pushes a column given as unsorted `(row, value)` pairs; duplicate rows
    /// are summed and zeros dropped.
    pub fn push_col(&mut self, field: PrimeField, mut entries: Vec<(u32, u32)>) {
        entries.sort_unstable_by_key(|e| e.0);
        let mut col: Vec<(u32, u32)> = Vec::with_capacity(entries.len());
        for (r, v) in entries {
            match col.last_mut() {
                Some(last) if last.0 == r => last.1 = field.add(last.1, v),
                _ => col.push((r, v)),
            }
        }
        col.retain(|e| e.1 != 0);
        self.cols.push(col);
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Rank over `GF(p)`.
    ///
    /// Columns are processed sparsest first (ties by index) and reduced
    /// against stored pivots keyed by their last nonzero row.
    pub fn rank(&self, field: PrimeField) -> usize {
        let mut order: Vec<usize> = (0..self.cols.len()).filter(|&c| !self.cols[c].is_empty()).collect();
        order.sort_by_key(|&c| (self.cols[c].len(), c));
        let mut pivot_at: Vec<u32> = vec![u32::MAX; self.nrows];
        let mut pivots: Vec<Vec<(u32, u32)>> = Vec::new();
        let mut scratch: Vec<(u32, u32)> = Vec::new();
        for c in order {
            let mut col = self.cols[c].clone();
            while let Some(&(low, val)) = col.last() {
                let slot = pivot_at[low as usize];
                if slot == u32::MAX {
                    let inv = field.inv(val);
                    for e in col.iter_mut() {
                        e.1 = field.mul(e.1, inv);
                    }
                    pivot_at[low as usize] = pivots.len() as u32;
                    pivots.push(col);
                    break;
                }
                // col -= val * pivot (pivot has unit low entry)
                let piv = &pivots[slot as usize];
                let factor = field.neg(val);
                scratch.clear();
                let (mut i, mut j) = (0, 0);
                while i < col.len() || j < piv.len() {
                    let take_col = j >= piv.len() || (i < col.len() && col[i].0 < piv[j].0);
                    let take_piv = i >= col.len() || (j < piv.len() && piv[j].0 < col[i].0);
                    if take_col {
                        scratch.push(col[i]);
                        i += 1;
                    } else if take_piv {
                        scratch.push((piv[j].0, field.mul(factor, piv[j].1)));
                        j += 1;
                    } else {
                        let v = field.add(col[i].1, field.mul(factor, piv[j].1));
                        if v != 0 {
                            scratch.push((col[i].0, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                std::mem::swap(&mut col, &mut scratch);
            }
        }
        pivots.len()
    }
}
