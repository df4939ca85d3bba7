//! Invariant factors of sparse integer matrices.
//!
//! Unit pivots are eliminated directly on a sparse row representation; the
//! block left over when no unit entry remains is handed to the dense Smith
//! reduction.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::snf::{invariant_factors_dense, IntMatrix};

type Row = Vec<(u32, BigInt)>;

pub(crate) struct SparseMatrix {
    rows: Vec<Row>,
    /// Rows with a nonzero entry, per column.
    cols: Vec<BTreeSet<u32>>,
}

impl SparseMatrix {
    pub(crate) fn new(nrows: usize, ncols: usize, entries: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut rows: Vec<Row> = vec![Vec::new(); nrows];
        let mut cols = vec![BTreeSet::new(); ncols];
        for (i, j, x) in entries {
            if x != 0 {
                rows[i].push((j as u32, BigInt::from(x)));
                cols[j].insert(i as u32);
            }
        }
        for r in &mut rows {
            r.sort_by_key(|e| e.0);
        }
        SparseMatrix { rows, cols }
    }

    /// row[target] -= factor * row[source], keeping the column index current.
    fn eliminate(&mut self, target: usize, source: usize, factor: &BigInt) {
        let dst = std::mem::take(&mut self.rows[target]);
        let src = &self.rows[source];
        let mut merged = Vec::with_capacity(dst.len() + src.len());
        let (mut a, mut b) = (0, 0);
        while a < dst.len() || b < src.len() {
            let take_dst = b == src.len() || (a < dst.len() && dst[a].0 < src[b].0);
            let take_src = a == dst.len() || (b < src.len() && src[b].0 < dst[a].0);
            if take_dst {
                merged.push(dst[a].clone());
                a += 1;
            } else if take_src {
                let (j, x) = &src[b];
                merged.push((*j, -(factor * x)));
                self.cols[*j as usize].insert(target as u32);
                b += 1;
            } else {
                let (j, x) = &dst[a];
                let value = x - factor * &src[b].1;
                if value.is_zero() {
                    self.cols[*j as usize].remove(&(target as u32));
                } else {
                    merged.push((*j, value));
                }
                a += 1;
                b += 1;
            }
        }
        self.rows[target] = merged;
    }

    /// A unit entry of `row`, preferring the sparsest column.
    fn unit_in_row(&self, row: usize) -> Option<(u32, BigInt)> {
        self.rows[row]
            .iter()
            .filter(|(_, x)| x.abs().is_one())
            .min_by_key(|(j, _)| self.cols[*j as usize].len())
            .cloned()
    }

    /// Nonzero invariant factors (units included), in nondecreasing order
    /// of the divisibility chain.
    pub(crate) fn invariant_factors(mut self) -> Vec<BigInt> {
        let mut units = 0usize;
        let mut progress = true;
        while progress {
            progress = false;
            for r in 0..self.rows.len() {
                let Some((c, pivot)) = self.unit_in_row(r) else {
                    continue;
                };
                progress = true;
                units += 1;
                let others: Vec<u32> = self.cols[c as usize].iter().copied().filter(|&i| i as usize != r).collect();
                for i in others {
                    let entry = self.rows[i as usize]
                        .iter()
                        .find(|(j, _)| *j == c)
                        .map(|(_, x)| x.clone())
                        .expect("column index is current");
                    // pivot is ±1, so pivot⁻¹ = pivot.
                    self.eliminate(i as usize, r, &(entry * &pivot));
                }
                // Column c is now zero outside row r; column operations clear
                // the rest of row r without touching other rows.
                for (j, _) in std::mem::take(&mut self.rows[r]) {
                    self.cols[j as usize].remove(&(r as u32));
                }
            }
        }
        let live_rows: Vec<usize> = (0..self.rows.len()).filter(|&r| !self.rows[r].is_empty()).collect();
        let live_cols: Vec<usize> = (0..self.cols.len()).filter(|&c| !self.cols[c].is_empty()).collect();
        let mut factors = vec![BigInt::one(); units];
        if !live_rows.is_empty() {
            let mut col_pos = vec![usize::MAX; self.cols.len()];
            for (p, &c) in live_cols.iter().enumerate() {
                col_pos[c] = p;
            }
            let mut dense = IntMatrix::zeros(live_rows.len(), live_cols.len());
            for (p, &r) in live_rows.iter().enumerate() {
                for (j, x) in &self.rows[r] {
                    dense[(p, col_pos[*j as usize])] = x.clone();
                }
            }
            factors.extend(invariant_factors_dense(dense).into_iter().filter(|x| !x.is_zero()));
        }
        factors
    }
}
