//! Dense integer matrices and the Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.iter().flatten().map(|&x| x.into()).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries only on the main diagonal.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let delta = factor * &self[(source, j)];
            if !delta.is_zero() {
                self[(target, j)] += delta;
            }
        }
    }

    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let delta = factor * &self[(i, source)];
            if !delta.is_zero() {
                self[(i, target)] += delta;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let x = std::mem::take(&mut self[(r, j)]);
            self[(r, j)] = -x;
        }
    }
}

/// `d = u * m * v` with `d` diagonal, `d[0] | d[1] | ...`, nonnegative,
/// and `u`, `v` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries, zeros included.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut calc = Reduction {
        d: m.clone(),
        u: Some(IntMatrix::identity(m.rows)),
        v: Some(IntMatrix::identity(m.cols)),
    };
    calc.run();
    SmithForm { d: calc.d, u: calc.u.unwrap(), v: calc.v.unwrap() }
}

/// Diagonal of the Smith form without the transforms.
pub fn invariant_factors_dense(m: IntMatrix) -> Vec<BigInt> {
    let mut calc = Reduction { d: m, u: None, v: None };
    calc.run();
    calc.d.diagonal()
}

struct Reduction {
    d: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Reduction {
    fn row_op(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.d.add_row(target, source, factor);
        if let Some(u) = &mut self.u {
            u.add_row(target, source, factor);
        }
    }

    fn col_op(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.d.add_col(target, source, factor);
        if let Some(v) = &mut self.v {
            v.add_col(target, source, factor);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    /// Smallest nonzero |entry| in the trailing block, ties row-major.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.d.rows {
            for j in t..self.d.cols {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.d[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let (rows, cols) = (self.d.rows, self.d.cols);
        for t in 0..rows.min(cols) {
            loop {
                let Some((pi, pj)) = self.pivot(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let mut dirty = false;
                for i in t + 1..rows {
                    if !self.d[(i, t)].is_zero() {
                        let q = self.d[(i, t)].div_floor(&self.d[(t, t)]);
                        self.row_op(i, t, &-q);
                        dirty |= !self.d[(i, t)].is_zero();
                    }
                }
                for j in t + 1..cols {
                    if !self.d[(t, j)].is_zero() {
                        let q = self.d[(t, j)].div_floor(&self.d[(t, t)]);
                        self.col_op(j, t, &-q);
                        dirty |= !self.d[(t, j)].is_zero();
                    }
                }
                if dirty {
                    continue;
                }
                let pivot = self.d[(t, t)].clone();
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !self.d[(i, j)].is_multiple_of(&pivot)));
                match offender {
                    Some(i) => self.row_op(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.d[(t, t)].is_negative() {
                self.d.negate_row(t);
                if let Some(u) = &mut self.u {
                    u.negate_row(t);
                }
            }
        }
    }
}
