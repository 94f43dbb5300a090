//! Small dense matrices over a [`FieldSpec`], with exact Gaussian
//! elimination.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldElem, FieldSpec};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            spec,
            rows,
            cols,
            data: vec![spec.zero(); rows * cols],
        }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m[(i, i)] = spec.one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(spec: FieldSpec, rows: Vec<Vec<FieldElem>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix {
            spec,
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.spec, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &t;
                }
            }
        }
        out
    }

    /// Reduces in place to reduced row echelon form; returns pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    let t = &factor * &self[(r, j)];
                    self[(i, j)] = &self[(i, j)] - &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    pub fn det(&self) -> FieldElem {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = self.spec.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return self.spec.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] * &inv;
                for j in c..m.cols {
                    let t = &factor * &m[(c, j)];
                    m[(i, j)] = &m[(i, j)] - &t;
                }
            }
        }
        det
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElem;

    fn index(&self, (i, j): (usize, usize)) -> &FieldElem {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElem {
        &mut self.data[i * self.cols + j]
    }
}

/// Incremental rank of a stream of row vectors of length `cols`; stops
/// early once the rank reaches `cols`.
pub fn rank_of_rows<I>(cols: usize, rows: I) -> usize
where
    I: IntoIterator<Item = Vec<FieldElem>>,
{
    // echelon basis: (pivot column, row normalised so the pivot is 1)
    let mut basis: Vec<(usize, Vec<FieldElem>)> = Vec::new();
    for mut row in rows {
        debug_assert_eq!(row.len(), cols);
        for (pc, b) in &basis {
            if row[*pc].is_zero() {
                continue;
            }
            let factor = row[*pc].clone();
            for j in 0..cols {
                let t = &factor * &b[j];
                row[j] = &row[j] - &t;
            }
        }
        if let Some(pc) = row.iter().position(|x| !x.is_zero()) {
            let inv = row[pc].inv().expect("nonzero");
            for x in row.iter_mut() {
                *x = &*x * &inv;
            }
            // keep earlier basis rows reduced against the new pivot
            for (_, b) in basis.iter_mut() {
                if b[pc].is_zero() {
                    continue;
                }
                let factor = b[pc].clone();
                for j in 0..cols {
                    let t = &factor * &row[j];
                    b[j] = &b[j] - &t;
                }
            }
            basis.push((pc, row));
            if basis.len() == cols {
                break;
            }
        }
    }
    basis.len()
}

/// Solves `m · v = rhs`; returns one solution or `None` when inconsistent.
pub fn solve(m: &Matrix, rhs: &[FieldElem]) -> Option<Vec<FieldElem>> {
    let (rows, cols) = m.shape();
    assert_eq!(rows, rhs.len());
    let spec = m.spec();
    let mut aug = Matrix::zeros(spec, rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, cols)] = rhs[i].clone();
    }
    let pivots = aug.row_reduce();
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut v = vec![spec.zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = aug[(r, cols)].clone();
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(spec: FieldSpec, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            spec,
            rows.iter().map(|r| r.iter().map(|&x| spec.from_int(x)).collect()).collect(),
        )
    }

    #[test]
    fn rank_and_det() {
        let q = FieldSpec::Rationals;
        let a = m(q, &[&[1, 2], &[2, 4], &[0, 1]]);
        assert_eq!(a.rank(), 2);
        let b = m(q, &[&[2, 1], &[1, 3]]);
        assert_eq!(b.det(), q.from_int(5));
        // singular mod 5
        let f5 = FieldSpec::Prime(5);
        assert!(m(f5, &[&[2, 1], &[1, 3]]).det().is_zero());
        assert_eq!(m(f5, &[&[2, 1], &[1, 3]]).rank(), 1);
    }

    #[test]
    fn incremental_rank_matches_full_rank() {
        let f3 = FieldSpec::Prime(3);
        let a = m(f3, &[&[1, 2, 0], &[2, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let rows = (0..4).map(|i| a.row(i).to_vec());
        assert_eq!(rank_of_rows(3, rows), a.rank());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let q = FieldSpec::Rationals;
        let a = m(q, &[&[1, 1], &[1, -1], &[2, 0]]);
        let v = solve(&a, &[q.from_int(3), q.from_int(1), q.from_int(4)]).unwrap();
        assert_eq!(v, vec![q.from_int(2), q.from_int(1)]);
        assert!(solve(&a, &[q.from_int(3), q.from_int(1), q.from_int(5)]).is_none());
    }
}
