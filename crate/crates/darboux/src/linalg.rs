//! Exact rational linear algebra: a sparse matrix with a deterministic
//! reduced-echelon nullspace, plus an independently coded dense elimination
//! used as a cross-checking oracle.
//!
//! Both paths compute the reduced row echelon form, which is unique, so their
//! nullspace bases must agree entry-for-entry; the library treats any
//! disagreement as an internal invariant violation.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::field::Rational;

/// Sparse rational matrix in row-major form; zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl ExactMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        ExactMatrix {
            nrows,
            ncols,
            rows: vec![BTreeMap::new(); nrows],
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = ExactMatrix::new(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.nrows && col < self.ncols, "index out of bounds");
        if value.is_zero() {
            self.rows[row].remove(&col);
        } else {
            self.rows[row].insert(col, value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: Rational) {
        let current = self.entry(row, col);
        self.set(row, col, current + value);
    }

    pub fn entry(&self, row: usize, col: usize) -> Rational {
        self.rows[row]
            .get(&col)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn num_nonzero(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.ncols]; self.nrows];
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, v) in row {
                out[i][j] = v.clone();
            }
        }
        out
    }

    /// Reduced row echelon form of the row space. Pivot choice: columns in
    /// ascending order; within a column, the eligible row with the smallest
    /// support, ties broken by the original row position. The result is the
    /// unique RREF, so the pivot rule affects only intermediate work.
    fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivot_of_row: Vec<Option<usize>> = vec![None; rows.len()];
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (column, row)
        for col in 0..self.ncols {
            let candidate = rows
                .iter()
                .enumerate()
                .filter(|(i, row)| pivot_of_row[*i].is_none() && row.contains_key(&col))
                .min_by_key(|(i, row)| (row.len(), *i))
                .map(|(i, _)| i);
            let Some(pivot_row) = candidate else { continue };
            let pivot_value = rows[pivot_row][&col].clone();
            let inv = pivot_value.recip();
            for v in rows[pivot_row].values_mut() {
                *v = &*v * &inv;
            }
            let pivot = std::mem::take(&mut rows[pivot_row]);
            rows.par_iter_mut()
                .enumerate()
                .filter(|(i, row)| *i != pivot_row && row.contains_key(&col))
                .for_each(|(_, row)| {
                    let factor = row.remove(&col).unwrap();
                    for (&j, pv) in pivot.iter() {
                        if j == col {
                            continue;
                        }
                        let delta = &factor * pv;
                        match row.entry(j) {
                            std::collections::btree_map::Entry::Vacant(slot) => {
                                slot.insert(-delta);
                            }
                            std::collections::btree_map::Entry::Occupied(mut slot) => {
                                let next = slot.get() - &delta;
                                if next.is_zero() {
                                    slot.remove();
                                } else {
                                    slot.insert(next);
                                }
                            }
                        }
                    }
                });
            rows[pivot_row] = pivot;
            pivot_of_row[pivot_row] = Some(col);
            pivots.push((col, pivot_row));
        }
        Rref { rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right nullspace, one vector per free column in ascending
    /// column order: the free coordinate is 1 and each pivot coordinate is
    /// the negated RREF entry in the free column. Deterministic because the
    /// RREF is unique.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &(col, _) in &rref.pivots {
            is_pivot[col] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rational::zero(); self.ncols];
            v[free] = num_traits::One::one();
            for &(col, row) in &rref.pivots {
                if let Some(entry) = rref.rows[row].get(&free) {
                    v[col] = -entry.clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

struct Rref {
    rows: Vec<BTreeMap<usize, Rational>>,
    pivots: Vec<(usize, usize)>,
}

/// Textbook dense Gauss-Jordan nullspace over the rationals; written
/// independently of [`ExactMatrix`] so the two can cross-check each other.
/// `ncols` is explicit so empty matrices keep their column count.
pub fn dense_nullspace(matrix: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    for row in &a {
        assert_eq!(row.len(), ncols, "ragged rows");
    }
    let nrows = a.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(src) = (next_row..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(next_row, src);
        let inv = a[next_row][col].clone().recip();
        for entry in a[next_row].iter_mut() {
            *entry = &*entry * &inv;
        }
        let pivot_row = a[next_row].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row.iter_mut().zip(&pivot_row) {
                *entry = &*entry - &(&factor * p);
            }
        }
        pivot_cols.push(col);
        next_row += 1;
        if next_row == nrows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); ncols];
        v[free] = num_traits::One::one();
        for (rank, &col) in pivot_cols.iter().enumerate() {
            v[col] = -a[rank][free].clone();
        }
        basis.push(v);
    }
    basis
}
