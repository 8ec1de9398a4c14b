//! Sparse Gaussian elimination to reduced row echelon form.
//!
//! Rows are inserted one at a time into an echelon basis whose pivots are
//! the leading (smallest) column of each row. Insertion order is sparsest
//! row first, a Markowitz-style ordering that keeps fill-in low; the final
//! reduced form does not depend on that order, so it is canonical.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use num::{One, Zero};

use super::scalar::Scalar;
use super::sparse::SparseVec;

const NO_PIVOT: usize = usize::MAX;

/// Incrementally maintained row echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_PIVOT
    }

    /// Eliminates every pivot column from `v`, skipping the first `skip_leading` entry if asked.
    fn reduce_impl(&self, v: &SparseVec, keep_leading: bool) -> SparseVec {
        if v.is_zero() {
            return SparseVec::new();
        }
        let mut acc: HashMap<usize, Scalar> = HashMap::with_capacity(v.nnz() * 2);
        let mut heap: BinaryHeap<Reverse<usize>> = BinaryHeap::with_capacity(v.nnz() * 2);
        for (i, x) in v.iter() {
            acc.insert(i, x.clone());
            heap.push(Reverse(i));
        }
        let lead = v.leading().map(|(i, _)| i);
        let mut out = Vec::new();
        while let Some(Reverse(i)) = heap.pop() {
            while heap.peek() == Some(&Reverse(i)) {
                heap.pop();
            }
            let Some(c) = acc.remove(&i) else { continue };
            if c.is_zero() {
                continue;
            }
            let p = self.pivot_row[i];
            if p == NO_PIVOT || (keep_leading && Some(i) == lead) {
                out.push((i, c));
                continue;
            }
            for (j, y) in self.rows[p].iter().skip(1) {
                match acc.get_mut(&j) {
                    Some(z) => *z -= &c * y,
                    None => {
                        acc.insert(j, -(&c * y));
                        heap.push(Reverse(j));
                    }
                }
            }
        }
        SparseVec::from_sorted_unchecked(out)
    }

    /// Reduces `v` modulo the current row space. Pivot columns of the result are zero.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_impl(v, false)
    }

    /// Inserts a vector; returns its new pivot column, or `None` if it was dependent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        let (p, lead) = r.leading()?;
        let inv = Scalar::one() / lead;
        let r = r.scale(&inv);
        self.pivot_row[p] = self.rows.len();
        self.rows.push(r);
        Some(p)
    }

    /// Finishes the elimination: rows fully reduced, normalized, sorted by pivot.
    pub fn into_rref(mut self) -> Rref {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| Reverse(self.rows[k].leading().map(|p| p.0)));
        for &k in &order {
            let reduced = self.reduce_impl(&self.rows[k], true);
            self.rows[k] = reduced;
        }
        let mut rows = self.rows;
        rows.sort_by_key(|r| r.leading().map(|p| p.0));
        let pivots = rows.iter().map(|r| r.leading().unwrap().0).collect();
        Rref {
            ncols: self.ncols,
            rows,
            pivots,
        }
    }
}

/// A matrix in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Reduced row echelon form of the span of `rows`, pivots at leftmost columns.
pub fn rref(rows: &[SparseVec], ncols: usize) -> Rref {
    let mut order: Vec<&SparseVec> = rows.iter().filter(|r| !r.is_zero()).collect();
    order.sort_by_key(|r| r.nnz());
    let mut ech = Echelon::new(ncols);
    for r in order {
        ech.insert(r);
    }
    ech.into_rref()
}

/// Reduced echelon form with pivots at the rightmost possible columns.
pub fn rref_rightmost(rows: &[SparseVec], ncols: usize) -> Rref {
    let flip = |i: usize| ncols - 1 - i;
    let flipped: Vec<SparseVec> = rows.iter().map(|r| r.reindexed(flip)).collect();
    let r = rref(&flipped, ncols);
    let mut rows: Vec<SparseVec> = r.rows.iter().map(|row| row.reindexed(flip)).collect();
    rows.sort_by_key(|row| row.max_index());
    let pivots = rows.iter().map(|row| row.max_index().unwrap()).collect();
    Rref {
        ncols,
        rows,
        pivots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rref_of_small_matrix() {
        let r = rref(&[v(&[1, 2, 3]), v(&[2, 4, 7]), v(&[1, 2, 3])], 3);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(r.rows, vec![v(&[1, 2, 0]), v(&[0, 0, 1])]);
    }

    #[test]
    fn rightmost_pivots() {
        let r = rref_rightmost(&[v(&[1, 1, 0]), v(&[0, 1, 1])], 3);
        assert_eq!(r.pivots, vec![1, 2]);
        assert!(r
            .rows
            .iter()
            .all(|row| row.get(row.max_index().unwrap()).is_one()));
    }
}
