//! Brute-force reference computations that share no construction code with
//! the library: `Ext_A(M, M)` from normalized bar cochains
//! `Hom_K(Ā^{⊗n} ⊗ M, M)`, with `M = A / A·ker ε` built by dense row reduction.

use num::{One, Zero};

use hecke_core::algebra::{AugmentedSubalgebra, FinAlgebra};
use hecke_core::linalg::{rank, sign};
use hecke_core::{Matrix, Scalar, SparseVec};

/// A left module given by one dense action matrix per basis element of `A`.
pub struct DenseModule {
    pub dim: usize,
    /// `act[a][r][c]`: coefficient of `m_r` in `e_a · m_c`.
    pub act: Vec<Vec<Vec<Scalar>>>,
}

fn dense(v: &SparseVec, n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (i, c) in v.iter() {
        out[i] = c.clone();
    }
    out
}

/// Reduced row echelon form of `rows`, returning the nonzero rows and pivot columns.
fn rref(mut rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Scalar::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..ncols {
                    let t = &rows[r][k] * &f;
                    rows[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// `A ⊗_B K = A / A·I` where `I = ker ε`, as a left `A`-module.
pub fn induced_module(b: &AugmentedSubalgebra) -> DenseModule {
    let a = b.parent();
    let n = a.dim();
    let ideal: Vec<Vec<Scalar>> = (0..n)
        .flat_map(|i| {
            b.kernel_in_parent()
                .iter()
                .map(move |k| dense(&a.mul(&SparseVec::unit(i), k), n))
        })
        .collect();
    let (ideal, pivots) = if ideal.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        rref(ideal)
    };
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let reduce = |mut v: Vec<Scalar>| {
        for (row, &p) in ideal.iter().zip(&pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for k in 0..n {
                    v[k] -= &row[k] * &f;
                }
            }
        }
        v
    };
    let act = (0..n)
        .map(|x| {
            let mut m = vec![vec![Scalar::zero(); free.len()]; free.len()];
            for (c, &q) in free.iter().enumerate() {
                let image = reduce(dense(&a.mul(&SparseVec::unit(x), &SparseVec::unit(q)), n));
                for (r, &f) in free.iter().enumerate() {
                    m[r][c] = image[f].clone();
                }
            }
            m
        })
        .collect();
    DenseModule {
        dim: free.len(),
        act,
    }
}

/// Complement of `K·1` in `A`: basis lifts and the projection `A -> Ā`.
struct Augmentation {
    lifts: Vec<usize>,
    pivot: usize,
    unit: Vec<Scalar>,
}

impl Augmentation {
    fn new(a: &FinAlgebra) -> Self {
        let unit = dense(a.unit(), a.dim());
        let pivot = unit
            .iter()
            .position(|c| !c.is_zero())
            .expect("unit is nonzero");
        let lifts = (0..a.dim()).filter(|&i| i != pivot).collect();
        Self { lifts, pivot, unit }
    }

    fn project(&self, x: &[Scalar]) -> Vec<Scalar> {
        let t = &x[self.pivot] / &self.unit[self.pivot];
        self.lifts
            .iter()
            .map(|&i| &x[i] - &t * &self.unit[i])
            .collect()
    }
}

/// `δ^n: Hom_K(Ā^{⊗n} ⊗ M, M) -> Hom_K(Ā^{⊗n+1} ⊗ M, M)`.
pub fn cochain_differential(a: &FinAlgebra, m: &DenseModule, n: usize) -> Matrix {
    let aug = Augmentation::new(a);
    let k = aug.lifts.len();
    let d = m.dim;
    let cdim = |n: usize| k.pow(n as u32) * d * d;
    let index = |word: usize, x: usize, c: usize| (word * d + x) * d + c;
    let products: Vec<Vec<Vec<Scalar>>> = aug
        .lifts
        .iter()
        .map(|&i| {
            aug.lifts
                .iter()
                .map(|&j| {
                    aug.project(&dense(
                        &a.mul(&SparseVec::unit(i), &SparseVec::unit(j)),
                        a.dim(),
                    ))
                })
                .collect()
        })
        .collect();
    let mut t = Vec::new();
    for w in 0..k.pow(n as u32 + 1) {
        // letters of w, most significant first
        let letters: Vec<usize> = (0..=n).rev().map(|p| (w / k.pow(p as u32)) % k).collect();
        let word = |ls: &[usize]| ls.iter().fold(0, |acc, &l| acc * k + l);
        for x in 0..d {
            // a_1 · f(a_2, ..., a_{n+1}, x)
            let tail = word(&letters[1..]);
            let act = &m.act[aug.lifts[letters[0]]];
            for r in 0..d {
                for c in 0..d {
                    if !act[r][c].is_zero() {
                        t.push((index(w, x, r), index(tail, x, c), act[r][c].clone()));
                    }
                }
            }
            // Σ (-1)^i f(..., a_i a_{i+1}, ..., x)
            for i in 0..n {
                let s = sign(i as i64 + 1);
                for (j, p) in products[letters[i]][letters[i + 1]].iter().enumerate() {
                    if p.is_zero() {
                        continue;
                    }
                    let mut merged = letters[..i].to_vec();
                    merged.push(j);
                    merged.extend_from_slice(&letters[i + 2..]);
                    for c in 0..d {
                        t.push((index(w, x, c), index(word(&merged), x, c), &s * p));
                    }
                }
            }
            // (-1)^{n+1} f(a_1, ..., a_n, a_{n+1} x)
            let s = sign(n as i64 + 1);
            let head = word(&letters[..n]);
            let act = &m.act[aug.lifts[letters[n]]];
            for q in 0..d {
                if act[q][x].is_zero() {
                    continue;
                }
                for c in 0..d {
                    t.push((index(w, x, c), index(head, q, c), &s * &act[q][x]));
                }
            }
        }
    }
    Matrix::from_triplets(cdim(n + 1), cdim(n), t)
}

/// Dimensions of `Ext^n_A(M, M)` for `n = 0..=top`.
pub fn ext_dims(a: &FinAlgebra, m: &DenseModule, top: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=top)
        .map(|n| rank(&cochain_differential(a, m, n)))
        .collect();
    (0..=top)
        .map(|n| {
            cochain_differential(a, m, n).cols() - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 }
        })
        .collect()
}
