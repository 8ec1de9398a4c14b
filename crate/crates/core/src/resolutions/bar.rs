use std::sync::Arc;

use num::Zero;

use crate::algebra::{AugmentedSubalgebra, FinAlgebra};
use crate::complexes::{AMatrix, FreeAComplex};
use crate::linalg::{sign, SparseVec};

/// Lexicographic index of a word in `m` letters.
fn word_index(word: &[usize], m: usize) -> usize {
    word.iter().fold(0, |acc, &w| acc * m + w)
}

fn word_of(mut index: usize, len: usize, m: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for k in (0..len).rev() {
        w[k] = index % m;
        index /= m;
    }
    w
}

/// Differential entries of the normalized bar complex on the generator
/// `[u_{w_1} | ... | u_{w_s}]`, as `(column, entry in B)`. The final term
/// `(-1)^s ε(u_{w_s}) [...]` vanishes because the letters lie in `ker ε`.
fn bar_row(b: &AugmentedSubalgebra, word: &[usize]) -> Vec<(usize, SparseVec)> {
    let m = b.kernel_dim();
    let s = word.len();
    let unit = b.algebra().unit();
    let mut out = vec![(word_index(&word[1..], m), b.kernel_basis()[word[0]].clone())];
    for k in 1..s {
        let prod = b.kernel_product(word[k - 1], word[k]);
        for (letter, c) in prod.iter() {
            let mut merged = Vec::with_capacity(s - 1);
            merged.extend_from_slice(&word[..k - 1]);
            merged.push(letter);
            merged.extend_from_slice(&word[k + 1..]);
            out.push((word_index(&merged, m), unit.scale(&(c * sign(k as i64)))));
        }
    }
    out
}

/// The normalized bar resolution `B ⊗ (ker ε)^{⊗s}` of `K` over `B`, degrees `0..=len`.
///
/// For `B = K·1` the complex is `B` in degree 0 and is returned bounded.
pub fn bar_resolution(b: &AugmentedSubalgebra, len: usize) -> FreeAComplex {
    let m = b.kernel_dim();
    let alg = b.algebra().clone();
    if m == 0 {
        return FreeAComplex::new(alg, vec![1], vec![], true).expect("single degree");
    }
    let fibers: Vec<usize> = (0..=len).map(|s| m.pow(s as u32)).collect();
    let d = (1..=len)
        .map(|s| {
            let entries = (0..fibers[s]).flat_map(|i| {
                bar_row(b, &word_of(i, s, m))
                    .into_iter()
                    .map(move |(j, x)| (i, j, x))
            });
            AMatrix::from_entries(fibers[s], fibers[s - 1], entries)
        })
        .collect();
    FreeAComplex::new(alg, fibers, d, false).expect("bar shapes are consistent")
}

/// `A ⊗_B (bar resolution)` = `A ⊗ (ker ε)^{⊗s}`, a free A-complex computing `Tor^B(A, K)`.
pub fn induced_bar_complex(b: &AugmentedSubalgebra, len: usize) -> FreeAComplex {
    bar_resolution(b, len).map_entries(b.parent().clone(), |x| b.include(x))
}

/// The two-sided bar complex `A ⊗ (ker ε)^{⊗s} ⊗ B` as a free left A-complex.
/// Generator `(w, β)` is `1 ⊗ [w] ⊗ e_β`, at index `w * dim B + β`.
pub fn two_sided_bar_complex(b: &AugmentedSubalgebra, len: usize) -> FreeAComplex {
    two_sided(b, len, b.parent().clone(), b.kernel_in_parent())
}

/// The two-sided bar complex `B ⊗ (ker ε)^{⊗s} ⊗ B` over `B` itself.
pub fn two_sided_bar_complex_over_b(b: &AugmentedSubalgebra, len: usize) -> FreeAComplex {
    two_sided(b, len, b.algebra().clone(), b.kernel_basis())
}

fn two_sided(
    b: &AugmentedSubalgebra,
    len: usize,
    left: Arc<FinAlgebra>,
    letters: &[SparseVec],
) -> FreeAComplex {
    let m = b.kernel_dim();
    let nb = b.dim();
    let balg = b.algebra();
    let unit = left.unit().clone();
    let top = if m == 0 { 0 } else { len };
    let fibers: Vec<usize> = (0..=top).map(|s| m.pow(s as u32) * nb).collect();
    let d = (1..=top)
        .map(|s| {
            let mut entries = Vec::new();
            for w in 0..m.pow(s as u32) {
                let word = word_of(w, s, m);
                for beta in 0..nb {
                    let row = w * nb + beta;
                    // a u_{w1} [w2..] e_β
                    entries.push((
                        row,
                        word_index(&word[1..], m) * nb + beta,
                        letters[word[0]].clone(),
                    ));
                    // sum (-1)^k a [.. u_{wk} u_{wk+1} ..] e_β
                    for k in 1..s {
                        for (letter, c) in b.kernel_product(word[k - 1], word[k]).iter() {
                            let mut merged = word[..k - 1].to_vec();
                            merged.push(letter);
                            merged.extend_from_slice(&word[k + 1..]);
                            entries.push((
                                row,
                                word_index(&merged, m) * nb + beta,
                                unit.scale(&(c * sign(k as i64))),
                            ));
                        }
                    }
                    // (-1)^s a [w1..w_{s-1}] u_{ws} e_β
                    let last = balg.mul_basis_right(&b.kernel_basis()[word[s - 1]], beta);
                    let head = word_index(&word[..s - 1], m);
                    for (gamma, c) in last.iter() {
                        entries.push((row, head * nb + gamma, unit.scale(&(c * sign(s as i64)))));
                    }
                }
            }
            AMatrix::from_entries(fibers[s], fibers[s - 1], entries)
        })
        .collect();
    FreeAComplex::new(left, fibers, d, m == 0).expect("two-sided bar shapes are consistent")
}

/// `X ⊗_B K` for a complex whose generators are `(w, β)` with a right `B` factor:
/// the generator `[w] = [w] ⊗ 1_B` has differential `π d([w] ⊗ 1_B)`, where `π`
/// applies `ε` to the right factor.
pub fn collapse_right_factor(x: &FreeAComplex, b: &AugmentedSubalgebra) -> FreeAComplex {
    let nb = b.dim();
    let unit_b = b.algebra().unit();
    let fibers: Vec<usize> = x.fiber_dims().iter().map(|f| f / nb).collect();
    let d = (1..x.len())
        .map(|s| {
            let dm = x.differential(s);
            let mut entries = Vec::new();
            for w in 0..fibers[s] {
                for (beta, u) in unit_b.iter() {
                    for (col, entry) in dm.row(w * nb + beta) {
                        let e = b.eps()[col % nb].clone() * u;
                        if !e.is_zero() {
                            entries.push((w, col / nb, entry.scale(&e)));
                        }
                    }
                }
            }
            AMatrix::from_entries(fibers[s], fibers[s - 1], entries)
        })
        .collect();
    FreeAComplex::new(x.algebra().clone(), fibers, d, x.is_bounded())
        .expect("collapse keeps shapes consistent")
}
