use std::collections::HashMap;

use super::ResolutionError;
use crate::algebra::LieAction;
use crate::complexes::{AMatrix, FreeAComplex};
use crate::linalg::sign;

/// Subsets of `0..n` of size `k` as bitmasks, in lexicographic order of
/// their sorted elements.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    fn rec(start: usize, n: usize, k: usize, acc: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..n {
            if n - i >= k {
                rec(i + 1, n, k - 1, acc | 1 << i, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

fn elements(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Sign of `x_p ∧ x_{rest}` reordered into increasing order, or `None` if `p ∈ rest`.
fn insert_sign(p: usize, rest: u32) -> Option<i64> {
    if rest >> p & 1 == 1 {
        return None;
    }
    Some((rest & ((1u32 << p) - 1)).count_ones() as i64)
}

/// The Chevalley-Eilenberg complex `A ⊗ Λ^s(g)`, `s = 0..=dim g`, with
///
/// `d(1 ⊗ x_{i1}∧…∧x_{is}) = Σ_k (-1)^{k+1} ρ(x_{ik}) ⊗ (…x̂_{ik}…)
///    + Σ_{k<l} (-1)^{k+l} 1 ⊗ [x_{ik}, x_{il}] ∧ (…x̂_{ik}…x̂_{il}…)`.
///
/// `ρ(x)` acts on the `A` factor by right multiplication, so the complex is
/// `A ⊗_{U(g)} (U(g) ⊗ Λ(g))`. Generators of `Λ^s` are ordered as in
/// [`subsets_of_size`].
pub fn ce_complex(act: &LieAction) -> Result<FreeAComplex, ResolutionError> {
    act.validate()?;
    let g = act.lie();
    let n = g.dim();
    assert!(n < 32, "Lie algebras of dimension >= 32 are not supported");
    let alg = act.target();
    let unit = alg.unit();
    let bases: Vec<Vec<u32>> = (0..=n).map(|k| subsets_of_size(n, k)).collect();
    let positions: Vec<HashMap<u32, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    let position = |k: usize, mask: u32| positions[k][&mask];
    let mut d = Vec::with_capacity(n);
    for s in 1..=n {
        let mut entries = Vec::new();
        for (row, &mask) in bases[s].iter().enumerate() {
            let idx = elements(mask);
            for (k, &i) in idx.iter().enumerate() {
                let rest = mask & !(1 << i);
                entries.push((
                    row,
                    position(s - 1, rest),
                    act.rho()[i].scale(&sign(k as i64)),
                ));
            }
            for (k, &i) in idx.iter().enumerate() {
                for (l, &j) in idx.iter().enumerate().skip(k + 1) {
                    let rest = mask & !(1 << i) & !(1 << j);
                    // (k+1)+(l+1) with 1-based positions
                    let outer = sign((k + l) as i64);
                    for (p, c) in g.basis_bracket(i, j).iter() {
                        if let Some(swaps) = insert_sign(p, rest) {
                            let coeff = c * &outer * sign(swaps);
                            entries.push((row, position(s - 1, rest | 1 << p), unit.scale(&coeff)));
                        }
                    }
                }
            }
        }
        d.push(AMatrix::from_entries(
            bases[s].len(),
            bases[s - 1].len(),
            entries,
        ));
    }
    let fibers = bases.iter().map(Vec::len).collect();
    let x =
        FreeAComplex::new(alg.clone(), fibers, d, true).expect("exterior shapes are consistent");
    if let Some(s) = x.find_d_squared_failure() {
        return Err(ResolutionError::NotAComplex { degree: s });
    }
    Ok(x)
}
