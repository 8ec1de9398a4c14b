use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use super::BrstError;
use crate::linalg::{one, Matrix, Scalar, SparseVec};

/// A normal-ordered monomial `e_{p_1}…e_{p_k} e*_{q_1}…e*_{q_l}` with increasing
/// indices, stored as the bitmasks `(P, Q)`.
pub type Monomial = (u32, u32);

/// Order in which adjacent out-of-order pairs are rewritten.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteOrder {
    LeftmostFirst,
    RightmostFirst,
}

/// Element of the Clifford algebra `C(g + g*)` of rank `n`, with relations
/// `e_i e_j = -e_j e_i`, `e*_i e*_j = -e*_j e*_i`, `e_i e*_j + e*_j e_i = δ_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordElement {
    rank: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

/// A generator: `(index, is_annihilation)`.
type Gen = (u8, bool);

fn key(g: Gen) -> (bool, u8) {
    (g.1, g.0)
}

fn word_of(m: Monomial, rank: usize) -> Vec<Gen> {
    let mut w: Vec<Gen> = (0..rank)
        .filter(|i| m.0 >> i & 1 == 1)
        .map(|i| (i as u8, false))
        .collect();
    w.extend(
        (0..rank)
            .filter(|i| m.1 >> i & 1 == 1)
            .map(|i| (i as u8, true)),
    );
    w
}

fn monomial_of(word: &[Gen]) -> Monomial {
    word.iter().fold((0, 0), |(p, q), &(i, star)| {
        if star {
            (p, q | 1 << i)
        } else {
            (p | 1 << i, q)
        }
    })
}

/// Position of an adjacent pair that is not in normal order.
fn find_disorder(word: &[Gen], strategy: RewriteOrder) -> Option<usize> {
    let bad = |k: usize| key(word[k]) >= key(word[k + 1]);
    let n = word.len().saturating_sub(1);
    match strategy {
        RewriteOrder::LeftmostFirst => (0..n).find(|&k| bad(k)),
        RewriteOrder::RightmostFirst => (0..n).rev().find(|&k| bad(k)),
    }
}

/// Sign of moving generator `i` past the members of `mask` below it.
fn pass_sign(i: usize, mask: u32) -> bool {
    (mask & ((1u32 << i) - 1)).count_ones() % 2 == 1
}

/// Apply a monomial operator to the basis vector `x_S` of `Λ(g)`.
pub(crate) fn apply_monomial(m: Monomial, rank: usize, mut s: u32) -> Option<(bool, u32)> {
    let mut negative = false;
    for i in (0..rank).rev().filter(|i| m.1 >> i & 1 == 1) {
        if s >> i & 1 == 0 {
            return None;
        }
        negative ^= pass_sign(i, s);
        s &= !(1 << i);
    }
    for i in (0..rank).rev().filter(|i| m.0 >> i & 1 == 1) {
        if s >> i & 1 == 1 {
            return None;
        }
        negative ^= pass_sign(i, s);
        s |= 1 << i;
    }
    Some((negative, s))
}

impl CliffordElement {
    pub fn zero(rank: usize) -> Self {
        assert!(rank < 32, "rank must be below 32");
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(rank, (0, 0), one())
    }

    pub fn monomial(rank: usize, m: Monomial, c: Scalar) -> Self {
        let mut out = Self::zero(rank);
        if !c.is_zero() {
            out.terms.insert(m, c);
        }
        out
    }

    /// `e_i`, exterior multiplication by `x_i`.
    pub fn creation(rank: usize, i: usize) -> Self {
        Self::monomial(rank, (1 << i, 0), one())
    }

    /// `e*_i`, contraction with the dual basis vector.
    pub fn annihilation(rank: usize, i: usize) -> Self {
        Self::monomial(rank, (0, 1 << i), one())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(terms: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
        let entry = terms.entry(m).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::accumulate(&mut terms, *m, c.clone());
        }
        Self {
            rank: self.rank,
            terms,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-one()))
    }

    /// `(creations - annihilations)` when homogeneous.
    pub fn charge(&self) -> Option<i64> {
        let mut it = self
            .terms
            .keys()
            .map(|m| m.0.count_ones() as i64 - m.1.count_ones() as i64);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// `Z/2` parity `(p + q) mod 2` when homogeneous.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self
            .terms
            .keys()
            .map(|m| (m.0.count_ones() + m.1.count_ones()) % 2 == 1);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Normal-ordered product using the given rewriting order.
    pub fn mul_with(&self, other: &Self, strategy: RewriteOrder) -> Result<Self, BrstError> {
        if self.rank != other.rank {
            return Err(BrstError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = BTreeMap::new();
        let mut work: Vec<(Vec<Gen>, Scalar)> = Vec::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut w = word_of(*m1, self.rank);
                w.extend(word_of(*m2, self.rank));
                work.push((w, c1 * c2));
            }
        }
        while let Some((mut w, c)) = work.pop() {
            let Some(k) = find_disorder(&w, strategy) else {
                Self::accumulate(&mut out, monomial_of(&w), c);
                continue;
            };
            let (a, b) = (w[k], w[k + 1]);
            if a == b {
                continue;
            }
            if a.1 && !b.1 && a.0 == b.0 {
                // e*_i e_i = 1 - e_i e*_i
                let mut shorter = w.clone();
                shorter.drain(k..k + 2);
                work.push((shorter, c.clone()));
            }
            w.swap(k, k + 1);
            work.push((w, -c));
        }
        Ok(Self {
            rank: self.rank,
            terms: out,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, BrstError> {
        self.mul_with(other, RewriteOrder::LeftmostFirst)
    }

    /// Operator on `Λ(g)` in the basis `x_S` indexed by the bitmask `S`.
    pub fn operator(&self) -> Matrix {
        let n = 1usize << self.rank;
        let mut triplets = Vec::new();
        for (m, c) in &self.terms {
            for s in 0..n as u32 {
                if let Some((neg, t)) = apply_monomial(*m, self.rank, s) {
                    triplets.push((
                        t as usize,
                        s as usize,
                        if neg { -c.clone() } else { c.clone() },
                    ));
                }
            }
        }
        Matrix::from_triplets(n, n, triplets)
    }

    /// Coordinates over the basis of all `4^n` monomials, index `P * 2^n + Q`.
    pub fn coords(&self) -> SparseVec {
        SparseVec::from_pairs(
            self.terms
                .iter()
                .map(|(m, c)| ((m.0 as usize) << self.rank | m.1 as usize, c.clone())),
        )
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut word: Vec<String> = (0..self.rank)
                    .filter(|i| m.0 >> i & 1 == 1)
                    .map(|i| format!("e{}", i + 1))
                    .collect();
                word.extend(
                    (0..self.rank)
                        .filter(|i| m.1 >> i & 1 == 1)
                        .map(|i| format!("e*{}", i + 1)),
                );
                let c = crate::linalg::format_scalar(c);
                if word.is_empty() {
                    c
                } else {
                    format!("{c}*{}", word.join(""))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
