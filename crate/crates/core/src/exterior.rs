//! Multi-index bases of exterior powers and wedge signs.
//!
//! The basis of `Λ^p` of an `n`-dimensional space is the list of strictly
//! increasing `p`-subsets of `0..n` in lexicographic order. Every matrix in
//! the crate is written against this order.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A basis monomial `e^{i_1} ∧ ... ∧ e^{i_p}` with `i_1 < ... < i_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    indices: Vec<usize>,
    ambient_dim: usize,
}

impl MultiIndex {
    /// Returns `None` unless `indices` is strictly increasing and in range.
    pub fn new(indices: Vec<usize>, ambient_dim: usize) -> Option<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        let in_range = indices.last().is_none_or(|&i| i < ambient_dim);
        (increasing && in_range).then_some(Self {
            indices,
            ambient_dim,
        })
    }

    pub fn empty(ambient_dim: usize) -> Self {
        Self {
            indices: Vec::new(),
            ambient_dim,
        }
    }

    pub fn single(index: usize, ambient_dim: usize) -> Self {
        assert!(index < ambient_dim, "index {index} out of range");
        Self {
            indices: vec![index],
            ambient_dim,
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// The index with position `pos` removed.
    pub fn without_position(&self, pos: usize) -> Self {
        let mut indices = self.indices.clone();
        indices.remove(pos);
        Self {
            indices,
            ambient_dim: self.ambient_dim,
        }
    }

    /// Relabels into a larger ambient space, shifting every index by `offset`.
    pub fn shifted(&self, offset: usize, ambient_dim: usize) -> Self {
        let indices: Vec<usize> = self.indices.iter().map(|i| i + offset).collect();
        Self::new(indices, ambient_dim).expect("shift stays in range")
    }

    /// Lexicographic rank of this index within `basis(ambient_dim, degree)`.
    pub fn position(&self) -> usize {
        let n = self.ambient_dim;
        let p = self.indices.len();
        let mut pos = 0;
        let mut start = 0;
        for (slot, &idx) in self.indices.iter().enumerate() {
            for skipped in start..idx {
                pos += binomial(n - skipped - 1, p - slot - 1);
            }
            start = idx + 1;
        }
        pos
    }
}

/// `C(n, k)` as a machine integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let value = (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128);
    usize::try_from(value).expect("binomial coefficient fits in usize")
}

/// All `C(n, p)` increasing `p`-subsets of `0..n`, lexicographically.
pub fn basis(n: usize, p: usize) -> Vec<MultiIndex> {
    let mut out = Vec::with_capacity(binomial(n, p));
    if p > n {
        return out;
    }
    let mut current: Vec<usize> = (0..p).collect();
    loop {
        out.push(MultiIndex {
            indices: current.clone(),
            ambient_dim: n,
        });
        // advance to the next combination
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < n - p + i {
                current[i] += 1;
                for j in i + 1..p {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lookup from multi-index to its position within its degree.
pub fn index_map(n: usize, p: usize) -> HashMap<MultiIndex, usize> {
    basis(n, p)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect()
}

/// Sign of a sequence of distinct integers relative to its sorted order,
/// counting inversions. `None` if an entry repeats.
pub fn sort_sign(seq: &[usize]) -> Option<i32> {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match seq[i].cmp(&seq[j]) {
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// `a ∧ b` as `(sign, merged)`, or `None` when the indices overlap.
pub fn wedge(a: &MultiIndex, b: &MultiIndex) -> Option<(i32, MultiIndex)> {
    assert_eq!(
        a.ambient_dim, b.ambient_dim,
        "wedge of different ambient spaces"
    );
    let mut merged = Vec::with_capacity(a.degree() + b.degree());
    let mut sign = 1;
    let (mut i, mut j) = (0, 0);
    // each time an element of b jumps ahead of the remaining elements of a
    // it crosses (a.len() - i) of them
    while i < a.indices.len() && j < b.indices.len() {
        match a.indices[i].cmp(&b.indices[j]) {
            std::cmp::Ordering::Less => {
                merged.push(a.indices[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                if (a.indices.len() - i) % 2 == 1 {
                    sign = -sign;
                }
                merged.push(b.indices[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    merged.extend_from_slice(&a.indices[i..]);
    merged.extend_from_slice(&b.indices[j..]);
    Some((
        sign,
        MultiIndex {
            indices: merged,
            ambient_dim: a.ambient_dim,
        },
    ))
}

/// `Σ_{p=0}^{r} (-1)^p C(r, p)`, exactly.
pub fn alternating_binomial_sum(r: u32) -> BigInt {
    let mut coeff = BigInt::one();
    let mut total = BigInt::zero();
    for p in 0..=r {
        if p % 2 == 0 {
            total += &coeff;
        } else {
            total -= &coeff;
        }
        coeff = coeff * BigInt::from(r - p) / BigInt::from(p + 1);
    }
    total
}
