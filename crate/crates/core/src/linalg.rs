//! Exact linear algebra over the rationals: ranks, kernels and the
//! cohomology of finite cochain complexes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{bit_size, Rational};

/// Dense matrix with exact rational entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<Rational>>) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "expected a {rows}x{cols} array of entries"
            )));
        }
        Ok(Self {
            rows,
            cols,
            data: entries.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter()
                    .map(|&v| Rational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        Self::from_rows(rows.len(), cols, entries).expect("shape checked")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        self.data[r * self.cols + c] = value;
    }

    pub fn add_to(&mut self, r: usize, c: usize, value: &Rational) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        self.data[r * self.cols + c] += value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    /// Kronecker product; row index `(i, k)` maps to `i * other.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Columns appended side by side: `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows())
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn cokernel_dim(&self) -> usize {
        self.rows - self.rank()
    }

    /// Rank with the chosen strategy.
    pub fn rank_with(&self, strategy: RankStrategy) -> usize {
        match strategy {
            RankStrategy::Exact => self.rank(),
            RankStrategy::Modular => modular_rank(self),
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows)
                .filter(|&i| !m.get(i, col).is_zero())
                .min_by_key(|&i| {
                    let v = m.get(i, col);
                    (bit_size(v.numer()) + bit_size(v.denom()), i)
                })
            else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for i in 0..m.rows {
                if i == row || m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col).clone();
                for c in col..m.cols {
                    let delta = m.get(row, c) * &factor;
                    if !delta.is_zero() {
                        let v = m.get(i, c) - delta;
                        m.set(i, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// A basis of the null space, one vector per free column in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        for free in 0..self.cols {
            if pivot_iter.peek() == Some(&&free) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse, or `None` if the matrix is singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// True when `v` lies in the span of the columns.
    pub fn column_span_contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let augmented = self.hstack(&Self::column_vector(v));
        augmented.rank() == self.rank()
    }

    pub fn column_vector(v: &[Rational]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rows scaled by the lcm of their denominators so every entry is integral.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "product shape mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "sum shape mismatch"
        );
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "difference shape mismatch"
        );
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

/// How [`RationalMatrix::rank_with`] computes a rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankStrategy {
    /// Fraction-free elimination over the integers.
    #[default]
    Exact,
    /// Maximum of the ranks modulo a fixed set of word-sized primes. This is
    /// a lower bound for the rational rank and equals it unless every prime
    /// divides some nonzero maximal minor.
    Modular,
}

/// Fraction-free (Bareiss) elimination. The pivot in each column is the
/// nonzero candidate with the fewest bits, lowest row index on ties.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows)
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| (bit_size(&a[i][col]), i))
        else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                // Exact: every entry is a minor of the input.
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

pub(crate) const MODULAR_PRIMES: [u64; 4] = [
    2_305_843_009_213_693_951,
    2_147_483_647,
    1_000_000_007,
    998_244_353,
];

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Rank modulo `p`, or `None` when some denominator vanishes mod `p`.
pub(crate) fn rank_mod_prime(m: &RationalMatrix, p: u64) -> Option<usize> {
    let mut a = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let mut row = Vec::with_capacity(m.cols);
        for v in m.row(r) {
            let d = reduce_mod(v.denom(), p);
            if d == 0 {
                return None;
            }
            let n = reduce_mod(v.numer(), p);
            row.push(((n as u128 * mod_pow(d, p - 2, p) as u128) % p as u128) as u64);
        }
        a.push(row);
    }
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(piv) = (rank..m.rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = mod_pow(a[rank][col], p - 2, p);
        for i in rank + 1..m.rows {
            if a[i][col] == 0 {
                continue;
            }
            let factor = (a[i][col] as u128 * inv as u128 % p as u128) as u64;
            for j in col..m.cols {
                let sub = (factor as u128 * a[rank][j] as u128 % p as u128) as u64;
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn modular_rank(m: &RationalMatrix) -> usize {
    MODULAR_PRIMES
        .iter()
        .filter_map(|&p| rank_mod_prime(m, p))
        .max()
        .unwrap_or_else(|| m.rank())
}

/// A finite cochain complex `C^0 -> C^1 -> ... -> C^top`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplex {
    degrees: Vec<usize>,
    differentials: Vec<RationalMatrix>,
}

impl CochainComplex {
    /// `differentials[p]` maps `C^p` to `C^{p+1}`; there must be exactly one
    /// fewer differential than degrees (none for an empty complex).
    pub fn new(degrees: Vec<usize>, differentials: Vec<RationalMatrix>) -> Result<Self> {
        if differentials.len() + 1 != degrees.len().max(1) {
            return Err(Error::Dimension(format!(
                "{} degrees need {} differentials, got {}",
                degrees.len(),
                degrees.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (p, d) in differentials.iter().enumerate() {
            if d.cols() != degrees[p] || d.rows() != degrees[p + 1] {
                return Err(Error::ShapeMismatch {
                    degree: p,
                    rows: d.rows(),
                    cols: d.cols(),
                    expected_rows: degrees[p + 1],
                    expected_cols: degrees[p],
                });
            }
        }
        Ok(Self {
            degrees,
            differentials,
        })
    }

    /// The complex with the given dimensions and all differentials zero.
    pub fn zero(degrees: Vec<usize>) -> Self {
        let differentials = degrees
            .windows(2)
            .map(|w| RationalMatrix::zeros(w[1], w[0]))
            .collect();
        Self {
            degrees,
            differentials,
        }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn differentials(&self) -> &[RationalMatrix] {
        &self.differentials
    }

    pub fn differential(&self, p: usize) -> Option<&RationalMatrix> {
        self.differentials.get(p)
    }

    /// First degree `p` with `d_{p+1} d_p != 0`, if any.
    pub fn chain_condition_failure(&self) -> Option<usize> {
        self.differentials
            .par_windows(2)
            .position_first(|w| !(&w[1] * &w[0]).is_zero())
    }

    pub fn check_chain_condition(&self) -> Result<()> {
        match self.chain_condition_failure() {
            Some(degree) => Err(Error::ChainConditionViolated { degree }),
            None => Ok(()),
        }
    }

    /// Ranks of every differential, computed concurrently.
    pub fn ranks(&self) -> Vec<usize> {
        self.differentials
            .par_iter()
            .map(RationalMatrix::rank)
            .collect()
    }

    /// Alternating sum of the dimensions.
    pub fn dimension_euler(&self) -> i64 {
        alternating_sum(&self.degrees)
    }
}

/// Betti numbers and Euler characteristic of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub betti: Vec<usize>,
    pub euler: i64,
    pub degrees: Vec<usize>,
}

impl CohomologyReport {
    pub fn from_betti(betti: Vec<usize>, degrees: Vec<usize>) -> Self {
        let euler = alternating_sum(&betti);
        Self {
            betti,
            euler,
            degrees,
        }
    }
}

pub(crate) fn alternating_sum(values: &[usize]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(p, &v)| if p % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

pub fn rank(m: &RationalMatrix) -> usize {
    m.rank()
}

pub fn kernel_dim(m: &RationalMatrix) -> usize {
    m.kernel_dim()
}

pub fn cokernel_dim(m: &RationalMatrix) -> usize {
    m.cokernel_dim()
}

/// `betti[p] = dim ker d_p - rank d_{p-1}`. Fails if `d . d != 0`.
pub fn complex_cohomology(c: &CochainComplex) -> Result<CohomologyReport> {
    c.check_chain_condition()?;
    let ranks = c.ranks();
    let betti = c
        .degrees
        .iter()
        .enumerate()
        .map(|(p, &dim)| {
            let outgoing = ranks.get(p).copied().unwrap_or(0);
            let incoming = if p == 0 { 0 } else { ranks[p - 1] };
            dim - outgoing - incoming
        })
        .collect();
    Ok(CohomologyReport::from_betti(betti, c.degrees.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(RationalMatrix::zeros(4, 7).rank(), 0);
        let m = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_dim(), 1);
        assert_eq!(m.cokernel_dim(), 1);
    }

    #[test]
    fn kernel_and_cokernel_examples() {
        assert_eq!(RationalMatrix::identity(3).kernel_dim(), 0);
        assert_eq!(RationalMatrix::zeros(4, 7).kernel_dim(), 7);
        assert_eq!(RationalMatrix::identity(3).cokernel_dim(), 0);
        assert_eq!(RationalMatrix::zeros(5, 2).cokernel_dim(), 5);
    }

    #[test]
    fn empty_matrices_have_rank_zero() {
        for (r, c) in [(0, 0), (0, 5), (5, 0)] {
            let m = RationalMatrix::zeros(r, c);
            assert_eq!(m.rank(), 0);
            assert_eq!(m.kernel_dim(), c);
            assert_eq!(m.cokernel_dim(), r);
            assert_eq!(m.rank_with(RankStrategy::Modular), 0);
        }
    }

    #[test]
    fn rational_entries() {
        let m = RationalMatrix::from_rows(
            2,
            2,
            vec![vec![frac(1, 2), frac(1, 3)], vec![frac(3, 2), int(1)]],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        let n = RationalMatrix::from_rows(
            2,
            2,
            vec![vec![frac(1, 2), frac(1, 3)], vec![frac(3, 2), int(2)]],
        )
        .unwrap();
        assert_eq!(n.rank(), 2);
    }

    #[test]
    fn kernel_basis_is_annihilated() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn inverse_round_trips() {
        let m = RationalMatrix::from_i64(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RationalMatrix::identity(3));
        assert!(RationalMatrix::from_i64(&[&[1, 2], &[2, 4]])
            .inverse()
            .is_none());
    }

    #[test]
    fn zero_complex_cohomology() {
        let report = complex_cohomology(&CochainComplex::zero(vec![1, 2, 1])).unwrap();
        assert_eq!(report.betti, vec![1, 2, 1]);
        assert_eq!(report.euler, 0);
    }

    #[test]
    fn chain_condition_is_enforced() {
        let one = RationalMatrix::identity(1);
        let c = CochainComplex::new(vec![1, 1, 1], vec![one.clone(), one]).unwrap();
        assert_eq!(
            complex_cohomology(&c),
            Err(Error::ChainConditionViolated { degree: 0 })
        );
    }

    #[test]
    fn shape_is_enforced() {
        let err = CochainComplex::new(vec![1, 2], vec![RationalMatrix::zeros(1, 1)]).unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch { degree: 0, .. }));
    }

    #[test]
    fn modular_rank_matches_exact_on_small_cases() {
        let m = RationalMatrix::from_rows(
            3,
            3,
            vec![
                vec![frac(1, 3), int(2), int(5)],
                vec![int(7), frac(-2, 9), int(0)],
                vec![frac(22, 3), frac(16, 9), int(5)],
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_with(RankStrategy::Modular), 2);
    }
}
