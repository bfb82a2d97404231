//! Pointwise symbol complexes `E_x ⊗ Λ^r A*_x → E_x ⊗ Λ^{r+1} A*_x`,
//! given by wedging with `a*(α)`, and their exactness.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{alternating_binomial_sum, basis, binomial, wedge, MultiIndex};
use crate::linalg::{CochainComplex, RationalMatrix};
use crate::rational::Rational;

/// Fiber of an algebroid at a point: the anchor `a_x : A_x → T_x M` as a
/// `dim_m × dim_a` matrix, and the rank of the coefficient bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberData {
    pub dim_a: usize,
    pub dim_m: usize,
    pub anchor: RationalMatrix,
    pub dim_e: usize,
}

impl FiberData {
    pub fn new(dim_a: usize, dim_m: usize, anchor: RationalMatrix, dim_e: usize) -> Result<Self> {
        if anchor.rows() != dim_m || anchor.cols() != dim_a {
            return Err(Error::Dimension(format!(
                "anchor must be {dim_m}x{dim_a}, got {}x{}",
                anchor.rows(),
                anchor.cols()
            )));
        }
        Ok(Self {
            dim_a,
            dim_m,
            anchor,
            dim_e,
        })
    }

    /// `a*(α)` as a covector on `A_x`.
    pub fn pullback(&self, alpha: &[Rational]) -> Result<Vec<Rational>> {
        if alpha.len() != self.dim_m {
            return Err(Error::Dimension(format!(
                "covector must have length {}, got {}",
                self.dim_m,
                alpha.len()
            )));
        }
        Ok(self.anchor.transpose().mul_vec(alpha))
    }
}

/// The symbol complex at `α`, with `v ⊗ e^I` at `pos(I) * dim_e + v`.
pub fn symbol_complex(f: &FiberData, alpha: &[Rational]) -> Result<CochainComplex> {
    let theta = f.pullback(alpha)?;
    let n = f.dim_a;
    let degrees: Vec<usize> = (0..=n).map(|r| f.dim_e * binomial(n, r)).collect();
    let differentials = (0..n)
        .map(|r| {
            let mut m = RationalMatrix::zeros(degrees[r + 1], degrees[r]);
            for (col, src) in basis(n, r).iter().enumerate() {
                for (j, t) in theta.iter().enumerate() {
                    if t.is_zero() {
                        continue;
                    }
                    if let Some((sign, dst)) = wedge(&MultiIndex::single(j, n), src) {
                        let value = t * Rational::from_integer(sign.into());
                        for e in 0..f.dim_e {
                            m.set(
                                dst.position() * f.dim_e + e,
                                col * f.dim_e + e,
                                value.clone(),
                            );
                        }
                    }
                }
            }
            m
        })
        .collect();
    CochainComplex::new(degrees, differentials)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exactness {
    pub per_degree: Vec<bool>,
    pub exact: bool,
}

/// Exact at `r` iff `rank d_r + rank d_{r-1} = dim C^r`, with the end
/// degrees read in the reduced sense (injective at the bottom, surjective at
/// the top).
pub fn exactness_check(c: &CochainComplex) -> Result<Exactness> {
    c.check_chain_condition()?;
    let ranks = c.ranks();
    let per_degree: Vec<bool> = c
        .degrees()
        .iter()
        .enumerate()
        .map(|(r, &dim)| {
            let outgoing = ranks.get(r).copied().unwrap_or(0);
            let incoming = if r == 0 { 0 } else { ranks[r - 1] };
            outgoing + incoming == dim
        })
        .collect();
    Ok(Exactness {
        exact: per_degree.iter().all(|&b| b),
        per_degree,
    })
}

/// `(Σ_p (-1)^p C(rank_L, p)) · rank_E`.
pub fn euler_form_factor(rank_l: u32, rank_e: u32) -> BigInt {
    alternating_binomial_sum(rank_l) * BigInt::from(rank_e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn one_dimensional_symbol() {
        let f = FiberData::new(1, 1, RationalMatrix::identity(1), 1).unwrap();
        let c = symbol_complex(&f, &[int(1)]).unwrap();
        assert_eq!(c.differentials()[0], RationalMatrix::identity(1));
        assert!(exactness_check(&c).unwrap().exact);
    }

    #[test]
    fn zero_covector_gives_zero_differentials() {
        let f = FiberData::new(2, 1, RationalMatrix::from_i64(&[&[1, 0]]), 2).unwrap();
        let c = symbol_complex(&f, &[int(0)]).unwrap();
        assert!(c.differentials().iter().all(RationalMatrix::is_zero));
        assert!(!exactness_check(&c).unwrap().exact);
    }

    #[test]
    fn sl2_fiber() {
        let f = FiberData::new(3, 1, RationalMatrix::from_i64(&[&[1, 1, 0]]), 1).unwrap();
        let c = symbol_complex(&f, &[int(1)]).unwrap();
        assert_eq!(c.degrees(), &[1, 3, 3, 1]);
        let e = exactness_check(&c).unwrap();
        assert!(e.exact);
        assert_eq!(e.per_degree, vec![true; 4]);
    }

    #[test]
    fn zero_anchor_is_not_exact() {
        let f = FiberData::new(1, 1, RationalMatrix::zeros(1, 1), 1).unwrap();
        let c = symbol_complex(&f, &[int(3)]).unwrap();
        assert!(!exactness_check(&c).unwrap().exact);
    }

    #[test]
    fn euler_factor_examples() {
        assert_eq!(euler_form_factor(0, 1), BigInt::from(1));
        assert_eq!(euler_form_factor(0, 5), BigInt::from(5));
        assert_eq!(euler_form_factor(2, 3), BigInt::from(0));
    }

    #[test]
    fn wrong_covector_length() {
        let f = FiberData::new(1, 2, RationalMatrix::zeros(2, 1), 1).unwrap();
        assert!(symbol_complex(&f, &[int(1)]).is_err());
    }
}
