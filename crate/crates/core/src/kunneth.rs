//! Products: direct sums of Lie algebras, tensor products of
//! representations, products of circle algebroids with Lie algebras, and the
//! graded tensor product of cochain complexes.

use num_traits::Zero;
use serde::Serialize;

use crate::circle::{CircleAlgebroid, TrigPoly};
use crate::error::{Error, Result};
use crate::exterior::{basis, binomial};
use crate::liealg::{BracketEntry, LieAlgebra, Representation};
use crate::linalg::{CochainComplex, CohomologyReport, RationalMatrix};
use crate::rational::Rational;

/// `g ⊕ h` with `h`'s basis placed after `g`'s and zero cross brackets.
pub fn direct_sum(g: &LieAlgebra, h: &LieAlgebra) -> LieAlgebra {
    let offset = g.dim();
    let mut entries = g.entries();
    entries.extend(h.entries().into_iter().map(|e| BracketEntry {
        i: e.i + offset,
        j: e.j + offset,
        coeffs: e.coeffs.into_iter().map(|(k, c)| (k + offset, c)).collect(),
    }));
    let name = match (g.name(), h.name()) {
        (Some(a), Some(b)) => Some(format!("{a} + {b}")),
        _ => None,
    };
    LieAlgebra::new(g.dim() + h.dim(), entries, name).expect("direct sum of valid algebras")
}

/// `E ⊠ F` over `g ⊕ h`: `ρ_(x,0) = ρ^E_x ⊗ 1`, `ρ_(0,y) = 1 ⊗ ρ^F_y`.
/// Basis vector `e_a ⊗ f_b` sits at `a * dim F + b`.
pub fn tensor_rep(e: &Representation, f: &Representation) -> Representation {
    let id_e = RationalMatrix::identity(e.dim_e());
    let id_f = RationalMatrix::identity(f.dim_e());
    let action = e
        .action()
        .iter()
        .map(|rho| rho.kron(&id_f))
        .chain(f.action().iter().map(|rho| id_e.kron(rho)))
        .collect();
    Representation::new(
        direct_sum(e.algebra(), f.algebra()),
        e.dim_e() * f.dim_e(),
        action,
    )
    .expect("shapes agree by construction")
}

/// The product of a circle algebroid with a Lie algebra over a point, as an
/// action algebroid in which `g` acts by zero vector fields.
pub fn product_with_lie_algebra(a: &CircleAlgebroid, g: &LieAlgebra) -> CircleAlgebroid {
    if g.dim() == 0 {
        return a.clone();
    }
    let (base, mut phi) = match a {
        CircleAlgebroid::Rank1Anchor { p } => (LieAlgebra::abelian(1), vec![p.clone()]),
        CircleAlgebroid::Action { g, phi } => (g.clone(), phi.clone()),
    };
    phi.extend(std::iter::repeat_n(TrigPoly::zero(), g.dim()));
    CircleAlgebroid::Action {
        g: direct_sum(&base, g),
        phi,
    }
}

/// Graded tensor product with `D(x ⊗ y) = dx ⊗ y + (-1)^p x ⊗ dy`.
///
/// Total degree `r` is the concatenation of blocks `C^p ⊗ D^{r-p}` for
/// increasing `p`; inside a block `x_i ⊗ y_j` sits at `i * dim D^{r-p} + j`.
pub fn tensor_complex(a: &CochainComplex, b: &CochainComplex) -> CochainComplex {
    let (na, nb) = (a.degrees().len(), b.degrees().len());
    if na == 0 || nb == 0 {
        return CochainComplex::zero(Vec::new());
    }
    let top = na + nb - 2;
    let block_offset = |r: usize, p: usize| -> usize {
        (0..p)
            .filter(|&i| i < na && r >= i && r - i < nb)
            .map(|i| a.degrees()[i] * b.degrees()[r - i])
            .sum()
    };
    let total = |r: usize| block_offset(r, r + 1);
    let degrees: Vec<usize> = (0..=top).map(total).collect();
    let mut differentials = Vec::with_capacity(top);
    for r in 0..top {
        let mut m = RationalMatrix::zeros(degrees[r + 1], degrees[r]);
        for p in 0..=r {
            let q = r - p;
            if p >= na || q >= nb {
                continue;
            }
            let (dim_p, dim_q) = (a.degrees()[p], b.degrees()[q]);
            let src = block_offset(r, p);
            if let Some(da) = a.differential(p) {
                // dx ⊗ y lands in block (p+1, q)
                let dst = block_offset(r + 1, p + 1);
                let dim_q_dst = b.degrees()[q];
                for i in 0..dim_p {
                    for j in 0..dim_q {
                        for k in 0..da.rows() {
                            let v = da.get(k, i);
                            if !v.is_zero() {
                                m.add_to(dst + k * dim_q_dst + j, src + i * dim_q + j, v);
                            }
                        }
                    }
                }
            }
            if let Some(db) = b.differential(q) {
                // (-1)^p x ⊗ dy lands in block (p, q+1)
                let dst = block_offset(r + 1, p);
                let dim_q_dst = b.degrees()[q + 1];
                for i in 0..dim_p {
                    for j in 0..dim_q {
                        for k in 0..db.rows() {
                            let v = db.get(k, j);
                            if !v.is_zero() {
                                let v = if p % 2 == 0 { v.clone() } else { -v.clone() };
                                m.add_to(dst + i * dim_q_dst + k, src + i * dim_q + j, &v);
                            }
                        }
                    }
                }
            }
        }
        differentials.push(m);
    }
    CochainComplex::new(degrees, differentials).expect("shapes agree by construction")
}

/// `out[r] = Σ_{i+j=r} a[i] b[j]`.
pub fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KunnethRow {
    pub degree: usize,
    pub expected: usize,
    pub actual: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KunnethCheck {
    pub holds: bool,
    pub euler_multiplicative: bool,
    pub table: Vec<KunnethRow>,
}

/// Compares the product's Betti numbers with the convolution of the factors'.
pub fn kunneth_verify(
    product: &CohomologyReport,
    a: &CohomologyReport,
    b: &CohomologyReport,
) -> KunnethCheck {
    let expected = convolve(&a.betti, &b.betti);
    let len = expected.len().max(product.betti.len());
    let table: Vec<KunnethRow> = (0..len)
        .map(|degree| KunnethRow {
            degree,
            expected: expected.get(degree).copied().unwrap_or(0),
            actual: product.betti.get(degree).copied().unwrap_or(0),
        })
        .collect();
    KunnethCheck {
        holds: table.iter().all(|r| r.expected == r.actual),
        euler_multiplicative: product.euler == a.euler * b.euler,
        table,
    }
}

/// A cochain in `Λ^degree(ℚ^generators) ⊗ ℚ^coef_dim`, laid out as
/// `pos(I) * coef_dim + a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub generators: usize,
    pub degree: usize,
    pub coef_dim: usize,
    pub coords: Vec<Rational>,
}

impl Cochain {
    pub fn new(
        generators: usize,
        degree: usize,
        coef_dim: usize,
        coords: Vec<Rational>,
    ) -> Result<Self> {
        if coords.len() != binomial(generators, degree) * coef_dim {
            return Err(Error::Dimension(format!(
                "cochain of degree {degree} on {generators} generators with {coef_dim} coefficients \
                 needs {} coordinates, got {}",
                binomial(generators, degree) * coef_dim,
                coords.len()
            )));
        }
        Ok(Self {
            generators,
            degree,
            coef_dim,
            coords,
        })
    }

    /// `ω ⊠ δ = ω ∧ δ` with `δ`'s generators shifted past `ω`'s; coefficient
    /// `a ⊗ b` sits at `a * δ.coef_dim + b`.
    pub fn external_product(&self, other: &Self) -> Self {
        let gens = self.generators + other.generators;
        let coef = self.coef_dim * other.coef_dim;
        let mut coords = vec![Rational::zero(); binomial(gens, self.degree + other.degree) * coef];
        for (pi, i) in basis(self.generators, self.degree).iter().enumerate() {
            for (pj, j) in basis(other.generators, other.degree).iter().enumerate() {
                let merged = [i.indices(), j.shifted(self.generators, gens).indices()].concat();
                let target = crate::exterior::MultiIndex::new(merged, gens)
                    .expect("disjoint increasing")
                    .position();
                for a in 0..self.coef_dim {
                    let x = &self.coords[pi * self.coef_dim + a];
                    if x.is_zero() {
                        continue;
                    }
                    for b in 0..other.coef_dim {
                        let y = &other.coords[pj * other.coef_dim + b];
                        if !y.is_zero() {
                            coords[target * coef + a * other.coef_dim + b] += x * y;
                        }
                    }
                }
            }
        }
        Self {
            generators: gens,
            degree: self.degree + other.degree,
            coef_dim: coef,
            coords,
        }
    }

    /// Zero-pads every coefficient block to `coef_dim`, e.g. `V_m ⊂ V_{m'}`.
    pub fn pad_coefficients(&self, coef_dim: usize) -> Self {
        assert!(
            coef_dim >= self.coef_dim,
            "cannot shrink coefficient blocks"
        );
        let blocks = binomial(self.generators, self.degree);
        let mut coords = vec![Rational::zero(); blocks * coef_dim];
        for blk in 0..blocks {
            for a in 0..self.coef_dim {
                coords[blk * coef_dim + a] = self.coords[blk * self.coef_dim + a].clone();
            }
        }
        Self {
            coef_dim,
            coords,
            ..self.clone()
        }
    }
}

/// Whether the cocycle `v` in degree `p` represents a nonzero class.
pub fn class_is_nonzero(c: &CochainComplex, p: usize, v: &[Rational]) -> Result<bool> {
    let dim = *c.degrees().get(p).ok_or(Error::DegreeOutOfRange {
        degree: p,
        top: c.degrees().len().saturating_sub(1),
    })?;
    if v.len() != dim {
        return Err(Error::Dimension(format!(
            "vector of length {} in degree of dim {dim}",
            v.len()
        )));
    }
    if let Some(d) = c.differential(p) {
        if d.mul_vec(v).iter().any(|x| !x.is_zero()) {
            return Err(Error::Dimension(format!(
                "vector is not a cocycle in degree {p}"
            )));
        }
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(false);
    }
    Ok(match p.checked_sub(1).and_then(|q| c.differential(q)) {
        Some(d) => !d.column_span_contains(v),
        None => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{check_jacobi, check_representation, lie_cohomology};
    use crate::linalg::complex_cohomology;
    use crate::rational::int;

    fn su2() -> LieAlgebra {
        let e = |i, j, k, c| BracketEntry {
            i,
            j,
            coeffs: vec![(k, int(c))],
        };
        LieAlgebra::new(3, vec![e(0, 1, 2, 1), e(1, 2, 0, 1), e(0, 2, 1, -1)], None).unwrap()
    }

    #[test]
    fn direct_sum_examples() {
        let g = su2();
        assert_eq!(direct_sum(&g, &LieAlgebra::zero()).entries(), g.entries());
        let rr = direct_sum(&LieAlgebra::abelian(1), &LieAlgebra::abelian(1));
        assert!(rr.is_abelian() && rr.dim() == 2);
        let big = direct_sum(&g, &g);
        assert_eq!(big.dim(), 6);
        assert!(check_jacobi(&big));
        assert_eq!(big.constant(3, 4, 5), int(1));
        assert_eq!(big.constant(0, 4, 5), int(0));
    }

    #[test]
    fn tensor_rep_examples() {
        let triv = tensor_rep(
            &Representation::trivial(su2(), 1),
            &Representation::trivial(LieAlgebra::abelian(1), 1),
        );
        assert_eq!(triv.dim_e(), 1);
        assert!(check_representation(&triv));
        let adj = tensor_rep(
            &Representation::adjoint(su2()),
            &Representation::trivial(LieAlgebra::abelian(1), 1),
        );
        assert_eq!(adj.action()[0], su2().ad(0));
        assert!(adj.action()[3].is_zero());
        let both = tensor_rep(
            &Representation::adjoint(su2()),
            &Representation::adjoint(su2()),
        );
        assert_eq!((both.algebra().dim(), both.dim_e()), (6, 9));
        assert!(check_representation(&both));
    }

    #[test]
    fn convolution_unit() {
        assert_eq!(convolve(&[1, 2, 2, 1], &[1]), vec![1, 2, 2, 1]);
        assert_eq!(convolve(&[1, 1], &[1, 0, 0, 1]), vec![1, 1, 0, 1, 1]);
        let r = CohomologyReport::from_betti(vec![1, 2, 2, 1], vec![1, 3, 3, 1]);
        let unit = CohomologyReport::from_betti(vec![1], vec![1]);
        assert!(kunneth_verify(&r, &r, &unit).holds);
    }

    #[test]
    fn tensor_complex_of_ce_complexes_matches_direct_sum() {
        let g = su2();
        let a = crate::liealg::ce_complex(&Representation::trivial(g.clone(), 1)).unwrap();
        let t = tensor_complex(&a, &a);
        let product = complex_cohomology(&t).unwrap();
        let direct = lie_cohomology(&Representation::trivial(direct_sum(&g, &g), 1)).unwrap();
        assert_eq!(product.betti, direct.betti);
        assert_eq!(product.betti, vec![1, 0, 0, 2, 0, 0, 1]);
    }

    #[test]
    fn non_cocycles_are_rejected() {
        let c = crate::liealg::ce_complex(&Representation::trivial(su2(), 1)).unwrap();
        let v = vec![int(1), int(0), int(0)];
        assert!(class_is_nonzero(&c, 1, &v).is_err());
    }
}
