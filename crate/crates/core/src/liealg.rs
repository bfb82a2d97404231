//! Finite-dimensional Lie algebras over ℚ, their representations, and
//! Chevalley–Eilenberg complexes.
//!
//! # Sign convention
//!
//! With `e^0, ..., e^{n-1}` the dual basis and `ρ_i` the action of `e_i`,
//! the differential on `E ⊗ Λ^p g*` is
//!
//! ```text
//! d(v ⊗ e^I) = Σ_i (ρ_i v) ⊗ e^i ∧ e^I  +  Σ_s (-1)^s v ⊗ (d e^{I_s}) ∧ e^{I \ I_s}
//! d e^k      = -Σ_{a<b} c^k_{ab} e^a ∧ e^b
//! ```
//!
//! which is the degree-0 rule `(dv)(ξ) = ρ_ξ v`, the degree-1 rule
//! `dω(ξ,ξ') = ρ_ξ ω(ξ') - ρ_ξ' ω(ξ) - ω([ξ,ξ'])`, and the graded Leibniz
//! rule. Forms are evaluated with the determinant pairing
//! `e^I(e_{I}) = 1`. Basis element `v_a ⊗ e^I` sits at position
//! `pos(I) * dim E + a`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{basis, binomial, wedge, MultiIndex};
use crate::linalg::{complex_cohomology, CochainComplex, CohomologyReport, RationalMatrix};
use crate::rational::Rational;

/// Structure constants `[e_i, e_j] = Σ_k c^k_{ij} e_k`, stored for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// One row per pair `i < j` in lexicographic order, each of length `dim`.
    constants: Vec<Vec<Rational>>,
    name: Option<String>,
}

/// One bracket entry as given by a user: `[e_i, e_j] = Σ coeff * e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<(usize, Rational)>,
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    MultiIndex::new(vec![i, j], dim)
        .expect("i < j < dim")
        .position()
}

impl LieAlgebra {
    /// Builds an algebra from bracket entries. Each unordered pair may appear
    /// once, written with `i < j`; repeated `k` within an entry accumulate.
    pub fn new(dim: usize, entries: Vec<BracketEntry>, name: Option<String>) -> Result<Self> {
        let mut constants = vec![vec![Rational::zero(); dim]; binomial(dim, 2)];
        let mut seen = vec![false; constants.len()];
        for entry in entries {
            if entry.i >= entry.j || entry.j >= dim {
                return Err(Error::Dimension(format!(
                    "bracket [{}, {}] must satisfy i < j < dim = {dim}",
                    entry.i, entry.j
                )));
            }
            let idx = pair_index(dim, entry.i, entry.j);
            if seen[idx] {
                return Err(Error::Dimension(format!(
                    "bracket [{}, {}] given twice",
                    entry.i, entry.j
                )));
            }
            seen[idx] = true;
            for (k, c) in entry.coeffs {
                if k >= dim {
                    return Err(Error::Dimension(format!(
                        "bracket [{}, {}] has component e_{k} outside dim {dim}",
                        entry.i, entry.j
                    )));
                }
                constants[idx][k] += c;
            }
        }
        Ok(Self {
            dim,
            constants,
            name,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            constants: vec![vec![Rational::zero(); dim]; binomial(dim, 2)],
            name: Some(format!("R^{dim}")),
        }
    }

    /// The zero algebra.
    pub fn zero() -> Self {
        Self::abelian(0).with_name("0")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// `c^k_{ij}` for any `i, j`, with antisymmetry applied.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.constants[pair_index(self.dim, i, j)][k].clone(),
            std::cmp::Ordering::Greater => -self.constants[pair_index(self.dim, j, i)][k].clone(),
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.constant(i, j, k)).collect()
    }

    /// Bracket of arbitrary coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let coeff = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += &coeff * c;
                    }
                }
            }
        }
        out
    }

    /// Stored entries `(i, j, [(k, c)])` with `i < j`, zeros omitted.
    pub fn entries(&self) -> Vec<BracketEntry> {
        basis(self.dim, 2)
            .iter()
            .zip(&self.constants)
            .filter_map(|(pair, row)| {
                let coeffs: Vec<(usize, Rational)> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                (!coeffs.is_empty()).then(|| BracketEntry {
                    i: pair.indices()[0],
                    j: pair.indices()[1],
                    coeffs,
                })
            })
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().flatten().all(Zero::is_zero)
    }

    /// Matrix of `ad_{e_i}`: column `j` holds `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let c = self.constant(i, j, k);
                if !c.is_zero() {
                    m.set(k, j, c);
                }
            }
        }
        m
    }

    /// The same algebra in the basis `f_a = Σ_i t[i][a] e_i`.
    pub fn change_basis(&self, t: &RationalMatrix) -> Result<Self> {
        let inv = t
            .inverse()
            .ok_or_else(|| Error::Dimension("basis change must be invertible".into()))?;
        if t.rows() != self.dim {
            return Err(Error::Dimension("basis change has wrong size".into()));
        }
        let mut entries = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let bracket = self.bracket(&t.column(a), &t.column(b));
                let coords = inv.mul_vec(&bracket);
                let coeffs = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                entries.push(BracketEntry { i: a, j: b, coeffs });
            }
        }
        Self::new(self.dim, entries, self.name.clone())
    }
}

/// `Σ_cyclic [[e_i, e_j], e_k] = 0` for every triple.
pub fn check_jacobi(g: &LieAlgebra) -> bool {
    let n = g.dim;
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let a = g.bracket(&g.basis_bracket(i, j), &unit(k));
                let b = g.bracket(&g.basis_bracket(j, k), &unit(i));
                let c = g.bracket(&g.basis_bracket(k, i), &unit(j));
                if a.iter()
                    .zip(&b)
                    .zip(&c)
                    .any(|((x, y), z)| !(x + y + z).is_zero())
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Action matrices `ρ_i` of the basis elements on `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    dim_e: usize,
    action: Vec<RationalMatrix>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, dim_e: usize, action: Vec<RationalMatrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Dimension(format!(
                "need {} action matrices, got {}",
                algebra.dim(),
                action.len()
            )));
        }
        if action
            .iter()
            .any(|m| m.rows() != dim_e || m.cols() != dim_e)
        {
            return Err(Error::Dimension(format!(
                "action matrices must be {dim_e}x{dim_e}"
            )));
        }
        Ok(Self {
            algebra,
            dim_e,
            action,
        })
    }

    /// `E = ℚ^k` with every basis element acting by zero.
    pub fn trivial(algebra: LieAlgebra, dim_e: usize) -> Self {
        let action = vec![RationalMatrix::zeros(dim_e, dim_e); algebra.dim()];
        Self {
            algebra,
            dim_e,
            action,
        }
    }

    pub fn adjoint(algebra: LieAlgebra) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.ad(i)).collect();
        let dim_e = algebra.dim();
        Self {
            algebra,
            dim_e,
            action,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim_e(&self) -> usize {
        self.dim_e
    }

    pub fn action(&self) -> &[RationalMatrix] {
        &self.action
    }

    /// The same representation after `change_basis(t)` on the algebra.
    pub fn change_basis(&self, t: &RationalMatrix) -> Result<Self> {
        let algebra = self.algebra.change_basis(t)?;
        let action = (0..self.algebra.dim())
            .map(|a| {
                (0..self.algebra.dim())
                    .fold(RationalMatrix::zeros(self.dim_e, self.dim_e), |acc, i| {
                        &acc + &self.action[i].scale(t.get(i, a))
                    })
            })
            .collect();
        Self::new(algebra, self.dim_e, action)
    }
}

/// `ρ_{[e_i,e_j]} = ρ_i ρ_j − ρ_j ρ_i` for all `i < j`.
pub fn check_representation(r: &Representation) -> bool {
    let g = &r.algebra;
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let commutator = &(&r.action[i] * &r.action[j]) - &(&r.action[j] * &r.action[i]);
            let image = (0..g.dim()).fold(RationalMatrix::zeros(r.dim_e, r.dim_e), |acc, k| {
                let c = g.constant(i, j, k);
                if c.is_zero() {
                    acc
                } else {
                    &acc + &r.action[k].scale(&c)
                }
            });
            if commutator != image {
                return false;
            }
        }
    }
    true
}

/// Matrix of the CE differential `Λ^p ⊗ E_src -> Λ^{p+1} ⊗ E_dst` where the
/// coefficient space may change between degrees. `action[i]` is the operator
/// of `e_i` from `E_src` to `E_dst` and `inclusion` embeds `E_src` in `E_dst`.
pub(crate) fn ce_matrix(
    g: &LieAlgebra,
    p: usize,
    src_dim: usize,
    dst_dim: usize,
    action: &[RationalMatrix],
    inclusion: &RationalMatrix,
) -> RationalMatrix {
    let n = g.dim();
    let sources = basis(n, p);
    let targets = binomial(n, p + 1);
    let mut out = RationalMatrix::zeros(targets * dst_dim, sources.len() * src_dim);
    let mut add_block = |row_block: usize, col_block: usize, m: &RationalMatrix, f: &Rational| {
        for r in 0..dst_dim {
            for c in 0..src_dim {
                let v = m.get(r, c);
                if !v.is_zero() {
                    out.add_to(row_block * dst_dim + r, col_block * src_dim + c, &(v * f));
                }
            }
        }
    };
    let pairs = basis(n, 2);
    for (col, src) in sources.iter().enumerate() {
        for (i, rho) in action.iter().enumerate() {
            if let Some((sign, target)) = wedge(&MultiIndex::single(i, n), src) {
                add_block(
                    target.position(),
                    col,
                    rho,
                    &Rational::from_integer(sign.into()),
                );
            }
        }
        for s in 0..p {
            let k = src.indices()[s];
            let rest = src.without_position(s);
            let position_sign = if s % 2 == 0 { 1 } else { -1 };
            for pair in &pairs {
                let c = g.constant(pair.indices()[0], pair.indices()[1], k);
                if c.is_zero() {
                    continue;
                }
                if let Some((sign, target)) = wedge(pair, &rest) {
                    let factor = -c * Rational::from_integer((sign * position_sign).into());
                    add_block(target.position(), col, inclusion, &factor);
                }
            }
        }
    }
    out
}

/// `d_p : E ⊗ Λ^p g* -> E ⊗ Λ^{p+1} g*`.
pub fn ce_differential(r: &Representation, p: usize) -> Result<RationalMatrix> {
    let n = r.algebra.dim();
    if p > n {
        return Err(Error::DegreeOutOfRange { degree: p, top: n });
    }
    Ok(ce_matrix(
        &r.algebra,
        p,
        r.dim_e,
        r.dim_e,
        &r.action,
        &RationalMatrix::identity(r.dim_e),
    ))
}

fn validate(r: &Representation) -> Result<()> {
    if !check_jacobi(&r.algebra) {
        return Err(Error::JacobiViolated);
    }
    if !check_representation(r) {
        return Err(Error::NotARepresentation);
    }
    Ok(())
}

/// The full CE complex, degrees `dim E * C(n, p)` for `p = 0..=n`.
pub fn ce_complex(r: &Representation) -> Result<CochainComplex> {
    validate(r)?;
    let n = r.algebra.dim();
    let degrees = (0..=n).map(|p| r.dim_e * binomial(n, p)).collect();
    let differentials = (0..n)
        .map(|p| ce_differential(r, p))
        .collect::<Result<Vec<_>>>()?;
    CochainComplex::new(degrees, differentials)
}

/// Betti numbers and Euler characteristic of `H^•(g, E)`.
pub fn lie_cohomology(r: &Representation) -> Result<CohomologyReport> {
    complex_cohomology(&ce_complex(r)?)
}
