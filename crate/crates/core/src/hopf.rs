//! H-structures on Lie algebras and the Hopf algebra structure they induce
//! on cohomology.
//!
//! For an abelian algebra of dimension `n` the cohomology is the exterior
//! algebra on `n` degree-one classes, and the addition map `(x, y) ↦ x + y`
//! induces `Δ(ω) = ω ⊗ 1 + 1 ⊗ ω` on generators, extended multiplicatively.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{basis, binomial, wedge, MultiIndex};
use crate::kunneth::direct_sum;
use crate::liealg::LieAlgebra;
use crate::linalg::RationalMatrix;
use crate::rational::{format_rational, Rational};

/// A linear map `H : g × g → g`, stored as a `dim × 2·dim` matrix acting on
/// `(x, y)`; the unit is the zero vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HStructure {
    pub algebra: LieAlgebra,
    pub map: RationalMatrix,
}

impl HStructure {
    pub fn addition(algebra: LieAlgebra) -> Self {
        let id = RationalMatrix::identity(algebra.dim());
        Self {
            map: id.hstack(&id),
            algebra,
        }
    }
}

/// Unit law `H(x,0) = H(0,x) = x` and `H` a Lie algebra morphism from `g ⊕ g`.
pub fn check_h_structure(h: &HStructure) -> bool {
    let n = h.algebra.dim();
    if h.map.rows() != n || h.map.cols() != 2 * n {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j {
                Rational::one()
            } else {
                Rational::zero()
            };
            if *h.map.get(i, j) != expected || *h.map.get(i, n + j) != expected {
                return false;
            }
        }
    }
    let doubled = direct_sum(&h.algebra, &h.algebra);
    for u in 0..2 * n {
        for v in u + 1..2 * n {
            let lhs = h.map.mul_vec(&doubled.basis_bracket(u, v));
            let rhs = h.algebra.bracket(&h.map.column(u), &h.map.column(v));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Element of `H ⊗ H` in the monomial basis.
pub type Tensor2 = BTreeMap<(MultiIndex, MultiIndex), Rational>;
/// Element of `H ⊗ H ⊗ H`.
pub type Tensor3 = BTreeMap<(MultiIndex, MultiIndex, MultiIndex), Rational>;
/// Element of `H`.
pub type Element = BTreeMap<MultiIndex, Rational>;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, value: Rational) {
    if value.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(Rational::zero);
    *entry += value;
}

fn prune<K: Ord>(mut map: BTreeMap<K, Rational>) -> BTreeMap<K, Rational> {
    map.retain(|_, v| !v.is_zero());
    map
}

fn parity_sign(a: usize, b: usize) -> Rational {
    if (a * b).is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} (a∧c) ⊗ (b∧d)`.
pub fn tensor_product(x: &Tensor2, y: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for ((a, b), s) in x {
        for ((c, d), t) in y {
            let (Some((s1, ac)), Some((s2, bd))) = (wedge(a, c), wedge(b, d)) else {
                continue;
            };
            let sign =
                parity_sign(b.degree(), c.degree()) * Rational::from_integer((s1 * s2).into());
            accumulate(&mut out, (ac, bd), s * t * sign);
        }
    }
    prune(out)
}

fn element_product(x: &Element, y: &Element) -> Element {
    let mut out = Element::new();
    for (a, s) in x {
        for (b, t) in y {
            if let Some((sign, ab)) = wedge(a, b) {
                accumulate(&mut out, ab, s * t * Rational::from_integer(sign.into()));
            }
        }
    }
    prune(out)
}

/// Coproduct on the exterior algebra `Λ(ℚ^generators)` with generators in
/// degree one, and the counit projecting onto degree zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCoalgebra {
    generators: usize,
    names: Vec<String>,
    /// `coproduct[r]` maps `H^r` to `⊕_{i=0..r} H^i ⊗ H^{r-i}`; block `i`
    /// starts after the earlier blocks, and inside it `x ⊗ y` sits at
    /// `pos(x) * dim H^{r-i} + pos(y)`.
    coproduct: Vec<RationalMatrix>,
}

fn block_offset(n: usize, r: usize, i: usize) -> usize {
    (0..i).map(|j| binomial(n, j) * binomial(n, r - j)).sum()
}

impl GradedCoalgebra {
    pub fn new(generators: usize, coproduct: Vec<RationalMatrix>) -> Result<Self> {
        if coproduct.len() != generators + 1 {
            return Err(Error::Dimension(format!(
                "need {} coproduct matrices, got {}",
                generators + 1,
                coproduct.len()
            )));
        }
        for (r, m) in coproduct.iter().enumerate() {
            let rows = block_offset(generators, r, r + 1);
            if m.rows() != rows || m.cols() != binomial(generators, r) {
                return Err(Error::Dimension(format!(
                    "coproduct in degree {r} has wrong shape"
                )));
            }
        }
        Ok(Self {
            generators,
            names: (1..=generators).map(|i| format!("w{i}")).collect(),
            coproduct,
        })
    }

    pub fn with_generator_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.generators, "one name per generator");
        self.names = names;
        self
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn coproduct_matrix(&self, r: usize) -> &RationalMatrix {
        &self.coproduct[r]
    }

    pub fn betti(&self) -> Vec<usize> {
        (0..=self.generators)
            .map(|r| binomial(self.generators, r))
            .collect()
    }

    /// `Δ(x)` for a basis monomial.
    pub fn apply(&self, x: &MultiIndex) -> Tensor2 {
        let n = self.generators;
        let r = x.degree();
        let col = x.position();
        let m = &self.coproduct[r];
        let mut out = Tensor2::new();
        for i in 0..=r {
            let offset = block_offset(n, r, i);
            let right = basis(n, r - i);
            for (pa, a) in basis(n, i).iter().enumerate() {
                for (pb, b) in right.iter().enumerate() {
                    let v = m.get(offset + pa * right.len() + pb, col);
                    if !v.is_zero() {
                        out.insert((a.clone(), b.clone()), v.clone());
                    }
                }
            }
        }
        out
    }

    pub fn apply_element(&self, x: &Element) -> Tensor2 {
        let mut out = Tensor2::new();
        for (m, c) in x {
            for (k, v) in self.apply(m) {
                accumulate(&mut out, k, v * c);
            }
        }
        prune(out)
    }

    fn label(&self, m: &MultiIndex) -> String {
        if m.degree() == 0 {
            "1".to_string()
        } else {
            m.indices()
                .iter()
                .map(|&i| self.names[i].as_str())
                .collect::<Vec<_>>()
                .join("∧")
        }
    }

    /// `Δ(x) = ...` with terms ordered by decreasing left degree.
    pub fn formula(&self, x: &MultiIndex) -> String {
        let mut terms: Vec<((MultiIndex, MultiIndex), Rational)> =
            self.apply(x).into_iter().collect();
        terms.sort_by(|((a, b), _), ((c, d), _)| {
            c.degree().cmp(&a.degree()).then(a.cmp(c)).then(b.cmp(d))
        });
        let mut out = String::new();
        for (idx, ((a, b), c)) in terms.iter().enumerate() {
            let negative = *c < Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            let op = match (idx, negative) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(op);
            if !magnitude.is_one() {
                out.push_str(&format_rational(&magnitude));
                out.push('*');
            }
            out.push_str(&format!("{}⊗{}", self.label(a), self.label(b)));
        }
        if out.is_empty() {
            out.push('0');
        }
        format!("Δ({}) = {out}", self.label(x))
    }
}

/// Coproduct induced by the addition map on an abelian algebra.
pub fn addition_coproduct(g: &LieAlgebra) -> Result<GradedCoalgebra> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = g.dim();
    let unit = MultiIndex::empty(n);
    let generator = |i: usize| -> Tensor2 {
        let e = MultiIndex::single(i, n);
        BTreeMap::from([
            ((e.clone(), unit.clone()), Rational::one()),
            ((unit.clone(), e), Rational::one()),
        ])
    };
    let coproduct = (0..=n)
        .map(|r| {
            let rows = block_offset(n, r, r + 1);
            let sources = basis(n, r);
            let mut m = RationalMatrix::zeros(rows, sources.len());
            for (col, x) in sources.iter().enumerate() {
                let one = BTreeMap::from([((unit.clone(), unit.clone()), Rational::one())]);
                let image = x
                    .indices()
                    .iter()
                    .fold(one, |acc, &i| tensor_product(&acc, &generator(i)));
                for ((a, b), v) in image {
                    let right = binomial(n, b.degree());
                    let row = block_offset(n, r, a.degree()) + a.position() * right + b.position();
                    m.set(row, col, v);
                }
            }
            m
        })
        .collect();
    GradedCoalgebra::new(n, coproduct)
}

/// Primitive subspace `{x : Δx = x⊗1 + 1⊗x}` per degree, as coordinate
/// vectors in the monomial basis of that degree.
pub fn primitives(c: &GradedCoalgebra) -> Vec<Vec<Vec<Rational>>> {
    let n = c.generators;
    (0..=n)
        .map(|r| {
            let mut m = c.coproduct[r].clone();
            let right_r = binomial(n, r);
            for (col, _) in basis(n, r).iter().enumerate() {
                // x⊗1 in block r (pos(x) * 1 + 0), 1⊗x in block 0 (0 * C(n,r) + pos(x))
                let left = block_offset(n, r, r) + col;
                let right = col;
                m.add_to(left, col, &-Rational::one());
                m.add_to(right, col, &-Rational::one());
            }
            debug_assert_eq!(m.cols(), right_r);
            m.kernel_basis()
        })
        .collect()
}

/// Span dimension, per degree, of all products of distinct primitive basis vectors.
pub fn generated_dimensions(c: &GradedCoalgebra, prims: &[Vec<Vec<Rational>>]) -> Vec<usize> {
    let n = c.generators;
    let mut pool: Vec<(usize, Element)> = Vec::new();
    for (r, vectors) in prims.iter().enumerate() {
        for v in vectors {
            let element: Element = basis(n, r)
                .into_iter()
                .zip(v)
                .filter(|(_, x)| !x.is_zero())
                .map(|(m, x)| (m, x.clone()))
                .collect();
            pool.push((r, element));
        }
    }
    let mut products: Vec<(usize, Element)> =
        vec![(0, BTreeMap::from([(MultiIndex::empty(n), Rational::one())]))];
    for (deg, p) in &pool {
        let extended: Vec<(usize, Element)> = products
            .iter()
            .map(|(d, e)| (d + deg, element_product(e, p)))
            .filter(|(d, e)| *d <= n && !e.is_empty())
            .collect();
        products.extend(extended);
    }
    (0..=n)
        .map(|r| {
            let rows: Vec<Vec<Rational>> = products
                .iter()
                .filter(|(d, _)| *d == r)
                .map(|(_, e)| {
                    basis(n, r)
                        .iter()
                        .map(|m| e.get(m).cloned().unwrap_or_default())
                        .collect()
                })
                .collect();
            if rows.is_empty() {
                0
            } else {
                RationalMatrix::from_rows(rows.len(), binomial(n, r), rows)
                    .expect("rectangular")
                    .rank()
            }
        })
        .collect()
}

/// Outcome of each Hopf axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub counit: bool,
    pub coassociative: bool,
    pub multiplicative: bool,
    pub antipode: bool,
    /// Whether the antipode is `(-1)^deg` on every basis monomial.
    pub antipode_is_degree_sign: bool,
}

impl HopfReport {
    pub fn holds(&self) -> bool {
        self.counit && self.coassociative && self.multiplicative && self.antipode
    }
}

fn all_monomials(n: usize) -> impl Iterator<Item = MultiIndex> {
    (0..=n).flat_map(move |r| basis(n, r))
}

fn counit_holds(c: &GradedCoalgebra) -> bool {
    all_monomials(c.generators).all(|x| {
        let image = c.apply(&x);
        let mut left = Element::new();
        let mut right = Element::new();
        for ((a, b), v) in &image {
            if a.degree() == 0 {
                accumulate(&mut left, b.clone(), v.clone());
            }
            if b.degree() == 0 {
                accumulate(&mut right, a.clone(), v.clone());
            }
        }
        let expected = BTreeMap::from([(x.clone(), Rational::one())]);
        prune(left) == expected && prune(right) == expected
    })
}

fn coassociative(c: &GradedCoalgebra) -> bool {
    all_monomials(c.generators).all(|x| {
        let mut lhs = Tensor3::new();
        let mut rhs = Tensor3::new();
        for ((a, b), v) in c.apply(&x) {
            for ((a1, a2), w) in c.apply(&a) {
                accumulate(&mut lhs, (a1, a2, b.clone()), &v * w);
            }
            for ((b1, b2), w) in c.apply(&b) {
                accumulate(&mut rhs, (a.clone(), b1, b2), &v * w);
            }
        }
        prune(lhs) == prune(rhs)
    })
}

fn multiplicative(c: &GradedCoalgebra) -> bool {
    let n = c.generators;
    let monomials: Vec<MultiIndex> = all_monomials(n).collect();
    monomials.iter().all(|x| {
        monomials.iter().all(|y| {
            let lhs = match wedge(x, y) {
                Some((sign, xy)) => {
                    let mut t = c.apply(&xy);
                    for v in t.values_mut() {
                        *v *= Rational::from_integer(sign.into());
                    }
                    t
                }
                None => Tensor2::new(),
            };
            lhs == tensor_product(&c.apply(x), &c.apply(y))
        })
    })
}

/// Antipode built degree by degree from `S(x) = -x - Σ' S(x') x''`, where
/// `Σ'` runs over the terms of `Δx` with both sides in positive degree.
pub fn antipode(c: &GradedCoalgebra) -> BTreeMap<MultiIndex, Element> {
    let n = c.generators;
    let mut s: BTreeMap<MultiIndex, Element> = BTreeMap::new();
    for x in all_monomials(n) {
        let r = x.degree();
        let value = if r == 0 {
            BTreeMap::from([(x.clone(), Rational::one())])
        } else {
            let mut acc = BTreeMap::from([(x.clone(), -Rational::one())]);
            for ((a, b), v) in c.apply(&x) {
                if a.degree() == 0 || a.degree() == r {
                    continue;
                }
                let sa = &s[&a];
                let b_elem = BTreeMap::from([(b, v)]);
                for (m, w) in element_product(sa, &b_elem) {
                    accumulate(&mut acc, m, -w);
                }
            }
            prune(acc)
        };
        s.insert(x, value);
    }
    s
}

fn antipode_holds(c: &GradedCoalgebra, s: &BTreeMap<MultiIndex, Element>) -> bool {
    let n = c.generators;
    all_monomials(n).all(|x| {
        let expected: Element = if x.degree() == 0 {
            BTreeMap::from([(x.clone(), Rational::one())])
        } else {
            Element::new()
        };
        let mut left = Element::new();
        let mut right = Element::new();
        for ((a, b), v) in c.apply(&x) {
            let a_elem = BTreeMap::from([(a.clone(), v.clone())]);
            let b_elem = BTreeMap::from([(b.clone(), v)]);
            for (m, w) in element_product(&s[&a], &b_elem) {
                accumulate(&mut left, m, w);
            }
            for (m, w) in element_product(&a_elem, &s[&b]) {
                accumulate(&mut right, m, w);
            }
        }
        prune(left) == expected && prune(right) == expected
    })
}

pub fn hopf_report(c: &GradedCoalgebra) -> HopfReport {
    let counit = counit_holds(c);
    let s = antipode(c);
    let antipode_is_degree_sign = s.iter().all(|(x, image)| {
        let sign = if x.degree() % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        *image == BTreeMap::from([(x.clone(), sign)])
    });
    HopfReport {
        counit,
        coassociative: coassociative(c),
        multiplicative: multiplicative(c),
        antipode: counit && antipode_holds(c, &s),
        antipode_is_degree_sign,
    }
}

/// Coassociativity, counit, multiplicativity of `Δ`, and an antipode.
pub fn verify_hopf(c: &GradedCoalgebra) -> bool {
    hopf_report(c).holds()
}

/// Odd generator degrees `d_1 ≤ ... ≤ d_k` with `Π (1 + t^{d_i})` equal to
/// the Poincaré polynomial of `betti`, if such a factorization exists.
pub fn exterior_structure_check(betti: &[usize]) -> Option<Vec<usize>> {
    if betti.first() != Some(&1) {
        return None;
    }
    let mut poly: Vec<i64> = betti.iter().map(|&b| b as i64).collect();
    let mut degrees = Vec::new();
    loop {
        while poly.last() == Some(&0) {
            poly.pop();
        }
        if poly.len() == 1 {
            return Some(degrees);
        }
        let d = poly.iter().skip(1).position(|&c| c != 0)? + 1;
        if d % 2 == 0 || poly[d] < 0 {
            return None;
        }
        // divide by 1 + t^d
        let mut quotient = poly.clone();
        for i in d..quotient.len() {
            quotient[i] -= quotient[i - d];
        }
        let top = quotient.len() - d;
        if quotient[top..].iter().any(|&c| c != 0) || quotient[..top].iter().any(|&c| c < 0) {
            return None;
        }
        quotient.truncate(top);
        poly = quotient;
        degrees.push(d);
    }
}
