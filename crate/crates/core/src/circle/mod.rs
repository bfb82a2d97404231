//! Lie algebroids over the circle, truncated to trigonometric windows.
//!
//! Degree `p` of a truncated complex lives on `Λ^p ⊗ V_{N + p·d}` where `d`
//! is the largest anchor degree. Multiplying by a degree-`d` anchor raises
//! frequency by at most `d`, so each differential maps window to window and
//! `d² = 0` holds exactly.

pub mod poly;
pub mod trig;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::binomial;
use crate::liealg::{ce_matrix, check_jacobi, LieAlgebra};
use crate::linalg::{complex_cohomology, CochainComplex, CohomologyReport};
pub use trig::{
    anchor_matrix, trig_derivative, trig_mul, vf_bracket, window_dim, window_inclusion, TrigPoly,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircleAlgebroid {
    /// `A = S¹ × ℝ`, anchor `f ↦ p f ∂_t`, bracket `p (f g' − g f')`.
    Rank1Anchor { p: TrigPoly },
    /// Action algebroid `g ⋉ S¹` with `e_i ↦ phi[i] ∂_t`.
    Action { g: LieAlgebra, phi: Vec<TrigPoly> },
}

impl CircleAlgebroid {
    /// Largest degree among the anchor coefficients.
    pub fn anchor_degree(&self) -> usize {
        match self {
            Self::Rank1Anchor { p } => p.degree(),
            Self::Action { phi, .. } => phi.iter().map(TrigPoly::degree).max().unwrap_or(0),
        }
    }

    /// Rank of the bundle `A`.
    pub fn rank(&self) -> usize {
        match self {
            Self::Rank1Anchor { .. } => 1,
            Self::Action { g, .. } => g.dim(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Rank1Anchor { .. } => Ok(()),
            Self::Action { g, phi } => {
                if phi.len() != g.dim() {
                    return Err(Error::Dimension(format!(
                        "action needs {} vector fields, got {}",
                        g.dim(),
                        phi.len()
                    )));
                }
                if !check_jacobi(g) {
                    return Err(Error::JacobiViolated);
                }
                if !check_action(g, phi) {
                    return Err(Error::NotAnAction);
                }
                Ok(())
            }
        }
    }
}

/// `[φ_i, φ_j] = Σ_k c^k_{ij} φ_k` as vector fields, for all `i < j`.
pub fn check_action(g: &LieAlgebra, phi: &[TrigPoly]) -> bool {
    if phi.len() != g.dim() {
        return false;
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let image = (0..g.dim()).fold(TrigPoly::zero(), |acc, k| {
                let c = g.constant(i, j, k);
                if c.is_zero() {
                    acc
                } else {
                    acc.add(&phi[k].scale(&c))
                }
            });
            if vf_bracket(&phi[i], &phi[j]) != image {
                return false;
            }
        }
    }
    true
}

/// Distinct zeros on `[0, 2π)`, ignoring multiplicity.
fn distinct_zeros(p: &TrigPoly) -> usize {
    let at_pi = usize::from(p.eval_at_pi().is_zero());
    p.weierstrass().count_real_roots() + at_pi
}

/// Exact number of zeros on `[0, 2π)`; every zero must be simple.
pub fn count_simple_zeros(p: &TrigPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let w = p.weierstrass();
    let repeated = w.gcd(&w.derivative());
    if repeated.count_real_roots() > 0 {
        return Err(Error::NonsimpleZero);
    }
    if p.eval_at_pi().is_zero() && p.derivative().eval_at_pi().is_zero() {
        return Err(Error::NonsimpleZero);
    }
    Ok(distinct_zeros(p))
}

/// Whether the anchor is surjective at every point of the circle.
pub fn is_transitive(a: &CircleAlgebroid) -> bool {
    let q = match a {
        CircleAlgebroid::Rank1Anchor { p } => p.clone(),
        CircleAlgebroid::Action { phi, .. } => phi
            .iter()
            .fold(TrigPoly::zero(), |acc, p| acc.add(&p.mul(p))),
    };
    !q.is_zero() && distinct_zeros(&q) == 0
}

/// A truncated complex together with its window parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedComplex {
    pub n: usize,
    pub window_step: usize,
    pub complex: CochainComplex,
}

impl TruncatedComplex {
    /// Frequency bound of the window carrying degree `p`.
    pub fn window(&self, p: usize) -> usize {
        self.n + p * self.window_step
    }
}

/// The complex of `a` restricted to windows starting at `V_N`.
pub fn truncated_complex(a: &CircleAlgebroid, n: usize) -> Result<TruncatedComplex> {
    if n == 0 {
        return Err(Error::InvalidWindowRange { n_min: n, n_max: n });
    }
    a.validate()?;
    let d = a.anchor_degree();
    let complex = match a {
        CircleAlgebroid::Rank1Anchor { p } => CochainComplex::new(
            vec![window_dim(n), window_dim(n + d)],
            vec![anchor_matrix(p, n, n + d)],
        )?,
        CircleAlgebroid::Action { g, phi } => {
            let rank = g.dim();
            let degrees = (0..=rank)
                .map(|p| binomial(rank, p) * window_dim(n + p * d))
                .collect();
            let differentials = (0..rank)
                .map(|p| {
                    let (src, dst) = (n + p * d, n + (p + 1) * d);
                    let action: Vec<_> = phi.iter().map(|f| anchor_matrix(f, src, dst)).collect();
                    ce_matrix(
                        g,
                        p,
                        window_dim(src),
                        window_dim(dst),
                        &action,
                        &window_inclusion(src, dst),
                    )
                })
                .collect();
            CochainComplex::new(degrees, differentials)?
        }
    };
    Ok(TruncatedComplex {
        n,
        window_step: d,
        complex,
    })
}

/// One window of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub betti: Vec<usize>,
    pub euler: i64,
}

/// Result of a stabilized sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizedCohomology {
    /// Report at the largest window.
    pub report: CohomologyReport,
    pub stabilized: bool,
    pub table: Vec<SweepRow>,
}

/// Number of trailing windows that must agree.
pub const STABILIZATION_WINDOWS: usize = 3;

/// Betti numbers over `N = n_min..=n_max`; succeeds when the last three
/// windows agree, otherwise returns the table inside `NotStabilized`.
pub fn stabilized_cohomology(
    a: &CircleAlgebroid,
    n_min: usize,
    n_max: usize,
) -> Result<StabilizedCohomology> {
    if n_min == 0 || n_max < n_min + STABILIZATION_WINDOWS - 1 {
        return Err(Error::InvalidWindowRange { n_min, n_max });
    }
    a.validate()?;
    let reports = (n_min..=n_max)
        .into_par_iter()
        .map(|n| complex_cohomology(&truncated_complex(a, n)?.complex))
        .collect::<Result<Vec<_>>>()?;
    let table: Vec<SweepRow> = (n_min..=n_max)
        .zip(&reports)
        .map(|(n, r)| SweepRow {
            n,
            betti: r.betti.clone(),
            euler: r.euler,
        })
        .collect();
    let tail = &table[table.len() - STABILIZATION_WINDOWS..];
    if tail.windows(2).any(|w| w[0].betti != w[1].betti) {
        return Err(Error::NotStabilized { table });
    }
    Ok(StabilizedCohomology {
        report: reports.last().expect("nonempty range").clone(),
        stabilized: true,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::BracketEntry;
    use crate::rational::int;

    fn sl2() -> LieAlgebra {
        let e = |i, j, k, c| BracketEntry {
            i,
            j,
            coeffs: vec![(k, int(c))],
        };
        LieAlgebra::new(3, vec![e(0, 1, 2, -2), e(0, 2, 1, 2), e(1, 2, 0, 2)], None).unwrap()
    }

    fn su2() -> LieAlgebra {
        let e = |i, j, k, c| BracketEntry {
            i,
            j,
            coeffs: vec![(k, int(c))],
        };
        LieAlgebra::new(3, vec![e(0, 1, 2, 1), e(1, 2, 0, 1), e(0, 2, 1, -1)], None).unwrap()
    }

    fn sl2_phi() -> Vec<TrigPoly> {
        vec![
            TrigPoly::constant(int(1)),
            TrigPoly::cos(2, int(1)),
            TrigPoly::sin(2, int(1)),
        ]
    }

    #[test]
    fn action_examples() {
        assert!(check_action(
            &LieAlgebra::abelian(1),
            &[TrigPoly::constant(int(1))]
        ));
        assert!(check_action(&sl2(), &sl2_phi()));
        assert!(!check_action(&su2(), &sl2_phi()));
    }

    #[test]
    fn transitivity_examples() {
        let one = CircleAlgebroid::Rank1Anchor {
            p: TrigPoly::constant(int(1)),
        };
        let sin = CircleAlgebroid::Rank1Anchor {
            p: TrigPoly::sin(1, int(1)),
        };
        let action = CircleAlgebroid::Action {
            g: sl2(),
            phi: sl2_phi(),
        };
        assert!(is_transitive(&one));
        assert!(!is_transitive(&sin));
        assert!(is_transitive(&action));
        assert!(!is_transitive(&CircleAlgebroid::Rank1Anchor {
            p: TrigPoly::zero()
        }));
    }

    #[test]
    fn zero_counts() {
        assert_eq!(count_simple_zeros(&TrigPoly::sin(1, int(1))), Ok(2));
        assert_eq!(count_simple_zeros(&TrigPoly::sin(2, int(1))), Ok(4));
        let shifted: TrigPoly = "2 + 1*cos(1t)".parse().unwrap();
        assert_eq!(count_simple_zeros(&shifted), Ok(0));
        // 1 + cos t has a double zero at π
        let double: TrigPoly = "1 + 1*cos(1t)".parse().unwrap();
        assert_eq!(count_simple_zeros(&double), Err(Error::NonsimpleZero));
        // sin² t has double zeros at 0 and π
        let sq = TrigPoly::sin(1, int(1)).mul(&TrigPoly::sin(1, int(1)));
        assert_eq!(count_simple_zeros(&sq), Err(Error::NonsimpleZero));
        assert_eq!(
            count_simple_zeros(&TrigPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn truncated_examples() {
        let one = CircleAlgebroid::Rank1Anchor {
            p: TrigPoly::constant(int(1)),
        };
        let t = truncated_complex(&one, 3).unwrap();
        let d = &t.complex.differentials()[0];
        assert_eq!((d.rows(), d.cols()), (7, 7));
        assert_eq!((d.kernel_dim(), d.cokernel_dim()), (1, 1));

        let sin = CircleAlgebroid::Rank1Anchor {
            p: TrigPoly::sin(1, int(1)),
        };
        let t = truncated_complex(&sin, 2).unwrap();
        assert_eq!(t.complex.degrees(), &[5, 7]);
        assert_eq!(t.complex.differentials()[0].rank(), 4);

        let line = CircleAlgebroid::Action {
            g: LieAlgebra::abelian(1),
            phi: vec![TrigPoly::constant(int(1))],
        };
        let t = truncated_complex(&line, 2).unwrap();
        assert_eq!(
            t.complex.differentials()[0],
            anchor_matrix(&TrigPoly::constant(int(1)), 2, 2)
        );
    }

    #[test]
    fn sweep_requires_three_windows() {
        let one = CircleAlgebroid::Rank1Anchor {
            p: TrigPoly::constant(int(1)),
        };
        assert!(matches!(
            stabilized_cohomology(&one, 3, 4),
            Err(Error::InvalidWindowRange { .. })
        ));
        let s = stabilized_cohomology(&one, 3, 6).unwrap();
        assert_eq!((s.report.betti.clone(), s.report.euler), (vec![1, 1], 0));
        assert_eq!(s.table.len(), 4);
    }

    #[test]
    fn invalid_action_is_rejected() {
        let bad = CircleAlgebroid::Action {
            g: su2(),
            phi: sl2_phi(),
        };
        assert_eq!(truncated_complex(&bad, 2), Err(Error::NotAnAction));
    }
}
