//! Trigonometric polynomials with rational coefficients.
//!
//! Window `V_m` is the span of `1, cos t, sin t, ..., cos mt, sin mt` with
//! coordinates ordered `[1, cos 1t, sin 1t, cos 2t, sin 2t, ...]`, so
//! `V_m ⊂ V_{m+1}` is zero padding.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrigPoly {
    constant: Rational,
    /// `cos[k-1]` multiplies `cos kt`.
    cos: Vec<Rational>,
    /// `sin[k-1]` multiplies `sin kt`.
    sin: Vec<Rational>,
}

impl TrigPoly {
    pub fn new(constant: Rational, mut cos: Vec<Rational>, mut sin: Vec<Rational>) -> Self {
        let len = cos.len().max(sin.len());
        cos.resize(len, Rational::zero());
        sin.resize(len, Rational::zero());
        let mut out = Self { constant, cos, sin };
        out.trim();
        out
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn constant(c: Rational) -> Self {
        Self {
            constant: c,
            cos: Vec::new(),
            sin: Vec::new(),
        }
    }

    pub fn cos(k: usize, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_cos(k as i64, &c);
        out.trim();
        out
    }

    pub fn sin(k: usize, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_sin(k as i64, &c);
        out.trim();
        out
    }

    fn trim(&mut self) {
        while self.cos.last().is_some_and(Zero::is_zero)
            && self.sin.last().is_some_and(Zero::is_zero)
        {
            self.cos.pop();
            self.sin.pop();
        }
    }

    fn grow(&mut self, k: usize) {
        if self.cos.len() < k {
            self.cos.resize(k, Rational::zero());
            self.sin.resize(k, Rational::zero());
        }
    }

    /// Adds `c cos(kt)`; `k` may be negative or zero.
    fn add_cos(&mut self, k: i64, c: &Rational) {
        let k = k.unsigned_abs() as usize;
        if k == 0 {
            self.constant += c;
        } else {
            self.grow(k);
            self.cos[k - 1] += c;
        }
    }

    /// Adds `c sin(kt)`; `k` may be negative or zero.
    fn add_sin(&mut self, k: i64, c: &Rational) {
        if k == 0 {
            return;
        }
        let sign_flip = k < 0;
        let k = k.unsigned_abs() as usize;
        self.grow(k);
        if sign_flip {
            self.sin[k - 1] -= c;
        } else {
            self.sin[k - 1] += c;
        }
    }

    pub fn degree(&self) -> usize {
        self.cos.len()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.cos.is_empty()
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    /// Coefficient of `cos kt` (`k >= 1`).
    pub fn cos_coeff(&self, k: usize) -> Rational {
        self.cos.get(k - 1).cloned().unwrap_or_default()
    }

    /// Coefficient of `sin kt` (`k >= 1`).
    pub fn sin_coeff(&self, k: usize) -> Rational {
        self.sin.get(k - 1).cloned().unwrap_or_default()
    }

    /// `(kind, k, coeff)` terms with `kind` true for cosine; the constant is `cos 0t`.
    fn terms(&self) -> impl Iterator<Item = (bool, i64, &Rational)> {
        std::iter::once((true, 0, &self.constant))
            .chain(
                self.cos
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (true, i as i64 + 1, c)),
            )
            .chain(
                self.sin
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (false, i as i64 + 1, c)),
            )
            .filter(|(_, _, c)| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (is_cos, k, c) in other.terms() {
            if is_cos {
                out.add_cos(k, c);
            } else {
                out.add_sin(k, c);
            }
        }
        out.trim();
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(
            &self.constant * c,
            self.cos.iter().map(|v| v * c).collect(),
            self.sin.iter().map(|v| v * c).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Product via the product-to-sum identities.
    pub fn mul(&self, other: &Self) -> Self {
        let half = Rational::new(1.into(), 2.into());
        let mut out = Self::zero();
        for (a_cos, a, x) in self.terms() {
            for (b_cos, b, y) in other.terms() {
                let c = x * y * &half;
                match (a_cos, b_cos) {
                    (true, true) => {
                        out.add_cos(a - b, &c);
                        out.add_cos(a + b, &c);
                    }
                    (false, false) => {
                        out.add_cos(a - b, &c);
                        out.add_cos(a + b, &-c.clone());
                    }
                    (false, true) => {
                        out.add_sin(a + b, &c);
                        out.add_sin(a - b, &c);
                    }
                    (true, false) => {
                        out.add_sin(a + b, &c);
                        out.add_sin(a - b, &-c.clone());
                    }
                }
            }
        }
        out.trim();
        out
    }

    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (is_cos, k, c) in self.terms() {
            let kc = c * Rational::from_integer(k.into());
            if is_cos {
                out.add_sin(k, &-kc);
            } else {
                out.add_cos(k, &kc);
            }
        }
        out.trim();
        out
    }

    /// Coordinates in `V_m`; `None` if the degree exceeds `m`.
    pub fn to_window(&self, m: usize) -> Option<Vec<Rational>> {
        if self.degree() > m {
            return None;
        }
        let mut v = vec![Rational::zero(); window_dim(m)];
        v[0] = self.constant.clone();
        for k in 1..=self.degree() {
            v[2 * k - 1] = self.cos[k - 1].clone();
            v[2 * k] = self.sin[k - 1].clone();
        }
        Some(v)
    }

    pub fn from_window(v: &[Rational]) -> Self {
        assert!(v.len() % 2 == 1, "window coordinates have odd length");
        let m = v.len() / 2;
        Self::new(
            v[0].clone(),
            (1..=m).map(|k| v[2 * k - 1].clone()).collect(),
            (1..=m).map(|k| v[2 * k].clone()).collect(),
        )
    }

    /// `(1+u²)^deg · p(2 arctan u)` as a polynomial in `u`.
    pub(crate) fn weierstrass(&self) -> Poly {
        let d = self.degree();
        let one_plus_u2 = Poly::new(vec![Rational::one(), Rational::zero(), Rational::one()]);
        let mut out = Poly::constant(self.constant.clone()).mul(&one_plus_u2.pow(d));
        // (1 + iu)^{2k} = re + i·im
        let mut re = Poly::constant(Rational::one());
        let mut im = Poly::zero();
        let u = Poly::monomial(Rational::one(), 1);
        for k in 1..=d {
            for _ in 0..2 {
                let new_re = re.sub(&u.mul(&im));
                let new_im = im.add(&u.mul(&re));
                re = new_re;
                im = new_im;
            }
            let factor = one_plus_u2.pow(d - k);
            let term = re
                .scale(&self.cos[k - 1])
                .add(&im.scale(&self.sin[k - 1]))
                .mul(&factor);
            out = out.add(&term);
        }
        out
    }

    /// Exact value at `t = 2 arctan(u)`, where `cos t` and `sin t` are rational.
    pub fn eval_tan_half(&self, u: &Rational) -> Rational {
        let denom = (Rational::one() + u * u).pow(self.degree() as i32);
        self.weierstrass().eval(u) / denom
    }

    /// Exact value at `t = π`.
    pub fn eval_at_pi(&self) -> Rational {
        self.cos
            .iter()
            .enumerate()
            .fold(self.constant.clone(), |acc, (i, c)| {
                if i % 2 == 0 {
                    acc - c
                } else {
                    acc + c
                }
            })
    }
}

pub fn window_dim(m: usize) -> usize {
    2 * m + 1
}

/// Matrix of `f ↦ p · f'` from `V_src` to `V_dst`; `dst >= src + deg p`.
pub fn anchor_matrix(p: &TrigPoly, src: usize, dst: usize) -> RationalMatrix {
    assert!(dst >= src + p.degree(), "target window too small");
    let mut m = RationalMatrix::zeros(window_dim(dst), window_dim(src));
    for col in 0..window_dim(src) {
        let mut e = vec![Rational::zero(); window_dim(src)];
        e[col] = Rational::one();
        let image = p.mul(&TrigPoly::from_window(&e).derivative());
        for (row, v) in image
            .to_window(dst)
            .expect("degree bounded")
            .into_iter()
            .enumerate()
        {
            if !v.is_zero() {
                m.set(row, col, v);
            }
        }
    }
    m
}

/// Inclusion `V_src ⊂ V_dst`.
pub fn window_inclusion(src: usize, dst: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(window_dim(dst), window_dim(src));
    for i in 0..window_dim(src) {
        m.set(i, i, Rational::one());
    }
    m
}

/// `[u∂, v∂] = (u v' − v u')∂`, returning the coefficient.
pub fn vf_bracket(u: &TrigPoly, v: &TrigPoly) -> TrigPoly {
    u.mul(&v.derivative()).sub(&v.mul(&u.derivative()))
}

pub fn trig_mul(f: &TrigPoly, g: &TrigPoly) -> TrigPoly {
    f.mul(g)
}

pub fn trig_derivative(f: &TrigPoly) -> TrigPoly {
    f.derivative()
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant.is_zero() {
            parts.push(format_rational(&self.constant));
        }
        for k in 1..=self.degree() {
            let (c, s) = (&self.cos[k - 1], &self.sin[k - 1]);
            if !c.is_zero() {
                parts.push(format!("{}*cos({k}t)", format_rational(c)));
            }
            if !s.is_zero() {
                parts.push(format!("{}*sin({k}t)", format_rational(s)));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn parse_frequency(arg: &str, term: &str) -> Result<usize> {
    let inner = arg
        .strip_suffix("t)")
        .ok_or_else(|| Error::Parse(format!("expected `(kt)` in term `{term}`")))?;
    if inner.is_empty() {
        return Ok(1);
    }
    if !inner.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid frequency in term `{term}`")));
    }
    let k: usize = inner
        .parse()
        .map_err(|_| Error::Parse(format!("frequency too large in term `{term}`")))?;
    if k == 0 || k > MAX_FREQUENCY {
        return Err(Error::Parse(format!(
            "frequency must be in 1..={MAX_FREQUENCY} in term `{term}`"
        )));
    }
    Ok(k)
}

/// Largest frequency accepted by the parser.
pub const MAX_FREQUENCY: usize = 4096;

impl FromStr for TrigPoly {
    type Err = Error;

    /// Sum of terms `c`, `c*cos(kt)`, `c*sin(kt)`, `cos(kt)`, `sin(kt)`
    /// separated by `+`; negative coefficients are written `+ -c*...`.
    fn from_str(text: &str) -> Result<Self> {
        let mut out = Self::zero();
        if text.trim().is_empty() {
            return Err(Error::Parse("empty trigonometric polynomial".into()));
        }
        for raw in text.split('+') {
            let term = raw.trim();
            let (coeff, func) = match term.split_once('*') {
                Some((c, f)) => (parse_rational(c.trim())?, Some(f.trim())),
                None if term.starts_with("cos(") || term.starts_with("sin(") => {
                    (Rational::one(), Some(term))
                }
                None => (parse_rational(term)?, None),
            };
            match func {
                None => out.add_cos(0, &coeff),
                Some(f) => {
                    if let Some(arg) = f.strip_prefix("cos(") {
                        out.add_cos(parse_frequency(arg, term)? as i64, &coeff);
                    } else if let Some(arg) = f.strip_prefix("sin(") {
                        out.add_sin(parse_frequency(arg, term)? as i64, &coeff);
                    } else {
                        return Err(Error::Parse(format!("unknown function in term `{term}`")));
                    }
                }
            }
        }
        out.trim();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn tp(s: &str) -> TrigPoly {
        s.parse().unwrap()
    }

    #[test]
    fn product_examples() {
        let sin = TrigPoly::sin(1, int(1));
        let cos = TrigPoly::cos(1, int(1));
        assert_eq!(sin.mul(&sin), tp("1/2 + -1/2*cos(2t)"));
        assert_eq!(cos.mul(&sin), TrigPoly::sin(2, frac(1, 2)));
        let f = tp("3 + 2*cos(1t) + -1*sin(3t)");
        assert_eq!(TrigPoly::constant(int(1)).mul(&f), f);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            TrigPoly::sin(1, int(1)).derivative(),
            TrigPoly::cos(1, int(1))
        );
        assert!(TrigPoly::constant(int(5)).derivative().is_zero());
        assert_eq!(
            TrigPoly::cos(3, int(1)).derivative(),
            TrigPoly::sin(3, int(-3))
        );
    }

    #[test]
    fn bracket_examples() {
        let one = TrigPoly::constant(int(1));
        let c2 = TrigPoly::cos(2, int(1));
        let s2 = TrigPoly::sin(2, int(1));
        assert_eq!(vf_bracket(&one, &c2), TrigPoly::sin(2, int(-2)));
        assert!(vf_bracket(&c2, &c2).is_zero());
        assert_eq!(vf_bracket(&c2, &s2), TrigPoly::constant(int(2)));
    }

    #[test]
    fn display_parse_round_trip() {
        let f = tp("-1/2 + 3*cos(1t) + sin(t) + 0*cos(4t) + 2*sin(2t) + 1*sin(2t)");
        assert_eq!(f.to_string(), "-1/2 + 3*cos(1t) + 1*sin(1t) + 3*sin(2t)");
        assert_eq!(tp(&f.to_string()), f);
        assert_eq!(TrigPoly::zero().to_string(), "0");
        assert_eq!(f.degree(), 2);
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "1 +",
            "2*tan(1t)",
            "cos(0t)",
            "x",
            "1*cos(1)",
            "cos(-1t)",
        ] {
            assert!(bad.parse::<TrigPoly>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn weierstrass_matches_known_values() {
        // at u = 1, t = π/2: sin = 1, cos = 0, cos 2t = -1, sin 2t = 0
        let f = tp("1 + 2*cos(1t) + 3*sin(1t) + 5*cos(2t) + 7*sin(2t)");
        assert_eq!(f.eval_tan_half(&int(1)), int(1 + 3 - 5));
        assert_eq!(f.eval_tan_half(&int(0)), int(1 + 2 + 5));
        assert_eq!(f.eval_at_pi(), int(1 - 2 + 5));
    }

    #[test]
    fn anchor_matrix_of_sin_has_rank_four() {
        let m = anchor_matrix(&TrigPoly::sin(1, int(1)), 2, 3);
        assert_eq!((m.rows(), m.cols()), (7, 5));
        assert_eq!(m.rank(), 4);
        assert_eq!(m.cokernel_dim(), 3);
    }
}
