//! Brute-force reference implementations. Nothing here calls the library:
//! cochains are evaluated on tuples of basis vectors, ranks come from plain
//! Gauss-Jordan elimination, and circle operators act on complex Fourier
//! coefficients.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Structure constants as a full `c[i][j][k]` cube.
#[derive(Clone, Debug)]
pub struct Alg {
    pub dim: usize,
    pub c: Vec<Vec<Vec<Q>>>,
}

impl Alg {
    /// From `[e_i, e_j] = v e_k` triples; antisymmetry filled in.
    pub fn new(dim: usize, brackets: &[(usize, usize, usize, i64)]) -> Self {
        let mut c = vec![vec![vec![Q::zero(); dim]; dim]; dim];
        for &(i, j, k, v) in brackets {
            c[i][j][k] += q(v);
            c[j][i][k] -= q(v);
        }
        Self { dim, c }
    }

    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim;
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    for out in 0..n {
                        let mut s = Q::zero();
                        for m in 0..n {
                            s += &self.c[b][cc][m] * &self.c[a][m][out];
                            s += &self.c[cc][a][m] * &self.c[b][m][out];
                            s += &self.c[a][b][m] * &self.c[cc][m][out];
                        }
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `ad_i` as a matrix: column `j` is `[e_i, e_j]`.
    pub fn adjoint(&self) -> Vec<Vec<Vec<Q>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|k| (0..self.dim).map(|j| self.c[i][j][k].clone()).collect())
                    .collect()
            })
            .collect()
    }
}

pub fn trivial_rep(dim: usize, dim_e: usize) -> Vec<Vec<Vec<Q>>> {
    vec![vec![vec![Q::zero(); dim_e]; dim_e]; dim]
}

/// Increasing `p`-subsets of `0..n`, lexicographic.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, p, &mut Vec::new(), &mut out);
    out
}

/// Sorts by adjacent swaps; `None` on a repeated index.
fn sort_with_sign(xs: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = xs.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            } else if v[j] == v[j + 1] {
                return None;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Cochain values on a list of basis vectors, given as a map from the
/// sorted argument list to a coefficient vector.
fn eval(omega: &BTreeMap<Vec<usize>, Vec<Q>>, args: &[usize], dim_e: usize) -> Vec<Q> {
    match sort_with_sign(args) {
        None => vec![Q::zero(); dim_e],
        Some((sorted, sign)) => match omega.get(&sorted) {
            None => vec![Q::zero(); dim_e],
            Some(v) => v.iter().map(|x| x * q(sign)).collect(),
        },
    }
}

/// Coboundary of a cochain via the invariant formula
/// `dω(x_0..x_p) = Σ (-1)^i x_i·ω(..x̂_i..) + Σ_{i<j} (-1)^{i+j} ω([x_i,x_j], ..x̂_i..x̂_j..)`.
/// `act(x, v)` applies generator `x` to a coefficient vector; bracket terms
/// are zero-padded from `dim_in` to `dim_out`.
pub fn coboundary(
    alg: &Alg,
    omega: &BTreeMap<Vec<usize>, Vec<Q>>,
    p: usize,
    dim_in: usize,
    dim_out: usize,
    act: &dyn Fn(usize, &[Q]) -> Vec<Q>,
) -> BTreeMap<Vec<usize>, Vec<Q>> {
    let embed = |v: Vec<Q>| {
        let mut out = v;
        out.resize(dim_out, Q::zero());
        out
    };
    let mut result = BTreeMap::new();
    for xs in subsets(alg.dim, p + 1) {
        let mut total = vec![Q::zero(); dim_out];
        for i in 0..=p {
            let rest: Vec<usize> = xs
                .iter()
                .enumerate()
                .filter(|&(m, _)| m != i)
                .map(|(_, &x)| x)
                .collect();
            let v = act(xs[i], &eval(omega, &rest, dim_in));
            let sign = if i % 2 == 0 { q(1) } else { q(-1) };
            for (t, x) in total.iter_mut().zip(v) {
                *t += &sign * x;
            }
        }
        for i in 0..=p {
            for j in i + 1..=p {
                let rest: Vec<usize> = xs
                    .iter()
                    .enumerate()
                    .filter(|&(m, _)| m != i && m != j)
                    .map(|(_, &x)| x)
                    .collect();
                let sign = if (i + j) % 2 == 0 { q(1) } else { q(-1) };
                for k in 0..alg.dim {
                    let c = &alg.c[xs[i]][xs[j]][k];
                    if c.is_zero() {
                        continue;
                    }
                    let mut args = vec![k];
                    args.extend(&rest);
                    let v = embed(eval(omega, &args, dim_in));
                    for (t, x) in total.iter_mut().zip(v) {
                        *t += &sign * c * x;
                    }
                }
            }
        }
        result.insert(xs, total);
    }
    result
}

/// Matrix of the coboundary `C^p → C^{p+1}` with basis `(I, a)` ordered by
/// subset rank then coefficient index.
pub fn ce_matrix(
    alg: &Alg,
    p: usize,
    dim_in: usize,
    dim_out: usize,
    act: &dyn Fn(usize, &[Q]) -> Vec<Q>,
) -> Vec<Vec<Q>> {
    let rows_index = subsets(alg.dim, p + 1);
    let cols_index = subsets(alg.dim, p);
    let mut m = vec![vec![Q::zero(); cols_index.len() * dim_in]; rows_index.len() * dim_out];
    for (ci, set) in cols_index.iter().enumerate() {
        for a in 0..dim_in {
            let mut coeff = vec![Q::zero(); dim_in];
            coeff[a] = Q::one();
            let omega = BTreeMap::from([(set.clone(), coeff)]);
            let d = coboundary(alg, &omega, p, dim_in, dim_out, act);
            for (ri, target) in rows_index.iter().enumerate() {
                for (b, v) in d[target].iter().enumerate() {
                    m[ri * dim_out + b][ci * dim_in + a] = v.clone();
                }
            }
        }
    }
    m
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn binom(n: usize, k: usize) -> usize {
    subsets(n, k).len()
}

/// Betti numbers from degree dimensions and differential ranks.
pub fn betti_from_ranks(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..dims.len())
        .map(|p| {
            let out = ranks.get(p).copied().unwrap_or(0);
            let inc = if p == 0 { 0 } else { ranks[p - 1] };
            dims[p] - out - inc
        })
        .collect()
}

/// Lie algebra cohomology with coefficients in `rho`.
pub fn lie_betti(alg: &Alg, rho: &[Vec<Vec<Q>>], dim_e: usize) -> Vec<usize> {
    let act = |x: usize, v: &[Q]| -> Vec<Q> {
        (0..dim_e)
            .map(|b| (0..dim_e).fold(Q::zero(), |s, a| s + &rho[x][b][a] * &v[a]))
            .collect()
    };
    let dims: Vec<usize> = (0..=alg.dim).map(|p| binom(alg.dim, p) * dim_e).collect();
    let ranks: Vec<usize> = (0..alg.dim)
        .map(|p| rank(&ce_matrix(alg, p, dim_e, dim_e, &act)))
        .collect();
    betti_from_ranks(&dims, &ranks)
}

pub fn euler(betti: &[usize]) -> i64 {
    betti
        .iter()
        .enumerate()
        .map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

/// Gaussian rational `re + i·im`.
type C = (Q, Q);

fn cmul(a: &C, b: &C) -> C {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

/// Exponential coefficients `k ↦ c_k` of a real trigonometric polynomial.
pub type Fourier = BTreeMap<i64, C>;

/// From `(k, a_k, b_k)` meaning `a_k cos kt + b_k sin kt` (`b_0` ignored).
pub fn fourier(terms: &[(i64, i64, i64)]) -> Fourier {
    let mut out = Fourier::new();
    let mut add = |k: i64, z: C| {
        let e = out.entry(k).or_insert((Q::zero(), Q::zero()));
        e.0 += z.0;
        e.1 += z.1;
    };
    let half = Q::new(BigInt::from(1), BigInt::from(2));
    for &(k, a, b) in terms {
        if k == 0 {
            add(0, (q(a), Q::zero()));
            continue;
        }
        // cos = (e^{ik} + e^{-ik})/2, sin = (e^{ik} - e^{-ik})/(2i)
        add(k, (q(a) * &half, -q(b) * &half));
        add(-k, (q(a) * &half, q(b) * &half));
    }
    out
}

pub fn fourier_degree(f: &Fourier) -> usize {
    f.iter()
        .filter(|(_, c)| !c.0.is_zero() || !c.1.is_zero())
        .map(|(k, _)| k.unsigned_abs() as usize)
        .max()
        .unwrap_or(0)
}

/// Window vector `[c_0, a_1, b_1, a_2, b_2, ...]` to exponential coefficients.
fn to_fourier(v: &[Q]) -> Fourier {
    let m = (v.len() - 1) / 2;
    let mut out = Fourier::new();
    out.insert(0, (v[0].clone(), Q::zero()));
    let half = Q::new(BigInt::from(1), BigInt::from(2));
    for k in 1..=m {
        let (a, b) = (&v[2 * k - 1], &v[2 * k]);
        out.insert(k as i64, (a * &half, -b * &half));
        out.insert(-(k as i64), (a * &half, b * &half));
    }
    out
}

fn from_fourier(f: &Fourier, dim: usize) -> Vec<Q> {
    let m = (dim - 1) / 2;
    for (k, c) in f {
        if k.unsigned_abs() as usize > m && (!c.0.is_zero() || !c.1.is_zero()) {
            panic!("frequency {k} does not fit a window of dimension {dim}");
        }
    }
    let zero = (Q::zero(), Q::zero());
    let get = |k: i64| f.get(&k).unwrap_or(&zero);
    let mut out = vec![get(0).0.clone()];
    for k in 1..=m as i64 {
        let c = get(k);
        out.push(&c.0 * q(2));
        out.push(-&c.1 * q(2));
    }
    out
}

/// `v ↦ φ·v'` on window vectors.
pub fn apply_vector_field(phi: &Fourier, v: &[Q], dim_out: usize) -> Vec<Q> {
    let f = to_fourier(v);
    let mut out = Fourier::new();
    for (k, c) in &f {
        let deriv = cmul(c, &(Q::zero(), q(*k)));
        for (l, d) in phi {
            let z = cmul(&deriv, d);
            let e = out.entry(k + l).or_insert((Q::zero(), Q::zero()));
            e.0 += z.0;
            e.1 += z.1;
        }
    }
    from_fourier(&out, dim_out)
}

/// Betti numbers of the truncated complex of an action algebroid on the
/// circle: degree `p` carries `Λ^p g* ⊗ V_{N + p·d}`.
pub fn circle_betti(alg: &Alg, phi: &[Fourier], n: usize) -> Vec<usize> {
    let d = phi.iter().map(fourier_degree).max().unwrap_or(0);
    let window = |p: usize| 2 * (n + p * d) + 1;
    let dims: Vec<usize> = (0..=alg.dim)
        .map(|p| binom(alg.dim, p) * window(p))
        .collect();
    let ranks: Vec<usize> = (0..alg.dim)
        .map(|p| {
            let out = window(p + 1);
            let act = |x: usize, v: &[Q]| apply_vector_field(&phi[x], v, out);
            rank(&ce_matrix(alg, p, window(p), out, &act))
        })
        .collect();
    betti_from_ranks(&dims, &ranks)
}

/// Shuffle coproduct on `Λ(ℚ^n)`: `Δ(w_I) = Σ ε(J,K) w_J ⊗ w_K` over
/// ordered splittings `I = J ⊔ K`.
pub fn shuffle_coproduct(set: &[usize]) -> BTreeMap<(Vec<usize>, Vec<usize>), i64> {
    let mut out = BTreeMap::new();
    let r = set.len();
    for mask in 0u32..(1 << r) {
        let left: Vec<usize> = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| set[i])
            .collect();
        let right: Vec<usize> = (0..r)
            .filter(|i| mask >> i & 1 == 0)
            .map(|i| set[i])
            .collect();
        let concat: Vec<usize> = left.iter().chain(&right).copied().collect();
        let (_, sign) = sort_with_sign(&concat).expect("distinct");
        out.insert((left, right), sign);
    }
    out
}

pub fn is_invertible(m: &[Vec<Q>]) -> bool {
    rank(m) == m.len()
}
