//! Brute-force reference computations for the `lie2mm` test suites.
//!
//! Nothing here shares code with the main crate. Everything works on full
//! (non-sorted) index tuples and plain `Vec<Vec<Q>>` matrices, and the
//! elimination routine pivots differently from the production solver.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Rank by Gauss-Jordan elimination, choosing in each column the pivot row
/// with the *largest* index (the production solver takes the smallest).
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).rev().find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// `A x = b` is solvable iff appending `b` does not raise the rank.
pub fn affine_solvable(a: &[Vec<Q>], b: &[Q]) -> bool {
    let aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    rank(a) == rank(&aug)
}

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out.into_iter()
        .map(|p| {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            let s = if inv % 2 == 0 { 1 } else { -1 };
            (p, s)
        })
        .collect()
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Evaluate `alpha ∧ beta` on vectors by the full antisymmetrisation sum
/// `1/(k! l!) Σ_σ sgn σ α(v_σ1..v_σk) β(v_σk+1..)`.
pub fn wedge_eval<A, B>(k: usize, alpha: A, l: usize, beta: B, vectors: &[Vec<Q>]) -> Q
where
    A: Fn(&[Vec<Q>]) -> Q,
    B: Fn(&[Vec<Q>]) -> Q,
{
    assert_eq!(vectors.len(), k + l);
    let mut total = Q::zero();
    for (p, s) in permutations(k + l) {
        let vs: Vec<Vec<Q>> = p.iter().map(|&i| vectors[i].clone()).collect();
        let term = alpha(&vs[..k]) * beta(&vs[k..]);
        total += term * q(s);
    }
    total / q(factorial(k) * factorial(l))
}

/// A full (all tuples, repeated indices allowed) alternating array on an
/// `n`-dimensional space with values in `Q^dv`.
#[derive(Clone, Debug, PartialEq)]
pub struct FullCochain {
    pub n: usize,
    pub k: usize,
    pub dv: usize,
    /// keyed by tuple, flattened base-n
    pub values: Vec<Vec<Q>>,
}

impl FullCochain {
    pub fn zero(n: usize, k: usize, dv: usize) -> Self {
        let len = n.pow(k as u32);
        FullCochain { n, k, dv, values: vec![vec![Q::zero(); dv]; len] }
    }

    pub fn flat(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    pub fn get(&self, t: &[usize]) -> &Vec<Q> {
        &self.values[self.flat(t)]
    }

    pub fn tuples(&self) -> Vec<Vec<usize>> {
        tuples(self.n, self.k)
    }

    /// Build the alternating extension from values on strictly increasing tuples.
    pub fn from_sorted<F: Fn(&[usize]) -> Vec<Q>>(n: usize, k: usize, dv: usize, f: F) -> Self {
        let mut out = FullCochain::zero(n, k, dv);
        for t in tuples(n, k) {
            let mut sorted = t.clone();
            sorted.sort();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let sign = permutation_parity(&t);
            let base = f(&sorted);
            let idx = out.flat(&t);
            out.values[idx] = base.into_iter().map(|v| v * q(sign)).collect();
        }
        out
    }
}

pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &out {
            for i in 0..n {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// Sign of the permutation sorting `t` (entries assumed distinct).
pub fn permutation_parity(t: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[i] > t[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Structure constants as `sc[i][j][k]` = coefficient of `e_k` in `[e_i, e_j]`,
/// representation as `rho[i][a][b]` = entry (a,b) of the matrix of `e_i`.
pub struct BruteLie<'a> {
    pub sc: &'a [Vec<Vec<Q>>],
    pub rho: &'a [Vec<Vec<Q>>],
}

impl BruteLie<'_> {
    pub fn n(&self) -> usize {
        self.sc.len()
    }

    pub fn dv(&self) -> usize {
        self.rho.first().map_or(0, |m| m.len())
    }

    /// `(dω)(x_0..x_k) = Σ_i (-1)^i x_i·ω(..x̂_i..) + Σ_{i<j} (-1)^{i+j} ω([x_i,x_j], ..)`
    /// evaluated on every tuple.
    pub fn differential(&self, w: &FullCochain) -> FullCochain {
        let n = self.n();
        let dv = w.dv;
        let mut out = FullCochain::zero(n, w.k + 1, dv);
        for t in out.tuples() {
            let mut acc = vec![Q::zero(); dv];
            for i in 0..t.len() {
                let rest: Vec<usize> =
                    t.iter().enumerate().filter(|&(a, _)| a != i).map(|(_, &x)| x).collect();
                let val = w.get(&rest);
                let s = if i % 2 == 0 { q(1) } else { q(-1) };
                for a in 0..dv {
                    for b in 0..dv {
                        acc[a] += &s * &self.rho[t[i]][a][b] * &val[b];
                    }
                }
            }
            for i in 0..t.len() {
                for j in i + 1..t.len() {
                    let s = if (i + j) % 2 == 0 { q(1) } else { q(-1) };
                    let rest: Vec<usize> = t
                        .iter()
                        .enumerate()
                        .filter(|&(a, _)| a != i && a != j)
                        .map(|(_, &x)| x)
                        .collect();
                    for m in 0..n {
                        let coef = &self.sc[t[i]][t[j]][m];
                        if coef.is_zero() {
                            continue;
                        }
                        let mut tup = vec![m];
                        tup.extend_from_slice(&rest);
                        let val = w.get(&tup);
                        for a in 0..dv {
                            acc[a] += &s * coef * &val[a];
                        }
                    }
                }
            }
            let idx = out.flat(&t);
            out.values[idx] = acc;
        }
        out
    }

    /// Matrix of the differential on the space of alternating `k`-cochains,
    /// parametrised by values on strictly increasing tuples.
    pub fn differential_matrix(&self, k: usize) -> Vec<Vec<Q>> {
        let n = self.n();
        let dv = self.dv();
        let src = increasing(n, k);
        let tgt = increasing(n, k + 1);
        let mut cols = Vec::new();
        for s in &src {
            for a in 0..dv {
                let w = FullCochain::from_sorted(n, k, dv, |t| {
                    let mut v = vec![Q::zero(); dv];
                    if t == s.as_slice() {
                        v[a] = Q::one();
                    }
                    v
                });
                let d = self.differential(&w);
                let mut col = Vec::new();
                for t in &tgt {
                    col.extend(d.get(t).iter().cloned());
                }
                cols.push(col);
            }
        }
        transpose(&cols, tgt.len() * dv)
    }

    pub fn cohomology_dim(&self, k: usize) -> usize {
        let n = self.n();
        let dv = self.dv();
        let dim_k = binom(n, k) * dv;
        let rk = rank(&self.differential_matrix(k));
        let rk_prev = if k == 0 { 0 } else { rank(&self.differential_matrix(k - 1)) };
        dim_k - rk - rk_prev
    }

    pub fn killing(&self) -> Vec<Vec<Q>> {
        let n = self.n();
        // (ad e_i)_{k j} = sc[i][j][k]
        let ad = |i: usize| -> Vec<Vec<Q>> {
            (0..n).map(|k| (0..n).map(|j| self.sc[i][j][k].clone()).collect()).collect()
        };
        let mut out = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (ad(i), ad(j));
                let mut tr = Q::zero();
                for x in 0..n {
                    for y in 0..n {
                        tr += &a[x][y] * &b[y][x];
                    }
                }
                out[i][j] = tr;
            }
        }
        out
    }
}

/// Decide solvability of the system
/// `ξ(ρ(e_i) h_a) = 0`, `(d_g φ)(e_i,e_j,e_k) − ξ(c(e_i,e_j,e_k)) = w(e_i,e_j,e_k)`
/// by direct assembly.  `c` and `w` are given on increasing triples.
pub fn star_solvable(
    sc: &[Vec<Vec<Q>>],
    rho: &[Vec<Vec<Q>>],
    c: &dyn Fn(&[usize]) -> Vec<Q>,
    w: &dyn Fn(&[usize]) -> Q,
) -> bool {
    let n = sc.len();
    let dh = rho.first().map_or(0, |m| m.len());
    let pairs = increasing(n, 2);
    let triples = increasing(n, 3);
    let nunk = dh + pairs.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for a in 0..dh {
            let mut row = vec![Q::zero(); nunk];
            for b in 0..dh {
                row[b] += &rho[i][b][a];
            }
            rows.push(row);
            rhs.push(Q::zero());
        }
    }
    // phi(x,y) as a function of the unknown vector
    let phi_coeff = |x: usize, y: usize| -> Option<(usize, i64)> {
        if x == y {
            return None;
        }
        let (a, b, s) = if x < y { (x, y, 1) } else { (y, x, -1) };
        let pos = pairs.iter().position(|p| p[0] == a && p[1] == b).unwrap();
        Some((dh + pos, s))
    };
    for t in &triples {
        let (x, y, z) = (t[0], t[1], t[2]);
        let mut row = vec![Q::zero(); nunk];
        // d_g φ (x,y,z) = -φ([x,y],z) + φ([x,z],y) - φ([y,z],x)
        for (u, v, other, s) in [(x, y, z, -1i64), (x, z, y, 1), (y, z, x, -1)] {
            for m in 0..n {
                let coef = &sc[u][v][m];
                if coef.is_zero() {
                    continue;
                }
                if let Some((col, sg)) = phi_coeff(m, other) {
                    row[col] += coef * q(s * sg);
                }
            }
        }
        let cv = c(t);
        for b in 0..dh {
            row[b] -= &cv[b];
        }
        rows.push(row);
        rhs.push(w(t));
    }
    affine_solvable(&rows, &rhs)
}

pub fn increasing(n: usize, k: usize) -> Vec<Vec<usize>> {
    tuples(n, k).into_iter().filter(|t| t.windows(2).all(|w| w[0] < w[1])).collect()
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn transpose(cols: &[Vec<Q>], nrows: usize) -> Vec<Vec<Q>> {
    (0..nrows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}
