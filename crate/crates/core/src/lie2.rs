//! Minimal Lie 2-algebras `h[1] ⊕ g` and their Chevalley-Eilenberg algebra.
//!
//! `CE(L)` is realised as the graded-commutative algebra generated by odd
//! `e^i` (dual basis of `g`, degree 1) and even `f^α` (dual basis of `h`,
//! degree 2). A monomial is `e^I f^J` with `I` strictly and `J` weakly
//! increasing; the `f`s sit to the right and never produce signs.
//!
//! The differential is the derivation determined by
//!
//! ```text
//! d e^k = -Σ_{i<j} c^k_{ij} e^i e^j
//! d f^α = -Σ_{i,β} ρ(e_i)_{αβ} e^i f^β  -  Σ_{i<j<l} c(e_i,e_j,e_l)_α e^i e^j e^l
//! ```
//!
//! The first line and the first term of the second are `-d₂`; the last term
//! is `d₃`, so `d₃ξ = -ξ∘c` for `ξ ∈ h*`.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::{ext_basis, q, sym_basis, ExtIndex, Matrix, Rational, SymIndex};
use crate::lie::{ce_differential, Cochain, LieAlgebra, Representation, ThreeCocycle};

/// Basis monomial `e^I f^J` of `CE(L)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CeMonomial {
    pub ext: ExtIndex,
    pub sym: SymIndex,
}

impl CeMonomial {
    pub fn new(ext: ExtIndex, sym: SymIndex) -> Self {
        CeMonomial { ext, sym }
    }

    pub fn e(indices: &[usize]) -> Self {
        CeMonomial { ext: ExtIndex::new(indices.to_vec()), sym: SymIndex::empty() }
    }

    pub fn f(alpha: usize) -> Self {
        CeMonomial { ext: ExtIndex::empty(), sym: SymIndex::new(vec![alpha]) }
    }

    /// `(a, b)`: exterior degree in `g*`, symmetric degree in `h*`.
    pub fn bidegree(&self) -> (usize, usize) {
        (self.ext.degree(), self.sym.degree())
    }

    pub fn degree(&self) -> usize {
        self.ext.degree() + 2 * self.sym.degree()
    }

    /// Product of two monomials with its sign, or `None` if an `e` repeats.
    pub fn mul(&self, other: &CeMonomial) -> Option<(i64, CeMonomial)> {
        let cat: Vec<usize> = self.ext.as_slice().iter().chain(other.ext.as_slice()).copied().collect();
        let (s, ext) = ExtIndex::from_unsorted(&cat)?;
        Some((s, CeMonomial { ext, sym: self.sym.merge(&other.sym) }))
    }
}

/// Coefficients a `CE(L)` cochain can carry: anything that is a module over
/// the rationals.
pub trait Coeff: Clone + Debug + PartialEq {
    fn is_zero_coeff(&self) -> bool;
    fn add_coeff(&mut self, other: &Self);
    fn scaled(&self, s: &Rational) -> Self;
}

impl Coeff for Rational {
    fn is_zero_coeff(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_coeff(&mut self, other: &Self) {
        *self += other;
    }

    fn scaled(&self, s: &Rational) -> Self {
        self * s
    }
}

/// Sparse element of `CE(L) ⊗ C`: absent monomials are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CeCochain<C> {
    terms: BTreeMap<CeMonomial, C>,
}

impl<C: Coeff> Default for CeCochain<C> {
    fn default() -> Self {
        CeCochain { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> CeCochain<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(m: CeMonomial, c: C) -> Self {
        let mut x = Self::zero();
        x.add_term(m, &c);
        x
    }

    pub fn add_term(&mut self, m: CeMonomial, c: &C) {
        if c.is_zero_coeff() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_coeff(c);
                if o.get().is_zero_coeff() {
                    o.remove();
                }
            }
        }
    }

    pub fn get(&self, m: &CeMonomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CeMonomial, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.scaled(s));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    /// The part of bidegree `(a, b)`.
    pub fn component(&self, a: usize, b: usize) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.bidegree() == (a, b)).map(|(m, c)| (m.clone(), c.clone())).collect();
        CeCochain { terms }
    }

    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.terms.keys().map(CeMonomial::bidegree).collect();
        v.dedup();
        v.sort();
        v.dedup();
        v
    }

    /// Apply a coefficient map term by term.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> CeCochain<D> {
        let mut out = CeCochain::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    /// Left multiplication by `s · m` for a rational scalar `s`.
    pub fn mul_monomial_left(&self, m: &CeMonomial, s: &Rational) -> Self {
        let mut out = Self::zero();
        for (n, c) in &self.terms {
            if let Some((sign, p)) = m.mul(n) {
                out.add_term(p, &c.scaled(&(s * q(sign))));
            }
        }
        out
    }
}

impl CeCochain<Rational> {
    /// `Σ_I ω_I e^I` for a scalar `∧^a g*` cochain.
    pub fn from_lie_cochain(w: &Cochain) -> Result<Self> {
        if w.dim_v != 1 {
            return Err(Error::shape("scalar cochain coefficient dimension", 1, w.dim_v));
        }
        let mut out = Self::zero();
        for (idx, v) in ext_basis(w.dim_g, w.degree).into_iter().zip(&w.values) {
            out.add_term(CeMonomial::new(idx, SymIndex::empty()), &v[0]);
        }
        Ok(out)
    }

    /// `Σ_{I,α} ω_I[α] e^I f^α` for an `h*`-valued cochain.
    pub fn from_dual_valued(w: &Cochain) -> Self {
        let mut out = Self::zero();
        for (idx, v) in ext_basis(w.dim_g, w.degree).into_iter().zip(&w.values) {
            for (alpha, c) in v.iter().enumerate() {
                out.add_term(CeMonomial::new(idx.clone(), SymIndex::new(vec![alpha])), c);
            }
        }
        out
    }

    /// `Σ ξ_α f^α`.
    pub fn from_h_dual(xi: &[Rational]) -> Self {
        let mut out = Self::zero();
        for (a, c) in xi.iter().enumerate() {
            out.add_term(CeMonomial::f(a), c);
        }
        out
    }

    /// The `(a, 0)` part as a scalar cochain on a `dim_g`-dimensional algebra.
    pub fn to_lie_cochain(&self, dim_g: usize, a: usize) -> Cochain {
        Cochain::from_fn(dim_g, 1, a, |idx| {
            vec![self.get(&CeMonomial::new(idx.clone(), SymIndex::empty())).cloned().unwrap_or_else(Rational::zero)]
        })
    }

    /// The `(a, 1)` part as an `h*`-valued cochain.
    pub fn to_dual_valued(&self, dim_g: usize, dim_h: usize, a: usize) -> Cochain {
        Cochain::from_fn(dim_g, dim_h, a, |idx| {
            (0..dim_h)
                .map(|al| {
                    self.get(&CeMonomial::new(idx.clone(), SymIndex::new(vec![al]))).cloned().unwrap_or_else(Rational::zero)
                })
                .collect()
        })
    }

    /// Coordinates in `basis`; panics if a term lies outside it.
    pub fn coords(&self, basis: &[CeMonomial]) -> Vec<Rational> {
        let pos: BTreeMap<&CeMonomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![Rational::zero(); basis.len()];
        for (m, c) in &self.terms {
            v[*pos.get(m).expect("monomial outside basis")] = c.clone();
        }
        v
    }

    pub fn from_coords(basis: &[CeMonomial], coords: &[Rational]) -> Self {
        let mut out = Self::zero();
        for (m, c) in basis.iter().zip(coords) {
            out.add_term(m.clone(), c);
        }
        out
    }
}

/// Which pieces of the differential to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffPart {
    /// `-d₂ + d₃`.
    Full,
    /// `-d₂` only: the bracket and action terms.
    MinusD2,
    /// `d₃` only: the cocycle term.
    D3,
}

/// A minimal Lie 2-algebra `(g, h, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalLie2Algebra {
    g: LieAlgebra,
    h: Representation,
    c: ThreeCocycle,
}

impl MinimalLie2Algebra {
    /// Validates the representation on `h` and the cocycle condition on `c`.
    pub fn build(g: LieAlgebra, h_dim: usize, matrices: Vec<Matrix>, c: Cochain) -> Result<Self> {
        let h = Representation::new(&g, h_dim, matrices)?;
        let c = ThreeCocycle::new(&g, &h, c)?;
        Ok(MinimalLie2Algebra { g, h, c })
    }

    /// From already validated parts; the cocycle is re-checked against `h`.
    pub fn new(g: LieAlgebra, h: Representation, c: Cochain) -> Result<Self> {
        let c = ThreeCocycle::new(&g, &h, c)?;
        Ok(MinimalLie2Algebra { g, h, c })
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn h(&self) -> &Representation {
        &self.h
    }

    pub fn c(&self) -> &ThreeCocycle {
        &self.c
    }

    pub fn dim_g(&self) -> usize {
        self.g.dim()
    }

    pub fn dim_h(&self) -> usize {
        self.h.dim()
    }

    /// `d` of a generator, split by part.
    fn generator_diff(&self, is_e: bool, index: usize, part: DiffPart) -> CeCochain<Rational> {
        let n = self.dim_g();
        let mut out = CeCochain::zero();
        let want_d2 = part != DiffPart::D3;
        let want_d3 = part != DiffPart::MinusD2;
        if is_e {
            if want_d2 {
                for i in 0..n {
                    for j in i + 1..n {
                        out.add_term(CeMonomial::e(&[i, j]), &-self.g.bracket_basis(i, j)[index].clone());
                    }
                }
            }
            return out;
        }
        if want_d2 {
            for i in 0..n {
                let m = self.h.matrix(i);
                for beta in 0..self.dim_h() {
                    let v = m.get(index, beta);
                    if !v.is_zero() {
                        out.add_term(CeMonomial::new(ExtIndex::new(vec![i]), SymIndex::new(vec![beta])), &-v.clone());
                    }
                }
            }
        }
        if want_d3 {
            for (idx, v) in ext_basis(n, 3).into_iter().zip(&self.c.cochain().values) {
                out.add_term(CeMonomial::new(idx, SymIndex::empty()), &-v[index].clone());
            }
        }
        out
    }

    /// `d` of a basis monomial, by the Leibniz rule.
    pub fn diff_monomial(&self, m: &CeMonomial, part: DiffPart) -> CeCochain<Rational> {
        let mut out = CeCochain::zero();
        let ext = m.ext.as_slice();
        let a = ext.len();
        for k in 0..a {
            // e^{I<k} · d e^{i_k} · e^{I>k} f^J, sign (-1)^k
            let left = CeMonomial::e(&ext[..k]);
            let right = CeMonomial::new(ExtIndex::new(ext[k + 1..].to_vec()), m.sym.clone());
            let de = self.generator_diff(true, ext[k], part);
            let sign = q(if k % 2 == 0 { 1 } else { -1 });
            for (t, c) in de.terms() {
                let Some((s1, lt)) = left.mul(t) else { continue };
                let Some((s2, p)) = lt.mul(&right) else { continue };
                out.add_term(p, &(c * q(s1 * s2) * &sign));
            }
        }
        let sign = q(if a % 2 == 0 { 1 } else { -1 });
        let sym = m.sym.as_slice();
        for l in 0..sym.len() {
            let rest = CeMonomial::new(m.ext.clone(), m.sym.without_pos(l));
            let df = self.generator_diff(false, sym[l], part);
            for (t, c) in df.terms() {
                // e^I f^{J\l} · t = (-1)^{0} since f's are even; t's e's move past none
                let Some((s, p)) = rest.mul(t) else { continue };
                out.add_term(p, &(c * q(s) * &sign));
            }
        }
        out
    }

    /// `d_CE(L) = -d₂ + d₃` on cochains with arbitrary coefficients.
    pub fn ce_diff<C: Coeff>(&self, x: &CeCochain<C>) -> CeCochain<C> {
        self.ce_diff_part(x, DiffPart::Full)
    }

    pub fn ce_diff_part<C: Coeff>(&self, x: &CeCochain<C>, part: DiffPart) -> CeCochain<C> {
        let mut out = CeCochain::zero();
        for (m, c) in x.terms() {
            for (t, s) in self.diff_monomial(m, part).terms() {
                out.add_term(t.clone(), &c.scaled(s));
            }
        }
        out
    }

    /// Basis of `CE(L)` in total degree `d`: bidegrees by increasing `b`,
    /// lexicographic inside each.
    pub fn basis(&self, d: usize) -> Vec<CeMonomial> {
        let n = self.dim_g();
        let mut out = Vec::new();
        for b in 0..=d / 2 {
            let a = d - 2 * b;
            if a > n {
                continue;
            }
            for s in sym_basis(self.dim_h(), b) {
                for e in ext_basis(n, a) {
                    out.push(CeMonomial::new(e, s.clone()));
                }
            }
        }
        out.sort_by(|x, y| x.sym.degree().cmp(&y.sym.degree()).then(x.cmp(y)));
        out
    }

    /// Matrix of `d_CE(L)` from degree `d` to `d + 1` in [`Self::basis`].
    pub fn diff_matrix(&self, d: usize) -> Matrix {
        let src = self.basis(d);
        let tgt = self.basis(d + 1);
        let cols: Vec<Vec<Rational>> = src
            .iter()
            .map(|m| self.diff_monomial(m, DiffPart::Full).coords(&tgt))
            .collect();
        Matrix::from_columns(tgt.len(), &cols).expect("sized")
    }

    /// `[g,h]° = {ξ ∈ h* : ξ(ρ(e_i) h) = 0 for all i}`.
    pub fn bracket_annihilator(&self) -> Vec<Vec<Rational>> {
        let m = self.dim_h();
        let mut rows = Vec::new();
        for rho in self.h.matrices() {
            rows.extend(rho.transpose().to_rows());
        }
        if rows.is_empty() {
            return (0..m).map(|a| (0..m).map(|b| q((a == b) as i64)).collect()).collect();
        }
        Matrix::from_rows(rows).expect("square blocks").kernel()
    }

    /// A basis of `[g,h] = span{ρ(e_i) h_j}`.
    pub fn bracket_subspace(&self) -> Vec<Vec<Rational>> {
        let cols: Vec<Vec<Rational>> = self.h.matrices().iter().flat_map(|r| (0..r.cols()).map(|j| r.column(j))).collect();
        if cols.is_empty() {
            return Vec::new();
        }
        let m = Matrix::from_columns(self.dim_h(), &cols).expect("sized");
        m.pivot_columns().into_iter().map(|j| cols[j].clone()).collect()
    }

    /// `d₃ξ = -ξ∘c` as a scalar 3-cochain.
    pub fn d3(&self, xi: &[Rational]) -> Result<Cochain> {
        if xi.len() != self.dim_h() {
            return Err(Error::shape("element of h*", self.dim_h(), xi.len()));
        }
        let row = Matrix::from_rows(vec![xi.iter().map(|x| -x.clone()).collect()])?;
        self.c.cochain().compose(&row)
    }

    /// `c_red = pr∘c` with `pr` given by a basis of the annihilator.
    pub fn reduce(&self) -> Result<ReducedLie2Algebra> {
        let ann = self.bracket_annihilator();
        let r = ann.len();
        let pr = if r == 0 { Matrix::zeros(0, self.dim_h()) } else { Matrix::from_rows(ann)? };
        let c_red = self.c.cochain().compose(&pr)?;
        let trivial = Representation::trivial(&self.g, r);
        let c_red = ThreeCocycle::new(&self.g, &trivial, c_red)?;
        Ok(ReducedLie2Algebra { g: self.g.clone(), h_red: trivial, projection: pr, c_red, bracket_subspace: self.bracket_subspace() })
    }

    /// Check that `(dω)` for an `h*`-valued cochain agrees with the Lie
    /// algebra differential for the dual representation.
    pub fn dual_rep_differential(&self, w: &Cochain) -> Result<Cochain> {
        ce_differential(&self.g, &self.h.dual(), w)
    }
}

/// `(g, h/[g,h], c_red)` with the quotient realised as `R^r` through a basis
/// of the annihilator: `pr(h) = (ξ_1(h), …, ξ_r(h))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedLie2Algebra {
    pub g: LieAlgebra,
    pub h_red: Representation,
    pub projection: Matrix,
    pub c_red: ThreeCocycle,
    pub bracket_subspace: Vec<Vec<Rational>>,
}

impl ReducedLie2Algebra {
    pub fn dim_h_red(&self) -> usize {
        self.h_red.dim()
    }
}
