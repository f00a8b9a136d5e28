//! Polynomial differential forms and vector fields on `R^n` with rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::{ext_basis, format_rational, q, ExtIndex, Matrix, Rational};
use crate::lie2::Coeff;

/// Polynomial in `x_1, …, x_n`. Exponent vectors are stored with trailing
/// zeros trimmed, so the same polynomial has one representation regardless
/// of the ambient dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Self {
        Poly::monomial(vec![], c)
    }

    pub fn one() -> Self {
        Poly::constant(q(1))
    }

    /// The coordinate function `x_i` (zero-based).
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Poly::monomial(e, q(1))
    }

    pub fn monomial(exponents: Vec<u32>, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(exponents, c);
        p
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = trim(exponents);
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Largest variable index that occurs, plus one.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Vec::is_empty)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let n = e1.len().max(e2.len());
                let e = (0..n).map(|i| e1.get(i).unwrap_or(&0) + e2.get(i).unwrap_or(&0)).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// `∂/∂x_i`.
    pub fn deriv(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let Some(&k) = e.get(i) else { continue };
            if k == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * q(k as i64));
        }
        out
    }

    /// Multiply by `x_i`.
    pub fn mul_var(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut f = e.clone();
            if f.len() <= i {
                f.resize(i + 1, 0);
            }
            f[i] += 1;
            out.add_term(f, c.clone());
        }
        out
    }

    /// Value at a point; missing coordinates count as zero.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        'terms: for (e, c) in &self.terms {
            let mut v = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let Some(x) = point.get(i) else { continue 'terms };
                v *= num_traits::pow(x.clone(), k as usize);
            }
            total += v;
        }
        total
    }

    /// `f(x + shift)` as a polynomial in `x`.
    pub fn translate(&self, shift: &[Rational]) -> Poly {
        if shift.iter().all(Zero::is_zero) {
            return self.clone();
        }
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let s = shift.get(i).cloned().unwrap_or_else(Rational::zero);
                let base = Poly::var(i).add(&Poly::constant(s));
                term = term.mul(&base.pow(k));
            }
            out = out.add(&term);
        }
        out
    }

    /// Render with the given variable names (`x1, x2, …` past the end).
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut sorted: Vec<(&Vec<u32>, &Rational)> = self.terms.iter().collect();
        sorted.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), std::cmp::Reverse(*e)));
        let mut parts = Vec::new();
        for (e, c) in sorted {
            let mut factors = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
                factors.push(if k == 1 { name } else { format!("{name}^{k}") });
            }
            let body = factors.join("*");
            parts.push(match (body.is_empty(), c == &q(1), c == &q(-1)) {
                (true, _, _) => format_rational(c),
                (false, true, _) => body,
                (false, _, true) => format!("-{body}"),
                _ => format!("{}*{body}", format_rational(c)),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// A differential form `Σ_I f_I dx^I` on `R^n`, possibly of mixed degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyForm {
    terms: BTreeMap<ExtIndex, Poly>,
}

impl PolyForm {
    pub fn zero() -> Self {
        PolyForm::default()
    }

    /// A 0-form.
    pub fn function(f: Poly) -> Self {
        PolyForm::term(ExtIndex::empty(), f)
    }

    pub fn constant(c: Rational) -> Self {
        PolyForm::function(Poly::constant(c))
    }

    /// `dx_i`.
    pub fn dx(i: usize) -> Self {
        PolyForm::term(ExtIndex::new(vec![i]), Poly::one())
    }

    /// `f dx^{i_1} ∧ … ∧ dx^{i_k}` for indices in any order.
    pub fn basic(f: Poly, indices: &[usize]) -> Self {
        match ExtIndex::from_unsorted(indices) {
            Some((s, idx)) => PolyForm::term(idx, f.scale(&q(s))),
            None => PolyForm::zero(),
        }
    }

    pub fn term(idx: ExtIndex, f: Poly) -> Self {
        let mut out = PolyForm::zero();
        out.add_term(idx, &f);
        out
    }

    pub fn add_term(&mut self, idx: ExtIndex, f: &Poly) {
        if f.is_zero() {
            return;
        }
        let e = self.terms.entry(idx.clone()).or_default();
        *e = e.add(f);
        if e.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtIndex, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &ExtIndex) -> Poly {
        self.terms.get(idx).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The degree if every term has the same degree; `None` for zero or mixed.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(ExtIndex::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn component(&self, k: usize) -> PolyForm {
        PolyForm { terms: self.terms.iter().filter(|(i, _)| i.degree() == k).map(|(i, f)| (i.clone(), f.clone())).collect() }
    }

    /// The 0-form part.
    pub fn function_part(&self) -> Poly {
        self.coeff(&ExtIndex::empty())
    }

    pub fn max_poly_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(Poly::degree).max()
    }

    pub fn nvars(&self) -> usize {
        self.terms
            .iter()
            .map(|(i, f)| f.nvars().max(i.as_slice().last().map_or(0, |&x| x + 1)))
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &PolyForm) -> PolyForm {
        let mut out = self.clone();
        for (i, f) in &other.terms {
            out.add_term(i.clone(), f);
        }
        out
    }

    pub fn sub(&self, other: &PolyForm) -> PolyForm {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, s: &Rational) -> PolyForm {
        let mut out = PolyForm::zero();
        for (i, f) in &self.terms {
            out.add_term(i.clone(), &f.scale(s));
        }
        out
    }

    pub fn mul_poly(&self, g: &Poly) -> PolyForm {
        let mut out = PolyForm::zero();
        for (i, f) in &self.terms {
            out.add_term(i.clone(), &f.mul(g));
        }
        out
    }

    pub fn wedge(&self, other: &PolyForm) -> PolyForm {
        let mut out = PolyForm::zero();
        for (i, f) in &self.terms {
            for (j, g) in &other.terms {
                let cat: Vec<usize> = i.as_slice().iter().chain(j.as_slice()).copied().collect();
                if let Some((s, k)) = ExtIndex::from_unsorted(&cat) {
                    out.add_term(k, &f.mul(g).scale(&q(s)));
                }
            }
        }
        out
    }

    /// Exterior derivative.
    pub fn d(&self) -> PolyForm {
        let mut out = PolyForm::zero();
        for (idx, f) in &self.terms {
            for i in 0..f.nvars() {
                let df = f.deriv(i);
                if df.is_zero() {
                    continue;
                }
                // dx_i ∧ dx^I
                if let Some((pos, k)) = idx.insert(i) {
                    let s = if pos % 2 == 0 { q(1) } else { q(-1) };
                    out.add_term(k, &df.scale(&s));
                }
            }
        }
        out
    }

    /// Interior product `ι_v`.
    pub fn contract(&self, v: &PolyVectorField) -> PolyForm {
        let mut out = PolyForm::zero();
        for (idx, f) in &self.terms {
            for (s, &i) in idx.as_slice().iter().enumerate() {
                let Some(vi) = v.components.get(i) else { continue };
                if vi.is_zero() {
                    continue;
                }
                let sign = if s % 2 == 0 { q(1) } else { q(-1) };
                out.add_term(idx.without_pos(s), &f.mul(vi).scale(&sign));
            }
        }
        out
    }

    /// `i(v_1 ∧ … ∧ v_k) α = ι_{v_k} … ι_{v_1} α`.
    pub fn contract_many(&self, vs: &[&PolyVectorField]) -> Result<PolyForm> {
        if let Some(have) = self.degree() {
            if have < vs.len() {
                return Err(Error::DegreeTooLow { need: vs.len(), have });
            }
        } else if !self.is_zero() {
            let have = self.terms.keys().map(ExtIndex::degree).min().unwrap_or(0);
            if have < vs.len() {
                return Err(Error::DegreeTooLow { need: vs.len(), have });
            }
        }
        Ok(vs.iter().fold(self.clone(), |acc, v| acc.contract(v)))
    }

    /// Substitute `x ↦ x + shift` in every coefficient.
    pub fn translate(&self, shift: &[Rational]) -> PolyForm {
        let mut out = PolyForm::zero();
        for (i, f) in &self.terms {
            out.add_term(i.clone(), &f.translate(shift));
        }
        out
    }

    /// Coefficients at a point.
    pub fn eval_at(&self, point: &[Rational]) -> BTreeMap<ExtIndex, Rational> {
        self.terms.iter().map(|(i, f)| (i.clone(), f.eval(point))).filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Value of the 0-form part at a point; higher-degree parts count as zero.
    pub fn value_at(&self, point: &[Rational]) -> Rational {
        self.function_part().eval(point)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
        self.terms
            .iter()
            .map(|(idx, f)| {
                let dx: Vec<String> = idx.as_slice().iter().map(|&i| format!("d{}", name(i))).collect();
                if dx.is_empty() {
                    f.render(names)
                } else {
                    format!("({})*{}", f.render(names), dx.join("^"))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl Coeff for PolyForm {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }

    fn add_coeff(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn scaled(&self, s: &Rational) -> Self {
        self.scale(s)
    }
}

/// Vector field `Σ v^i ∂_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    pub components: Vec<Poly>,
}

impl PolyVectorField {
    pub fn new(components: Vec<Poly>) -> Self {
        PolyVectorField { components }
    }

    pub fn zero(n: usize) -> Self {
        PolyVectorField { components: vec![Poly::zero(); n] }
    }

    /// `∂_i`.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut v = PolyVectorField::zero(n);
        v.components[i] = Poly::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &PolyVectorField) -> PolyVectorField {
        let n = self.dim().max(other.dim());
        let get = |v: &PolyVectorField, i: usize| v.components.get(i).cloned().unwrap_or_default();
        PolyVectorField { components: (0..n).map(|i| get(self, i).add(&get(other, i))).collect() }
    }

    pub fn scale(&self, s: &Rational) -> PolyVectorField {
        PolyVectorField { components: self.components.iter().map(|c| c.scale(s)).collect() }
    }

    /// `v(f) = Σ v^i ∂_i f`.
    pub fn apply(&self, f: &Poly) -> Poly {
        self.components.iter().enumerate().fold(Poly::zero(), |acc, (i, vi)| acc.add(&vi.mul(&f.deriv(i))))
    }

    /// `[v, w]^i = v(w^i) - w(v^i)`.
    pub fn bracket(&self, other: &PolyVectorField) -> PolyVectorField {
        let n = self.dim().max(other.dim());
        let get = |v: &PolyVectorField, i: usize| v.components.get(i).cloned().unwrap_or_default();
        PolyVectorField { components: (0..n).map(|i| self.apply(&get(other, i)).sub(&other.apply(&get(self, i)))).collect() }
    }

    pub fn eval_at(&self, point: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    pub fn render(&self, names: &[String]) -> String {
        let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({})*d/d{}", c.render(names), name(i)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Poincaré primitive based at `p`: `β` with `dβ = α`, and `β(p) = 0` when
/// `α` is a 1-form.
pub fn primitive(alpha: &PolyForm, p: &[Rational]) -> Result<PolyForm> {
    if alpha.is_zero() {
        return Ok(PolyForm::zero());
    }
    let Some(k) = alpha.degree() else {
        return Err(Error::DegreeMismatch("primitive needs a form of a single degree".into()));
    };
    if k == 0 {
        return Err(Error::FunctionPrimitive);
    }
    let dalpha = alpha.d();
    if !dalpha.is_zero() {
        return Err(Error::FormNotClosed { defect: dalpha.to_string() });
    }
    // work in y = x - p, contract with the Euler field and integrate along rays
    let shifted = alpha.translate(p);
    let mut out = PolyForm::zero();
    for (idx, f) in shifted.terms() {
        for (e, c) in f.terms() {
            let total: u32 = e.iter().sum();
            let weight = c / q(total as i64 + k as i64);
            let mono = Poly::monomial(e.clone(), weight);
            for (s, &i) in idx.as_slice().iter().enumerate() {
                let sign = if s % 2 == 0 { q(1) } else { q(-1) };
                out.add_term(idx.without_pos(s), &mono.mul_var(i).scale(&sign));
            }
        }
    }
    let minus_p: Vec<Rational> = p.iter().map(|x| -x.clone()).collect();
    Ok(out.translate(&minus_p))
}

/// `ζ(k) = -(-1)^{k(k+1)/2}`.
pub fn zeta(k: usize) -> Rational {
    if (k * (k + 1) / 2) % 2 == 0 {
        q(-1)
    } else {
        q(1)
    }
}

/// A closed 3-form on `R^n`, nondegenerate at a base point and at every
/// witness point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPlecticForm {
    form: PolyForm,
    n: usize,
    base_point: Vec<Rational>,
    witnesses: Vec<Vec<Rational>>,
}

impl TwoPlecticForm {
    pub fn new(n: usize, form: PolyForm, base_point: Vec<Rational>, witnesses: Vec<Vec<Rational>>) -> Result<Self> {
        if form.degree() != Some(3) {
            return Err(Error::DegreeMismatch(format!("2-plectic form must be a 3-form, got {form}")));
        }
        if form.nvars() > n {
            return Err(Error::shape("form variables", format!("<= {n}"), form.nvars()));
        }
        if base_point.len() != n {
            return Err(Error::shape("base point", n, base_point.len()));
        }
        if let Some(w) = witnesses.iter().find(|w| w.len() != n) {
            return Err(Error::shape("witness point", n, w.len()));
        }
        let d = form.d();
        if !d.is_zero() {
            return Err(Error::FormNotClosed { defect: d.to_string() });
        }
        let omega = TwoPlecticForm { form, n, base_point, witnesses };
        for pt in std::iter::once(&omega.base_point).chain(&omega.witnesses) {
            if !omega.nondegenerate_at(pt) {
                return Err(Error::PreconditionFailed(format!(
                    "v -> i_v omega is not injective at {:?}",
                    pt.iter().map(format_rational).collect::<Vec<_>>()
                )));
            }
        }
        Ok(omega)
    }

    /// `dx_1 ∧ dx_2 ∧ dx_3` on `R^3`.
    pub fn volume3(base_point: Vec<Rational>) -> Result<Self> {
        TwoPlecticForm::new(3, PolyForm::basic(Poly::one(), &[0, 1, 2]), base_point, Vec::new())
    }

    pub fn form(&self) -> &PolyForm {
        &self.form
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base_point(&self) -> &[Rational] {
        &self.base_point
    }

    pub fn witnesses(&self) -> &[Vec<Rational>] {
        &self.witnesses
    }

    /// Rank of `v ↦ (i_v ω)_pt` equals `n`.
    pub fn nondegenerate_at(&self, pt: &[Rational]) -> bool {
        let basis = ext_basis(self.n, 2);
        let cols: Vec<Vec<Rational>> = (0..self.n)
            .map(|i| {
                let c = self.form.contract(&PolyVectorField::coordinate(self.n, i)).eval_at(pt);
                basis.iter().map(|b| c.get(b).cloned().unwrap_or_else(Rational::zero)).collect()
            })
            .collect();
        Matrix::from_columns(basis.len(), &cols).map(|m| m.rank() == self.n).unwrap_or(false)
    }
}

/// `α` with `dα = -i_v ω`, normalised to vanish at the base point.
pub fn hamiltonian_pair(omega: &TwoPlecticForm, v: &PolyVectorField) -> Result<PolyForm> {
    let ivw = omega.form.contract(v);
    let d = ivw.d();
    if !d.is_zero() {
        return Err(Error::NotHamiltonian { generator: None, defect: d.to_string() });
    }
    primitive(&ivw.scale(&q(-1)), &omega.base_point)
}

/// A Hamiltonian 1-form paired with its Hamiltonian vector field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianForm {
    pub form: PolyForm,
    pub field: PolyVectorField,
}

impl HamiltonianForm {
    /// Checks `dα = -i_v ω`.
    pub fn new(omega: &TwoPlecticForm, form: PolyForm, field: PolyVectorField) -> Result<Self> {
        if !form.is_zero() && form.degree() != Some(1) {
            return Err(Error::DegreeMismatch(format!("Hamiltonian form must be a 1-form, got {form}")));
        }
        let defect = form.d().add(&omega.form.contract(&field));
        if !defect.is_zero() {
            return Err(Error::NotHamiltonian { generator: None, defect: defect.to_string() });
        }
        Ok(HamiltonianForm { form, field })
    }
}

/// `[α_1, …, α_k]' = ζ(k) i(v_1 ∧ … ∧ v_k) ω` for `k ∈ {2, 3}`.
pub fn linfty_bracket(omega: &TwoPlecticForm, args: &[&HamiltonianForm]) -> Result<PolyForm> {
    let fields: Vec<&PolyVectorField> = args.iter().map(|a| &a.field).collect();
    field_bracket(omega, &fields)
}

/// The same bracket computed from the Hamiltonian vector fields alone.
pub fn field_bracket(omega: &TwoPlecticForm, fields: &[&PolyVectorField]) -> Result<PolyForm> {
    if !(2..=3).contains(&fields.len()) {
        return Err(Error::DegreeMismatch(format!("bracket arity must be 2 or 3, got {}", fields.len())));
    }
    Ok(omega.form.contract_many(fields)?.scale(&zeta(fields.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::qf;
    use proptest::prelude::*;

    fn x() -> Poly {
        Poly::var(0)
    }
    fn y() -> Poly {
        Poly::var(1)
    }
    fn z() -> Poly {
        Poly::var(2)
    }
    fn vol() -> PolyForm {
        PolyForm::basic(Poly::one(), &[0, 1, 2])
    }

    #[test]
    fn exterior_derivative_examples() {
        // d(x dy) = dx∧dy
        assert_eq!(PolyForm::basic(x(), &[1]).d(), PolyForm::basic(Poly::one(), &[0, 1]));
        assert!(vol().d().is_zero());
        // d((z dy - y dz)/2) = -dy∧dz
        let a = PolyForm::basic(z(), &[1]).sub(&PolyForm::basic(y(), &[2])).scale(&qf(1, 2));
        assert_eq!(a.d(), PolyForm::basic(Poly::one(), &[1, 2]).scale(&q(-1)));
    }

    #[test]
    fn contraction_examples() {
        let dx = PolyVectorField::coordinate(3, 0);
        let dy = PolyVectorField::coordinate(3, 1);
        let dz = PolyVectorField::coordinate(3, 2);
        assert_eq!(vol().contract(&dx), PolyForm::basic(Poly::one(), &[1, 2]));
        assert_eq!(vol().contract_many(&[&dx, &dy]).unwrap(), PolyForm::dx(2));
        assert_eq!(vol().contract_many(&[&dx, &dy, &dz]).unwrap(), PolyForm::constant(q(1)));
        assert_eq!(vol().contract_many(&[&dy, &dx]).unwrap(), PolyForm::dx(2).scale(&q(-1)));
        assert!(matches!(PolyForm::dx(0).contract_many(&[&dx, &dy]), Err(Error::DegreeTooLow { need: 2, have: 1 })));
    }

    #[test]
    fn primitive_examples() {
        let origin = vec![q(0), q(0), q(0)];
        let a = PolyForm::basic(Poly::one(), &[1, 2]).scale(&q(-1));
        let expect = PolyForm::basic(z(), &[1]).sub(&PolyForm::basic(y(), &[2])).scale(&qf(1, 2));
        assert_eq!(primitive(&a, &origin).unwrap(), expect);
        assert!(primitive(&PolyForm::zero(), &origin).unwrap().is_zero());
        // primitive(df) = f - f(p) for f = x²y
        let f = x().mul(&x()).mul(&y());
        let p = vec![q(2), qf(-1, 3), q(5)];
        let beta = primitive(&PolyForm::function(f.clone()).d(), &p).unwrap();
        assert_eq!(beta, PolyForm::function(f.sub(&Poly::constant(f.eval(&p)))));
        assert!(beta.value_at(&p).is_zero());
        assert!(matches!(primitive(&PolyForm::basic(x(), &[1, 2]).add(&PolyForm::zero()), &origin), Err(Error::FormNotClosed { .. })));
        assert!(matches!(primitive(&PolyForm::function(x()), &origin), Err(Error::FunctionPrimitive)));
    }

    #[test]
    fn hamiltonian_examples() {
        let w = TwoPlecticForm::volume3(vec![q(0), q(0), q(0)]).unwrap();
        let a = hamiltonian_pair(&w, &PolyVectorField::coordinate(3, 0)).unwrap();
        assert_eq!(a, PolyForm::basic(z(), &[1]).sub(&PolyForm::basic(y(), &[2])).scale(&qf(1, 2)));
        assert!(hamiltonian_pair(&w, &PolyVectorField::zero(3)).unwrap().is_zero());
        let bad = PolyVectorField::new(vec![x(), Poly::zero(), Poly::zero()]);
        match hamiltonian_pair(&w, &bad) {
            Err(Error::NotHamiltonian { defect, .. }) => assert_eq!(defect, vol().to_string()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn brackets_and_zeta() {
        assert_eq!(zeta(2), q(1));
        assert_eq!(zeta(3), q(-1));
        assert_eq!(zeta(1), q(1));
        let w = TwoPlecticForm::volume3(vec![q(0), q(0), q(0)]).unwrap();
        let hs: Vec<HamiltonianForm> = (0..3)
            .map(|i| {
                let v = PolyVectorField::coordinate(3, i);
                HamiltonianForm::new(&w, hamiltonian_pair(&w, &v).unwrap(), v).unwrap()
            })
            .collect();
        assert_eq!(linfty_bracket(&w, &[&hs[0], &hs[1]]).unwrap(), PolyForm::dx(2));
        assert_eq!(linfty_bracket(&w, &[&hs[0], &hs[1], &hs[2]]).unwrap(), PolyForm::constant(q(-1)));
        assert!(matches!(linfty_bracket(&w, &[&hs[0]]), Err(Error::DegreeMismatch(_))));
        assert!(HamiltonianForm::new(&w, PolyForm::zero(), PolyVectorField::coordinate(3, 0)).is_err());
    }

    #[test]
    fn cartan_consistency_of_binary_bracket() {
        // d[α,β]' = -i_{[v_α, v_β]} ω for rotations and Heisenberg fields
        let w = TwoPlecticForm::volume3(vec![q(1), q(-2), qf(1, 2)]).unwrap();
        let families = vec![
            vec![
                PolyVectorField::new(vec![Poly::zero(), z(), y().scale(&q(-1))]),
                PolyVectorField::new(vec![z().scale(&q(-1)), Poly::zero(), x()]),
                PolyVectorField::new(vec![y(), x().scale(&q(-1)), Poly::zero()]),
            ],
            vec![
                PolyVectorField::coordinate(3, 0),
                PolyVectorField::new(vec![Poly::zero(), Poly::one(), x()]),
                PolyVectorField::coordinate(3, 2),
            ],
        ];
        for fields in families {
            let hs: Vec<HamiltonianForm> =
                fields.iter().map(|v| HamiltonianForm::new(&w, hamiltonian_pair(&w, v).unwrap(), v.clone()).unwrap()).collect();
            for a in &hs {
                for b in &hs {
                    let lhs = linfty_bracket(&w, &[a, b]).unwrap().d();
                    let rhs = w.form().contract(&a.field.bracket(&b.field)).scale(&q(-1));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn nondegeneracy() {
        let pts = vec![vec![q(1), q(1), q(1)]];
        assert!(TwoPlecticForm::new(3, vol(), vec![q(0); 3], pts.clone()).is_ok());
        // x dx∧dy∧dz degenerates at x = 0
        let f = PolyForm::basic(x(), &[0, 1, 2]);
        assert!(matches!(TwoPlecticForm::new(3, f.clone(), vec![q(0); 3], vec![]), Err(Error::PreconditionFailed(_))));
        assert!(TwoPlecticForm::new(3, f, vec![q(1), q(0), q(0)], vec![]).is_ok());
        // a 3-form on R^4 can be 2-plectic only if it is not decomposable
        let w4 = PolyForm::basic(Poly::one(), &[0, 1, 2]);
        assert!(TwoPlecticForm::new(4, w4, vec![q(0); 4], vec![]).is_err());
        let not_closed = PolyForm::basic(Poly::var(3), &[0, 1, 2]);
        assert!(matches!(TwoPlecticForm::new(4, not_closed, vec![q(0); 4], vec![]), Err(Error::FormNotClosed { .. })));
    }

    #[test]
    fn poly_arithmetic() {
        let p = x().add(&Poly::constant(q(2))).mul(&y());
        assert_eq!(p.eval(&[q(1), q(3)]), q(9));
        assert_eq!(p.translate(&[q(1), q(0)]).eval(&[q(0), q(3)]), q(9));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(x().mul(&x()).scale(&qf(-1, 2)).add(&Poly::one()).render(&["a".into()]), "1 - 1/2*a^2");
        let v = PolyVectorField::coordinate(3, 0);
        let w = PolyVectorField::new(vec![Poly::zero(), Poly::one(), x()]);
        assert_eq!(v.bracket(&w), PolyVectorField::coordinate(3, 2).add(&PolyVectorField::zero(3)));
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((prop::collection::vec(0u32..3, nvars), -3i64..=3), 0..4).prop_map(|ts| {
            let mut p = Poly::zero();
            for (e, c) in ts {
                p.add_term(e, q(c));
            }
            p
        })
    }

    fn arb_form(nvars: usize, k: usize) -> impl Strategy<Value = PolyForm> {
        let basis = ext_basis(nvars, k);
        prop::collection::vec(arb_poly(nvars), basis.len()).prop_map(move |ps| {
            let mut f = PolyForm::zero();
            for (idx, p) in basis.iter().zip(ps) {
                f.add_term(idx.clone(), &p);
            }
            f
        })
    }

    proptest! {
        #[test]
        fn d_squared_vanishes(nk in (1usize..=4).prop_flat_map(|n| (Just(n), 0..=n.min(3))).prop_flat_map(|(n, k)| arb_form(n, k))) {
            prop_assert!(nk.d().d().is_zero());
        }

        #[test]
        fn primitive_inverts_d(beta in (2usize..=4).prop_flat_map(|n| (Just(n), 0..n.min(3))).prop_flat_map(|(n, k)| arb_form(n, k)),
                               p in prop::collection::vec(-2i64..=2, 4)) {
            let alpha = beta.d();
            let p: Vec<Rational> = p.into_iter().map(q).collect();
            let prim = primitive(&alpha, &p).unwrap();
            prop_assert_eq!(prim.d(), alpha.clone());
            if alpha.degree() == Some(1) {
                prop_assert!(prim.value_at(&p).is_zero());
            }
        }

        #[test]
        fn bracket_is_antisymmetric_and_jacobi(a in prop::collection::vec(arb_poly(3), 3), b in prop::collection::vec(arb_poly(3), 3), c in prop::collection::vec(arb_poly(3), 3)) {
            let (u, v, w) = (PolyVectorField::new(a), PolyVectorField::new(b), PolyVectorField::new(c));
            prop_assert_eq!(u.bracket(&v), v.bracket(&u).scale(&q(-1)));
            let jac = u.bracket(&v.bracket(&w)).add(&v.bracket(&w.bracket(&u))).add(&w.bracket(&u.bracket(&v)));
            prop_assert!(jac.is_zero());
        }
    }
}
