//! Homotopy moment maps for Lie 2-algebra actions on `(R^n, ω)`.
//!
//! Everything lives in the double complex `CE(L) ⊗ Ω(R^n)`, stored as
//! [`CeCochain<PolyForm>`] with total differential
//! `d_tot(m ⊗ α) = d_CE m ⊗ α + (-1)^{|m|} m ⊗ dα`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::derham::{field_bracket, hamiltonian_pair, Poly, PolyForm, PolyVectorField, TwoPlecticForm};
use crate::error::{Error, Result};
use crate::existence::{check_star, OmegaOrigin, OmegaThreeP, StarSolution};
use crate::kernel::{ext_basis, ext_position, q, ExtIndex, Matrix, Rational};
use crate::lie::{Cochain, LieAlgebra, Representation};
use crate::lie2::{CeCochain, CeMonomial, MinimalLie2Algebra};

/// A Lie algebra acting on `R^n` by Hamiltonian polynomial vector fields,
/// together with the chosen Hamiltonian 1-forms `γ₁(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianAction {
    algebra: LieAlgebra,
    fields: Vec<PolyVectorField>,
    omega: TwoPlecticForm,
    gamma1: Vec<PolyForm>,
    coordinates: Vec<String>,
}

impl HamiltonianAction {
    /// Checks `[v_i, v_j] = v_{[e_i, e_j]}` and that every `i_{v_i} ω` is
    /// closed; `γ₁(e_i)` is the primitive of `-i_{v_i} ω` based at `p`.
    pub fn build(algebra: LieAlgebra, fields: Vec<PolyVectorField>, omega: TwoPlecticForm) -> Result<Self> {
        let n = omega.n();
        if fields.len() != algebra.dim() {
            return Err(Error::shape("action fields", algebra.dim(), fields.len()));
        }
        let fields: Vec<PolyVectorField> = fields
            .into_iter()
            .map(|v| {
                if v.dim() > n || v.components.iter().any(|c| c.nvars() > n) {
                    Err(Error::shape("vector field components", n, v.dim()))
                } else {
                    Ok(v.add(&PolyVectorField::zero(n)))
                }
            })
            .collect::<Result<_>>()?;
        let mut action = HamiltonianAction {
            algebra,
            fields,
            omega,
            gamma1: Vec::new(),
            coordinates: default_coordinates(n),
        };
        for i in 0..action.algebra.dim() {
            for j in i + 1..action.algebra.dim() {
                let defect = action.fields[i].bracket(&action.fields[j]).add(&action.field_of(action.algebra.bracket_basis(i, j)).scale(&q(-1)));
                if !defect.is_zero() {
                    return Err(Error::NotMorphism { i, j, defect: defect.render(&action.coordinates) });
                }
            }
        }
        action.gamma1 = (0..action.algebra.dim())
            .map(|i| {
                hamiltonian_pair(&action.omega, &action.fields[i]).map_err(|e| match e {
                    Error::NotHamiltonian { defect, .. } => Error::NotHamiltonian { generator: Some(i), defect },
                    other => other,
                })
            })
            .collect::<Result<_>>()?;
        Ok(action)
    }

    pub fn with_coordinates(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.omega.n() {
            return Err(Error::shape("coordinate names", self.omega.n(), names.len()));
        }
        self.coordinates = names;
        Ok(self)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn fields(&self) -> &[PolyVectorField] {
        &self.fields
    }

    pub fn omega(&self) -> &TwoPlecticForm {
        &self.omega
    }

    pub fn gamma1(&self) -> &[PolyForm] {
        &self.gamma1
    }

    pub fn coordinates(&self) -> &[String] {
        &self.coordinates
    }

    pub fn base_point(&self) -> &[Rational] {
        self.omega.base_point()
    }

    /// `v_x` for `x = Σ x^i e_i`.
    pub fn field_of(&self, x: &[Rational]) -> PolyVectorField {
        x.iter()
            .zip(&self.fields)
            .fold(PolyVectorField::zero(self.omega.n()), |acc, (c, v)| if c.is_zero() { acc } else { acc.add(&v.scale(c)) })
    }

    /// `Σ x^i γ₁(e_i)`.
    pub fn gamma1_of(&self, x: &[Rational]) -> PolyForm {
        x.iter().zip(&self.gamma1).fold(PolyForm::zero(), |acc, (c, a)| acc.add(&a.scale(c)))
    }

    /// `i(v_{i_1} ∧ … ∧ v_{i_k}) ω`.
    pub fn contract_generators(&self, idx: &[usize]) -> PolyForm {
        let vs: Vec<&PolyVectorField> = idx.iter().map(|&i| &self.fields[i]).collect();
        self.omega.form().contract_many(&vs).expect("3-form contracted at most three times")
    }

    /// Translations `∂_1, …, ∂_n` of the abelian algebra on `(R^3, vol)`.
    pub fn translations(p: Vec<Rational>) -> Result<Self> {
        let fields = (0..3).map(|i| PolyVectorField::coordinate(3, i)).collect();
        HamiltonianAction::build(LieAlgebra::abelian(3), fields, TwoPlecticForm::volume3(p)?)
    }

    /// Left-invariant frame of the Heisenberg group in the coordinates of
    /// the unipotent matrix `[[1, x, z], [0, 1, y], [0, 0, 1]]`.
    pub fn heisenberg(p: Vec<Rational>) -> Result<Self> {
        let x = Poly::var(0);
        let fields = vec![
            PolyVectorField::coordinate(3, 0),
            PolyVectorField::new(vec![Poly::zero(), Poly::one(), x]),
            PolyVectorField::coordinate(3, 2),
        ];
        HamiltonianAction::build(LieAlgebra::heisenberg(), fields, TwoPlecticForm::volume3(p)?)
    }

    /// Infinitesimal rotations `v_A(x) = -A x` of `R^3`.
    pub fn rotations(p: Vec<Rational>) -> Result<Self> {
        let g = LieAlgebra::so3();
        let fields = linear_fields(&(0..3).map(|i| g.ad(i)).collect::<Vec<_>>());
        HamiltonianAction::build(g, fields, TwoPlecticForm::volume3(p)?)
    }

    /// `sl(2)` acting linearly on the first two coordinates of `R^3`.
    pub fn sl2_linear(p: Vec<Rational>) -> Result<Self> {
        let g = LieAlgebra::from_brackets(
            vec!["H".into(), "E".into(), "F".into()],
            &[(0, 1, 1, q(2)), (0, 2, 2, q(-2)), (1, 2, 0, q(1))],
        )?;
        let mut h = Matrix::zeros(3, 3);
        h.set(0, 0, q(1));
        h.set(1, 1, q(-1));
        let mut e = Matrix::zeros(3, 3);
        e.set(0, 1, q(1));
        let mut f = Matrix::zeros(3, 3);
        f.set(1, 0, q(1));
        HamiltonianAction::build(g, linear_fields(&[h, e, f]), TwoPlecticForm::volume3(p)?)
    }
}

fn default_coordinates(n: usize) -> Vec<String> {
    if n == 3 {
        vec!["x".into(), "y".into(), "z".into()]
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// `v_A(x) = -A x`; with this sign `A ↦ v_A` is a Lie algebra morphism.
pub fn linear_fields(mats: &[Matrix]) -> Vec<PolyVectorField> {
    mats.iter()
        .map(|a| {
            PolyVectorField::new(
                (0..a.rows())
                    .map(|i| (0..a.cols()).fold(Poly::zero(), |acc, j| acc.add(&Poly::var(j).scale(&-a.get(i, j).clone()))))
                    .collect(),
            )
        })
        .collect()
}

/// `ω_k = Σ_I e^I ⊗ i(v_{I_1} ∧ … ∧ v_{I_k}) ω`.
pub fn omega_k(action: &HamiltonianAction, k: usize) -> CeCochain<PolyForm> {
    let mut out = CeCochain::zero();
    for idx in ext_basis(action.algebra.dim(), k) {
        let form = action.contract_generators(idx.as_slice());
        out.add_term(CeMonomial::new(idx, Default::default()), &form);
    }
    out
}

/// `ω̃ = ω₁ - ω₂ + ω₃`.
pub fn omega_tilde(action: &HamiltonianAction) -> CeCochain<PolyForm> {
    omega_k(action, 1).sub(&omega_k(action, 2)).add(&omega_k(action, 3))
}

/// `ω_3p(x, y, z) = ω(v_x, v_y, v_z)(p)`.
pub fn omega_3p(action: &HamiltonianAction) -> Result<OmegaThreeP> {
    let g = &action.algebra;
    let p = action.base_point();
    let values = Cochain::from_fn(g.dim(), 1, 3, |idx| vec![action.contract_generators(idx.as_slice()).value_at(p)]);
    OmegaThreeP::new(g, values, OmegaOrigin::EvaluatedAtPoint)
}

/// Defect of
/// `ι(v_{[x₁,x₂]} ∧ v_{x₃})ω - ι(v_{[x₁,x₃]} ∧ v_{x₂})ω + ι(v_{[x₂,x₃]} ∧ v_{x₁})ω = d(ι(v_{x₁} ∧ v_{x₂} ∧ v_{x₃})ω)`
/// on every basis triple; empty when the identity holds.
pub fn contraction_identity_defects(action: &HamiltonianAction) -> Vec<([usize; 3], PolyForm)> {
    let g = &action.algebra;
    let w = action.omega.form();
    let two = |x: &PolyVectorField, y: &PolyVectorField| w.contract(x).contract(y);
    let mut out = Vec::new();
    for idx in ext_basis(g.dim(), 3) {
        let [a, b, c] = [idx.as_slice()[0], idx.as_slice()[1], idx.as_slice()[2]];
        let v = |i: usize| &action.fields[i];
        let br = |i: usize, j: usize| action.field_of(g.bracket_basis(i, j));
        let lhs = two(&br(a, b), v(c)).sub(&two(&br(a, c), v(b))).add(&two(&br(b, c), v(a)));
        let rhs = action.contract_generators(&[a, b, c]).d();
        let defect = lhs.sub(&rhs);
        if !defect.is_zero() {
            out.push(([a, b, c], defect));
        }
    }
    out
}

/// `d_tot` on `CE(L) ⊗ Ω(R^n)`.
pub fn d_tot(l: &MinimalLie2Algebra, x: &CeCochain<PolyForm>) -> CeCochain<PolyForm> {
    let mut out = l.ce_diff(x);
    for (m, a) in x.terms() {
        let s = if m.degree() % 2 == 0 { q(1) } else { q(-1) };
        out.add_term(m.clone(), &a.d().scale(&s));
    }
    out
}

/// `g` viewed as the Lie 2-algebra `0[1] ⊕ g`, enough for `d_tot` on
/// cochains without `h*` factors.
pub fn bare_lie2(g: &LieAlgebra) -> MinimalLie2Algebra {
    MinimalLie2Algebra::new(g.clone(), Representation::trivial(g, 0), Cochain::zero(g.dim(), 0, 3)).expect("zero cocycle")
}

/// Components `μ₁|_g`, `μ₁|_h`, `μ₂` of a candidate moment map. `mu2` is
/// indexed by pairs `i < j` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentMapCandidate {
    pub mu1_g: Vec<PolyForm>,
    pub mu1_h: Vec<Poly>,
    pub mu2: Vec<Poly>,
}

impl MomentMapCandidate {
    pub fn new(dim_g: usize, mu1_g: Vec<PolyForm>, mu1_h: Vec<Poly>, mu2: Vec<Poly>) -> Result<Self> {
        if mu1_g.len() != dim_g {
            return Err(Error::shape("mu1_g entries", dim_g, mu1_g.len()));
        }
        if let Some(i) = mu1_g.iter().position(|a| !a.is_zero() && a.degree() != Some(1)) {
            return Err(Error::DegreeMismatch(format!("mu1_g[{i}] must be a 1-form, got {}", mu1_g[i])));
        }
        let pairs = dim_g * dim_g.saturating_sub(1) / 2;
        if mu2.len() != pairs {
            return Err(Error::shape("mu2 entries", pairs, mu2.len()));
        }
        Ok(MomentMapCandidate { mu1_g, mu1_h, mu2 })
    }

    pub fn zero(dim_g: usize, dim_h: usize) -> Self {
        MomentMapCandidate {
            mu1_g: vec![PolyForm::zero(); dim_g],
            mu1_h: vec![Poly::zero(); dim_h],
            mu2: vec![Poly::zero(); dim_g * dim_g.saturating_sub(1) / 2],
        }
    }

    pub fn dim_g(&self) -> usize {
        self.mu1_g.len()
    }

    pub fn dim_h(&self) -> usize {
        self.mu1_h.len()
    }

    /// `μ₂(e_i, e_j)`, antisymmetric in `i, j`.
    pub fn mu2(&self, i: usize, j: usize) -> Poly {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Poly::zero(),
            std::cmp::Ordering::Less => self.mu2[ext_position(self.dim_g(), &ExtIndex::new(vec![i, j]))].clone(),
            std::cmp::Ordering::Greater => self.mu2(j, i).scale(&q(-1)),
        }
    }

    pub fn set_mu2(&mut self, i: usize, j: usize, p: Poly) {
        let (a, b, p) = if i < j { (i, j, p) } else { (j, i, p.scale(&q(-1))) };
        let pos = ext_position(self.dim_g(), &ExtIndex::new(vec![a, b]));
        self.mu2[pos] = p;
    }

    /// `μ = Σ e^i ⊗ μ₁(e_i) + Σ f^α ⊗ μ₁(h_α) + Σ_{i<j} e^i e^j ⊗ μ₂(e_i, e_j)`.
    pub fn to_ce(&self) -> CeCochain<PolyForm> {
        let mut out = CeCochain::zero();
        for (i, a) in self.mu1_g.iter().enumerate() {
            out.add_term(CeMonomial::e(&[i]), a);
        }
        for (alpha, f) in self.mu1_h.iter().enumerate() {
            out.add_term(CeMonomial::f(alpha), &PolyForm::function(f.clone()));
        }
        for (idx, f) in ext_basis(self.dim_g(), 2).into_iter().zip(&self.mu2) {
            out.add_term(CeMonomial::new(idx, Default::default()), &PolyForm::function(f.clone()));
        }
        out
    }

    pub fn max_poly_degree(&self) -> Option<u32> {
        self.to_ce().terms().filter_map(|(_, a)| a.max_poly_degree()).max()
    }
}

/// `γ` for `R[1] ⊕_{-ω_3p} g` and that Lie 2-algebra.
pub fn build_gamma(action: &HamiltonianAction) -> Result<(MinimalLie2Algebra, MomentMapCandidate)> {
    let g = action.algebra.clone();
    let w3 = omega_3p(action)?;
    let l = MinimalLie2Algebra::new(g.clone(), Representation::trivial(&g, 1), w3.values.scale(&q(-1)))?;
    let gamma = MomentMapCandidate::new(g.dim(), action.gamma1.clone(), vec![Poly::one()], gamma2(action)?)?;
    Ok((l, gamma))
}

/// `γ₂(e_i, e_j)`: the function with `dγ₂ = γ₁([e_i, e_j]) - i(v_i ∧ v_j)ω`
/// vanishing at `p`.
pub fn gamma2(action: &HamiltonianAction) -> Result<Vec<Poly>> {
    let g = &action.algebra;
    ext_basis(g.dim(), 2)
        .iter()
        .map(|idx| {
            let [i, j] = [idx.as_slice()[0], idx.as_slice()[1]];
            let rhs = action.gamma1_of(g.bracket_basis(i, j)).sub(&action.contract_generators(&[i, j]));
            Ok(crate::derham::primitive(&rhs, action.base_point())?.function_part())
        })
        .collect()
}

/// `φ^η`: `μ₁|_g = γ₁`, `μ₁|_h = ξ` (constants), `μ₂ = φ + γ₂`.
pub fn build_phi_eta(action: &HamiltonianAction, l: &MinimalLie2Algebra, eta: &StarSolution) -> Result<MomentMapCandidate> {
    if l.g() != &action.algebra {
        return Err(Error::shape("Lie algebra of L", "the acting algebra", "a different algebra"));
    }
    check_star(l, &omega_3p(action)?, eta)?;
    let g2 = gamma2(action)?;
    let mu2 = ext_basis(l.dim_g(), 2)
        .iter()
        .zip(g2)
        .map(|(idx, f)| f.add(&Poly::constant(eta.phi.get(idx)[0].clone())))
        .collect();
    MomentMapCandidate::new(l.dim_g(), action.gamma1.clone(), eta.xi.iter().cloned().map(Poly::constant).collect(), mu2)
}

/// The five component equations of a moment map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MomentEquation {
    /// `d μ₁(x) = -i_{v_x} ω`
    Hamiltonian,
    /// `d μ₁(h) = 0`
    ClosedOnH,
    /// `d μ₂(x, y) = μ₁([x, y]) - [μ₁(x), μ₁(y)]'`
    Binary,
    /// `μ₁(ρ(x) h) = 0`
    Equivariance,
    /// `μ₁(c(x, y, z)) - [μ₁(x), μ₁(y), μ₁(z)]' = d_g μ₂(x, y, z)`
    Ternary,
}

impl MomentEquation {
    pub const ALL: [MomentEquation; 5] =
        [MomentEquation::Hamiltonian, MomentEquation::ClosedOnH, MomentEquation::Binary, MomentEquation::Equivariance, MomentEquation::Ternary];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationFailure {
    /// Basis indices: generators of `g`, then for equivariance the `h` index.
    pub tuple: Vec<usize>,
    pub defect: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationStatus {
    pub equation: MomentEquation,
    pub passed: bool,
    pub checked: usize,
    pub first_failure: Option<EquationFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiveEquationReport {
    pub passed: bool,
    pub equations: Vec<EquationStatus>,
}

impl FiveEquationReport {
    pub fn first_failed(&self) -> Option<MomentEquation> {
        self.equations.iter().find(|e| !e.passed).map(|e| e.equation)
    }
}

fn check_shapes(action: &HamiltonianAction, l: &MinimalLie2Algebra, mu: &MomentMapCandidate) -> Result<()> {
    if l.g() != &action.algebra {
        return Err(Error::shape("Lie algebra of L", "the acting algebra", "a different algebra"));
    }
    if mu.dim_g() != l.dim_g() {
        return Err(Error::shape("mu1_g entries", l.dim_g(), mu.dim_g()));
    }
    if mu.dim_h() != l.dim_h() {
        return Err(Error::shape("mu1_h entries", l.dim_h(), mu.dim_h()));
    }
    Ok(())
}

/// Check the five equations as polynomial identities on basis tuples.
pub fn verify_moment_map(action: &HamiltonianAction, l: &MinimalLie2Algebra, mu: &MomentMapCandidate) -> Result<FiveEquationReport> {
    check_shapes(action, l, mu)?;
    let g = l.g();
    let n = g.dim();
    let names = action.coordinates();
    let omega = action.omega();
    let mut statuses = BTreeMap::new();
    let mut record = |eq: MomentEquation, tuple: Vec<usize>, defect: PolyForm| {
        let st = statuses.entry(eq).or_insert(EquationStatus { equation: eq, passed: true, checked: 0, first_failure: None });
        st.checked += 1;
        if !defect.is_zero() && st.passed {
            st.passed = false;
            st.first_failure = Some(EquationFailure { tuple, defect: defect.render(names) });
        }
    };
    let mu1_of = |x: &[Rational]| x.iter().zip(&mu.mu1_g).fold(PolyForm::zero(), |acc, (c, a)| acc.add(&a.scale(c)));

    for i in 0..n {
        record(MomentEquation::Hamiltonian, vec![i], mu.mu1_g[i].d().add(&omega.form().contract(&action.fields[i])));
    }
    for (a, f) in mu.mu1_h.iter().enumerate() {
        record(MomentEquation::ClosedOnH, vec![a], PolyForm::function(f.clone()).d());
    }
    for i in 0..n {
        for j in i + 1..n {
            let br = field_bracket(omega, &[&action.fields[i], &action.fields[j]])?;
            let defect = PolyForm::function(mu.mu2(i, j)).d().sub(&mu1_of(g.bracket_basis(i, j))).add(&br);
            record(MomentEquation::Binary, vec![i, j], defect);
        }
    }
    for i in 0..n {
        let m = l.h().matrix(i);
        for b in 0..l.dim_h() {
            let v = (0..l.dim_h()).fold(Poly::zero(), |acc, a| acc.add(&mu.mu1_h[a].scale(m.get(a, b))));
            record(MomentEquation::Equivariance, vec![i, b], PolyForm::function(v));
        }
    }
    for idx in ext_basis(n, 3) {
        let [x, y, z] = [idx.as_slice()[0], idx.as_slice()[1], idx.as_slice()[2]];
        let c = l.c().value(x, y, z);
        let muc = c.iter().zip(&mu.mu1_h).fold(Poly::zero(), |acc, (cv, f)| acc.add(&f.scale(cv)));
        let br = field_bracket(omega, &[&action.fields[x], &action.fields[y], &action.fields[z]])?.function_part();
        let dg = (0..n).fold(Poly::zero(), |acc, k| {
            acc.add(&mu.mu2(x, k).scale(&g.bracket_basis(y, z)[k]))
                .sub(&mu.mu2(y, k).scale(&g.bracket_basis(x, z)[k]))
                .add(&mu.mu2(z, k).scale(&g.bracket_basis(x, y)[k]))
        });
        record(MomentEquation::Ternary, vec![x, y, z], PolyForm::function(muc.sub(&br).sub(&dg)));
    }
    let equations: Vec<EquationStatus> = MomentEquation::ALL
        .iter()
        .map(|&eq| statuses.remove(&eq).unwrap_or(EquationStatus { equation: eq, passed: true, checked: 0, first_failure: None }))
        .collect();
    Ok(FiveEquationReport { passed: equations.iter().all(|e| e.passed), equations })
}

/// Defect of `d_tot μ = ω̃` in one component `Λ^a g* ⊗ S^b h* ⊗ Ω^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentDefect {
    pub ext_degree: usize,
    pub sym_degree: usize,
    pub form_degree: usize,
    pub defect: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DtotReport {
    pub passed: bool,
    pub defects: Vec<ComponentDefect>,
}

/// Render a double-complex element as `e1e2f1 ⊗ (form)` terms.
pub fn render_ce_form(x: &CeCochain<PolyForm>, names: &[String]) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.terms()
        .map(|(m, a)| {
            let e: String = m.ext.as_slice().iter().map(|i| format!("e{}", i + 1)).collect();
            let f: String = m.sym.as_slice().iter().map(|i| format!("f{}", i + 1)).collect();
            let mono = format!("{e}{f}");
            format!("{} ⊗ [{}]", if mono.is_empty() { "1".into() } else { mono }, a.render(names))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Compare `d_tot μ` with `ω̃` component by component.
pub fn verify_via_dtot(action: &HamiltonianAction, l: &MinimalLie2Algebra, mu: &MomentMapCandidate) -> Result<DtotReport> {
    check_shapes(action, l, mu)?;
    let diff = d_tot(l, &mu.to_ce()).sub(&omega_tilde(action));
    let mut parts: BTreeMap<(usize, usize, usize), CeCochain<PolyForm>> = BTreeMap::new();
    for (m, a) in diff.terms() {
        for k in 0..=action.omega.n() {
            let comp = a.component(k);
            if !comp.is_zero() {
                let (ea, sb) = m.bidegree();
                parts.entry((ea, sb, k)).or_default().add_term(m.clone(), &comp);
            }
        }
    }
    let defects: Vec<ComponentDefect> = parts
        .into_iter()
        .map(|((a, b, k), x)| ComponentDefect { ext_degree: a, sym_degree: b, form_degree: k, defect: render_ce_form(&x, action.coordinates()) })
        .collect();
    Ok(DtotReport { passed: defects.is_empty(), defects })
}

/// `r(m ⊗ α) = m · α(p)`, where forms of positive degree evaluate to zero.
pub fn restrict_r(x: &CeCochain<PolyForm>, p: &[Rational]) -> CeCochain<Rational> {
    let mut out = CeCochain::zero();
    for (m, a) in x.terms() {
        out.add_term(m.clone(), &a.value_at(p));
    }
    out
}

/// `r(μ)` as a candidate solution of the primitive system.
pub fn restrict_to_star(l: &MinimalLie2Algebra, mu: &MomentMapCandidate, p: &[Rational]) -> StarSolution {
    StarSolution::from_ce(l, &restrict_r(&mu.to_ce(), p))
}

/// `α = Σ e^i ⊗ a_i` with `d_tot α = μ - μ'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerEquivalence {
    pub alpha: Vec<Poly>,
    pub degree_bound: u32,
}

fn monomials(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                let used: u32 = e.iter().sum();
                (0..=bound - used).map(move |k| {
                    let mut f = e.clone();
                    f.push(k);
                    f
                })
            })
            .collect();
    }
    out
}

type FlatKey = (CeMonomial, ExtIndex, Vec<u32>);

fn flatten(x: &CeCochain<PolyForm>) -> BTreeMap<FlatKey, Rational> {
    let mut out = BTreeMap::new();
    for (m, a) in x.terms() {
        for (idx, f) in a.terms() {
            for (e, c) in f.terms() {
                out.insert((m.clone(), idx.clone(), e.clone()), c.clone());
            }
        }
    }
    out
}

/// Search `α ∈ g* ⊗ {polynomials of degree ≤ bound}` with
/// `d_tot α = μ - μ'`. The default bound is the largest coefficient degree
/// of `μ - μ'` plus one.
pub fn inner_equivalence(
    action: &HamiltonianAction,
    l: &MinimalLie2Algebra,
    mu: &MomentMapCandidate,
    mu_prime: &MomentMapCandidate,
    degree_bound: Option<u32>,
) -> Result<InnerEquivalence> {
    check_shapes(action, l, mu)?;
    check_shapes(action, l, mu_prime)?;
    let diff = mu.to_ce().sub(&mu_prime.to_ce());
    let dd = d_tot(l, &diff);
    if !dd.is_zero() {
        return Err(Error::NotClosedDifference(render_ce_form(&dd, action.coordinates())));
    }
    let bound = degree_bound.unwrap_or_else(|| diff.terms().filter_map(|(_, a)| a.max_poly_degree()).max().map_or(0, |d| d + 1));
    let n = action.omega.n();
    let dim = l.dim_g();
    if diff.is_zero() {
        return Ok(InnerEquivalence { alpha: vec![Poly::zero(); dim], degree_bound: bound });
    }
    let monos = monomials(n, bound);
    let unknowns: Vec<(usize, &Vec<u32>)> = (0..dim).flat_map(|i| monos.iter().map(move |m| (i, m))).collect();
    let columns: Vec<BTreeMap<FlatKey, Rational>> = unknowns
        .iter()
        .map(|(i, e)| d_tot(l, &CeCochain::term(CeMonomial::e(&[*i]), PolyForm::function(Poly::monomial((*e).clone(), q(1))))))
        .map(|x| flatten(&x))
        .collect();
    let rhs = flatten(&diff);
    let mut keys: Vec<&FlatKey> = columns.iter().flat_map(|c| c.keys()).chain(rhs.keys()).collect();
    keys.sort();
    keys.dedup();
    let row_of: BTreeMap<&FlatKey, usize> = keys.iter().enumerate().map(|(r, k)| (*k, r)).collect();
    let mut m = Matrix::zeros(keys.len(), unknowns.len());
    for (c, col) in columns.iter().enumerate() {
        for (k, v) in col {
            m.set(row_of[k], c, v.clone());
        }
    }
    let mut b = vec![Rational::zero(); keys.len()];
    for (k, v) in &rhs {
        b[row_of[k]] = v.clone();
    }
    let Some(sol) = m.solve_affine(&b)?.particular else {
        return Err(Error::NotFoundWithinBound { bound });
    };
    let mut alpha = vec![Poly::zero(); dim];
    for ((i, e), c) in unknowns.iter().zip(sol) {
        alpha[*i].add_term((*e).clone(), c);
    }
    let alpha_ce = alpha.iter().enumerate().fold(CeCochain::zero(), |acc: CeCochain<PolyForm>, (i, a)| {
        acc.add(&CeCochain::term(CeMonomial::e(&[i]), PolyForm::function(a.clone())))
    });
    if d_tot(l, &alpha_ce) != diff {
        return Err(Error::Internal("inner-equivalence solution failed re-verification".into()));
    }
    Ok(InnerEquivalence { alpha, degree_bound: bound })
}

/// Corpus actions on `(R^3, vol)` with the given base point.
pub fn corpus_actions(p: &[Rational]) -> Vec<(&'static str, HamiltonianAction)> {
    let p = p.to_vec();
    vec![
        ("translations", HamiltonianAction::translations(p.clone()).expect("valid")),
        ("heisenberg", HamiltonianAction::heisenberg(p.clone()).expect("valid")),
        ("rotations", HamiltonianAction::rotations(p.clone()).expect("valid")),
        ("sl2-linear", HamiltonianAction::sl2_linear(p).expect("valid")),
    ]
}
