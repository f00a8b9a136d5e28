//! Existence of `h[1] ⊕ g` moment maps, decided algebraically.
//!
//! A degree-2 element `η = ξ + φ ∈ h* ⊕ ∧²g*` of `CE(L)` with
//! `d_CE(L) η = ω_3p` is the same as a solution of
//!
//! ```text
//! ξ ∘ ρ = 0,    d_g φ - ξ∘c = ω_3p
//! ```
//!
//! which [`solve_star`] solves directly on `CE(L)`. [`solve_via_psi`] decides
//! the same question through the image of `Ψ: ξ ↦ [ξ∘c]` in `H³(g)`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{ext_basis, format_vec, q, Matrix, Rational};
use crate::lie::{class_is_zero, cohomology_dim, differential_matrix, ce_differential, Cochain, CohomologyClass, ComplexTag, LieAlgebra, Representation};
use crate::lie2::{CeCochain, CeMonomial, MinimalLie2Algebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OmegaOrigin {
    /// Supplied as an element of `∧³g*`.
    Direct,
    /// `ω(v_x, v_y, v_z)` evaluated at the base point of an action.
    EvaluatedAtPoint,
}

/// A closed scalar 3-cochain on `g` playing the role of `ω_3p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaThreeP {
    pub values: Cochain,
    pub origin: OmegaOrigin,
}

impl OmegaThreeP {
    pub fn new(g: &LieAlgebra, values: Cochain, origin: OmegaOrigin) -> Result<Self> {
        if values.degree != 3 || values.dim_v != 1 || values.dim_g != g.dim() {
            return Err(Error::shape(
                "omega_3p",
                format!("scalar 3-cochain on a {}-dimensional algebra", g.dim()),
                format!("{}-cochain with {} components on dim {}", values.degree, values.dim_v, values.dim_g),
            ));
        }
        let d = ce_differential(g, &Representation::trivial(g, 1), &values)?;
        if !d.is_zero() {
            return Err(Error::NotClosed(format!("d omega_3p = {:?}", d.values.iter().map(|v| format_vec(v)).collect::<Vec<_>>())));
        }
        Ok(OmegaThreeP { values, origin })
    }
}

/// A solution `η = (ξ, φ)` of the primitive system together with the
/// directions of the solution space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarSolution {
    #[serde(serialize_with = "crate::io::ser_vec")]
    pub xi: Vec<Rational>,
    pub phi: Cochain,
    pub kernel_basis: Vec<StarDirection>,
}

/// A solution of the homogeneous system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarDirection {
    #[serde(serialize_with = "crate::io::ser_vec")]
    pub xi: Vec<Rational>,
    pub phi: Cochain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum StarOutcome {
    Solved(StarSolution),
    /// `rank [D | w] > rank D`, so `[ω_3p]` is nonzero in `H³(CE(L))`.
    NoSolution { rank_system: usize, rank_augmented: usize },
}

impl StarOutcome {
    pub fn solution(&self) -> Option<&StarSolution> {
        match self {
            StarOutcome::Solved(s) => Some(s),
            StarOutcome::NoSolution { .. } => None,
        }
    }
}

impl StarSolution {
    /// `η` as an element of `CE(L)` of degree 2.
    pub fn as_ce(&self) -> CeCochain<Rational> {
        CeCochain::from_h_dual(&self.xi).add(&CeCochain::from_lie_cochain(&self.phi).expect("scalar"))
    }

    pub fn from_ce(l: &MinimalLie2Algebra, eta: &CeCochain<Rational>) -> Self {
        let xi = (0..l.dim_h()).map(|a| eta.get(&CeMonomial::f(a)).cloned().unwrap_or_else(Rational::zero)).collect();
        StarSolution { xi, phi: eta.to_lie_cochain(l.dim_g(), 2), kernel_basis: Vec::new() }
    }
}

/// The class `Ψ(ξ) = [d₃ξ]` in `H³(g)`; it equals `[ω_3p]` whenever `ξ` is
/// the `h*` part of a solution of the primitive system.
pub fn psi(l: &MinimalLie2Algebra, xi: &[Rational]) -> Result<CohomologyClass> {
    let g = l.g();
    if xi.len() != l.dim_h() {
        return Err(Error::shape("element of h*", l.dim_h(), xi.len()));
    }
    for i in 0..g.dim() {
        let row = l.h().matrix(i).transpose().mul_vec(xi)?;
        if row.iter().any(|x| !x.is_zero()) {
            return Err(Error::NotInAnnihilator);
        }
    }
    CohomologyClass::new(g, &Representation::trivial(g, 1), ComplexTag::LieTrivial, l.d3(xi)?)
}

/// Solve `d_CE(L) η = ω_3p` for `η ∈ CE²(L)`.
pub fn solve_star(l: &MinimalLie2Algebra, w: &OmegaThreeP) -> Result<StarOutcome> {
    check_omega(l, w)?;
    let src = l.basis(2);
    let tgt = l.basis(3);
    let d = l.diff_matrix(2);
    let rhs = CeCochain::from_lie_cochain(&w.values)?.coords(&tgt);
    let sol = d.solve_affine(&rhs)?;
    let Some(p) = sol.particular else {
        return Ok(StarOutcome::NoSolution { rank_system: sol.rank, rank_augmented: sol.augmented_rank });
    };
    let split = |v: &[Rational]| {
        let s = StarSolution::from_ce(l, &CeCochain::from_coords(&src, v));
        StarDirection { xi: s.xi, phi: s.phi }
    };
    let base = split(&p);
    let solution = StarSolution { xi: base.xi, phi: base.phi, kernel_basis: sol.kernel_basis.iter().map(|k| split(k)).collect() };
    check_star(l, w, &solution)?;
    Ok(StarOutcome::Solved(solution))
}

/// Decide solvability through `Ψ`: is `ω_3p ∈ im d_g + span{ξ∘c : ξ ∈ [g,h]°}`?
/// Returns `(ξ, φ)` on success.
pub fn solve_via_psi(l: &MinimalLie2Algebra, w: &OmegaThreeP) -> Result<Option<(Vec<Rational>, Cochain)>> {
    check_omega(l, w)?;
    let g = l.g();
    let n = g.dim();
    let d2 = differential_matrix(g, &Representation::trivial(g, 1), 2);
    let ann = l.bracket_annihilator();
    let mut cols: Vec<Vec<Rational>> = (0..d2.cols()).map(|j| d2.column(j)).collect();
    for xi in &ann {
        cols.push(l.d3(xi)?.flatten());
    }
    let m = Matrix::from_columns(ext_basis(n, 3).len(), &cols)?;
    let sol = m.solve_affine(&w.values.flatten())?;
    Ok(sol.particular.map(|x| {
        let k = d2.cols();
        let phi = Cochain::scalar(n, 2, &x[..k]).expect("sized");
        let mut xi = vec![Rational::zero(); l.dim_h()];
        for (coef, a) in x[k..].iter().zip(&ann) {
            for (t, v) in xi.iter_mut().zip(a) {
                *t += coef * v;
            }
        }
        (xi, phi)
    }))
}

fn check_omega(l: &MinimalLie2Algebra, w: &OmegaThreeP) -> Result<()> {
    if w.values.dim_g != l.dim_g() {
        return Err(Error::shape("omega_3p algebra dimension", l.dim_g(), w.values.dim_g));
    }
    Ok(())
}

/// Re-check `ξ∘ρ = 0` and `d_g φ + d₃ ξ = ω_3p`.
pub fn check_star(l: &MinimalLie2Algebra, w: &OmegaThreeP, eta: &StarSolution) -> Result<()> {
    let g = l.g();
    for i in 0..g.dim() {
        let v = l.h().matrix(i).transpose().mul_vec(&eta.xi)?;
        if v.iter().any(|x| !x.is_zero()) {
            return Err(Error::StarViolation(format!("xi∘rho(e{}) = {:?}", i + 1, format_vec(&v))));
        }
    }
    let lhs = ce_differential(g, &Representation::trivial(g, 1), &eta.phi)?.add(&l.d3(&eta.xi)?)?;
    if lhs != w.values {
        return Err(Error::StarViolation(format!(
            "d_g phi + d3 xi = {:?}, omega_3p = {:?}",
            format_vec(&lhs.flatten()),
            format_vec(&w.values.flatten())
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionVerdict {
    Exists,
    NotExists,
    Inconclusive,
}

fn require_nonzero_class(g: &LieAlgebra, w: &OmegaThreeP) -> Result<()> {
    if class_is_zero(g, &Representation::trivial(g, 1), &w.values)?.is_zero() {
        return Err(Error::PreconditionFailed("[omega_3p]_g = 0".into()));
    }
    Ok(())
}

/// Whether `[c_red]_g = 0` in `H³(g) ⊗ h/[g,h]`.
pub fn c_red_class_is_zero(l: &MinimalLie2Algebra) -> Result<bool> {
    let red = l.reduce()?;
    if red.dim_h_red() == 0 {
        return Ok(true);
    }
    Ok(class_is_zero(l.g(), &red.h_red, red.c_red.cochain())?.is_zero())
}

/// `[c_red] = 0` rules out a moment map when `[ω_3p] ≠ 0`.
pub fn criterion_cred_zero(l: &MinimalLie2Algebra, w: &OmegaThreeP) -> Result<CriterionVerdict> {
    require_nonzero_class(l.g(), w)?;
    Ok(if c_red_class_is_zero(l)? { CriterionVerdict::NotExists } else { CriterionVerdict::Inconclusive })
}

/// `dim H³(g) = 1` and `[c_red] ≠ 0` force a moment map when `[ω_3p] ≠ 0`.
pub fn criterion_h3_onedim(l: &MinimalLie2Algebra, w: &OmegaThreeP) -> Result<CriterionVerdict> {
    let g = l.g();
    require_nonzero_class(g, w)?;
    let h3 = cohomology_dim(g, &Representation::trivial(g, 1), 3);
    Ok(if h3 == 1 && !c_red_class_is_zero(l)? { CriterionVerdict::Exists } else { CriterionVerdict::Inconclusive })
}

/// The L∞-morphism `f: h[1] ⊕ g → R[1] ⊕_{-ω_3p} g` with `f₁|_g = id`,
/// `f₁|_h = ξ`, `f₂ = φ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraicMorphism {
    pub f1_g_is_identity: bool,
    #[serde(serialize_with = "crate::io::ser_vec")]
    pub f1_h: Vec<Rational>,
    pub f2: Cochain,
}

/// Build `f` from `η` and check both morphism equations on basis tuples:
/// `f₁(ρ(x)h) = 0` and
/// `f₁(c(x,y,z)) - f₂(x,[y,z]) + f₂(y,[x,z]) - f₂(z,[x,y]) = -ω_3p(x,y,z)`.
pub fn eta_to_morphism(l: &MinimalLie2Algebra, w: &OmegaThreeP, eta: &StarSolution) -> Result<AlgebraicMorphism> {
    let g = l.g();
    let n = g.dim();
    let m = l.dim_h();
    if eta.xi.len() != m || eta.phi.dim_g != n || eta.phi.degree != 2 {
        return Err(Error::shape("eta", format!("(h* of dim {m}, ∧²g* of dim {n})"), format!("({}, dim g {})", eta.xi.len(), eta.phi.dim_g)));
    }
    let xi_of = |v: &[Rational]| v.iter().zip(&eta.xi).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
    for i in 0..n {
        for a in 0..m {
            let h: Vec<Rational> = (0..m).map(|b| q((a == b) as i64)).collect();
            let val = xi_of(&l.h().act(i, &h));
            if !val.is_zero() {
                return Err(Error::StarViolation(format!("f1([e{}, h{}]) = {val}", i + 1, a + 1)));
            }
        }
    }
    let f2 = |x: usize, y: &[Rational]| -> Rational {
        y.iter().enumerate().fold(Rational::zero(), |acc, (k, v)| acc + v * eta.phi.eval_scalar(&[x, k]))
    };
    for t in ext_basis(n, 3) {
        let [x, y, z] = [t.as_slice()[0], t.as_slice()[1], t.as_slice()[2]];
        let lhs = xi_of(&l.c().value(x, y, z)) - f2(x, g.bracket_basis(y, z)) + f2(y, g.bracket_basis(x, z))
            - f2(z, g.bracket_basis(x, y));
        let rhs = -w.values.eval_scalar(&[x, y, z]);
        if lhs != rhs {
            return Err(Error::StarViolation(format!("morphism equation on {t}: {lhs} != {rhs}")));
        }
    }
    Ok(AlgebraicMorphism { f1_g_is_identity: true, f1_h: eta.xi.clone(), f2: eta.phi.clone() })
}

/// The quotient `h/ker ξ` of `L` and its strict isomorphism with
/// `R[1] ⊕_{ξ∘c} g` via `(ξ, id_g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientPresentation {
    #[serde(serialize_with = "crate::io::ser_vec_vec")]
    pub kernel_basis: Vec<Vec<Rational>>,
    /// Representative `h₀` with `ξ(h₀) = 1`; its class spans the quotient.
    #[serde(serialize_with = "crate::io::ser_vec")]
    pub section: Vec<Rational>,
    pub quotient_dim: usize,
    /// Induced cocycle in the basis `[h₀]`.
    pub induced_cocycle: Cochain,
    pub strict_isomorphism: bool,
    /// `[ξ∘c]_g = -[ω_3p]_g`.
    pub class_relation_holds: bool,
}

pub fn quotient_presentation(l: &MinimalLie2Algebra, w: &OmegaThreeP, eta: &StarSolution) -> Result<QuotientPresentation> {
    if eta.xi.iter().all(Zero::is_zero) {
        return Err(Error::XiZero);
    }
    let g = l.g();
    let m = l.dim_h();
    let xi_row = Matrix::from_rows(vec![eta.xi.clone()])?;
    let ker = xi_row.kernel();
    let section = xi_row.solve_affine(&[q(1)])?.particular.ok_or_else(|| Error::Internal("xi != 0 but xi(h) = 1 unsolvable".into()))?;
    let xi_of = |v: &[Rational]| v.iter().zip(&eta.xi).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
    // ker ξ is an ideal: ρ(e_i) ker ξ ⊆ ker ξ
    for i in 0..g.dim() {
        for k in &ker {
            if !xi_of(&l.h().act(i, k)).is_zero() {
                return Err(Error::StarViolation(format!("ker xi not stable under e{}", i + 1)));
            }
        }
    }
    // induced action on the quotient: [ρ(e_i) h₀] = ξ(ρ(e_i) h₀) [h₀]
    let induced_action_trivial = (0..g.dim()).all(|i| xi_of(&l.h().act(i, &section)).is_zero());
    let induced = l.c().cochain().compose(&xi_row)?;
    let target = l.d3(&eta.xi)?.scale(&q(-1));
    let strict_isomorphism = induced_action_trivial && induced == target && ker.len() + 1 == m;
    let relation = target.add(&w.values)?;
    let class_relation_holds = class_is_zero(g, &Representation::trivial(g, 1), &relation)?.is_zero();
    let quotient_dim = m - ker.len();
    Ok(QuotientPresentation { kernel_basis: ker, section, quotient_dim, induced_cocycle: induced, strict_isomorphism, class_relation_holds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Exists,
    NotExists,
    UndecidedGeometric,
}

/// Which argument settled the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    ClassZero,
    CRedZero,
    H3OneDim,
    DirectStar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub omega_3p_class_zero: bool,
    pub c_red_class_zero: bool,
    pub h3_dim: usize,
    pub annihilator_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExistenceReport {
    pub verdict: Verdict,
    pub criterion: Criterion,
    /// True when a solution of the primitive system exists in `CE(L)`.
    pub algebraic_solution: bool,
    pub classes: ClassSummary,
    pub certificate: StarOutcome,
    pub psi_route_agrees: bool,
    pub morphism: Option<AlgebraicMorphism>,
    pub quotient: Option<QuotientPresentation>,
    pub note: Option<String>,
}

/// Run every criterion and the direct solve, cross-check them and produce a
/// verdict. `h1_vanishes` states whether the geometric side is known to have
/// `H¹(M) = 0` (always true for actions on coordinate space).
pub fn decide(l: &MinimalLie2Algebra, w: &OmegaThreeP, h1_vanishes: bool) -> Result<ExistenceReport> {
    let g = l.g();
    let triv = Representation::trivial(g, 1);
    let w_zero = class_is_zero(g, &triv, &w.values)?.is_zero();
    let cred_zero = c_red_class_is_zero(l)?;
    let h3 = cohomology_dim(g, &triv, 3);
    let star = solve_star(l, w)?;
    let solved = star.solution().is_some();
    let psi_solved = solve_via_psi(l, w)?.is_some();
    if solved != psi_solved {
        return Err(Error::Internal(format!("direct solve ({solved}) and Psi route ({psi_solved}) disagree")));
    }

    let criterion = if w_zero {
        Criterion::ClassZero
    } else if criterion_cred_zero(l, w)? == CriterionVerdict::NotExists {
        Criterion::CRedZero
    } else if criterion_h3_onedim(l, w)? == CriterionVerdict::Exists {
        Criterion::H3OneDim
    } else {
        Criterion::DirectStar
    };
    let predicted = match criterion {
        Criterion::ClassZero | Criterion::H3OneDim => Some(true),
        Criterion::CRedZero => Some(false),
        Criterion::DirectStar => None,
    };
    if let Some(p) = predicted {
        if p != solved {
            return Err(Error::Internal(format!("criterion {criterion:?} predicts {p}, primitive system gives {solved}")));
        }
    }

    let (morphism, quotient) = match star.solution() {
        Some(eta) => {
            let f = eta_to_morphism(l, w, eta)?;
            let quot = if eta.xi.iter().any(|x| !x.is_zero()) { Some(quotient_presentation(l, w, eta)?) } else { None };
            if let Some(qp) = &quot {
                if !qp.strict_isomorphism || !qp.class_relation_holds {
                    return Err(Error::Internal("quotient presentation failed its checks".into()));
                }
            }
            (Some(f), quot)
        }
        None => (None, None),
    };

    let (verdict, note) = match (solved, h1_vanishes) {
        (false, _) => (Verdict::NotExists, None),
        (true, true) => (Verdict::Exists, None),
        (true, false) => (
            Verdict::UndecidedGeometric,
            Some("class vanishes in CE(L); the converse needs H^1(M) = 0, which was not asserted".into()),
        ),
    };
    Ok(ExistenceReport {
        verdict,
        criterion,
        algebraic_solution: solved,
        classes: ClassSummary {
            omega_3p_class_zero: w_zero,
            c_red_class_zero: cred_zero,
            h3_dim: h3,
            annihilator_dim: l.bracket_annihilator().len(),
        },
        certificate: star,
        psi_route_agrees: true,
        morphism,
        quotient,
        note,
    })
}

/// `η` with `ξ = 0` when `[ω_3p]_g = 0`: `φ` is a primitive of `ω_3p`.
pub fn eta_from_g_primitive(l: &MinimalLie2Algebra, w: &OmegaThreeP) -> Result<StarSolution> {
    let g = l.g();
    match class_is_zero(g, &Representation::trivial(g, 1), &w.values)? {
        crate::lie::ClassCertificate::Zero { primitive } => {
            let eta = StarSolution { xi: vec![Rational::zero(); l.dim_h()], phi: primitive, kernel_basis: Vec::new() };
            check_star(l, w, &eta)?;
            Ok(eta)
        }
        crate::lie::ClassCertificate::NonZero { .. } => Err(Error::PreconditionFailed("[omega_3p]_g != 0".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{cartan_cocycle, normalized_killing};

    fn vol3() -> Cochain {
        Cochain::scalar(3, 3, &[q(1)]).unwrap()
    }

    fn omega(g: &LieAlgebra, c: Cochain) -> OmegaThreeP {
        OmegaThreeP::new(g, c, OmegaOrigin::Direct).unwrap()
    }

    fn heis(c: [i64; 3]) -> MinimalLie2Algebra {
        let g = LieAlgebra::heisenberg();
        let h = Representation::heisenberg_matrices(&g).unwrap();
        MinimalLie2Algebra::new(g, h, Cochain { dim_g: 3, dim_v: 3, degree: 3, values: vec![c.iter().map(|&x| q(x)).collect()] }).unwrap()
    }

    fn string() -> MinimalLie2Algebra {
        let g = LieAlgebra::su2();
        let theta = cartan_cocycle(&g, &normalized_killing(&g)).unwrap();
        MinimalLie2Algebra::new(g.clone(), Representation::trivial(&g, 1), theta).unwrap()
    }

    #[test]
    fn zero_omega() {
        let l = heis([0, 0, 1]);
        let w = omega(l.g(), Cochain::zero(3, 1, 3));
        let s = solve_star(&l, &w).unwrap();
        let sol = s.solution().unwrap();
        assert!(sol.xi.iter().all(Zero::is_zero));
        assert!(sol.phi.is_zero());
        assert!(!sol.kernel_basis.is_empty());
    }

    #[test]
    fn abelian_examples() {
        let a = LieAlgebra::abelian(3);
        let w = omega(&a, vol3());
        // trivial h = R, c = vol: ξ = -1, φ = 0
        let l = MinimalLie2Algebra::new(a.clone(), Representation::trivial(&a, 1), vol3()).unwrap();
        let s = solve_star(&l, &w).unwrap();
        let sol = s.solution().unwrap();
        assert_eq!(sol.xi, vec![q(-1)]);
        assert!(sol.phi.is_zero());
        // c = 0: no solution, for any h
        for m in 1..=3 {
            let l0 = MinimalLie2Algebra::new(a.clone(), Representation::trivial(&a, m), Cochain::zero(3, m, 3)).unwrap();
            assert!(matches!(solve_star(&l0, &w).unwrap(), StarOutcome::NoSolution { .. }));
            assert_eq!(criterion_cred_zero(&l0, &w).unwrap(), CriterionVerdict::NotExists);
        }
        // scaling rep: [g,h] = h
        let sc = Representation::scaling(&a, 2, &[q(1), q(0), q(2)]).unwrap();
        let c = Cochain::zero(3, 2, 3);
        let ls = MinimalLie2Algebra::new(a.clone(), sc, c).unwrap();
        assert_eq!(criterion_cred_zero(&ls, &w).unwrap(), CriterionVerdict::NotExists);
        assert!(solve_star(&ls, &w).unwrap().solution().is_none());
    }

    #[test]
    fn string_lie_2_algebra() {
        let l = string();
        let theta = l.c().cochain().clone();
        let w = omega(l.g(), theta.clone());
        assert!(!psi(&l, &[q(1)]).unwrap().is_zero);
        assert!(psi(&l, &[q(0)]).unwrap().is_zero);
        assert_eq!(criterion_cred_zero(&l, &w).unwrap(), CriterionVerdict::Inconclusive);
        assert_eq!(criterion_h3_onedim(&l, &w).unwrap(), CriterionVerdict::Exists);
        let sol = solve_star(&l, &w).unwrap();
        let eta = sol.solution().unwrap();
        assert_eq!(eta.xi, vec![q(-1)]);
        let f = eta_to_morphism(&l, &w, eta).unwrap();
        assert_eq!(f.f1_h, vec![q(-1)]);
        let p = psi(&l, &eta.xi).unwrap();
        assert_eq!(p.representative, theta);
    }

    #[test]
    fn heisenberg_criteria() {
        let w = omega(&LieAlgebra::heisenberg(), vol3());
        // c(X,Y,Z) = e3: c_red ≠ 0
        let good = heis([0, 0, 1]);
        assert_eq!(criterion_h3_onedim(&good, &w).unwrap(), CriterionVerdict::Exists);
        let eta = solve_star(&good, &w).unwrap().solution().unwrap().clone();
        assert_eq!(eta.xi, vec![q(0), q(0), q(-1)]);
        let qp = quotient_presentation(&good, &w, &eta).unwrap();
        assert_eq!(qp.kernel_basis.len(), 2);
        assert_eq!(qp.quotient_dim, 1);
        assert!(qp.strict_isomorphism && qp.class_relation_holds);
        // c(X,Y,Z) = e1 ∈ [g,h]: c_red = 0
        let bad = heis([1, 0, 0]);
        assert_eq!(criterion_cred_zero(&bad, &w).unwrap(), CriterionVerdict::NotExists);
        assert!(solve_star(&bad, &w).unwrap().solution().is_none());
        assert!(solve_via_psi(&bad, &w).unwrap().is_none());
        // ψ outside the annihilator
        assert!(matches!(psi(&good, &[q(1), q(0), q(0)]), Err(Error::NotInAnnihilator)));
    }

    #[test]
    fn preconditions() {
        let l = heis([0, 0, 1]);
        let w = omega(l.g(), Cochain::zero(3, 1, 3));
        assert!(matches!(criterion_cred_zero(&l, &w), Err(Error::PreconditionFailed(_))));
        assert!(matches!(criterion_h3_onedim(&l, &w), Err(Error::PreconditionFailed(_))));
        let eta = eta_from_g_primitive(&l, &w).unwrap();
        assert!(matches!(quotient_presentation(&l, &w, &eta), Err(Error::XiZero)));
        let f = eta_to_morphism(&l, &w, &eta).unwrap();
        assert!(f.f1_h.iter().all(Zero::is_zero));
    }

    #[test]
    fn not_closed_omega_rejected() {
        // aff(1) ⊕ R²: d(e^{234}) = -e^{1234}
        let g = LieAlgebra::from_brackets((1..=4).map(|i| format!("e{i}")).collect(), &[(0, 1, 1, q(1))]).unwrap();
        let c = Cochain::scalar(4, 3, &[q(0), q(0), q(0), q(1)]).unwrap();
        assert!(matches!(OmegaThreeP::new(&g, c, OmegaOrigin::Direct), Err(Error::NotClosed(_))));
    }

    #[test]
    fn decide_flows() {
        let a = LieAlgebra::abelian(3);
        let w = omega(&a, vol3());
        let l0 = MinimalLie2Algebra::new(a.clone(), Representation::trivial(&a, 1), Cochain::zero(3, 1, 3)).unwrap();
        let r = decide(&l0, &w, true).unwrap();
        assert_eq!((r.verdict, r.criterion), (Verdict::NotExists, Criterion::CRedZero));
        let l1 = MinimalLie2Algebra::new(a.clone(), Representation::trivial(&a, 1), vol3()).unwrap();
        let r = decide(&l1, &w, true).unwrap();
        assert_eq!((r.verdict, r.criterion), (Verdict::Exists, Criterion::H3OneDim));
        let r = decide(&l1, &w, false).unwrap();
        assert_eq!(r.verdict, Verdict::UndecidedGeometric);
        let w0 = omega(&a, Cochain::zero(3, 1, 3));
        let r = decide(&l0, &w0, true).unwrap();
        assert_eq!((r.verdict, r.criterion), (Verdict::Exists, Criterion::ClassZero));
    }
}
