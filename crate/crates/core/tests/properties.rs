mod common;

use lie2mm::derham::{Poly, PolyForm};
use lie2mm::existence::{decide, eta_to_morphism, psi, solve_star, OmegaOrigin, OmegaThreeP, Verdict};
use lie2mm::kernel::Matrix;
use lie2mm::lie::{class_is_zero, cohomology_dim, Representation};
use lie2mm::lie2::{CeCochain, CeMonomial};
use lie2mm::momentmap::{d_tot, omega_tilde, HamiltonianAction};
use lie2mm::{q, Rational};
use lie2mm_oracle::BruteLie;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cohomology_matches_oracle(seed in any::<u64>()) {
        let inst = common::random_instance(&mut common::rng(seed), 4, 3);
        let (g, h) = (inst.l.g(), inst.l.h());
        let sc = g.structure_constants().to_vec();
        let rho: Vec<Vec<Vec<Rational>>> = h.matrices().iter().map(Matrix::to_rows).collect();
        let oracle = BruteLie { sc: &sc, rho: &rho };
        for k in 0..=g.dim() {
            if h.dim() > 0 {
                prop_assert_eq!(cohomology_dim(g, h, k), oracle.cohomology_dim(k), "{} H^{}", inst.name, k);
            }
        }
    }

    #[test]
    fn solutions_give_morphisms_and_psi_hits_omega(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let inst = common::random_instance(&mut rng, 4, 3);
        let l = &inst.l;
        let g = l.g();
        let triv = Representation::trivial(g, 1);
        let w = OmegaThreeP::new(g, common::random_cocycle(g, &triv, 3, &mut rng), OmegaOrigin::Direct).unwrap();
        let report = decide(l, &w, true).unwrap();
        prop_assert_eq!(report.verdict == Verdict::Exists, report.algebraic_solution);
        if let Some(eta) = solve_star(l, &w).unwrap().solution() {
            eta_to_morphism(l, &w, eta).unwrap();
            let class = psi(l, &eta.xi).unwrap();
            let diff = class.representative.sub(&w.values).unwrap();
            prop_assert!(class_is_zero(g, &triv, &diff).unwrap().is_zero());
        }
    }

    #[test]
    fn d_tot_squares_to_zero(seed in any::<u64>(), deg in 0usize..3) {
        let mut rng = common::rng(seed);
        let inst = common::random_instance(&mut rng, 3, 2);
        let l = &inst.l;
        let mut x: CeCochain<PolyForm> = CeCochain::zero();
        for m in l.basis(deg) {
            let mut f = Poly::zero();
            for e in [vec![], vec![1], vec![0, 2], vec![1, 1, 1]] {
                f.add_term(e, common::small(&mut rng, 3));
            }
            let form = PolyForm::basic(f.clone(), &[]).add(&PolyForm::basic(f, &[(m.degree() % 3)]));
            x.add_term(m, &form);
        }
        prop_assert!(d_tot(l, &d_tot(l, &x)).is_zero());
    }
}

#[test]
fn omega_tilde_is_d_tot_closed_for_corpus_actions() {
    let p = vec![q(1), q(-2), q(3)];
    for action in [HamiltonianAction::translations(p.clone()), HamiltonianAction::heisenberg(p.clone()), HamiltonianAction::rotations(p)] {
        let action = action.unwrap();
        let l = lie2mm::momentmap::bare_lie2(action.algebra());
        assert!(d_tot(&l, &omega_tilde(&action)).is_zero());
    }
}

#[test]
fn monomial_products_are_graded_commutative() {
    let (a, b) = (CeMonomial::e(&[0]), CeMonomial::e(&[1]));
    let (s1, ab) = a.mul(&b).unwrap();
    let (s2, ba) = b.mul(&a).unwrap();
    assert_eq!(ab, ba);
    assert_eq!(s1, -s2);
    let f = CeMonomial::f(0);
    assert_eq!(f.mul(&f).map(|(s, _)| s), Some(1));
}
