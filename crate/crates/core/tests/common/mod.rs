//! Shared generators for the integration suites: base Lie algebras, random
//! changes of basis, representations, cocycles and the Lie 2-algebras that
//! fit each corpus action.

#![allow(dead_code)]

use lie2mm::kernel::{ext_basis, Matrix};
use lie2mm::lie::{cartan_cocycle, differential_matrix, normalized_killing, Cochain, LieAlgebra, Representation};
use lie2mm::lie2::{CeCochain, MinimalLie2Algebra};
use lie2mm::{q, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng, r: i64) -> Rational {
    q(rng.gen_range(-r..=r))
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn from_brackets(n: usize, br: &[(usize, usize, usize, i64)]) -> LieAlgebra {
    let br: Vec<_> = br.iter().map(|&(i, j, k, c)| (i, j, k, q(c))).collect();
    LieAlgebra::from_brackets(names(n), &br).expect("valid base algebra")
}

pub fn sl2() -> LieAlgebra {
    from_brackets(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

/// Base algebras of dimension at most 4.
pub fn base_algebras() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("abelian1", LieAlgebra::abelian(1)),
        ("abelian2", LieAlgebra::abelian(2)),
        ("abelian3", LieAlgebra::abelian(3)),
        ("abelian4", LieAlgebra::abelian(4)),
        ("heisenberg", LieAlgebra::heisenberg()),
        ("su2", LieAlgebra::su2()),
        ("sl2", sl2()),
        ("aff1", from_brackets(2, &[(0, 1, 1, 1)])),
        ("aff1+r", from_brackets(3, &[(0, 1, 1, 1)])),
        ("r3", from_brackets(3, &[(2, 0, 0, 1), (2, 1, 1, 1)])),
        ("heisenberg+r", from_brackets(4, &[(0, 1, 2, 1)])),
        ("filiform4", from_brackets(4, &[(0, 1, 2, 1), (0, 2, 3, 1)])),
        ("gl2", from_brackets(4, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])),
        ("aff1+aff1", from_brackets(4, &[(0, 1, 1, 1), (2, 3, 3, 1)])),
    ]
}

pub fn inverse(m: &Matrix) -> Matrix {
    let n = m.rows();
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let e: Vec<Rational> = (0..n).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect();
            m.solve_affine(&e).unwrap().particular.expect("invertible")
        })
        .collect();
    Matrix::from_columns(n, &cols).unwrap()
}

/// Product of a unit lower and a unit upper triangular integer matrix.
pub fn random_unipotent(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut lo = Matrix::identity(n);
    let mut up = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lo.set(i, j, small(rng, 2));
            up.set(j, i, small(rng, 2));
        }
    }
    lo.mul(&up).unwrap()
}

/// Structure constants in the basis `f_i = Σ_a P[a][i] e_a`.
pub fn change_basis(g: &LieAlgebra, p: &Matrix) -> LieAlgebra {
    let n = g.dim();
    let pinv = inverse(p);
    let sc = g.structure_constants();
    let mut out = vec![vec![vec![Rational::zero(); n]; n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mut br = vec![Rational::zero(); n];
            for a in 0..n {
                for b in 0..n {
                    let s = p.get(a, i) * p.get(b, j);
                    if s.is_zero() {
                        continue;
                    }
                    for c in 0..n {
                        br[c] += &s * &sc[a][b][c];
                    }
                }
            }
            *entry = pinv.mul_vec(&br).unwrap();
        }
    }
    LieAlgebra::new(names(n), out).expect("change of basis preserves the Jacobi identity")
}

/// Pull a representation back along the change of basis `p` and conjugate
/// it by `conj`.
pub fn transport(rep: &Representation, p: &Matrix, conj: &Matrix) -> Vec<Matrix> {
    let n = p.rows();
    let cinv = inverse(conj);
    (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(rep.dim(), rep.dim());
            for a in 0..n {
                let s = p.get(a, i);
                if !s.is_zero() {
                    let t = rep.matrix(a).scale(s);
                    for r in 0..rep.dim() {
                        for c in 0..rep.dim() {
                            m.add_to(r, c, t.get(r, c));
                        }
                    }
                }
            }
            cinv.mul(&m).unwrap().mul(conj).unwrap()
        })
        .collect()
}

/// Functionals vanishing on `[g,g]`.
pub fn characters(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = g.dim();
    let rows: Vec<Vec<Rational>> =
        ext_basis(n, 2).iter().map(|idx| g.bracket_basis(idx.as_slice()[0], idx.as_slice()[1]).to_vec()).collect();
    if rows.is_empty() {
        return (0..n).map(|i| (0..n).map(|j| q((i == j) as i64)).collect()).collect();
    }
    Matrix::from_rows(rows).unwrap().kernel()
}

/// Representations of dimension at most 3 for a base algebra.
pub fn representations(name: &str, g: &LieAlgebra, rng: &mut ChaCha8Rng) -> Vec<Representation> {
    let mut out = vec![Representation::trivial(g, 0), Representation::trivial(g, 1), Representation::trivial(g, 2)];
    if g.dim() <= 3 {
        out.push(Representation::adjoint(g));
        out.push(Representation::adjoint(g).dual());
    }
    let chars = characters(g);
    if !chars.is_empty() {
        for dim in 1..=2 {
            let lambda: Vec<Rational> = (0..g.dim())
                .map(|i| chars.iter().fold(Rational::zero(), |acc, c| acc + &c[i] * small(rng, 2)))
                .collect();
            out.push(Representation::scaling(g, dim, &lambda).unwrap());
        }
    }
    if name == "heisenberg" {
        out.push(Representation::heisenberg_matrices(g).unwrap());
    }
    out
}

/// Basis of `ker(d: C^k(g; V) → C^{k+1}(g; V))`.
pub fn cocycle_basis(g: &LieAlgebra, rep: &Representation, k: usize) -> Vec<Vec<Rational>> {
    let m = differential_matrix(g, rep, k);
    if m.rows() == 0 {
        return (0..m.cols()).map(|j| (0..m.cols()).map(|i| q((i == j) as i64)).collect()).collect();
    }
    m.kernel()
}

pub fn random_cocycle(g: &LieAlgebra, rep: &Representation, k: usize, rng: &mut ChaCha8Rng) -> Cochain {
    let basis = cocycle_basis(g, rep, k);
    let len = basis.first().map_or(0, Vec::len);
    let mut flat = vec![Rational::zero(); len];
    for v in &basis {
        let s = small(rng, 2);
        for (f, x) in flat.iter_mut().zip(v) {
            *f += &s * x;
        }
    }
    Cochain::from_flat(g.dim(), rep.dim(), k, &flat).unwrap()
}

pub struct Instance {
    pub name: String,
    pub l: MinimalLie2Algebra,
}

fn vol3() -> Cochain {
    Cochain::scalar(3, 3, &[q(1)]).unwrap()
}

pub fn heisenberg_lie2(c: [i64; 3]) -> MinimalLie2Algebra {
    let g = LieAlgebra::heisenberg();
    let h = Representation::heisenberg_matrices(&g).unwrap();
    let c = Cochain::from_fn(3, 3, 3, |_| c.iter().map(|&x| q(x)).collect());
    MinimalLie2Algebra::new(g, h, c).unwrap()
}

/// `R^3` with trivial one-dimensional `h` and `c = λ vol`.
pub fn abelian_trivial(lambda: i64) -> MinimalLie2Algebra {
    let g = LieAlgebra::abelian(3);
    MinimalLie2Algebra::new(g.clone(), Representation::trivial(&g, 1), vol3().scale(&q(lambda))).unwrap()
}

/// `R^3` acting on `h = R` by `ρ(e_i) = λ_i`, with `c = vol`.
pub fn abelian_scaling(lambdas: &[Rational]) -> MinimalLie2Algebra {
    let g = LieAlgebra::abelian(3);
    let h = Representation::scaling(&g, 1, lambdas).unwrap();
    MinimalLie2Algebra::new(g, h, vol3()).unwrap()
}

/// The string Lie 2-algebra `(g, R, θ)` for the normalised Killing form.
pub fn string_lie2(g: &LieAlgebra) -> MinimalLie2Algebra {
    let theta = cartan_cocycle(g, &normalized_killing(g)).unwrap();
    MinimalLie2Algebra::new(g.clone(), Representation::trivial(g, 1), theta).unwrap()
}

/// Named Lie 2-algebras from the worked families.
pub fn family_instances() -> Vec<Instance> {
    let mut out = vec![
        Instance { name: "abelian c=0".into(), l: abelian_trivial(0) },
        Instance { name: "abelian c=vol".into(), l: abelian_trivial(1) },
        Instance { name: "abelian scaling".into(), l: abelian_scaling(&[q(1), q(2), lie2mm::qf(-1, 3)]) },
        Instance { name: "su2 string".into(), l: string_lie2(&LieAlgebra::su2()) },
        Instance { name: "sl2 string".into(), l: string_lie2(&sl2()) },
    ];
    for c in [[0, 0, 1], [1, 0, 0], [0, 1, 0], [2, -1, 3]] {
        out.push(Instance { name: format!("heisenberg c={c:?}"), l: heisenberg_lie2(c) });
    }
    out
}

/// Random instance: a base algebra in a random basis, a transported
/// representation and a random cocycle.
pub fn random_instance(rng: &mut ChaCha8Rng, max_dim_g: usize, max_dim_h: usize) -> Instance {
    let bases: Vec<_> = base_algebras().into_iter().filter(|(_, g)| g.dim() <= max_dim_g).collect();
    let (name, g0) = &bases[rng.gen_range(0..bases.len())];
    let reps: Vec<_> = representations(name, g0, rng).into_iter().filter(|r| r.dim() <= max_dim_h).collect();
    let rep0 = &reps[rng.gen_range(0..reps.len())];
    let p = random_unipotent(g0.dim(), rng);
    let conj = random_unipotent(rep0.dim(), rng);
    let g = change_basis(g0, &p);
    let rep = Representation::new(&g, rep0.dim(), transport(rep0, &p, &conj)).expect("transported representation");
    let c = random_cocycle(&g, &rep, 3, rng);
    let l = MinimalLie2Algebra::new(g, rep.clone(), c).expect("random cocycle is closed");
    Instance { name: format!("{name} rep dim {}", rep.dim()), l }
}

/// At least `count` instances: the worked families first, then random ones.
pub fn corpus(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = rng(seed);
    let mut out = family_instances();
    while out.len() < count {
        out.push(random_instance(&mut rng, 4, 3));
    }
    out
}

pub fn random_ce(l: &MinimalLie2Algebra, degree: usize, rng: &mut ChaCha8Rng) -> CeCochain<Rational> {
    let basis = l.basis(degree);
    let coords: Vec<Rational> = basis.iter().map(|_| if rng.gen_bool(0.6) { small(rng, 5) } else { Rational::zero() }).collect();
    CeCochain::from_coords(&basis, &coords)
}

/// Lie 2-algebras over the acting algebra of an action on `R^3`.
pub fn lie2_over(g: &LieAlgebra) -> Vec<(String, MinimalLie2Algebra)> {
    let triv = Representation::trivial(g, 1);
    let vol = Cochain::scalar(g.dim(), 3, &[q(1)]).unwrap();
    let mut out = vec![
        ("h=0".to_string(), MinimalLie2Algebra::new(g.clone(), Representation::trivial(g, 0), Cochain::zero(g.dim(), 0, 3)).unwrap()),
        ("h=R c=0".to_string(), MinimalLie2Algebra::new(g.clone(), triv.clone(), Cochain::zero(g.dim(), 1, 3)).unwrap()),
        ("h=R c=vol".to_string(), MinimalLie2Algebra::new(g.clone(), triv, vol).unwrap()),
        ("h=g c=0".to_string(), MinimalLie2Algebra::new(g.clone(), Representation::adjoint(g), Cochain::zero(g.dim(), g.dim(), 3)).unwrap()),
    ];
    if g == &LieAlgebra::heisenberg() {
        out.push(("matrices c=(0,0,1)".into(), heisenberg_lie2([0, 0, 1])));
        out.push(("matrices c=(1,-1,0)".into(), heisenberg_lie2([1, -1, 0])));
    }
    if g == &LieAlgebra::abelian(3) {
        out.push(("scaling".into(), abelian_scaling(&[q(1), q(2), lie2mm::qf(-1, 3)])));
        out.push(("h=R c=-2vol".into(), abelian_trivial(-2)));
    }
    out
}
