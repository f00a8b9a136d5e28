//! Finite-dimensional Lie algebras over `Q`, representations, cochains with
//! coefficients and Chevalley-Eilenberg cohomology.
//!
//! Conventions: `[e_i, e_j] = Σ_k sc[i][j][k] e_k`; a `k`-cochain with values
//! in `V` is stored by its values on strictly increasing basis tuples, and
//!
//! ```text
//! (dω)(x_0..x_k) = Σ_i (-1)^i x_i·ω(..x̂_i..) + Σ_{i<j} (-1)^{i+j} ω([x_i,x_j], ..x̂_i..x̂_j..)
//! ```

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{ext_basis, ext_position, format_vec, q, qf, ExtIndex, Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    sc: Vec<Vec<Vec<Rational>>>,
}

impl LieAlgebra {
    /// Validate antisymmetry and the Jacobi identity on all basis triples.
    pub fn new(basis_names: Vec<String>, sc: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let dim = basis_names.len();
        if sc.len() != dim {
            return Err(Error::shape("structure constants, first index", dim, sc.len()));
        }
        for row in &sc {
            if row.len() != dim {
                return Err(Error::shape("structure constants, second index", dim, row.len()));
            }
            if let Some(v) = row.iter().find(|v| v.len() != dim) {
                return Err(Error::shape("structure constants, third index", dim, v.len()));
            }
        }
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    if sc[i][j][k] != -sc[j][i][k].clone() {
                        return Err(Error::AntisymmetryViolation { i, j, k });
                    }
                }
            }
        }
        let g = LieAlgebra { dim, basis_names, sc };
        g.check_jacobi()?;
        Ok(g)
    }

    /// Build from the nonzero brackets `[e_i, e_j] = Σ v e_k` for `i < j`;
    /// the `j < i` entries are filled by antisymmetry.
    pub fn from_brackets(basis_names: Vec<String>, brackets: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let dim = basis_names.len();
        let mut sc = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        for (i, j, k, v) in brackets {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::shape("bracket index bound", dim, i.max(j).max(k) + 1));
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::AntisymmetryViolation { i, j, k });
                }
                continue;
            }
            sc[i][j][k] += v;
            sc[j][i][k] -= v;
        }
        LieAlgebra::new(basis_names, sc)
    }

    pub fn abelian(dim: usize) -> Self {
        let names = (1..=dim).map(|i| format!("e{i}")).collect();
        LieAlgebra { dim, basis_names: names, sc: vec![vec![vec![Rational::zero(); dim]; dim]; dim] }
    }

    /// `[X, Y] = Z`, other brackets zero.
    pub fn heisenberg() -> Self {
        let names = vec!["X".into(), "Y".into(), "Z".into()];
        LieAlgebra::from_brackets(names, &[(0, 1, 2, q(1))]).expect("Heisenberg algebra is valid")
    }

    /// Cyclic basis `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`.
    pub fn su2() -> Self {
        let names = vec!["e1".into(), "e2".into(), "e3".into()];
        LieAlgebra::from_brackets(names, &[(0, 1, 2, q(1)), (1, 2, 0, q(1)), (0, 2, 1, q(-1))])
            .expect("su(2) is valid")
    }

    /// Rotation generators of `R^3`: `[L1,L2] = L3` cyclic, the same algebra
    /// as [`LieAlgebra::su2`] under different names.
    pub fn so3() -> Self {
        let mut g = LieAlgebra::su2();
        g.basis_names = vec!["L1".into(), "L2".into(), "L3".into()];
        g
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Rational>>] {
        &self.sc
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.sc[i][j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for (o, c) in out.iter_mut().zip(&self.sc[i][j]) {
                    *o += &s * c;
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.iter().flatten().flatten().all(Zero::is_zero)
    }

    /// Matrix of `ad e_i`.
    pub fn ad(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m.set(k, j, self.sc[i][j][k].clone());
            }
        }
        m
    }

    /// `κ(e_i, e_j) = tr(ad e_i ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad(i)).collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = ads[i].mul(&ads[j]).expect("square");
                let tr = (0..self.dim).fold(Rational::zero(), |acc, a| acc + p.get(a, a));
                k.set(i, j, tr);
            }
        }
        k
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        let e = |i: usize| -> Vec<Rational> { (0..n).map(|a| if a == i { q(1) } else { q(0) }).collect() };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let mut defect = self.bracket(&self.bracket(&x, &y), &z);
                    for (d, t) in defect.iter_mut().zip(self.bracket(&self.bracket(&y, &z), &x)) {
                        *d += t;
                    }
                    for (d, t) in defect.iter_mut().zip(self.bracket(&self.bracket(&z, &x), &y)) {
                        *d += t;
                    }
                    if defect.iter().any(|d| !d.is_zero()) {
                        return Err(Error::JacobiViolation { i, j, k, defect: format_vec(&defect) });
                    }
                }
            }
        }
        Ok(())
    }
}

/// A representation `ρ: g → gl(V)` given by the matrices `ρ(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    /// Validate `ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)]` on all basis pairs.
    pub fn new(g: &LieAlgebra, dim: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != g.dim() {
            return Err(Error::shape("number of representation matrices", g.dim(), matrices.len()));
        }
        for m in &matrices {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::shape("representation matrix", format!("{dim}x{dim}"), format!("{}x{}", m.rows(), m.cols())));
            }
        }
        let rep = Representation { dim, matrices };
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let lhs = rep.of_vector(g.bracket_basis(i, j));
                let defect = lhs.sub(&rep.matrices[i].commutator(&rep.matrices[j])?)?;
                if !defect.is_zero() {
                    return Err(Error::RepViolation { i, j, defect: defect.to_rows().iter().map(|r| format_vec(r)).collect() });
                }
            }
        }
        Ok(rep)
    }

    pub fn trivial(g: &LieAlgebra, dim: usize) -> Self {
        Representation { dim, matrices: vec![Matrix::zeros(dim, dim); g.dim()] }
    }

    pub fn adjoint(g: &LieAlgebra) -> Self {
        Representation { dim: g.dim(), matrices: (0..g.dim()).map(|i| g.ad(i)).collect() }
    }

    /// `ρ(e_i) = λ_i Id`; a representation iff `λ` kills `[g,g]`.
    pub fn scaling(g: &LieAlgebra, dim: usize, lambdas: &[Rational]) -> Result<Self> {
        let ms = lambdas.iter().map(|l| Matrix::identity(dim).scale(l)).collect();
        Representation::new(g, dim, ms)
    }

    /// Heisenberg algebra acting on column vectors of `R^3` by `X = E12`,
    /// `Y = E23`, `Z = E13`.
    pub fn heisenberg_matrices(g: &LieAlgebra) -> Result<Self> {
        let unit = |a: usize, b: usize| {
            let mut m = Matrix::zeros(3, 3);
            m.set(a, b, q(1));
            m
        };
        Representation::new(g, 3, vec![unit(0, 1), unit(1, 2), unit(0, 2)])
    }

    /// `ρ*(x) = -ρ(x)^T`.
    pub fn dual(&self) -> Representation {
        Representation { dim: self.dim, matrices: self.matrices.iter().map(|m| m.transpose().scale(&q(-1))).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.matrices.iter().all(Matrix::is_zero)
    }

    /// `ρ(x)` for `x = Σ x_i e_i`.
    pub fn of_vector(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (xi, mi) in x.iter().zip(&self.matrices) {
            if xi.is_zero() {
                continue;
            }
            for a in 0..self.dim {
                for b in 0..self.dim {
                    m.add_to(a, b, &(xi * mi.get(a, b)));
                }
            }
        }
        m
    }

    pub fn act(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        self.matrices[i].mul_vec(v).expect("dimension checked at construction")
    }
}

/// A `V`-valued alternating `k`-cochain on `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cochain {
    pub dim_g: usize,
    pub dim_v: usize,
    pub degree: usize,
    /// One `V`-vector per strictly increasing tuple, lexicographic.
    #[serde(serialize_with = "crate::io::ser_vec_vec")]
    pub values: Vec<Vec<Rational>>,
}

impl Cochain {
    pub fn zero(dim_g: usize, dim_v: usize, degree: usize) -> Self {
        let n = ext_basis(dim_g, degree).len();
        Cochain { dim_g, dim_v, degree, values: vec![vec![Rational::zero(); dim_v]; n] }
    }

    pub fn from_fn(dim_g: usize, dim_v: usize, degree: usize, f: impl Fn(&ExtIndex) -> Vec<Rational>) -> Self {
        let values = ext_basis(dim_g, degree)
            .iter()
            .map(|idx| {
                let v = f(idx);
                assert_eq!(v.len(), dim_v, "cochain value dimension");
                v
            })
            .collect();
        Cochain { dim_g, dim_v, degree, values }
    }

    /// Scalar cochain from a flat coordinate vector in the `ext_basis` order.
    pub fn scalar(dim_g: usize, degree: usize, coeffs: &[Rational]) -> Result<Self> {
        Cochain::from_flat(dim_g, 1, degree, coeffs)
    }

    /// Inverse of [`Cochain::flatten`].
    pub fn from_flat(dim_g: usize, dim_v: usize, degree: usize, flat: &[Rational]) -> Result<Self> {
        let n = ext_basis(dim_g, degree).len();
        if flat.len() != n * dim_v {
            return Err(Error::shape(format!("{degree}-cochain coordinates"), n * dim_v, flat.len()));
        }
        let values = if dim_v == 0 { vec![vec![]; n] } else { flat.chunks(dim_v).map(<[Rational]>::to_vec).collect() };
        Ok(Cochain { dim_g, dim_v, degree, values })
    }

    /// Coordinates ordered by tuple, then by `V` component.
    pub fn flatten(&self) -> Vec<Rational> {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn get(&self, idx: &ExtIndex) -> &[Rational] {
        &self.values[ext_position(self.dim_g, idx)]
    }

    pub fn set(&mut self, idx: &ExtIndex, v: Vec<Rational>) {
        let p = ext_position(self.dim_g, idx);
        self.values[p] = v;
    }

    /// Value on `e_{t_1}, …, e_{t_k}` in any order.
    pub fn eval_basis(&self, tuple: &[usize]) -> Vec<Rational> {
        match ExtIndex::from_unsorted(tuple) {
            Some((s, idx)) => self.get(&idx).iter().map(|x| x * q(s)).collect(),
            None => vec![Rational::zero(); self.dim_v],
        }
    }

    /// Value of a scalar cochain on a basis tuple.
    pub fn eval_scalar(&self, tuple: &[usize]) -> Rational {
        debug_assert_eq!(self.dim_v, 1);
        self.eval_basis(tuple).swap_remove(0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Cochain { values, ..self.clone() })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        let values = self.values.iter().map(|v| v.iter().map(|x| x * s).collect()).collect();
        Cochain { values, ..self.clone() }
    }

    /// Compose with a linear map `V → W` given as a `dim W × dim V` matrix.
    pub fn compose(&self, m: &Matrix) -> Result<Cochain> {
        if m.cols() != self.dim_v {
            return Err(Error::shape("coefficient map source", self.dim_v, m.cols()));
        }
        let values = self.values.iter().map(|v| m.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        Ok(Cochain { dim_v: m.rows(), values, ..self.clone() })
    }

    fn check_same(&self, other: &Cochain) -> Result<()> {
        if (self.dim_g, self.dim_v, self.degree) != (other.dim_g, other.dim_v, other.degree) {
            return Err(Error::shape(
                "cochain shapes",
                format!("(dim g {}, dim V {}, degree {})", self.dim_g, self.dim_v, self.degree),
                format!("(dim g {}, dim V {}, degree {})", other.dim_g, other.dim_v, other.degree),
            ));
        }
        Ok(())
    }
}

fn check_cochain_shape(g: &LieAlgebra, rep: &Representation, w: &Cochain) -> Result<()> {
    if w.dim_g != g.dim() || w.dim_v != rep.dim() {
        return Err(Error::shape(
            "cochain against (g, V)",
            format!("(dim g {}, dim V {})", g.dim(), rep.dim()),
            format!("(dim g {}, dim V {})", w.dim_g, w.dim_v),
        ));
    }
    Ok(())
}

/// The Chevalley-Eilenberg differential with coefficients in `rep`.
pub fn ce_differential(g: &LieAlgebra, rep: &Representation, w: &Cochain) -> Result<Cochain> {
    check_cochain_shape(g, rep, w)?;
    let n = g.dim();
    let dv = rep.dim();
    Ok(Cochain::from_fn(n, dv, w.degree + 1, |idx| {
        let t = idx.as_slice();
        let mut acc = vec![Rational::zero(); dv];
        for i in 0..t.len() {
            let val = w.get(&idx.without_pos(i));
            if val.iter().all(Zero::is_zero) {
                continue;
            }
            let img = rep.act(t[i], val);
            for (a, v) in acc.iter_mut().zip(img) {
                if i % 2 == 0 {
                    *a += v;
                } else {
                    *a -= v;
                }
            }
        }
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let sign = if (i + j) % 2 == 0 { q(1) } else { q(-1) };
                let rest = idx.without_pos(j).without_pos(i);
                for (m, c) in g.bracket_basis(t[i], t[j]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let Some((pos, sorted)) = rest.insert(m) else { continue };
                    // moving m from the front to position pos
                    let s = if pos % 2 == 0 { &sign * c } else { -(&sign * c) };
                    for (a, v) in acc.iter_mut().zip(w.get(&sorted)) {
                        *a += &s * v;
                    }
                }
            }
        }
        acc
    }))
}

/// Matrix of `d: C^k → C^{k+1}` in the coordinates of [`Cochain::flatten`].
pub fn differential_matrix(g: &LieAlgebra, rep: &Representation, k: usize) -> Matrix {
    let n = g.dim();
    let dv = rep.dim();
    let src = ext_basis(n, k).len() * dv;
    let tgt = if k + 1 > n { 0 } else { ext_basis(n, k + 1).len() * dv };
    let cols: Vec<Vec<Rational>> = (0..src)
        .map(|c| {
            if tgt == 0 {
                return Vec::new();
            }
            let mut flat = vec![Rational::zero(); src];
            flat[c] = Rational::one();
            let w = Cochain::from_flat(n, dv, k, &flat).expect("sized");
            ce_differential(g, rep, &w).expect("shape").flatten()
        })
        .collect();
    Matrix::from_columns(tgt, &cols).expect("sized")
}

/// `dim H^k(g; V)`.
pub fn cohomology_dim(g: &LieAlgebra, rep: &Representation, k: usize) -> usize {
    let n = g.dim();
    if k > n {
        return 0;
    }
    let dim_k = ext_basis(n, k).len() * rep.dim();
    let rank_out = differential_matrix(g, rep, k).rank();
    let rank_in = if k == 0 { 0 } else { differential_matrix(g, rep, k - 1).rank() };
    dim_k - rank_out - rank_in
}

/// Outcome of [`class_is_zero`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum ClassCertificate {
    /// `d primitive = cocycle`.
    Zero { primitive: Cochain },
    /// `rank [d | cocycle] > rank d`.
    NonZero { rank_d: usize, rank_augmented: usize },
}

impl ClassCertificate {
    pub fn is_zero(&self) -> bool {
        matches!(self, ClassCertificate::Zero { .. })
    }
}

/// Decide whether a closed cochain is exact.
pub fn class_is_zero(g: &LieAlgebra, rep: &Representation, w: &Cochain) -> Result<ClassCertificate> {
    check_cochain_shape(g, rep, w)?;
    if w.degree < g.dim() {
        let dw = ce_differential(g, rep, w)?;
        if !dw.is_zero() {
            return Err(Error::NotClosed(format!("{:?}", dw.values.iter().map(|v| format_vec(v)).collect::<Vec<_>>())));
        }
    }
    if w.degree == 0 {
        return Ok(if w.is_zero() {
            ClassCertificate::Zero { primitive: w.clone() }
        } else {
            ClassCertificate::NonZero { rank_d: 0, rank_augmented: 1 }
        });
    }
    let d = differential_matrix(g, rep, w.degree - 1);
    let sol = d.solve_affine(&w.flatten())?;
    Ok(match sol.particular {
        Some(p) => ClassCertificate::Zero { primitive: Cochain::from_flat(g.dim(), rep.dim(), w.degree - 1, &p)? },
        None => ClassCertificate::NonZero { rank_d: sol.rank, rank_augmented: sol.augmented_rank },
    })
}

/// `θ(x,y,z) = ⟨x,[y,z]⟩` for a symmetric ad-invariant form.
pub fn cartan_cocycle(g: &LieAlgebra, form: &Matrix) -> Result<Cochain> {
    let n = g.dim();
    if form.rows() != n || form.cols() != n {
        return Err(Error::shape("bilinear form", format!("{n}x{n}"), format!("{}x{}", form.rows(), form.cols())));
    }
    let pair = |x: &[Rational], y: &[Rational]| -> Rational {
        form.mul_vec(y).expect("sized").iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    };
    let e = |i: usize| -> Vec<Rational> { (0..n).map(|a| if a == i { q(1) } else { q(0) }).collect() };
    for i in 0..n {
        for j in 0..n {
            if form.get(i, j) != form.get(j, i) {
                return Err(Error::FormNotInvariant { i, j, k: j });
            }
            for k in 0..n {
                // ⟨[x,y],z⟩ + ⟨y,[x,z]⟩ = 0
                let lhs = pair(g.bracket_basis(i, j), &e(k)) + pair(&e(j), g.bracket_basis(i, k));
                if !lhs.is_zero() {
                    return Err(Error::FormNotInvariant { i, j, k });
                }
            }
        }
    }
    let theta = Cochain::from_fn(n, 1, 3, |idx| {
        let t = idx.as_slice();
        vec![pair(&e(t[0]), g.bracket_basis(t[1], t[2]))]
    });
    if n > 3 {
        let d = ce_differential(g, &Representation::trivial(g, 1), &theta)?;
        if !d.is_zero() {
            return Err(Error::NotClosed("Cartan 3-form".into()));
        }
    }
    Ok(theta)
}

/// `-½ κ`, which is the identity on su(2) in the cyclic basis.
pub fn normalized_killing(g: &LieAlgebra) -> Matrix {
    g.killing_form().scale(&qf(-1, 2))
}

/// A `V`-valued 3-cocycle on `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeCocycle {
    cochain: Cochain,
}

impl ThreeCocycle {
    /// Checks `d_g c = 0` on every basis 4-tuple.
    pub fn new(g: &LieAlgebra, rep: &Representation, cochain: Cochain) -> Result<Self> {
        check_cochain_shape(g, rep, &cochain)?;
        if cochain.degree != 3 {
            return Err(Error::shape("cocycle degree", 3, cochain.degree));
        }
        if g.dim() >= 4 {
            let d = ce_differential(g, rep, &cochain)?;
            if let Some((idx, v)) = ext_basis(g.dim(), 4).into_iter().zip(&d.values).find(|(_, v)| v.iter().any(|x| !x.is_zero())) {
                return Err(Error::CocycleViolation { tuple: idx.as_slice().to_vec(), defect: format_vec(v) });
            }
        }
        Ok(ThreeCocycle { cochain })
    }

    pub fn zero(g: &LieAlgebra, rep: &Representation) -> Self {
        ThreeCocycle { cochain: Cochain::zero(g.dim(), rep.dim(), 3) }
    }

    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    /// `c(e_i, e_j, e_k)` for any ordering.
    pub fn value(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        self.cochain.eval_basis(&[i, j, k])
    }
}

/// Which complex a class lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexTag {
    /// `∧^• g*` with trivial coefficients.
    LieTrivial,
    /// `∧^• g* ⊗ h/[g,h]`.
    LieReduced,
    /// `∧^• g* ⊗ V` for a general representation.
    LieWithCoefficients,
}

/// A closed representative together with its complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyClass {
    pub degree: usize,
    pub complex: ComplexTag,
    pub representative: Cochain,
    pub is_zero: bool,
}

impl CohomologyClass {
    /// Checks closedness and decides vanishing.
    pub fn new(g: &LieAlgebra, rep: &Representation, complex: ComplexTag, representative: Cochain) -> Result<Self> {
        let cert = class_is_zero(g, rep, &representative)?;
        Ok(CohomologyClass { degree: representative.degree, complex, representative, is_zero: cert.is_zero() })
    }
}
