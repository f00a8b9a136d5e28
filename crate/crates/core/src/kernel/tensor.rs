use num_traits::{One, Zero};

use super::index::{ext_basis, ext_position, sort_with_sign, ExtIndex};
use super::rational::Rational;
use crate::error::{Error, Result};

/// An alternating `k`-form on an `n`-dimensional space, stored densely in the
/// basis `e^I`, `I` strictly increasing, lexicographic. With this basis
/// `e^I(e_I) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltTensor {
    dim: usize,
    degree: usize,
    coeffs: Vec<Rational>,
}

impl AltTensor {
    pub fn zero(dim: usize, degree: usize) -> Self {
        let len = ext_basis(dim, degree).len();
        AltTensor { dim, degree, coeffs: vec![Rational::zero(); len] }
    }

    pub fn from_coeffs(dim: usize, degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        let t = AltTensor::zero(dim, degree);
        if coeffs.len() != t.coeffs.len() {
            return Err(Error::shape(format!("coefficients of a {degree}-form on R^{dim}"), t.coeffs.len(), coeffs.len()));
        }
        Ok(AltTensor { coeffs, ..t })
    }

    /// Build from a function on increasing index tuples.
    pub fn from_fn(dim: usize, degree: usize, f: impl Fn(&ExtIndex) -> Rational) -> Self {
        let coeffs = ext_basis(dim, degree).iter().map(f).collect();
        AltTensor { dim, degree, coeffs }
    }

    /// The monomial `e^{i_1} ∧ … ∧ e^{i_k}` (indices in any order).
    pub fn monomial(dim: usize, indices: &[usize]) -> Self {
        let mut t = AltTensor::zero(dim, indices.len());
        if let Some((s, sorted)) = sort_with_sign(indices) {
            let pos = ext_position(dim, &ExtIndex::new(sorted));
            t.coeffs[pos] = Rational::from_integer(s.into());
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn get(&self, idx: &ExtIndex) -> &Rational {
        &self.coeffs[ext_position(self.dim, idx)]
    }

    pub fn set(&mut self, idx: &ExtIndex, value: Rational) {
        let pos = ext_position(self.dim, idx);
        self.coeffs[pos] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Value on basis vectors `e_{t_1}, …, e_{t_k}` in any order.
    pub fn eval_basis(&self, tuple: &[usize]) -> Rational {
        match ExtIndex::from_unsorted(tuple) {
            Some((s, idx)) => self.get(&idx) * Rational::from_integer(s.into()),
            None => Rational::zero(),
        }
    }

    /// Value on arbitrary vectors: `Σ_I α_I det(v_j[I_r])`.
    pub fn eval(&self, vectors: &[Vec<Rational>]) -> Result<Rational> {
        if vectors.len() != self.degree {
            return Err(Error::shape("number of arguments", self.degree, vectors.len()));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != self.dim) {
            return Err(Error::shape("argument dimension", self.dim, v.len()));
        }
        let mut total = Rational::zero();
        for (idx, c) in ext_basis(self.dim, self.degree).iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rational>> =
                vectors.iter().map(|v| idx.as_slice().iter().map(|&i| v[i].clone()).collect()).collect();
            total += c * determinant(minor);
        }
        Ok(total)
    }

    pub fn wedge(&self, other: &AltTensor) -> Result<AltTensor> {
        if self.dim != other.dim {
            return Err(Error::shape(
                "wedge operands",
                format!("∧^{} (R^{})*", self.degree, self.dim),
                format!("∧^{} (R^{})*", other.degree, other.dim),
            ));
        }
        let mut out = AltTensor::zero(self.dim, self.degree + other.degree);
        let lb = ext_basis(self.dim, other.degree);
        for (i, a) in ext_basis(self.dim, self.degree).iter().zip(&self.coeffs) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in lb.iter().zip(&other.coeffs) {
                if b.is_zero() {
                    continue;
                }
                let cat: Vec<usize> = i.as_slice().iter().chain(j.as_slice()).copied().collect();
                if let Some((s, k)) = ExtIndex::from_unsorted(&cat) {
                    let pos = ext_position(self.dim, &k);
                    out.coeffs[pos] += a * b * Rational::from_integer(s.into());
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &AltTensor) -> Result<AltTensor> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(Error::shape(
                "sum operands",
                format!("∧^{} (R^{})*", self.degree, self.dim),
                format!("∧^{} (R^{})*", other.degree, other.dim),
            ));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(AltTensor { coeffs, ..self.clone() })
    }

    pub fn scale(&self, s: &Rational) -> AltTensor {
        AltTensor { coeffs: self.coeffs.iter().map(|a| a * s).collect(), ..self.clone() }
    }
}

/// Determinant by elimination over the rationals.
pub(crate) fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let piv = m[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &piv;
            for j in c..n {
                let t = &f * &m[c][j];
                m[r][j] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;
    use proptest::prelude::*;

    fn e(dim: usize, i: usize) -> Vec<Rational> {
        (0..dim).map(|j| if i == j { q(1) } else { q(0) }).collect()
    }

    #[test]
    fn determinant_normalisation() {
        let a = AltTensor::monomial(3, &[0]);
        let b = AltTensor::monomial(3, &[1]);
        let ab = a.wedge(&b).unwrap();
        assert_eq!(ab.eval(&[e(3, 0), e(3, 1)]).unwrap(), q(1));
        assert!(a.wedge(&a).unwrap().is_zero());
    }

    #[test]
    fn triple_wedge_brute_force() {
        // (e1∧e2)∧e3 on (e1,e2,e3): the oracle expands the full S3 sum
        let a = AltTensor::monomial(3, &[0]).wedge(&AltTensor::monomial(3, &[1])).unwrap();
        let abc = a.wedge(&AltTensor::monomial(3, &[2])).unwrap();
        let vs = vec![e(3, 0), e(3, 1), e(3, 2)];
        let oracle_vs: Vec<Vec<lie2mm_oracle::Q>> = vs.clone();
        let expected = lie2mm_oracle::wedge_eval(
            2,
            |v| a.eval(v).unwrap(),
            1,
            |v| AltTensor::monomial(3, &[2]).eval(v).unwrap(),
            &oracle_vs,
        );
        assert_eq!(expected, q(1));
        assert_eq!(abc.eval(&vs).unwrap(), expected);
    }

    #[test]
    fn wedge_dimension_mismatch_names_shapes() {
        let err = AltTensor::monomial(3, &[0]).wedge(&AltTensor::monomial(4, &[0])).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("R^3") && msg.contains("R^4"), "{msg}");
    }

    #[test]
    fn eval_basis_signs() {
        let t = AltTensor::monomial(3, &[0, 1, 2]);
        assert_eq!(t.eval_basis(&[1, 0, 2]), q(-1));
        assert_eq!(t.eval_basis(&[2, 0, 1]), q(1));
        assert_eq!(t.eval_basis(&[0, 0, 1]), q(0));
    }

    fn tensor(dim: usize, k: usize, coeffs: &[i64]) -> AltTensor {
        let n = ext_basis(dim, k).len();
        AltTensor::from_coeffs(dim, k, coeffs.iter().cycle().take(n).map(|&c| q(c)).collect()).unwrap()
    }

    proptest! {
        #[test]
        fn wedge_is_bilinear_and_graded_commutative(
            k in 0usize..3,
            l in 0usize..3,
            a in prop::collection::vec(-3i64..=3, 1..12),
            b in prop::collection::vec(-3i64..=3, 1..12),
            c in prop::collection::vec(-3i64..=3, 1..12),
            s in -3i64..=3,
        ) {
            let dim = 4;
            let (x, y, z) = (tensor(dim, k, &a), tensor(dim, l, &b), tensor(dim, l, &c));
            let lhs = x.wedge(&y.scale(&q(s)).add(&z).unwrap()).unwrap();
            let rhs = x.wedge(&y).unwrap().scale(&q(s)).add(&x.wedge(&z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let sign = if (k * l) % 2 == 0 { q(1) } else { q(-1) };
            prop_assert_eq!(x.wedge(&y).unwrap(), y.wedge(&x).unwrap().scale(&sign));
        }
    }
}
