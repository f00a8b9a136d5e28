use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Solution set of `A x = b`: one particular solution (when consistent) plus a
/// basis of `ker A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineSolution {
    #[serde(serialize_with = "crate::io::ser_opt_vec")]
    pub particular: Option<Vec<Rational>>,
    #[serde(serialize_with = "crate::io::ser_vec_vec")]
    pub kernel_basis: Vec<Vec<Rational>>,
    pub rank: usize,
    pub augmented_rank: usize,
}

/// Integer row echelon form produced by fraction-free (Bareiss) elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::shape("matrix row length", cols, r.len()));
        }
        let nrows = rows.len();
        Ok(Matrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Columns given as vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::shape("matrix column length", rows, c.len()));
            }
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Rational) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::shape("vector length", self.cols, x.len()));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::shape(
                "matrix product",
                format!("{}x{} * {}x_", self.rows, self.cols, self.cols),
                format!("{}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape(
                "matrix difference",
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    /// Commutator `AB − BA`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { data: self.data.iter().map(|a| a * s).collect(), ..self.clone() }
    }

    pub fn rank(&self) -> usize {
        self.echelon(self.cols).pivots.len()
    }

    /// Indices of the pivot columns; the corresponding original columns form a
    /// basis of the column space.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.echelon(self.cols).pivots
    }

    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let zero = vec![Rational::zero(); self.rows];
        self.solve_affine(&zero).map(|s| s.kernel_basis).unwrap_or_default()
    }

    /// Exact solve of `A x = b`: a particular solution iff `rank [A|b] = rank A`
    /// (free variables set to zero) and a basis of `ker A` (one vector per free
    /// column, that column set to one).
    pub fn solve_affine(&self, b: &[Rational]) -> Result<AffineSolution> {
        if b.len() != self.rows {
            return Err(Error::shape("right-hand side length", self.rows, b.len()));
        }
        let mut aug = self.clone();
        aug.cols += 1;
        aug.data = (0..self.rows)
            .flat_map(|i| self.row(i).iter().cloned().chain(std::iter::once(b[i].clone())).collect::<Vec<_>>())
            .collect();
        let ech = aug.echelon(aug.cols);
        let n = self.cols;
        let inconsistent = ech.pivots.last() == Some(&n);
        let rank = if inconsistent { ech.pivots.len() - 1 } else { ech.pivots.len() };
        let augmented_rank = ech.pivots.len();

        // back-substitute to reduced form over the rationals
        let mut red: Vec<Vec<Rational>> = ech
            .rows
            .iter()
            .take(rank)
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let pivots = &ech.pivots[..rank];
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let inv = red[i][pc].recip();
            for x in red[i].iter_mut() {
                *x *= &inv;
            }
            for k in 0..i {
                if red[k][pc].is_zero() {
                    continue;
                }
                let f = red[k][pc].clone();
                for j in pc..=n {
                    let t = &f * &red[i][j];
                    red[k][j] -= t;
                }
            }
        }

        let particular = if inconsistent {
            None
        } else {
            let mut x = vec![Rational::zero(); n];
            for (i, &pc) in pivots.iter().enumerate() {
                x[pc] = red[i][n].clone();
            }
            Some(x)
        };
        let kernel_basis = (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|f| {
                let mut x = vec![Rational::zero(); n];
                x[f] = Rational::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    x[pc] = -red[i][f].clone();
                }
                x
            })
            .collect();
        Ok(AffineSolution { particular, kernel_basis, rank, augmented_rank })
    }

    /// Bareiss elimination on the first `ncols` columns. Pivot: leftmost
    /// column with a nonzero entry at or below the current row, smallest row
    /// index among candidates.
    fn echelon(&self, ncols: usize) -> Echelon {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|i| integer_row(self.row(i))).collect();
        let nrows = m.len();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let (top, rest) = m.split_at_mut(r + 1);
            let prow = &top[r];
            for row in rest.iter_mut() {
                let f = row[c].clone();
                for j in c + 1..ncols {
                    let num = &prow[c] * &row[j] - &f * &prow[j];
                    let (quo, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    row[j] = quo;
                }
                row[c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        Echelon { rows: m, pivots }
    }
}

/// Scale a rational row by the lcm of its denominators.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{q, qf};
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_system() {
        let s = Matrix::identity(2).solve_affine(&[q(1), q(2)]).unwrap();
        assert_eq!(s.particular, Some(vec![q(1), q(2)]));
        assert!(s.kernel_basis.is_empty());
    }

    #[test]
    fn inconsistent_system() {
        let s = Matrix::zeros(2, 2).solve_affine(&[q(1), q(0)]).unwrap();
        assert_eq!(s.particular, None);
        assert_eq!(s.rank, 0);
        assert_eq!(s.augmented_rank, 1);
    }

    #[test]
    fn underdetermined_system() {
        let a = m(vec![vec![1, 1]]);
        let s = a.solve_affine(&[q(1)]).unwrap();
        assert_eq!(s.particular, Some(vec![q(1), q(0)]));
        assert_eq!(s.kernel_basis, vec![vec![q(-1), q(1)]]);
        // substitution check
        assert_eq!(a.mul_vec(s.particular.as_ref().unwrap()).unwrap(), vec![q(1)]);
        assert_eq!(a.mul_vec(&s.kernel_basis[0]).unwrap(), vec![q(0)]);
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(4, 5).rank(), 0);
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn rational_entries() {
        let a = Matrix::from_rows(vec![vec![qf(1, 2), qf(1, 3)], vec![qf(1, 4), qf(1, 6)]]).unwrap();
        assert_eq!(a.rank(), 1);
        let s = a.solve_affine(&[q(1), qf(1, 2)]).unwrap();
        let x = s.particular.unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![q(1), qf(1, 2)]);
    }

    #[test]
    fn shape_mismatch() {
        assert!(Matrix::identity(2).solve_affine(&[q(1)]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>, Vec<i64>)> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c), prop::collection::vec(-3i64..=3, r))
        })
    }

    proptest! {
        #[test]
        fn solutions_substitute_back((r, c, data, b) in small_matrix(), den in 1i64..5) {
            let a = Matrix::from_rows(
                data.chunks(c).map(|row| row.iter().map(|&x| qf(x, den)).collect()).collect()
            ).unwrap();
            let b: Vec<Rational> = b.into_iter().map(q).collect();
            let s = a.solve_affine(&b).unwrap();
            prop_assert_eq!(s.rank + s.kernel_basis.len(), c);
            for k in &s.kernel_basis {
                prop_assert!(a.mul_vec(k).unwrap().iter().all(Zero::is_zero));
            }
            if let Some(x) = &s.particular {
                prop_assert_eq!(a.mul_vec(x).unwrap(), b.clone());
            }
            let rows: Vec<Vec<Rational>> = a.to_rows();
            prop_assert_eq!(s.rank, lie2mm_oracle::rank(&rows));
            prop_assert_eq!(s.particular.is_some(), lie2mm_oracle::affine_solvable(&rows, &b));
            prop_assert_eq!(a.rank(), a.transpose().rank());
            let _ = r;
        }
    }
}
