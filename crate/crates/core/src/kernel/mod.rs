//! Scalars, multi-index bases and exact linear algebra.

mod index;
mod linalg;
mod rational;
mod tensor;

pub use index::{binomial, ext_basis, ext_position, sort_with_sign, sym_basis, ExtIndex, SymIndex};
pub use linalg::{AffineSolution, Matrix};
pub use rational::{format_rational, format_vec, parse_rational, q, qf, Rational};
pub use tensor::AltTensor;
