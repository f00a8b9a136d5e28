//! Exact-arithmetic existence, construction and verification of homotopy
//! moment maps for minimal Lie 2-algebras acting on 2-plectic coordinate space.
//!
//! The crate is organised bottom-up:
//!
//! - [`kernel`]: rationals, exterior/symmetric multi-indices, alternating
//!   tensors and exact elimination.
//! - [`lie`]: Lie algebras, representations, cochains with coefficients and
//!   their cohomology.
//! - [`lie2`]: minimal Lie 2-algebras `(g, h, c)` and their Chevalley-Eilenberg
//!   algebra as a graded-commutative algebra on `g* ⊕ h*`.
//! - [`existence`]: the linear system for primitives of `ω_3p` in `CE(L)`,
//!   the map `Ψ`, the `c_red` criteria and the induced L∞-morphisms.
//! - [`derham`]: polynomial forms and vector fields on `R^n`.
//! - [`momentmap`]: actions, `ω̃`, the moment maps `γ` and `φ^η`, both
//!   verifiers, the restriction map `r` and inner equivalence.
//! - [`io`] and [`cli`]: the JSON/TOML problem format and the command layer.

pub mod cli;
pub mod derham;
pub mod error;
pub mod existence;
pub mod io;
pub mod kernel;
pub mod lie;
pub mod lie2;
pub mod momentmap;

pub use error::{Error, Result};
pub use kernel::{q, qf, Rational};
