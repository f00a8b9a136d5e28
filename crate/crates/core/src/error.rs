use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {what} (expected {expected}, got {got})")]
    ShapeMismatch { what: String, expected: String, got: String },

    #[error("structure constants not antisymmetric at ({i},{j}) component {k}")]
    AntisymmetryViolation { i: usize, j: usize, k: usize },

    #[error("Jacobi identity fails on ({i},{j},{k}); defect {defect:?}")]
    JacobiViolation { i: usize, j: usize, k: usize, defect: Vec<String> },

    #[error("not a representation: rho([e{i},e{j}]) != [rho(e{i}),rho(e{j})]; defect {defect:?}")]
    RepViolation { i: usize, j: usize, defect: Vec<Vec<String>> },

    #[error("3-cochain is not a cocycle on {tuple:?}; defect {defect:?}")]
    CocycleViolation { tuple: Vec<usize>, defect: Vec<String> },

    #[error("cochain is not closed: {0}")]
    NotClosed(String),

    #[error("bilinear form is not symmetric and ad-invariant at ({i},{j},{k})")]
    FormNotInvariant { i: usize, j: usize, k: usize },

    #[error("functional does not annihilate [g,h]")]
    NotInAnnihilator,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("eta does not solve the primitive system: {0}")]
    StarViolation(String),

    #[error("xi = 0: no quotient onto R[1] (the [omega_3p]_g = 0 regime)")]
    XiZero,

    #[error("form degree {have} is too low for {need} contractions")]
    DegreeTooLow { need: usize, have: usize },

    #[error("form is not closed; d of it is {defect}")]
    FormNotClosed { defect: String },

    #[error("a function has no primitive")]
    FunctionPrimitive,

    #[error("vector field{} is not Hamiltonian; d(i_v omega) = {defect}", generator.map(|g| format!(" {g}")).unwrap_or_default())]
    NotHamiltonian { generator: Option<usize>, defect: String },

    #[error("action is not a Lie algebra morphism on ({i},{j}); defect field {defect}")]
    NotMorphism { i: usize, j: usize, defect: String },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("difference of the two candidates is not d_tot-closed: {0}")]
    NotClosedDifference(String),

    #[error("no primitive found with polynomial degree <= {bound}")]
    NotFoundWithinBound { bound: u32 },

    #[error("out of geometric scope: {0}")]
    OutOfGeometricScope(String),

    #[error("internal invariant breached: {0}")]
    Internal(String),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn shape(what: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        Error::ShapeMismatch { what: what.into(), expected: expected.to_string(), got: got.to_string() }
    }

    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { context: context.into(), message: message.into() }
    }
}
