use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("no elimination needed: input has degree zero in n")]
    NoEliminationNeeded,
    #[error("singular linear system")]
    SingularSystem,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not linear in its highest shift or still depends on n")]
    NotQuasiLinear,
    #[error("not a holonomic equation: {0}")]
    NotHolonomic(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("resource limit reached: {0}")]
    Timeout(String),
    #[error("no simple ratrec generator found up to iteration {reached}")]
    NotFoundWithinBound { reached: u32 },
    #[error("expected {expected} initial values, got {got}")]
    ArityError { expected: usize, got: usize },
    #[error("not eligible for integer sequence generation: {0}")]
    NotSomosEligible(String),
}

pub type Result<T> = core::result::Result<T, Error>;
