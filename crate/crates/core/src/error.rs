use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("too many minors to enumerate: C({rows}, {cols}) = {count} exceeds the cap of {cap}")]
    TooManyMinors {
        rows: usize,
        cols: usize,
        count: String,
        cap: u64,
    },

    #[error("homomorphism is not well defined: {0}")]
    IllDefined(String),

    #[error("homomorphism does not descend to the quotients: {0}")]
    NotInduced(String),

    #[error("group is not free: torsion coefficients {torsion:?}")]
    NotFree { torsion: Vec<String> },

    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    #[error("singular lattice map: {0}")]
    Singular(String),

    #[error("reduction did not terminate within {max_steps} steps")]
    StepLimit { max_steps: usize },

    #[error("Seifert matrix must be square of even dimension, got {rows}x{cols}")]
    OddDimension { rows: usize, cols: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
