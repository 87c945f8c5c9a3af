use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The automaton document is well-formed JSON but violates the schema.
    #[error("schema error: {0}")]
    Schema(String),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    /// Regex syntax error; `position` is a character offset into the pattern.
    #[error("regex parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    /// An exploration stopped after visiting `0` configurations; no partial
    /// answer is returned.
    #[error("exploration budget exceeded after {0} configurations")]
    BudgetExceeded(usize),

    #[error("piece space over {alphabet} letters at kappa {kappa} needs {bits} bits, above the supported limit")]
    PieceSpaceTooLarge {
        alphabet: usize,
        kappa: usize,
        bits: u128,
    },

    #[error("transition monoid requires a complete DFA")]
    IncompleteDfa,

    #[error("transition monoid exceeds {0} elements")]
    MonoidTooLarge(usize),

    #[error("io error: {0}")]
    Io(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}
