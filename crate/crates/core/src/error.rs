use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: unknown variable `{name}`")]
    UnknownVariable {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("characteristic {0} is not prime")]
    CompositeCharacteristic(u64),
    #[error("characteristic {0} is outside the supported range (prime below 2^31)")]
    CharacteristicOutOfRange(u64),
    #[error("duplicate ideal name `{0}`")]
    DuplicateIdeal(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid term order: {0}")]
    InvalidOrder(String),
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("ideal is not Artinian: {0}")]
    NotArtinian(String),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal disagreement: {0}")]
    Disagreement(String),
}

impl Error {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for errors raised while reading an ideal file.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::CompositeCharacteristic(_)
                | Error::CharacteristicOutOfRange(_)
                | Error::DuplicateIdeal(_)
                | Error::InvalidRing(_)
        )
    }
}
