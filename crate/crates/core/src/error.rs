use thiserror::Error;

/// Errors raised by the algebra layer and everything built on it.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("step budget of {budget} reduction steps exceeded in {context}")]
    ResourceLimit { budget: u64, context: String },
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("action is not an involution: {0}")]
    NotInvolution(String),
    #[error("not a hypersurface presentation: {0}")]
    NotHypersurface(String),
    #[error("pushout generators incomplete at degree bound {bound}: {element} is not generated")]
    Completeness { bound: u32, element: String },
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }

    /// Process exit status: 1 for failed certification, 2 for bad input, 3 for the step budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit { .. } => 3,
            Error::Completeness { .. } | Error::Certification(_) | Error::NotInvolution(_) => 1,
            _ => 2,
        }
    }
}
