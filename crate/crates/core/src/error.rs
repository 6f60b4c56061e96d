use thiserror::Error;

pub type Result<T> = std::result::Result<T, FdError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FdError {
    /// Two grid points coincide. Indices are 0-based positions in the input.
    #[error("duplicate grid point {value} at positions {first} and {second}")]
    DuplicateGridPoint {
        first: usize,
        second: usize,
        value: f64,
    },

    #[error("non-finite value {value} at position {index}")]
    NonFinite { index: usize, value: f64 },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("root at position {index} is zero")]
    ZeroRoot { index: usize },

    /// The error constant vanished at the declared order, so the boost test
    /// disagrees with the weights. Both order candidates are reported.
    #[error(
        "error constant {constant:e} is negligible against its scale {scale:e} at order {order} \
         (candidates: {candidates:?})"
    )]
    DegenerateConstant {
        constant: f64,
        scale: f64,
        order: usize,
        candidates: [usize; 2],
    },
}

impl FdError {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        FdError::Argument(msg.into())
    }
}
