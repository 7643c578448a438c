use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GAlgebraError {
    #[error("operands live in different presentations")]
    PresentationMismatch,
    #[error("variables do not form a commuting block: {0}")]
    NonCommutingVariables(String),
    #[error("operation undefined for the zero element")]
    ZeroInput,
    #[error("exact division failed")]
    NotDivisible,
    #[error("opposite presentation failed validation: {0}")]
    OppositeInvalid(String),
}
