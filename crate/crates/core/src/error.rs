use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("value {value} does not fit in {width} digits")]
    Width { value: String, width: usize },

    #[error("generator exhausted: {available} terms available, {requested} requested")]
    GeneratorExhausted { available: usize, requested: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
