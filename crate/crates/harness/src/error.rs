use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] spikelab_core::Error),

    #[error("store failure: {0}")]
    StoreFailure(#[from] std::io::Error),

    #[error("malformed line {line}: {message}")]
    ParseFailure { line: usize, message: String },

    #[error("level {level} has {found} matroids, published enumeration says {expected}")]
    LevelCountMismatch { level: usize, found: usize, expected: usize },

    #[error("expression error at byte {at}: {message}")]
    Expression { at: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
