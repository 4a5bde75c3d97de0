use thiserror::Error;

use crate::vset::MAX_VERTICES;

#[derive(Error, Debug)]
pub enum Error {
    #[error("vertex index {0} exceeds capacity of {MAX_VERTICES} vertices")]
    Capacity(usize),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub fn unsupported<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Unsupported(msg.into()))
}
