use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed word at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("generator `{0}` has no image under the homomorphism")]
    MissingImage(String),
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(usize),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("the word represents the trivial class of the surface group")]
    TrivialClass,
    #[error("the word is not a member of the cover subgroup")]
    NotMember,
    #[error("malformed presentation: {0}")]
    MalformedPresentation(String),
    #[error("invalid hyperbolic structure: {0}")]
    InvalidStructure(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("operation requires a level-{expected} cover")]
    WrongCoverLevel { expected: u8 },
}
