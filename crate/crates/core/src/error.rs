use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("matrix is not congruent to the identity modulo {0}")]
    NotInLevel(u64),
    #[error("matrix is not in the Igusa subgroup of level ({0}, {1})")]
    NotInIgusa(u64, u64),
    #[error("Igusa subgroup needs an even level, got {0}")]
    OddLevelIgusa(u64),
    #[error("vectors are not orthogonal (pairing = {0})")]
    NonOrthogonal(String),
    #[error("level must be positive, got {0}")]
    InvalidLevel(i64),
    #[error("enhancement is degenerate (gauss sum {re} + {im}i)")]
    DegenerateEnhancement { re: String, im: String },
    #[error("invalid enhancement: {0}")]
    InvalidEnhancement(String),
    #[error("the zero class does not represent a non-separating curve")]
    ZeroClass,
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("product monomial has degree {0} > 3")]
    DegreeOverflow(usize),
    #[error("word is not in the mod-{0} kernel of abelianization")]
    NotInKernel(u64),
    #[error("endomorphism is not a level-{0} IA map")]
    NotIa(u64),
    #[error("modulus must be odd, got {0}")]
    EvenModulus(u64),
    #[error("parse error: {0}")]
    Parse(String),
}
