use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator {0} has no image")]
    MissingImage(String),
    #[error("braid generator index {index} out of range for {strands} strands")]
    BraidIndex { index: usize, strands: usize },
    #[error("invalid representation parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("inapplicable Tietze move: {0}")]
    InapplicableMove(String),
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("relator is not in the commutator subgroup")]
    NotInCommutatorSubgroup,
    #[error("parameters are not unimodular: determinant {0}")]
    NotUnimodular(i64),
    #[error("unsupported range: {0}")]
    Unsupported(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("inverse of {0} needs a truncation degree or a nilpotent variable")]
    NonTerminatingInverse(String),
    #[error("algebra is infinite-dimensional below degree {0}")]
    InfiniteDimensional(usize),
    #[error("invalid leading part: {0}")]
    InvalidLeadingPart(String),
    #[error("verification failed: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
