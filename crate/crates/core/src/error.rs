use thiserror::Error;

/// Errors raised by the algebra, curve and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different coefficient fields ({0} vs {1})")]
    MixedFields(String, String),
    #[error("zero input: {0}")]
    ZeroInput(&'static str),
    #[error("operation requires a finite base field; use coprime refinement over Q")]
    WrongBackend,
    #[error("operation requires positive characteristic")]
    CharacteristicZero,
    #[error("wrong characteristic: {0}")]
    WrongCharacteristic(String),
    #[error("{0} requires an algebraic extension of Q")]
    RequiresAlgebraicExtension(String),
    #[error("polynomial is not irreducible over the prime field")]
    NotIrreducible,
    #[error("not a prime: {0}")]
    NotPrime(u64),
    #[error("element {0} is not in the declared field")]
    NotInField(String),
    #[error("singular Weierstrass equation (discriminant is zero)")]
    Singular,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search space of {size} candidates exceeds the cap of {cap}")]
    SearchTooLarge { size: u128, cap: u128 },
    #[error("parse error at byte {pos}: expected {expected}, found {found}")]
    Parse {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("unknown named example: {0}")]
    UnknownExample(String),
    #[error("counterexample: {0}")]
    Counterexample(String),
}

pub type Result<T> = std::result::Result<T, Error>;
