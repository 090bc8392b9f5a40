use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("unsupported domain kind `{0}`")]
    UnsupportedKind(String),
    #[error("operands belong to different domains")]
    DomainMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("nonzero element of zero norm: the quaternion algebra ({a}, {b}) is split")]
    SplitAlgebraWitness { a: String, b: String },
    #[error("index ({i}, {j}) out of range for n = {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("coordinate vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("not a unital subalgebra: {0}")]
    NotASubalgebra(String),
    #[error("matrix does not lie in the subalgebra")]
    NotInSubalgebra,
    #[error("subalgebra is not commutative")]
    NotCommutative,
    #[error("brute-force nilradical needs {size} elements, limit is {limit}")]
    CharacteristicFallbackTooLarge { size: u128, limit: u128 },
    #[error("element is nilpotent or invertible; a Fitting split needs neither")]
    NilpotentOrInvertibleInput,
    #[error("no element that is neither nilpotent nor invertible was found in a non-local algebra")]
    WitnessSearchExhausted,
    #[error("polynomial factorization unavailable: {0}")]
    FactorizationUnavailable(String),
    #[error("radical certification failed: {0}")]
    RadicalCertificationFailed(String),
    #[error("unsupported domain: {0}")]
    UnsupportedDomain(String),
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
