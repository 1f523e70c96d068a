use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime greater than 3")]
    InvalidPrime(u64),

    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("element set is not abelian: {0}")]
    NotAbelian(String),

    #[error("the quadratic functor is only implemented for odd order (got prime {0})")]
    EvenOrderUnsupported(u64),

    #[error("cokernel is infinite (free rank {0})")]
    InfiniteCokernel(usize),

    #[error("invariant factor {factor} is not a power of {prime}")]
    NotPrimePower { factor: String, prime: u64 },

    #[error("parameter {name}={value} outside its domain {domain}")]
    BadParam {
        name: String,
        value: i64,
        domain: String,
    },

    #[error("unknown family {0}")]
    UnknownFamily(String),

    #[error("order identity violated for {row}: |wedge| = p^{wedge} but |M||G'| = p^{expected}")]
    OrderIdentityViolation {
        row: String,
        wedge: u32,
        expected: u32,
    },

    #[error("exponent constraint violated for {row}: {detail}")]
    ExponentViolation { row: String, detail: String },

    #[error("multiplier mismatch for abelian {row}: wedge square is {computed}, multiplier is {expected}")]
    MultiplierMismatch {
        row: String,
        computed: String,
        expected: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("data error: {0}")]
    Data(String),
}
