use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus exponent {m} is outside 1..={max}")]
    BadExponent { m: u32, max: u32 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{p} mod 8 = {} is not 1 or 7", p % 8)]
    BadResidueClass { p: u64 },

    #[error("p = {p} is congruent to +-1 mod 2^{m}; no family parameter k applies")]
    OutOfFamilyRange { p: u64, m: u32 },

    #[error("no k in 1..2^(m-3)-1 satisfies p = +-(8k-1) mod 2^m for p = {p}, m = {m}")]
    NoValidK { p: u64, m: u32 },

    #[error("family construction needs m >= 4, got {0}")]
    ExponentTooSmall(u32),

    #[error("2-adic digit templates need m >= 4, got {0}")]
    TemplateNeedsM4(u32),

    #[error("shape mismatch: ({n_left}, m={m_left}) vs ({n_right}, m={m_right})")]
    ShapeMismatch {
        n_left: usize,
        m_left: u32,
        n_right: usize,
        m_right: u32,
    },

    #[error("{a} is not a unit modulo {n}")]
    NotAUnit { a: u64, n: usize },

    #[error("seed factors are not coprime modulo 2")]
    NotCoprime,

    #[error("generator and its cofactor are not coprime modulo 2")]
    NotCoprimeCofactor,

    #[error("polynomial does not divide x^n - 1 with a unit leading coefficient")]
    NotADivisor,

    #[error("lifted factor product does not reproduce x^{p} - 1 modulo 2^{m}")]
    LiftVerificationFailed { p: u64, m: u32 },

    #[error("coefficients ({alpha}, {beta}, {gamma}) do not give an idempotent")]
    NotIdempotent { alpha: u64, beta: u64, gamma: u64 },

    #[error("degenerate coefficients: beta == gamma == {0}")]
    DegenerateCoefficients(u64),

    #[error(
        "beta + gamma = {sum} does not match the sign required by the shift (need {required})"
    )]
    PreconditionSignMismatch { sum: u64, required: u64 },

    #[error("no sub-case of the family definition applies for p = {p}, m = {m}")]
    NoCaseApplies { p: u64, m: u32 },

    #[error("more than one sub-case of the family definition applies for p = {p}, m = {m}")]
    AmbiguousCase { p: u64, m: u32 },

    #[error("exhaustive enumeration needs 2^{needed} words, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("code has no nonzero words")]
    NoNonzeroWords,

    #[error("coordinate {pos} is out of range for length {n}")]
    BadPosition { pos: usize, n: usize },

    #[error("cannot parse polynomial text: {0}")]
    Parse(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
