use thiserror::Error;

/// Every failure the library can report. Variants map onto the domain
/// preconditions of the individual operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficients of the cubic must be nonzero")]
    ZeroCoefficient,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("abc is a rational cube; the cube case is excluded (handled by infinite descent)")]
    CubeCase,
    #[error("value {0} is too large for the factorization routines (limit 2^64)")]
    TooLarge(String),

    #[error("norm is divisible by 3, so no primary associate exists")]
    NotCoprimeToThree,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("argument is divisible by the prime")]
    NotCoprime,
    #[error("residue norm {0} is not congruent to 1 mod 6")]
    BadResidueNorm(u128),
    #[error("prime {0} divides 6D (bad reduction)")]
    BadReduction(u64),
    #[error("prime is not split in Q(sqrt(-3))")]
    NotSplit,
    #[error("no m(3) witness prime found below {bound}")]
    NotFound { bound: u64 },

    #[error("x^2 + {c}x + {d} is not the minimal polynomial of an imaginary quadratic integer")]
    NotImaginary { c: i64, d: i64 },
    #[error("the zero isogeny has no graph class")]
    ZeroIsogeny,
    #[error("action matrix does not have order 3")]
    NotOrderThree,

    #[error("Hensel search undecided at depth {0}")]
    DepthExceeded(u32),
    #[error("value is not a p-adic unit")]
    NotUnit,
    #[error("p-adic precision too low")]
    PrecisionTooLow,
    #[error("the algebra (x - 3, u - 3) lives on y^2 = x^3 - 27; got D = {0}")]
    WrongCurve(i64),

    #[error("D must be nonzero")]
    ZeroD,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
