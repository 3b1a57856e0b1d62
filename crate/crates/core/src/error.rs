use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `(n, m)` violates `|m| <= n` or the parity of `n - m`.
    #[error("invalid Zernike parameters n={n}, m={m}: need |m| <= n and n - m even")]
    InvalidOrder { n: u32, m: i32 },

    #[error("invalid Noll index {0}: must be >= 1")]
    InvalidNollIndex(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("terminating 2F1 needs a <= 0, got a={0}")]
    NonTerminating(i32),

    /// `(c)_k` vanishes before the series terminates.
    #[error("Pochhammer symbol (c)_{k} vanishes for c={c}")]
    PochhammerZero { c: f64, k: u32 },

    #[error("radial functions are only available in dimension 2, got {0}")]
    UnsupportedDimension(u32),

    #[error("underdetermined fit: {samples} samples for {unknowns} unknowns")]
    Underdetermined { samples: usize, unknowns: usize },

    /// A diagonal entry of the triangular factor fell below the relative threshold.
    #[error("rank-deficient design matrix: column {column} (x^{p} y^{q}) has relative diagonal {ratio:e}")]
    RankDeficient {
        column: usize,
        p: u32,
        q: u32,
        ratio: f64,
    },

    #[error("no data")]
    EmptyData,

    #[error("non-finite value at line {line}")]
    NonFinite { line: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
