use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::datum::Violation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Enumeration axis that hit a configured cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    GroupOrder,
    GammaOrder,
    Ell,
    Rank,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::GroupOrder => "group order",
            Axis::GammaOrder => "|Gamma|",
            Axis::Ell => "ell",
            Axis::Rank => "rank",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ell must be odd and at least 3, got {0}")]
    InvalidEll(u64),
    #[error("mismatched root orders: {0} vs {1}")]
    EllMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("q-number argument must be nonzero")]
    ZeroArgument,
    #[error("q-binomial needs t <= m, got m = {m}, t = {t}")]
    BinomialRange { m: u64, t: u64 },
    #[error("invalid rank {rank} for type {letter}")]
    InvalidRank { letter: char, rank: usize },
    #[error("unknown Cartan type letter {0:?}")]
    UnknownLetter(char),
    #[error("not a positive root of this system")]
    UnknownRoot,
    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("invalid invariant factors: {0}")]
    InvalidFactors(String),
    #[error("element does not belong to the group")]
    NotAnElement,
    #[error("mismatched groups: {0}")]
    GroupMismatch(String),
    #[error("homomorphism is not well defined")]
    NotAHom,
    #[error("{axis} cap exceeded: {requested} > {limit}")]
    CapExceeded { axis: Axis, limit: u64, requested: u64 },
    #[error("invalid subgroup datum: {}", join(.0))]
    InvalidDatum(Vec<Violation>),
    #[error("data live over different ambients: {0}")]
    AmbientMismatch(String),
    #[error("index set {0} is not contained in {1}")]
    NotSubset(String, String),
    #[error("triple violates K_i in Sigma for i = {0}")]
    TripleInvariant(usize),
    #[error("dual element not supported on the chosen subalgebra")]
    SupportMismatch,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

fn join(v: &[Violation]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            s.push_str("; ");
        }
        let _ = write!(s, "{x}");
    }
    s
}
