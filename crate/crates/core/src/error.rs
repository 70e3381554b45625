use thiserror::Error;

use crate::poset::Vertex;
use crate::reduced::RankType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed sequence spec `{0}`")]
    MalformedSpec(String),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("level {index} is outside the stored range 0..={max}")]
    LevelOutOfRange { index: usize, max: usize },

    #[error("vertex {0} is not an element of the poset")]
    NotInPoset(Vertex),

    #[error("{x} and {y} are not comparable")]
    NotComparable { x: Vertex, y: Vertex },

    #[error("functions are defined over different posets")]
    PosetMismatch,

    #[error("reduced tables have different shapes")]
    ShapeMismatch,

    #[error("unknown function name `{0}`")]
    UnknownFunction(String),

    #[error("`{0}` has no direct constructor in the full incidence algebra")]
    NotElementary(String),

    #[error("power must be at least 1, got {0}")]
    InvalidPower(u32),

    #[error("not invertible: zero diagonal value at {0}")]
    NotInvertible(Vertex),

    #[error("not invertible: zero diagonal value at rank {0}")]
    NotInvertibleAtRank(usize),

    #[error("{0}")]
    NotRankDependent(Box<RankWitness>),

    #[error("parse error: {0}")]
    Parse(String),
}

/// Two segments of the same type on which a function takes different values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankWitness {
    pub ty: RankType,
    pub first: (Vertex, Vertex),
    pub first_value: String,
    pub second: (Vertex, Vertex),
    pub second_value: String,
}

impl std::fmt::Display for RankWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "function is not constant on type {}: f({}, {}) = {} but f({}, {}) = {}",
            self.ty,
            self.first.0,
            self.first.1,
            self.first_value,
            self.second.0,
            self.second.1,
            self.second_value
        )
    }
}
