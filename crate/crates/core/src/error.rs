use thiserror::Error;

/// Which of the three DIII conditions a clan fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiiiViolation {
    /// The clan is not equal to the reverse of its negative.
    NotSkewSymmetric,
    /// Some pair of mates sits at positions `i` and `2n+1-i`.
    AntipodalMates,
    /// Minus signs plus first-half pairs in `c_1..c_n` is odd.
    OddParity,
}

impl std::fmt::Display for DiiiViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DiiiViolation::NotSkewSymmetric => write!(f, "condition 1 (skew-symmetry) violated"),
            DiiiViolation::AntipodalMates => write!(f, "condition 2 (no antipodal mates) violated"),
            DiiiViolation::OddParity => write!(f, "condition 3 (even first-half parity) violated"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClanError {
    #[error("empty clan")]
    Empty,
    #[error("clan has odd length {0}")]
    OddLength(usize),
    #[error("label {label} appears {count} times, expected exactly 2")]
    LabelCount { label: u32, count: usize },
    #[error("unbalanced signs: {plus} '+' vs {minus} '-' (not an (n,n)-clan)")]
    Unbalanced { plus: usize, minus: usize },
    #[error("unknown token {0:?}")]
    UnknownToken(String),
    #[error("not a DIII clan: {0}")]
    NotDiii(DiiiViolation),
    #[error("reflection index {index} out of range 1..={n}")]
    ReflectionOutOfRange { index: usize, n: usize },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid Schubert subset: {0}")]
    InvalidSubset(String),
    #[error("clan {0} is not in the big sect")]
    NotInBigSect(String),
    #[error("invalid partial fixed-point-free involution: {0}")]
    InvalidPartialInvolution(String),
    #[error("invalid pyramid: {0}")]
    InvalidPyramid(String),
    #[error("pyramid decodes to non-DIII clan {0}; reflect the pyramid")]
    ReflectPyramid(String),
    #[error("invalid rook placement: {0}")]
    InvalidPlacement(String),
    #[error("invalid partition pair: {0}")]
    InvalidPartitionPair(String),
    #[error("invalid weighted Delannoy path: condition {condition} violated: {detail}")]
    InvalidPath { condition: u8, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ClanError>;
