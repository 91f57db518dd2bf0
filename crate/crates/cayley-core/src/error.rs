use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation table: {0}")]
    InvalidPermutation(String),

    #[error("group parameter m must be at least 4, got {0}")]
    InvalidM(u32),

    #[error("mixed group parameters: m={0} vs m={1}")]
    ParamMismatch(u32, u32),

    #[error("index {0} out of range for a group of order {1}")]
    IndexOutOfRange(usize, usize),

    #[error("c index {0} out of range 1..={1}")]
    BadCIndex(i64, u32),

    #[error("element {0} lies outside K and has no image under the K-automorphism")]
    OutsideK(String),

    #[error("h1 is only defined for even m, got m={0}")]
    H1RequiresEvenM(u32),

    #[error("no fixed-point subgroup M is defined for m ≡ 0 (mod 4), got m={0}")]
    NoSubgroupM(u32),

    #[error("connection set is degenerate: {0}")]
    DegenerateConnectionSet(String),

    #[error("generator images violate the defining relations: {0}")]
    BadGeneratorImages(String),

    #[error("degree {degree} exceeds the stabilizer-chain cap {cap}; use the alternating-group certificate for large degrees")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("closure exceeded the cap of {0} elements")]
    ClosureCapExceeded(usize),

    #[error("point {target} is not in the orbit of {from}")]
    NotInOrbit { from: usize, target: usize },

    #[error("ell must be even and at least 2, got {0}")]
    InvalidEll(u64),

    #[error("coset-graph hypothesis violated: {0}")]
    CosetHypothesis(String),

    #[error("group enumeration exceeded the cap of {0} elements")]
    GroupCapExceeded(usize),

    #[error("unknown export format {0:?} (expected \"dot\" or \"json\")")]
    UnknownFormat(String),

    #[error("malformed import: {0}")]
    MalformedImport(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("check {0} is out of scope here: {1}")]
    OutOfScope(&'static str, String),
}
