use thiserror::Error;

/// Errors produced by graph construction, the reductions, the solvers and the
/// instance format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("identifying a vertex with itself ({0})")]
    SameVertex(usize),

    #[error("rotation of vertex {vertex} is not a permutation of its neighbourhood")]
    RotationMismatch { vertex: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("rotation system is not planar: n - m + f = {euler} (expected 2)")]
    NotPlanar { euler: i64 },

    #[error("face {face} does not exist (embedding has {count} faces)")]
    InvalidFace { face: usize, count: usize },

    #[error("graph is not {expected}-regular: vertex {vertex} has degree {degree}")]
    NotRegular {
        expected: usize,
        vertex: usize,
        degree: usize,
    },

    #[error("vertex {0} has odd degree")]
    OddDegree(usize),

    #[error("graph has an odd number of vertices ({0})")]
    OddOrder(usize),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("insertion geometry mismatch: {0}")]
    GeometryMismatch(String),

    #[error("gadget data is corrupt: {0}")]
    CorruptGadget(String),

    #[error("unknown gadget `{0}`")]
    UnknownGadget(String),

    #[error("gadget has no label `{0}`")]
    MissingLabel(String),

    #[error("2-factor already consists of a single cycle")]
    NothingToMerge,

    #[error("no edge joins two distinct cycles of the 2-factor")]
    NoCrossEdge,

    #[error("{what}: size {size} exceeds budget {cap}")]
    BudgetExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error(
        "ordering schedule {schedule:?} refused: step {step} would build \
         {needed} vertices (budget {cap})"
    )]
    ScheduleRefused {
        schedule: Vec<u64>,
        /// 1-based index of the first step over budget.
        step: usize,
        needed: u128,
        cap: u128,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("trace replay diverged at step {step}: {message}")]
    ReplayMismatch { step: usize, message: String },
}

impl Error {
    /// Whether the failure is a refusal to run past a configured budget rather
    /// than a definite negative answer.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::ScheduleRefused { .. }
        )
    }

    /// Process exit code used by the command-line driver: 2 for refusals,
    /// 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        if self.is_refusal() {
            2
        } else {
            1
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
