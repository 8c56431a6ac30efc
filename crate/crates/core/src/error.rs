use std::fmt;

use thiserror::Error;

/// Which of the four decomposition statements a target belongs to.
///
/// `I` and `II` apply to orders `n = 4t`, `III` and `IV` to `n = 4t + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    I,
    II,
    III,
    IV,
}

impl Statement {
    pub const ALL: [Statement; 4] = [Statement::I, Statement::II, Statement::III, Statement::IV];

    /// Residue of `n mod 4` the statement applies to.
    pub fn residue(self) -> usize {
        match self {
            Statement::I | Statement::II => 0,
            Statement::III | Statement::IV => 2,
        }
    }

    pub fn applies_to(self, n: usize) -> bool {
        n % 4 == self.residue()
    }

    /// The statements applicable to a graph of order `n`.
    pub fn for_order(n: usize) -> &'static [Statement] {
        match n % 4 {
            0 => &[Statement::I, Statement::II],
            2 => &[Statement::III, Statement::IV],
            _ => &[],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Statement::I => "I",
            Statement::II => "II",
            Statement::III => "III",
            Statement::IV => "IV",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(Statement::I),
            "ii" | "2" => Ok(Statement::II),
            "iii" | "3" => Ok(Statement::III),
            "iv" | "4" => Ok(Statement::IV),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown statement {s:?}") }),
        }
    }
}

/// The graph/statement pairs that provably admit no decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionKind {
    K4I,
    K33III,
    TwoK4II,
    ThreeK4I,
    TwoC3,
    TwoC4,
}

impl ExceptionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExceptionKind::K4I => "K4_I",
            ExceptionKind::K33III => "K33_III",
            ExceptionKind::TwoK4II => "TWO_K4_II",
            ExceptionKind::ThreeK4I => "THREE_K4_I",
            ExceptionKind::TwoC3 => "TWO_C3",
            ExceptionKind::TwoC4 => "TWO_C4",
        }
    }
}

impl fmt::Display for ExceptionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("edge subset has {got} bits, host has {expected} edges")]
    SizeMismatch { expected: usize, got: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("order {0} is not supported by the graph6 codec")]
    UnsupportedOrder(usize),
    #[error("statement {statement} does not apply to order {n}")]
    ParityMismatch { n: usize, statement: Statement },
    #[error("order {0} is too small for the requested target")]
    InvalidOrder(usize),
    #[error("exception graph: {0}")]
    ExceptionGraph(ExceptionKind),
    #[error("internal invariant failure: {0}")]
    InternalStuck(String),
    #[error("stage 2 blocked; special construction required")]
    SpecialCaseNeeded,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("no stored witness for profile {0:?}")]
    NoSuchTuple(Vec<usize>),
    #[error("components are not an isomorphic K4 or K3,3 pair")]
    NotIsomorphicPair,
    #[error("graph has {edges} edges, exceeding the enumeration cap {cap}")]
    CapExceeded { edges: usize, cap: usize },
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("cubic graphs need an even order, got {0}")]
    OddOrder(usize),
    #[error("configuration model gave up after {0} retries")]
    RetriesExhausted(usize),
    #[error("cycle length {0} is below 3")]
    PartTooSmall(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
