use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Why an edge list failed to describe a tree or a connected simple graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Defect {
    Empty,
    BadNodeId,
    SelfLoop,
    DuplicateEdge,
    Cycle,
    Disconnected,
}

impl std::fmt::Display for Defect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Defect::Empty => "no nodes",
            Defect::BadNodeId => "node id out of range",
            Defect::SelfLoop => "self-loop",
            Defect::DuplicateEdge => "duplicate edge",
            Defect::Cycle => "cycle",
            Defect::Disconnected => "disconnected",
        };
        f.write_str(s)
    }
}

fn edge_suffix(edge: &Option<(usize, usize)>) -> String {
    match edge {
        Some((u, v)) => format!(" at edge ({u}, {v})"),
        None => String::new(),
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a tree: {defect}{}", edge_suffix(.edge))]
    NotATree {
        defect: Defect,
        edge: Option<(usize, usize)>,
    },
    #[error("not a connected simple graph: {defect}{}", edge_suffix(.edge))]
    NotAGraph {
        defect: Defect,
        edge: Option<(usize, usize)>,
    },
    #[error("node {node} out of range for {n} nodes")]
    BadNodeId { node: usize, n: usize },
    #[error("node {0} listed twice")]
    DuplicateNode(usize),
    #[error("labeling is partial: node {node} has no label")]
    PartialLabeling { node: usize },
    #[error("node {node} is not in the restricted component")]
    NodeOutsideComponent { node: usize },
    #[error("restricted node set does not induce a connected subtree")]
    DisconnectedRestriction,
    #[error("query set is not 0-forked: node {fork} is a fork")]
    NotZeroForked { fork: usize },
    #[error("query set covers every node")]
    EmptyComplement,
    #[error("query set is empty")]
    EmptyQuerySet,
    #[error("{size} free nodes exceed the exact enumeration cap of {cap}")]
    TooLargeForExact { size: usize, cap: usize },
    #[error("{n} nodes exceed the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("budget {budget} outside 1..={max}")]
    BudgetOutOfRange { budget: usize, max: usize },
    #[error("seen labels do not match the query set at node {node}")]
    LabelSetMismatch { node: usize },
    #[error("root {0} is not a node")]
    BadRoot(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line harness: 2 for I/O and
    /// parse failures, 3 for everything that fails domain validation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Io(_) => 2,
            _ => 3,
        }
    }
}
