use core::fmt;

/// Failure modes of the core library.
///
/// Guard variants name the bound that was exceeded so front ends can report
/// them verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id is not below the vertex count.
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    /// An edge joins a vertex to itself.
    Loop {
        vertex: usize,
    },
    /// The same unordered pair was given twice.
    DuplicateEdge {
        u: usize,
        v: usize,
    },
    /// The pair is not an edge of the graph.
    MissingEdge {
        u: usize,
        v: usize,
    },
    /// `GP(n, k)` requires `n >= 3` and `1 <= k <= (n - 1) / 2`.
    InvalidGpParameters {
        n: usize,
        k: usize,
    },
    /// `(n, k)` is one of the pairs whose automorphism group is not generated
    /// by the rotation, reflection and layer swap.
    ExceptionalGp {
        n: usize,
        k: usize,
    },
    /// The graph is not `GP(n, k)` as built by the constructor.
    NotGeneralizedPetersen {
        n: usize,
        k: usize,
    },
    /// The graph is required to be complete.
    NotComplete,
    Graph6(Graph6Error),
    /// Two bit vectors (or a vector and a basis) have different lengths.
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    /// Exhaustive coset search is limited to this rank.
    RankLimit {
        rank: usize,
        limit: usize,
    },
    /// The number of switching classes exceeds what the operation can handle.
    ClassLimit {
        log2_classes: usize,
        limit: usize,
    },
    /// Group closure grew past the element limit.
    GroupOrderLimit {
        limit: usize,
    },
    /// Brute-force search over vertex bijections is limited to this many vertices.
    VertexLimit {
        n: usize,
        limit: usize,
    },
    /// The image list is not a bijection on `0..n`.
    InvalidPermutation,
    /// A permutation acts on a different number of points than the graph has vertices.
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    /// The permutation does not preserve the edge set.
    NotAutomorphism,
    /// Signed graphs over different underlying graphs were combined.
    GraphMismatch,
    /// Fixed-point total is not a multiple of the group order.
    BurnsideNotIntegral {
        fixed_points: u64,
        order: usize,
    },
    /// A numeric argument is outside the supported range.
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
}

/// Reasons a graph6 string is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// Byte outside the printable range `63..=126`.
    InvalidChar {
        position: usize,
        byte: u8,
    },
    /// Only the one-byte size header (`n <= 62`) is supported.
    LongForm,
    Truncated {
        expected: usize,
        found: usize,
    },
    TrailingData {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::Loop { vertex } => write!(f, "loop at vertex {vertex}: only simple graphs are supported"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u},{v}): multigraphs are not supported"),
            Error::MissingEdge { u, v } => write!(f, "({u},{v}) is not an edge"),
            Error::InvalidGpParameters { n, k } => {
                write!(f, "GP({n},{k}) is undefined: need n >= 3 and 1 <= k <= (n-1)/2")
            }
            Error::ExceptionalGp { n, k } => {
                write!(f, "GP({n},{k}) is an exceptional pair; its automorphism group must be found by search")
            }
            Error::NotGeneralizedPetersen { n, k } => write!(f, "graph is not GP({n},{k})"),
            Error::NotComplete => f.write_str("graph is not complete"),
            Error::Graph6(e) => write!(f, "graph6: {e}"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::RankLimit { rank, limit } => {
                write!(f, "cut-space rank {rank} exceeds the exhaustive coset search limit of {limit}")
            }
            Error::ClassLimit { log2_classes, limit } => {
                write!(f, "2^{log2_classes} switching classes exceeds the limit of 2^{limit}")
            }
            Error::GroupOrderLimit { limit } => write!(f, "group order exceeds the limit of {limit} elements"),
            Error::VertexLimit { n, limit } => {
                write!(f, "{n} vertices exceeds the brute-force search limit of {limit} vertices")
            }
            Error::InvalidPermutation => f.write_str("image list is not a permutation"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "permutation acts on {found} points, expected {expected}")
            }
            Error::NotAutomorphism => f.write_str("permutation is not an automorphism of the graph"),
            Error::GraphMismatch => f.write_str("signed graphs have different underlying graphs"),
            Error::BurnsideNotIntegral { fixed_points, order } => {
                write!(f, "fixed-point total {fixed_points} is not divisible by group order {order}")
            }
            Error::OutOfRange { what, value, min, max } => {
                write!(f, "{what} = {value} is outside {min}..={max}")
            }
        }
    }
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => f.write_str("empty input"),
            Graph6Error::InvalidChar { position, byte } => {
                write!(f, "byte 0x{byte:02x} at position {position} is outside '?'..='~'")
            }
            Graph6Error::LongForm => f.write_str("graphs with more than 62 vertices are not supported"),
            Graph6Error::Truncated { expected, found } => {
                write!(f, "truncated: expected {expected} bytes, found {found}")
            }
            Graph6Error::TrailingData { expected, found } => {
                write!(f, "trailing data: expected {expected} bytes, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}
impl core::error::Error for Graph6Error {}

impl From<Graph6Error> for Error {
    fn from(e: Graph6Error) -> Self {
        Error::Graph6(e)
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
