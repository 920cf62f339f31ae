use thiserror::Error;

/// Vertex indices are stored 0-based and displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sextuple is not admissible")]
    NotAdmissible,

    #[error("a line is defined by two coincident points")]
    CoincidentPoints,

    #[error("points {} and {} coincide", .first + 1, .second + 1)]
    DuplicatePoints { first: usize, second: usize },

    #[error("vertex {} out of range for {n} vertices", .vertex + 1)]
    InvalidVertex { vertex: usize, n: usize },

    #[error("edge endpoints must be distinct (vertex {})", .0 + 1)]
    SelfLoop(usize),

    #[error("embedding has {points} points but the graph has {vertices} vertices")]
    SizeMismatch { points: usize, vertices: usize },

    #[error("point sequence is not simple ({degenerate} degenerate sextuples); run perturb_to_simple first")]
    NotSimple { degenerate: usize },

    #[error(
        "midpoint of non-edge {{{}, {}}} lies on segment {{{}, {}}}",
        .non_edge.0 + 1, .non_edge.1 + 1, .segment.0 + 1, .segment.1 + 1
    )]
    GeneralPosition {
        non_edge: (usize, usize),
        segment: (usize, usize),
    },

    #[error("obstacle representation is invalid ({violations} violating pairs)")]
    InvalidRepresentation { violations: usize },

    #[error("obstacle {} touches edge {{{}, {}}}", .obstacle + 1, .edge.0 + 1, .edge.1 + 1)]
    ObstacleTouchesEdge { obstacle: usize, edge: (usize, usize) },

    #[error("perturbation budget exhausted with {residual} degenerate sextuples left")]
    PerturbationExhausted { residual: usize },

    #[error("obstacle {} meets no face interior", .0 + 1)]
    NoFaceInterior(usize),

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("face id {id} does not exist (arrangement has {faces} faces)")]
    InvalidFace { id: usize, faces: usize },

    #[error("face obstacles need an arrangement of the drawn graph")]
    MissingArrangement,

    #[error("{{{}, {}}} is an edge, not a non-edge", .0 + 1, .1 + 1)]
    IsEdge(usize, usize),

    #[error("points {} and {} share an x-coordinate", .first + 1, .second + 1)]
    DuplicateX { first: usize, second: usize },

    #[error("slab size {k} must lie in 1..={n}")]
    SlabSize { k: usize, n: usize },

    #[error("search budget exhausted; best known upper bound {best_upper}")]
    BudgetExceeded { best_upper: usize },

    #[error("no simple embedding found within the retry limit")]
    NoSimpleEmbedding,

    #[error("trial count {m} exceeds the exact-oracle limit {max}")]
    TooLarge { m: u64, max: u64 },

    #[error("exponent function never exceeds the target; the bound is unbounded")]
    DegenerateExponent,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
