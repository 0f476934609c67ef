use thiserror::Error;

use crate::complex::{Simplex, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in this crate.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    #[error("facet list is empty")]
    EmptyInput,

    #[error("malformed vertex token {0:?}")]
    MalformedToken(String),

    #[error("vertex {0} appears twice in one facet")]
    RepeatedVertex(Vertex),

    #[error("{0} is not a face of the complex")]
    NotAFace(Simplex),

    #[error("{0} is not a facet of the complex")]
    NotAFacet(Simplex),

    #[error("facet index {0} is out of range")]
    FacetIndex(usize),

    #[error("facets {0} and {1} do not share a ridge")]
    NotAdjacent(Simplex, Simplex),

    #[error("the complex is not pure")]
    NotPure,

    #[error("the link of the codimension-2 face {0} is not a single cycle")]
    LinkNotCycle(Simplex),

    #[error("facet path is empty")]
    EmptyPath,

    #[error("facet path runs from facet {start} to facet {end}, expected {expected_start} to {expected_end}")]
    PathEndpoints { start: usize, end: usize, expected_start: usize, expected_end: usize },

    #[error("facet path is not a loop at the base facet {0}")]
    NotALoop(Simplex),

    #[error("images {0:?} do not form a bijection")]
    NotABijection(Vec<usize>),

    #[error("permutation groups act on different ground sets")]
    GroundMismatch,

    #[error("ground set of {0} points is too large")]
    GroundTooLarge(usize),

    #[error("bad cycle notation {0:?}")]
    CycleSyntax(String),

    #[error("vertex map collapses facet {0}")]
    DegenerateMap(Simplex),

    #[error("image {0} of a facet is not a facet of the target complex")]
    NotSimplicial(Simplex),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(isize, isize),

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("vertex {vertex} lies in {count} facets, a simple {dim}-polytope needs exactly {dim}")]
    NotSimple { vertex: Vertex, count: usize, dim: usize },

    #[error("{count} vertices share the facets {facets:?}, an edge needs exactly 2")]
    BadEdge { facets: Vec<Vertex>, count: usize },

    #[error("vertex {vertex} has {count} neighbours, a simple {dim}-polytope needs exactly {dim}")]
    NotRegular { vertex: Vertex, count: usize, dim: usize },

    #[error("unknown facet label {0}")]
    UnknownFacet(Vertex),

    #[error("facet {0} contains no vertex")]
    EmptyFacet(Vertex),

    #[error("facet label {0} is listed twice")]
    DuplicateFacet(Vertex),

    #[error("vertices {0} and {1} lie in the same set of facets")]
    DuplicateVertex(Vertex, Vertex),

    #[error("vertex-facet incidence is disconnected")]
    Disconnected,

    #[error("the 2-face cut out by facets {0:?} is not bounded by a single cycle")]
    TwoFaceNotCycle(Vec<Vertex>),

    #[error("vertices {0} and {1} are not adjacent")]
    VerticesNotAdjacent(Vertex, Vertex),

    #[error("the polytope is not even")]
    NotEven,

    #[error("facet coloring is not proper: {0} and {1} meet but share a color")]
    ImproperColoring(Vertex, Vertex),

    #[error("facet coloring uses color {color}, only 0..{dim} are allowed")]
    ColorOutOfRange { color: usize, dim: usize },

    #[error("expected {expected} colors, got {got}")]
    ColoringLength { expected: usize, got: usize },

    #[error("graph has a loop at node {0}")]
    SelfLoop(usize),

    #[error("graph has a repeated edge {0}-{1}")]
    MultiEdge(usize, usize),

    #[error("graph node {0} is out of range")]
    NodeIndex(usize),

    #[error("chromatic number exceeds the cap of {0}")]
    ExceedsCap(usize),

    #[error("unknown builder {0:?}")]
    UnknownBuilder(String),

    #[error("bad builder parameter: {0}")]
    BadParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid JSON input: {0}")]
    Json(String),

    #[error("theorem check disagreement: {0}")]
    TheoremViolation(String),
}
